// End-to-end acceptance run. One line per criterion:
//   PASS|FAIL|SKIP  <id>  <title>: <detail>
// Exit status is nonzero iff some criterion failed. The OA(5,2) basis run is
// opt-in (--stretch or OA_ACCEPT_STRETCH=1) and is reported as SKIP when not
// requested or when it runs out of budget. --stretch-basis FILE (or
// OA_STRETCH_BASIS) checks a basis file written by `oa hilbert` instead.

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <cstring>
#include <deque>
#include <functional>
#include <iostream>
#include <limits>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "oa/analysis.hpp"
#include "oa/error.hpp"
#include "oa/hilbert.hpp"
#include "oa/indicator.hpp"
#include "oa/io.hpp"
#include "oa/lattice.hpp"
#include "oa/model_matrix.hpp"
#include "reference_data.hpp"

using namespace oa;
using Clock = std::chrono::steady_clock;

namespace {

enum class Verdict { pass, fail, skip };

struct Outcome {
    Verdict verdict;
    std::string detail;
};

// Every basis computed during the run; criterion 7 checks them all.
std::deque<std::pair<std::string, HilbertBasis>> g_bases;

const HilbertBasis& keep(std::string label, HilbertBasis b) {
    g_bases.emplace_back(std::move(label), std::move(b));
    return g_bases.back().second;
}

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::string fmt_seconds(double s) {
    std::ostringstream o;
    o.precision(s < 10 ? 2 : 1);
    o << std::fixed << s << "s";
    return o.str();
}

std::map<std::int64_t, std::size_t> by_total(const std::vector<ReplicateVector>& v) {
    std::map<std::int64_t, std::size_t> h;
    for (const auto& r : v) ++h[r.total()];
    return h;
}

std::vector<ReplicateVector> reference_basis53() {
    std::vector<ReplicateVector> cols;
    for (int c = 0; c < 28; ++c) {
        std::vector<std::int64_t> v(32);
        for (int r = 0; r < 32; ++r) v[static_cast<std::size_t>(r)] = ref::kBasis53[r][c];
        cols.emplace_back(5, std::move(v));
    }
    std::sort(cols.begin(), cols.end());
    return cols;
}

// 1 ------------------------------------------------------------------------

Outcome oa53() {
    const auto t0 = Clock::now();
    const auto& hb = keep("OA(5,3)", hilbert_basis(ConeSystem::for_design(5, 3)));
    const double secs = seconds_since(t0);
    std::size_t c16 = 0, c24 = 0, other = 0;
    for (const auto& e : hb.elements()) {
        const auto c = classify(e, 3);
        if (c.total == 16 && c.maxrep == 1)
            ++c16;
        else if (c.total == 24 && c.maxrep == 2)
            ++c24;
        else
            ++other;
    }
    const bool same = hb.elements() == reference_basis53();
    std::ostringstream d;
    d << hb.size() << " elements, " << c16 << " with total 16/maxrep 1, " << c24 << " with total 24/maxrep 2, "
      << other << " other; " << (same ? "equals" : "differs from") << " the reference table; " << fmt_seconds(secs);
    const bool ok = hb.size() == 28 && c16 == 12 && c24 == 16 && other == 0 && same && secs < 60.0;
    return {ok ? Verdict::pass : Verdict::fail, d.str()};
}

// 2 ------------------------------------------------------------------------

Outcome oracle_equivalence() {
    std::vector<std::tuple<int, int, std::int64_t>> cases;
    // For n <= 3 every basis total is at most 2^n * n, far below these bounds.
    for (int n = 1; n <= 3; ++n)
        for (int m = 1; m <= n; ++m) cases.emplace_back(n, m, n == 3 ? 24 : 12);
    cases.emplace_back(4, 2, 16);
    std::size_t agreed = 0;
    std::string bad;
    for (const auto& [n, m, T] : cases) {
        const auto sys = ConeSystem::for_design(n, m);
        const auto& hb = keep("OA(" + std::to_string(n) + "," + std::to_string(m) + ")", hilbert_basis(sys));
        std::vector<ReplicateVector> low;
        for (const auto& e : hb.elements())
            if (e.total() <= T) low.push_back(e);
        if (low == brute_force_minimal_solutions(sys, T))
            ++agreed;
        else
            bad += " (" + std::to_string(n) + "," + std::to_string(m) + ")";
    }
    std::ostringstream d;
    d << agreed << "/" << cases.size() << " systems agree with the brute-force oracle";
    if (!bad.empty()) d << "; mismatch:" << bad;
    return {agreed == cases.size() ? Verdict::pass : Verdict::fail, d.str()};
}

// 3, 4 ---------------------------------------------------------------------

const std::vector<ReplicateVector>& indicators52() {
    static const auto v = enumerate_indicators(5, 2);
    return v;
}

Outcome enumeration() {
    const auto t0 = Clock::now();
    const auto& all = indicators52();
    const double secs = seconds_since(t0);
    auto h = by_total(all);
    std::ostringstream d;
    d << all.size() << " solutions (";
    bool first = true;
    for (const auto& [t, c] : h) {
        d << (first ? "" : ", ") << "support " << t << ": " << c;
        first = false;
    }
    const std::size_t nonfull = all.size() - h[32];
    d << "); support 16 count " << h[16] << (h[16] == 552 ? " matches" : " differs from")
      << " the itemized 552; " << nonfull << " fractions besides the full design vs the quoted 1054 (itemized sum 1056); "
      << fmt_seconds(secs);
    return {h[8] == 60 && h[12] == 192 ? Verdict::pass : Verdict::fail, d.str()};
}

Outcome regularity() {
    std::size_t regular = 0, irregular = 0, full = 0;
    std::map<std::int64_t, std::size_t> reg_by_total;
    for (const auto& r : indicators52()) {
        if (r.total() == 32) {
            ++full;
            continue;
        }
        if (is_regular(wht_forward(r))) {
            ++regular;
            ++reg_by_total[r.total()];
        } else {
            ++irregular;
        }
    }
    std::ostringstream d;
    d << regular << " regular (" << reg_by_total[8] << " with 8 points, " << reg_by_total[16] << " with 16), "
      << irregular << " non-regular, plus " << full << " full design";
    return {regular == 92 ? Verdict::pass : Verdict::fail, d.str()};
}

// 5 ------------------------------------------------------------------------

struct StretchRequest {
    bool run = false;
    std::string basis_file;  // verify this file instead of solving
};

StretchRequest stretch_request(int argc, char** argv) {
    StretchRequest r;
    for (int i = 1; i < argc; ++i) {
        if (std::strcmp(argv[i], "--stretch") == 0) r.run = true;
        if (std::strcmp(argv[i], "--stretch-basis") == 0 && i + 1 < argc) r.basis_file = argv[++i];
    }
    const char* e = std::getenv("OA_ACCEPT_STRETCH");
    if (e && *e && std::strcmp(e, "0") != 0) r.run = true;
    if (const char* f = std::getenv("OA_STRETCH_BASIS"); f && *f) r.basis_file = f;
    return r;
}

std::string compare_with_reference(const HilbertBasis& hb, bool& ok) {
    const auto s = summarize(hb);
    std::size_t cells = 0, bad_cells = 0;
    for (int i = 0; i < 9; ++i)
        for (int j = 0; j < 8; ++j, ++cells)
            if (s.at(s.support_total, ref::kSupports52[i], ref::kTotals52[j]) !=
                static_cast<std::size_t>(ref::kSupportTotal52[i][j]))
                ++bad_cells;
    for (int i = 0; i < 9; ++i)
        for (int j = 0; j < 4; ++j, ++cells)
            if (s.at(s.support_maxrep, ref::kSupports52[i], j + 1) !=
                static_cast<std::size_t>(ref::kSupportMaxrep52[i][j]))
                ++bad_cells;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 8; ++j, ++cells)
            if (s.at(s.maxrep_total, i + 1, ref::kTotals52[j]) != static_cast<std::size_t>(ref::kMaxrepTotal52[i][j]))
                ++bad_cells;
    const std::size_t pairs = disjoint_support_pairs(hb.elements(), 8);
    const bool sound = check_basis(hb).ok();
    std::ostringstream d;
    d << hb.size() << " elements (expected " << ref::kBasisSize52 << "); " << cells - bad_cells << "/" << cells
      << " table cells match; (supp 16, maxrep 4) = " << s.at(s.support_maxrep, 16, 4)
      << "; (supp 21, total 36) = " << s.at(s.support_total, 21, 36) << "; " << pairs
      << " disjoint support-8 pairs; basis check " << (sound ? "ok" : "FAILED");
    ok = hb.size() == static_cast<std::size_t>(ref::kBasisSize52) && bad_cells == 0 && pairs == 450 && sound;
    return d.str();
}

Outcome stretch(const StretchRequest& req) {
    // Parts that do not need the basis: the 450 disjoint pairs among the 60
    // support-8 elements (which are exactly the 8-point indicators).
    const std::size_t pairs = disjoint_support_pairs(indicators52(), 8);
    std::ostringstream pre;
    pre << "disjoint support-8 pairs from the enumeration: " << pairs;
    if (pairs != 450) return {Verdict::fail, pre.str()};

    const auto sys = ConeSystem::for_design(5, 2);
    bool ok = false;
    if (!req.basis_file.empty()) {
        const HilbertBasis hb(sys, read_basis(load_text(req.basis_file)));
        const auto d = compare_with_reference(hb, ok);
        return {ok ? Verdict::pass : Verdict::fail, "verified " + req.basis_file + ": " + d};
    }
    if (!req.run)
        return {Verdict::skip, "not run (pass --stretch, or --stretch-basis FILE to verify a computed basis); " +
                                   pre.str()};

    double hours = 6.0;
    if (const char* e = std::getenv("OA_STRETCH_HOURS")) hours = std::atof(e);
    SolverOptions opt;
    opt.budget.max_insertions = std::numeric_limits<std::uint64_t>::max();
    opt.budget.max_working_set = std::numeric_limits<std::size_t>::max();
    opt.budget.time_limit = std::chrono::milliseconds(static_cast<std::int64_t>(hours * 3600e3));
    const auto t0 = Clock::now();
    try {
        const auto hb = hilbert_basis(sys, opt);
        const auto d = compare_with_reference(hb, ok);
        return {ok ? Verdict::pass : Verdict::fail, d + "; " + fmt_seconds(seconds_since(t0))};
    } catch (const BudgetExhaustedError& e) {
        return {Verdict::skip, "did not finish within budget after " + fmt_seconds(seconds_since(t0)) + " (" +
                                   std::to_string(e.found()) + " elements so far); " + pre.str()};
    }
}

// 6 ------------------------------------------------------------------------

Outcome forced_zero() {
    std::vector<std::size_t> fz(10);
    for (std::size_t i = 0; i < 10; ++i) fz[i] = i;
    const auto t0 = Clock::now();
    const auto& hb = keep("OA(6,2) forced zeros", hilbert_basis(ConeSystem::for_design(6, 2, fz)));
    const double secs = seconds_since(t0);
    // Dimension of the cone the basis generates: any generating set needs at
    // least that many elements.
    std::vector<std::int64_t> rows;
    std::size_t support = 0;
    std::vector<bool> used(64, false);
    for (const auto& e : hb.elements())
        for (std::size_t i = 0; i < 64; ++i) {
            rows.push_back(e[i]);
            if (e[i] > 0) used[i] = true;
        }
    support = static_cast<std::size_t>(std::count(used.begin(), used.end(), true));
    const std::size_t dim = rational_rank(IntMatrix(hb.size(), 64, std::move(rows)));
    std::ostringstream d;
    d << hb.size() << " elements, expected 6; the cone uses " << support << " coordinates and has dimension " << dim
      << ", so no generating set has fewer than " << dim << " elements; " << fmt_seconds(secs);
    return {hb.size() == 6 ? Verdict::pass : Verdict::fail, d.str()};
}

// 7 ------------------------------------------------------------------------

Outcome properties() {
    std::mt19937_64 rng(20240607);
    std::vector<std::string> broken;
    auto expect = [&](bool ok, const std::string& what) {
        if (!ok) broken.push_back(what);
    };

    // Monomial orthogonality over the full design, including the constant.
    for (int n = 1; n <= 6; ++n) {
        const auto N = static_cast<std::uint32_t>(design_size(n));
        bool ok = true;
        for (std::uint32_t a = 0; a < N && ok; ++a)
            for (std::uint32_t b = 0; b < N && ok; ++b) {
                std::int64_t s = 0;
                for (std::uint32_t p = 0; p < N; ++p) s += monomial_sign(a, p) * monomial_sign(b, p);
                ok = s == (a == b ? static_cast<std::int64_t>(N) : 0);
            }
        expect(ok && verify_matrix(build_model_matrix(n, n)).ok(), "orthogonality n=" + std::to_string(n));
    }

    // Transform round trip.
    for (int t = 0; t < 1000; ++t) {
        const int n = 1 + static_cast<int>(rng() % 5);
        std::vector<std::int64_t> v(design_size(n));
        for (auto& x : v) x = static_cast<std::int64_t>(rng() % 7);
        const ReplicateVector r(n, std::move(v));
        const auto b = wht_forward(r);
        if (wht_inverse(b) != r || b != wht_forward_direct(r)) {
            expect(false, "transform round trip");
            break;
        }
    }

    // Coefficient and projection tests agree; half the samples are sums of
    // 0/1 arrays so both outcomes are exercised.
    std::map<std::pair<int, int>, std::vector<ReplicateVector>> pools;
    std::size_t positives = 0;
    for (int t = 0; t < 1000; ++t) {
        const int n = 1 + static_cast<int>(rng() % 5);
        const int m = 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(n));
        ReplicateVector r(n);
        if (t % 2 == 0) {
            auto& pool = pools[{n, m}];
            if (pool.empty()) {
                pool = enumerate_indicators(n, m, {.max_support = std::size_t{16}});
                pool.push_back(ReplicateVector::full_design(n));
            }
            const int k = 1 + static_cast<int>(rng() % 3);
            for (int i = 0; i < k; ++i) r = r + pool[rng() % pool.size()];
        } else {
            std::vector<std::int64_t> v(design_size(n));
            for (auto& x : v) x = static_cast<std::int64_t>(rng() % 3);
            r = ReplicateVector(n, std::move(v));
        }
        const bool a = is_oa_coeffs(wht_forward(r), m), b = is_oa_projection(r, m);
        positives += a;
        if (a != b) {
            expect(false, "is_oa_coeffs vs is_oa_projection");
            break;
        }
    }
    expect(positives > 0, "no positive OA samples");

    // Every basis computed above is sound and minimal.
    for (const auto& [label, hb] : g_bases) expect(check_basis(hb).ok(), "basis check " + label);

    // Monoid closure and complements.
    {
        const HilbertBasis* b53 = nullptr;
        for (const auto& [label, hb] : g_bases)
            if (label == "OA(5,3)") b53 = &hb;
        if (!b53) b53 = &keep("OA(5,3)", hilbert_basis(ConeSystem::for_design(5, 3)));
        const auto& el = b53->elements();
        bool ok = true;
        for (int t = 0; t < 500 && ok; ++t) {
            const auto s = el[rng() % el.size()] + el[rng() % el.size()].scaled(1 + static_cast<std::int64_t>(rng() % 3));
            ok = is_member(b53->system(), s) && is_oa_projection(s, 3) && decompose(*b53, s).has_value();
        }
        expect(ok, "monoid closure");
        const auto& ind = indicators52();
        ok = true;
        for (int t = 0; t < 500 && ok; ++t) {
            const auto& r = ind[rng() % ind.size()];
            ok = is_oa_projection(complement(r), 2);
        }
        expect(ok, "complement preserves OA");

        // Set invariance under factor permutations and sign changes.
        ok = true;
        for (int t = 0; t < 100 && ok; ++t) {
            std::vector<int> sigma = {0, 1, 2, 3, 4};
            std::shuffle(sigma.begin(), sigma.end(), rng);
            std::vector<int> s(5);
            for (auto& x : s) x = (rng() & 1) ? 1 : -1;
            std::vector<ReplicateVector> img;
            for (const auto& e : el) img.push_back(apply_symmetry(e, sigma, s));
            std::sort(img.begin(), img.end());
            ok = img == el;
        }
        expect(ok, "symmetry invariance of the OA(5,3) basis");
    }

    std::ostringstream d;
    if (broken.empty()) {
        d << "orthogonality, transform, OA tests, " << g_bases.size()
          << " basis checks, closure, complement and symmetry all hold";
    } else {
        d << "violated:";
        for (const auto& b : broken) d << " [" << b << "]";
    }
    return {broken.empty() ? Verdict::pass : Verdict::fail, d.str()};
}

}  // namespace

int main(int argc, char** argv) {
    const StretchRequest want_stretch = stretch_request(argc, argv);
    struct Criterion {
        int id;
        const char* title;
        std::function<Outcome()> run;
    };
    const std::vector<Criterion> criteria = {
        {1, "OA(5,3) basis", oa53},
        {2, "oracle equivalence", oracle_equivalence},
        {3, "OA(5,2) indicator enumeration", enumeration},
        {4, "OA(5,2) regular fractions", regularity},
        {5, "OA(5,2) basis (stretch)", [&] { return stretch(want_stretch); }},
        {6, "OA(6,2) with ten forced zeros", forced_zero},
        {7, "property suites", properties},
    };
    int failed = 0;
    for (const auto& c : criteria) {
        Outcome o;
        try {
            o = c.run();
        } catch (const std::exception& e) {
            o = {Verdict::fail, std::string("exception: ") + e.what()};
        }
        const char* tag = o.verdict == Verdict::pass ? "PASS" : o.verdict == Verdict::fail ? "FAIL" : "SKIP";
        if (o.verdict == Verdict::fail) ++failed;
        std::cout << tag << "  " << c.id << "  " << c.title << ": " << o.detail << std::endl;
    }
    std::cout << (failed ? "acceptance: " + std::to_string(failed) + " criterion failed" : std::string("acceptance: all criteria met"))
              << std::endl;
    return failed ? 1 : 0;
}

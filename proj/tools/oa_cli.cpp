// oa: command-line front end.
//
//   oa matrix    --factors n --strength m [--out FILE]
//   oa hilbert   --factors n --strength m [--force-zero I,J,...] [--budget K] [--out FILE]
//   oa check     --basis FILE --factors n --strength m [--force-zero ...]
//   oa classify  --basis FILE --strength m [--out FILE]
//   oa summarize --basis FILE [--json FILE] [--tsv FILE]
//   oa enumerate --factors n --strength m [--quotient-complement] [--max-support S] [--out FILE]
//   oa oracle    --factors n --strength m --max-total T [--out FILE]
//
// Progress goes to stderr, controlled by OA_VERBOSITY (0 quiet, 1 stages,
// 2 every event). The last stdout line is a one-line JSON result.

#include <chrono>
#include <cstdlib>
#include <iomanip>
#include <iostream>
#include <map>
#include <set>

#include <CLI11.hpp>
#include <json.hpp>

#include "oa/analysis.hpp"
#include "oa/error.hpp"
#include "oa/hilbert.hpp"
#include "oa/indicator.hpp"
#include "oa/io.hpp"
#include "oa/model_matrix.hpp"

namespace {

using nlohmann::ordered_json;
using Clock = std::chrono::steady_clock;

int verbosity() {
    const char* v = std::getenv("OA_VERBOSITY");
    return v ? std::atoi(v) : 1;
}

void note(int level, const std::string& msg) {
    if (verbosity() >= level) std::cerr << msg << '\n';
}

void result(ordered_json j) { std::cout << j.dump() << std::endl; }

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::string histogram(const std::map<std::int64_t, std::size_t>& h) {
    std::string s;
    for (auto [k, v] : h) s += (s.empty() ? "" : " ") + std::to_string(k) + ":" + std::to_string(v);
    return s;
}

void print_table4(const oa::Summary& s) {
    std::set<std::int64_t> supports, totals, reps;
    for (const auto& [k, v] : s.support_total) {
        supports.insert(k.first);
        totals.insert(k.second);
    }
    for (const auto& [k, v] : s.support_maxrep) reps.insert(k.second);
    auto& out = std::cout;
    out << "supp  |";
    for (auto t : totals) out << std::setw(7) << t;
    out << " |";
    for (auto r : reps) out << std::setw(7) << r;
    out << "\n";
    for (auto sp : supports) {
        out << std::setw(5) << sp << " |";
        for (auto t : totals) out << std::setw(7) << s.at(s.support_total, sp, t);
        out << " |";
        for (auto r : reps) out << std::setw(7) << s.at(s.support_maxrep, sp, r);
        out << "\n";
    }
    out << "maxrep|\n";
    for (auto r : reps) {
        out << std::setw(5) << r << " |";
        for (auto t : totals) out << std::setw(7) << s.at(s.maxrep_total, r, t);
        out << "\n";
    }
}

struct Common {
    int factors = 0;
    int strength = 0;
    std::vector<std::size_t> force_zero;
    std::string out;
    std::string basis;
    int threads = 0;
};

void emit(const std::string& path, const std::string& text) {
    if (path.empty() || path == "-")
        std::cout << text;
    else
        oa::save_text(path, text);
}

int run_matrix(const Common& c) {
    const auto m = oa::build_model_matrix(c.factors, c.strength);
    emit(c.out, oa::write_matrix(m.to_int_matrix()));
    // A matrix written to stdout is the whole output; the result line would corrupt it.
    if (!c.out.empty() && c.out != "-")
        result({{"command", "matrix"}, {"status", "ok"}, {"rows", m.rows()}, {"cols", m.cols()}});
    return 0;
}

int run_hilbert(const Common& c, const std::string& algorithm, bool serial, std::uint64_t budget,
                double time_limit, bool self_check) {
    const auto sys = oa::ConeSystem::for_design(c.factors, c.strength, c.force_zero);
    oa::SolverOptions opt;
    opt.algorithm = algorithm == "completion" ? oa::Algorithm::completion : oa::Algorithm::project_and_lift;
    opt.execution = serial ? oa::Execution::serial : oa::Execution::parallel;
    opt.threads = c.threads;
    if (budget) opt.budget.max_insertions = budget;
    opt.budget.time_limit = std::chrono::milliseconds(static_cast<std::int64_t>(time_limit * 1000));
    const auto t0 = Clock::now();
    if (verbosity() >= 1)
        opt.progress = [t0](const oa::ProgressEvent& e) {
            if (verbosity() >= 2 || e.stage != "pairs")
                std::cerr << "[" << std::fixed << std::setprecision(1) << seconds_since(t0) << "s] " << e.stage
                          << " step=" << e.step << " working=" << e.working << "\n";
        };
    try {
        const auto hb = oa::hilbert_basis(sys, opt);
        const double secs = seconds_since(t0);
        std::map<std::int64_t, std::size_t> totals;
        for (const auto& e : hb.elements()) ++totals[e.total()];
        std::cout << "elements: " << hb.size() << "\n";
        std::cout << "totals: " << histogram(totals) << "\n";
        std::cout << "time: " << std::fixed << std::setprecision(3) << secs << " s\n";
        bool ok = true;
        if (self_check) {
            const auto chk = oa::check_basis(hb);
            ok = chk.ok();
            if (!ok) std::cerr << "self-check failed\n";
        }
        if (!c.out.empty()) oa::save_text(c.out, oa::write_basis(hb));
        result({{"command", "hilbert"},
                {"status", ok ? "ok" : "check_failed"},
                {"factors", c.factors},
                {"strength", c.strength},
                {"forced_zero", c.force_zero.size()},
                {"elements", hb.size()}});
        return ok ? 0 : 1;
    } catch (const oa::BudgetExhaustedError& e) {
        std::cerr << "error: " << e.what() << "\n";
        result({{"command", "hilbert"}, {"status", "budget_exhausted"}, {"found", e.found()}});
        return 3;
    }
}

oa::HilbertBasis load_basis(const Common& c) {
    auto elements = oa::read_basis(oa::load_text(c.basis));
    const int n = c.factors ? c.factors : (elements.empty() ? 0 : elements.front().factors());
    if (!elements.empty() && elements.front().factors() != n)
        throw oa::ParameterError("basis file width does not match --factors");
    return oa::HilbertBasis(oa::ConeSystem::for_design(n, c.strength, c.force_zero), std::move(elements));
}

int run_check(const Common& c) {
    const auto hb = load_basis(c);
    const auto chk = oa::check_basis(hb);
    std::size_t not_oa = 0;
    for (const auto& e : hb.elements())
        if (!oa::is_oa_projection(e, c.strength)) ++not_oa;
    std::cout << "elements: " << hb.size() << "\n"
              << "non_members: " << chk.non_members << "\n"
              << "zero_elements: " << chk.zero_elements << "\n"
              << "dominated_pairs: " << chk.dominated_pairs << "\n"
              << "duplicates: " << chk.duplicates << "\n"
              << "not_oa: " << not_oa << "\n";
    const bool ok = chk.ok() && not_oa == 0;
    result({{"command", "check"}, {"status", ok ? "ok" : "failed"}, {"elements", hb.size()}});
    return ok ? 0 : 1;
}

int run_classify(const Common& c) {
    const auto elements = oa::read_basis(oa::load_text(c.basis));
    std::vector<oa::Classification> recs;
    recs.reserve(elements.size());
    for (const auto& e : elements) recs.push_back(oa::classify(e, c.strength));
    emit(c.out.empty() ? "-" : c.out, oa::write_classifications_tsv(recs));
    std::size_t oa_count = 0;
    for (const auto& r : recs) oa_count += r.is_oa;
    result({{"command", "classify"}, {"status", "ok"}, {"elements", recs.size()}, {"orthogonal", oa_count}});
    return 0;
}

int run_summarize(const Common& c, const std::string& json_path, const std::string& tsv_path) {
    const auto elements = oa::read_basis(oa::load_text(c.basis));
    const auto s = oa::summarize(elements);
    print_table4(s);
    if (!json_path.empty()) oa::save_text(json_path, oa::write_summary_json(s));
    if (!tsv_path.empty()) oa::save_text(tsv_path, oa::write_summary_tsv(s));
    result({{"command", "summarize"}, {"status", "ok"}, {"elements", s.elements}});
    return 0;
}

int run_enumerate(const Common& c, bool quotient, std::size_t max_support, bool serial) {
    oa::EnumerationOptions opt;
    opt.quotient_complement = quotient;
    if (max_support) opt.max_support = max_support;
    opt.execution = serial ? oa::Execution::serial : oa::Execution::parallel;
    opt.threads = c.threads;
    const auto t0 = Clock::now();
    const auto found = oa::enumerate_indicators(c.factors, c.strength, opt);
    std::map<std::int64_t, std::size_t> hist;
    std::size_t regular = 0;
    const auto full = oa::ReplicateVector::full_design(c.factors);
    for (const auto& r : found) {
        ++hist[static_cast<std::int64_t>(r.support_size())];
        if (r != full && oa::is_regular(oa::wht_forward(r))) ++regular;
    }
    std::cout << "solutions: " << found.size() << "\n";
    std::cout << "support: " << histogram(hist) << "\n";
    std::cout << "regular: " << regular << " (full design not counted)\n";
    note(1, "enumeration took " + std::to_string(seconds_since(t0)) + " s");
    if (!c.out.empty()) oa::save_text(c.out, oa::write_basis(found, oa::design_size(c.factors)));
    ordered_json h;
    for (auto [k, v] : hist) h[std::to_string(k)] = v;
    result({{"command", "enumerate"}, {"status", "ok"}, {"solutions", found.size()}, {"regular", regular}, {"support", h}});
    return 0;
}

int run_oracle(const Common& c, std::int64_t max_total) {
    const auto sys = oa::ConeSystem::for_design(c.factors, c.strength, c.force_zero);
    const auto sols = oa::brute_force_minimal_solutions(sys, max_total);
    std::map<std::int64_t, std::size_t> totals;
    for (const auto& e : sols) ++totals[e.total()];
    std::cout << "minimal solutions: " << sols.size() << "\n";
    std::cout << "totals: " << histogram(totals) << "\n";
    if (!c.out.empty()) oa::save_text(c.out, oa::write_basis(sols, sys.variables()));
    result({{"command", "oracle"}, {"status", "ok"}, {"max_total", max_total}, {"elements", sols.size()}});
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Two-level orthogonal arrays via Hilbert bases"};
    app.require_subcommand(1);
    Common c;

    auto add_design = [&c](CLI::App* sub, bool factors_required) {
        auto* f = sub->add_option("--factors,-n", c.factors, "number of factors")->check(CLI::Range(1, 16));
        if (factors_required) f->required();
        sub->add_option("--strength,-m", c.strength, "strength")->required();
    };
    auto add_force_zero = [&c](CLI::App* sub) {
        sub->add_option("--force-zero", c.force_zero, "coordinates fixed to zero (canonical point order)")
            ->delimiter(',');
    };

    auto* matrix = app.add_subcommand("matrix", "write the model matrix");
    add_design(matrix, true);
    matrix->add_option("--out,-o", c.out, "output file (default stdout)");

    std::string algorithm = "project-and-lift";
    bool serial = false, no_check = false;
    std::uint64_t budget = 0;
    double time_limit = 0;
    auto* hilbert = app.add_subcommand("hilbert", "compute the minimal Hilbert basis");
    add_design(hilbert, true);
    add_force_zero(hilbert);
    hilbert->add_option("--budget", budget, "insertion / critical-pair budget");
    hilbert->add_option("--time-limit", time_limit, "wall-clock limit in seconds");
    hilbert->add_option("--out,-o", c.out, "basis output file");
    hilbert->add_option("--threads,-j", c.threads, "OpenMP threads");
    hilbert->add_option("--algorithm", algorithm, "project-and-lift or completion")
        ->check(CLI::IsMember({"project-and-lift", "completion"}));
    hilbert->add_flag("--serial", serial, "use the serial kernel");
    hilbert->add_flag("--no-check", no_check, "skip the minimality self-check");

    auto* check = app.add_subcommand("check", "verify a basis file");
    check->add_option("--basis,-b", c.basis)->required()->check(CLI::ExistingFile);
    add_design(check, true);
    add_force_zero(check);

    auto* classify = app.add_subcommand("classify", "classification record per element");
    classify->add_option("--basis,-b", c.basis)->required()->check(CLI::ExistingFile);
    add_design(classify, false);
    classify->add_option("--out,-o", c.out);

    std::string json_path, tsv_path;
    auto* summarize = app.add_subcommand("summarize", "support / total / maxrep cross-tabulation");
    summarize->add_option("--basis,-b", c.basis)->required()->check(CLI::ExistingFile);
    summarize->add_option("--json", json_path);
    summarize->add_option("--tsv", tsv_path);

    bool quotient = false;
    std::size_t max_support = 0;
    auto* enumerate = app.add_subcommand("enumerate", "all 0/1 orthogonal arrays (n <= 5)");
    add_design(enumerate, true);
    enumerate->add_flag("--quotient-complement", quotient);
    enumerate->add_option("--max-support", max_support);
    enumerate->add_option("--out,-o", c.out);
    enumerate->add_option("--threads,-j", c.threads);
    enumerate->add_flag("--serial", serial);

    std::int64_t max_total = 0;
    auto* oracle = app.add_subcommand("oracle", "brute-force minimal solutions up to a total");
    add_design(oracle, true);
    add_force_zero(oracle);
    oracle->add_option("--max-total", max_total)->required()->check(CLI::NonNegativeNumber);
    oracle->add_option("--out,-o", c.out);

    CLI11_PARSE(app, argc, argv);

    try {
        if (*matrix) return run_matrix(c);
        if (*hilbert) return run_hilbert(c, algorithm, serial, budget, time_limit, !no_check);
        if (*check) return run_check(c);
        if (*classify) return run_classify(c);
        if (*summarize) return run_summarize(c, json_path, tsv_path);
        if (*enumerate) return run_enumerate(c, quotient, max_support, serial);
        if (*oracle) return run_oracle(c, max_total);
    } catch (const oa::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        result({{"status", "error"}, {"message", e.what()}});
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        result({{"status", "error"}, {"message", e.what()}});
        return 2;
    }
    return 0;
}

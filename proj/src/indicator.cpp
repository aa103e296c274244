#include "oa/indicator.hpp"

#include <algorithm>
#include <bit>

#include "oa/error.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace oa {

namespace {

// Depth-first assignment of points 0..N-1 with per-constraint partial sums.
class Search {
public:
    Search(int n, int m, std::optional<std::size_t> cap) : N_(design_size(n)), cap_(cap) {
        for (const auto& e : enumerate_exponents(n, m)) alphas_.push_back(e.mask());
        K_ = alphas_.size();
        sign_.resize(N_ * K_);
        for (std::size_t p = 0; p < N_; ++p)
            for (std::size_t r = 0; r < K_; ++r)
                sign_[p * K_ + r] = static_cast<std::int8_t>(monomial_sign(alphas_[r], static_cast<std::uint32_t>(p)));
        // pos_[p*K+r] / neg_[p*K+r]: points q >= p where constraint r has sign +1 / -1
        pos_.assign((N_ + 1) * K_, 0);
        neg_.assign((N_ + 1) * K_, 0);
        for (std::size_t p = N_; p-- > 0;)
            for (std::size_t r = 0; r < K_; ++r) {
                pos_[p * K_ + r] = pos_[(p + 1) * K_ + r] + (sign_[p * K_ + r] > 0);
                neg_[p * K_ + r] = neg_[(p + 1) * K_ + r] + (sign_[p * K_ + r] < 0);
            }
    }

    struct State {
        std::uint64_t chosen = 0;
        std::size_t depth = 0;
        std::size_t ones = 0;
        std::vector<int> d;
    };

    State root() const { return State{0, 0, 0, std::vector<int>(K_, 0)}; }

    // Can the remaining points q >= depth still bring every sum to zero?
    bool reachable(const State& s) const {
        const int* pos = pos_.data() + s.depth * K_;
        const int* neg = neg_.data() + s.depth * K_;
        for (std::size_t r = 0; r < K_; ++r)
            if (s.d[r] > neg[r] || -s.d[r] > pos[r]) return false;
        return true;
    }

    template <class Emit>
    void run(State& s, std::size_t stop_depth, Emit&& emit) const {
        if (s.depth == stop_depth) {
            emit(s);
            return;
        }
        const std::size_t p = s.depth;
        ++s.depth;
        // point p absent
        if (reachable(s)) run(s, stop_depth, emit);
        // point p present
        if (!cap_ || s.ones < *cap_) {
            const std::int8_t* sg = sign_.data() + p * K_;
            for (std::size_t r = 0; r < K_; ++r) s.d[r] += sg[r];
            s.chosen |= std::uint64_t{1} << p;
            ++s.ones;
            if (reachable(s)) run(s, stop_depth, emit);
            --s.ones;
            s.chosen &= ~(std::uint64_t{1} << p);
            for (std::size_t r = 0; r < K_; ++r) s.d[r] -= sg[r];
        }
        --s.depth;
    }

    std::size_t points() const { return N_; }

private:
    std::size_t N_;
    std::size_t K_ = 0;
    std::optional<std::size_t> cap_;
    std::vector<std::uint32_t> alphas_;
    std::vector<std::int8_t> sign_;
    std::vector<int> pos_, neg_;
};

ReplicateVector from_mask(int n, std::uint64_t mask) {
    std::vector<std::int64_t> c(design_size(n));
    for (std::size_t p = 0; p < c.size(); ++p) c[p] = static_cast<std::int64_t>((mask >> p) & 1u);
    return ReplicateVector(n, std::move(c));
}

}  // namespace

std::vector<ReplicateVector> enumerate_indicators(int n, int m, const EnumerationOptions& options) {
    check_strength(n, m);
    if (n > kMaxEnumerationFactors)
        throw SizeLimitError("indicator enumeration supports at most " + std::to_string(kMaxEnumerationFactors) +
                             " factors");
    const Search search(n, m, options.max_support);
    const std::size_t N = search.points();

    std::vector<std::uint64_t> found;
    if (options.execution == Execution::serial) {
        auto s = search.root();
        search.run(s, N, [&](const Search::State& st) { found.push_back(st.chosen); });
    } else {
        // Fan out the subtrees below a fixed prefix depth.
        const std::size_t split = std::min<std::size_t>(N, 12);
        std::vector<Search::State> prefixes;
        auto s = search.root();
        search.run(s, split, [&](const Search::State& st) { prefixes.push_back(st); });
        std::vector<std::vector<std::uint64_t>> parts(prefixes.size());
#ifdef _OPENMP
        const int saved = omp_get_max_threads();
        if (options.threads > 0) omp_set_num_threads(options.threads);
#endif
#pragma omp parallel for schedule(dynamic, 1)
        for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(prefixes.size()); ++i) {
            auto st = prefixes[static_cast<std::size_t>(i)];
            auto& out = parts[static_cast<std::size_t>(i)];
            search.run(st, N, [&](const Search::State& leaf) { out.push_back(leaf.chosen); });
        }
#ifdef _OPENMP
        omp_set_num_threads(saved);
#endif
        for (auto& p : parts) found.insert(found.end(), p.begin(), p.end());
    }

    const std::uint64_t all = N == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << N) - 1;
    std::vector<ReplicateVector> out;
    for (std::uint64_t mask : found) {
        if (mask == 0) continue;
        if (options.quotient_complement) {
            const std::uint64_t comp = all & ~mask;
            if (comp != 0) {
                const int tr = std::popcount(mask), tc = std::popcount(comp);
                // a smaller total wins; on ties compare the 0/1 sequences
                if (tr > tc) continue;
                if (tr == tc && from_mask(n, comp) < from_mask(n, mask)) continue;
            }
        }
        out.push_back(from_mask(n, mask));
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::size_t disjoint_support_pairs(const std::vector<ReplicateVector>& elements, std::size_t support) {
    std::vector<std::uint64_t> masks;
    for (const auto& e : elements) {
        if (e.support_size() != support) continue;
        if (e.size() > 64) throw SizeLimitError("disjoint pair count supports at most 6 factors");
        std::uint64_t m = 0;
        for (std::size_t i = 0; i < e.size(); ++i)
            if (e[i] > 0) m |= std::uint64_t{1} << i;
        masks.push_back(m);
    }
    std::size_t count = 0;
    for (std::size_t i = 0; i < masks.size(); ++i)
        for (std::size_t j = i + 1; j < masks.size(); ++j)
            if ((masks[i] & masks[j]) == 0) ++count;
    return count;
}

CrossCheckReport cross_check_basis(const std::vector<ReplicateVector>& indicators, const HilbertBasis& basis) {
    CrossCheckReport rep;
    for (std::size_t i = 0; i < indicators.size(); ++i) {
        const auto& r = indicators[i];
        if (r.size() != basis.system().variables())
            throw ParameterError("indicator length does not match the basis system");
        if (basis.contains(r))
            rep.basis_members.push_back(i);
        else if (is_member(basis.system(), r) && decompose(basis, r))
            rep.disjoint_sums.push_back(i);
        else
            rep.unexplained.push_back(i);
    }
    rep.support8_disjoint_pairs = disjoint_support_pairs(basis.elements(), 8);
    return rep;
}

}  // namespace oa

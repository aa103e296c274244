// Project-and-lift.
//
// Let L be the kernel lattice and S a set of d pivot coordinates on which the
// projection of L is injective. The completion set G always holds the
// conformally-minimal nonzero elements of
//     L_j = { x in L : x_c >= 0 for every lifted c }
// under the order that compares S coordinates and lifted coordinates and
// ignores the rest. Lifting coordinate i adds it to the compared set, runs a
// normal-form completion over critical pairs u + v with u_i v_i < 0, and then
// drops the elements with negative i-th entry. Once every non-pivot
// coordinate is lifted, the elements that are also nonnegative on S are the
// Hilbert basis.

#include <algorithm>
#include <limits>
#include <memory>
#include <numeric>

#include "hilbert/kernels.hpp"
#include "hilbert/reduction_tree.hpp"
#include "oa/error.hpp"
#include "oa/lattice.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace oa::detail {

namespace {

constexpr std::size_t kChunk = 1 << 14;

std::int32_t narrow(std::int64_t v) {
    if (v > std::numeric_limits<std::int32_t>::max() || v < std::numeric_limits<std::int32_t>::min())
        throw OverflowError("lattice vector entry exceeds 32 bits");
    return static_cast<std::int32_t>(v);
}

void add_into(Vec& out, std::span<const std::int32_t> u, std::span<const std::int32_t> v) {
    out.resize(u.size());
    for (std::size_t k = 0; k < u.size(); ++k)
        out[k] = narrow(static_cast<std::int64_t>(u[k]) + v[k]);
}

// Reduces s in place against the tree; true if the result is nonzero.
bool normal_form(Vec& s, const VecPool& pool, const ReductionTree& tree,
                 const std::vector<std::uint16_t>& pivots) {
    for (;;) {
        const std::uint32_t g = tree.find(s);
        if (g == ReductionTree::kNone) break;
        const auto gv = pool[g];
        for (std::size_t k = 0; k < s.size(); ++k) s[k] -= gv[k];
    }
    for (auto c : pivots)
        if (s[c] != 0) return true;
    return false;
}

class Lifter {
public:
    Lifter(std::size_t dim, std::vector<std::uint16_t> pivots, RunControl& rc)
        : pool_(dim), pivots_(std::move(pivots)), rc_(rc) {}

    VecPool& pool() { return pool_; }

    // Completion over S only, all pairs with an opposite sign on S.
    void graver_phase() {
        considered_ = pivots_;
        rebuild_tree();
        auto opposite = [&](std::span<const std::int32_t> u, std::span<const std::int32_t> v) {
            for (auto c : considered_)
                if (static_cast<std::int64_t>(u[c]) * v[c] < 0) return true;
            return false;
        };
        sweep_pairs(opposite);
        interreduce();
    }

    // The elements nonnegative on S are the Hilbert basis of {x in L : x_S >= 0};
    // every later set stays inside that cone.
    void restrict_to_pivot_orthant() {
        VecPool kept(pool_.dim());
        for (std::size_t g = 0; g < pool_.size(); ++g) {
            const auto v = pool_[g];
            if (std::all_of(pivots_.begin(), pivots_.end(), [&](std::uint16_t c) { return v[c] >= 0; }))
                kept.push(v);
        }
        pool_ = std::move(kept);
        rebuild_tree();
    }

    void lift_serial(std::uint16_t coord) {
        begin_lift(coord);
        auto opposite = [coord](std::span<const std::int32_t> u, std::span<const std::int32_t> v) {
            return static_cast<std::int64_t>(u[coord]) * v[coord] < 0;
        };
        sweep_pairs(opposite);
        end_lift(coord);
    }

    void lift_parallel(std::uint16_t coord);

    // Lift order: fewest critical pairs first.
    std::uint16_t next_coordinate(const std::vector<std::uint16_t>& remaining) const {
        std::uint16_t best = remaining.front();
        std::uint64_t best_cost = std::numeric_limits<std::uint64_t>::max();
        for (auto c : remaining) {
            std::uint64_t pos = 0, neg = 0;
            for (std::size_t g = 0; g < pool_.size(); ++g) {
                const auto x = pool_[g][c];
                pos += x > 0;
                neg += x < 0;
            }
            if (pos * neg < best_cost) {
                best_cost = pos * neg;
                best = c;
            }
        }
        return best;
    }

    std::vector<Vec> nonnegative_elements() const {
        std::vector<Vec> out;
        for (std::size_t g = 0; g < pool_.size(); ++g) {
            const auto v = pool_[g];
            if (std::all_of(v.begin(), v.end(), [](std::int32_t x) { return x >= 0; }))
                out.emplace_back(v.begin(), v.end());
        }
        return out;
    }

    std::size_t size() const { return pool_.size(); }

private:
    void rebuild_tree() {
        tree_ = std::make_unique<ReductionTree>(pool_, considered_);
        for (std::size_t g = 0; g < pool_.size(); ++g) tree_->insert(static_cast<std::uint32_t>(g));
    }

    void begin_lift(std::uint16_t coord) {
        considered_ = pivots_;
        considered_.insert(considered_.end(), lifted_.begin(), lifted_.end());
        considered_.push_back(coord);
        std::sort(considered_.begin(), considered_.end());
        rebuild_tree();
    }

    void end_lift(std::uint16_t coord) {
        VecPool kept(pool_.dim());
        for (std::size_t g = 0; g < pool_.size(); ++g)
            if (pool_[g][coord] >= 0) kept.push(pool_[g]);
        pool_ = std::move(kept);
        rebuild_tree();
        interreduce();
        lifted_.push_back(coord);
    }

    std::uint32_t add(const Vec& r) {
        const auto idx = static_cast<std::uint32_t>(pool_.push(r));
        tree_->insert(idx);
        rc_.check(pool_.size());
        return idx;
    }

    // Processes pair (idx, j) for every j < idx as idx runs over the growing pool.
    template <class Pred>
    void sweep_pairs(Pred&& pred) {
        Vec s;
        for (std::size_t idx = 0; idx < pool_.size(); ++idx) {
            for (std::size_t j = 0; j < idx; ++j) {
                if (!pred(pool_[idx], pool_[j])) continue;
                rc_.charge(1);
                add_into(s, pool_[idx], pool_[j]);
                if (normal_form(s, pool_, *tree_, pivots_)) add(s);
            }
        }
    }

    void interreduce() {
        VecPool kept(pool_.dim());
        for (std::size_t g = 0; g < pool_.size(); ++g)
            if (tree_->find(pool_[g], static_cast<std::uint32_t>(g)) == ReductionTree::kNone)
                kept.push(pool_[g]);
        pool_ = std::move(kept);
        rebuild_tree();
    }

    VecPool pool_;
    std::vector<std::uint16_t> pivots_;
    std::vector<std::uint16_t> lifted_;
    std::vector<std::uint16_t> considered_;
    std::unique_ptr<ReductionTree> tree_;
    RunControl& rc_;
};

// Level-synchronous completion: pairs are taken in order of increasing
// norm(u) + norm(v), normal forms of a chunk are computed in parallel against
// a frozen pool, and the chunk's results are merged sequentially in pair
// order. The merge re-reduces each result against elements added earlier in
// the same merge, so the outcome does not depend on the thread count.
void Lifter::lift_parallel(std::uint16_t coord) {
    begin_lift(coord);

    std::vector<std::int64_t> norm;
    auto norm_of = [&](std::span<const std::int32_t> v) {
        std::int64_t t = 0;
        for (auto c : considered_) t += std::abs(static_cast<std::int64_t>(v[c]));
        return t;
    };
    std::vector<std::vector<std::uint32_t>> pos_by_norm, neg_by_norm;
    auto file = [&](std::uint32_t idx) {
        const auto v = pool_[idx];
        norm.push_back(norm_of(v));
        const auto nrm = static_cast<std::size_t>(norm.back());
        auto& buckets = v[coord] > 0 ? pos_by_norm : neg_by_norm;
        if (v[coord] == 0) return;
        if (buckets.size() <= nrm) buckets.resize(nrm + 1);
        buckets[nrm].push_back(idx);
    };
    for (std::size_t g = 0; g < pool_.size(); ++g) file(static_cast<std::uint32_t>(g));

    using Pair = std::pair<std::uint32_t, std::uint32_t>;
    std::vector<Pair> chunk;
    std::vector<Vec> results;

    auto flush = [&](std::int64_t level, std::vector<Pair>& explicit_pairs) {
        if (chunk.empty()) return;
        rc_.charge(chunk.size());
        results.assign(chunk.size(), Vec{});
        const auto count = static_cast<std::int64_t>(chunk.size());
#pragma omp parallel for schedule(dynamic, 64)
        for (std::int64_t p = 0; p < count; ++p) {
            Vec& s = results[static_cast<std::size_t>(p)];
            add_into(s, pool_[chunk[static_cast<std::size_t>(p)].first],
                     pool_[chunk[static_cast<std::size_t>(p)].second]);
            if (!normal_form(s, pool_, *tree_, pivots_)) s.clear();
        }
        chunk.clear();
        for (Vec& s : results) {
            if (s.empty()) continue;
            if (!normal_form(s, pool_, *tree_, pivots_)) continue;
            const std::uint32_t idx = add(s);
            file(idx);
            const auto v = pool_[idx];
            if (v[coord] == 0) continue;
            const auto& opposite = v[coord] > 0 ? neg_by_norm : pos_by_norm;
            for (std::size_t b = 0; b < opposite.size(); ++b) {
                if (norm[idx] + static_cast<std::int64_t>(b) > level) break;
                for (auto w : opposite[b]) explicit_pairs.emplace_back(idx, w);
            }
        }
    };

    for (std::int64_t level = 0;; ++level) {
        const auto max_level = static_cast<std::int64_t>(pos_by_norm.size() + neg_by_norm.size());
        if (level > max_level) break;
        // Snapshot of the buckets: elements added during this level pair up
        // through explicit_pairs instead.
        std::vector<std::size_t> pos_sizes(pos_by_norm.size()), neg_sizes(neg_by_norm.size());
        for (std::size_t a = 0; a < pos_by_norm.size(); ++a) pos_sizes[a] = pos_by_norm[a].size();
        for (std::size_t b = 0; b < neg_by_norm.size(); ++b) neg_sizes[b] = neg_by_norm[b].size();

        std::vector<Pair> explicit_pairs;
        for (std::size_t a = 0; a < pos_sizes.size(); ++a) {
            const std::int64_t b = level - static_cast<std::int64_t>(a);
            if (b < 0) break;
            if (static_cast<std::size_t>(b) >= neg_sizes.size()) continue;
            for (std::size_t x = 0; x < pos_sizes[a]; ++x)
                for (std::size_t y = 0; y < neg_sizes[static_cast<std::size_t>(b)]; ++y) {
                    chunk.emplace_back(pos_by_norm[a][x], neg_by_norm[static_cast<std::size_t>(b)][y]);
                    if (chunk.size() == kChunk) flush(level, explicit_pairs);
                }
        }
        flush(level, explicit_pairs);
        while (!explicit_pairs.empty()) {
            std::vector<Pair> next;
            for (const Pair& p : explicit_pairs) {
                chunk.push_back(p);
                if (chunk.size() == kChunk) flush(level, next);
            }
            flush(level, next);
            explicit_pairs.swap(next);
        }
    }
    end_lift(coord);
}

std::vector<Vec> project_lift(const ActiveSystem& sys, RunControl& rc, bool parallel) {
    if (sys.vars == 0) return {};
    if (sys.vars > std::numeric_limits<std::uint16_t>::max())
        throw SizeLimitError("too many variables for project-and-lift");
    const IntMatrix kernel = integer_kernel_basis(sys.matrix());
    if (kernel.rows() == 0) return {};
    const PivotedBasis pb = pivot_basis(kernel);

    std::vector<std::uint16_t> pivots(pb.pivots.begin(), pb.pivots.end());
    std::sort(pivots.begin(), pivots.end());
    Lifter lifter(sys.vars, pivots, rc);
    Vec row(sys.vars);
    for (std::size_t r = 0; r < pb.rows.rows(); ++r) {
        for (std::size_t c = 0; c < sys.vars; ++c) row[c] = narrow(pb.rows(r, c));
        lifter.pool().push(row);
        for (auto& x : row) x = -x;
        lifter.pool().push(row);
    }
    lifter.graver_phase();
    lifter.restrict_to_pivot_orthant();
    rc.report("project", 0, lifter.size());

    std::vector<std::uint16_t> remaining;
    for (std::size_t c = 0; c < sys.vars; ++c)
        if (!std::binary_search(pivots.begin(), pivots.end(), static_cast<std::uint16_t>(c)))
            remaining.push_back(static_cast<std::uint16_t>(c));
    std::size_t step = 0;
    while (!remaining.empty()) {
        const std::uint16_t c = lifter.next_coordinate(remaining);
        remaining.erase(std::find(remaining.begin(), remaining.end(), c));
        if (parallel)
            lifter.lift_parallel(c);
        else
            lifter.lift_serial(c);
        rc.report("lift", ++step, lifter.size());
    }
    auto out = lifter.nonnegative_elements();
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace

std::vector<Vec> project_lift_serial(const ActiveSystem& sys, RunControl& rc) {
    return project_lift(sys, rc, false);
}

std::vector<Vec> project_lift_parallel(const ActiveSystem& sys, RunControl& rc) {
    return project_lift(sys, rc, true);
}

}  // namespace oa::detail

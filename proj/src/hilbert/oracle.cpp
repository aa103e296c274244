// Exhaustive oracle: enumerate every vector with total <= T coordinate by
// coordinate. A branch is cut when some constraint's partial sum can no
// longer return to zero with the units still available.

#include <algorithm>
#include <cstdlib>

#include "oa/error.hpp"
#include "oa/hilbert.hpp"

namespace oa {

namespace {

class Enumerator {
public:
    Enumerator(const ConeSystem& sys, std::int64_t max_total, std::uint64_t cap)
        : sys_(sys), active_(sys.active_coordinates()), cap_(cap) {
        x_.assign(sys.variables(), 0);
        d_.assign(sys.constraints(), 0);
        max_total_ = max_total;
    }

    void run() { rec(0, max_total_); }
    std::vector<ReplicateVector>& found() { return found_; }

private:
    void rec(std::size_t pos, std::int64_t remaining) {
        if (++nodes_ > cap_) throw OracleInfeasibleError("oracle node cap exceeded");
        for (auto v : d_)
            if (std::llabs(v) > remaining) return;
        if (pos == active_.size()) {
            if (std::all_of(d_.begin(), d_.end(), [](std::int64_t v) { return v == 0; }) &&
                remaining < max_total_)
                found_.emplace_back(sys_.factors(), x_);
            return;
        }
        const std::size_t var = active_[pos];
        const IntMatrix& a = sys_.matrix();
        for (std::int64_t v = 0; v <= remaining; ++v) {
            x_[var] = v;
            rec(pos + 1, remaining - v);
            for (std::size_t r = 0; r < d_.size(); ++r) d_[r] += a(r, var);
        }
        for (std::size_t r = 0; r < d_.size(); ++r) d_[r] -= a(r, var) * (remaining + 1);
        x_[var] = 0;
    }

    const ConeSystem& sys_;
    std::vector<std::size_t> active_;
    std::uint64_t cap_;
    std::uint64_t nodes_ = 0;
    std::int64_t max_total_ = 0;
    std::vector<std::int64_t> x_;
    std::vector<std::int64_t> d_;
    std::vector<ReplicateVector> found_;
};

}  // namespace

std::vector<ReplicateVector> brute_force_minimal_solutions(const ConeSystem& system,
                                                           std::int64_t max_total,
                                                           std::uint64_t node_cap) {
    if (max_total < 0) throw ParameterError("max_total must be nonnegative");
    if (max_total == 0) return {};
    Enumerator e(system, max_total, node_cap);
    e.run();
    return minimal_elements(std::move(e.found()));
}

}  // namespace oa

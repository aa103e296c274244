#pragma once

// Internal interface between the public solver entry point and the
// algorithm kernels. Kernels see only the active (non-forced) coordinates.

#include <chrono>
#include <cstdint>
#include <vector>

#include "oa/hilbert.hpp"
#include "oa/matrix.hpp"

namespace oa::detail {

using Vec = std::vector<std::int32_t>;

/// Column-major copy of A restricted to the active coordinates.
struct ActiveSystem {
    std::size_t vars = 0;
    std::size_t cons = 0;
    std::vector<std::int32_t> cols;  // cols[j * cons + r] = A(r, active[j])

    const std::int32_t* column(std::size_t j) const { return cols.data() + j * cons; }
    IntMatrix matrix() const;
};

/// Budget accounting and progress reporting shared by all kernels.
class RunControl {
public:
    RunControl(const Budget& budget, const ProgressSink& sink);

    /// Adds to the insertion counter; throws BudgetExhaustedError past the cap.
    void charge(std::uint64_t insertions);
    /// Throws BudgetExhaustedError if the working set or wall clock exceed their caps.
    void check(std::size_t working_set);
    void report(const char* stage, std::size_t step, std::size_t working);
    void set_found(std::size_t found) { found_ = found; }

private:
    [[noreturn]] void exhausted(const std::string& why) const;

    const Budget& budget_;
    const ProgressSink& sink_;
    std::chrono::steady_clock::time_point start_;
    std::uint64_t insertions_ = 0;
    std::size_t found_ = 0;
};

/// Coordinates positive in at least one nonnegative kernel vector (exact LP).
std::vector<bool> cone_support(const ActiveSystem& sys);

std::vector<Vec> completion_serial(const ActiveSystem& sys, RunControl& rc);
std::vector<Vec> completion_parallel(const ActiveSystem& sys, RunControl& rc);
std::vector<Vec> project_lift_serial(const ActiveSystem& sys, RunControl& rc);
std::vector<Vec> project_lift_parallel(const ActiveSystem& sys, RunControl& rc);

}  // namespace oa::detail

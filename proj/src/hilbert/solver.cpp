#include <algorithm>

#include "hilbert/kernels.hpp"
#include "oa/error.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace oa {

namespace detail {

IntMatrix ActiveSystem::matrix() const {
    IntMatrix m(cons, vars);
    for (std::size_t j = 0; j < vars; ++j)
        for (std::size_t r = 0; r < cons; ++r) m(r, j) = column(j)[r];
    return m;
}

RunControl::RunControl(const Budget& budget, const ProgressSink& sink)
    : budget_(budget), sink_(sink), start_(std::chrono::steady_clock::now()) {}

void RunControl::charge(std::uint64_t insertions) {
    insertions_ += insertions;
    if (insertions_ > budget_.max_insertions)
        exhausted("insertion budget of " + std::to_string(budget_.max_insertions) + " exhausted");
}

void RunControl::check(std::size_t working_set) {
    if (working_set > budget_.max_working_set)
        exhausted("working set exceeded " + std::to_string(budget_.max_working_set));
    if (budget_.time_limit.count() > 0 &&
        std::chrono::steady_clock::now() - start_ > budget_.time_limit)
        exhausted("time limit exceeded");
}

void RunControl::report(const char* stage, std::size_t step, std::size_t working) {
    check(working);
    if (sink_) sink_(ProgressEvent{stage, step, found_, working});
}

void RunControl::exhausted(const std::string& why) const {
    throw BudgetExhaustedError(why + " (" + std::to_string(found_) + " basis elements found so far)",
                               found_);
}

}  // namespace detail

HilbertBasis hilbert_basis(const ConeSystem& system, const SolverOptions& options) {
    auto restrict_to = [&](const std::vector<std::size_t>& coords) {
        detail::ActiveSystem s;
        s.vars = coords.size();
        s.cons = system.constraints();
        s.cols.resize(s.vars * s.cons);
        for (std::size_t j = 0; j < s.vars; ++j)
            for (std::size_t r = 0; r < s.cons; ++r)
                s.cols[j * s.cons + r] = static_cast<std::int32_t>(system.matrix()(r, coords[j]));
        return s;
    };
    // Coordinates that vanish on the whole cone are dropped like forced zeros.
    std::vector<std::size_t> active;
    {
        const auto candidates = system.active_coordinates();
        const auto support = detail::cone_support(restrict_to(candidates));
        for (std::size_t j = 0; j < candidates.size(); ++j)
            if (support[j]) active.push_back(candidates[j]);
    }
    if (active.empty()) return HilbertBasis(system, {});
    const detail::ActiveSystem sys = restrict_to(active);

#ifdef _OPENMP
    const int saved_threads = omp_get_max_threads();
    if (options.threads > 0) omp_set_num_threads(options.threads);
#endif
    detail::RunControl rc(options.budget, options.progress);
    std::vector<detail::Vec> raw;
    try {
        const bool par = options.execution == Execution::parallel;
        if (options.algorithm == Algorithm::completion)
            raw = par ? detail::completion_parallel(sys, rc) : detail::completion_serial(sys, rc);
        else
            raw = par ? detail::project_lift_parallel(sys, rc) : detail::project_lift_serial(sys, rc);
    } catch (...) {
#ifdef _OPENMP
        omp_set_num_threads(saved_threads);
#endif
        throw;
    }
#ifdef _OPENMP
    omp_set_num_threads(saved_threads);
#endif

    std::vector<ReplicateVector> elements;
    elements.reserve(raw.size());
    for (const auto& v : raw) {
        std::vector<std::int64_t> full(system.variables(), 0);
        for (std::size_t j = 0; j < active.size(); ++j) full[active[j]] = v[j];
        elements.emplace_back(system.factors(), std::move(full));
    }
    elements = minimal_elements(std::move(elements));
    rc.set_found(elements.size());
    rc.report("done", 0, elements.size());
    return HilbertBasis(system, std::move(elements));
}

}  // namespace oa

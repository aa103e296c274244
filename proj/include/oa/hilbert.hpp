#pragma once

// Minimal Hilbert basis of O = {R in Z_+^N : A R = 0, R_i = 0 for forced i}.
//
// Two algorithms sit behind hilbert_basis():
//   * completion: breadth-first Contejean-Devie completion with the
//     Fortenbacher extension rule. Simple and used as the reference on small
//     systems; its frontier grows far too fast for 5 factors and strength 3.
//   * project_and_lift: works in an integer kernel lattice basis, starts from
//     the lattice projected onto d pivot coordinates and lifts the remaining
//     sign constraints one coordinate at a time with a normal-form completion.
// Both exist as a serial kernel and an OpenMP kernel. All four return the
// same sorted set.

#include <chrono>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "oa/design.hpp"
#include "oa/matrix.hpp"

namespace oa {

class ModelMatrix;

class ConeSystem {
public:
    /// `a` is k x N with entries in {-1,+1}; N must be a power of two.
    explicit ConeSystem(IntMatrix a, std::vector<std::size_t> forced_zero = {});
    /// A = M1^t for OA(n, m).
    static ConeSystem for_design(int n, int m, std::vector<std::size_t> forced_zero = {});
    static ConeSystem from_model(const ModelMatrix& m, std::vector<std::size_t> forced_zero = {});

    const IntMatrix& matrix() const noexcept { return a_; }
    std::size_t variables() const noexcept { return a_.cols(); }
    std::size_t constraints() const noexcept { return a_.rows(); }
    int factors() const noexcept { return n_; }
    /// Sorted, deduplicated.
    const std::vector<std::size_t>& forced_zero() const noexcept { return forced_zero_; }
    bool is_forced_zero(std::size_t i) const;
    /// Coordinates that remain after deleting the forced zeros.
    std::vector<std::size_t> active_coordinates() const;

    friend bool operator==(const ConeSystem&, const ConeSystem&) = default;

private:
    IntMatrix a_;
    std::vector<std::size_t> forced_zero_;
    int n_ = 0;
};

class HilbertBasis {
public:
    /// Sorts the elements lexicographically. Does not re-check minimality;
    /// see check_basis() for that.
    HilbertBasis(ConeSystem system, std::vector<ReplicateVector> elements);

    const ConeSystem& system() const noexcept { return system_; }
    const std::vector<ReplicateVector>& elements() const noexcept { return elements_; }
    std::size_t size() const noexcept { return elements_.size(); }
    const ReplicateVector& operator[](std::size_t i) const { return elements_[i]; }
    bool contains(const ReplicateVector& v) const;

private:
    ConeSystem system_;
    std::vector<ReplicateVector> elements_;
};

enum class Algorithm { project_and_lift, completion };
enum class Execution { serial, parallel };

struct Budget {
    /// Frontier insertions (completion) or critical pairs formed (project-and-lift).
    std::uint64_t max_insertions = 100'000'000;
    /// Cap on the live working set (frontier or completion set).
    std::size_t max_working_set = 20'000'000;
    /// Zero disables the wall-clock limit.
    std::chrono::milliseconds time_limit{0};
};

struct ProgressEvent {
    std::string stage;
    std::size_t step = 0;
    std::size_t found = 0;
    std::size_t working = 0;
};
using ProgressSink = std::function<void(const ProgressEvent&)>;

struct SolverOptions {
    Algorithm algorithm = Algorithm::project_and_lift;
    Execution execution = Execution::parallel;
    /// OpenMP thread count; 0 keeps the runtime default.
    int threads = 0;
    Budget budget{};
    ProgressSink progress{};
};

/// Computes the inclusion-minimal Hilbert basis. Throws BudgetExhaustedError
/// when the budget runs out.
HilbertBasis hilbert_basis(const ConeSystem& system, const SolverOptions& options = {});

/// Every R with sum R <= max_total and A R = 0, by exhaustive recursion with
/// reachability pruning; returns the nonzero componentwise-minimal ones,
/// sorted. Independent of the solver code paths.
std::vector<ReplicateVector> brute_force_minimal_solutions(const ConeSystem& system,
                                                           std::int64_t max_total,
                                                           std::uint64_t node_cap = 2'000'000'000);

/// A v = 0, v >= 0 and forced-zero coordinates vanish.
bool is_member(const ConeSystem& system, const ReplicateVector& v);

/// Nonnegative multipliers n_i with sum n_i * basis[i] = v, or nullopt when
/// none exist (which would mean the basis is incomplete).
std::optional<std::vector<std::int64_t>> decompose(const HilbertBasis& basis, const ReplicateVector& v);

/// The componentwise-minimal nonzero members of `vs`, sorted and deduplicated.
std::vector<ReplicateVector> minimal_elements(std::vector<ReplicateVector> vs);

struct BasisCheck {
    std::size_t non_members = 0;
    std::size_t zero_elements = 0;
    std::size_t dominated_pairs = 0;
    std::size_t duplicates = 0;
    bool sorted = true;
    bool ok() const { return non_members == 0 && zero_elements == 0 && dominated_pairs == 0 &&
                             duplicates == 0 && sorted; }
};

/// Soundness and minimality of a claimed basis.
BasisCheck check_basis(const HilbertBasis& basis);

}  // namespace oa

#pragma once

// Direct enumeration of the 0/1 orthogonal arrays OA(n, m) by backtracking
// over indicator vectors, and cross-checks against a Hilbert basis.

#include <cstdint>
#include <optional>
#include <vector>

#include "oa/design.hpp"
#include "oa/hilbert.hpp"

namespace oa {

inline constexpr int kMaxEnumerationFactors = 5;

struct EnumerationOptions {
    /// Keep only one of {R, 1 - R}: the smaller total, ties lexicographically.
    bool quotient_complement = false;
    std::optional<std::size_t> max_support;
    Execution execution = Execution::parallel;
    int threads = 0;
};

/// Every nonzero R in {0,1}^(2^n) with M1^t R = 0, sorted. n <= 5.
std::vector<ReplicateVector> enumerate_indicators(int n, int m, const EnumerationOptions& options = {});

struct CrossCheckReport {
    /// Indices into the indicator list.
    std::vector<std::size_t> basis_members;
    /// Not in the basis but a sum of basis elements (necessarily disjoint).
    std::vector<std::size_t> disjoint_sums;
    /// Neither; nonempty only if the basis is incomplete.
    std::vector<std::size_t> unexplained;
    /// Pairs of support-8 basis elements with disjoint supports.
    std::size_t support8_disjoint_pairs = 0;
};

CrossCheckReport cross_check_basis(const std::vector<ReplicateVector>& indicators, const HilbertBasis& basis);

/// Pairs with disjoint supports among the elements of support size `support`.
std::size_t disjoint_support_pairs(const std::vector<ReplicateVector>& elements, std::size_t support);

}  // namespace oa

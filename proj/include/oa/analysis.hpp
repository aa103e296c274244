#pragma once

// Counting-polynomial coefficients, OA tests and classification of fractions.
//
// b_alpha = 2^-n * sum_a R(a) X^alpha(a); CountingCoefficients stores the
// numerators 2^n * b_alpha, so the transform pair is integer-valued.

#include <cstdint>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "oa/design.hpp"
#include "oa/hilbert.hpp"

namespace oa {

/// Fast Walsh-Hadamard butterfly; O(n 2^n).
CountingCoefficients wht_forward(const ReplicateVector& r);
/// Direct O(4^n) evaluation of the defining sum. Reference for wht_forward.
CountingCoefficients wht_forward_direct(const ReplicateVector& r);

/// R(a) = sum_alpha b_alpha X^alpha(a). Throws NotCountingFunctionError if a
/// value is negative or not an integer.
ReplicateVector wht_inverse(const CountingCoefficients& b);

/// b_alpha = 0 for every 1 <= weight(alpha) <= m.
bool is_oa_coeffs(const CountingCoefficients& b, int m);
/// Every m-factor projection puts the same count in each of its 2^m cells.
bool is_oa_projection(const ReplicateVector& r, int m);

/// Constant |b_alpha| = b_0 on an XOR-closed support. Requires the
/// coefficients of a 0/1 vector (NotIndicatorError otherwise).
bool is_regular(const CountingCoefficients& b);

struct Classification {
    std::size_t support = 0;
    std::int64_t total = 0;
    std::int64_t maxrep = 0;
    bool is_indicator = false;
    Dyadic b0{};
    /// Smallest weight of a nonzero nontrivial coefficient; nullopt means "full".
    std::optional<int> resolution;
    /// Only decided for indicators.
    std::optional<bool> regular;
    bool is_oa = false;  // for the strength passed to classify()

    friend bool operator==(const Classification&, const Classification&) = default;
};

Classification classify(const ReplicateVector& r, int m);

/// 1 - R. Throws NotIndicatorError unless R is 0/1.
ReplicateVector complement(const ReplicateVector& r);

/// R'(a) = R(s . sigma^-1(a)), where sigma sends factor i to position
/// sigma[i] (0-based) and s is a vector of +-1.
ReplicateVector apply_symmetry(const ReplicateVector& r, const std::vector<int>& sigma,
                               const std::vector<int>& s);

struct Summary {
    using Table = std::map<std::pair<std::int64_t, std::int64_t>, std::size_t>;
    std::size_t elements = 0;
    Table support_total;
    Table support_maxrep;
    Table maxrep_total;

    std::size_t at(const Table& t, std::int64_t row, std::int64_t col) const {
        auto it = t.find({row, col});
        return it == t.end() ? 0 : it->second;
    }
    friend bool operator==(const Summary&, const Summary&) = default;
};

Summary summarize(const std::vector<ReplicateVector>& elements, Execution exec = Execution::parallel);
inline Summary summarize(const HilbertBasis& basis, Execution exec = Execution::parallel) {
    return summarize(basis.elements(), exec);
}

}  // namespace oa

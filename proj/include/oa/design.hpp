#pragma once

// Full factorial design D(n) = {-1,+1}^n, exponent sets and monomials.
//
// Canonical point order: a point maps to the integer whose bit i, counted
// from the left (most significant of n bits), is 1 when coordinate i is +1.
// Points are listed by increasing index, so the rightmost coordinate varies
// fastest and -1 comes before +1. Exponents use the same bit convention.

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace oa {

/// Largest factor count for which 2^n-length dense vectors are supported.
inline constexpr int kMaxFactors = 16;

/// Throws SizeLimitError unless 1 <= n <= kMaxFactors.
void check_factor_count(int n);
/// Throws ParameterError unless 1 <= m <= n (after check_factor_count).
void check_strength(int n, int m);

/// Number of points 2^n.
inline std::size_t design_size(int n) { return std::size_t{1} << n; }

class DesignPoint {
public:
    /// From explicit coordinates; each must be -1 or +1.
    explicit DesignPoint(std::vector<int> coords);
    /// The point with canonical index `index` in D(n).
    static DesignPoint from_index(int n, std::uint32_t index);

    int factors() const noexcept { return static_cast<int>(coords_.size()); }
    int operator[](int i) const { return coords_[static_cast<std::size_t>(i)]; }
    const std::vector<int>& coords() const noexcept { return coords_; }
    std::uint32_t index() const noexcept { return index_; }
    /// Row label in the "-+-++" style.
    std::string label() const;

    friend bool operator==(const DesignPoint&, const DesignPoint&) = default;

private:
    std::vector<int> coords_;
    std::uint32_t index_ = 0;
};

class ExponentVector {
public:
    /// From a bit mask over n factors (bit n-1-i is factor i).
    ExponentVector(int n, std::uint32_t mask);
    /// From a 0/1 string such as "00011".
    static ExponentVector parse(const std::string& bits);

    int factors() const noexcept { return n_; }
    std::uint32_t mask() const noexcept { return mask_; }
    int weight() const noexcept { return weight_; }
    /// Bit for factor i (0-based from the left).
    int bit(int i) const { return static_cast<int>((mask_ >> (n_ - 1 - i)) & 1u); }
    std::string to_string() const;

    friend bool operator==(const ExponentVector&, const ExponentVector&) = default;
    friend auto operator<=>(const ExponentVector& a, const ExponentVector& b) {
        return a.mask_ <=> b.mask_;
    }

private:
    int n_;
    std::uint32_t mask_;
    int weight_;
};

/// All 2^n points in canonical order.
std::vector<DesignPoint> enumerate_points(int n);

/// Exponents with 1 <= weight <= m, ascending as n-bit binary numbers.
std::vector<ExponentVector> enumerate_exponents(int n, int m);

/// X^alpha(a) = product of a_i over the 1-bits of alpha.
int eval_monomial(const ExponentVector& alpha, const DesignPoint& a);

/// Same as eval_monomial on raw canonical indices; no validation.
inline int monomial_sign(std::uint32_t alpha_mask, std::uint32_t point_index) {
    // a_i = -1 exactly where the point bit is 0.
    return (__builtin_popcount(alpha_mask & ~point_index) & 1) ? -1 : 1;
}

/// Fraction with replications: R(a) >= 0 for every point, indexed canonically.
class ReplicateVector {
public:
    ReplicateVector() = default;
    /// Zero vector of length 2^n.
    explicit ReplicateVector(int n);
    /// Takes ownership of counts; length must be 2^n and entries >= 0.
    ReplicateVector(int n, std::vector<std::int64_t> counts);

    static ReplicateVector full_design(int n);
    static ReplicateVector unit(int n, std::size_t point);

    int factors() const noexcept { return n_; }
    std::size_t size() const noexcept { return counts_.size(); }
    std::int64_t operator[](std::size_t i) const { return counts_[i]; }
    std::span<const std::int64_t> counts() const noexcept { return counts_; }

    std::int64_t total() const;
    std::int64_t max_entry() const;
    std::size_t support_size() const;
    bool is_zero() const;
    bool is_indicator() const;
    /// Componentwise <= (requires equal length).
    bool dominated_by(const ReplicateVector& other) const;

    ReplicateVector operator+(const ReplicateVector& other) const;
    ReplicateVector scaled(std::int64_t factor) const;

    friend bool operator==(const ReplicateVector&, const ReplicateVector&) = default;
    /// Lexicographic by entry sequence.
    friend auto operator<=>(const ReplicateVector& a, const ReplicateVector& b) {
        return a.counts_ <=> b.counts_;
    }

private:
    int n_ = 0;
    std::vector<std::int64_t> counts_;
};

/// Exact dyadic rational num / 2^shift, kept unreduced until asked.
struct Dyadic {
    std::int64_t num = 0;
    int shift = 0;

    Dyadic reduced() const;
    bool is_zero() const noexcept { return num == 0; }
    bool is_integer() const;
    std::string to_string() const;
    friend bool operator==(const Dyadic& a, const Dyadic& b);
    friend std::strong_ordering operator<=>(const Dyadic& a, const Dyadic& b);
};

/// Coefficients b_alpha of the counting polynomial, stored as numerators
/// over the common denominator 2^n and indexed by alpha mask over all of L.
class CountingCoefficients {
public:
    explicit CountingCoefficients(int n);
    CountingCoefficients(int n, std::vector<std::int64_t> scaled);

    int factors() const noexcept { return n_; }
    std::size_t size() const noexcept { return scaled_.size(); }
    /// 2^n * b_alpha.
    std::int64_t scaled(std::uint32_t alpha) const { return scaled_[alpha]; }
    std::span<const std::int64_t> scaled() const noexcept { return scaled_; }
    Dyadic coeff(std::uint32_t alpha) const { return Dyadic{scaled_[alpha], n_}; }
    /// Sets b_alpha = num / 2^shift; the value must be representable over 2^n.
    void set(std::uint32_t alpha, std::int64_t num, int shift);

    friend bool operator==(const CountingCoefficients&, const CountingCoefficients&) = default;

private:
    int n_;
    std::vector<std::int64_t> scaled_;
};

// Checked arithmetic helpers used wherever counts can grow.
std::int64_t checked_add(std::int64_t a, std::int64_t b);
std::int64_t checked_mul(std::int64_t a, std::int64_t b);

}  // namespace oa

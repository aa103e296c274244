#include "oa/design.hpp"

#include <algorithm>
#include <bit>
#include <numeric>

#include "oa/error.hpp"

namespace oa {

void check_factor_count(int n) {
    if (n < 1 || n > kMaxFactors) {
        throw SizeLimitError("factor count " + std::to_string(n) + " outside [1, " +
                             std::to_string(kMaxFactors) + "]");
    }
}

void check_strength(int n, int m) {
    check_factor_count(n);
    if (m < 1 || m > n) {
        throw ParameterError("strength " + std::to_string(m) + " outside [1, " + std::to_string(n) +
                             "]");
    }
}

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_add_overflow(a, b, &r)) throw OverflowError("64-bit addition overflow");
    return r;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_mul_overflow(a, b, &r)) throw OverflowError("64-bit multiplication overflow");
    return r;
}

// ---------------------------------------------------------------------------
// DesignPoint

DesignPoint::DesignPoint(std::vector<int> coords) : coords_(std::move(coords)) {
    check_factor_count(static_cast<int>(coords_.size()));
    const int n = factors();
    for (int i = 0; i < n; ++i) {
        const int c = coords_[static_cast<std::size_t>(i)];
        if (c != -1 && c != 1) throw ParameterError("design coordinate must be -1 or +1");
        if (c == 1) index_ |= 1u << (n - 1 - i);
    }
}

DesignPoint DesignPoint::from_index(int n, std::uint32_t index) {
    check_factor_count(n);
    if (index >= design_size(n)) throw DimensionError("point index out of range");
    std::vector<int> coords(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) coords[static_cast<std::size_t>(i)] = ((index >> (n - 1 - i)) & 1u) ? 1 : -1;
    return DesignPoint(std::move(coords));
}

std::string DesignPoint::label() const {
    std::string s;
    s.reserve(coords_.size());
    for (int c : coords_) s.push_back(c > 0 ? '+' : '-');
    return s;
}

// ---------------------------------------------------------------------------
// ExponentVector

ExponentVector::ExponentVector(int n, std::uint32_t mask) : n_(n), mask_(mask) {
    check_factor_count(n);
    if (n < 32 && (mask >> n) != 0) throw DimensionError("exponent mask wider than factor count");
    weight_ = std::popcount(mask);
}

ExponentVector ExponentVector::parse(const std::string& bits) {
    std::uint32_t mask = 0;
    for (char c : bits) {
        if (c != '0' && c != '1') throw ParameterError("exponent string must contain only 0/1");
        mask = (mask << 1) | static_cast<std::uint32_t>(c - '0');
    }
    return ExponentVector(static_cast<int>(bits.size()), mask);
}

std::string ExponentVector::to_string() const {
    std::string s(static_cast<std::size_t>(n_), '0');
    for (int i = 0; i < n_; ++i)
        if (bit(i)) s[static_cast<std::size_t>(i)] = '1';
    return s;
}

// ---------------------------------------------------------------------------

std::vector<DesignPoint> enumerate_points(int n) {
    check_factor_count(n);
    std::vector<DesignPoint> pts;
    pts.reserve(design_size(n));
    for (std::uint32_t i = 0; i < design_size(n); ++i) pts.push_back(DesignPoint::from_index(n, i));
    return pts;
}

std::vector<ExponentVector> enumerate_exponents(int n, int m) {
    check_strength(n, m);
    std::vector<ExponentVector> out;
    for (std::uint32_t mask = 1; mask < design_size(n); ++mask) {
        if (std::popcount(mask) <= m) out.emplace_back(n, mask);
    }
    return out;
}

int eval_monomial(const ExponentVector& alpha, const DesignPoint& a) {
    if (alpha.factors() != a.factors())
        throw DimensionError("exponent has " + std::to_string(alpha.factors()) +
                             " factors, point has " + std::to_string(a.factors()));
    return monomial_sign(alpha.mask(), a.index());
}

// ---------------------------------------------------------------------------
// ReplicateVector

ReplicateVector::ReplicateVector(int n) : n_(n) {
    check_factor_count(n);
    counts_.assign(design_size(n), 0);
}

ReplicateVector::ReplicateVector(int n, std::vector<std::int64_t> counts)
    : n_(n), counts_(std::move(counts)) {
    check_factor_count(n);
    if (counts_.size() != design_size(n))
        throw DimensionError("replicate vector length " + std::to_string(counts_.size()) +
                             " != 2^" + std::to_string(n));
    if (std::any_of(counts_.begin(), counts_.end(), [](std::int64_t v) { return v < 0; }))
        throw ParameterError("replicate counts must be nonnegative");
}

ReplicateVector ReplicateVector::full_design(int n) {
    check_factor_count(n);
    return ReplicateVector(n, std::vector<std::int64_t>(design_size(n), 1));
}

ReplicateVector ReplicateVector::unit(int n, std::size_t point) {
    ReplicateVector r(n);
    if (point >= r.size()) throw DimensionError("unit vector index out of range");
    r.counts_[point] = 1;
    return r;
}

std::int64_t ReplicateVector::total() const {
    std::int64_t t = 0;
    for (auto v : counts_) t = checked_add(t, v);
    return t;
}

std::int64_t ReplicateVector::max_entry() const {
    return counts_.empty() ? 0 : *std::max_element(counts_.begin(), counts_.end());
}

std::size_t ReplicateVector::support_size() const {
    return static_cast<std::size_t>(
        std::count_if(counts_.begin(), counts_.end(), [](std::int64_t v) { return v > 0; }));
}

bool ReplicateVector::is_zero() const {
    return std::all_of(counts_.begin(), counts_.end(), [](std::int64_t v) { return v == 0; });
}

bool ReplicateVector::is_indicator() const {
    return std::all_of(counts_.begin(), counts_.end(), [](std::int64_t v) { return v <= 1; });
}

bool ReplicateVector::dominated_by(const ReplicateVector& other) const {
    if (other.size() != size()) throw DimensionError("replicate vector length mismatch");
    for (std::size_t i = 0; i < counts_.size(); ++i)
        if (counts_[i] > other.counts_[i]) return false;
    return true;
}

ReplicateVector ReplicateVector::operator+(const ReplicateVector& other) const {
    if (other.size() != size()) throw DimensionError("replicate vector length mismatch");
    std::vector<std::int64_t> c(counts_.size());
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = checked_add(counts_[i], other.counts_[i]);
    return ReplicateVector(n_, std::move(c));
}

ReplicateVector ReplicateVector::scaled(std::int64_t factor) const {
    if (factor < 0) throw ParameterError("negative scale factor");
    std::vector<std::int64_t> c(counts_.size());
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = checked_mul(counts_[i], factor);
    return ReplicateVector(n_, std::move(c));
}

// ---------------------------------------------------------------------------
// Dyadic

Dyadic Dyadic::reduced() const {
    Dyadic d = *this;
    if (d.num == 0) return Dyadic{0, 0};
    while (d.shift > 0 && (d.num % 2) == 0) {
        d.num /= 2;
        --d.shift;
    }
    return d;
}

bool Dyadic::is_integer() const { return reduced().shift == 0; }

std::string Dyadic::to_string() const {
    const Dyadic r = reduced();
    if (r.shift == 0) return std::to_string(r.num);
    return std::to_string(r.num) + "/" + std::to_string(std::int64_t{1} << r.shift);
}

bool operator==(const Dyadic& a, const Dyadic& b) {
    const Dyadic ra = a.reduced(), rb = b.reduced();
    return ra.num == rb.num && ra.shift == rb.shift;
}

std::strong_ordering operator<=>(const Dyadic& a, const Dyadic& b) {
    // Bring both to the larger shift; shifts are <= 62 in practice.
    const int s = std::max(a.shift, b.shift);
    const std::int64_t x = checked_mul(a.num, std::int64_t{1} << (s - a.shift));
    const std::int64_t y = checked_mul(b.num, std::int64_t{1} << (s - b.shift));
    return x <=> y;
}

// ---------------------------------------------------------------------------
// CountingCoefficients

CountingCoefficients::CountingCoefficients(int n) : n_(n) {
    check_factor_count(n);
    scaled_.assign(design_size(n), 0);
}

CountingCoefficients::CountingCoefficients(int n, std::vector<std::int64_t> scaled)
    : n_(n), scaled_(std::move(scaled)) {
    check_factor_count(n);
    if (scaled_.size() != design_size(n)) throw DimensionError("coefficient vector length != 2^n");
}

void CountingCoefficients::set(std::uint32_t alpha, std::int64_t num, int shift) {
    if (alpha >= scaled_.size()) throw DimensionError("exponent index out of range");
    if (shift < 0) throw ParameterError("negative shift");
    const Dyadic r = Dyadic{num, shift}.reduced();
    if (r.shift > n_) throw ParameterError("coefficient denominator does not divide 2^n");
    scaled_[alpha] = checked_mul(r.num, std::int64_t{1} << (n_ - r.shift));
}

}  // namespace oa

#include "oa/analysis.hpp"

#include <algorithm>
#include <bit>
#include <numeric>

#include "oa/error.hpp"

namespace oa {

namespace {

// In-place H[k] = sum_j v[j] (-1)^popcount(j & k).
void butterfly(std::vector<std::int64_t>& v) {
    for (std::size_t h = 1; h < v.size(); h <<= 1)
        for (std::size_t i = 0; i < v.size(); i += h << 1)
            for (std::size_t j = i; j < i + h; ++j) {
                const std::int64_t x = v[j], y = v[j + h];
                v[j] = checked_add(x, y);
                v[j + h] = checked_add(x, -y);
            }
}

// X^alpha(a) = (-1)^|alpha| (-1)^popcount(alpha & a), because a_i = -1 on the 0-bits.
void flip_odd_weights(std::vector<std::int64_t>& v) {
    for (std::size_t k = 0; k < v.size(); ++k)
        if (std::popcount(k) & 1) v[k] = -v[k];
}

}  // namespace

CountingCoefficients wht_forward(const ReplicateVector& r) {
    std::vector<std::int64_t> v(r.counts().begin(), r.counts().end());
    butterfly(v);
    flip_odd_weights(v);
    return CountingCoefficients(r.factors(), std::move(v));
}

CountingCoefficients wht_forward_direct(const ReplicateVector& r) {
    const std::size_t N = r.size();
    std::vector<std::int64_t> v(N, 0);
    for (std::uint32_t alpha = 0; alpha < N; ++alpha)
        for (std::uint32_t a = 0; a < N; ++a)
            v[alpha] = checked_add(v[alpha], monomial_sign(alpha, a) * r[a]);
    return CountingCoefficients(r.factors(), std::move(v));
}

ReplicateVector wht_inverse(const CountingCoefficients& b) {
    std::vector<std::int64_t> v(b.scaled().begin(), b.scaled().end());
    flip_odd_weights(v);
    butterfly(v);
    const std::int64_t N = static_cast<std::int64_t>(v.size());
    for (std::size_t a = 0; a < v.size(); ++a) {
        if (v[a] % N != 0)
            throw NotCountingFunctionError("value at point " + std::to_string(a) + " is not an integer");
        v[a] /= N;
        if (v[a] < 0) throw NotCountingFunctionError("value at point " + std::to_string(a) + " is negative");
    }
    return ReplicateVector(b.factors(), std::move(v));
}

bool is_oa_coeffs(const CountingCoefficients& b, int m) {
    for (std::uint32_t alpha = 1; alpha < b.size(); ++alpha)
        if (std::popcount(alpha) <= m && b.scaled(alpha) != 0) return false;
    return true;
}

bool is_oa_projection(const ReplicateVector& r, int m) {
    const int n = r.factors();
    if (m < 1 || m > n) throw ParameterError("strength outside [1, n]");
    const std::uint32_t N = static_cast<std::uint32_t>(r.size());
    std::vector<std::int64_t> cells(std::size_t{1} << m);
    for (std::uint32_t J = 0; J < N; ++J) {
        if (std::popcount(J) != m) continue;
        std::fill(cells.begin(), cells.end(), 0);
        for (std::uint32_t a = 0; a < N; ++a) {
            if (r[a] == 0) continue;
            // gather the bits of a selected by J
            std::uint32_t cell = 0, bit = 0;
            for (std::uint32_t mask = J; mask; mask &= mask - 1, ++bit)
                if (a & (mask & -mask)) cell |= 1u << bit;
            cells[cell] = checked_add(cells[cell], r[a]);
        }
        if (std::adjacent_find(cells.begin(), cells.end(), std::not_equal_to<>()) != cells.end())
            return false;
    }
    return true;
}

bool is_regular(const CountingCoefficients& b) {
    const ReplicateVector r = wht_inverse(b);
    if (!r.is_indicator()) throw NotIndicatorError("regularity is defined for 0/1 fractions only");
    const std::int64_t b0 = b.scaled(0);
    if (b0 == 0) return false;
    std::vector<std::uint32_t> supp;
    for (std::uint32_t alpha = 0; alpha < b.size(); ++alpha) {
        const std::int64_t x = b.scaled(alpha);
        if (x == 0) continue;
        if (x != b0 && x != -b0) return false;
        supp.push_back(alpha);
    }
    for (auto x : supp)
        for (auto y : supp)
            if (b.scaled(x ^ y) == 0) return false;
    return true;
}

Classification classify(const ReplicateVector& r, int m) {
    Classification c;
    c.support = r.support_size();
    c.total = r.total();
    c.maxrep = r.max_entry();
    c.is_indicator = r.is_indicator();
    const CountingCoefficients b = wht_forward(r);
    c.b0 = b.coeff(0);
    for (std::uint32_t alpha = 1; alpha < b.size(); ++alpha) {
        if (b.scaled(alpha) == 0) continue;
        const int w = std::popcount(alpha);
        if (!c.resolution || w < *c.resolution) c.resolution = w;
    }
    if (c.is_indicator) c.regular = is_regular(b);
    c.is_oa = is_oa_coeffs(b, m);
    return c;
}

ReplicateVector complement(const ReplicateVector& r) {
    if (!r.is_indicator()) throw NotIndicatorError("complement needs a 0/1 fraction");
    std::vector<std::int64_t> c(r.size());
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = 1 - r[i];
    return ReplicateVector(r.factors(), std::move(c));
}

ReplicateVector apply_symmetry(const ReplicateVector& r, const std::vector<int>& sigma,
                               const std::vector<int>& s) {
    const int n = r.factors();
    if (static_cast<int>(sigma.size()) != n || static_cast<int>(s.size()) != n)
        throw ParameterError("permutation and sign vector need one entry per factor");
    std::vector<bool> seen(static_cast<std::size_t>(n), false);
    for (int v : sigma) {
        if (v < 0 || v >= n || seen[static_cast<std::size_t>(v)]) throw ParameterError("invalid factor permutation");
        seen[static_cast<std::size_t>(v)] = true;
    }
    for (int v : s)
        if (v != 1 && v != -1) throw ParameterError("sign switch entries must be -1 or +1");

    // Factor i sits at bit n-1-i of a canonical index.
    auto bit = [n](int i) { return std::uint32_t{1} << (n - 1 - i); };
    std::vector<std::int64_t> out(r.size());
    for (std::uint32_t a = 0; a < r.size(); ++a) {
        // c_i = s_i * a_sigma(i)
        std::uint32_t c = 0;
        for (int i = 0; i < n; ++i) {
            const bool plus = (a & bit(sigma[static_cast<std::size_t>(i)])) != 0;
            if (plus == (s[static_cast<std::size_t>(i)] > 0)) c |= bit(i);
        }
        out[a] = r[c];
    }
    return ReplicateVector(n, std::move(out));
}

Summary summarize(const std::vector<ReplicateVector>& elements, Execution exec) {
    struct Key {
        std::int64_t support, total, maxrep;
    };
    std::vector<Key> keys(elements.size());
    const auto n = static_cast<std::ptrdiff_t>(elements.size());
    if (exec == Execution::parallel) {
#pragma omp parallel for schedule(static)
        for (std::ptrdiff_t i = 0; i < n; ++i) {
            const auto& e = elements[static_cast<std::size_t>(i)];
            keys[static_cast<std::size_t>(i)] = {static_cast<std::int64_t>(e.support_size()), e.total(), e.max_entry()};
        }
    } else {
        for (std::ptrdiff_t i = 0; i < n; ++i) {
            const auto& e = elements[static_cast<std::size_t>(i)];
            keys[static_cast<std::size_t>(i)] = {static_cast<std::int64_t>(e.support_size()), e.total(), e.max_entry()};
        }
    }
    Summary s;
    s.elements = elements.size();
    for (const Key& k : keys) {
        ++s.support_total[{k.support, k.total}];
        ++s.support_maxrep[{k.support, k.maxrep}];
        ++s.maxrep_total[{k.maxrep, k.total}];
    }
    return s;
}

}  // namespace oa

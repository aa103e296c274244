#include "oa/model_matrix.hpp"

#include <algorithm>

#include "oa/error.hpp"

namespace oa {

ModelMatrix::ModelMatrix(int n, int m, std::vector<ExponentVector> exponents,
                         std::vector<std::int8_t> entries)
    : n_(n), m_(m), exponents_(std::move(exponents)), entries_(std::move(entries)) {
    check_factor_count(n);
    if (entries_.size() != rows() * cols()) throw DimensionError("model matrix entries do not match shape");
}

ModelMatrix build_model_matrix(int n, int m) {
    auto exps = enumerate_exponents(n, m);
    const std::size_t rows = design_size(n), cols = exps.size();
    std::vector<std::int8_t> entries(rows * cols);
    for (std::uint32_t a = 0; a < rows; ++a)
        for (std::size_t j = 0; j < cols; ++j)
            entries[a * cols + j] = static_cast<std::int8_t>(monomial_sign(exps[j].mask(), a));
    return ModelMatrix(n, m, std::move(exps), std::move(entries));
}

IntMatrix ModelMatrix::to_int_matrix() const {
    IntMatrix out(rows(), cols());
    for (std::size_t r = 0; r < rows(); ++r)
        for (std::size_t c = 0; c < cols(); ++c) out(r, c) = (*this)(r, c);
    return out;
}

IntMatrix ModelMatrix::transposed() const { return to_int_matrix().transposed(); }

namespace {

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % p);
}

std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t p) {
    std::uint64_t r = 1;
    while (e) {
        if (e & 1) r = mulmod(r, a, p);
        a = mulmod(a, a, p);
        e >>= 1;
    }
    return r;
}

std::size_t rank_mod(const IntMatrix& m, std::uint64_t p) {
    const std::size_t R = m.rows(), C = m.cols();
    std::vector<std::uint64_t> a(R * C);
    for (std::size_t i = 0; i < R * C; ++i) {
        const std::int64_t v = m.data()[i] % static_cast<std::int64_t>(p);
        a[i] = static_cast<std::uint64_t>(v < 0 ? v + static_cast<std::int64_t>(p) : v);
    }
    std::size_t rank = 0;
    for (std::size_t c = 0; c < C && rank < R; ++c) {
        std::size_t piv = rank;
        while (piv < R && a[piv * C + c] == 0) ++piv;
        if (piv == R) continue;
        if (piv != rank)
            for (std::size_t k = 0; k < C; ++k) std::swap(a[piv * C + k], a[rank * C + k]);
        const std::uint64_t inv = powmod(a[rank * C + c], p - 2, p);
        for (std::size_t r = rank + 1; r < R; ++r) {
            const std::uint64_t f = mulmod(a[r * C + c], inv, p);
            if (f == 0) continue;
            for (std::size_t k = c; k < C; ++k)
                a[r * C + k] = (a[r * C + k] + p - mulmod(f, a[rank * C + k], p)) % p;
        }
        ++rank;
    }
    return rank;
}

}  // namespace

std::size_t rational_rank(const IntMatrix& m) {
    constexpr std::uint64_t primes[] = {2305843009213693951ULL, 2305843009213693921ULL,
                                        2305843009213693907ULL};
    std::size_t best = 0;
    for (auto p : primes) best = std::max(best, rank_mod(m, p));
    return best;
}

MatrixReport verify_matrix(const ModelMatrix& mm) {
    MatrixReport rep;
    const std::size_t R = mm.rows(), C = mm.cols();
    for (std::size_t r = 0; r < R && rep.entries_pm1; ++r)
        for (std::size_t c = 0; c < C; ++c)
            if (mm(r, c) != 1 && mm(r, c) != -1) {
                rep.entries_pm1 = false;
                rep.failures.push_back("entry (" + std::to_string(r) + "," + std::to_string(c) +
                                       ") not in {-1,+1}");
                break;
            }
    for (std::size_t c = 0; c < C; ++c) {
        std::int64_t s = 0;
        for (std::size_t r = 0; r < R; ++r) s += mm(r, c);
        if (s != 0) {
            rep.column_zero_sums = false;
            rep.failures.push_back("column " + std::to_string(c) + " sums to " + std::to_string(s));
        }
    }
    for (std::size_t c1 = 0; c1 < C; ++c1)
        for (std::size_t c2 = c1 + 1; c2 < C; ++c2) {
            std::int64_t s = 0;
            for (std::size_t r = 0; r < R; ++r) s += mm(r, c1) * mm(r, c2);
            if (s != 0) {
                rep.columns_orthogonal = false;
                rep.failures.push_back("columns " + std::to_string(c1) + " and " + std::to_string(c2) +
                                       " have inner product " + std::to_string(s));
            }
        }
    rep.rank = rational_rank(mm.to_int_matrix());
    rep.full_column_rank = rep.rank == C;
    if (!rep.full_column_rank)
        rep.failures.push_back("rank " + std::to_string(rep.rank) + " < " + std::to_string(C));
    return rep;
}

}  // namespace oa

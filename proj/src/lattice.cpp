#include "oa/lattice.hpp"

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <utility>

#include "oa/design.hpp"
#include "oa/error.hpp"

namespace oa {

namespace {

// column c -= q * column p on both the working matrix and the transform.
void column_axpy(std::vector<std::vector<std::int64_t>>& cols, std::size_t c, std::size_t p,
                 std::int64_t q) {
    auto& dst = cols[c];
    const auto& src = cols[p];
    for (std::size_t i = 0; i < dst.size(); ++i) dst[i] = checked_add(dst[i], checked_mul(-q, src[i]));
}

void row_axpy(std::vector<std::int64_t>& dst, const std::vector<std::int64_t>& src, std::int64_t q) {
    for (std::size_t i = 0; i < dst.size(); ++i) dst[i] = checked_add(dst[i], checked_mul(-q, src[i]));
}

}  // namespace

IntMatrix integer_kernel_basis(const IntMatrix& a) {
    const std::size_t rows = a.rows(), n = a.cols();
    // Column j of the working matrix is the stacked vector [A e_j ; U e_j].
    std::vector<std::vector<std::int64_t>> cols(n, std::vector<std::int64_t>(rows + n, 0));
    for (std::size_t j = 0; j < n; ++j) {
        for (std::size_t r = 0; r < rows; ++r) cols[j][r] = a(r, j);
        cols[j][rows + j] = 1;
    }
    std::size_t pivot = 0;
    for (std::size_t r = 0; r < rows && pivot < n; ++r) {
        for (;;) {
            std::size_t best = n;
            for (std::size_t c = pivot; c < n; ++c) {
                const std::int64_t v = cols[c][r];
                if (v != 0 && (best == n || std::llabs(v) < std::llabs(cols[best][r]))) best = c;
            }
            if (best == n) break;
            std::swap(cols[pivot], cols[best]);
            bool clean = true;
            for (std::size_t c = pivot + 1; c < n; ++c) {
                if (cols[c][r] == 0) continue;
                column_axpy(cols, c, pivot, cols[c][r] / cols[pivot][r]);
                if (cols[c][r] != 0) clean = false;
            }
            if (clean) {
                ++pivot;
                break;
            }
        }
    }
    IntMatrix basis(n - pivot, n);
    for (std::size_t k = pivot; k < n; ++k)
        for (std::size_t j = 0; j < n; ++j) basis(k - pivot, j) = cols[k][rows + j];
    return basis;
}

PivotedBasis pivot_basis(const IntMatrix& basis) {
    const std::size_t d = basis.rows(), n = basis.cols();
    std::vector<std::vector<std::int64_t>> rows(d, std::vector<std::int64_t>(n));
    for (std::size_t r = 0; r < d; ++r)
        for (std::size_t c = 0; c < n; ++c) rows[r][c] = basis(r, c);

    PivotedBasis out;
    std::vector<bool> used(n, false);
    for (std::size_t t = 0; t < d; ++t) {
        // Prefer a unit entry; otherwise Euclid-reduce the column with the
        // smallest nonzero magnitude down to a single nonzero.
        std::size_t pr = d, pc = n;
        for (std::size_t c = 0; c < n && pr == d; ++c) {
            if (used[c]) continue;
            for (std::size_t r = t; r < d; ++r)
                if (std::llabs(rows[r][c]) == 1) {
                    pr = r;
                    pc = c;
                    break;
                }
        }
        if (pr == d) {
            std::int64_t bestv = 0;
            for (std::size_t c = 0; c < n; ++c) {
                if (used[c]) continue;
                for (std::size_t r = t; r < d; ++r) {
                    const std::int64_t v = std::llabs(rows[r][c]);
                    if (v != 0 && (bestv == 0 || v < bestv)) {
                        bestv = v;
                        pr = r;
                        pc = c;
                    }
                }
            }
            if (pr == d) throw DimensionError("lattice basis rows are linearly dependent");
            for (;;) {
                std::swap(rows[t], rows[pr]);
                bool clean = true;
                for (std::size_t r = t + 1; r < d; ++r) {
                    if (rows[r][pc] == 0) continue;
                    row_axpy(rows[r], rows[t], rows[r][pc] / rows[t][pc]);
                    if (rows[r][pc] != 0) clean = false;
                }
                if (clean) break;
                pr = t;
                for (std::size_t r = t + 1; r < d; ++r)
                    if (rows[r][pc] != 0 && std::llabs(rows[r][pc]) < std::llabs(rows[pr][pc])) pr = r;
            }
            pr = t;
        }
        std::swap(rows[t], rows[pr]);
        if (rows[t][pc] < 0)
            for (auto& v : rows[t]) v = -v;
        used[pc] = true;
        out.pivots.push_back(pc);
        if (rows[t][pc] != 1) out.unimodular = false;
        // Clear the pivot column elsewhere as far as integrality allows.
        for (std::size_t r = 0; r < d; ++r) {
            if (r == t || rows[r][pc] == 0) continue;
            const std::int64_t q = rows[r][pc] / rows[t][pc];
            if (q != 0) row_axpy(rows[r], rows[t], q);
        }
    }
    out.rows = IntMatrix(d, n);
    for (std::size_t r = 0; r < d; ++r)
        for (std::size_t c = 0; c < n; ++c) out.rows(r, c) = rows[r][c];
    return out;
}

}  // namespace oa

// Coordinates that can be positive in some point of {x >= 0 : A x = 0}.
//
// Solved as one exact LP:  max sum t  s.t.  A x = 0, 0 <= t_j <= x_j, t_j <= 1.
// At the optimum t_j = 1 exactly on the support. The equalities are removed
// by writing the pivot variables of rref(A) in terms of the free ones, after
// which every row is "<= nonnegative" and the origin is a feasible start.
// Dense tableau over GMP rationals with Bland's rule.

#include <gmpxx.h>

#include <algorithm>

#include "hilbert/kernels.hpp"

namespace oa::detail {

std::vector<bool> cone_support(const ActiveSystem& sys) {
    const std::size_t V = sys.vars, K = sys.cons;
    if (V == 0) return {};

    // rref of A
    std::vector<std::vector<mpq_class>> a(K, std::vector<mpq_class>(V));
    for (std::size_t j = 0; j < V; ++j)
        for (std::size_t r = 0; r < K; ++r) a[r][j] = sys.column(j)[r];
    std::vector<std::size_t> pivot_col;
    std::vector<bool> is_pivot(V, false);
    std::size_t row = 0;
    for (std::size_t c = 0; c < V && row < K; ++c) {
        std::size_t p = row;
        while (p < K && a[p][c] == 0) ++p;
        if (p == K) continue;
        std::swap(a[p], a[row]);
        const mpq_class inv = 1 / a[row][c];
        for (auto& x : a[row]) x *= inv;
        for (std::size_t r = 0; r < K; ++r) {
            if (r == row || a[r][c] == 0) continue;
            const mpq_class f = a[r][c];
            for (std::size_t j = 0; j < V; ++j) a[r][j] -= f * a[row][j];
        }
        pivot_col.push_back(c);
        is_pivot[c] = true;
        ++row;
    }
    std::vector<std::size_t> free_cols;
    std::vector<std::size_t> free_pos(V, 0);
    for (std::size_t j = 0; j < V; ++j)
        if (!is_pivot[j]) {
            free_pos[j] = free_cols.size();
            free_cols.push_back(j);
        }
    const std::size_t F = free_cols.size();
    if (F == 0) return std::vector<bool>(V, false);

    // x_b = -sum_f a[b][f] x_f for pivot b.
    // Structural columns: x_f (F of them), then t_j (V). Slacks follow.
    const std::size_t R = pivot_col.size();
    const std::size_t rows = R + V + V;
    const std::size_t nstruct = F + V;
    const std::size_t cols = nstruct + rows + 1;  // last column is the rhs
    std::vector<std::vector<mpq_class>> T(rows + 1, std::vector<mpq_class>(cols));
    std::size_t r = 0;
    for (std::size_t i = 0; i < R; ++i, ++r)  // x_b >= 0
        for (std::size_t f = 0; f < F; ++f) T[r][f] = a[i][free_cols[f]];
    for (std::size_t j = 0; j < V; ++j, ++r) {  // t_j <= x_j
        T[r][F + j] = 1;
        if (is_pivot[j]) {
            const std::size_t i = static_cast<std::size_t>(
                std::find(pivot_col.begin(), pivot_col.end(), j) - pivot_col.begin());
            for (std::size_t f = 0; f < F; ++f) T[r][f] = a[i][free_cols[f]];
        } else {
            T[r][free_pos[j]] = -1;
        }
    }
    for (std::size_t j = 0; j < V; ++j, ++r) {  // t_j <= 1
        T[r][F + j] = 1;
        T[r][cols - 1] = 1;
    }
    for (std::size_t i = 0; i < rows; ++i) T[i][nstruct + i] = 1;
    std::vector<std::size_t> basis(rows);
    for (std::size_t i = 0; i < rows; ++i) basis[i] = nstruct + i;
    // objective row holds reduced costs of "minimise -sum t"
    auto& z = T[rows];
    for (std::size_t j = 0; j < V; ++j) z[F + j] = -1;

    for (;;) {
        std::size_t enter = cols;
        for (std::size_t c = 0; c + 1 < cols; ++c)
            if (z[c] < 0) {
                enter = c;
                break;
            }
        if (enter == cols) break;
        std::size_t leave = rows;
        mpq_class best;
        for (std::size_t i = 0; i < rows; ++i) {
            if (T[i][enter] <= 0) continue;
            const mpq_class ratio = T[i][cols - 1] / T[i][enter];
            if (leave == rows || ratio < best || (ratio == best && basis[i] < basis[leave])) {
                leave = i;
                best = ratio;
            }
        }
        // t is bounded by 1 and x directions are scale-invariant, so no ray.
        if (leave == rows) break;
        const mpq_class inv = 1 / T[leave][enter];
        for (auto& x : T[leave]) x *= inv;
        for (std::size_t i = 0; i <= rows; ++i) {
            if (i == leave || T[i][enter] == 0) continue;
            const mpq_class f = T[i][enter];
            for (std::size_t c = 0; c < cols; ++c)
                if (T[leave][c] != 0) T[i][c] -= f * T[leave][c];
        }
        basis[leave] = enter;
    }

    std::vector<bool> support(V, false);
    for (std::size_t i = 0; i < rows; ++i)
        if (basis[i] >= F && basis[i] < nstruct && T[i][cols - 1] > 0) support[basis[i] - F] = true;
    return support;
}

}  // namespace oa::detail

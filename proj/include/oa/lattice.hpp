#pragma once

#include <cstddef>
#include <vector>

#include "oa/matrix.hpp"

namespace oa {

/// Integer basis of the lattice {x in Z^N : A x = 0}, one basis vector per
/// row. Built from unimodular column operations on A, so the rows generate
/// the full (saturated) kernel lattice, not just a finite-index sublattice.
IntMatrix integer_kernel_basis(const IntMatrix& a);

/// A lattice basis brought to pivot form by unimodular row operations.
struct PivotedBasis {
    IntMatrix rows;                    ///< same lattice as the input
    std::vector<std::size_t> pivots;   ///< pivot column of each row
    bool unimodular = true;            ///< every pivot entry is +1
};

/// Row-reduces a lattice basis so that row t has a nonzero at pivots[t] and
/// (when that entry is +1) zeros at the other pivot columns. Columns holding
/// a +-1 entry are preferred, which makes the projection onto the pivot
/// coordinates a bijection onto Z^d whenever the greedy choice succeeds.
PivotedBasis pivot_basis(const IntMatrix& basis);

}  // namespace oa

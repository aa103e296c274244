#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "oa/design.hpp"
#include "oa/matrix.hpp"

namespace oa {

/// M1: rows are the points of D(n) in canonical order, columns the exponents
/// of weight 1..m in canonical order; entry = X^alpha(a).
class ModelMatrix {
public:
    /// Raw constructor; entries are row-major 2^n x k. Only shapes are checked,
    /// so a perturbed matrix can be built and handed to verify_matrix.
    ModelMatrix(int n, int m, std::vector<ExponentVector> exponents, std::vector<std::int8_t> entries);

    int factors() const noexcept { return n_; }
    int strength() const noexcept { return m_; }
    std::size_t rows() const noexcept { return design_size(n_); }
    std::size_t cols() const noexcept { return exponents_.size(); }
    const std::vector<ExponentVector>& exponents() const noexcept { return exponents_; }

    int operator()(std::size_t row, std::size_t col) const { return entries_[row * cols() + col]; }
    std::span<const std::int8_t> row(std::size_t r) const {
        return {entries_.data() + r * cols(), cols()};
    }

    IntMatrix to_int_matrix() const;
    /// A = M1^t, the k x 2^n system matrix.
    IntMatrix transposed() const;

private:
    int n_;
    int m_;
    std::vector<ExponentVector> exponents_;
    std::vector<std::int8_t> entries_;
};

ModelMatrix build_model_matrix(int n, int m);

struct MatrixReport {
    bool entries_pm1 = true;
    bool column_zero_sums = true;
    bool columns_orthogonal = true;
    std::size_t rank = 0;
    bool full_column_rank = true;
    std::vector<std::string> failures;

    bool ok() const { return failures.empty(); }
};

/// Checks entries in {-1,+1}, zero column sums, pairwise column
/// orthogonality and rank = number of columns.
MatrixReport verify_matrix(const ModelMatrix& m);

/// Rank over the rationals, taken as the largest rank modulo three 61-bit
/// primes. A modular rank never exceeds the rational one; they differ only if
/// every prime divides all nonzero maximal minors.
std::size_t rational_rank(const IntMatrix& m);

}  // namespace oa

#pragma once

#include <cstddef>
#include <tuple>
#include <utility>
#include <vector>

#include "eulerloc/cell_complex.hpp"
#include "eulerloc/rational.hpp"

namespace eulerloc {

using RationalVector = std::vector<Rational>;

/// Row-major sparse matrix with exact entries. Rows are sorted by column and
/// never hold explicit zeros.
class SparseRationalMatrix {
public:
    using Row = std::vector<std::pair<std::size_t, Rational>>;
    using Triplet = std::tuple<std::size_t, std::size_t, Rational>;

    SparseRationalMatrix() = default;
    SparseRationalMatrix(std::size_t rows, std::size_t cols);

    /// Duplicate coordinates are summed; zero sums are dropped.
    static SparseRationalMatrix from_triplets(std::size_t rows, std::size_t cols, const std::vector<Triplet>& entries);

    std::size_t rows() const noexcept { return rows_.size(); }
    std::size_t cols() const noexcept { return cols_; }
    std::size_t nonzeros() const;

    const Row& row(std::size_t i) const { return rows_.at(i); }
    Rational at(std::size_t i, std::size_t j) const;

    SparseRationalMatrix transpose() const;
    RationalVector apply(const RationalVector& x) const;
    bool is_symmetric() const;

    /// Scales row i by row_scale[i] and column j by col_scale[j].
    SparseRationalMatrix scaled(const RationalVector& row_scale, const RationalVector& col_scale) const;

    friend SparseRationalMatrix operator*(const SparseRationalMatrix& a, const SparseRationalMatrix& b);
    friend SparseRationalMatrix operator+(const SparseRationalMatrix& a, const SparseRationalMatrix& b);
    friend bool operator==(const SparseRationalMatrix&, const SparseRationalMatrix&) = default;

private:
    std::size_t cols_ = 0;
    std::vector<Row> rows_;
};

/// Matrix of the boundary map C_k -> C_{k-1} in local cell indices
/// (rows: (k-1)-cells, columns: k-cells). Empty (0 x count(k)) for k = 0.
SparseRationalMatrix boundary_matrix(const CellComplex& complex, int k);

/// Reduced row echelon form over the rationals, for rank and kernel queries
/// on general (non-symmetric) matrices.
struct RowEchelon {
    std::vector<std::vector<std::pair<std::size_t, Rational>>> rows;  // pivot rows, normalized
    std::vector<std::size_t> pivots;                                  // pivot column per row
    std::size_t cols = 0;

    explicit RowEchelon(const SparseRationalMatrix& m);
    std::size_t rank() const noexcept { return pivots.size(); }
    /// Basis of the right kernel, one vector per free column (ascending).
    std::vector<RationalVector> kernel_basis() const;
};

}  // namespace eulerloc

#pragma once

#include <optional>
#include <vector>

#include "eulerloc/cell_complex.hpp"
#include "eulerloc/sparse_matrix.hpp"

namespace eulerloc {

/// Positive rational weight per cell id (a diagonal inner product).
using CellWeights = std::vector<Rational>;

/// Delta = d* d + d d* on C_k. With weights the stored matrix is the
/// symmetric form W_k Delta_k, which has the same kernel.
struct LaplacianOperator {
    const CellComplex* complex = nullptr;
    int dim = 0;
    SparseRationalMatrix matrix;
    std::optional<CellWeights> weights;

    std::size_t kernel_dimension() const;
};

/// Throws BadDimension unless 0 <= k <= top_dim, InvalidInput on
/// non-positive or missing weights.
LaplacianOperator laplacian(const CellComplex& complex, int k, const CellWeights* weights = nullptr);

/// dim ker Delta_k by exact rank.
std::size_t betti(const CellComplex& complex, int k);

/// Betti numbers in dimensions 0..top_dim.
std::vector<std::size_t> betti_numbers(const CellComplex& complex);

/// True when the Betti numbers are (1, 0, ..., 0, 1).
bool has_sphere_homology(const CellComplex& complex);

}  // namespace eulerloc

#pragma once

#include <memory>

#include "eulerloc/chain.hpp"
#include "eulerloc/laplacian.hpp"
#include "eulerloc/symmetric_solver.hpp"

namespace eulerloc {

/// Minimum-norm solutions of d x = a for k-chains a on a fixed complex.
/// x = W^{-1} B^T y with (B W^{-1} B^T) y = a, B the boundary matrix of
/// C_{k+1} -> C_k. The factorization is computed once and reused.
class HarmonicExtender {
public:
    /// Throws DimensionTop when k >= top_dim. Weights (one per cell id) give
    /// the experimental deformed inner product.
    HarmonicExtender(const CellComplex& complex, int k, const CellWeights* weights = nullptr);

    const CellComplex& complex() const noexcept { return *complex_; }
    int dim() const noexcept { return k_; }

    /// Throws NotClosed if d a != 0 and NotExact if a is not a boundary.
    RationalChain extend(const RationalChain& a) const;

private:
    const CellComplex* complex_;
    int k_;
    SparseRationalMatrix boundary_;  // rows: k-cells, cols: (k+1)-cells
    RationalVector inverse_weights_;  // by local (k+1)-index
    std::unique_ptr<SymmetricSolver> solver_;
};

/// One-shot convenience wrapper around HarmonicExtender.
RationalChain harmonic_extension(const RationalChain& a, const CellWeights* weights = nullptr);

}  // namespace eulerloc

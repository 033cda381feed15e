#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "eulerloc/sparse_matrix.hpp"

namespace eulerloc {

/// Exact LDL^T factorization of a symmetric positive semidefinite matrix
/// with diagonal pivoting. The pivot order is a greedy minimum-degree order
/// computed on the fly (ties go to the smallest index), so the result is
/// deterministic. Zero pivots are skipped; for a PSD matrix their remaining
/// rows are zero, which is checked.
class SymmetricSolver {
public:
    /// Throws InvalidInput if the matrix is not square/symmetric, or if a
    /// zero pivot has a nonzero off-diagonal remainder (not PSD).
    explicit SymmetricSolver(const SparseRationalMatrix& matrix);

    std::size_t size() const noexcept { return n_; }
    std::size_t rank() const noexcept { return rank_; }
    const std::vector<std::size_t>& pivot_order() const noexcept { return order_; }

    /// Some solution of A y = b, or nullopt when b is not in the range of A.
    /// Components belonging to zero pivots are set to zero.
    std::optional<RationalVector> solve(const RationalVector& rhs) const;

private:
    std::size_t n_ = 0;
    std::size_t rank_ = 0;
    std::vector<std::size_t> order_;
    std::vector<Rational> diag_;  // by original index; zero for skipped pivots
    // column of L below the pivot (original row indices, multipliers)
    std::vector<std::vector<std::pair<std::size_t, Rational>>> lower_;
};

}  // namespace eulerloc

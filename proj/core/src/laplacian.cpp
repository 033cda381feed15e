#include "eulerloc/laplacian.hpp"

#include "eulerloc/error.hpp"
#include "eulerloc/symmetric_solver.hpp"

namespace eulerloc {

namespace {

RationalVector weights_of(const CellComplex& complex, int k, const CellWeights* weights, bool invert)
{
    RationalVector out(complex.count(k), Rational(1));
    if (!weights)
        return out;
    for (std::size_t i = 0; i < out.size(); ++i) {
        const Rational& w = weights->at(complex.cell(k, i));
        out[i] = invert ? 1 / w : w;
    }
    return out;
}

void check_weights(const CellComplex& complex, const CellWeights* weights)
{
    if (!weights)
        return;
    if (weights->size() != complex.size())
        throw Error(ErrorKind::InvalidInput, "one weight per cell is required");
    for (const auto& w : *weights)
        if (w <= 0)
            throw Error(ErrorKind::InvalidInput, "weights must be positive");
}

}  // namespace

std::size_t LaplacianOperator::kernel_dimension() const
{
    const SymmetricSolver solver(matrix);
    return solver.size() - solver.rank();
}

LaplacianOperator laplacian(const CellComplex& complex, int k, const CellWeights* weights)
{
    if (k < 0 || k > complex.top_dim())
        throw Error(ErrorKind::BadDimension, "laplacian dimension out of range");
    check_weights(complex, weights);

    const std::size_t nk = complex.count(k);
    SparseRationalMatrix result(nk, nk);
    if (k > 0) {
        // B_k^T W_{k-1} B_k
        const auto b = boundary_matrix(complex, k);
        const auto wlow = weights_of(complex, k - 1, weights, false);
        const RationalVector ones(nk, Rational(1));
        result = result + b.transpose() * b.scaled(wlow, ones);
    }
    if (k < complex.top_dim()) {
        // W_k B_{k+1} W_{k+1}^{-1} B_{k+1}^T W_k
        const auto b = boundary_matrix(complex, k + 1);
        const auto wk = weights_of(complex, k, weights, false);
        const auto winv = weights_of(complex, k + 1, weights, true);
        const auto left = b.scaled(wk, winv);
        result = result + left * b.transpose().scaled(RationalVector(winv.size(), Rational(1)), wk);
    }
    LaplacianOperator op;
    op.complex = &complex;
    op.dim = k;
    op.matrix = std::move(result);
    if (weights)
        op.weights = *weights;
    return op;
}

std::size_t betti(const CellComplex& complex, int k)
{
    return laplacian(complex, k).kernel_dimension();
}

std::vector<std::size_t> betti_numbers(const CellComplex& complex)
{
    std::vector<std::size_t> out;
    for (int k = 0; k <= complex.top_dim(); ++k)
        out.push_back(betti(complex, k));
    return out;
}

bool has_sphere_homology(const CellComplex& complex)
{
    const auto b = betti_numbers(complex);
    if (b.size() == 1)
        return b[0] == 2;
    for (std::size_t k = 0; k < b.size(); ++k)
        if (b[k] != ((k == 0 || k + 1 == b.size()) ? 1u : 0u))
            return false;
    return true;
}

}  // namespace eulerloc

#include "eulerloc/harmonic.hpp"

#include "eulerloc/error.hpp"

namespace eulerloc {

HarmonicExtender::HarmonicExtender(const CellComplex& complex, int k, const CellWeights* weights)
    : complex_(&complex), k_(k)
{
    if (k < 0)
        throw Error(ErrorKind::BadDimension, "negative chain dimension");
    if (k >= complex.top_dim())
        throw Error(ErrorKind::DimensionTop, "no cells above dimension " + std::to_string(k));
    boundary_ = boundary_matrix(complex, k + 1);
    inverse_weights_.assign(complex.count(k + 1), Rational(1));
    if (weights) {
        if (weights->size() != complex.size())
            throw Error(ErrorKind::InvalidInput, "one weight per cell is required");
        for (std::size_t i = 0; i < inverse_weights_.size(); ++i) {
            const Rational& w = weights->at(complex.cell(k + 1, i));
            if (w <= 0)
                throw Error(ErrorKind::InvalidInput, "weights must be positive");
            inverse_weights_[i] = 1 / w;
        }
    }
    const RationalVector ones(complex.count(k), Rational(1));
    const auto normal = boundary_.scaled(ones, inverse_weights_) * boundary_.transpose();
    solver_ = std::make_unique<SymmetricSolver>(normal);
}

RationalChain HarmonicExtender::extend(const RationalChain& a) const
{
    if (&a.complex() != complex_ || a.dim() != k_)
        throw Error(ErrorKind::BadDimension, "chain does not match the extender");
    if (k_ > 0 && !boundary(a).is_zero())
        throw Error(ErrorKind::NotClosed, "input chain has nonzero boundary");

    RationalVector rhs(complex_->count(k_));
    for (const auto& [c, v] : a.terms())
        rhs[complex_->local_index(c)] = v;
    const auto y = solver_->solve(rhs);
    if (!y)
        throw Error(ErrorKind::NotExact, "input chain is not a boundary");

    RationalChain x(*complex_, k_ + 1);
    const auto bt = boundary_.transpose();
    const auto v = bt.apply(*y);
    for (std::size_t i = 0; i < v.size(); ++i)
        if (v[i] != 0)
            x.add(complex_->cell(k_ + 1, i), v[i] * inverse_weights_[i]);
    return x;
}

RationalChain harmonic_extension(const RationalChain& a, const CellWeights* weights)
{
    return HarmonicExtender(a.complex(), a.dim(), weights).extend(a);
}

}  // namespace eulerloc

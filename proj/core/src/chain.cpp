#include "eulerloc/chain.hpp"

#include <string>

#include "eulerloc/error.hpp"

namespace eulerloc {

RationalChain::RationalChain(const CellComplex& complex, int dim) : complex_(&complex), dim_(dim)
{
    if (dim < 0 || dim > std::max(complex.top_dim(), 0))
        throw Error(ErrorKind::BadDimension, "chain dimension " + std::to_string(dim) + " out of range");
}

RationalChain RationalChain::cell(const CellComplex& complex, CellId c, const Rational& coeff)
{
    RationalChain out(complex, complex.dim(c));
    out.add(c, coeff);
    return out;
}

Rational RationalChain::operator[](CellId c) const
{
    auto it = terms_.find(c);
    return it == terms_.end() ? Rational(0) : it->second;
}

void RationalChain::add(CellId c, const Rational& value)
{
    if (c >= complex_->size() || complex_->dim(c) != dim_)
        throw Error(ErrorKind::BadDimension,
                    "cell " + std::to_string(c) + " is not a " + std::to_string(dim_) + "-cell");
    if (value == 0)
        return;
    auto [it, inserted] = terms_.try_emplace(c, value);
    if (!inserted) {
        it->second += value;
        if (it->second == 0)
            terms_.erase(it);
    }
}

void RationalChain::check_compatible(const RationalChain& other) const
{
    if (complex_ != other.complex_ || dim_ != other.dim_)
        throw Error(ErrorKind::BadDimension, "chains live on different complexes or dimensions");
}

RationalChain& RationalChain::operator+=(const RationalChain& other)
{
    check_compatible(other);
    for (const auto& [c, v] : other.terms_)
        add(c, v);
    return *this;
}

RationalChain& RationalChain::operator-=(const RationalChain& other)
{
    check_compatible(other);
    for (const auto& [c, v] : other.terms_)
        add(c, -v);
    return *this;
}

RationalChain& RationalChain::operator*=(const Rational& scalar)
{
    if (scalar == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [c, v] : terms_)
        v *= scalar;
    return *this;
}

bool operator==(const RationalChain& a, const RationalChain& b)
{
    return a.complex_ == b.complex_ && a.dim_ == b.dim_ && a.terms_ == b.terms_;
}

Rational inner(const RationalChain& a, const RationalChain& b)
{
    if (&a.complex() != &b.complex() || a.dim() != b.dim())
        throw Error(ErrorKind::BadDimension, "inner product of incompatible chains");
    Rational sum = 0;
    const auto& small = a.terms().size() <= b.terms().size() ? a : b;
    const auto& large = &small == &a ? b : a;
    for (const auto& [c, v] : small.terms()) {
        auto it = large.terms().find(c);
        if (it != large.terms().end())
            sum += v * it->second;
    }
    return sum;
}

RationalChain boundary(const RationalChain& c)
{
    if (c.dim() == 0)
        throw Error(ErrorKind::DimensionZero, "boundary of a 0-chain");
    RationalChain out(c.complex(), c.dim() - 1);
    for (const auto& [cell, v] : c.terms())
        for (const auto& f : c.complex().faces(cell))
            out.add(f.cell, f.sign * v);
    return out;
}

RationalChain coboundary(const RationalChain& c)
{
    if (c.dim() >= c.complex().top_dim())
        throw Error(ErrorKind::DimensionTop, "coboundary of a top-dimensional chain");
    RationalChain out(c.complex(), c.dim() + 1);
    for (const auto& [cell, v] : c.terms())
        for (const auto& f : c.complex().cofaces(cell))
            out.add(f.cell, f.sign * v);
    return out;
}

}  // namespace eulerloc

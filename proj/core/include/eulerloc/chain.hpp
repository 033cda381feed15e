#pragma once

#include <map>

#include "eulerloc/cell_complex.hpp"
#include "eulerloc/rational.hpp"

namespace eulerloc {

/// Sparse exact chain of a fixed dimension over a CellComplex. Zero
/// coefficients are never stored. The complex is referenced, not owned.
class RationalChain {
public:
    using Terms = std::map<CellId, Rational>;

    RationalChain(const CellComplex& complex, int dim);

    static RationalChain cell(const CellComplex& complex, CellId c, const Rational& coeff = 1);

    const CellComplex& complex() const noexcept { return *complex_; }
    int dim() const noexcept { return dim_; }
    const Terms& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }

    Rational operator[](CellId c) const;
    /// Adds `value` to the coefficient of c. Throws BadDimension if c has the
    /// wrong dimension.
    void add(CellId c, const Rational& value);

    RationalChain& operator+=(const RationalChain& other);
    RationalChain& operator-=(const RationalChain& other);
    RationalChain& operator*=(const Rational& scalar);

    friend RationalChain operator+(RationalChain a, const RationalChain& b) { return a += b; }
    friend RationalChain operator-(RationalChain a, const RationalChain& b) { return a -= b; }
    friend RationalChain operator*(const Rational& s, RationalChain a) { return a *= s; }
    friend RationalChain operator-(RationalChain a) { return a *= Rational(-1); }

    /// Same complex, same dimension, same coefficients.
    friend bool operator==(const RationalChain& a, const RationalChain& b);

private:
    void check_compatible(const RationalChain& other) const;

    const CellComplex* complex_;
    int dim_;
    Terms terms_;
};

/// Cell-orthonormal inner product.
Rational inner(const RationalChain& a, const RationalChain& b);

/// Throws DimensionZero for 0-chains.
RationalChain boundary(const RationalChain& c);

/// Adjoint of `boundary` for the cell-orthonormal inner product.
/// Throws DimensionTop when c.dim() >= top_dim().
RationalChain coboundary(const RationalChain& c);

}  // namespace eulerloc

#pragma once

#include <vector>

#include "eulerloc/chain.hpp"

namespace eulerloc {

/// Coherent orientation of the top cells of a closed pseudomanifold.
/// `signs[i]` belongs to the i-th top cell (local index).
struct OrientationClass {
    std::vector<int> signs;
    CellId reference = 0;

    int sign(const CellComplex& complex, CellId top_cell) const
    {
        return signs.at(complex.local_index(top_cell));
    }
    OrientationClass negated() const;

    friend bool operator==(const OrientationClass&, const OrientationClass&) = default;
};

/// Propagates `reference_sign` from `reference` across every codimension-one
/// cell. Throws NotPseudomanifold if some (top-1)-cell does not have exactly
/// two top cofaces or the top cells are not connected through them, and
/// NotOrientable if propagation around a cycle fails.
OrientationClass orient(const CellComplex& complex, CellId reference, int reference_sign = 1);

/// Reads an orientation off a chain whose coefficients are +-1 on every
/// top cell and which is closed. Throws NotOrientable otherwise.
OrientationClass orientation_from_chain(const RationalChain& chain);

/// The closed top-dimensional chain with coefficients given by `orientation`.
RationalChain fundamental_class(const CellComplex& complex, const OrientationClass& orientation);

}  // namespace eulerloc

#pragma once

#include <cstdint>

#include "eulerloc/chain.hpp"

namespace eulerloc {

/// The unique top chain C with d C = sigma and C(base) = 0 on a closed
/// pseudomanifold, accumulated along a spanning tree of the dual graph of
/// top cells. `seed` shuffles the traversal (and so the tree); seed 0 is
/// plain breadth-first order. Throws Inconsistent if the accumulated chain
/// does not have boundary sigma.
RationalChain winding_patch(const RationalChain& sigma, CellId base, std::uint64_t seed = 0);

/// C - m * fundamental, where C is winding_patch from the first top cell and
/// m is the mean of C(A) * fundamental(A) over the top cells A containing
/// `vertex`.
RationalChain winding_chain(const RationalChain& sigma, const RationalChain& fundamental, CellId vertex);

/// Top cells containing a vertex (upward closure).
std::vector<CellId> top_cells_at(const CellComplex& complex, CellId vertex);

/// Coefficient e with chain = e * fundamental. Throws NotClosedFinal when
/// the chain is not closed or not proportional.
Rational fundamental_coefficient(const RationalChain& chain, const RationalChain& fundamental);

}  // namespace eulerloc

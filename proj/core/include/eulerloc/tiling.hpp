#pragma once

#include <map>
#include <optional>
#include <vector>

#include "eulerloc/bundle.hpp"
#include "eulerloc/cell_complex.hpp"
#include "eulerloc/chain.hpp"
#include "eulerloc/orientation.hpp"
#include "eulerloc/validation.hpp"

namespace eulerloc {

/// T_F: the total simplices whose image is exactly the base face F, graded
/// by dim - (|F| - 1). A tile is the product of its per-color simplices and
/// carries the product-cell incidence signs; over a single base vertex these
/// are the ordinary simplicial signs.
struct TilingComplex {
    Simplex face;
    int n = 0;
    std::vector<Simplex> tiles;  // indexed by cell id
    std::map<Simplex, CellId> ids;
    CellComplex complex;

    int tile_dim(const Simplex& s) const { return static_cast<int>(s.size() - face.size()); }
    std::optional<CellId> find(const Simplex& s) const;
};

/// Throws EmptyTiling when no tiles are given and InvalidInput when a tile
/// does not map onto `face`.
TilingComplex fiber_tiling(const TriangulatedBundle& bundle, const Simplex& face, std::vector<Simplex> tiles);

/// Gamma_F: the poset reversal of T_F with p = n - tile dimension and
/// incidence signs from assign_incidence_signs.
struct DualComplex {
    CellComplex complex;
    std::vector<CellId> dual_of_tile;
    std::vector<CellId> tile_of_dual;
    /// By local vertex index: the base vertex v when the dual top tile has
    /// n + 1 vertices over v (class A_v), otherwise empty.
    std::vector<std::optional<Vertex>> colors;

    CellId vertex_of_tile(CellId tile) const { return dual_of_tile.at(tile); }
    std::vector<CellId> colored_vertices(Vertex base_vertex) const;
    /// Top cells of Gamma containing the given vertex.
    std::vector<CellId> star_top_cells(CellId vertex) const;
};

/// Throws LemmaViolation when a colored vertex does not lie in exactly
/// n + 1 top cells.
DualComplex dual_complex(const TriangulatedBundle& bundle, const TilingComplex& tiling);

/// Gamma fundamental class induced by an orientation of T through the
/// duality T_t <-> Gamma_{n-t}: gauge signs g with g(A) = orientation on top
/// tiles and g(tau) g(rho) = [c_tau : c_rho] (-1)^(t(tau)+1) [rho : tau]
/// across covers. The class is sum g(w) c_w over the tile vertices w.
/// Throws NotOrientable when the gauge is inconsistent.
RationalChain dual_fundamental(const TilingComplex& tiling, const DualComplex& dual, const OrientationClass& orientation);

/// Inverse of dual_fundamental.
OrientationClass tiling_orientation(const TilingComplex& tiling, const DualComplex& dual, const RationalChain& fundamental);

/// Sphere checks for T_F and Gamma_F plus the colored-vertex count.
ValidationReport validate_face(const TilingComplex& tiling, const DualComplex& dual);

}  // namespace eulerloc

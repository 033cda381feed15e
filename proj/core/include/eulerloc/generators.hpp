#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "eulerloc/bundle.hpp"

namespace eulerloc {

/// A base complex given by named vertices and oriented maximal simplices.
struct NamedComplex {
    std::vector<std::string> names;
    std::vector<Simplex> simplices;
    std::vector<int> orientations;  // parallel to simplices
};

/// "simplex2", "simplex3", "boundary3", "boundary4" or "torus7". Closed
/// bases carry a coherent orientation. Throws InvalidInput otherwise.
NamedComplex named_base(std::string_view name);

/// "cycleM" (M >= 3 vertices) or "boundaryK" (boundary of the K-simplex,
/// K >= 2). Throws InvalidInput otherwise.
SimplicialComplex named_fiber(std::string_view name);

/// Staircase triangulation of base x fiber: simplices are the chains that
/// increase strictly in (base rank, fiber rank). Vertex b x f gets id
/// b * |fiber| + f. Seed 0 ranks vertices by id; other seeds shuffle both
/// rankings, which changes the necklaces. Throws InvalidFiber unless the
/// fiber is a sphere.
BundleData gen_trivial(const NamedComplex& base, const SimplicialComplex& fiber, std::uint64_t seed = 0);

/// The bundled 12-vertex circle bundle over the boundary of the 3-simplex
/// with Euler number -1.
BundleData hopf_fixture();

/// Edges of the total space whose endpoints lie over the same base vertex.
std::vector<std::pair<Vertex, Vertex>> fiber_edges(const BundleData& data);

/// Stellar subdivision of the fiber edge {a, b}: a new vertex c over the
/// common base vertex; every simplex containing both is split into the
/// copies with b -> c and a -> c. Throws NotFiberEdge when a and b lie over
/// different base vertices, InvalidInput when {a, b} is not an edge.
BundleData subdivide_fiber_edge(const BundleData& data, Vertex a, Vertex b);

/// Renames total vertex v to perm[v]; orientation data follows.
BundleData relabel_total(const BundleData& data, const std::vector<Vertex>& perm);

/// Renames base vertex v to perm[v]; stored orientations keep the same
/// oriented vertex orders.
BundleData relabel_base(const BundleData& data, const std::vector<Vertex>& perm);

/// Deterministic permutation of 0..n-1 from a seed (Fisher-Yates over
/// mt19937_64); seed 0 is the identity.
std::vector<Vertex> seeded_permutation(std::size_t n, std::uint64_t seed);

}  // namespace eulerloc

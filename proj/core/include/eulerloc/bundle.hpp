#pragma once

#include <string>
#include <vector>

#include "eulerloc/rational.hpp"
#include "eulerloc/simplicial_complex.hpp"

namespace eulerloc {

/// Orientation of the fiber over `anchor`: a sign per top fiber simplex,
/// relative to its increasing vertex order.
struct FiberOrientation {
    Vertex anchor = 0;
    std::vector<std::pair<Simplex, int>> signs;

    friend bool operator==(const FiberOrientation&, const FiberOrientation&) = default;
};

struct ExpectedPairing {
    std::string cycle;
    Rational value;

    friend bool operator==(const ExpectedPairing&, const ExpectedPairing&) = default;
};

struct BundleMetadata {
    std::string kind;
    std::string provenance;
    std::vector<ExpectedPairing> expected_pairings;

    friend bool operator==(const BundleMetadata&, const BundleMetadata&) = default;
};

/// Raw description of a triangulated sphere bundle, as read from a file.
struct BundleData {
    int n = 0;
    std::vector<std::string> base_vertices;
    std::vector<Simplex> base_simplices;
    std::vector<int> base_orientations;  // parallel to base_simplices, or empty
    std::vector<std::string> total_vertices;
    std::vector<Simplex> total_simplices;
    std::vector<Vertex> vertex_map;
    std::vector<FiberOrientation> fiber_orientation;
    BundleMetadata metadata;

    friend bool operator==(const BundleData&, const BundleData&) = default;
};

/// A bundle with its base and total complexes built. Construction checks
/// only index ranges and simplex syntax (InvalidInput); the topological
/// conditions are checked by validate_bundle.
class TriangulatedBundle {
public:
    explicit TriangulatedBundle(BundleData data);

    const BundleData& data() const noexcept { return data_; }
    int n() const noexcept { return data_.n; }
    const SimplicialComplex& base() const noexcept { return base_; }
    const SimplicialComplex& total() const noexcept { return total_; }
    Vertex project(Vertex v) const { return data_.vertex_map.at(v); }

    /// Sorted set of base vertices hit by a total simplex.
    Simplex image(const Simplex& s) const;

    /// Stored orientation of a base simplex as a vertex order: increasing
    /// order, with the first two vertices swapped when the stored sign is -1.
    std::vector<Vertex> oriented(const Simplex& base_simplex) const;
    /// +1 or -1 relative to increasing order.
    int orientation_sign(const Simplex& base_simplex) const;

    /// Full subcomplex over one base vertex.
    SimplicialComplex fiber(Vertex base_vertex) const;

private:
    BundleData data_;
    SimplicialComplex base_;
    SimplicialComplex total_;
};

/// Same bundle with every fiber orientation sign negated.
BundleData flip_fiber_orientation(const BundleData& data);

}  // namespace eulerloc

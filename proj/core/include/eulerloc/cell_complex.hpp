#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace eulerloc {

using CellId = std::uint32_t;

/// Signed covering relation: `cell` is a facet (or cofacet) with incidence `sign`.
struct Incidence {
    CellId cell;
    int sign;

    friend bool operator==(const Incidence&, const Incidence&) = default;
};

/// Unsigned graded poset given by its covering pairs (lower, upper).
/// Cell dimensions must be non-decreasing in id order.
struct GradedPoset {
    std::vector<int> dims;
    std::vector<std::pair<CellId, CellId>> covers;
};

/// A signed covering triple (lower, upper, incidence).
struct SignedCover {
    CellId lower;
    CellId upper;
    int sign;
};

/// Graded regular CW complex stored as a poset with signed incidence numbers.
///
/// Cell ids are dense and grouped by dimension: all 0-cells first, then the
/// 1-cells, and so on. `local_index` gives the position of a cell inside its
/// dimension, which is the row/column index used by boundary matrices.
/// Immutable after construction.
class CellComplex {
public:
    CellComplex() = default;

    /// Throws Error(InvalidInput) on malformed covers (wrong dimension gap,
    /// unknown ids, signs outside {+1, -1}, duplicates, unsorted dims).
    CellComplex(std::vector<int> dims, const std::vector<SignedCover>& covers);

    std::size_t size() const noexcept { return dims_.size(); }
    int top_dim() const noexcept { return static_cast<int>(offsets_.size()) - 2; }
    int dim(CellId c) const { return dims_.at(c); }

    std::size_t count(int k) const;
    CellId cell(int k, std::size_t local) const { return static_cast<CellId>(offsets_.at(k) + local); }
    std::size_t local_index(CellId c) const { return c - offsets_[dims_[c]]; }

    /// Ids of all k-cells, in order.
    std::vector<CellId> cells(int k) const;

    std::span<const Incidence> faces(CellId c) const { return faces_.at(c); }
    std::span<const Incidence> cofaces(CellId c) const { return cofaces_.at(c); }

    /// Incidence [upper : lower], 0 when not a covering pair.
    int incidence(CellId upper, CellId lower) const;

    std::vector<SignedCover> covers() const;

private:
    std::vector<int> dims_;
    std::vector<std::size_t> offsets_;  // offsets_[k] = first id of dimension k; size top+2
    std::vector<std::vector<Incidence>> faces_;
    std::vector<std::vector<Incidence>> cofaces_;
};

/// Assigns incidence signs to a regular graded poset so that the boundary
/// squares to zero. Edges get -1 on their smaller-id endpoint and +1 on the
/// other; for higher cells the smallest facet gets +1 and the remaining
/// signs are propagated across ridges. Deterministic in the input order.
///
/// Throws DiamondViolation when an interval of length two does not have
/// exactly two middle elements (or an edge does not have two endpoints), and
/// SignInconsistency when propagation fails.
CellComplex assign_incidence_signs(const GradedPoset& poset);

}  // namespace eulerloc

#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "eulerloc/cell_complex.hpp"

namespace eulerloc {

using Vertex = std::uint32_t;
/// Strictly increasing vertex list.
using Simplex = std::vector<Vertex>;

/// Finite abstract simplicial complex, closed under faces. Simplices of each
/// dimension are kept in lexicographic order.
class SimplicialComplex {
public:
    SimplicialComplex() = default;

    /// Generated by `simplices` (any dimension, each strictly increasing).
    /// Throws InvalidInput on unsorted/duplicate vertices or ids >= vertex_bound.
    SimplicialComplex(std::size_t vertex_bound, const std::vector<Simplex>& simplices);

    std::size_t vertex_bound() const noexcept { return vertex_bound_; }
    int dim() const noexcept { return static_cast<int>(by_dim_.size()) - 1; }
    std::size_t count(int k) const;
    const std::vector<Simplex>& simplices(int k) const;
    std::vector<Simplex> maximal() const;

    bool contains(const Simplex& s) const { return index_.count(s) != 0; }
    /// Position inside its dimension.
    std::optional<std::size_t> index(const Simplex& s) const;

    /// Cell complex with simplicial signs [s : s - s_i] = (-1)^i. Cell ids
    /// are grouped by dimension in lexicographic order.
    CellComplex cell_complex() const;
    CellId cell_id(const Simplex& s) const;
    const Simplex& simplex(CellId id) const;

    /// Full subcomplex on the vertices with keep[v] true (labels preserved).
    SimplicialComplex full_subcomplex(const std::vector<bool>& keep) const;

private:
    std::size_t vertex_bound_ = 0;
    std::vector<std::vector<Simplex>> by_dim_;
    std::map<Simplex, std::size_t> index_;
    std::vector<std::size_t> offsets_;
};

/// Sign of the permutation taking `order` to its sorted arrangement.
int permutation_sign(const std::vector<Vertex>& order);

/// Boundary face obtained by dropping position i.
Simplex drop(const Simplex& s, std::size_t i);

/// Strictly increasing with no repeats.
bool is_sorted_simplex(const Simplex& s);

}  // namespace eulerloc

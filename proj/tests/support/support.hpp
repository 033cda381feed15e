#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "eulerloc/bundle.hpp"
#include "eulerloc/cell_complex.hpp"
#include "eulerloc/chain.hpp"
#include "eulerloc/error.hpp"
#include "eulerloc/rational.hpp"
#include "eulerloc/simplicial_complex.hpp"

namespace eulerloc::testing {

using Rng = std::mt19937_64;

struct Context {
    std::string label;
    BundleData data;
};

/// Trivial circle bundles with shuffled vertex orders and subdivided fiber
/// edges, plus the Hopf fixture and a relabelled copy. At least 20 entries.
std::vector<Context> n1_contexts();

/// Trivial bundle with `count` random fiber-edge subdivisions.
BundleData subdivided(BundleData data, int count, std::uint64_t seed);

/// p/q with |p| <= 6, 1 <= q <= 5.
Rational random_rational(Rng& rng);

/// Random k-chain touching each cell with probability `density`.
RationalChain random_chain(const CellComplex& complex, int k, Rng& rng, double density = 0.5);

/// Boundary of a random (k+1)-chain, so exact by construction.
RationalChain random_exact_chain(const CellComplex& complex, int k, Rng& rng);

/// Basis of the k-cycles by dense Gaussian elimination on the boundary
/// incidences read straight from the face lists.
std::vector<RationalChain> cycle_basis_oracle(const CellComplex& complex, int k);

/// Named cell complexes used by the linear-algebra properties.
struct NamedCellComplex {
    std::string label;
    SimplicialComplex simplicial;  // empty for non-simplicial complexes
    CellComplex complex;
};
std::vector<NamedCellComplex> sample_complexes();

/// Necklace of an n = 1 bundle over an increasing base triangle, read from
/// the total simplices alone: the tetrahedra over the triangle walked along
/// shared multicolored triangles. Letters are the positions 0, 1, 2 of the
/// doubled color. Starting point and direction are arbitrary.
std::vector<int> necklace_oracle(const BundleData& data, const Simplex& triangle);

/// True when `a` is a rotation of `b` or of its reversal.
bool same_necklace(const std::vector<int>& a, const std::vector<int>& b);

/// (#neg - #pos) / (2 #0 #1 #2), counting triples by position comparison.
Rational necklace_count_oracle(const std::vector<int>& word);

/// Chain from a list of (cell, coefficient) pairs.
RationalChain chain_of(const CellComplex& complex, int k, const std::vector<std::pair<CellId, Rational>>& terms);

/// Kind of the eulerloc::Error thrown by f, or nullopt when f returns.
template <typename F>
std::optional<ErrorKind> thrown_kind(F&& f)
{
    try {
        f();
    } catch (const Error& e) {
        return e.kind();
    }
    return std::nullopt;
}

}  // namespace eulerloc::testing

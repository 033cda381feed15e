#pragma once

#include <map>
#include <vector>

#include "eulerloc/euler_engine.hpp"

namespace eulerloc {

/// Rational value per (n+1)-simplex of the base. Values are stored for the
/// increasing vertex order; other orders pick up the permutation sign.
struct EulerCochain {
    int n = 0;
    Formula formula = Formula::Harmonic;
    std::map<Simplex, Rational> values;

    /// Throws InvalidInput for simplices without a value.
    Rational value(const std::vector<Vertex>& oriented) const;

    friend bool operator==(const EulerCochain&, const EulerCochain&) = default;
};

/// Averages the local values over all vertex tuples of every (n+1)-simplex.
/// Throws FormulaUnsupported for the necklace formula when n != 1.
EulerCochain euler_cochain(const BundleModel& model, Formula formula, std::size_t jobs = 1);
EulerCochain euler_cochain(const TriangulatedBundle& bundle, Formula formula, std::size_t jobs = 1);

/// Rational chain of oriented base simplices.
struct BaseCycle {
    int dim = 0;
    std::vector<std::pair<std::vector<Vertex>, Rational>> terms;
};

/// Boundary as a map from increasing faces to coefficients (zeros dropped).
std::map<Simplex, Rational> cycle_boundary(const BaseCycle& cycle);

/// Sum of coefficient * value. Throws NotCycle when the chain has a
/// boundary, InvalidInput for simplices of the wrong dimension.
Rational pair(const EulerCochain& cochain, const BaseCycle& cycle);

/// Fundamental cycle of a closed orientable base of dimension n + 1, signed
/// to agree with the stored orientation of its first top simplex.
BaseCycle fundamental_cycle(const TriangulatedBundle& bundle);

/// A basis of the rational k-cycles of a simplicial complex.
std::vector<BaseCycle> cycle_basis(const SimplicialComplex& complex, int k);

struct CoboundaryEntry {
    Simplex simplex;
    Rational value;
};

struct CoboundaryReport {
    std::vector<CoboundaryEntry> entries;  // one per (n+2)-simplex; empty means vacuous
    bool closed() const;
};

CoboundaryReport coboundary_check(const EulerCochain& cochain, const SimplicialComplex& base);

}  // namespace eulerloc

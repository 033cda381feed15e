#pragma once

#include <vector>

#include "eulerloc/bundle_model.hpp"

namespace eulerloc {

/// A 1-dimensional dual complex walked once in the direction of its
/// fundamental class: edges[k] runs from vertices[k] to vertices[k+1]
/// (cyclically) and has coefficient signs[k] in the fundamental class.
struct OrientedCircle {
    std::vector<CellId> vertices;
    std::vector<CellId> edges;
    std::vector<int> signs;
};

/// Throws NotPseudomanifold unless the complex is a single circle.
OrientedCircle oriented_circle(const RationalChain& fundamental);

/// Color word of Gamma_sigma for n = 1: positions (0, 1, 2) in the
/// increasing simplex, read along the fundamental class starting from the
/// first vertex. Uncolored vertices are skipped.
std::vector<int> necklace_word(const BundleModel& model, const Simplex& simplex);

/// (#neg - #pos) / (2 #0 #1 #2) over all triples with one bead of each
/// color; a triple is positive when its beads appear as 0, 1, 2 in cyclic
/// order. Throws InvalidInput when a color is missing.
Rational necklace_word_value(const std::vector<int>& word);

/// necklace_word_value of necklace_word. Throws FormulaUnsupported when n != 1.
Rational necklace_value(const BundleModel& model, const Simplex& simplex);

}  // namespace eulerloc

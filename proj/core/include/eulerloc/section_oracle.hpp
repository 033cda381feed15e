#pragma once

#include <array>
#include <vector>

#include "eulerloc/euler_engine.hpp"

namespace eulerloc {

/// For n = 1: which arc of the necklace circle joins the chosen beads on
/// each boundary edge (0,1), (1,2), (2,0) of the base triangle. `forward`
/// follows the fundamental class, the other arc runs against it.
struct SectionPath {
    std::array<bool, 3> forward{};
};

/// The closed 1-chain on Gamma_sigma traced by a section path.
RationalChain section_loop(const BundleModel& model, const Simplex& simplex, const VertexTuple& tuple,
                           const SectionPath& path);

/// Fundamental-class coefficient of section_loop.
Rational section_degree(const BundleModel& model, const Simplex& simplex, const VertexTuple& tuple,
                        const SectionPath& path);

/// The eight section paths in a fixed order.
std::vector<SectionPath> all_section_paths();

/// Mean degree over the eight section paths. Throws FormulaUnsupported
/// when n != 1.
Rational n1_section_oracle(const BundleModel& model, const Simplex& simplex, const VertexTuple& tuple);

}  // namespace eulerloc

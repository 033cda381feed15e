#pragma once

#include <span>
#include <vector>

#include "eulerloc/tiling.hpp"

namespace eulerloc {

/// Chain map rho: C(Gamma_J) -> C(Gamma_I) for faces J contained in I.
///
/// The cell dual to a tile D_J goes to a signed sum of the cells dual to the
/// tiles D_I whose trace over J (the vertices lying over J) is D_J and which
/// have exactly one vertex over each base vertex of I \ J. On vertices the
/// image is that unique tile with sign +1; in higher dimensions the signs
/// are solved from d rho = rho d and then checked on every cell.
class RefinementMap {
public:
    /// `inputs_validated` states that both faces passed validate_face; it
    /// only changes the wording of ChainMapViolation diagnostics. Throws
    /// InclusionMissing / InclusionAmbiguous on vertices and
    /// ChainMapViolation when no consistent signs exist.
    RefinementMap(const TriangulatedBundle& bundle, const TilingComplex& source_tiling, const DualComplex& source,
                  const TilingComplex& target_tiling, const DualComplex& target, bool inputs_validated = true);

    const Simplex& source_face() const noexcept { return source_face_; }
    const Simplex& target_face() const noexcept { return target_face_; }
    const CellComplex& source() const noexcept { return *source_; }
    const CellComplex& target() const noexcept { return *target_; }

    std::span<const Incidence> image(CellId source_cell) const { return images_.at(source_cell); }
    RationalChain apply(const RationalChain& chain) const;

    /// d(rho c) == rho(d c) for every cell c of dimension >= 1.
    bool is_chain_map() const;

private:
    Simplex source_face_;
    Simplex target_face_;
    const CellComplex* source_;
    const CellComplex* target_;
    std::vector<std::vector<Incidence>> images_;
};

}  // namespace eulerloc

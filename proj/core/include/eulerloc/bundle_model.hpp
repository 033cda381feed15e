#pragma once

#include <map>
#include <memory>
#include <optional>
#include <vector>

#include "eulerloc/bundle.hpp"
#include "eulerloc/refinement.hpp"
#include "eulerloc/tiling.hpp"
#include "eulerloc/validation.hpp"

namespace eulerloc {

/// T_F, Gamma_F and their orientations for one base face F.
struct FaceModel {
    TilingComplex tiling;
    DualComplex dual;
    ValidationReport report;
    OrientationClass tiling_orientation;
    OrientationClass dual_orientation;
    std::optional<RationalChain> fundamental;  // on dual.complex
};

struct ModelOptions {
    std::size_t jobs = 1;
    /// Run validate_face on every face (sphere checks are the costly part).
    bool validate_faces = true;
};

/// The dual complex family of a bundle: every base face of dimension at
/// most n + 1, the refinement maps between nested faces and the transported
/// fiber orientation. Immutable after construction; safe to share.
class BundleModel {
public:
    /// Throws on the first structural failure: EmptyTiling, LemmaViolation,
    /// InclusionMissing/InclusionAmbiguous, ChainMapViolation, NotOrientable,
    /// NonOrientableTransport, or InvalidInput for unusable orientation data.
    explicit BundleModel(const TriangulatedBundle& bundle, ModelOptions options = {});

    BundleModel(const BundleModel&) = delete;
    BundleModel& operator=(const BundleModel&) = delete;

    const TriangulatedBundle& bundle() const noexcept { return *bundle_; }
    int n() const noexcept { return bundle_->n(); }

    /// Base (n+1)-simplices, increasing.
    const std::vector<Simplex>& top_simplices() const noexcept { return top_; }
    std::vector<Simplex> faces() const;

    const FaceModel& face(const Simplex& f) const;
    const RefinementMap& refinement(const Simplex& from, const Simplex& to) const;
    std::size_t refinement_count() const noexcept { return refinements_.size(); }
    const RationalChain& fundamental(const Simplex& f) const { return *face(f).fundamental; }

    /// Vertices of the fiber dual complex Gamma_v.
    std::vector<CellId> fiber_vertices(Vertex base_vertex) const;

    /// The vertex of Gamma_I whose tile has the fiber tile dual to V as its
    /// trace over v (class A_v).
    CellId include_vertex(Vertex base_vertex, CellId fiber_vertex, const Simplex& face) const;

private:
    void build_faces(const ModelOptions& options);
    void build_refinements(const ModelOptions& options);
    void orient_family();

    const TriangulatedBundle* bundle_;
    std::vector<Simplex> top_;
    std::map<Simplex, std::unique_ptr<FaceModel>> faces_;
    std::map<std::pair<Simplex, Simplex>, std::unique_ptr<RefinementMap>> refinements_;
    bool faces_validated_ = false;
};

/// Simplicial-map condition, fiber sphere checks, orientation data, then
/// the full family construction. Never throws on bad bundles.
ValidationReport validate_bundle(const TriangulatedBundle& bundle, ModelOptions options = {});

}  // namespace eulerloc

#pragma once

#include <atomic>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <shared_mutex>
#include <string_view>
#include <vector>

#include "eulerloc/bundle_model.hpp"
#include "eulerloc/harmonic.hpp"

namespace eulerloc {

enum class Formula { Harmonic, Winding, Necklace };

std::string_view formula_name(Formula f);
/// "harmonic", "winding" or "necklace".
std::optional<Formula> parse_formula(std::string_view text);

/// One chosen vertex of Gamma_v for each vertex v of an increasing base
/// simplex (same order).
using VertexTuple = std::vector<CellId>;

struct LocalValue {
    Rational value;
    Simplex simplex;  // increasing order; the value is for that orientation
    VertexTuple tuple;
    Formula formula;
};

/// Intermediate chains of the winding-number formula, kept for checks.
struct WindingDetail {
    std::vector<RationalChain> sigma_hat;  // refined into Gamma_sigma, one per omitted position
    std::vector<RationalChain> patches;
    RationalChain total;                   // the closed chain E
    Rational value;
};

/// Evaluates both local formulae on a bundle model. Chains Sigma_F are cached
/// per base face and vertex choice (write-once, safe for concurrent readers),
/// so neighbouring simplices share them.
class EulerEngine {
public:
    explicit EulerEngine(const BundleModel& model);

    const BundleModel& model() const noexcept { return *model_; }

    /// All tuples over an increasing base simplex, in lexicographic order.
    std::vector<VertexTuple> tuples(const Simplex& simplex) const;

    /// Sigma over an increasing face (|F| >= 1) for the given vertex choices.
    /// |F| = 1 gives the vertex itself; otherwise the harmonic extension of
    /// sum_i (-1)^i rho(Sigma_{F - f_i}) in Gamma_F.
    const RationalChain& sigma(const Simplex& face, const VertexTuple& tuple) const;

    /// Throws NotClosedFinal or NotExact.
    LocalValue formula1(const Simplex& simplex, const VertexTuple& tuple) const;
    /// Throws CancellationViolation or NotClosedFinal.
    LocalValue formula2(const Simplex& simplex, const VertexTuple& tuple) const;
    WindingDetail formula2_detail(const Simplex& simplex, const VertexTuple& tuple) const;

    /// Mean of the local values over all tuples (increasing orientation).
    Rational average(const Simplex& simplex, Formula formula, std::size_t jobs = 1) const;

    /// Number of formula-2 evaluations whose cancellation check ran.
    std::size_t cancellation_checks() const noexcept { return cancellation_checks_.load(); }

private:
    const HarmonicExtender& extender(const Simplex& face) const;

    const BundleModel* model_;
    mutable std::shared_mutex cache_mutex_;
    mutable std::map<std::pair<Simplex, VertexTuple>, std::unique_ptr<RationalChain>> cache_;
    struct ExtenderSlot {
        std::once_flag once;
        std::unique_ptr<HarmonicExtender> extender;
    };
    std::map<Simplex, std::unique_ptr<ExtenderSlot>> extenders_;
    mutable std::atomic<std::size_t> cancellation_checks_{0};
};

}  // namespace eulerloc

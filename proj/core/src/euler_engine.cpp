#include "eulerloc/euler_engine.hpp"

#include "eulerloc/error.hpp"
#include "eulerloc/necklace.hpp"
#include "eulerloc/parallel.hpp"
#include "eulerloc/winding.hpp"

namespace eulerloc {

std::string_view formula_name(Formula f)
{
    switch (f) {
    case Formula::Harmonic:
        return "harmonic";
    case Formula::Winding:
        return "winding";
    case Formula::Necklace:
        return "necklace";
    }
    return "unknown";
}

std::optional<Formula> parse_formula(std::string_view text)
{
    for (Formula f : {Formula::Harmonic, Formula::Winding, Formula::Necklace})
        if (formula_name(f) == text)
            return f;
    return std::nullopt;
}

namespace {

Simplex without(const Simplex& s, std::initializer_list<std::size_t> positions)
{
    Simplex out;
    for (std::size_t i = 0; i < s.size(); ++i)
        if (std::find(positions.begin(), positions.end(), i) == positions.end())
            out.push_back(s[i]);
    return out;
}

VertexTuple restrict_tuple(const VertexTuple& t, std::initializer_list<std::size_t> positions)
{
    VertexTuple out;
    for (std::size_t i = 0; i < t.size(); ++i)
        if (std::find(positions.begin(), positions.end(), i) == positions.end())
            out.push_back(t[i]);
    return out;
}

int alt(std::size_t i)
{
    return i % 2 == 0 ? 1 : -1;
}

}  // namespace

EulerEngine::EulerEngine(const BundleModel& model) : model_(&model)
{
    for (const auto& f : model.faces())
        if (f.size() >= 2)
            extenders_.emplace(f, std::make_unique<ExtenderSlot>());
}

const HarmonicExtender& EulerEngine::extender(const Simplex& face) const
{
    auto& slot = *extenders_.at(face);
    std::call_once(slot.once, [&] {
        const auto& dual = model_->face(face).dual.complex;
        slot.extender = std::make_unique<HarmonicExtender>(dual, static_cast<int>(face.size()) - 2);
    });
    return *slot.extender;
}

std::vector<VertexTuple> EulerEngine::tuples(const Simplex& simplex) const
{
    std::vector<std::vector<CellId>> choices;
    for (Vertex v : simplex)
        choices.push_back(model_->fiber_vertices(v));
    std::vector<VertexTuple> out{{}};
    for (const auto& c : choices) {
        std::vector<VertexTuple> next;
        next.reserve(out.size() * c.size());
        for (const auto& prefix : out)
            for (CellId v : c) {
                auto t = prefix;
                t.push_back(v);
                next.push_back(std::move(t));
            }
        out = std::move(next);
    }
    return out;
}

const RationalChain& EulerEngine::sigma(const Simplex& face, const VertexTuple& tuple) const
{
    if (face.size() != tuple.size() || face.empty())
        throw Error(ErrorKind::InvalidInput, "tuple does not match the face");
    const auto key = std::make_pair(face, tuple);
    {
        std::shared_lock lock(cache_mutex_);
        auto it = cache_.find(key);
        if (it != cache_.end())
            return *it->second;
    }

    std::unique_ptr<RationalChain> value;
    if (face.size() == 1) {
        value = std::make_unique<RationalChain>(
            RationalChain::cell(model_->face(face).dual.complex, tuple[0]));
    } else {
        const auto& dual = model_->face(face).dual.complex;
        RationalChain a(dual, static_cast<int>(face.size()) - 2);
        for (std::size_t i = 0; i < face.size(); ++i) {
            const Simplex sub = without(face, {i});
            const auto& lower = sigma(sub, restrict_tuple(tuple, {i}));
            auto refined = model_->refinement(sub, face).apply(lower);
            refined *= alt(i);
            a += refined;
        }
        value = std::make_unique<RationalChain>(extender(face).extend(a));
    }

    std::unique_lock lock(cache_mutex_);
    auto [it, inserted] = cache_.emplace(key, std::move(value));
    return *it->second;
}

LocalValue EulerEngine::formula1(const Simplex& simplex, const VertexTuple& tuple) const
{
    if (simplex.size() != static_cast<std::size_t>(model_->n() + 2))
        throw Error(ErrorKind::BadDimension, "formula needs an (n+1)-simplex of the base");
    const auto& dual = model_->face(simplex).dual.complex;
    RationalChain total(dual, model_->n());
    for (std::size_t i = 0; i < simplex.size(); ++i) {
        const Simplex sub = without(simplex, {i});
        auto refined = model_->refinement(sub, simplex).apply(sigma(sub, restrict_tuple(tuple, {i})));
        refined *= alt(i);
        total += refined;
    }
    return {fundamental_coefficient(total, model_->fundamental(simplex)), simplex, tuple, Formula::Harmonic};
}

WindingDetail EulerEngine::formula2_detail(const Simplex& simplex, const VertexTuple& tuple) const
{
    const int n = model_->n();
    if (simplex.size() != static_cast<std::size_t>(n + 2))
        throw Error(ErrorKind::BadDimension, "formula needs an (n+1)-simplex of the base");
    const auto& dual = model_->face(simplex).dual.complex;
    const auto& fund = model_->fundamental(simplex);
    const std::size_t m = simplex.size();

    WindingDetail out{{}, {}, RationalChain(dual, n), 0};
    RationalChain cancel(dual, n - 1);
    for (std::size_t i = 0; i < m; ++i) {
        RationalChain hat(dual, n - 1);
        for (std::size_t j = 0; j < m; ++j) {
            if (j == i)
                continue;
            const Simplex sub = without(simplex, {i, j});
            auto refined = model_->refinement(sub, simplex).apply(sigma(sub, restrict_tuple(tuple, {i, j})));
            refined *= alt(i) * alt(j + (j > i ? 1 : 0));
            hat += refined;
        }
        cancel += hat;
        out.sigma_hat.push_back(std::move(hat));
    }
    ++cancellation_checks_;
    if (!cancel.is_zero())
        throw Error(ErrorKind::CancellationViolation, "sum of the refined Sigma-hat chains is not zero");

    std::vector<CellId> included;
    for (std::size_t j = 0; j < m; ++j)
        included.push_back(model_->include_vertex(simplex[j], tuple[j], simplex));

    const CellId base = dual.cell(n, 0);
    for (std::size_t i = 0; i < m; ++i) {
        auto patch = winding_patch(out.sigma_hat[i], base);
        for (std::size_t j = 0; j < m; ++j) {
            if (j == i)
                continue;
            const auto star = top_cells_at(dual, included[j]);
            Rational mean = 0;
            for (CellId a : star)
                mean += patch[a] * fund[a];
            mean /= static_cast<long>(star.size());
            out.total += patch - mean * fund;
        }
        out.patches.push_back(std::move(patch));
    }
    out.total *= Rational(1, n + 1);
    out.value = fundamental_coefficient(out.total, fund);
    return out;
}

LocalValue EulerEngine::formula2(const Simplex& simplex, const VertexTuple& tuple) const
{
    return {formula2_detail(simplex, tuple).value, simplex, tuple, Formula::Winding};
}

Rational EulerEngine::average(const Simplex& simplex, Formula formula, std::size_t jobs) const
{
    if (formula == Formula::Necklace)
        return necklace_value(*model_, simplex);
    const auto all = tuples(simplex);
    std::vector<Rational> values(all.size());
    parallel_for(jobs, all.size(), [&](std::size_t k) {
        values[k] = formula == Formula::Harmonic ? formula1(simplex, all[k]).value : formula2(simplex, all[k]).value;
    });
    Rational sum = 0;
    for (const auto& v : values)
        sum += v;
    return sum / static_cast<long>(values.size());
}

}  // namespace eulerloc

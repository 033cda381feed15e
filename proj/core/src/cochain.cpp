#include "eulerloc/cochain.hpp"

#include <algorithm>

#include "eulerloc/error.hpp"
#include "eulerloc/necklace.hpp"
#include "eulerloc/orientation.hpp"
#include "eulerloc/parallel.hpp"
#include "eulerloc/sparse_matrix.hpp"

namespace eulerloc {

Rational EulerCochain::value(const std::vector<Vertex>& oriented) const
{
    Simplex sorted = oriented;
    std::sort(sorted.begin(), sorted.end());
    auto it = values.find(sorted);
    if (it == values.end())
        throw Error(ErrorKind::InvalidInput, "cochain has no value on the given simplex");
    return permutation_sign(oriented) * it->second;
}

EulerCochain euler_cochain(const BundleModel& model, Formula formula, std::size_t jobs)
{
    EulerCochain out;
    out.n = model.n();
    out.formula = formula;
    const auto& tops = model.top_simplices();
    if (formula == Formula::Necklace) {
        if (model.n() != 1)
            throw Error(ErrorKind::FormulaUnsupported, "necklace formula needs circle fibers (n = 1)");
        for (const auto& s : tops)
            out.values.emplace(s, necklace_value(model, s));
        return out;
    }

    const EulerEngine engine(model);
    std::vector<std::pair<std::size_t, VertexTuple>> tasks;
    for (std::size_t i = 0; i < tops.size(); ++i)
        for (auto& t : engine.tuples(tops[i]))
            tasks.emplace_back(i, std::move(t));
    std::vector<Rational> local(tasks.size());
    parallel_for(jobs, tasks.size(), [&](std::size_t k) {
        const auto& [i, t] = tasks[k];
        local[k] = formula == Formula::Harmonic ? engine.formula1(tops[i], t).value : engine.formula2(tops[i], t).value;
    });
    std::vector<Rational> sums(tops.size());
    std::vector<long> counts(tops.size(), 0);
    for (std::size_t k = 0; k < tasks.size(); ++k) {
        sums[tasks[k].first] += local[k];
        ++counts[tasks[k].first];
    }
    for (std::size_t i = 0; i < tops.size(); ++i)
        out.values.emplace(tops[i], counts[i] ? sums[i] / counts[i] : Rational(0));
    return out;
}

EulerCochain euler_cochain(const TriangulatedBundle& bundle, Formula formula, std::size_t jobs)
{
    if (formula == Formula::Necklace && bundle.n() != 1)
        throw Error(ErrorKind::FormulaUnsupported, "necklace formula needs circle fibers (n = 1)");
    ModelOptions options;
    options.jobs = jobs;
    const BundleModel model(bundle, options);
    return euler_cochain(model, formula, jobs);
}

std::map<Simplex, Rational> cycle_boundary(const BaseCycle& cycle)
{
    std::map<Simplex, Rational> out;
    if (cycle.dim == 0)
        return out;
    for (const auto& [oriented, coeff] : cycle.terms) {
        for (std::size_t i = 0; i < oriented.size(); ++i) {
            std::vector<Vertex> face = drop(oriented, i);
            const int sign = (i % 2 == 0 ? 1 : -1) * permutation_sign(face);
            std::sort(face.begin(), face.end());
            out[face] += sign * coeff;
        }
    }
    std::erase_if(out, [](const auto& e) { return e.second == 0; });
    return out;
}

Rational pair(const EulerCochain& cochain, const BaseCycle& cycle)
{
    if (cycle.dim != cochain.n + 1)
        throw Error(ErrorKind::InvalidInput, "cycle dimension does not match the cochain");
    for (const auto& [s, c] : cycle.terms)
        if (s.size() != static_cast<std::size_t>(cycle.dim + 1))
            throw Error(ErrorKind::InvalidInput, "cycle term has the wrong number of vertices");
    if (!cycle_boundary(cycle).empty())
        throw Error(ErrorKind::NotCycle, "chain has nonzero boundary");
    Rational sum = 0;
    for (const auto& [s, c] : cycle.terms)
        sum += c * cochain.value(s);
    return sum;
}

BaseCycle fundamental_cycle(const TriangulatedBundle& bundle)
{
    const auto& base = bundle.base();
    const int top = bundle.n() + 1;
    if (base.dim() != top)
        throw Error(ErrorKind::NotCycle, "base is not a closed (n+1)-dimensional complex");
    const auto cc = base.cell_complex();
    const auto& first = base.simplices(top).front();
    const auto orientation = orient(cc, base.cell_id(first), bundle.orientation_sign(first));
    BaseCycle out;
    out.dim = top;
    for (const auto& s : base.simplices(top))
        out.terms.push_back({s, Rational(orientation.sign(cc, base.cell_id(s)))});
    return out;
}

std::vector<BaseCycle> cycle_basis(const SimplicialComplex& complex, int k)
{
    const auto cc = complex.cell_complex();
    std::vector<BaseCycle> out;
    if (k < 0 || k > complex.dim())
        return out;
    const auto& simplices = complex.simplices(k);
    std::vector<RationalVector> kernel;
    if (k == 0) {
        for (std::size_t i = 0; i < simplices.size(); ++i) {
            RationalVector v(simplices.size());
            v[i] = 1;
            kernel.push_back(std::move(v));
        }
    } else {
        kernel = RowEchelon(boundary_matrix(cc, k)).kernel_basis();
    }
    for (const auto& v : kernel) {
        BaseCycle c;
        c.dim = k;
        for (std::size_t i = 0; i < v.size(); ++i)
            if (v[i] != 0)
                c.terms.push_back({simplices[i], v[i]});
        out.push_back(std::move(c));
    }
    return out;
}

bool CoboundaryReport::closed() const
{
    return std::all_of(entries.begin(), entries.end(), [](const CoboundaryEntry& e) { return e.value == 0; });
}

CoboundaryReport coboundary_check(const EulerCochain& cochain, const SimplicialComplex& base)
{
    CoboundaryReport report;
    for (const auto& s : base.simplices(cochain.n + 2)) {
        Rational v = 0;
        for (std::size_t i = 0; i < s.size(); ++i)
            v += (i % 2 == 0 ? 1 : -1) * cochain.value(drop(s, i));
        report.entries.push_back({s, v});
    }
    return report;
}

}  // namespace eulerloc

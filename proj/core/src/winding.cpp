#include "eulerloc/winding.hpp"

#include <algorithm>
#include <deque>
#include <random>
#include <set>

#include "eulerloc/error.hpp"

namespace eulerloc {

RationalChain winding_patch(const RationalChain& sigma, CellId base, std::uint64_t seed)
{
    const auto& complex = sigma.complex();
    const int top = complex.top_dim();
    if (sigma.dim() != top - 1)
        throw Error(ErrorKind::BadDimension, "winding patch needs a chain one below the top dimension");
    if (complex.dim(base) != top)
        throw Error(ErrorKind::BadDimension, "base cell is not a top cell");

    std::vector<Rational> value(complex.count(top));
    std::vector<bool> seen(complex.count(top), false);
    std::mt19937_64 rng(seed);
    std::deque<CellId> queue{base};
    seen[complex.local_index(base)] = true;
    while (!queue.empty()) {
        CellId a;
        if (seed == 0) {
            a = queue.front();
            queue.pop_front();
        } else {
            std::uniform_int_distribution<std::size_t> pick(0, queue.size() - 1);
            const auto it = queue.begin() + static_cast<std::ptrdiff_t>(pick(rng));
            a = *it;
            queue.erase(it);
        }
        std::vector<Incidence> faces(complex.faces(a).begin(), complex.faces(a).end());
        if (seed != 0)
            std::shuffle(faces.begin(), faces.end(), rng);
        const Rational& ca = value[complex.local_index(a)];
        for (const auto& f : faces) {
            const auto cof = complex.cofaces(f.cell);
            if (cof.size() != 2)
                throw Error(ErrorKind::NotPseudomanifold, "codimension-one cell without two top cofaces");
            const auto& other = cof[0].cell == a ? cof[1] : cof[0];
            const std::size_t b = complex.local_index(other.cell);
            if (seen[b])
                continue;
            // [A:f] C(A) + [B:f] C(B) = sigma(f)
            value[b] = (sigma[f.cell] - f.sign * ca) * other.sign;
            seen[b] = true;
            queue.push_back(other.cell);
        }
    }
    if (std::find(seen.begin(), seen.end(), false) != seen.end())
        throw Error(ErrorKind::NotPseudomanifold, "dual graph of top cells is disconnected");

    RationalChain out(complex, top);
    for (std::size_t i = 0; i < value.size(); ++i)
        if (value[i] != 0)
            out.add(complex.cell(top, i), value[i]);
    if (boundary(out) != sigma)
        throw Error(ErrorKind::Inconsistent, "winding numbers disagree around a dual cycle");
    return out;
}

std::vector<CellId> top_cells_at(const CellComplex& complex, CellId vertex)
{
    std::set<CellId> level{vertex};
    for (int d = complex.dim(vertex); d < complex.top_dim(); ++d) {
        std::set<CellId> next;
        for (CellId c : level)
            for (const auto& up : complex.cofaces(c))
                next.insert(up.cell);
        level = std::move(next);
    }
    return {level.begin(), level.end()};
}

RationalChain winding_chain(const RationalChain& sigma, const RationalChain& fundamental, CellId vertex)
{
    const auto& complex = sigma.complex();
    const auto patch = winding_patch(sigma, complex.cell(complex.top_dim(), 0));
    const auto star = top_cells_at(complex, vertex);
    if (star.empty())
        throw Error(ErrorKind::BadDimension, "vertex has no incident top cells");
    Rational mean = 0;
    for (CellId a : star)
        mean += patch[a] * fundamental[a];
    mean /= static_cast<long>(star.size());
    return patch - mean * fundamental;
}

Rational fundamental_coefficient(const RationalChain& chain, const RationalChain& fundamental)
{
    if (chain.dim() > 0 && !boundary(chain).is_zero())
        throw Error(ErrorKind::NotClosedFinal, "final chain has nonzero boundary");
    const auto& complex = fundamental.complex();
    const CellId first = complex.cell(complex.top_dim(), 0);
    const Rational e = chain[first] * fundamental[first];
    if (chain != e * fundamental)
        throw Error(ErrorKind::NotClosedFinal, "final chain is not a multiple of the fundamental class");
    return e;
}

}  // namespace eulerloc

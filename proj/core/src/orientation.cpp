#include "eulerloc/orientation.hpp"

#include <queue>
#include <string>

#include "eulerloc/error.hpp"

namespace eulerloc {

OrientationClass OrientationClass::negated() const
{
    OrientationClass out = *this;
    for (auto& s : out.signs)
        s = -s;
    return out;
}

OrientationClass orient(const CellComplex& complex, CellId reference, int reference_sign)
{
    const int top = complex.top_dim();
    if (top < 1)
        throw Error(ErrorKind::NotPseudomanifold, "complex has no cells of positive dimension");
    if (reference >= complex.size() || complex.dim(reference) != top)
        throw Error(ErrorKind::BadDimension, "reference cell is not a top cell");

    for (CellId r : complex.cells(top - 1))
        if (complex.cofaces(r).size() != 2)
            throw Error(ErrorKind::NotPseudomanifold,
                        "cell " + std::to_string(r) + " has " + std::to_string(complex.cofaces(r).size()) +
                            " top cofaces");

    OrientationClass out;
    out.reference = reference;
    out.signs.assign(complex.count(top), 0);
    out.signs[complex.local_index(reference)] = reference_sign;

    std::queue<CellId> queue;
    queue.push(reference);
    while (!queue.empty()) {
        const CellId a = queue.front();
        queue.pop();
        const int sa = out.signs[complex.local_index(a)];
        for (const auto& f : complex.faces(a)) {
            const auto cof = complex.cofaces(f.cell);
            const auto& other = cof[0].cell == a ? cof[1] : cof[0];
            // s(a)[a:f] + s(b)[b:f] = 0
            const int want = -sa * f.sign * other.sign;
            int& sb = out.signs[complex.local_index(other.cell)];
            if (sb == 0) {
                sb = want;
                queue.push(other.cell);
            } else if (sb != want) {
                throw Error(ErrorKind::NotOrientable,
                            "orientation propagation fails across cell " + std::to_string(f.cell));
            }
        }
    }
    for (std::size_t i = 0; i < out.signs.size(); ++i)
        if (out.signs[i] == 0)
            throw Error(ErrorKind::NotPseudomanifold,
                        "top cells are not connected through codimension-one cells");
    return out;
}

OrientationClass orientation_from_chain(const RationalChain& chain)
{
    const auto& complex = chain.complex();
    if (chain.dim() != complex.top_dim())
        throw Error(ErrorKind::NotOrientable, "chain is not top-dimensional");
    OrientationClass out;
    out.signs.reserve(complex.count(chain.dim()));
    for (CellId c : complex.cells(chain.dim())) {
        const Rational v = chain[c];
        if (v != 1 && v != -1)
            throw Error(ErrorKind::NotOrientable, "chain coefficient is not +-1 on cell " + std::to_string(c));
        out.signs.push_back(v == 1 ? 1 : -1);
    }
    if (!boundary(chain).is_zero())
        throw Error(ErrorKind::NotOrientable, "chain is not closed");
    out.reference = complex.cell(chain.dim(), 0);
    return out;
}

RationalChain fundamental_class(const CellComplex& complex, const OrientationClass& orientation)
{
    const int top = complex.top_dim();
    if (orientation.signs.size() != complex.count(top))
        throw Error(ErrorKind::BadDimension, "orientation does not match the complex");
    RationalChain out(complex, top);
    for (std::size_t i = 0; i < orientation.signs.size(); ++i)
        out.add(complex.cell(top, i), orientation.signs[i]);
    return out;
}

}  // namespace eulerloc

#include "eulerloc/necklace.hpp"

#include <algorithm>

#include "eulerloc/error.hpp"

namespace eulerloc {

OrientedCircle oriented_circle(const RationalChain& fundamental)
{
    const auto& complex = fundamental.complex();
    if (complex.top_dim() != 1 || fundamental.dim() != 1)
        throw Error(ErrorKind::NotPseudomanifold, "necklace needs a 1-dimensional complex");
    // Head of each edge in the direction of the fundamental class.
    std::vector<std::pair<CellId, CellId>> step(complex.size(), {0, 0});  // vertex -> (edge, next vertex)
    std::vector<bool> has_step(complex.size(), false);
    for (CellId e : complex.cells(1)) {
        const auto f = complex.faces(e);
        if (f.size() != 2)
            throw Error(ErrorKind::NotPseudomanifold, "edge without two endpoints");
        const int dir = fundamental[e] > 0 ? 1 : -1;
        const CellId head = f[0].sign * dir > 0 ? f[0].cell : f[1].cell;
        const CellId tail = head == f[0].cell ? f[1].cell : f[0].cell;
        if (has_step[tail])
            throw Error(ErrorKind::NotPseudomanifold, "vertex with two outgoing edges");
        step[tail] = {e, head};
        has_step[tail] = true;
    }
    OrientedCircle out;
    const CellId start = complex.cell(0, 0);
    CellId v = start;
    do {
        if (!has_step[v])
            throw Error(ErrorKind::NotPseudomanifold, "dual complex is not a circle");
        out.vertices.push_back(v);
        out.edges.push_back(step[v].first);
        out.signs.push_back(fundamental[step[v].first] > 0 ? 1 : -1);
        v = step[v].second;
    } while (v != start && out.vertices.size() <= complex.count(0));
    if (v != start || out.vertices.size() != complex.count(0))
        throw Error(ErrorKind::NotPseudomanifold, "dual complex is not a single circle");
    return out;
}

std::vector<int> necklace_word(const BundleModel& model, const Simplex& simplex)
{
    if (model.n() != 1)
        throw Error(ErrorKind::FormulaUnsupported, "necklace formula needs circle fibers (n = 1)");
    const auto& face = model.face(simplex);
    const auto circle = oriented_circle(*face.fundamental);
    std::vector<int> word;
    for (CellId v : circle.vertices) {
        const auto& color = face.dual.colors[face.dual.complex.local_index(v)];
        if (!color)
            continue;
        const auto pos = std::find(simplex.begin(), simplex.end(), *color) - simplex.begin();
        word.push_back(static_cast<int>(pos));
    }
    return word;
}

Rational necklace_word_value(const std::vector<int>& word)
{
    long count[3] = {0, 0, 0};
    for (int c : word) {
        if (c < 0 || c > 2)
            throw Error(ErrorKind::InvalidInput, "necklace colors must be 0, 1 or 2");
        ++count[c];
    }
    if (count[0] == 0 || count[1] == 0 || count[2] == 0)
        throw Error(ErrorKind::InvalidInput, "necklace misses a color");
    long pos = 0;
    long neg = 0;
    const std::size_t len = word.size();
    for (std::size_t a = 0; a < len; ++a) {
        if (word[a] != 0)
            continue;
        for (std::size_t b = 0; b < len; ++b) {
            if (word[b] != 1)
                continue;
            for (std::size_t c = 0; c < len; ++c) {
                if (word[c] != 2)
                    continue;
                const bool positive = (a < b && b < c) || (b < c && c < a) || (c < a && a < b);
                (positive ? pos : neg) += 1;
            }
        }
    }
    return Rational(neg - pos) / (2 * count[0] * count[1] * count[2]);
}

Rational necklace_value(const BundleModel& model, const Simplex& simplex)
{
    return necklace_word_value(necklace_word(model, simplex));
}

}  // namespace eulerloc

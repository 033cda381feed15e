#include "eulerloc/tiling.hpp"

#include <algorithm>
#include <queue>
#include <set>

#include "eulerloc/error.hpp"
#include "eulerloc/laplacian.hpp"

namespace eulerloc {

namespace {

std::string face_text(const Simplex& face)
{
    std::string s = "{";
    for (std::size_t i = 0; i < face.size(); ++i)
        s += (i ? "," : "") + std::to_string(face[i]);
    return s + "}";
}

// Product-cell sign for dropping position i of tile s.
int product_sign(const TriangulatedBundle& bundle, const Simplex& s, std::size_t i)
{
    const Vertex color = bundle.project(s[i]);
    int exponent = 0;
    std::map<Vertex, int> counts;
    for (Vertex v : s)
        ++counts[bundle.project(v)];
    for (const auto& [c, k] : counts)
        if (c < color)
            exponent += k - 1;
    for (std::size_t j = 0; j < i; ++j)
        if (bundle.project(s[j]) == color)
            ++exponent;
    return exponent % 2 == 0 ? 1 : -1;
}

}  // namespace

std::optional<CellId> TilingComplex::find(const Simplex& s) const
{
    auto it = ids.find(s);
    if (it == ids.end())
        return std::nullopt;
    return it->second;
}

TilingComplex fiber_tiling(const TriangulatedBundle& bundle, const Simplex& face, std::vector<Simplex> tiles)
{
    if (tiles.empty())
        throw Error(ErrorKind::EmptyTiling, "no total simplex maps onto face " + face_text(face));
    for (const auto& t : tiles)
        if (bundle.image(t) != face)
            throw Error(ErrorKind::InvalidInput, "tile does not map onto face " + face_text(face));

    TilingComplex out;
    out.face = face;
    out.n = bundle.n();
    std::sort(tiles.begin(), tiles.end(), [](const Simplex& a, const Simplex& b) {
        return a.size() != b.size() ? a.size() < b.size() : a < b;
    });
    tiles.erase(std::unique(tiles.begin(), tiles.end()), tiles.end());
    out.tiles = std::move(tiles);

    std::vector<int> dims;
    dims.reserve(out.tiles.size());
    for (std::size_t i = 0; i < out.tiles.size(); ++i) {
        out.ids.emplace(out.tiles[i], static_cast<CellId>(i));
        dims.push_back(out.tile_dim(out.tiles[i]));
    }
    std::vector<SignedCover> covers;
    for (std::size_t id = 0; id < out.tiles.size(); ++id) {
        const auto& s = out.tiles[id];
        for (std::size_t i = 0; i < s.size(); ++i) {
            auto f = out.ids.find(drop(s, i));
            if (f != out.ids.end())
                covers.push_back({f->second, static_cast<CellId>(id), product_sign(bundle, s, i)});
        }
    }
    out.complex = CellComplex(std::move(dims), covers);
    return out;
}

std::vector<CellId> DualComplex::colored_vertices(Vertex base_vertex) const
{
    std::vector<CellId> out;
    for (std::size_t i = 0; i < colors.size(); ++i)
        if (colors[i] == base_vertex)
            out.push_back(complex.cell(0, i));
    return out;
}

std::vector<CellId> DualComplex::star_top_cells(CellId vertex) const
{
    const int top = complex.top_dim();
    std::set<CellId> level{vertex};
    for (int d = 0; d < top; ++d) {
        std::set<CellId> next;
        for (CellId c : level)
            for (const auto& up : complex.cofaces(c))
                next.insert(up.cell);
        level = std::move(next);
    }
    return {level.begin(), level.end()};
}

DualComplex dual_complex(const TriangulatedBundle& bundle, const TilingComplex& tiling)
{
    const int n = tiling.n;
    const auto& T = tiling.complex;
    DualComplex out;
    const std::size_t size = T.size();
    out.dual_of_tile.assign(size, 0);
    out.tile_of_dual.reserve(size);

    GradedPoset poset;
    for (int p = 0; p <= n; ++p)
        for (CellId t : T.cells(n - p)) {
            out.dual_of_tile[t] = static_cast<CellId>(out.tile_of_dual.size());
            out.tile_of_dual.push_back(t);
            poset.dims.push_back(p);
        }
    if (poset.dims.empty() || poset.dims.back() != n || poset.dims.front() != 0)
        throw Error(ErrorKind::EmptyTiling, "tiling over " + face_text(tiling.face) + " misses a dimension");
    for (const auto& cov : T.covers())
        poset.covers.emplace_back(out.dual_of_tile[cov.upper], out.dual_of_tile[cov.lower]);
    out.complex = assign_incidence_signs(poset);

    out.colors.assign(out.complex.count(0), std::nullopt);
    for (std::size_t i = 0; i < out.colors.size(); ++i) {
        const Simplex& s = tiling.tiles[out.tile_of_dual[out.complex.cell(0, i)]];
        std::map<Vertex, int> counts;
        for (Vertex v : s)
            ++counts[bundle.project(v)];
        for (const auto& [c, k] : counts)
            if (k == n + 1)
                out.colors[i] = c;
    }

    for (std::size_t i = 0; i < out.colors.size(); ++i) {
        if (!out.colors[i])
            continue;
        const CellId v = out.complex.cell(0, i);
        const auto star = out.star_top_cells(v);
        if (star.size() != static_cast<std::size_t>(n + 1))
            throw Error(ErrorKind::LemmaViolation, "colored vertex " + std::to_string(v) + " over face " +
                                                       face_text(tiling.face) + " lies in " +
                                                       std::to_string(star.size()) + " top cells, expected " +
                                                       std::to_string(n + 1));
    }
    return out;
}

namespace {

// Propagates gauge signs over tiling covers from the cells already set in
// g, then checks every cover.
void propagate_gauge(const TilingComplex& tiling, const DualComplex& dual, std::vector<int>& g)
{
    const auto& T = tiling.complex;
    auto relation = [&](CellId lower, CellId upper, int t_sign) {
        const int gamma = dual.complex.incidence(dual.dual_of_tile[lower], dual.dual_of_tile[upper]);
        const int parity = (T.dim(lower) + 1) % 2 == 0 ? 1 : -1;
        return gamma * parity * t_sign;
    };
    std::queue<CellId> queue;
    for (CellId c = 0; c < g.size(); ++c)
        if (g[c] != 0)
            queue.push(c);
    while (!queue.empty()) {
        const CellId c = queue.front();
        queue.pop();
        for (const auto& f : T.faces(c))
            if (g[f.cell] == 0) {
                g[f.cell] = g[c] * relation(f.cell, c, f.sign);
                queue.push(f.cell);
            }
        for (const auto& u : T.cofaces(c))
            if (g[u.cell] == 0) {
                g[u.cell] = g[c] * relation(c, u.cell, u.sign);
                queue.push(u.cell);
            }
    }
    for (const auto& cov : T.covers())
        if (g[cov.lower] == 0 || g[cov.lower] * g[cov.upper] != relation(cov.lower, cov.upper, cov.sign))
            throw Error(ErrorKind::NotOrientable,
                        "duality gauge is inconsistent over face " + face_text(tiling.face));
}

}  // namespace

RationalChain dual_fundamental(const TilingComplex& tiling, const DualComplex& dual, const OrientationClass& orientation)
{
    const auto& T = tiling.complex;
    std::vector<int> g(T.size(), 0);
    for (CellId a : T.cells(tiling.n))
        g[a] = orientation.sign(T, a);
    propagate_gauge(tiling, dual, g);
    RationalChain out(dual.complex, tiling.n);
    for (CellId w : T.cells(0))
        out.add(dual.dual_of_tile[w], g[w]);
    return out;
}

OrientationClass tiling_orientation(const TilingComplex& tiling, const DualComplex& dual, const RationalChain& fundamental)
{
    const auto& T = tiling.complex;
    std::vector<int> g(T.size(), 0);
    for (CellId w : T.cells(0)) {
        const Rational v = fundamental[dual.dual_of_tile[w]];
        if (v != 1 && v != -1)
            throw Error(ErrorKind::NotOrientable, "fundamental class is not a +-1 chain");
        g[w] = v == 1 ? 1 : -1;
    }
    propagate_gauge(tiling, dual, g);
    OrientationClass out;
    for (CellId a : T.cells(tiling.n))
        out.signs.push_back(g[a]);
    out.reference = T.cell(tiling.n, 0);
    return out;
}

ValidationReport validate_face(const TilingComplex& tiling, const DualComplex& dual)
{
    ValidationReport report;
    const std::string where = " over " + face_text(tiling.face);
    const auto t = validate_complex(tiling.complex);
    report.add("tiling-complex", t.passed(), t.passed() ? "" : "tiling" + where + " failed complex checks");
    const bool th = has_sphere_homology(tiling.complex);
    report.add("tiling-homology", th, th ? "" : "tiling" + where + " is not a homology sphere");
    const auto d = validate_complex(dual.complex);
    report.add("dual-complex", d.passed(), d.passed() ? "" : "dual" + where + " failed complex checks");
    const bool dh = has_sphere_homology(dual.complex);
    report.add("dual-homology", dh, dh ? "" : "dual" + where + " is not a homology sphere");
    bool lemma = true;
    for (std::size_t i = 0; i < dual.colors.size(); ++i)
        if (dual.colors[i] && dual.star_top_cells(dual.complex.cell(0, i)).size() != static_cast<std::size_t>(tiling.n + 1))
            lemma = false;
    report.add("colored-vertex-lemma", lemma, lemma ? "" : "dual" + where);
    return report;
}

}  // namespace eulerloc

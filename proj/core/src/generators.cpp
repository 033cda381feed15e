#include "eulerloc/generators.hpp"

#include <algorithm>
#include <charconv>
#include <map>
#include <random>
#include <set>

#include "eulerloc/document.hpp"
#include "eulerloc/error.hpp"
#include "eulerloc/laplacian.hpp"
#include "eulerloc/orientation.hpp"
#include "eulerloc/validation.hpp"

namespace eulerloc {

namespace detail {
std::string_view hopf_fixture_json();
}

namespace {

std::vector<Simplex> boundary_of_simplex(Vertex k)
{
    std::vector<Simplex> out;
    for (Vertex skip = 0; skip <= k; ++skip) {
        Simplex s;
        for (Vertex v = 0; v <= k; ++v)
            if (v != skip)
                s.push_back(v);
        out.push_back(std::move(s));
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<int> coherent_orientation(std::size_t vertices, const std::vector<Simplex>& simplices)
{
    const SimplicialComplex sc(vertices, simplices);
    const auto cc = sc.cell_complex();
    const auto o = orient(cc, sc.cell_id(simplices.front()), 1);
    std::vector<int> out;
    for (const auto& s : simplices)
        out.push_back(o.sign(cc, sc.cell_id(s)));
    return out;
}

NamedComplex make_named(std::size_t vertices, std::vector<Simplex> simplices, bool closed)
{
    NamedComplex out;
    for (std::size_t v = 0; v < vertices; ++v)
        out.names.push_back("p" + std::to_string(v));
    std::sort(simplices.begin(), simplices.end());
    out.orientations = closed ? coherent_orientation(vertices, simplices) : std::vector<int>(simplices.size(), 1);
    out.simplices = std::move(simplices);
    return out;
}

std::optional<long> suffix_number(std::string_view name, std::string_view prefix)
{
    if (name.substr(0, prefix.size()) != prefix || name.size() == prefix.size())
        return std::nullopt;
    long value = 0;
    const auto rest = name.substr(prefix.size());
    auto [ptr, ec] = std::from_chars(rest.data(), rest.data() + rest.size(), value);
    if (ec != std::errc() || ptr != rest.data() + rest.size())
        return std::nullopt;
    return value;
}

void check_permutation(const std::vector<Vertex>& perm, std::size_t n)
{
    if (perm.size() != n)
        throw Error(ErrorKind::InvalidInput, "permutation has the wrong length");
    std::vector<bool> seen(n, false);
    for (Vertex v : perm) {
        if (v >= n || seen[v])
            throw Error(ErrorKind::InvalidInput, "not a permutation");
        seen[v] = true;
    }
}

// Maps the vertices of s and returns the sorted image plus the sign of the
// reordering.
std::pair<Simplex, int> map_simplex(const Simplex& s, const std::vector<Vertex>& perm)
{
    std::vector<Vertex> mapped;
    for (Vertex v : s)
        mapped.push_back(perm[v]);
    const int sign = permutation_sign(mapped);
    std::sort(mapped.begin(), mapped.end());
    return {mapped, sign};
}

}  // namespace

NamedComplex named_base(std::string_view name)
{
    if (name == "simplex2")
        return make_named(3, {{0, 1, 2}}, false);
    if (name == "simplex3")
        return make_named(4, {{0, 1, 2, 3}}, false);
    if (name == "boundary3")
        return make_named(4, boundary_of_simplex(3), true);
    if (name == "boundary4")
        return make_named(5, boundary_of_simplex(4), true);
    if (name == "torus7") {
        std::vector<Simplex> tris;
        for (Vertex i = 0; i < 7; ++i)
            for (const auto& [a, b] : {std::pair<Vertex, Vertex>{1, 3}, {2, 3}}) {
                Simplex s{i, (i + a) % 7, (i + b) % 7};
                std::sort(s.begin(), s.end());
                tris.push_back(s);
            }
        return make_named(7, tris, true);
    }
    throw Error(ErrorKind::InvalidInput, "unknown base '" + std::string(name) + "'");
}

SimplicialComplex named_fiber(std::string_view name)
{
    if (auto m = suffix_number(name, "cycle")) {
        if (*m < 3)
            throw Error(ErrorKind::InvalidInput, "a cycle needs at least 3 vertices");
        std::vector<Simplex> edges;
        for (Vertex i = 0; i < static_cast<Vertex>(*m); ++i) {
            Simplex e{i, (i + 1) % static_cast<Vertex>(*m)};
            std::sort(e.begin(), e.end());
            edges.push_back(e);
        }
        return SimplicialComplex(static_cast<std::size_t>(*m), edges);
    }
    if (auto k = suffix_number(name, "boundary")) {
        if (*k < 2)
            throw Error(ErrorKind::InvalidInput, "boundaryK needs K >= 2");
        return SimplicialComplex(static_cast<std::size_t>(*k + 1), boundary_of_simplex(static_cast<Vertex>(*k)));
    }
    throw Error(ErrorKind::InvalidInput, "unknown fiber '" + std::string(name) + "'");
}

std::vector<Vertex> seeded_permutation(std::size_t n, std::uint64_t seed)
{
    std::vector<Vertex> perm(n);
    for (std::size_t i = 0; i < n; ++i)
        perm[i] = static_cast<Vertex>(i);
    if (seed == 0)
        return perm;
    std::mt19937_64 rng(seed);
    for (std::size_t i = n; i > 1; --i)
        std::swap(perm[i - 1], perm[rng() % i]);
    return perm;
}

BundleData gen_trivial(const NamedComplex& base, const SimplicialComplex& fiber, std::uint64_t seed)
{
    const auto fcc = fiber.cell_complex();
    const int n = fiber.dim();
    if (n < 1 || fiber.count(0) != fiber.vertex_bound() || !validate_complex(fcc).passed() ||
        !has_sphere_homology(fcc))
        throw Error(ErrorKind::InvalidFiber, "fiber is not a triangulated sphere of positive dimension");

    const std::size_t nb = base.names.size();
    const std::size_t m = fiber.count(0);
    const auto base_rank = seeded_permutation(nb, seed);
    const auto fiber_rank = seeded_permutation(m, seed == 0 ? 0 : seed * 0x9E3779B97F4A7C15ULL + 1);

    BundleData out;
    out.n = n;
    out.base_vertices = base.names;
    out.base_simplices = base.simplices;
    out.base_orientations = base.orientations;
    for (std::size_t b = 0; b < nb; ++b)
        for (std::size_t f = 0; f < m; ++f) {
            out.total_vertices.push_back(base.names[b] + "." + std::to_string(f));
            out.vertex_map.push_back(static_cast<Vertex>(b));
        }

    std::set<Simplex> total;
    const auto fibers = fiber.maximal();
    for (const auto& beta : base.simplices) {
        Simplex bs = beta;
        std::sort(bs.begin(), bs.end(), [&](Vertex x, Vertex y) { return base_rank[x] < base_rank[y]; });
        for (const auto& phi : fibers) {
            Simplex fs = phi;
            std::sort(fs.begin(), fs.end(), [&](Vertex x, Vertex y) { return fiber_rank[x] < fiber_rank[y]; });
            // Lattice paths: choose which of the steps advance the base index.
            const std::size_t bsteps = bs.size() - 1;
            const std::size_t steps = bsteps + fs.size() - 1;
            std::vector<bool> pick(steps, false);
            std::fill(pick.begin(), pick.begin() + static_cast<std::ptrdiff_t>(bsteps), true);
            std::sort(pick.begin(), pick.end());
            do {
                std::size_t i = 0;
                std::size_t j = 0;
                Simplex s{static_cast<Vertex>(bs[0] * m + fs[0])};
                for (bool advance_base : pick) {
                    (advance_base ? i : j) += 1;
                    s.push_back(static_cast<Vertex>(bs[i] * m + fs[j]));
                }
                std::sort(s.begin(), s.end());
                total.insert(std::move(s));
            } while (std::next_permutation(pick.begin(), pick.end()));
        }
    }
    out.total_simplices.assign(total.begin(), total.end());

    // One anchor per base component (its smallest vertex).
    const SimplicialComplex bc(nb, base.simplices);
    std::vector<Vertex> root(nb);
    for (std::size_t v = 0; v < nb; ++v)
        root[v] = static_cast<Vertex>(v);
    auto find = [&](Vertex v) {
        while (root[v] != v)
            v = root[v] = root[root[v]];
        return v;
    };
    for (const auto& e : bc.simplices(1)) {
        const Vertex a = find(e[0]);
        const Vertex b = find(e[1]);
        if (a != b)
            root[std::max(a, b)] = std::min(a, b);
    }
    const auto fo = orient(fcc, fcc.cell(n, 0), 1);
    for (std::size_t v = 0; v < nb; ++v) {
        if (find(static_cast<Vertex>(v)) != v || bc.count(0) == 0)
            continue;
        FiberOrientation anchor;
        anchor.anchor = static_cast<Vertex>(v);
        for (const auto& phi : fiber.simplices(n)) {
            Simplex s;
            for (Vertex f : phi)
                s.push_back(static_cast<Vertex>(v * m + f));
            anchor.signs.push_back({s, fo.sign(fcc, fiber.cell_id(phi))});
        }
        out.fiber_orientation.push_back(std::move(anchor));
    }

    out.metadata.kind = "trivial";
    out.metadata.provenance = "staircase product triangulation, seed " + std::to_string(seed);
    if (bc.dim() == n + 1) {
        out.metadata.expected_pairings.push_back({"all", Rational(0)});
    }
    return out;
}

BundleData hopf_fixture()
{
    return parse_bundle(detail::hopf_fixture_json());
}

std::vector<std::pair<Vertex, Vertex>> fiber_edges(const BundleData& data)
{
    const SimplicialComplex total(data.total_vertices.size(), data.total_simplices);
    std::vector<std::pair<Vertex, Vertex>> out;
    for (const auto& e : total.simplices(1))
        if (data.vertex_map.at(e[0]) == data.vertex_map.at(e[1]))
            out.emplace_back(e[0], e[1]);
    return out;
}

BundleData subdivide_fiber_edge(const BundleData& data, Vertex a, Vertex b)
{
    if (a > b)
        std::swap(a, b);
    if (b >= data.vertex_map.size())
        throw Error(ErrorKind::InvalidInput, "edge vertex out of range");
    if (data.vertex_map[a] != data.vertex_map[b])
        throw Error(ErrorKind::NotFiberEdge, "edge endpoints lie over different base vertices");
    const SimplicialComplex total(data.total_vertices.size(), data.total_simplices);
    if (!total.contains(Simplex{a, b}))
        throw Error(ErrorKind::InvalidInput, "not an edge of the total space");

    BundleData out = data;
    const auto c = static_cast<Vertex>(data.total_vertices.size());
    out.total_vertices.push_back(data.total_vertices[a] + "|" + data.total_vertices[b]);
    out.vertex_map.push_back(data.vertex_map[a]);

    // Replace `from` by c, keeping the position, and report the sign of
    // sorting the result.
    auto replaced = [&](const Simplex& s, Vertex from) {
        std::vector<Vertex> order = s;
        std::replace(order.begin(), order.end(), from, c);
        const int sign = permutation_sign(order);
        std::sort(order.begin(), order.end());
        return std::make_pair(order, sign);
    };
    auto contains_edge = [&](const Simplex& s) {
        return std::binary_search(s.begin(), s.end(), a) && std::binary_search(s.begin(), s.end(), b);
    };

    std::set<Simplex> simplices;
    for (const auto& s : total.maximal()) {
        if (contains_edge(s)) {
            simplices.insert(replaced(s, b).first);
            simplices.insert(replaced(s, a).first);
        } else {
            simplices.insert(s);
        }
    }
    out.total_simplices.assign(simplices.begin(), simplices.end());

    for (auto& fo : out.fiber_orientation) {
        std::vector<std::pair<Simplex, int>> signs;
        for (const auto& [s, sign] : fo.signs) {
            if (contains_edge(s)) {
                const auto [s1, p1] = replaced(s, b);
                const auto [s2, p2] = replaced(s, a);
                signs.push_back({s1, sign * p1});
                signs.push_back({s2, sign * p2});
            } else {
                signs.push_back({s, sign});
            }
        }
        std::sort(signs.begin(), signs.end());
        fo.signs = std::move(signs);
    }
    out.metadata.provenance += "; subdivided fiber edge " + std::to_string(a) + "-" + std::to_string(b);
    return out;
}

BundleData relabel_total(const BundleData& data, const std::vector<Vertex>& perm)
{
    check_permutation(perm, data.total_vertices.size());
    BundleData out = data;
    for (std::size_t v = 0; v < perm.size(); ++v) {
        out.total_vertices[perm[v]] = data.total_vertices[v];
        out.vertex_map[perm[v]] = data.vertex_map[v];
    }
    out.total_simplices.clear();
    for (const auto& s : data.total_simplices)
        out.total_simplices.push_back(map_simplex(s, perm).first);
    std::sort(out.total_simplices.begin(), out.total_simplices.end());
    for (auto& fo : out.fiber_orientation) {
        for (auto& [s, sign] : fo.signs) {
            auto [mapped, p] = map_simplex(s, perm);
            s = mapped;
            sign *= p;
        }
        std::sort(fo.signs.begin(), fo.signs.end());
    }
    return out;
}

BundleData relabel_base(const BundleData& data, const std::vector<Vertex>& perm)
{
    check_permutation(perm, data.base_vertices.size());
    BundleData out = data;
    for (std::size_t v = 0; v < perm.size(); ++v)
        out.base_vertices[perm[v]] = data.base_vertices[v];
    for (auto& v : out.vertex_map)
        v = perm[v];
    out.base_simplices.clear();
    out.base_orientations.clear();
    std::vector<std::pair<Simplex, int>> oriented;
    for (std::size_t i = 0; i < data.base_simplices.size(); ++i) {
        const int old = data.base_orientations.empty() ? 1 : data.base_orientations[i];
        auto [mapped, p] = map_simplex(data.base_simplices[i], perm);
        oriented.push_back({mapped, old * p});
    }
    std::sort(oriented.begin(), oriented.end());
    for (auto& [s, sign] : oriented) {
        out.base_simplices.push_back(s);
        out.base_orientations.push_back(sign);
    }
    for (auto& fo : out.fiber_orientation)
        fo.anchor = perm[fo.anchor];
    std::sort(out.fiber_orientation.begin(), out.fiber_orientation.end(),
              [](const FiberOrientation& x, const FiberOrientation& y) { return x.anchor < y.anchor; });
    return out;
}

}  // namespace eulerloc

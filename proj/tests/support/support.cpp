#include "support.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "eulerloc/generators.hpp"

namespace eulerloc::testing {

BundleData subdivided(BundleData data, int count, std::uint64_t seed)
{
    Rng rng(seed);
    for (int i = 0; i < count; ++i) {
        const auto edges = fiber_edges(data);
        const auto& [a, b] = edges[rng() % edges.size()];
        data = subdivide_fiber_edge(data, a, b);
    }
    return data;
}

std::vector<Context> n1_contexts()
{
    std::vector<Context> out;
    for (std::uint64_t seed : {0, 1, 2, 3, 4, 5})
        out.push_back({"simplex2 x cycle3 seed " + std::to_string(seed),
                       gen_trivial(named_base("simplex2"), named_fiber("cycle3"), seed)});
    for (std::uint64_t seed : {0, 7, 11})
        out.push_back({"simplex2 x cycle5 seed " + std::to_string(seed),
                       gen_trivial(named_base("simplex2"), named_fiber("cycle5"), seed)});
    for (std::uint64_t seed : {0, 3, 9})
        out.push_back({"boundary3 x cycle4 seed " + std::to_string(seed),
                       gen_trivial(named_base("boundary3"), named_fiber("cycle4"), seed)});
    for (int k : {1, 2, 5})
        out.push_back({"simplex2 x cycle3 seed 2, " + std::to_string(k) + " subdivisions",
                       subdivided(gen_trivial(named_base("simplex2"), named_fiber("cycle3"), 2), k, 100 + k)});
    for (int k : {1, 3})
        out.push_back({"boundary3 x cycle3 seed 5, " + std::to_string(k) + " subdivisions",
                       subdivided(gen_trivial(named_base("boundary3"), named_fiber("cycle3"), 5), k, 200 + k)});
    out.push_back({"torus7 x cycle3 seed 4", gen_trivial(named_base("torus7"), named_fiber("cycle3"), 4)});
    out.push_back({"simplex3 x cycle3 seed 6", gen_trivial(named_base("simplex3"), named_fiber("cycle3"), 6)});
    out.push_back({"hopf", hopf_fixture()});
    const auto hopf = hopf_fixture();
    out.push_back({"hopf relabelled", relabel_total(hopf, seeded_permutation(hopf.total_vertices.size(), 17))});
    out.push_back({"hopf, 2 subdivisions", subdivided(hopf_fixture(), 2, 31)});
    return out;
}

Rational random_rational(Rng& rng)
{
    std::uniform_int_distribution<int> num(-6, 6);
    std::uniform_int_distribution<int> den(1, 5);
    return Rational(num(rng), den(rng));
}

RationalChain random_chain(const CellComplex& complex, int k, Rng& rng, double density)
{
    std::bernoulli_distribution use(density);
    RationalChain out(complex, k);
    for (CellId c : complex.cells(k))
        if (use(rng))
            out.add(c, random_rational(rng));
    return out;
}

RationalChain random_exact_chain(const CellComplex& complex, int k, Rng& rng)
{
    RationalChain out(complex, k);
    const auto upper = random_chain(complex, k + 1, rng);
    for (const auto& [c, v] : upper.terms())
        for (const auto& f : complex.faces(c))
            out.add(f.cell, f.sign * v);
    return out;
}

std::vector<RationalChain> cycle_basis_oracle(const CellComplex& complex, int k)
{
    const auto cells = complex.cells(k);
    const std::size_t cols = cells.size();
    std::vector<RationalChain> out;
    if (k == 0) {
        for (CellId c : cells)
            out.push_back(RationalChain::cell(complex, c));
        return out;
    }
    std::map<CellId, std::size_t> row_of;
    for (CellId c : complex.cells(k - 1))
        row_of.emplace(c, row_of.size());
    std::vector<std::vector<Rational>> m(row_of.size(), std::vector<Rational>(cols));
    for (std::size_t j = 0; j < cols; ++j)
        for (const auto& f : complex.faces(cells[j]))
            m[row_of.at(f.cell)][j] = f.sign;

    std::vector<std::size_t> pivot_col;
    std::size_t r = 0;
    for (std::size_t j = 0; j < cols && r < m.size(); ++j) {
        std::size_t p = r;
        while (p < m.size() && m[p][j] == 0)
            ++p;
        if (p == m.size())
            continue;
        std::swap(m[p], m[r]);
        const Rational lead = m[r][j];
        for (auto& x : m[r])
            x /= lead;
        for (std::size_t i = 0; i < m.size(); ++i) {
            if (i == r || m[i][j] == 0)
                continue;
            const Rational f = m[i][j];
            for (std::size_t t = 0; t < cols; ++t)
                m[i][t] -= f * m[r][t];
        }
        pivot_col.push_back(j);
        ++r;
    }
    std::set<std::size_t> pivots(pivot_col.begin(), pivot_col.end());
    for (std::size_t free = 0; free < cols; ++free) {
        if (pivots.count(free))
            continue;
        RationalChain z(complex, k);
        z.add(cells[free], 1);
        for (std::size_t i = 0; i < pivot_col.size(); ++i)
            z.add(cells[pivot_col[i]], -m[i][free]);
        out.push_back(std::move(z));
    }
    return out;
}

std::vector<NamedCellComplex> sample_complexes()
{
    std::vector<NamedCellComplex> out;
    auto add_named = [&](const std::string& label, const NamedComplex& nc) {
        SimplicialComplex s(nc.names.size(), nc.simplices);
        out.push_back({label, s, s.cell_complex()});
    };
    add_named("boundary3", named_base("boundary3"));
    add_named("boundary4", named_base("boundary4"));
    add_named("torus7", named_base("torus7"));
    add_named("simplex3", named_base("simplex3"));
    for (const char* f : {"cycle5", "boundary3"}) {
        auto s = named_fiber(f);
        out.push_back({std::string("fiber ") + f, s, s.cell_complex()});
    }
    // Two squares glued along their boundary: a non-simplicial 2-sphere.
    GradedPoset pillow;
    pillow.dims = {0, 0, 0, 0, 1, 1, 1, 1, 2, 2};
    pillow.covers = {{0, 4}, {1, 4}, {1, 5}, {2, 5}, {2, 6}, {3, 6}, {3, 7}, {0, 7},
                     {4, 8}, {5, 8}, {6, 8}, {7, 8}, {4, 9}, {5, 9}, {6, 9}, {7, 9}};
    out.push_back({"pillow", {}, assign_incidence_signs(pillow)});
    return out;
}

std::vector<int> necklace_oracle(const BundleData& data, const Simplex& triangle)
{
    auto color = [&](Vertex v) {
        return static_cast<int>(std::find(triangle.begin(), triangle.end(), data.vertex_map[v]) - triangle.begin());
    };
    std::set<Simplex> tetrahedra;
    for (const auto& top : data.total_simplices) {
        // every 4-subset of a top simplex whose colors cover the triangle
        const std::size_t m = top.size();
        for (std::size_t mask = 0; mask < (1u << m); ++mask) {
            if (__builtin_popcount(static_cast<unsigned>(mask)) != 4)
                continue;
            Simplex s;
            std::array<int, 3> count{};
            bool inside = true;
            for (std::size_t i = 0; i < m; ++i) {
                if (!(mask & (1u << i)))
                    continue;
                const int c = color(top[i]);
                if (c == 3) {
                    inside = false;
                    break;
                }
                ++count[c];
                s.push_back(top[i]);
            }
            if (inside && count[0] && count[1] && count[2])
                tetrahedra.insert(s);
        }
    }
    std::map<Simplex, std::vector<Simplex>> by_triangle;
    for (const auto& t : tetrahedra) {
        for (std::size_t i = 0; i < 4; ++i) {
            Simplex face = t;
            face.erase(face.begin() + static_cast<long>(i));
            std::set<int> colors;
            for (Vertex v : face)
                colors.insert(color(v));
            if (colors.size() == 3)
                by_triangle[face].push_back(t);
        }
    }
    auto doubled = [&](const Simplex& t) {
        std::array<int, 3> count{};
        for (Vertex v : t)
            ++count[color(v)];
        return static_cast<int>(std::max_element(count.begin(), count.end()) - count.begin());
    };
    std::vector<int> word;
    if (tetrahedra.empty())
        return word;
    Simplex prev;
    Simplex cur = *tetrahedra.begin();
    const Simplex start = cur;
    do {
        word.push_back(doubled(cur));
        Simplex next;
        for (const auto& [face, pair] : by_triangle) {
            if (pair.size() != 2 || (pair[0] != cur && pair[1] != cur))
                continue;
            const Simplex& other = pair[0] == cur ? pair[1] : pair[0];
            if (other != prev) {
                next = other;
                break;
            }
        }
        prev = cur;
        cur = next;
    } while (cur != start && !cur.empty() && word.size() <= tetrahedra.size());
    return word;
}

bool same_necklace(const std::vector<int>& a, const std::vector<int>& b)
{
    if (a.size() != b.size())
        return false;
    auto rotations_match = [&](const std::vector<int>& w) {
        for (std::size_t r = 0; r < w.size(); ++r)
            if (std::equal(w.begin() + static_cast<long>(r), w.end(), a.begin()) &&
                std::equal(w.begin(), w.begin() + static_cast<long>(r), a.begin() + static_cast<long>(w.size() - r)))
                return true;
        return a.empty();
    };
    std::vector<int> rev(b.rbegin(), b.rend());
    return rotations_match(b) || rotations_match(rev);
}

Rational necklace_count_oracle(const std::vector<int>& word)
{
    std::array<std::vector<std::size_t>, 3> at;
    for (std::size_t i = 0; i < word.size(); ++i)
        at[word[i]].push_back(i);
    long pos = 0;
    long neg = 0;
    for (auto r : at[0])
        for (auto b : at[1])
            for (auto g : at[2]) {
                // 0 -> 1 -> 2 is the cyclic reading order iff exactly one
                // of the three steps wraps around.
                const int wraps = (b < r) + (g < b) + (r < g);
                (wraps == 1 ? pos : neg) += 1;
            }
    const long beads = static_cast<long>(at[0].size() * at[1].size() * at[2].size());
    return Rational(neg - pos, 2 * beads);
}

RationalChain chain_of(const CellComplex& complex, int k, const std::vector<std::pair<CellId, Rational>>& terms)
{
    RationalChain out(complex, k);
    for (const auto& [c, v] : terms)
        out.add(c, v);
    return out;
}

}  // namespace eulerloc::testing

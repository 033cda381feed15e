#include "eulerloc/validation.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

#include "eulerloc/error.hpp"
#include "eulerloc/orientation.hpp"

namespace eulerloc {

void ValidationReport::add(std::string name, bool passed, std::string detail)
{
    checks_.push_back({std::move(name), passed ? CheckStatus::Pass : CheckStatus::Fail, std::move(detail)});
}

void ValidationReport::skip(std::string name, std::string detail)
{
    checks_.push_back({std::move(name), CheckStatus::Skipped, std::move(detail)});
}

void ValidationReport::merge(const ValidationReport& other, const std::string& prefix)
{
    for (const auto& c : other.checks_)
        checks_.push_back({prefix + c.name, c.status, c.detail});
}

bool ValidationReport::passed() const
{
    return std::none_of(checks_.begin(), checks_.end(),
                        [](const ValidationCheck& c) { return c.status == CheckStatus::Fail; });
}

const ValidationCheck* ValidationReport::find(const std::string& name) const
{
    for (const auto& c : checks_)
        if (c.name == name)
            return &c;
    return nullptr;
}

std::string ValidationReport::to_text() const
{
    std::ostringstream out;
    for (const auto& c : checks_) {
        out << c.name << ": "
            << (c.status == CheckStatus::Pass ? "PASS" : c.status == CheckStatus::Fail ? "FAIL" : "SKIP");
        if (!c.detail.empty())
            out << " (" << c.detail << ")";
        out << '\n';
    }
    return out.str();
}

namespace {

struct UnionFind {
    std::vector<std::size_t> parent;
    explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    std::size_t find(std::size_t x)
    {
        while (parent[x] != x)
            x = parent[x] = parent[parent[x]];
        return x;
    }
    void unite(std::size_t a, std::size_t b) { parent[find(a)] = find(b); }
};

std::string check_diamonds(const CellComplex& k)
{
    for (CellId c = 0; c < k.size(); ++c) {
        if (k.dim(c) == 1 && k.faces(c).size() != 2)
            return "edge " + std::to_string(c) + " has " + std::to_string(k.faces(c).size()) + " endpoints";
        if (k.dim(c) < 2)
            continue;
        std::map<CellId, int> middles;
        for (const auto& f : k.faces(c))
            for (const auto& r : k.faces(f.cell))
                ++middles[r.cell];
        for (const auto& [r, m] : middles)
            if (m != 2)
                return "interval (" + std::to_string(r) + ", " + std::to_string(c) + ") has " +
                       std::to_string(m) + " middle cells";
    }
    return {};
}

std::string check_boundary_squared(const CellComplex& k)
{
    for (CellId c = 0; c < k.size(); ++c) {
        if (k.dim(c) < 2)
            continue;
        std::map<CellId, int> sum;
        for (const auto& f : k.faces(c))
            for (const auto& r : k.faces(f.cell))
                sum[r.cell] += f.sign * r.sign;
        for (const auto& [r, s] : sum)
            if (s != 0)
                return "boundary of boundary of cell " + std::to_string(c) + " is nonzero on " + std::to_string(r);
    }
    return {};
}

// A finite graph given by adjacency lists is a single cycle.
bool is_single_cycle(const std::vector<std::vector<std::size_t>>& adj)
{
    if (adj.empty())
        return false;
    UnionFind uf(adj.size());
    for (std::size_t a = 0; a < adj.size(); ++a) {
        if (adj[a].size() != 2)
            return false;
        for (auto b : adj[a])
            uf.unite(a, b);
    }
    for (std::size_t a = 0; a < adj.size(); ++a)
        if (uf.find(a) != uf.find(0))
            return false;
    return true;
}

std::string check_cell_boundaries(const CellComplex& k)
{
    for (CellId c = 0; c < k.size(); ++c) {
        if (k.dim(c) == 1 && k.faces(c).size() != 2)
            return "edge " + std::to_string(c) + " is not bounded by two vertices";
        if (k.dim(c) != 2)
            continue;
        // Boundary of a 2-cell: its edges and their vertices form one cycle.
        std::map<CellId, std::size_t> vertex_index;
        std::vector<std::vector<std::size_t>> adj;
        auto index_of = [&](CellId v) {
            auto [it, inserted] = vertex_index.try_emplace(v, adj.size());
            if (inserted)
                adj.emplace_back();
            return it->second;
        };
        for (const auto& e : k.faces(c)) {
            const auto ends = k.faces(e.cell);
            if (ends.size() != 2)
                return "edge " + std::to_string(e.cell) + " is not bounded by two vertices";
            const auto a = index_of(ends[0].cell);
            const auto b = index_of(ends[1].cell);
            adj[a].push_back(b);
            adj[b].push_back(a);
        }
        if (!is_single_cycle(adj))
            return "boundary of 2-cell " + std::to_string(c) + " is not a circle";
    }
    return {};
}

std::string check_vertex_links(const CellComplex& k)
{
    const int top = k.top_dim();
    for (CellId v : k.cells(0)) {
        const auto edges = k.cofaces(v);
        if (top == 1) {
            if (edges.size() != 2)
                return "link of vertex " + std::to_string(v) + " is not two points";
            continue;
        }
        // top == 2: link vertices are the edges at v, link edges come from
        // the corners of the 2-cells at v.
        std::map<CellId, std::size_t> node;
        for (const auto& e : edges)
            node.emplace(e.cell, node.size());
        std::vector<std::vector<std::size_t>> adj(node.size());
        std::map<CellId, std::vector<CellId>> corners;
        for (const auto& e : edges)
            for (const auto& f : k.cofaces(e.cell))
                corners[f.cell].push_back(e.cell);
        for (const auto& [face, at_v] : corners) {
            if (at_v.size() != 2)
                return "2-cell " + std::to_string(face) + " meets vertex " + std::to_string(v) +
                       " in " + std::to_string(at_v.size()) + " edges";
            adj[node[at_v[0]]].push_back(node[at_v[1]]);
            adj[node[at_v[1]]].push_back(node[at_v[0]]);
        }
        if (!is_single_cycle(adj))
            return "link of vertex " + std::to_string(v) + " is not a circle";
    }
    return {};
}

}  // namespace

ValidationReport validate_complex(const CellComplex& complex)
{
    ValidationReport report;
    const std::string diamond = check_diamonds(complex);
    report.add("diamond", diamond.empty(), diamond);
    const std::string dd = check_boundary_squared(complex);
    report.add("boundary-squared", dd.empty(), dd);

    std::string pseudo;
    std::string orientable;
    const int top = complex.top_dim();
    if (top < 1) {
        pseudo = "no cells of positive dimension";
    } else {
        for (CellId r : complex.cells(top - 1))
            if (complex.cofaces(r).size() != 2) {
                pseudo = "cell " + std::to_string(r) + " has " + std::to_string(complex.cofaces(r).size()) +
                         " top cofaces";
                break;
            }
    }
    report.add("pseudomanifold", pseudo.empty(), pseudo);
    if (pseudo.empty()) {
        try {
            orient(complex, complex.cell(top, 0));
        } catch (const Error& e) {
            orientable = e.detail();
        }
        report.add("orientable", orientable.empty(), orientable);
    } else {
        report.add("orientable", false, "requires a pseudomanifold");
    }

    UnionFind uf(complex.size());
    for (const auto& cov : complex.covers())
        uf.unite(cov.lower, cov.upper);
    bool connected = complex.size() > 0;
    for (CellId c = 0; c < complex.size(); ++c)
        if (uf.find(c) != uf.find(0)) {
            connected = false;
            break;
        }
    report.add("connected", connected, connected ? "" : "complex has more than one component");

    if (top <= 2) {
        const std::string cb = check_cell_boundaries(complex);
        report.add("cell-boundaries", cb.empty(), cb);
        const std::string vl = top >= 1 ? check_vertex_links(complex) : "no edges";
        report.add("vertex-links", vl.empty(), vl);
    } else {
        report.skip("cell-boundaries", "only checked up to dimension 2");
        report.skip("vertex-links", "only checked up to dimension 2");
    }
    return report;
}

}  // namespace eulerloc

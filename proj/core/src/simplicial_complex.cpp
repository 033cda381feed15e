#include "eulerloc/simplicial_complex.hpp"

#include <algorithm>
#include <set>

#include "eulerloc/error.hpp"

namespace eulerloc {

bool is_sorted_simplex(const Simplex& s)
{
    return !s.empty() && std::adjacent_find(s.begin(), s.end(), std::greater_equal<>()) == s.end();
}

Simplex drop(const Simplex& s, std::size_t i)
{
    Simplex out;
    out.reserve(s.size() - 1);
    for (std::size_t j = 0; j < s.size(); ++j)
        if (j != i)
            out.push_back(s[j]);
    return out;
}

int permutation_sign(const std::vector<Vertex>& order)
{
    int sign = 1;
    for (std::size_t i = 0; i < order.size(); ++i)
        for (std::size_t j = i + 1; j < order.size(); ++j)
            if (order[i] > order[j])
                sign = -sign;
    return sign;
}

SimplicialComplex::SimplicialComplex(std::size_t vertex_bound, const std::vector<Simplex>& simplices)
    : vertex_bound_(vertex_bound)
{
    std::set<Simplex> all;
    std::vector<Simplex> stack;
    for (const auto& s : simplices) {
        if (!is_sorted_simplex(s))
            throw Error(ErrorKind::InvalidInput, "simplex vertices must be strictly increasing");
        if (s.back() >= vertex_bound)
            throw Error(ErrorKind::InvalidInput, "simplex vertex out of range");
        if (all.insert(s).second)
            stack.push_back(s);
    }
    while (!stack.empty()) {
        Simplex s = std::move(stack.back());
        stack.pop_back();
        if (s.size() == 1)
            continue;
        for (std::size_t i = 0; i < s.size(); ++i) {
            Simplex f = drop(s, i);
            if (all.insert(f).second)
                stack.push_back(std::move(f));
        }
    }
    for (const auto& s : all) {
        const std::size_t k = s.size() - 1;
        if (by_dim_.size() <= k)
            by_dim_.resize(k + 1);
        by_dim_[k].push_back(s);
    }
    offsets_.assign(by_dim_.size() + 1, 0);
    for (std::size_t k = 0; k < by_dim_.size(); ++k) {
        offsets_[k + 1] = offsets_[k] + by_dim_[k].size();
        for (std::size_t i = 0; i < by_dim_[k].size(); ++i)
            index_.emplace(by_dim_[k][i], i);
    }
}

std::size_t SimplicialComplex::count(int k) const
{
    return (k < 0 || k > dim()) ? 0 : by_dim_[k].size();
}

const std::vector<Simplex>& SimplicialComplex::simplices(int k) const
{
    static const std::vector<Simplex> empty;
    return (k < 0 || k > dim()) ? empty : by_dim_[k];
}

std::vector<Simplex> SimplicialComplex::maximal() const
{
    std::vector<Simplex> out;
    for (int k = 0; k <= dim(); ++k)
        for (const auto& s : by_dim_[k]) {
            bool is_face = false;
            if (k < dim()) {
                for (const auto& t : by_dim_[k + 1])
                    if (std::includes(t.begin(), t.end(), s.begin(), s.end())) {
                        is_face = true;
                        break;
                    }
            }
            if (!is_face)
                out.push_back(s);
        }
    return out;
}

std::optional<std::size_t> SimplicialComplex::index(const Simplex& s) const
{
    auto it = index_.find(s);
    if (it == index_.end())
        return std::nullopt;
    return it->second;
}

CellId SimplicialComplex::cell_id(const Simplex& s) const
{
    auto it = index_.find(s);
    if (it == index_.end())
        throw Error(ErrorKind::InvalidInput, "simplex not in complex");
    return static_cast<CellId>(offsets_[s.size() - 1] + it->second);
}

const Simplex& SimplicialComplex::simplex(CellId id) const
{
    auto k = static_cast<std::size_t>(std::upper_bound(offsets_.begin(), offsets_.end(), id) - offsets_.begin()) - 1;
    return by_dim_.at(k).at(id - offsets_[k]);
}

CellComplex SimplicialComplex::cell_complex() const
{
    std::vector<int> dims;
    std::vector<SignedCover> covers;
    for (int k = 0; k <= dim(); ++k)
        for (const auto& s : by_dim_[k]) {
            dims.push_back(k);
            if (k == 0)
                continue;
            const CellId up = cell_id(s);
            for (std::size_t i = 0; i < s.size(); ++i)
                covers.push_back({cell_id(drop(s, i)), up, (i % 2 == 0) ? 1 : -1});
        }
    return CellComplex(std::move(dims), covers);
}

SimplicialComplex SimplicialComplex::full_subcomplex(const std::vector<bool>& keep) const
{
    std::vector<Simplex> kept;
    for (const auto& level : by_dim_)
        for (const auto& s : level)
            if (std::all_of(s.begin(), s.end(), [&](Vertex v) { return v < keep.size() && keep[v]; }))
                kept.push_back(s);
    return SimplicialComplex(vertex_bound_, kept);
}

}  // namespace eulerloc

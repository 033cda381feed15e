#include "eulerloc/cell_complex.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <string>

#include "eulerloc/error.hpp"

namespace eulerloc {

namespace {

void check_dims_sorted(const std::vector<int>& dims)
{
    for (std::size_t i = 0; i < dims.size(); ++i) {
        if (dims[i] < 0)
            throw Error(ErrorKind::InvalidInput, "negative cell dimension");
        if (i > 0 && dims[i] < dims[i - 1])
            throw Error(ErrorKind::InvalidInput, "cell dimensions must be non-decreasing in id order");
    }
}

}  // namespace

CellComplex::CellComplex(std::vector<int> dims, const std::vector<SignedCover>& covers)
    : dims_(std::move(dims))
{
    check_dims_sorted(dims_);
    const int top = dims_.empty() ? -1 : dims_.back();
    offsets_.assign(static_cast<std::size_t>(top + 2), 0);
    for (int k = 0; k <= top; ++k) {
        offsets_[k + 1] = offsets_[k];
        while (offsets_[k + 1] < dims_.size() && dims_[offsets_[k + 1]] == k)
            ++offsets_[k + 1];
    }

    faces_.assign(dims_.size(), {});
    cofaces_.assign(dims_.size(), {});
    for (const auto& cov : covers) {
        if (cov.lower >= dims_.size() || cov.upper >= dims_.size())
            throw Error(ErrorKind::InvalidInput, "cover references an unknown cell");
        if (dims_[cov.upper] != dims_[cov.lower] + 1)
            throw Error(ErrorKind::InvalidInput, "cover must join cells of consecutive dimension");
        if (cov.sign != 1 && cov.sign != -1)
            throw Error(ErrorKind::InvalidInput, "incidence sign must be +1 or -1");
        faces_[cov.upper].push_back({cov.lower, cov.sign});
        cofaces_[cov.lower].push_back({cov.upper, cov.sign});
    }
    auto by_cell = [](const Incidence& a, const Incidence& b) { return a.cell < b.cell; };
    auto same_cell = [](const Incidence& a, const Incidence& b) { return a.cell == b.cell; };
    for (auto* lists : {&faces_, &cofaces_}) {
        for (auto& list : *lists) {
            std::sort(list.begin(), list.end(), by_cell);
            if (std::adjacent_find(list.begin(), list.end(), same_cell) != list.end())
                throw Error(ErrorKind::InvalidInput, "duplicate covering pair");
        }
    }
}

std::size_t CellComplex::count(int k) const
{
    if (k < 0 || k > top_dim())
        return 0;
    return offsets_[k + 1] - offsets_[k];
}

std::vector<CellId> CellComplex::cells(int k) const
{
    std::vector<CellId> out;
    if (k < 0 || k > top_dim())
        return out;
    out.reserve(count(k));
    for (std::size_t c = offsets_[k]; c < offsets_[k + 1]; ++c)
        out.push_back(static_cast<CellId>(c));
    return out;
}

int CellComplex::incidence(CellId upper, CellId lower) const
{
    const auto& list = faces_.at(upper);
    auto it = std::lower_bound(list.begin(), list.end(), lower,
                               [](const Incidence& a, CellId b) { return a.cell < b; });
    return (it != list.end() && it->cell == lower) ? it->sign : 0;
}

std::vector<SignedCover> CellComplex::covers() const
{
    std::vector<SignedCover> out;
    for (CellId c = 0; c < faces_.size(); ++c)
        for (const auto& f : faces_[c])
            out.push_back({f.cell, c, f.sign});
    return out;
}

CellComplex assign_incidence_signs(const GradedPoset& poset)
{
    const auto& dims = poset.dims;
    check_dims_sorted(dims);
    const std::size_t n = dims.size();

    std::vector<std::vector<CellId>> facets(n);
    for (const auto& [lo, up] : poset.covers) {
        if (lo >= n || up >= n)
            throw Error(ErrorKind::InvalidInput, "cover references an unknown cell");
        if (dims[up] != dims[lo] + 1)
            throw Error(ErrorKind::InvalidInput, "cover must join cells of consecutive dimension");
        facets[up].push_back(lo);
    }
    for (auto& f : facets) {
        std::sort(f.begin(), f.end());
        f.erase(std::unique(f.begin(), f.end()), f.end());
    }

    // Diamond property: every (p-1)-cell below a (p+1)-cell c is reached
    // through exactly two facets of c; every edge has two endpoints.
    for (CellId c = 0; c < n; ++c) {
        if (dims[c] == 1 && facets[c].size() != 2)
            throw Error(ErrorKind::DiamondViolation,
                        "edge " + std::to_string(c) + " has " + std::to_string(facets[c].size()) +
                            " endpoints");
        if (dims[c] < 2)
            continue;
        std::map<CellId, int> middles;
        for (CellId f : facets[c])
            for (CellId r : facets[f])
                ++middles[r];
        for (const auto& [r, m] : middles)
            if (m != 2)
                throw Error(ErrorKind::DiamondViolation,
                            "interval (" + std::to_string(r) + ", " + std::to_string(c) + ") has " +
                                std::to_string(m) + " middle cells");
    }

    // sign[c][i] is the incidence of facets[c][i] in c.
    std::vector<std::vector<int>> sign(n);
    auto facet_sign = [&](CellId upper, CellId lower) {
        const auto& f = facets[upper];
        const auto pos = std::lower_bound(f.begin(), f.end(), lower) - f.begin();
        return sign[upper][pos];
    };

    for (CellId c = 0; c < n; ++c) {
        const auto& fc = facets[c];
        sign[c].assign(fc.size(), 0);
        if (dims[c] == 0)
            continue;
        if (dims[c] == 1) {
            sign[c][0] = -1;
            sign[c][1] = 1;
            continue;
        }
        // Ridge -> the two facets of c containing it.
        std::map<CellId, std::vector<std::size_t>> ridge_facets;
        for (std::size_t i = 0; i < fc.size(); ++i)
            for (CellId r : facets[fc[i]])
                ridge_facets[r].push_back(i);

        std::vector<std::vector<std::pair<std::size_t, CellId>>> adjacent(fc.size());
        for (const auto& [r, pair] : ridge_facets) {
            adjacent[pair[0]].push_back({pair[1], r});
            adjacent[pair[1]].push_back({pair[0], r});
        }

        sign[c][0] = 1;
        std::queue<std::size_t> queue;
        queue.push(0);
        while (!queue.empty()) {
            const std::size_t a = queue.front();
            queue.pop();
            for (const auto& [b, r] : adjacent[a]) {
                // [c:a][a:r] + [c:b][b:r] = 0
                const int want = -sign[c][a] * facet_sign(fc[a], r) * facet_sign(fc[b], r);
                if (sign[c][b] == 0) {
                    sign[c][b] = want;
                    queue.push(b);
                } else if (sign[c][b] != want) {
                    throw Error(ErrorKind::SignInconsistency,
                                "no consistent incidence signs on the boundary of cell " + std::to_string(c));
                }
            }
        }
        if (std::find(sign[c].begin(), sign[c].end(), 0) != sign[c].end())
            throw Error(ErrorKind::SignInconsistency,
                        "boundary of cell " + std::to_string(c) + " is not connected through ridges");
    }

    std::vector<SignedCover> covers;
    for (CellId c = 0; c < n; ++c)
        for (std::size_t i = 0; i < facets[c].size(); ++i)
            covers.push_back({facets[c][i], c, sign[c][i]});
    return CellComplex(dims, covers);
}

}  // namespace eulerloc

#include "eulerloc/refinement.hpp"

#include <algorithm>
#include <map>
#include <queue>

#include "eulerloc/error.hpp"

namespace eulerloc {

namespace {

std::string face_text(const Simplex& face)
{
    std::string s = "{";
    for (std::size_t i = 0; i < face.size(); ++i)
        s += (i ? "," : "") + std::to_string(face[i]);
    return s + "}";
}

}  // namespace

RefinementMap::RefinementMap(const TriangulatedBundle& bundle, const TilingComplex& source_tiling,
                             const DualComplex& source, const TilingComplex& target_tiling,
                             const DualComplex& target, bool inputs_validated)
    : source_face_(source_tiling.face),
      target_face_(target_tiling.face),
      source_(&source.complex),
      target_(&target.complex),
      images_(source.complex.size())
{
    const Simplex& J = source_face_;
    const Simplex& I = target_face_;
    if (!std::includes(I.begin(), I.end(), J.begin(), J.end()))
        throw Error(ErrorKind::InvalidInput, "refinement source face is not contained in the target face");
    const std::string pair = face_text(J) + " -> " + face_text(I);
    auto violation = [&](const std::string& what) {
        const std::string cause = inputs_validated
                                      ? "; both faces passed sphere validation, so the refinement rule itself failed"
                                      : "; the faces did not pass validation, so the bundle is malformed";
        return Error(ErrorKind::ChainMapViolation, what + " for " + pair + cause);
    };

    // Candidates by source dual cell.
    std::vector<std::vector<CellId>> candidates(source.complex.size());
    for (CellId t = 0; t < target_tiling.tiles.size(); ++t) {
        const Simplex& s = target_tiling.tiles[t];
        Simplex trace;
        std::map<Vertex, int> extra;
        for (Vertex v : s) {
            const Vertex c = bundle.project(v);
            if (std::binary_search(J.begin(), J.end(), c))
                trace.push_back(v);
            else
                ++extra[c];
        }
        if (std::any_of(extra.begin(), extra.end(), [](const auto& e) { return e.second != 1; }))
            continue;
        const auto src = source_tiling.find(trace);
        if (!src)
            continue;
        candidates[source.dual_of_tile[*src]].push_back(target.dual_of_tile[t]);
    }

    for (CellId c : source.complex.cells(0)) {
        const auto& cand = candidates[c];
        if (cand.empty())
            throw Error(ErrorKind::InclusionMissing,
                        "no tile refines vertex " + std::to_string(c) + " for " + pair);
        if (cand.size() > 1)
            throw Error(ErrorKind::InclusionAmbiguous,
                        std::to_string(cand.size()) + " tiles refine vertex " + std::to_string(c) + " for " + pair);
        images_[c] = {{cand[0], 1}};
    }

    for (int p = 1; p <= source.complex.top_dim(); ++p) {
        for (CellId c : source.complex.cells(p)) {
            std::map<CellId, Rational> want;  // rho(d c)
            for (const auto& f : source.complex.faces(c))
                for (const auto& img : images_[f.cell])
                    want[img.cell] += f.sign * img.sign;

            auto& cand = candidates[c];
            std::sort(cand.begin(), cand.end());
            if (cand.empty())
                throw violation("no tile refines cell " + std::to_string(c));
            std::map<CellId, std::vector<std::pair<std::size_t, int>>> touching;  // face -> (candidate, [d:f])
            for (std::size_t k = 0; k < cand.size(); ++k)
                for (const auto& f : target.complex.faces(cand[k]))
                    touching[f.cell].push_back({k, f.sign});

            std::vector<int> sign(cand.size(), 0);
            std::queue<std::size_t> queue;
            for (const auto& [f, list] : touching)
                if (list.size() == 1) {
                    const auto it = want.find(f);
                    const Rational t = it == want.end() ? Rational(0) : it->second;
                    if (t != 1 && t != -1)
                        throw violation("unmatched boundary cell " + std::to_string(f));
                    const int s = (t == 1 ? 1 : -1) * list[0].second;
                    if (sign[list[0].first] == 0) {
                        sign[list[0].first] = s;
                        queue.push(list[0].first);
                    }
                }
            if (queue.empty()) {
                // No boundary anchor (closed image): the lowest candidate gets +1.
                sign[0] = 1;
                queue.push(0);
            }
            while (!queue.empty()) {
                const std::size_t k = queue.front();
                queue.pop();
                for (const auto& f : target.complex.faces(cand[k])) {
                    const auto& list = touching[f.cell];
                    if (list.size() != 2)
                        continue;
                    const auto it = want.find(f.cell);
                    const Rational t = it == want.end() ? Rational(0) : it->second;
                    const auto& mine = list[0].first == k ? list[0] : list[1];
                    const auto& other = list[0].first == k ? list[1] : list[0];
                    const Rational rest = (t - sign[k] * mine.second) * other.second;
                    if (rest != 1 && rest != -1)
                        throw violation("inconsistent signs at cell " + std::to_string(f.cell));
                    const int s = rest == 1 ? 1 : -1;
                    if (sign[other.first] == 0) {
                        sign[other.first] = s;
                        queue.push(other.first);
                    } else if (sign[other.first] != s) {
                        throw violation("inconsistent signs at cell " + std::to_string(f.cell));
                    }
                }
            }
            if (std::find(sign.begin(), sign.end(), 0) != sign.end())
                throw violation("signs of cell " + std::to_string(c) + " are undetermined");
            auto& img = images_[c];
            for (std::size_t k = 0; k < cand.size(); ++k)
                img.push_back({cand[k], sign[k]});

            std::map<CellId, Rational> got;
            for (const auto& d : img)
                for (const auto& f : target.complex.faces(d.cell))
                    got[f.cell] += d.sign * f.sign;
            std::erase_if(got, [](const auto& e) { return e.second == 0; });
            std::erase_if(want, [](const auto& e) { return e.second == 0; });
            if (got != want)
                throw violation("d rho != rho d on cell " + std::to_string(c));
        }
    }
}

RationalChain RefinementMap::apply(const RationalChain& chain) const
{
    if (&chain.complex() != source_)
        throw Error(ErrorKind::InvalidInput, "chain does not live on the refinement source");
    RationalChain out(*target_, chain.dim());
    for (const auto& [c, v] : chain.terms())
        for (const auto& img : images_[c])
            out.add(img.cell, img.sign * v);
    return out;
}

bool RefinementMap::is_chain_map() const
{
    for (int p = 1; p <= source_->top_dim(); ++p)
        for (CellId c : source_->cells(p)) {
            const auto cell = RationalChain::cell(*source_, c);
            if (boundary(apply(cell)) != apply(boundary(cell)))
                return false;
        }
    return true;
}

}  // namespace eulerloc

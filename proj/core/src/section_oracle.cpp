#include "eulerloc/section_oracle.hpp"

#include <algorithm>

#include "eulerloc/error.hpp"
#include "eulerloc/necklace.hpp"
#include "eulerloc/winding.hpp"

namespace eulerloc {

namespace {

// Edges from position a forward to position b, with fundamental signs.
void add_forward_arc(RationalChain& chain, const OrientedCircle& circle, std::size_t a, std::size_t b, int scale)
{
    const std::size_t len = circle.vertices.size();
    for (std::size_t k = a; k != b; k = (k + 1) % len)
        chain.add(circle.edges[k], scale * circle.signs[k]);
}

}  // namespace

std::vector<SectionPath> all_section_paths()
{
    std::vector<SectionPath> out;
    for (int mask = 0; mask < 8; ++mask)
        out.push_back({{(mask & 1) == 0, (mask & 2) == 0, (mask & 4) == 0}});
    return out;
}

RationalChain section_loop(const BundleModel& model, const Simplex& simplex, const VertexTuple& tuple,
                           const SectionPath& path)
{
    if (model.n() != 1)
        throw Error(ErrorKind::FormulaUnsupported, "section oracle needs circle fibers (n = 1)");
    if (simplex.size() != 3 || tuple.size() != 3)
        throw Error(ErrorKind::BadDimension, "section oracle needs a base triangle");
    const auto& fund = model.fundamental(simplex);
    const auto circle = oriented_circle(fund);

    std::array<std::size_t, 3> at{};
    for (std::size_t i = 0; i < 3; ++i) {
        const CellId v = model.include_vertex(simplex[i], tuple[i], simplex);
        at[i] = static_cast<std::size_t>(std::find(circle.vertices.begin(), circle.vertices.end(), v) -
                                         circle.vertices.begin());
    }
    RationalChain loop(fund.complex(), 1);
    for (std::size_t k = 0; k < 3; ++k) {
        const std::size_t from = at[k];
        const std::size_t to = at[(k + 1) % 3];
        if (path.forward[k])
            add_forward_arc(loop, circle, from, to, 1);
        else
            add_forward_arc(loop, circle, to, from, -1);
    }
    return loop;
}

Rational section_degree(const BundleModel& model, const Simplex& simplex, const VertexTuple& tuple,
                        const SectionPath& path)
{
    const auto loop = section_loop(model, simplex, tuple, path);
    return fundamental_coefficient(loop, model.fundamental(simplex));
}

Rational n1_section_oracle(const BundleModel& model, const Simplex& simplex, const VertexTuple& tuple)
{
    Rational sum = 0;
    for (const auto& path : all_section_paths())
        sum += section_degree(model, simplex, tuple, path);
    return sum / 8;
}

}  // namespace eulerloc

#include "eulerloc/bundle_model.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <set>

#include "eulerloc/error.hpp"
#include "eulerloc/laplacian.hpp"
#include "eulerloc/parallel.hpp"

namespace eulerloc {

namespace {

std::string face_text(const Simplex& face)
{
    std::string s = "{";
    for (std::size_t i = 0; i < face.size(); ++i)
        s += (i ? "," : "") + std::to_string(face[i]);
    return s + "}";
}

std::vector<Simplex> proper_subfaces(const Simplex& face)
{
    std::vector<Simplex> out;
    const std::size_t k = face.size();
    for (std::size_t mask = 1; mask + 1 < (std::size_t{1} << k); ++mask) {
        Simplex s;
        for (std::size_t i = 0; i < k; ++i)
            if (mask & (std::size_t{1} << i))
                s.push_back(face[i]);
        out.push_back(std::move(s));
    }
    std::sort(out.begin(), out.end());
    return out;
}

OrientationClass anchor_orientation(const FaceModel& fiber, const FiberOrientation& fo)
{
    const auto& T = fiber.tiling.complex;
    const int n = fiber.tiling.n;
    OrientationClass out;
    out.signs.assign(T.count(n), 0);
    out.reference = T.cell(n, 0);
    for (const auto& [s, sign] : fo.signs) {
        const auto id = fiber.tiling.find(s);
        if (!id || T.dim(*id) != n)
            throw Error(ErrorKind::InvalidInput, "fiber orientation names a simplex outside the top of the anchor fiber");
        out.signs[T.local_index(*id)] = sign;
    }
    if (std::find(out.signs.begin(), out.signs.end(), 0) != out.signs.end())
        throw Error(ErrorKind::InvalidInput, "fiber orientation must sign every top simplex of the anchor fiber");
    if (!boundary(fundamental_class(T, out)).is_zero())
        throw Error(ErrorKind::NotOrientable, "fiber orientation over anchor is not coherent");
    return out;
}

}  // namespace

BundleModel::BundleModel(const TriangulatedBundle& bundle, ModelOptions options) : bundle_(&bundle)
{
    if (bundle.n() < 1)
        throw Error(ErrorKind::InvalidInput, "fiber dimension must be at least 1");
    top_ = bundle.base().simplices(bundle.n() + 1);
    build_faces(options);
    build_refinements(options);
    orient_family();
}

void BundleModel::build_faces(const ModelOptions& options)
{
    const auto& base = bundle_->base();
    std::map<Simplex, std::vector<Simplex>> by_image;
    for (int k = 0; k <= bundle_->total().dim(); ++k)
        for (const auto& s : bundle_->total().simplices(k))
            by_image[bundle_->image(s)].push_back(s);

    std::vector<Simplex> faces;
    for (int k = 0; k <= std::min(base.dim(), bundle_->n() + 1); ++k)
        for (const auto& f : base.simplices(k))
            faces.push_back(f);

    std::vector<std::unique_ptr<FaceModel>> built(faces.size());
    parallel_for(options.jobs, faces.size(), [&](std::size_t i) {
        auto model = std::make_unique<FaceModel>();
        auto it = by_image.find(faces[i]);
        model->tiling = fiber_tiling(*bundle_, faces[i], it == by_image.end() ? std::vector<Simplex>{} : it->second);
        model->dual = dual_complex(*bundle_, model->tiling);
        if (options.validate_faces) {
            model->report = validate_face(model->tiling, model->dual);
            if (!model->report.passed()) {
                std::string failed;
                for (const auto& c : model->report.checks())
                    if (c.status == CheckStatus::Fail)
                        failed += (failed.empty() ? "" : ", ") + c.name;
                throw Error(ErrorKind::NotPseudomanifold,
                            "face " + face_text(faces[i]) + " fails " + failed);
            }
        }
        built[i] = std::move(model);
    });
    for (std::size_t i = 0; i < faces.size(); ++i)
        faces_.emplace(faces[i], std::move(built[i]));
    faces_validated_ = options.validate_faces;
}

void BundleModel::build_refinements(const ModelOptions& options)
{
    std::vector<std::pair<Simplex, Simplex>> pairs;
    for (const auto& [face, model] : faces_)
        if (face.size() >= 2)
            for (auto& sub : proper_subfaces(face))
                pairs.emplace_back(std::move(sub), face);

    std::vector<std::unique_ptr<RefinementMap>> built(pairs.size());
    parallel_for(options.jobs, pairs.size(), [&](std::size_t i) {
        const auto& src = *faces_.at(pairs[i].first);
        const auto& dst = *faces_.at(pairs[i].second);
        built[i] = std::make_unique<RefinementMap>(*bundle_, src.tiling, src.dual, dst.tiling, dst.dual,
                                                   faces_validated_);
    });
    for (std::size_t i = 0; i < pairs.size(); ++i)
        refinements_.emplace(std::move(pairs[i]), std::move(built[i]));
}

void BundleModel::orient_family()
{
    const auto& base = bundle_->base();
    const std::size_t nv = base.count(0);

    std::map<Vertex, std::vector<Vertex>> adjacency;
    for (const auto& e : base.simplices(1)) {
        adjacency[e[0]].push_back(e[1]);
        adjacency[e[1]].push_back(e[0]);
    }
    std::map<Vertex, const FiberOrientation*> anchors;
    for (const auto& fo : bundle_->data().fiber_orientation)
        if (!anchors.emplace(fo.anchor, &fo).second)
            throw Error(ErrorKind::InvalidInput, "two fiber orientations share an anchor");

    auto fiber = [&](Vertex v) -> FaceModel& { return *faces_.at(Simplex{v}); };
    auto set_fiber_fundamental = [&](Vertex v, RationalChain fund) {
        FaceModel& f = fiber(v);
        f.dual_orientation = orientation_from_chain(fund);
        f.fundamental = std::move(fund);
    };
    auto transported = [&](Vertex from, const Simplex& edge) {
        return refinement(Simplex{from}, edge).apply(*fiber(from).fundamental);
    };

    std::set<Vertex> reached;
    for (std::size_t i = 0; i < nv; ++i) {
        const Vertex root = base.simplices(0)[i][0];
        if (reached.count(root))
            continue;
        // Collect the component, then orient it from its anchor.
        std::vector<Vertex> component;
        std::queue<Vertex> queue;
        queue.push(root);
        reached.insert(root);
        while (!queue.empty()) {
            const Vertex v = queue.front();
            queue.pop();
            component.push_back(v);
            for (Vertex w : adjacency[v])
                if (reached.insert(w).second)
                    queue.push(w);
        }
        std::sort(component.begin(), component.end());
        const FiberOrientation* anchor = nullptr;
        for (Vertex v : component)
            if (anchors.count(v)) {
                if (!anchor)
                    anchor = anchors.at(v);
            }
        if (!anchor)
            throw Error(ErrorKind::InvalidInput,
                        "no fiber orientation for the base component of vertex " + std::to_string(root));

        FaceModel& start = fiber(anchor->anchor);
        const auto eps = anchor_orientation(start, *anchor);
        set_fiber_fundamental(anchor->anchor, dual_fundamental(start.tiling, start.dual, eps));

        std::set<Vertex> done{anchor->anchor};
        std::queue<Vertex> order;
        order.push(anchor->anchor);
        while (!order.empty()) {
            const Vertex u = order.front();
            order.pop();
            auto next = adjacency[u];
            std::sort(next.begin(), next.end());
            for (Vertex w : next) {
                if (done.count(w))
                    continue;
                const Simplex edge{std::min(u, w), std::max(u, w)};
                const auto target = transported(u, edge);
                FaceModel& fw = fiber(w);
                auto fund = fundamental_class(fw.dual.complex, orient(fw.dual.complex, fw.dual.complex.cell(fw.tiling.n, 0)));
                const auto image = refinement(Simplex{w}, edge).apply(fund);
                if (image == -target)
                    fund = -fund;
                else if (image != target)
                    throw Error(ErrorKind::ChainMapViolation,
                                "refinement over edge " + face_text(edge) + " does not carry fiber classes to each other");
                set_fiber_fundamental(w, std::move(fund));
                done.insert(w);
                order.push(w);
            }
        }
        for (Vertex v : component)
            if (anchors.count(v) && anchors.at(v) != anchor) {
                FaceModel& f = fiber(v);
                const auto expected = dual_fundamental(f.tiling, f.dual, anchor_orientation(f, *anchors.at(v)));
                if (expected != *f.fundamental)
                    throw Error(ErrorKind::NonOrientableTransport,
                                "fiber orientation over " + std::to_string(v) + " disagrees with the transported one");
            }
    }

    for (const auto& e : base.simplices(1))
        if (transported(e[0], e) != transported(e[1], e))
            throw Error(ErrorKind::NonOrientableTransport,
                        "fiber orientation transport around edge " + face_text(e) + " is inconsistent");

    for (auto& [face, model] : faces_) {
        if (face.size() >= 2) {
            auto fund = refinement(Simplex{face[0]}, face).apply(*fiber(face[0]).fundamental);
            try {
                model->dual_orientation = orientation_from_chain(fund);
            } catch (const Error&) {
                throw Error(ErrorKind::ChainMapViolation,
                            "refined fiber class over " + face_text(face) + " is not a fundamental class");
            }
            model->fundamental = std::move(fund);
        }
        model->tiling_orientation = tiling_orientation(model->tiling, model->dual, *model->fundamental);
    }
    for (const auto& [key, map] : refinements_)
        if (map->apply(fundamental(key.first)) != fundamental(key.second))
            throw Error(ErrorKind::NonOrientableTransport,
                        "refinement " + face_text(key.first) + " -> " + face_text(key.second) +
                            " does not preserve fundamental classes");
}

std::vector<Simplex> BundleModel::faces() const
{
    std::vector<Simplex> out;
    for (const auto& [f, m] : faces_)
        out.push_back(f);
    return out;
}

const FaceModel& BundleModel::face(const Simplex& f) const
{
    auto it = faces_.find(f);
    if (it == faces_.end())
        throw Error(ErrorKind::InvalidInput, "face " + face_text(f) + " is not part of the model");
    return *it->second;
}

const RefinementMap& BundleModel::refinement(const Simplex& from, const Simplex& to) const
{
    auto it = refinements_.find({from, to});
    if (it == refinements_.end())
        throw Error(ErrorKind::InvalidInput, "no refinement " + face_text(from) + " -> " + face_text(to));
    return *it->second;
}

std::vector<CellId> BundleModel::fiber_vertices(Vertex base_vertex) const
{
    return face(Simplex{base_vertex}).dual.complex.cells(0);
}

CellId BundleModel::include_vertex(Vertex base_vertex, CellId fiber_vertex, const Simplex& target) const
{
    const Simplex v{base_vertex};
    if (target == v)
        return fiber_vertex;
    const auto image = refinement(v, target).image(fiber_vertex);
    return image.front().cell;
}

ValidationReport validate_bundle(const TriangulatedBundle& bundle, ModelOptions options)
{
    ValidationReport report;
    const auto& base = bundle.base();
    const int n = bundle.n();

    std::string bad;
    for (int k = 0; k <= bundle.total().dim() && bad.empty(); ++k)
        for (const auto& s : bundle.total().simplices(k))
            if (!base.contains(bundle.image(s))) {
                bad = "image of total simplex " + face_text(s) + " is not a base simplex";
                break;
            }
    report.add("simplicial-map", bad.empty(), bad);
    if (!bad.empty()) {
        report.skip("fiber-spheres", "simplicial map condition failed");
        report.skip("fiber-orientation", "simplicial map condition failed");
        report.skip("family", "simplicial map condition failed");
        return report;
    }

    std::string fiber_issue;
    for (const auto& vs : base.simplices(0)) {
        const auto fib = bundle.fiber(vs[0]);
        if (fib.count(0) == 0) {
            fiber_issue = "empty fiber over " + std::to_string(vs[0]);
            break;
        }
        const auto cc = fib.cell_complex();
        const auto r = validate_complex(cc);
        if (fib.dim() != n || !r.passed() || !has_sphere_homology(cc)) {
            fiber_issue = "fiber over " + std::to_string(vs[0]) + " is not a " + std::to_string(n) + "-sphere";
            break;
        }
    }
    report.add("fiber-spheres", fiber_issue.empty(), fiber_issue);

    std::string orient_issue;
    std::set<Vertex> anchors;
    for (const auto& fo : bundle.data().fiber_orientation) {
        if (!anchors.insert(fo.anchor).second) {
            orient_issue = "duplicate anchor " + std::to_string(fo.anchor);
            break;
        }
        for (const auto& [s, sign] : fo.signs)
            if (bundle.image(s) != Simplex{fo.anchor} || static_cast<int>(s.size()) != n + 1)
                orient_issue = "orientation entry outside the top of the fiber over " + std::to_string(fo.anchor);
        if (!orient_issue.empty() || !fiber_issue.empty())
            break;
        const auto fib = bundle.fiber(fo.anchor);
        const auto cc = fib.cell_complex();
        RationalChain chain(cc, n);
        for (const auto& [s, sign] : fo.signs)
            chain.add(fib.cell_id(s), sign);
        try {
            orientation_from_chain(chain);
        } catch (const Error& e) {
            orient_issue = "fiber over " + std::to_string(fo.anchor) + ": " + e.detail();
            break;
        }
    }
    if (bundle.data().fiber_orientation.empty())
        orient_issue = "no fiber orientation given";
    report.add("fiber-orientation", orient_issue.empty(), orient_issue);

    if (!fiber_issue.empty() || !orient_issue.empty()) {
        report.skip("family", "fiber checks failed");
        return report;
    }
    try {
        BundleModel model(bundle, options);
        std::size_t faces = model.faces().size();
        report.add("tilings", true, std::to_string(faces) + " faces");
        report.add("refinements", true, std::to_string(model.refinement_count()) + " chain maps");
        report.add("orientation-transport", true);
    } catch (const Error& e) {
        std::string stage = "tilings";
        switch (e.kind()) {
        case ErrorKind::InclusionMissing:
        case ErrorKind::InclusionAmbiguous:
        case ErrorKind::ChainMapViolation:
            stage = "refinements";
            break;
        case ErrorKind::NotOrientable:
        case ErrorKind::NonOrientableTransport:
        case ErrorKind::InvalidInput:
            stage = "orientation-transport";
            break;
        default:
            break;
        }
        report.add(stage, false, e.what());
    }
    return report;
}

}  // namespace eulerloc

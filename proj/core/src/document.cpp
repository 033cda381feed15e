#include "eulerloc/document.hpp"

#include <algorithm>
#include <cstdio>

#include <json.hpp>

#include "eulerloc/error.hpp"

namespace eulerloc {

namespace {

using Json = nlohmann::json;
using OrderedJson = nlohmann::ordered_json;

constexpr std::string_view kBundleFormat = "eulerloc-bundle/1";
constexpr std::string_view kCochainFormat = "eulerloc-cochain/1";
constexpr std::string_view kCycleFormat = "eulerloc-cycle/1";

std::string fnv1a64(std::string_view text)
{
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : text) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

template <typename J>
J simplex_json(const std::vector<Vertex>& s)
{
    J out = J::array();
    for (Vertex v : s)
        out.push_back(v);
    return out;
}

Simplex read_simplex(const Json& j)
{
    Simplex s;
    for (const auto& v : j)
        s.push_back(v.get<Vertex>());
    return s;
}

void check_format(const Json& j, std::string_view expected)
{
    if (j.contains("format") && j.at("format").get<std::string>() != expected)
        throw Error(ErrorKind::InvalidInput, "expected format " + std::string(expected));
}

template <typename F>
auto guarded(F&& body)
{
    try {
        return body();
    } catch (const Json::exception& e) {
        throw Error(ErrorKind::InvalidInput, std::string("malformed document: ") + e.what());
    }
}

template <typename J>
J base_json(const BundleData& d)
{
    J base = J::object();
    base["vertices"] = d.base_vertices;
    J simplices = J::array();
    for (const auto& s : d.base_simplices)
        simplices.push_back(simplex_json<J>(s));
    base["simplices"] = simplices;
    if (!d.base_orientations.empty())
        base["orientations"] = d.base_orientations;
    return base;
}

template <typename J>
J bundle_json(const BundleData& d)
{
    J out = J::object();
    out["format"] = kBundleFormat;
    out["n"] = d.n;
    out["base"] = base_json<J>(d);
    J total = J::object();
    total["vertices"] = d.total_vertices;
    J simplices = J::array();
    for (const auto& s : d.total_simplices)
        simplices.push_back(simplex_json<J>(s));
    total["simplices"] = simplices;
    out["total"] = total;
    J projection = J::object();
    projection["vertexMap"] = d.vertex_map;
    out["projection"] = projection;
    J orientation = J::array();
    for (const auto& fo : d.fiber_orientation) {
        J entry = J::object();
        entry["anchor"] = fo.anchor;
        J signs = J::array();
        for (const auto& [s, sign] : fo.signs) {
            J item = J::object();
            item["simplex"] = simplex_json<J>(s);
            item["sign"] = sign;
            signs.push_back(item);
        }
        entry["signs"] = signs;
        orientation.push_back(entry);
    }
    out["fiberOrientation"] = orientation;
    J meta = J::object();
    meta["kind"] = d.metadata.kind;
    meta["provenance"] = d.metadata.provenance;
    J pairings = J::array();
    for (const auto& p : d.metadata.expected_pairings) {
        J item = J::object();
        item["cycle"] = p.cycle;
        item["value"] = to_string(p.value);
        pairings.push_back(item);
    }
    meta["expectedPairings"] = pairings;
    out["metadata"] = meta;
    return out;
}

}  // namespace

BundleData parse_bundle(std::string_view text)
{
    return guarded([&] {
        const Json j = Json::parse(text);
        check_format(j, kBundleFormat);
        BundleData d;
        d.n = j.at("n").get<int>();
        const auto& base = j.at("base");
        d.base_vertices = base.at("vertices").get<std::vector<std::string>>();
        for (const auto& s : base.at("simplices"))
            d.base_simplices.push_back(read_simplex(s));
        if (base.contains("orientations"))
            d.base_orientations = base.at("orientations").get<std::vector<int>>();
        const auto& total = j.at("total");
        d.total_vertices = total.at("vertices").get<std::vector<std::string>>();
        for (const auto& s : total.at("simplices"))
            d.total_simplices.push_back(read_simplex(s));
        d.vertex_map = j.at("projection").at("vertexMap").get<std::vector<Vertex>>();
        for (const auto& fo : j.at("fiberOrientation")) {
            FiberOrientation entry;
            entry.anchor = fo.at("anchor").get<Vertex>();
            for (const auto& s : fo.at("signs"))
                entry.signs.push_back({read_simplex(s.at("simplex")), s.at("sign").get<int>()});
            d.fiber_orientation.push_back(std::move(entry));
        }
        if (j.contains("metadata")) {
            const auto& meta = j.at("metadata");
            d.metadata.kind = meta.value("kind", "");
            d.metadata.provenance = meta.value("provenance", "");
            if (meta.contains("expectedPairings"))
                for (const auto& p : meta.at("expectedPairings"))
                    d.metadata.expected_pairings.push_back(
                        {p.at("cycle").get<std::string>(), parse_rational(p.at("value").get<std::string>())});
        }
        return d;
    });
}

std::string dump_bundle(const BundleData& data)
{
    return bundle_json<OrderedJson>(data).dump(1) + "\n";
}

std::string bundle_digest(const BundleData& data)
{
    return fnv1a64(bundle_json<Json>(data).dump());
}

std::string base_digest(const BundleData& data)
{
    return fnv1a64(base_json<Json>(data).dump());
}

CochainDocument make_cochain_document(const TriangulatedBundle& bundle, const EulerCochain& cochain)
{
    CochainDocument doc;
    doc.formula = std::string(formula_name(cochain.formula));
    doc.tool_version = std::string(kToolVersion);
    doc.input_digest = bundle_digest(bundle.data());
    doc.base_digest = base_digest(bundle.data());
    doc.n = cochain.n;
    for (const auto& [s, v] : cochain.values) {
        const auto order = bundle.oriented(s);
        doc.values.push_back({order, permutation_sign(order) * v});
    }
    return doc;
}

EulerCochain cochain_from_document(const CochainDocument& doc)
{
    EulerCochain out;
    out.n = doc.n;
    const auto f = parse_formula(doc.formula);
    if (!f)
        throw Error(ErrorKind::InvalidInput, "unknown formula '" + doc.formula + "'");
    out.formula = *f;
    for (const auto& [order, v] : doc.values) {
        if (order.size() != static_cast<std::size_t>(doc.n + 2))
            throw Error(ErrorKind::InvalidInput, "cochain simplex has the wrong size");
        Simplex sorted = order;
        std::sort(sorted.begin(), sorted.end());
        if (!is_sorted_simplex(sorted))
            throw Error(ErrorKind::InvalidInput, "cochain simplex repeats a vertex");
        out.values[sorted] = permutation_sign(order) * v;
    }
    return out;
}

std::string dump_cochain(const CochainDocument& doc)
{
    OrderedJson j = OrderedJson::object();
    j["format"] = kCochainFormat;
    j["formula"] = doc.formula;
    j["toolVersion"] = doc.tool_version;
    j["inputDigest"] = doc.input_digest;
    j["baseDigest"] = doc.base_digest;
    j["n"] = doc.n;
    OrderedJson values = OrderedJson::array();
    for (const auto& [s, v] : doc.values) {
        OrderedJson item = OrderedJson::object();
        item["simplex"] = simplex_json<OrderedJson>(s);
        item["value"] = to_string(v);
        values.push_back(item);
    }
    j["values"] = values;
    return j.dump(2) + "\n";
}

CochainDocument parse_cochain(std::string_view text)
{
    return guarded([&] {
        const Json j = Json::parse(text);
        check_format(j, kCochainFormat);
        CochainDocument doc;
        doc.formula = j.at("formula").get<std::string>();
        doc.tool_version = j.value("toolVersion", "");
        doc.input_digest = j.value("inputDigest", "");
        doc.base_digest = j.at("baseDigest").get<std::string>();
        doc.n = j.at("n").get<int>();
        for (const auto& item : j.at("values"))
            doc.values.push_back({read_simplex(item.at("simplex")), parse_rational(item.at("value").get<std::string>())});
        return doc;
    });
}

std::string dump_cycle(const CycleDocument& doc)
{
    OrderedJson j = OrderedJson::object();
    j["format"] = kCycleFormat;
    j["baseDigest"] = doc.base_digest;
    j["dimension"] = doc.cycle.dim;
    OrderedJson terms = OrderedJson::array();
    for (const auto& [s, c] : doc.cycle.terms) {
        OrderedJson item = OrderedJson::object();
        item["simplex"] = simplex_json<OrderedJson>(s);
        item["coefficient"] = to_string(c);
        terms.push_back(item);
    }
    j["terms"] = terms;
    return j.dump(2) + "\n";
}

CycleDocument parse_cycle(std::string_view text)
{
    return guarded([&] {
        const Json j = Json::parse(text);
        check_format(j, kCycleFormat);
        CycleDocument doc;
        doc.base_digest = j.at("baseDigest").get<std::string>();
        doc.cycle.dim = j.at("dimension").get<int>();
        for (const auto& item : j.at("terms"))
            doc.cycle.terms.push_back(
                {read_simplex(item.at("simplex")), parse_rational(item.at("coefficient").get<std::string>())});
        return doc;
    });
}

}  // namespace eulerloc

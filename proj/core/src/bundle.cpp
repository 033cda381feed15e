#include "eulerloc/bundle.hpp"

#include <algorithm>

#include "eulerloc/error.hpp"

namespace eulerloc {

TriangulatedBundle::TriangulatedBundle(BundleData data) : data_(std::move(data))
{
    if (data_.n < 0)
        throw Error(ErrorKind::InvalidInput, "fiber dimension must be non-negative");
    if (!data_.base_orientations.empty() && data_.base_orientations.size() != data_.base_simplices.size())
        throw Error(ErrorKind::InvalidInput, "base orientations must parallel base simplices");
    for (int s : data_.base_orientations)
        if (s != 1 && s != -1)
            throw Error(ErrorKind::InvalidInput, "base orientation must be +1 or -1");
    if (data_.vertex_map.size() != data_.total_vertices.size())
        throw Error(ErrorKind::InvalidInput, "vertexMap needs one entry per total vertex");
    for (Vertex v : data_.vertex_map)
        if (v >= data_.base_vertices.size())
            throw Error(ErrorKind::InvalidInput, "vertexMap entry out of range");
    base_ = SimplicialComplex(data_.base_vertices.size(), data_.base_simplices);
    total_ = SimplicialComplex(data_.total_vertices.size(), data_.total_simplices);
    for (const auto& fo : data_.fiber_orientation) {
        if (fo.anchor >= data_.base_vertices.size())
            throw Error(ErrorKind::InvalidInput, "fiber orientation anchor out of range");
        for (const auto& [s, sign] : fo.signs)
            if (!is_sorted_simplex(s) || (sign != 1 && sign != -1))
                throw Error(ErrorKind::InvalidInput, "malformed fiber orientation entry");
    }
}

Simplex TriangulatedBundle::image(const Simplex& s) const
{
    Simplex out;
    out.reserve(s.size());
    for (Vertex v : s)
        out.push_back(data_.vertex_map.at(v));
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

int TriangulatedBundle::orientation_sign(const Simplex& base_simplex) const
{
    if (data_.base_orientations.empty())
        return 1;
    auto it = std::find(data_.base_simplices.begin(), data_.base_simplices.end(), base_simplex);
    if (it == data_.base_simplices.end())
        return 1;
    return data_.base_orientations[static_cast<std::size_t>(it - data_.base_simplices.begin())];
}

std::vector<Vertex> TriangulatedBundle::oriented(const Simplex& base_simplex) const
{
    std::vector<Vertex> order = base_simplex;
    if (orientation_sign(base_simplex) < 0 && order.size() >= 2)
        std::swap(order[0], order[1]);
    return order;
}

SimplicialComplex TriangulatedBundle::fiber(Vertex base_vertex) const
{
    std::vector<bool> keep(data_.vertex_map.size());
    for (std::size_t v = 0; v < keep.size(); ++v)
        keep[v] = data_.vertex_map[v] == base_vertex;
    return total_.full_subcomplex(keep);
}

BundleData flip_fiber_orientation(const BundleData& data)
{
    BundleData out = data;
    for (auto& fo : out.fiber_orientation)
        for (auto& entry : fo.signs)
            entry.second = -entry.second;
    return out;
}

}  // namespace eulerloc

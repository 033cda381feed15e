#include <gtest/gtest.h>

#include <set>

#include "eulerloc/bundle_model.hpp"
#include "eulerloc/generators.hpp"
#include "eulerloc/laplacian.hpp"
#include "support.hpp"

using namespace eulerloc;
using namespace eulerloc::testing;

TEST(NamedComplexes, Shapes)
{
    EXPECT_EQ(named_base("simplex2").simplices.size(), 1u);
    EXPECT_EQ(named_base("boundary3").simplices.size(), 4u);
    EXPECT_EQ(named_base("boundary4").simplices.size(), 5u);
    const auto torus = named_base("torus7");
    EXPECT_EQ(torus.names.size(), 7u);
    EXPECT_EQ(torus.simplices.size(), 14u);
    const SimplicialComplex t(7, torus.simplices);
    EXPECT_EQ(betti_numbers(t.cell_complex()), (std::vector<std::size_t>{1, 2, 1}));
    EXPECT_EQ(named_fiber("cycle6").count(1), 6u);
    EXPECT_EQ(named_fiber("boundary3").count(2), 4u);
    for (const char* bad : {"cycle2", "boundary1", "sphere", "cycleX"})
        EXPECT_EQ(thrown_kind([&] { named_fiber(bad); }), ErrorKind::InvalidInput) << bad;
    EXPECT_EQ(thrown_kind([] { named_base("klein"); }), ErrorKind::InvalidInput);
}

TEST(GenTrivial, StaircaseOverTriangle)
{
    const auto d = gen_trivial(named_base("simplex2"), named_fiber("cycle3"));
    EXPECT_EQ(d.n, 1);
    EXPECT_EQ(d.total_vertices.size(), 9u);
    // vertex b x f has id 3 b + f
    for (Vertex v = 0; v < 9; ++v)
        EXPECT_EQ(d.vertex_map[v], v / 3);
    EXPECT_EQ(d.metadata.kind, "trivial");
    const TriangulatedBundle b(d);
    EXPECT_EQ(b.total().dim(), 3);
    EXPECT_TRUE(validate_bundle(b).passed());
}

TEST(GenTrivial, RejectsNonSphereFibers)
{
    const SimplicialComplex arc(3, {{0, 1}, {1, 2}});
    EXPECT_EQ(thrown_kind([&] { gen_trivial(named_base("simplex2"), arc); }), ErrorKind::InvalidFiber);
}

TEST(GenTrivial, SeedsChangeNecklacesDeterministically)
{
    const auto a = gen_trivial(named_base("simplex2"), named_fiber("cycle4"), 3);
    EXPECT_EQ(a, gen_trivial(named_base("simplex2"), named_fiber("cycle4"), 3));
    EXPECT_NE(a.total_simplices, gen_trivial(named_base("simplex2"), named_fiber("cycle4"), 0).total_simplices);
}

TEST(SeededPermutation, IsAPermutation)
{
    EXPECT_EQ(seeded_permutation(5, 0), (std::vector<Vertex>{0, 1, 2, 3, 4}));
    for (std::uint64_t seed = 1; seed < 20; ++seed) {
        auto p = seeded_permutation(12, seed);
        std::set<Vertex> s(p.begin(), p.end());
        EXPECT_EQ(s.size(), 12u);
        EXPECT_EQ(*s.rbegin(), 11u);
    }
}

TEST(Subdivision, KeepsTheBundleValid)
{
    auto d = gen_trivial(named_base("boundary3"), named_fiber("cycle3"));
    const auto before = d.total_vertices.size();
    const auto [a, b] = fiber_edges(d).front();
    d = subdivide_fiber_edge(d, a, b);
    EXPECT_EQ(d.total_vertices.size(), before + 1);
    EXPECT_EQ(d.vertex_map.back(), d.vertex_map[a]);
    EXPECT_TRUE(validate_bundle(TriangulatedBundle(d)).passed());
}

TEST(Subdivision, RejectsNonFiberEdges)
{
    const auto d = gen_trivial(named_base("simplex2"), named_fiber("cycle3"));
    EXPECT_EQ(thrown_kind([&] { subdivide_fiber_edge(d, 0, 3); }), ErrorKind::NotFiberEdge);
    EXPECT_EQ(thrown_kind([&] { subdivide_fiber_edge(d, 0, 0); }), ErrorKind::InvalidInput);
}

TEST(SubdivisionProperty, RepeatedSubdivisionsValidate)
{
    for (std::uint64_t seed : {1, 2, 3}) {
        const auto d = subdivided(gen_trivial(named_base("simplex2"), named_fiber("cycle3"), seed), 5, seed);
        EXPECT_TRUE(validate_bundle(TriangulatedBundle(d)).passed()) << seed;
    }
}

TEST(Relabel, TotalAndBaseRelabellingStayValid)
{
    const auto hopf = hopf_fixture();
    const auto total = relabel_total(hopf, seeded_permutation(hopf.total_vertices.size(), 4));
    EXPECT_TRUE(validate_bundle(TriangulatedBundle(total)).passed());
    const auto base = relabel_base(hopf, seeded_permutation(hopf.base_vertices.size(), 5));
    EXPECT_TRUE(validate_bundle(TriangulatedBundle(base)).passed());
    EXPECT_EQ(thrown_kind([&] { relabel_total(hopf, {0, 1}); }), ErrorKind::InvalidInput);
}

TEST(HopfFixture, Shape)
{
    const auto h = hopf_fixture();
    EXPECT_EQ(h.n, 1);
    EXPECT_EQ(h.base_vertices.size(), 4u);
    EXPECT_EQ(h.total_vertices.size(), 12u);
    EXPECT_EQ(h.total_simplices.size(), 36u);
    ASSERT_EQ(h.metadata.expected_pairings.size(), 1u);
    EXPECT_EQ(abs(h.metadata.expected_pairings[0].value), 1);
}

#include <gtest/gtest.h>

#include "eulerloc/simplicial_complex.hpp"
#include "support.hpp"

using namespace eulerloc;
using namespace eulerloc::testing;

TEST(SimplicialComplex, ClosesUnderFaces)
{
    const SimplicialComplex s(5, {{0, 1, 2, 3}});
    EXPECT_EQ(s.dim(), 3);
    EXPECT_EQ(s.count(0), 4u);
    EXPECT_EQ(s.count(1), 6u);
    EXPECT_EQ(s.count(2), 4u);
    EXPECT_EQ(s.count(3), 1u);
    EXPECT_TRUE(s.contains({1, 3}));
    EXPECT_FALSE(s.contains({4}));
    EXPECT_EQ(s.maximal(), (std::vector<Simplex>{{0, 1, 2, 3}}));
    EXPECT_EQ(s.index({0, 2}), 1u);
    EXPECT_FALSE(s.index({3, 4}));
}

TEST(SimplicialComplex, CellIdsRoundTrip)
{
    const SimplicialComplex s(4, {{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}});
    const auto c = s.cell_complex();
    for (CellId id = 0; id < c.size(); ++id)
        EXPECT_EQ(s.cell_id(s.simplex(id)), id);
    // [s : s - s_i] = (-1)^i
    const CellId t = s.cell_id({0, 1, 2});
    EXPECT_EQ(c.incidence(t, s.cell_id({1, 2})), 1);
    EXPECT_EQ(c.incidence(t, s.cell_id({0, 2})), -1);
    EXPECT_EQ(c.incidence(t, s.cell_id({0, 1})), 1);
}

TEST(SimplicialComplex, RejectsBadInput)
{
    EXPECT_EQ(thrown_kind([] { SimplicialComplex(3, {{1, 0}}); }), ErrorKind::InvalidInput);
    EXPECT_EQ(thrown_kind([] { SimplicialComplex(3, {{0, 0}}); }), ErrorKind::InvalidInput);
    EXPECT_EQ(thrown_kind([] { SimplicialComplex(3, {{0, 3}}); }), ErrorKind::InvalidInput);
}

TEST(SimplicialComplex, FullSubcomplexKeepsLabels)
{
    const SimplicialComplex s(4, {{0, 1, 2}, {1, 2, 3}});
    const auto sub = s.full_subcomplex({false, true, true, true});
    EXPECT_EQ(sub.maximal(), (std::vector<Simplex>{{1, 2, 3}}));
    EXPECT_EQ(sub.vertex_bound(), 4u);
}

TEST(SimplexHelpers, PermutationSignAndDrop)
{
    EXPECT_EQ(permutation_sign({0, 1, 2}), 1);
    EXPECT_EQ(permutation_sign({1, 0, 2}), -1);
    EXPECT_EQ(permutation_sign({2, 0, 1}), 1);
    EXPECT_EQ(permutation_sign({5, 9, 3, 1}), -1);
    EXPECT_EQ(drop({3, 5, 8}, 1), (Simplex{3, 8}));
    EXPECT_TRUE(is_sorted_simplex({1, 4}));
    EXPECT_FALSE(is_sorted_simplex({4, 4}));
}

TEST(SimplexHelpersProperty, PermutationSignIsMultiplicative)
{
    Rng rng(9);
    for (int trial = 0; trial < 200; ++trial) {
        std::vector<Vertex> p{0, 1, 2, 3, 4, 5};
        std::shuffle(p.begin(), p.end(), rng);
        const std::size_t i = rng() % 5;
        auto q = p;
        std::swap(q[i], q[i + 1]);
        EXPECT_EQ(permutation_sign(q), -permutation_sign(p));
    }
}

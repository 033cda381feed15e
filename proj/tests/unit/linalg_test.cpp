#include <gtest/gtest.h>

#include "eulerloc/harmonic.hpp"
#include "eulerloc/laplacian.hpp"
#include "eulerloc/simplicial_complex.hpp"
#include "eulerloc/sparse_matrix.hpp"
#include "eulerloc/symmetric_solver.hpp"
#include "support.hpp"

using namespace eulerloc;
using namespace eulerloc::testing;

namespace {

// A=0, B=1, C=2; edges A->B=3, B->C=4, C->A=5.
CellComplex triangle()
{
    return CellComplex({0, 0, 0, 1, 1, 1}, {{0, 3, -1}, {1, 3, 1}, {1, 4, -1}, {2, 4, 1}, {2, 5, -1}, {0, 5, 1}});
}

// A..D = 0..3; edges A->B=4, B->C=5, C->D=6, D->A=7.
CellComplex square()
{
    return CellComplex({0, 0, 0, 0, 1, 1, 1, 1}, {{0, 4, -1}, {1, 4, 1}, {1, 5, -1}, {2, 5, 1},
                                                  {2, 6, -1}, {3, 6, 1}, {3, 7, -1}, {0, 7, 1}});
}

SparseRationalMatrix dense(const std::vector<std::vector<int>>& rows)
{
    std::vector<SparseRationalMatrix::Triplet> t;
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < rows[i].size(); ++j)
            t.emplace_back(i, j, rows[i][j]);
    return SparseRationalMatrix::from_triplets(rows.size(), rows.empty() ? 0 : rows[0].size(), t);
}

SimplicialComplex sphere2() { return SimplicialComplex(4, {{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}}); }

}  // namespace

TEST(SparseMatrix, TripletsSumAndDropZeros)
{
    const auto m = SparseRationalMatrix::from_triplets(2, 3, {{0, 1, 2}, {0, 1, -2}, {1, 2, Rational(1, 3)}, {1, 2, 1}});
    EXPECT_EQ(m.nonzeros(), 1u);
    EXPECT_EQ(m.at(1, 2), Rational(4, 3));
    EXPECT_EQ(m.at(0, 1), 0);
    EXPECT_EQ(m.transpose().at(2, 1), Rational(4, 3));
    EXPECT_EQ(m.transpose().transpose(), m);
}

TEST(SparseMatrix, ProductAndApply)
{
    const auto a = dense({{1, 2}, {0, 1}});
    const auto b = dense({{3, 0}, {1, 1}});
    EXPECT_EQ(a * b, dense({{5, 2}, {1, 1}}));
    EXPECT_EQ(a + b, dense({{4, 2}, {1, 2}}));
    EXPECT_EQ(a.apply({1, 1}), (RationalVector{3, 1}));
    EXPECT_FALSE(a.is_symmetric());
    EXPECT_TRUE((a * a.transpose()).is_symmetric());
    EXPECT_EQ(a.scaled({1, 2}, {3, 1}), dense({{3, 2}, {0, 2}}));
}

TEST(SparseMatrix, BoundaryMatrixShape)
{
    const auto c = sphere2().cell_complex();
    const auto b2 = boundary_matrix(c, 2);
    EXPECT_EQ(b2.rows(), 6u);
    EXPECT_EQ(b2.cols(), 4u);
    EXPECT_EQ(b2.nonzeros(), 12u);
    EXPECT_EQ(boundary_matrix(c, 1) * b2, SparseRationalMatrix(4, 4));
    EXPECT_EQ(boundary_matrix(c, 0).rows(), 0u);
}

TEST(RowEchelon, RankAndKernel)
{
    const auto m = dense({{1, 2, 3}, {2, 4, 6}, {1, 0, 1}});
    const RowEchelon e(m);
    EXPECT_EQ(e.rank(), 2u);
    const auto kernel = e.kernel_basis();
    ASSERT_EQ(kernel.size(), 1u);
    EXPECT_EQ(m.apply(kernel[0]), (RationalVector{0, 0, 0}));
}

TEST(SymmetricSolver, SolvesDefiniteSystems)
{
    const auto a = dense({{4, 1, 0}, {1, 3, 1}, {0, 1, 2}});
    const SymmetricSolver s(a);
    EXPECT_EQ(s.rank(), 3u);
    const RationalVector b{1, Rational(1, 2), -2};
    const auto x = s.solve(b);
    ASSERT_TRUE(x);
    EXPECT_EQ(a.apply(*x), b);
}

TEST(SymmetricSolver, SemidefiniteRangeAndNullopt)
{
    const auto lap = dense({{1, -1, 0}, {-1, 2, -1}, {0, -1, 1}});
    const SymmetricSolver s(lap);
    EXPECT_EQ(s.rank(), 2u);
    const RationalVector in_range{1, 0, -1};
    const auto x = s.solve(in_range);
    ASSERT_TRUE(x);
    EXPECT_EQ(lap.apply(*x), in_range);
    EXPECT_FALSE(s.solve({1, 0, 0}));
}

TEST(SymmetricSolver, RejectsBadMatrices)
{
    EXPECT_EQ(thrown_kind([] { SymmetricSolver(dense({{1, 2}, {0, 1}})); }), ErrorKind::InvalidInput);
    EXPECT_EQ(thrown_kind([] { SymmetricSolver(dense({{0, 1}, {1, 0}})); }), ErrorKind::InvalidInput);
    EXPECT_EQ(thrown_kind([] { SymmetricSolver(dense({{1, 0, 0}})); }), ErrorKind::InvalidInput);
}

TEST(SymmetricSolver, PivotOrderIsDeterministic)
{
    const auto l = laplacian(sphere2().cell_complex(), 1).matrix;
    EXPECT_EQ(SymmetricSolver(l).pivot_order(), SymmetricSolver(l).pivot_order());
}

TEST(Laplacian, TriangleCircleGraphLaplacian)
{
    const auto c = triangle();
    const auto l = laplacian(c, 0);
    EXPECT_EQ(l.matrix, dense({{2, -1, -1}, {-1, 2, -1}, {-1, -1, 2}}));
    EXPECT_EQ(l.kernel_dimension(), 1u);
    EXPECT_EQ(laplacian(c, 1).kernel_dimension(), 1u);
}

TEST(Laplacian, SphereKernels)
{
    const auto c = sphere2().cell_complex();
    EXPECT_EQ(laplacian(c, 2).kernel_dimension(), 1u);
    EXPECT_EQ(betti_numbers(c), (std::vector<std::size_t>{1, 0, 1}));
    EXPECT_EQ(betti_numbers(triangle()), (std::vector<std::size_t>{1, 1}));
    EXPECT_TRUE(has_sphere_homology(c));
    EXPECT_EQ(thrown_kind([&] { laplacian(c, 3); }), ErrorKind::BadDimension);
}

TEST(Laplacian, DefectiveComplexesStillHaveRanks)
{
    // three discs on one triangle: b2 = 2
    CellComplex theta({0, 0, 0, 1, 1, 1, 2, 2, 2},
                      {{0, 3, -1}, {1, 3, 1}, {1, 4, -1}, {2, 4, 1}, {2, 5, -1}, {0, 5, 1},
                       {3, 6, 1}, {4, 6, 1}, {5, 6, 1}, {3, 7, 1}, {4, 7, 1}, {5, 7, 1},
                       {3, 8, 1}, {4, 8, 1}, {5, 8, 1}});
    EXPECT_EQ(betti_numbers(theta), (std::vector<std::size_t>{1, 0, 2}));
    EXPECT_FALSE(has_sphere_homology(theta));
}

TEST(Laplacian, WeightedFormIsSymmetricWithSameKernel)
{
    const auto c = sphere2().cell_complex();
    CellWeights w;
    for (CellId id = 0; id < c.size(); ++id)
        w.push_back(Rational(1 + id % 3, 1 + id % 2));
    for (int k = 0; k <= 2; ++k) {
        const auto l = laplacian(c, k, &w);
        EXPECT_TRUE(l.matrix.is_symmetric());
        EXPECT_EQ(l.kernel_dimension(), laplacian(c, k).kernel_dimension());
    }
    CellWeights bad(c.size(), 1);
    bad[0] = 0;
    EXPECT_EQ(thrown_kind([&] { laplacian(c, 0, &bad); }), ErrorKind::InvalidInput);
}

TEST(Harmonic, TriangleCircleExample)
{
    const auto c = triangle();
    const auto x = harmonic_extension(chain_of(c, 0, {{1, 1}, {0, -1}}));
    EXPECT_EQ(x, chain_of(c, 1, {{3, Rational(2, 3)}, {4, Rational(-1, 3)}, {5, Rational(-1, 3)}}));
}

TEST(Harmonic, SquareCircleExample)
{
    const auto c = square();
    const auto x = harmonic_extension(chain_of(c, 0, {{2, 1}, {0, -1}}));
    EXPECT_EQ(x, chain_of(c, 1, {{4, Rational(1, 2)}, {5, Rational(1, 2)}, {6, Rational(-1, 2)}, {7, Rational(-1, 2)}}));
}

TEST(Harmonic, ZeroAndErrors)
{
    const auto c = triangle();
    EXPECT_TRUE(harmonic_extension(RationalChain(c, 0)).is_zero());
    EXPECT_EQ(thrown_kind([&] { harmonic_extension(RationalChain::cell(c, 0)); }), ErrorKind::NotExact);
    EXPECT_EQ(thrown_kind([&] { HarmonicExtender(c, 1); }), ErrorKind::DimensionTop);
    const auto s = sphere2().cell_complex();
    EXPECT_EQ(thrown_kind([&] { harmonic_extension(RationalChain::cell(s, s.cell(1, 0))); }), ErrorKind::NotClosed);
}

TEST(HarmonicProperty, ExtendsAndIsOrthogonalToCycles)
{
    Rng rng(5);
    for (const auto& nc : sample_complexes()) {
        const auto& c = nc.complex;
        for (int k = 0; k < c.top_dim(); ++k) {
            const HarmonicExtender ext(c, k);
            const auto cycles = cycle_basis_oracle(c, k + 1);
            for (int trial = 0; trial < 15; ++trial) {
                const auto a = random_exact_chain(c, k, rng);
                const auto x = ext.extend(a);
                EXPECT_EQ(boundary(x), a) << nc.label;
                for (const auto& z : cycles)
                    EXPECT_EQ(inner(x, z), 0) << nc.label;
            }
        }
    }
}

TEST(HarmonicProperty, IsLinear)
{
    Rng rng(6);
    for (const auto& nc : sample_complexes()) {
        const auto& c = nc.complex;
        const HarmonicExtender ext(c, c.top_dim() - 1);
        for (int trial = 0; trial < 10; ++trial) {
            const auto a = random_exact_chain(c, c.top_dim() - 1, rng);
            const auto b = random_exact_chain(c, c.top_dim() - 1, rng);
            const Rational s = random_rational(rng);
            EXPECT_EQ(ext.extend(a + s * b), ext.extend(a) + s * ext.extend(b)) << nc.label;
        }
    }
}

TEST(HarmonicProperty, HasMinimumNorm)
{
    Rng rng(7);
    for (const auto& nc : sample_complexes()) {
        const auto& c = nc.complex;
        const int k = c.top_dim() - 1;
        const auto cycles = cycle_basis_oracle(c, k + 1);
        for (int trial = 0; trial < 10; ++trial) {
            const auto x = harmonic_extension(random_exact_chain(c, k, rng));
            for (const auto& z : cycles) {
                const auto y = x + random_rational(rng) * z;
                EXPECT_GE(inner(y, y), inner(x, x)) << nc.label;
            }
        }
    }
}

TEST(HarmonicProperty, WeightedExtensionIsWeightOrthogonal)
{
    Rng rng(8);
    for (const auto& nc : sample_complexes()) {
        const auto& c = nc.complex;
        CellWeights w;
        for (CellId id = 0; id < c.size(); ++id)
            w.push_back(Rational(1 + rng() % 4, 1 + rng() % 3));
        for (int k = 0; k < c.top_dim(); ++k) {
            const HarmonicExtender ext(c, k, &w);
            const auto cycles = cycle_basis_oracle(c, k + 1);
            for (int trial = 0; trial < 5; ++trial) {
                const auto a = random_exact_chain(c, k, rng);
                const auto x = ext.extend(a);
                EXPECT_EQ(boundary(x), a) << nc.label;
                for (const auto& z : cycles) {
                    Rational dot = 0;
                    for (const auto& [cell, v] : x.terms())
                        dot += w[cell] * v * z[cell];
                    EXPECT_EQ(dot, 0) << nc.label;
                }
            }
        }
    }
}

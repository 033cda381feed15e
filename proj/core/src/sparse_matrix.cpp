#include "eulerloc/sparse_matrix.hpp"

#include <algorithm>
#include <map>

#include "eulerloc/error.hpp"

namespace eulerloc {

SparseRationalMatrix::SparseRationalMatrix(std::size_t rows, std::size_t cols) : cols_(cols), rows_(rows) {}

SparseRationalMatrix SparseRationalMatrix::from_triplets(std::size_t rows, std::size_t cols,
                                                         const std::vector<Triplet>& entries)
{
    std::vector<std::map<std::size_t, Rational>> acc(rows);
    for (const auto& [i, j, v] : entries) {
        if (i >= rows || j >= cols)
            throw Error(ErrorKind::InvalidInput, "matrix entry out of range");
        acc[i][j] += v;
    }
    SparseRationalMatrix out(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (auto& [j, v] : acc[i])
            if (v != 0)
                out.rows_[i].emplace_back(j, std::move(v));
    return out;
}

std::size_t SparseRationalMatrix::nonzeros() const
{
    std::size_t n = 0;
    for (const auto& r : rows_)
        n += r.size();
    return n;
}

Rational SparseRationalMatrix::at(std::size_t i, std::size_t j) const
{
    const auto& r = rows_.at(i);
    auto it = std::lower_bound(r.begin(), r.end(), j, [](const auto& e, std::size_t c) { return e.first < c; });
    return (it != r.end() && it->first == j) ? it->second : Rational(0);
}

SparseRationalMatrix SparseRationalMatrix::transpose() const
{
    SparseRationalMatrix out(cols_, rows_.size());
    for (std::size_t i = 0; i < rows_.size(); ++i)
        for (const auto& [j, v] : rows_[i])
            out.rows_[j].emplace_back(i, v);
    return out;
}

RationalVector SparseRationalMatrix::apply(const RationalVector& x) const
{
    if (x.size() != cols_)
        throw Error(ErrorKind::BadDimension, "vector length does not match matrix columns");
    RationalVector y(rows_.size());
    for (std::size_t i = 0; i < rows_.size(); ++i)
        for (const auto& [j, v] : rows_[i])
            y[i] += v * x[j];
    return y;
}

bool SparseRationalMatrix::is_symmetric() const
{
    return rows_.size() == cols_ && *this == transpose();
}

SparseRationalMatrix SparseRationalMatrix::scaled(const RationalVector& row_scale, const RationalVector& col_scale) const
{
    SparseRationalMatrix out(rows_.size(), cols_);
    for (std::size_t i = 0; i < rows_.size(); ++i)
        for (const auto& [j, v] : rows_[i]) {
            Rational s = v * row_scale.at(i) * col_scale.at(j);
            if (s != 0)
                out.rows_[i].emplace_back(j, std::move(s));
        }
    return out;
}

SparseRationalMatrix operator*(const SparseRationalMatrix& a, const SparseRationalMatrix& b)
{
    if (a.cols() != b.rows())
        throw Error(ErrorKind::BadDimension, "matrix product shape mismatch");
    SparseRationalMatrix out(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        std::map<std::size_t, Rational> acc;
        for (const auto& [k, av] : a.row(i))
            for (const auto& [j, bv] : b.row(k))
                acc[j] += av * bv;
        for (auto& [j, v] : acc)
            if (v != 0)
                out.rows_[i].emplace_back(j, std::move(v));
    }
    return out;
}

SparseRationalMatrix operator+(const SparseRationalMatrix& a, const SparseRationalMatrix& b)
{
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw Error(ErrorKind::BadDimension, "matrix sum shape mismatch");
    SparseRationalMatrix out(a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        std::map<std::size_t, Rational> acc;
        for (const auto& [j, v] : a.row(i))
            acc[j] += v;
        for (const auto& [j, v] : b.row(i))
            acc[j] += v;
        for (auto& [j, v] : acc)
            if (v != 0)
                out.rows_[i].emplace_back(j, std::move(v));
    }
    return out;
}

SparseRationalMatrix boundary_matrix(const CellComplex& complex, int k)
{
    const std::size_t cols = complex.count(k);
    const std::size_t rows = k == 0 ? 0 : complex.count(k - 1);
    std::vector<SparseRationalMatrix::Triplet> entries;
    if (k > 0)
        for (CellId c : complex.cells(k))
            for (const auto& f : complex.faces(c))
                entries.emplace_back(complex.local_index(f.cell), complex.local_index(c), Rational(f.sign));
    return SparseRationalMatrix::from_triplets(rows, cols, entries);
}

RowEchelon::RowEchelon(const SparseRationalMatrix& m) : cols(m.cols())
{
    using SparseRow = std::map<std::size_t, Rational>;
    std::vector<SparseRow> work;
    work.reserve(m.rows());
    for (std::size_t i = 0; i < m.rows(); ++i) {
        SparseRow r;
        for (const auto& [j, v] : m.row(i))
            r.emplace(j, v);
        if (!r.empty())
            work.push_back(std::move(r));
    }

    // Forward elimination: pick the row with the smallest leading column
    // (ties: earliest row), normalize and clear that column below.
    std::vector<SparseRow> echelon;
    while (!work.empty()) {
        std::size_t best = 0;
        for (std::size_t i = 1; i < work.size(); ++i)
            if (work[i].begin()->first < work[best].begin()->first)
                best = i;
        SparseRow pivot = std::move(work[best]);
        work.erase(work.begin() + static_cast<std::ptrdiff_t>(best));
        const std::size_t col = pivot.begin()->first;
        const Rational lead = pivot.begin()->second;
        for (auto& [j, v] : pivot)
            v /= lead;

        std::vector<SparseRow> next;
        next.reserve(work.size());
        for (auto& r : work) {
            auto it = r.find(col);
            if (it != r.end()) {
                const Rational factor = it->second;
                for (const auto& [j, v] : pivot) {
                    Rational& t = r[j];
                    t -= factor * v;
                    if (t == 0)
                        r.erase(j);
                }
            }
            if (!r.empty())
                next.push_back(std::move(r));
        }
        work = std::move(next);
        pivots.push_back(col);
        echelon.push_back(std::move(pivot));
    }

    // Back substitution to reduced form.
    for (std::size_t p = echelon.size(); p-- > 0;) {
        const std::size_t col = pivots[p];
        for (std::size_t q = 0; q < p; ++q) {
            auto it = echelon[q].find(col);
            if (it == echelon[q].end())
                continue;
            const Rational factor = it->second;
            for (const auto& [j, v] : echelon[p]) {
                Rational& t = echelon[q][j];
                t -= factor * v;
                if (t == 0)
                    echelon[q].erase(j);
            }
        }
    }
    for (auto& r : echelon)
        rows.emplace_back(r.begin(), r.end());
}

std::vector<RationalVector> RowEchelon::kernel_basis() const
{
    std::vector<bool> is_pivot(cols, false);
    for (auto p : pivots)
        is_pivot[p] = true;
    std::vector<RationalVector> basis;
    for (std::size_t free = 0; free < cols; ++free) {
        if (is_pivot[free])
            continue;
        RationalVector v(cols);
        v[free] = 1;
        for (std::size_t r = 0; r < rows.size(); ++r)
            for (const auto& [j, x] : rows[r])
                if (j == free)
                    v[pivots[r]] = -x;
        basis.push_back(std::move(v));
    }
    return basis;
}

}  // namespace eulerloc

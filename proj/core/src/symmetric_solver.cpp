#include "eulerloc/symmetric_solver.hpp"

#include <map>
#include <set>

#include "eulerloc/error.hpp"

namespace eulerloc {

SymmetricSolver::SymmetricSolver(const SparseRationalMatrix& matrix) : n_(matrix.rows())
{
    if (matrix.rows() != matrix.cols() || !matrix.is_symmetric())
        throw Error(ErrorKind::InvalidInput, "solver needs a symmetric matrix");

    std::vector<std::map<std::size_t, Rational>> active(n_);
    for (std::size_t i = 0; i < n_; ++i)
        for (const auto& [j, v] : matrix.row(i))
            active[i].emplace(j, v);

    std::set<std::pair<std::size_t, std::size_t>> queue;  // (degree, index)
    for (std::size_t i = 0; i < n_; ++i)
        queue.emplace(active[i].size(), i);

    diag_.assign(n_, Rational(0));
    lower_.assign(n_, {});
    order_.reserve(n_);

    while (!queue.empty()) {
        const std::size_t p = queue.begin()->second;
        queue.erase(queue.begin());
        order_.push_back(p);

        auto row = std::move(active[p]);
        active[p].clear();
        auto dit = row.find(p);
        const Rational d = dit == row.end() ? Rational(0) : dit->second;
        if (dit != row.end())
            row.erase(dit);

        if (d == 0) {
            if (!row.empty())
                throw Error(ErrorKind::InvalidInput, "matrix is not positive semidefinite");
            continue;
        }
        if (d < 0)
            throw Error(ErrorKind::InvalidInput, "matrix is not positive semidefinite");
        ++rank_;
        diag_[p] = d;

        std::vector<std::pair<std::size_t, Rational>> col;
        col.reserve(row.size());
        for (const auto& [i, v] : row) {
            queue.erase({active[i].size(), i});
            active[i].erase(p);
            col.emplace_back(i, v / d);
        }
        // Schur complement update: A_ij -= A_ip A_pj / d.
        for (const auto& [i, li] : col) {
            auto& ri = active[i];
            for (const auto& [j, vj] : row) {
                Rational& t = ri[j];
                t -= li * vj;
                if (t == 0)
                    ri.erase(j);
            }
        }
        for (const auto& [i, li] : col)
            queue.emplace(active[i].size(), i);
        lower_[p] = std::move(col);
    }
}

std::optional<RationalVector> SymmetricSolver::solve(const RationalVector& rhs) const
{
    if (rhs.size() != n_)
        throw Error(ErrorKind::BadDimension, "right-hand side length mismatch");
    RationalVector z = rhs;
    // Forward: L z = b in pivot order.
    for (std::size_t p : order_)
        if (z[p] != 0)
            for (const auto& [i, l] : lower_[p])
                z[i] -= l * z[p];
    for (std::size_t p : order_) {
        if (diag_[p] == 0) {
            if (z[p] != 0)
                return std::nullopt;
        } else {
            z[p] /= diag_[p];
        }
    }
    // Backward: L^T y = z in reverse pivot order.
    for (auto it = order_.rbegin(); it != order_.rend(); ++it) {
        const std::size_t p = *it;
        for (const auto& [i, l] : lower_[p])
            z[p] -= l * z[i];
    }
    return z;
}

}  // namespace eulerloc

#include "kneserq/lp.hpp"
#include "kneserq/error.hpp"


namespace kq {

CoveringSimplex::CoveringSimplex(int rows) : rows_(rows)
{
    require(rows >= 0, ErrorKind::InvalidParams, "negative row count");
    const auto n = static_cast<std::size_t>(rows);
    tableau_.assign(n, std::vector<BigRational>(2 * n, BigRational(0)));
    rhs_.assign(n, BigRational(1));
    cost_row_.assign(2 * n, BigRational(0));
    basis_.resize(n);
    for (int i = 0; i < rows; ++i) {
        VertexSet single(rows);
        single.set(i);
        columns_.push_back(std::move(single));
        tableau_[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] = 1;
        tableau_[static_cast<std::size_t>(i)][n + static_cast<std::size_t>(i)] = -1;
        cost_row_[n + static_cast<std::size_t>(i)] = 1;
        basis_[static_cast<std::size_t>(i)] = i;
    }
    objective_ = BigRational(rows);
}

int CoveringSimplex::add_column(const VertexSet &members)
{
    require(members.capacity() == rows_, ErrorKind::InvalidParams, "column over the wrong vertex count");
    const auto idx = members.members();
    // B^{-1} a = sum of the singleton columns of the current tableau.
    BigRational reduced = 1;
    for (int v : idx)
        reduced -= 1 - cost_row_[static_cast<std::size_t>(v)];
    for (int r = 0; r < rows_; ++r) {
        BigRational entry = 0;
        for (int v : idx) {
            const auto &t = tableau_[static_cast<std::size_t>(r)][static_cast<std::size_t>(v)];
            if (!t.is_zero())
                entry += t;
        }
        tableau_[static_cast<std::size_t>(r)].push_back(std::move(entry));
    }
    cost_row_.push_back(std::move(reduced));
    columns_.push_back(members);
    return column_count() - 1;
}

void CoveringSimplex::pivot(int row, int var)
{
    auto &pr = tableau_[static_cast<std::size_t>(row)];
    const BigRational p = pr[static_cast<std::size_t>(var)];
    std::vector<std::size_t> nonzero;
    for (std::size_t j = 0; j < pr.size(); ++j)
        if (!pr[j].is_zero()) {
            pr[j] /= p;
            nonzero.push_back(j);
        }
    rhs_[static_cast<std::size_t>(row)] /= p;

    for (int i = 0; i < rows_; ++i) {
        if (i == row)
            continue;
        auto &ri = tableau_[static_cast<std::size_t>(i)];
        const BigRational f = ri[static_cast<std::size_t>(var)];
        if (f.is_zero())
            continue;
        for (std::size_t j : nonzero)
            ri[j] -= f * pr[j];
        rhs_[static_cast<std::size_t>(i)] -= f * rhs_[static_cast<std::size_t>(row)];
    }
    const BigRational f = cost_row_[static_cast<std::size_t>(var)];
    if (!f.is_zero()) {
        for (std::size_t j : nonzero)
            cost_row_[j] -= f * pr[j];
        objective_ += f * rhs_[static_cast<std::size_t>(row)];
    }
    basis_[static_cast<std::size_t>(row)] = var;
}

std::uint64_t CoveringSimplex::solve(std::uint64_t pivot_budget)
{
    std::uint64_t pivots = 0;
    while (true) {
        int entering = -1;
        for (int j = 0; j < variable_count(); ++j)
            if (cost_row_[static_cast<std::size_t>(j)] < 0) {
                entering = j;
                break;
            }
        if (entering < 0)
            return pivots;

        int leaving = -1;
        BigRational best_ratio = 0;
        for (int r = 0; r < rows_; ++r) {
            const auto &t = tableau_[static_cast<std::size_t>(r)][static_cast<std::size_t>(entering)];
            if (t <= 0)
                continue;
            BigRational ratio = rhs_[static_cast<std::size_t>(r)] / t;
            if (leaving < 0 || ratio < best_ratio ||
                (ratio == best_ratio && basis_[static_cast<std::size_t>(r)] < basis_[static_cast<std::size_t>(leaving)])) {
                leaving = r;
                best_ratio = std::move(ratio);
            }
        }
        // Unbounded is impossible: the objective is bounded below by zero.
        require(leaving >= 0, ErrorKind::ValidationFailed, "covering LP reported unbounded");
        require(pivots < pivot_budget, ErrorKind::ResourceCap, "simplex pivot budget exhausted");
        pivot(leaving, entering);
        ++pivots;
    }
}

std::vector<BigRational> CoveringSimplex::duals() const
{
    std::vector<BigRational> y;
    y.reserve(static_cast<std::size_t>(rows_));
    for (int i = 0; i < rows_; ++i)
        y.push_back(1 - cost_row_[static_cast<std::size_t>(i)]);
    return y;
}

std::vector<BigRational> CoveringSimplex::primal() const
{
    std::vector<BigRational> x(columns_.size(), BigRational(0));
    for (int r = 0; r < rows_; ++r) {
        const int var = basis_[static_cast<std::size_t>(r)];
        if (var < rows_)
            x[static_cast<std::size_t>(var)] = rhs_[static_cast<std::size_t>(r)];
        else if (var >= 2 * rows_)
            x[static_cast<std::size_t>(var - rows_)] = rhs_[static_cast<std::size_t>(r)];
    }
    return x;
}

} // namespace kq

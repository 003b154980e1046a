#pragma once

#include "kneserq/rational.hpp"
#include "kneserq/vertex_set.hpp"

#include <cstdint>
#include <vector>

namespace kq {

// Exact primal simplex for the covering LP
//
//     minimise  sum_j w_j   subject to   sum_{j : v in S_j} w_j >= 1  for every row v,  w >= 0
//
// over a growing list of columns S_j. The singleton columns {v} are always present and
// form the starting basis, so no phase one is needed. Pivoting follows Bland's rule.
class CoveringSimplex {
  public:
    explicit CoveringSimplex(int rows);

    int rows() const noexcept { return rows_; }
    int column_count() const noexcept { return static_cast<int>(columns_.size()); }
    const VertexSet &column(int j) const { return columns_[static_cast<std::size_t>(j)]; }

    // Appends a column; returns its index. Columns 0..rows-1 are the singletons.
    int add_column(const VertexSet &members);

    // Pivots to optimality over the current columns. Returns the number of pivots.
    // Throws ResourceCap when `pivot_budget` is exhausted.
    std::uint64_t solve(std::uint64_t pivot_budget = 1'000'000);

    BigRational objective() const { return objective_; }
    // Row duals y_v = c_B B^{-1} e_v.
    std::vector<BigRational> duals() const;
    // Primal value of each set column.
    std::vector<BigRational> primal() const;

  private:
    // Variable indices: [0, rows) singletons, [rows, 2*rows) surplus, then added sets.
    int variable_count() const { return static_cast<int>(cost_row_.size()); }
    void pivot(int row, int var);

    int rows_;
    std::vector<VertexSet> columns_;
    std::vector<std::vector<BigRational>> tableau_; // rows x variables
    std::vector<BigRational> rhs_;
    std::vector<BigRational> cost_row_; // reduced costs
    std::vector<int> basis_;       // basic variable of each row
    BigRational objective_;
};

} // namespace kq

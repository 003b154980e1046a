#include "kneserq/error.hpp"
#include "kneserq/invariants.hpp"
#include "kneserq/lp.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <numeric>
#include <set>

namespace kq {

namespace {

// Greedily adds vertices (lowest id first) until s is maximal.
VertexSet extend_to_maximal(const Graph &g, VertexSet s)
{
    VertexSet blocked(g.size());
    for (int v = s.first(); v >= 0; v = s.next(v + 1))
        blocked |= g.neighbours(v);
    for (int v = 0; v < g.size(); ++v)
        if (!s.test(v) && !blocked.test(v)) {
            s.set(v);
            blocked |= g.neighbours(v);
        }
    return s;
}

// Maximal independent set grown from `seed` in order of decreasing weight.
VertexSet greedy_heavy_set(const Graph &g, const std::vector<int> &by_weight, int seed)
{
    VertexSet s(g.size());
    s.set(seed);
    VertexSet blocked = g.neighbours(seed);
    for (int v : by_weight)
        if (v != seed && !blocked.test(v) && !s.test(v)) {
            s.set(v);
            blocked |= g.neighbours(v);
        }
    return s;
}

std::int64_t weight_of(const VertexSet &s, const std::vector<std::int64_t> &w)
{
    std::int64_t total = 0;
    for (int v = s.first(); v >= 0; v = s.next(v + 1))
        total += w[static_cast<std::size_t>(v)];
    return total;
}

// Scales the duals to integers: w_v = y_v * scale, with the column threshold `scale`.
std::pair<std::vector<std::int64_t>, std::int64_t> integer_weights(const std::vector<BigRational> &y)
{
    BigInt scale = 1;
    for (const auto &r : y) {
        const BigInt d = denominator_of(r);
        scale = scale / boost::multiprecision::gcd(scale, d) * d;
    }
    BigInt total = 0;
    std::vector<std::int64_t> w;
    w.reserve(y.size());
    for (const auto &r : y) {
        require(r >= 0, ErrorKind::ValidationFailed, "negative dual value at an optimal basis");
        const BigInt scaled = numerator_of(r) * (scale / denominator_of(r));
        total += scaled;
        w.push_back(0);
        if (total > BigInt(std::numeric_limits<std::int64_t>::max() / 2))
            fail(ErrorKind::ResourceCap, "dual weights overflow the integer pricing range");
        w.back() = scaled.convert_to<std::int64_t>();
    }
    return {w, scale.convert_to<std::int64_t>()};
}

void check_columns(const Graph &g, const std::vector<VertexSet> &columns)
{
    for (const auto &c : columns) {
        require(c.capacity() == g.size(), ErrorKind::InvalidParams, "column over the wrong vertex count");
        require(g.is_independent(c), ErrorKind::InvalidParams, "LP column is not an independent set");
    }
}

} // namespace

BigRational FractionalColoring::total() const
{
    BigRational sum = 0;
    for (const auto &w : weights)
        sum += w;
    return sum;
}

std::vector<std::string> coloring_violations(const Graph &g, const FractionalColoring &c)
{
    std::vector<std::string> out;
    if (c.sets.size() != c.weights.size()) {
        out.push_back("sets and weights differ in length");
        return out;
    }
    std::vector<BigRational> cover(static_cast<std::size_t>(g.size()));
    for (std::size_t i = 0; i < c.sets.size(); ++i) {
        const auto &s = c.sets[i];
        if (s.capacity() != g.size()) {
            out.push_back("set " + std::to_string(i) + " is over the wrong vertex count");
            continue;
        }
        if (!g.is_independent(s))
            out.push_back("set " + std::to_string(i) + " is not independent");
        if (c.weights[i] <= 0)
            out.push_back("set " + std::to_string(i) + " has non-positive weight");
        for (int v = s.first(); v >= 0; v = s.next(v + 1))
            cover[static_cast<std::size_t>(v)] += c.weights[i];
    }
    for (int v = 0; v < g.size(); ++v)
        if (cover[static_cast<std::size_t>(v)] < 1)
            out.push_back("vertex " + std::to_string(v) + " covered with weight " +
                          to_fraction_string(cover[static_cast<std::size_t>(v)]));
    return out;
}

namespace {

// Deduplicated column list.
class ColumnPool {
  public:
    bool add(const VertexSet &s)
    {
        if (!known_.insert(s.members()).second)
            return false;
        columns_.push_back(s);
        return true;
    }

    const std::vector<VertexSet> &columns() const { return columns_; }

  private:
    std::set<std::vector<int>> known_;
    std::vector<VertexSet> columns_;
};

std::vector<int> by_decreasing(const std::vector<std::int64_t> &w)
{
    std::vector<int> order(w.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](int a, int b) { return w[static_cast<std::size_t>(a)] > w[static_cast<std::size_t>(b)]; });
    return order;
}

// Adds the heaviest greedy column if it beats `threshold`; returns whether it was new.
bool greedy_pricing(const Graph &g, const std::vector<std::int64_t> &w, std::int64_t threshold, ColumnPool &pool)
{
    const auto order = by_decreasing(w);
    std::optional<VertexSet> best;
    std::int64_t best_weight = threshold;
    for (int seed = 0; seed < g.size(); ++seed) {
        VertexSet s = greedy_heavy_set(g, order, seed);
        const std::int64_t weight = weight_of(s, w);
        if (weight > best_weight) {
            best_weight = weight;
            best = std::move(s);
        }
    }
    return best && pool.add(*best);
}

// Exact pricing: a maximal independent set of dual weight > 1, if any.
std::optional<VertexSet> exact_pricing(const Graph &g, const std::vector<BigRational> &y, const SolverLimits &limits)
{
    const auto [w, scale] = integer_weights(y);
    const auto best = max_weight_independent_set(g, w, scale, limits);
    if (!best)
        return std::nullopt;
    return extend_to_maximal(g, *best);
}

FractionalColoring merged_coloring(const Graph &g, const std::vector<VertexSet> &sets,
                                   const std::vector<BigRational> &x)
{
    // Non-maximal columns are widened to maximal sets of the same weight.
    std::map<std::vector<int>, std::pair<VertexSet, BigRational>> merged;
    for (std::size_t j = 0; j < sets.size(); ++j) {
        if (x[j] <= 0)
            continue;
        const VertexSet s = extend_to_maximal(g, sets[j]);
        auto it = merged.try_emplace(s.members(), s, BigRational(0)).first;
        it->second.second += x[j];
    }
    FractionalColoring c;
    for (auto &[key, entry] : merged) {
        c.sets.push_back(std::move(entry.first));
        c.weights.push_back(std::move(entry.second));
    }
    return c;
}

BigRational sum_of(const std::vector<BigRational> &v)
{
    BigRational total = 0;
    for (const auto &x : v)
        total += x;
    return total;
}

FractionalResult column_generation(const Graph &g, ColumnPool &pool, const SolverLimits &limits)
{
    const int n = g.size();
    CoveringSimplex lp(n);
    std::size_t loaded = 0;
    while (true) {
        require(pool.columns().size() <= limits.mis_cap, ErrorKind::ResourceCap,
                "column generation exceeded the column cap");
        for (; loaded < pool.columns().size(); ++loaded)
            lp.add_column(pool.columns()[loaded]);
        lp.solve();
        const auto y = lp.duals();
        const auto [w, scale] = integer_weights(y);
        if (greedy_pricing(g, w, scale, pool))
            continue;
        const auto column = exact_pricing(g, y, limits);
        if (!column)
            break;
        require(pool.add(*column), ErrorKind::ValidationFailed, "pricing returned a known column");
    }
    std::vector<VertexSet> sets;
    for (int j = 0; j < lp.column_count(); ++j)
        sets.push_back(lp.column(j));
    return {lp.objective(), merged_coloring(g, sets, lp.primal()), lp.duals()};
}

} // namespace

FractionalResult fractional_chromatic_number(const Graph &g, const SolverLimits &limits)
{
    const int n = g.size();
    if (n == 0)
        return {};

    ColumnPool pool;
    // Start from one maximal set through every vertex.
    for (int v = 0; v < n; ++v) {
        VertexSet s(n);
        s.set(v);
        pool.add(extend_to_maximal(g, s));
    }

    FractionalResult result = column_generation(g, pool, limits);

    const auto violations = coloring_violations(g, result.coloring);
    require(violations.empty(), ErrorKind::ValidationFailed,
            "fractional colouring certificate invalid: " + (violations.empty() ? std::string() : violations.front()));
    require(result.coloring.total() == result.value, ErrorKind::ValidationFailed,
            "fractional colouring weight differs from the LP optimum");
    require(sum_of(result.dual) == result.value, ErrorKind::ValidationFailed,
            "dual objective differs from the LP optimum");
    return result;
}

std::optional<FractionalResult> fractional_value_from_bounds(const Graph &g, const FractionalColoring &upper,
                                                             const std::vector<int> &support,
                                                             const SolverLimits &limits)
{
    const auto violations = coloring_violations(g, upper);
    require(violations.empty(), ErrorKind::InvalidParams, "upper-bound colouring invalid: " +
                                                              (violations.empty() ? std::string() : violations.front()));
    const auto sub = fractional_chromatic_number(g.induced(support), limits);
    if (sub.value != upper.total())
        return std::nullopt;
    FractionalResult result;
    result.value = sub.value;
    result.coloring = upper;
    result.dual.assign(static_cast<std::size_t>(g.size()), BigRational(0));
    for (std::size_t i = 0; i < support.size(); ++i)
        result.dual[static_cast<std::size_t>(support[i])] = sub.dual[i];
    return result;
}

BigRational fractional_chromatic_number_over(const Graph &g, const std::vector<VertexSet> &columns,
                                            const SolverLimits &limits)
{
    check_columns(g, columns);
    require(columns.size() <= limits.mis_cap, ErrorKind::ResourceCap, "too many LP columns");
    CoveringSimplex lp(g.size());
    for (const auto &c : columns)
        lp.add_column(c);
    lp.solve();
    return lp.objective();
}

} // namespace kq

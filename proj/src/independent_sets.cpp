#include "kneserq/error.hpp"
#include "kneserq/invariants.hpp"

#include <algorithm>
#include <numeric>

namespace kq {

namespace {

bool member_order(const VertexSet &a, const VertexSet &b) { return a.members() < b.members(); }

// Branch and bound over independent sets of g, bounded by greedy clique covers
// (each clique meets an independent set at most once). Vertices are relabelled by
// increasing degree so that early clique classes are built from the sparse end.
class IndependentSetSearch {
  public:
    IndependentSetSearch(const Graph &g, const std::vector<std::int64_t> &weights, const SolverLimits &limits)
        : limits_(limits), size_(g.size())
    {
        order_.resize(static_cast<std::size_t>(size_));
        std::iota(order_.begin(), order_.end(), 0);
        std::stable_sort(order_.begin(), order_.end(), [&](int a, int b) {
            if (g.degree(a) != g.degree(b))
                return g.degree(a) < g.degree(b);
            return weights[static_cast<std::size_t>(a)] > weights[static_cast<std::size_t>(b)];
        });
        adjacent_.assign(static_cast<std::size_t>(size_), VertexSet(size_));
        others_.assign(static_cast<std::size_t>(size_), VertexSet(size_));
        weight_.resize(static_cast<std::size_t>(size_));
        for (int i = 0; i < size_; ++i) {
            const int old = order_[static_cast<std::size_t>(i)];
            weight_[static_cast<std::size_t>(i)] = weights[static_cast<std::size_t>(old)];
            for (int j = 0; j < size_; ++j) {
                if (i == j)
                    continue;
                if (g.adjacent(old, order_[static_cast<std::size_t>(j)]))
                    adjacent_[static_cast<std::size_t>(i)].set(j);
                else
                    others_[static_cast<std::size_t>(i)].set(j);
            }
        }
    }

    // Heaviest set with weight > threshold.
    std::optional<VertexSet> maximise(std::int64_t threshold)
    {
        collect_ = false;
        best_ = threshold;
        found_ = false;
        chosen_.clear();
        expand(0, VertexSet::all(size_));
        if (!found_)
            return std::nullopt;
        return to_original(best_set_);
    }

    // All sets of weight >= target (use with target = optimum).
    std::vector<VertexSet> collect(std::int64_t target)
    {
        collect_ = true;
        target_ = target;
        chosen_.clear();
        results_.clear();
        expand(0, VertexSet::all(size_));
        std::vector<VertexSet> out;
        for (const auto &s : results_)
            out.push_back(to_original(s));
        std::sort(out.begin(), out.end(), member_order);
        return out;
    }

  private:
    VertexSet to_original(const std::vector<int> &relabelled) const
    {
        VertexSet s(size_);
        for (int v : relabelled)
            s.set(order_[static_cast<std::size_t>(v)]);
        return s;
    }

    void expand(std::int64_t current, VertexSet candidates)
    {
        require(++nodes_ <= limits_.node_budget, ErrorKind::ResourceCap, "independent-set search node budget exhausted");

        std::vector<int> vertices;
        std::vector<std::int64_t> bounds;
        VertexSet uncovered = candidates;
        std::int64_t accumulated = 0;
        while (uncovered.any()) {
            VertexSet open = uncovered;
            std::int64_t heaviest = 0;
            const std::size_t start = vertices.size();
            while (open.any()) {
                const int v = open.first();
                vertices.push_back(v);
                heaviest = std::max(heaviest, weight_[static_cast<std::size_t>(v)]);
                open &= adjacent_[static_cast<std::size_t>(v)];
                uncovered.reset(v);
            }
            accumulated += heaviest;
            bounds.insert(bounds.end(), vertices.size() - start, accumulated);
        }

        for (std::size_t i = vertices.size(); i-- > 0;) {
            if (collect_ ? current + bounds[i] < target_ : current + bounds[i] <= best_)
                return;
            const int v = vertices[i];
            const std::int64_t next = current + weight_[static_cast<std::size_t>(v)];
            chosen_.push_back(v);
            if (collect_) {
                if (next >= target_)
                    results_.push_back(chosen_);
            } else if (next > best_) {
                best_ = next;
                best_set_ = chosen_;
                found_ = true;
            }
            VertexSet rest = candidates & others_[static_cast<std::size_t>(v)];
            if (rest.any())
                expand(next, std::move(rest));
            chosen_.pop_back();
            candidates.reset(v);
        }
    }

    const SolverLimits &limits_;
    int size_;
    std::vector<int> order_; // relabelled id -> original id
    std::vector<VertexSet> adjacent_;
    std::vector<VertexSet> others_; // non-neighbours excluding self
    std::vector<std::int64_t> weight_;

    bool collect_ = false;
    std::int64_t best_ = 0;
    std::int64_t target_ = 0;
    bool found_ = false;
    std::vector<int> chosen_;
    std::vector<int> best_set_;
    std::vector<std::vector<int>> results_;
    std::uint64_t nodes_ = 0;
};

int greedy_independent_size(const Graph &g)
{
    VertexSet alive = VertexSet::all(g.size());
    int size = 0;
    while (alive.any()) {
        int pick = -1, pick_degree = 0;
        for (int v = alive.first(); v >= 0; v = alive.next(v + 1)) {
            const int d = g.neighbours(v).count_and(alive);
            if (pick < 0 || d < pick_degree) {
                pick = v;
                pick_degree = d;
            }
        }
        alive.subtract(g.neighbours(pick));
        alive.reset(pick);
        ++size;
    }
    return size;
}

class BronKerbosch {
  public:
    BronKerbosch(const Graph &g, const SolverLimits &limits) : limits_(limits), size_(g.size())
    {
        others_.assign(static_cast<std::size_t>(size_), VertexSet(size_));
        for (int u = 0; u < size_; ++u)
            for (int v = 0; v < size_; ++v)
                if (u != v && !g.adjacent(u, v))
                    others_[static_cast<std::size_t>(u)].set(v);
    }

    std::vector<VertexSet> run()
    {
        VertexSet chosen(size_);
        expand(chosen, VertexSet::all(size_), VertexSet(size_)); // the empty graph yields {}
        std::sort(out_.begin(), out_.end(), member_order);
        return std::move(out_);
    }

  private:
    void expand(VertexSet &chosen, VertexSet candidates, VertexSet excluded)
    {
        require(++nodes_ <= limits_.node_budget, ErrorKind::ResourceCap, "maximal-set enumeration node budget exhausted");
        if (candidates.none()) {
            if (excluded.none()) {
                require(out_.size() < limits_.mis_cap, ErrorKind::ResourceCap,
                        "more than " + std::to_string(limits_.mis_cap) + " maximal independent sets");
                out_.push_back(chosen);
            }
            return;
        }
        int pivot = -1, pivot_score = -1;
        for (const VertexSet *pool : {&candidates, &excluded})
            for (int u = pool->first(); u >= 0; u = pool->next(u + 1)) {
                const int score = candidates.count_and(others_[static_cast<std::size_t>(u)]);
                if (score > pivot_score) {
                    pivot = u;
                    pivot_score = score;
                }
            }
        const VertexSet branch = minus(candidates, others_[static_cast<std::size_t>(pivot)]);
        for (int v = branch.first(); v >= 0; v = branch.next(v + 1)) {
            chosen.set(v);
            expand(chosen, candidates & others_[static_cast<std::size_t>(v)], excluded & others_[static_cast<std::size_t>(v)]);
            chosen.reset(v);
            candidates.reset(v);
            excluded.set(v);
        }
    }

    const SolverLimits &limits_;
    int size_;
    std::vector<VertexSet> others_;
    std::vector<VertexSet> out_;
    std::uint64_t nodes_ = 0;
};

} // namespace

std::vector<VertexSet> enumerate_maximal_independent_sets(const Graph &g, const SolverLimits &limits)
{
    return BronKerbosch(g, limits).run();
}

std::optional<VertexSet> max_weight_independent_set(const Graph &g, const std::vector<std::int64_t> &weights,
                                                    std::int64_t threshold, const SolverLimits &limits)
{
    require(static_cast<int>(weights.size()) == g.size(), ErrorKind::InvalidParams, "one weight per vertex required");
    for (auto w : weights)
        require(w >= 0, ErrorKind::InvalidParams, "negative vertex weight");
    return IndependentSetSearch(g, weights, limits).maximise(threshold);
}

int independence_number(const Graph &g, const SolverLimits &limits)
{
    if (g.size() == 0)
        return 0;
    const std::vector<std::int64_t> unit(static_cast<std::size_t>(g.size()), 1);
    const int greedy = greedy_independent_size(g);
    const auto best = IndependentSetSearch(g, unit, limits).maximise(greedy - 1);
    require(best.has_value(), ErrorKind::ValidationFailed, "search lost the greedy independent set");
    return best->count();
}

std::vector<VertexSet> max_independent_sets(const Graph &g, const SolverLimits &limits)
{
    if (g.size() == 0)
        return {VertexSet(0)};
    const int alpha = independence_number(g, limits);
    const std::vector<std::int64_t> unit(static_cast<std::size_t>(g.size()), 1);
    auto sets = IndependentSetSearch(g, unit, limits).collect(alpha);
    require(sets.size() <= limits.mis_cap, ErrorKind::ResourceCap, "too many maximum independent sets");
    return sets;
}

int clique_number(const Graph &g, const SolverLimits &limits) { return independence_number(g.complement(), limits); }

} // namespace kq

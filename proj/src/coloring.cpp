#include "kneserq/error.hpp"
#include "kneserq/invariants.hpp"

#include <algorithm>

namespace kq {

namespace {

// A maximum clique of g, or a greedy one when the exact search runs out of budget.
std::vector<int> seed_clique(const Graph &g, const SolverLimits &limits)
{
    const Graph comp = g.complement();
    SolverLimits tight = limits;
    tight.node_budget = std::min<std::uint64_t>(limits.node_budget, 200'000);
    try {
        const std::vector<std::int64_t> unit(static_cast<std::size_t>(g.size()), 1);
        if (auto best = max_weight_independent_set(comp, unit, 0, tight))
            return best->members();
    } catch (const Error &e) {
        if (e.kind() != ErrorKind::ResourceCap)
            throw;
    }
    std::vector<int> clique;
    VertexSet open = VertexSet::all(g.size());
    while (open.any()) {
        int pick = -1, pick_degree = -1;
        for (int v = open.first(); v >= 0; v = open.next(v + 1)) {
            const int d = g.neighbours(v).count_and(open);
            if (d > pick_degree) {
                pick = v;
                pick_degree = d;
            }
        }
        clique.push_back(pick);
        open &= g.neighbours(pick);
    }
    return clique;
}

class DsaturSearch {
  public:
    DsaturSearch(const Graph &g, const SolverLimits &limits)
        : g_(g), limits_(limits), n_(g.size()), colour_(static_cast<std::size_t>(n_), -1),
          seen_(static_cast<std::size_t>(n_), std::vector<int>(static_cast<std::size_t>(n_ + 1), 0)),
          saturation_(static_cast<std::size_t>(n_), 0)
    {
    }

    ColoringResult run()
    {
        if (n_ == 0)
            return {0, {}};

        greedy_upper_bound();
        const auto clique = seed_clique(g_, limits_);
        lower_ = static_cast<int>(clique.size());
        if (lower_ >= best_colours_)
            return {best_colours_, best_};

        // Colour the clique first; any optimal colouring can be renamed to agree on it.
        for (std::size_t i = 0; i < clique.size(); ++i)
            assign(clique[i], static_cast<int>(i));
        used_ = lower_;
        coloured_ = lower_;
        search();
        return {best_colours_, best_};
    }

  private:
    void assign(int v, int c)
    {
        colour_[static_cast<std::size_t>(v)] = c;
        const auto &nb = g_.neighbours(v);
        for (int u = nb.first(); u >= 0; u = nb.next(u + 1))
            if (seen_[static_cast<std::size_t>(u)][static_cast<std::size_t>(c)]++ == 0)
                ++saturation_[static_cast<std::size_t>(u)];
    }

    void unassign(int v)
    {
        const int c = colour_[static_cast<std::size_t>(v)];
        colour_[static_cast<std::size_t>(v)] = -1;
        const auto &nb = g_.neighbours(v);
        for (int u = nb.first(); u >= 0; u = nb.next(u + 1))
            if (--seen_[static_cast<std::size_t>(u)][static_cast<std::size_t>(c)] == 0)
                --saturation_[static_cast<std::size_t>(u)];
    }

    int pick_vertex() const
    {
        int pick = -1;
        for (int v = 0; v < n_; ++v) {
            if (colour_[static_cast<std::size_t>(v)] >= 0)
                continue;
            if (pick < 0 || saturation_[static_cast<std::size_t>(v)] > saturation_[static_cast<std::size_t>(pick)] ||
                (saturation_[static_cast<std::size_t>(v)] == saturation_[static_cast<std::size_t>(pick)] &&
                 g_.degree(v) > g_.degree(pick)))
                pick = v;
        }
        return pick;
    }

    void greedy_upper_bound()
    {
        for (int step = 0; step < n_; ++step) {
            const int v = pick_vertex();
            int c = 0;
            while (seen_[static_cast<std::size_t>(v)][static_cast<std::size_t>(c)] > 0)
                ++c;
            assign(v, c);
        }
        best_ = colour_;
        best_colours_ = 1 + *std::max_element(best_.begin(), best_.end());
        for (int v = 0; v < n_; ++v)
            unassign(v);
    }

    // Returns true once the lower bound is attained.
    bool search()
    {
        require(++nodes_ <= limits_.node_budget, ErrorKind::ResourceCap, "colouring search node budget exhausted");
        if (coloured_ == n_) {
            best_colours_ = used_;
            best_ = colour_;
            return best_colours_ == lower_;
        }
        const int v = pick_vertex();
        // Only colourings with at most best_colours_ - 1 colours are worth finding;
        // best_colours_ can drop while the loop runs.
        for (int c = 0; c < std::min(used_ + 1, best_colours_ - 1); ++c) {
            if (seen_[static_cast<std::size_t>(v)][static_cast<std::size_t>(c)] > 0)
                continue;
            const int saved_used = used_;
            used_ = std::max(used_, c + 1);
            assign(v, c);
            ++coloured_;
            const bool done = search();
            --coloured_;
            unassign(v);
            used_ = saved_used;
            if (done)
                return true;
        }
        return false;
    }

    const Graph &g_;
    const SolverLimits &limits_;
    int n_;
    std::vector<int> colour_;
    std::vector<std::vector<int>> seen_; // seen_[v][c]: neighbours of v with colour c
    std::vector<int> saturation_;
    std::vector<int> best_;
    int best_colours_ = 0;
    int lower_ = 0;
    int used_ = 0;
    int coloured_ = 0;
    std::uint64_t nodes_ = 0;
};

} // namespace

ColoringResult exact_coloring(const Graph &g, const SolverLimits &limits)
{
    auto result = DsaturSearch(g, limits).run();
    for (const auto &[u, v] : g.edges())
        require(result.coloring[static_cast<std::size_t>(u)] != result.coloring[static_cast<std::size_t>(v)],
                ErrorKind::ValidationFailed, "colouring search produced an improper colouring");
    return result;
}

int chromatic_number(const Graph &g, const SolverLimits &limits) { return exact_coloring(g, limits).colors; }

} // namespace kq

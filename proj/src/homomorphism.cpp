#include "kneserq/error.hpp"
#include "kneserq/invariants.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace kq {

namespace {

// Forward-checking backtracking. Each unassigned source vertex keeps the set of target
// vertices still compatible with its assigned neighbours; the smallest domain goes next.
class HomomorphismSearch {
  public:
    HomomorphismSearch(const Graph &g, const Graph &h, const SolverLimits &limits)
        : g_(g), h_(h), limits_(limits), mapping_(static_cast<std::size_t>(g.size()), -1),
          domain_(static_cast<std::size_t>(g.size()), VertexSet::all(h.size()))
    {
    }

    void pin(int v, int target)
    {
        VertexSet only(h_.size());
        only.set(target);
        domain_[static_cast<std::size_t>(v)] = only;
    }

    std::optional<std::vector<int>> run()
    {
        if (search(0))
            return mapping_;
        return std::nullopt;
    }

  private:
    bool search(int assigned)
    {
        require(++nodes_ <= limits_.node_budget, ErrorKind::ResourceCap, "homomorphism search node budget exhausted");
        if (assigned == g_.size())
            return true;

        int v = -1;
        for (int u = 0; u < g_.size(); ++u) {
            if (mapping_[static_cast<std::size_t>(u)] >= 0)
                continue;
            if (v < 0 || domain_[static_cast<std::size_t>(u)].count() < domain_[static_cast<std::size_t>(v)].count())
                v = u;
        }

        const VertexSet options = domain_[static_cast<std::size_t>(v)];
        const VertexSet &nb = g_.neighbours(v);
        for (int t = options.first(); t >= 0; t = options.next(t + 1)) {
            std::vector<std::pair<int, VertexSet>> saved;
            bool wiped = false;
            for (int u = nb.first(); u >= 0 && !wiped; u = nb.next(u + 1)) {
                if (mapping_[static_cast<std::size_t>(u)] >= 0)
                    continue;
                auto &d = domain_[static_cast<std::size_t>(u)];
                if (minus(d, h_.neighbours(t)).none())
                    continue;
                saved.emplace_back(u, d);
                d &= h_.neighbours(t);
                wiped = d.none();
            }
            if (!wiped) {
                mapping_[static_cast<std::size_t>(v)] = t;
                if (search(assigned + 1))
                    return true;
                mapping_[static_cast<std::size_t>(v)] = -1;
            }
            for (auto it = saved.rbegin(); it != saved.rend(); ++it)
                domain_[static_cast<std::size_t>(it->first)] = std::move(it->second);
        }
        return false;
    }

    const Graph &g_;
    const Graph &h_;
    const SolverLimits &limits_;
    std::vector<int> mapping_;
    std::vector<VertexSet> domain_;
    std::uint64_t nodes_ = 0;
};

// Lowest vertex id of every connected component.
std::vector<int> component_roots(const Graph &g)
{
    std::vector<int> roots;
    VertexSet unseen = VertexSet::all(g.size());
    while (unseen.any()) {
        const int root = unseen.first();
        roots.push_back(root);
        VertexSet frontier(g.size());
        frontier.set(root);
        unseen.reset(root);
        while (frontier.any()) {
            VertexSet next(g.size());
            for (int v = frontier.first(); v >= 0; v = frontier.next(v + 1))
                next |= g.neighbours(v) & unseen;
            unseen.subtract(next);
            frontier = std::move(next);
        }
    }
    return roots;
}

Graph circular_complete(int p, int q)
{
    Graph k(p);
    for (int i = 0; i < p; ++i)
        for (int j = i + 1; j < p; ++j)
            if (j - i >= q && j - i <= p - q)
                k.add_edge(i, j);
    return k;
}

// Stable colour refinement run on both graphs with a shared colour dictionary, so equal
// colours are comparable across graphs.
std::pair<std::vector<int>, std::vector<int>> refine_jointly(const Graph &g, const Graph &h)
{
    std::vector<int> cg(static_cast<std::size_t>(g.size()), 0), ch(static_cast<std::size_t>(h.size()), 0);
    int classes = 1;
    while (true) {
        std::map<std::pair<int, std::vector<int>>, int> dictionary;
        auto signature = [](const Graph &x, const std::vector<int> &c, int v) {
            std::vector<int> around;
            const auto &nb = x.neighbours(v);
            for (int u = nb.first(); u >= 0; u = nb.next(u + 1))
                around.push_back(c[static_cast<std::size_t>(u)]);
            std::sort(around.begin(), around.end());
            return std::make_pair(c[static_cast<std::size_t>(v)], std::move(around));
        };
        std::vector<std::pair<int, std::vector<int>>> sg, sh;
        for (int v = 0; v < g.size(); ++v) {
            sg.push_back(signature(g, cg, v));
            dictionary.emplace(sg.back(), 0);
        }
        for (int v = 0; v < h.size(); ++v) {
            sh.push_back(signature(h, ch, v));
            dictionary.emplace(sh.back(), 0);
        }
        int next_id = 0;
        for (auto &entry : dictionary)
            entry.second = next_id++;
        for (int v = 0; v < g.size(); ++v)
            cg[static_cast<std::size_t>(v)] = dictionary.at(sg[static_cast<std::size_t>(v)]);
        for (int v = 0; v < h.size(); ++v)
            ch[static_cast<std::size_t>(v)] = dictionary.at(sh[static_cast<std::size_t>(v)]);
        if (next_id == classes)
            return {cg, ch};
        classes = next_id;
    }
}

class IsomorphismSearch {
  public:
    IsomorphismSearch(const Graph &g, const Graph &h, std::vector<int> cg, std::vector<int> ch,
                      const SolverLimits &limits)
        : g_(g), h_(h), limits_(limits), mapping_(static_cast<std::size_t>(g.size()), -1),
          used_(h.size())
    {
        const int n = g.size();
        for (int v = 0; v < n; ++v) {
            VertexSet same(n);
            for (int t = 0; t < n; ++t)
                if (ch[static_cast<std::size_t>(t)] == cg[static_cast<std::size_t>(v)])
                    same.set(t);
            class_.push_back(std::move(same));
        }
        // Connectivity order: each next vertex has the most already-ordered neighbours.
        VertexSet placed(n);
        std::vector<int> weight(static_cast<std::size_t>(n), 0);
        for (int step = 0; step < n; ++step) {
            int pick = -1;
            for (int v = 0; v < n; ++v) {
                if (placed.test(v))
                    continue;
                if (pick < 0 || weight[static_cast<std::size_t>(v)] > weight[static_cast<std::size_t>(pick)] ||
                    (weight[static_cast<std::size_t>(v)] == weight[static_cast<std::size_t>(pick)] &&
                     class_[static_cast<std::size_t>(v)].count() < class_[static_cast<std::size_t>(pick)].count()))
                    pick = v;
            }
            placed.set(pick);
            order_.push_back(pick);
            const auto &nb = g.neighbours(pick);
            for (int u = nb.first(); u >= 0; u = nb.next(u + 1))
                ++weight[static_cast<std::size_t>(u)];
        }
    }

    std::optional<std::vector<int>> run()
    {
        if (search(0))
            return mapping_;
        return std::nullopt;
    }

  private:
    bool search(std::size_t depth)
    {
        require(++nodes_ <= limits_.node_budget, ErrorKind::ResourceCap, "isomorphism search node budget exhausted");
        if (depth == order_.size())
            return true;
        const int v = order_[depth];
        VertexSet options = minus(class_[static_cast<std::size_t>(v)], used_);
        for (std::size_t i = 0; i < depth && options.any(); ++i) {
            const int u = order_[i];
            const int image = mapping_[static_cast<std::size_t>(u)];
            if (g_.adjacent(u, v))
                options &= h_.neighbours(image);
            else
                options.subtract(h_.neighbours(image));
        }
        for (int t = options.first(); t >= 0; t = options.next(t + 1)) {
            mapping_[static_cast<std::size_t>(v)] = t;
            used_.set(t);
            if (search(depth + 1))
                return true;
            used_.reset(t);
            mapping_[static_cast<std::size_t>(v)] = -1;
        }
        return false;
    }

    const Graph &g_;
    const Graph &h_;
    const SolverLimits &limits_;
    std::vector<int> mapping_;
    VertexSet used_;
    std::vector<VertexSet> class_;
    std::vector<int> order_;
    std::uint64_t nodes_ = 0;
};

std::shared_ptr<const LabeledGraph> require_graph(std::shared_ptr<const LabeledGraph> g)
{
    require(g != nullptr, ErrorKind::InvalidParams, "missing graph");
    return g;
}

} // namespace

std::optional<std::vector<int>> find_homomorphism(const Graph &g, const Graph &h, const SolverLimits &limits,
                                                  const HomomorphismOptions &opts)
{
    if (g.size() == 0)
        return std::vector<int>{};
    if (h.size() == 0)
        return std::nullopt;
    HomomorphismSearch search(g, h, limits);
    if (opts.target_vertex_transitive)
        for (int root : component_roots(g))
            search.pin(root, 0);
    auto found = search.run();
    if (found)
        for (const auto &[u, v] : g.edges())
            require(h.adjacent((*found)[static_cast<std::size_t>(u)], (*found)[static_cast<std::size_t>(v)]),
                    ErrorKind::ValidationFailed, "homomorphism search broke an edge");
    return found;
}

std::optional<VertexMap> find_homomorphism(std::shared_ptr<const LabeledGraph> g,
                                           std::shared_ptr<const LabeledGraph> h, const SolverLimits &limits)
{
    require_graph(g);
    require_graph(h);
    auto found = find_homomorphism(g->graph(), h->graph(), limits);
    if (!found)
        return std::nullopt;
    VertexMap m{g, h, std::move(*found), MapKind::Homomorphism};
    ensure_valid(m, "homomorphism search");
    return m;
}

BigRational circular_chromatic_number(const Graph &g, const SolverLimits &limits)
{
    const int n = g.size();
    if (n == 0)
        return 0;
    if (g.edge_count() == 0)
        return 1;

    const int chi = chromatic_number(g, limits);
    const BigRational chi_f = fractional_chromatic_number(g, limits).value;

    std::vector<BigRational> candidates;
    for (int q = 1; q <= n; ++q)
        for (int p = 2 * q; p <= chi * q; ++p) {
            if (std::gcd(p, q) != 1)
                continue;
            BigRational r = make_rational(p, q);
            if (r >= chi_f)
                candidates.push_back(std::move(r));
        }
    std::sort(candidates.begin(), candidates.end());

    const HomomorphismOptions transitive{true};
    for (const auto &r : candidates) {
        const int p = numerator_of(r).convert_to<int>();
        const int q = denominator_of(r).convert_to<int>();
        if (find_homomorphism(g, circular_complete(p, q), limits, transitive))
            return r;
    }
    fail(ErrorKind::ValidationFailed, "no circular colouring found up to the chromatic number");
}

std::optional<std::vector<int>> find_isomorphism(const Graph &g, const Graph &h, const SolverLimits &limits)
{
    if (g.size() != h.size() || g.edge_count() != h.edge_count())
        return std::nullopt;
    auto [cg, ch] = refine_jointly(g, h);
    auto sorted_g = cg, sorted_h = ch;
    std::sort(sorted_g.begin(), sorted_g.end());
    std::sort(sorted_h.begin(), sorted_h.end());
    if (sorted_g != sorted_h)
        return std::nullopt;
    return IsomorphismSearch(g, h, std::move(cg), std::move(ch), limits).run();
}

std::optional<VertexMap> find_isomorphism(std::shared_ptr<const LabeledGraph> g, std::shared_ptr<const LabeledGraph> h,
                                          const SolverLimits &limits)
{
    require_graph(g);
    require_graph(h);
    auto found = find_isomorphism(g->graph(), h->graph(), limits);
    if (!found)
        return std::nullopt;
    VertexMap m{g, h, std::move(*found), MapKind::Isomorphism};
    ensure_valid(m, "isomorphism search");
    return m;
}

} // namespace kq

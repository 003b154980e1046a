#include "kneserq/families.hpp"
#include "kneserq/error.hpp"

#include <functional>

namespace kq {

namespace {

void check_params(int n, int k)
{
    require(k >= 1 && n >= 2 * k, ErrorKind::InvalidParams,
            "need n >= 2k >= 2, got n=" + std::to_string(n) + " k=" + std::to_string(k));
}

void check_cap(std::uint64_t count, const BuildOptions &opts, const std::string &what)
{
    require(count <= static_cast<std::uint64_t>(opts.vertex_cap), ErrorKind::ResourceCap,
            what + " would have more than " + std::to_string(opts.vertex_cap) + " vertices");
}

// Connects every pair of disjoint subset labels.
Graph disjointness_graph(const std::vector<VertexLabel> &labels, int n,
                         const std::function<bool(const CyclicSubset &, const CyclicSubset &)> &keep = {})
{
    const int count = static_cast<int>(labels.size());
    Graph g(count);
    std::vector<std::uint64_t> masks;
    if (n <= 64) {
        masks.reserve(labels.size());
        for (const auto &l : labels) {
            std::uint64_t m = 0;
            for (int x : std::get<CyclicSubset>(l).elements())
                m |= std::uint64_t{1} << x;
            masks.push_back(m);
        }
    }
    for (int u = 0; u < count; ++u)
        for (int v = u + 1; v < count; ++v) {
            const auto &a = std::get<CyclicSubset>(labels[static_cast<std::size_t>(u)]);
            const auto &b = std::get<CyclicSubset>(labels[static_cast<std::size_t>(v)]);
            const bool disjoint = n <= 64 ? (masks[static_cast<std::size_t>(u)] & masks[static_cast<std::size_t>(v)]) == 0
                                          : a.disjoint_from(b);
            if (disjoint && (!keep || keep(a, b)))
                g.add_edge(u, v);
        }
    return g;
}

std::vector<VertexLabel> schrijver_labels(int n, int k)
{
    std::vector<VertexLabel> labels;
    std::vector<int> current;
    // Lexicographic generation with consecutive elements at least 2 apart and the
    // wrap-around gap (first + n - last) at least 2.
    std::function<void(int)> extend = [&](int from) {
        if (static_cast<int>(current.size()) == k) {
            if (k == 1 || current.front() + n - current.back() >= 2)
                labels.emplace_back(CyclicSubset(n, current));
            return;
        }
        const int remaining = k - static_cast<int>(current.size());
        for (int x = from; x + 2 * (remaining - 1) < n; ++x) {
            current.push_back(x);
            extend(x + 2);
            current.pop_back();
        }
    };
    extend(0);
    return labels;
}

std::uint64_t schrijver_count(int n, int k, std::uint64_t limit)
{
    // (n/k) * C(n-k-1, k-1), evaluated as n * C(n-k-1, k-1) / k.
    const std::uint64_t c = binomial(n - k - 1, k - 1, limit);
    if (c > limit)
        return limit + 1;
    const unsigned __int128 total = static_cast<unsigned __int128>(c) * static_cast<unsigned>(n) / static_cast<unsigned>(k);
    return total > limit ? limit + 1 : static_cast<std::uint64_t>(total);
}

} // namespace

std::uint64_t binomial(int n, int k, std::uint64_t limit)
{
    if (k < 0 || n < 0 || k > n)
        return 0;
    k = std::min(k, n - k);
    unsigned __int128 result = 1;
    for (int i = 1; i <= k; ++i) {
        result = result * static_cast<unsigned>(n - k + i) / static_cast<unsigned>(i);
        if (result > limit)
            return limit + 1;
    }
    return static_cast<std::uint64_t>(result);
}

int NaturalRepresentation::at(long long position) const { return order[static_cast<std::size_t>(mod(position, size()))]; }

int NaturalRepresentation::position_of(int vertex) const
{
    for (int u = 0; u < size(); ++u)
        if (order[static_cast<std::size_t>(u)] == vertex)
            return u;
    fail(ErrorKind::InvalidParams, "vertex " + std::to_string(vertex) + " not on the base cycle");
}

LabeledGraph build_kneser(int n, int k, const BuildOptions &opts)
{
    check_params(n, k);
    check_cap(binomial(n, k, static_cast<std::uint64_t>(opts.vertex_cap)), opts, "KG(" + std::to_string(n) + "," + std::to_string(k) + ")");

    std::vector<VertexLabel> labels;
    std::vector<int> combo(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i)
        combo[static_cast<std::size_t>(i)] = i;
    while (true) {
        labels.emplace_back(CyclicSubset(n, combo));
        int i = k - 1;
        while (i >= 0 && combo[static_cast<std::size_t>(i)] == n - k + i)
            --i;
        if (i < 0)
            break;
        ++combo[static_cast<std::size_t>(i)];
        for (int j = i + 1; j < k; ++j)
            combo[static_cast<std::size_t>(j)] = combo[static_cast<std::size_t>(j - 1)] + 1;
    }
    Graph g = disjointness_graph(labels, n);
    return LabeledGraph({Family::Kneser, n, k}, std::move(labels), std::move(g));
}

LabeledGraph build_schrijver(int n, int k, const BuildOptions &opts)
{
    check_params(n, k);
    check_cap(schrijver_count(n, k, static_cast<std::uint64_t>(opts.vertex_cap)), opts,
              "SG(" + std::to_string(n) + "," + std::to_string(k) + ")");
    auto labels = schrijver_labels(n, k);
    Graph g = disjointness_graph(labels, n);
    return LabeledGraph({Family::Schrijver, n, k}, std::move(labels), std::move(g));
}

QGraph build_q(int n, int k, const BuildOptions &opts)
{
    check_params(n, k);
    const int distinct = n / gcd(n, k);
    check_cap(static_cast<std::uint64_t>(distinct), opts, "Q(" + std::to_string(n) + "," + std::to_string(k) + ")");

    const CyclicSubset base = canonical_well_spread(n, k);
    std::vector<VertexLabel> labels;
    NaturalRepresentation natural;
    for (int u = 0; u < distinct; ++u) {
        labels.emplace_back(rotate(base, u));
        natural.order.push_back(u);
    }
    Graph g = disjointness_graph(labels, n);
    return {LabeledGraph({Family::Q, n, k}, std::move(labels), std::move(g)), std::move(natural)};
}

LabeledGraph build_circular(int n, int k, const BuildOptions &opts)
{
    check_params(n, k);
    check_cap(static_cast<std::uint64_t>(n), opts, "K_{" + std::to_string(n) + "/" + std::to_string(k) + "}");
    std::vector<VertexLabel> labels;
    for (int i = 0; i < n; ++i)
        labels.emplace_back(i);
    Graph g(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (j - i >= k && j - i <= n - k)
                g.add_edge(i, j);
    return LabeledGraph({Family::Circular, n, k}, std::move(labels), std::move(g));
}

LabeledGraph build_interlacing(int n, int k, const BuildOptions &opts)
{
    check_params(n, k);
    check_cap(schrijver_count(n, k, static_cast<std::uint64_t>(opts.vertex_cap)), opts,
              "I(" + std::to_string(n) + "," + std::to_string(k) + ")");
    auto labels = schrijver_labels(n, k);
    Graph g = disjointness_graph(labels, n, [](const CyclicSubset &a, const CyclicSubset &b) {
        return is_interlacing_edge(a, b);
    });
    return LabeledGraph({Family::Interlacing, n, k}, std::move(labels), std::move(g));
}

LabeledGraph build_family(Family family, int n, int k, const BuildOptions &opts)
{
    switch (family) {
    case Family::Kneser: return build_kneser(n, k, opts);
    case Family::Schrijver: return build_schrijver(n, k, opts);
    case Family::Q: return build_q(n, k, opts).graph;
    case Family::Circular: return build_circular(n, k, opts);
    case Family::Interlacing: return build_interlacing(n, k, opts);
    case Family::Generic: break;
    }
    fail(ErrorKind::InvalidParams, "no builder for the generic family");
}

bool is_interlacing_edge(const CyclicSubset &x, const CyclicSubset &y)
{
    require(x.modulus() == y.modulus(), ErrorKind::InvalidParams, "interlacing check across different cycles");
    require(x.size() == y.size(), ErrorKind::InvalidParams, "interlacing check on sets of different sizes");
    require(x.disjoint_from(y), ErrorKind::InvalidParams, "interlacing check on intersecting sets");

    // Merge both sorted sets, remembering which side each mark came from.
    std::vector<int> side;
    side.reserve(static_cast<std::size_t>(2 * x.size()));
    std::size_t i = 0, j = 0;
    while (i < x.elements().size() || j < y.elements().size()) {
        if (j == y.elements().size() || (i < x.elements().size() && x.elements()[i] < y.elements()[j])) {
            side.push_back(0);
            ++i;
        } else {
            side.push_back(1);
            ++j;
        }
    }
    for (std::size_t p = 0; p < side.size(); ++p)
        if (side[p] == side[(p + 1) % side.size()])
            return false;
    return true;
}

bool is_cycle_edge(const LabeledGraph &q, int u, int v)
{
    require(u >= 0 && v >= 0 && u < q.size() && v < q.size() && u != v && q.adjacent(u, v), ErrorKind::NotAnEdge,
            "{" + std::to_string(u) + "," + std::to_string(v) + "} is not an edge of " + q.name());
    const auto &a = q.subset_label(u);
    const auto &b = q.subset_label(v);
    return rotate(a, 1) == b || rotate(a, -1) == b;
}

VertexMap embed_circular_in_kneser(int n, int k, const BuildOptions &opts)
{
    check_params(n, k);
    const int l = gcd(n, k);
    const int np = n / l;
    const int kp = k / l;

    auto source = std::make_shared<const LabeledGraph>(build_circular(np, kp, opts));
    auto target = std::make_shared<const LabeledGraph>(build_kneser(n, k, opts));

    VertexMap m{source, target, {}, MapKind::Embedding};
    for (int h = 0; h < np; ++h) {
        // Element x_{i,t} of the i-th cycle is the residue i*n' + t.
        std::vector<int> elems;
        for (int i = 0; i < l; ++i)
            for (int j = 0; j < kp; ++j)
                elems.push_back(i * np + (h + j) % np);
        const auto id = target->find(CyclicSubset(n, elems));
        require(id.has_value(), ErrorKind::ValidationFailed, "consecutive block missing from the Kneser graph");
        m.mapping.push_back(*id);
    }
    ensure_valid(m, "circular embedding into KG(" + std::to_string(n) + "," + std::to_string(k) + ")");
    return m;
}

} // namespace kq

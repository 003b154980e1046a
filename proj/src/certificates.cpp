#include "kneserq/certificates.hpp"
#include "kneserq/error.hpp"

#include <algorithm>
#include <tuple>

namespace kq {

namespace {

std::string params(int n, int k) { return "(" + std::to_string(n) + "," + std::to_string(k) + ")"; }

QGraph coprime_q(int n, int k, const BuildOptions &opts)
{
    require(n >= 1 && k >= 1, ErrorKind::InvalidParams, "parameters must be positive");
    require(gcd(n, k) == 1, ErrorKind::NotCoprime, "gcd" + params(n, k) + " != 1");
    return build_q(n, k, opts);
}

void require_above_half(int n, int k)
{
    require(n > 2 * k, ErrorKind::InvalidParams, "n > 2k required, got " + params(n, k));
}

// Start of the unique a-arc of Z_n that meets s in b-1 elements.
int light_arc_start(const std::vector<bool> &member, int a, int b)
{
    const int n = static_cast<int>(member.size());
    int start = -1;
    for (int c = 0; c < n; ++c) {
        int count = 0;
        for (int i = 0; i < a; ++i)
            count += member[static_cast<std::size_t>(mod(c + i, n))] ? 1 : 0;
        if (count == b - 1) {
            require(start < 0, ErrorKind::ValidationFailed, "light arc is not unique");
            start = c;
        }
    }
    require(start >= 0, ErrorKind::ValidationFailed, "no light arc");
    return start;
}

std::vector<bool> indicator(const CyclicSubset &s)
{
    std::vector<bool> member(static_cast<std::size_t>(s.modulus()), false);
    for (int x : s.elements())
        member[static_cast<std::size_t>(x)] = true;
    return member;
}

// The arc B of the subgraph construction: one clockwise step past the light a-arc of x.
Arc window_arc(const CyclicSubset &x, int a, int b)
{
    return Arc(x.modulus(), light_arc_start(indicator(x), a, b) + 1, a);
}

// x restricted to B, read as a subset of Z_a with B's first element at 0.
CyclicSubset restrict_to(const CyclicSubset &x, const Arc &arc)
{
    std::vector<int> local;
    for (int e : x.elements())
        if (arc.contains(e))
            local.push_back(mod(e - arc.start, x.modulus()));
    return CyclicSubset(arc.length, std::move(local));
}

int q_vertex(const LabeledGraph &q, const CyclicSubset &label)
{
    const auto id = q.find(label);
    require(id.has_value(), ErrorKind::ValidationFailed, label.to_string() + " is not a vertex of " + q.name());
    return *id;
}

// The star of residue 0 in Q(n,k) as base-cycle positions (a maximum independent set).
std::vector<int> star_of_zero(const QGraph &q)
{
    std::vector<int> star;
    for (int u = 0; u < q.graph.size(); ++u)
        if (q.graph.subset_label(u).contains(0))
            star.push_back(u);
    return star;
}

VertexSet shifted(const std::vector<int> &positions, long long by, int n)
{
    VertexSet s(n);
    for (int p : positions)
        s.set(mod(p + by, n));
    return s;
}

// Lower base-cycle position w of a cycle-edge {X_w, X_{w+1}}.
int cycle_edge_start(const QGraph &q, const Edge &e)
{
    const auto [u, v] = e;
    require(u >= 0 && v >= 0 && u < q.graph.size() && v < q.graph.size() && q.graph.adjacent(u, v),
            ErrorKind::NotAnEdge, "{" + std::to_string(u) + "," + std::to_string(v) + "} is not an edge of " +
                                      q.graph.name());
    require(is_cycle_edge(q.graph, u, v), ErrorKind::NotCycleEdge,
            "{" + std::to_string(u) + "," + std::to_string(v) + "} is not a cycle-edge of " + q.graph.name());
    const int n = q.graph.size();
    const int pu = q.natural.position_of(u), pv = q.natural.position_of(v);
    return mod(pv - pu, n) == 1 ? pu : pv;
}

FractionalColoring uniform_coloring(std::vector<VertexSet> sets, int b)
{
    FractionalColoring c;
    c.weights.assign(sets.size(), make_rational(1, b));
    c.sets = std::move(sets);
    return c;
}

ColoringCertificate checked(ColoringCertificate c, const std::string &what)
{
    const auto violations = certificate_violations(c);
    require(violations.empty(), ErrorKind::ValidationFailed,
            what + ": " + (violations.empty() ? std::string() : violations.front()));
    return c;
}

// Q(n,k) (minus a vertex or edge) -> Q(a,b) by folding positions modulo a around T.
VertexMap fold_onto_qab(const QGraph &q, std::shared_ptr<const LabeledGraph> source,
                        const std::vector<int> &source_positions, int t, const BuildOptions &opts)
{
    const int n = q.graph.tag().n, k = q.graph.tag().k;
    const auto [a, b] = critical_params(n, k);
    auto target = std::make_shared<const LabeledGraph>(build_q(a, b, opts).graph);
    const Arc arc = window_arc(q.graph.subset_label(q.natural.at(t)), a, b);

    VertexMap m{std::move(source), target, {}, MapKind::Homomorphism};
    for (int p : source_positions) {
        const int representative = mod(t - mod(t - p, n) % a, n);
        m.mapping.push_back(q_vertex(*target, restrict_to(q.graph.subset_label(q.natural.at(representative)), arc)));
    }
    return m;
}

} // namespace

std::vector<int> RightNeighborTable::neighbours_for(int j) const
{
    std::vector<int> out;
    for (const auto &e : entries)
        if (e.j == j)
            out.push_back(e.vertex);
    return out;
}

RightNeighborTable right_j_neighbors(const QGraph &q, int x)
{
    const auto &g = q.graph;
    const int n = g.tag().n, k = g.tag().k;
    require(g.tag().family == Family::Q, ErrorKind::InvalidParams, "right j-neighbours are defined on Q(n,k)");
    require(gcd(n, k) == 1, ErrorKind::NotCoprime, "gcd" + params(n, k) + " != 1");
    require(x >= 0 && x < g.size(), ErrorKind::InvalidParams, "vertex id " + std::to_string(x) + " out of range");

    RightNeighborTable table;
    table.source = x;
    const auto &lx = g.subset_label(x);
    for (int y = 0; y < g.size(); ++y) {
        if (y == x || g.adjacent(x, y))
            continue;
        const auto &ly = g.subset_label(y);
        const int t = rotation_offset(lx, ly);
        require(t > 0, ErrorKind::ValidationFailed, "no rotation between Q vertices");
        int j = -1;
        const CyclicSubset common = lx.intersection(ly);
        for (int i : common.elements()) {
            // Elements of Y on the clockwise arc (i, i + t].
            const int count = Arc(n, i + 1, t).count(ly);
            require(j < 0 || j == count, ErrorKind::ValidationFailed, "j-count depends on the witness element");
            j = count;
        }
        require(j >= 0, ErrorKind::ValidationFailed, "non-adjacent Q vertices share no element");
        table.entries.push_back({y, t, j});
    }
    std::sort(table.entries.begin(), table.entries.end(), [](const RightNeighbor &a, const RightNeighbor &b) {
        return std::tie(a.j, a.vertex) < std::tie(b.j, b.vertex);
    });
    return table;
}

VertexMap scaling_isomorphism(int n, int k, int l, const BuildOptions &opts)
{
    require(k >= 1 && n >= 2 * k, ErrorKind::InvalidParams, "n >= 2k >= 2 required, got " + params(n, k));
    require(l >= 2, ErrorKind::InvalidParams, "scaling factor must be at least 2");
    auto source = std::make_shared<const LabeledGraph>(build_q(n, k, opts).graph);
    auto target = std::make_shared<const LabeledGraph>(build_q(l * n, l * k, opts).graph);
    require(source->size() == target->size(), ErrorKind::ValidationFailed, "scaled Q has a different order");

    VertexMap m{source, target, {}, MapKind::Isomorphism};
    for (int u = 0; u < source->size(); ++u) {
        std::vector<int> periodic;
        for (int x : source->subset_label(u).elements())
            for (int copy = 0; copy < l; ++copy)
                periodic.push_back(x + copy * n);
        std::sort(periodic.begin(), periodic.end());
        require(target->subset_label(u) == CyclicSubset(l * n, periodic), ErrorKind::ValidationFailed,
                "scaled vertex is not the periodic extension");
        m.mapping.push_back(u);
    }
    ensure_valid(m, "scaling isomorphism Q" + params(n, k) + " -> Q" + params(l * n, l * k));
    return m;
}

VertexMap circular_isomorphism(int n, int k, const BuildOptions &opts)
{
    const QGraph q = coprime_q(n, k, opts);
    auto source = std::make_shared<const LabeledGraph>(q.graph);
    auto target = std::make_shared<const LabeledGraph>(build_circular(n, k, opts));
    VertexMap m{source, target, std::vector<int>(static_cast<std::size_t>(n)), MapKind::Isomorphism};
    for (int u = 0; u < n; ++u)
        m.mapping[static_cast<std::size_t>(q.natural.at(u))] = mod(static_cast<long long>(u) * k, n);
    ensure_valid(m, "circular isomorphism Q" + params(n, k) + " -> K_{" + std::to_string(n) + "/" +
                        std::to_string(k) + "}");
    return m;
}

VertexMap find_subgraph_qab(int n, int k, const BuildOptions &opts)
{
    const QGraph q = coprime_q(n, k, opts);
    require_above_half(n, k);
    const auto [a, b] = critical_params(n, k);
    auto source = std::make_shared<const LabeledGraph>(build_q(a, b, opts).graph);
    auto target = std::make_shared<const LabeledGraph>(q.graph);

    // Positions a-1, a-2, ..., 0 are successive anticlockwise rotations of X_{a-1}.
    const int top = a - 1;
    const Arc arc = window_arc(q.graph.subset_label(q.natural.at(top)), a, b);
    VertexMap m{source, target, std::vector<int>(static_cast<std::size_t>(source->size()), -1), MapKind::Embedding};
    for (int p = 0; p <= top; ++p) {
        const int y = q_vertex(*source, restrict_to(q.graph.subset_label(q.natural.at(p)), arc));
        require(m.mapping[static_cast<std::size_t>(y)] < 0, ErrorKind::ValidationFailed,
                "two window vertices restrict to the same Q(a,b) vertex");
        m.mapping[static_cast<std::size_t>(y)] = q.natural.at(p);
    }
    ensure_valid(m, "Q" + params(a, b) + " inside Q" + params(n, k));
    return m;
}

LabeledGraph modified_graph(const ColoringCertificate &c)
{
    require(c.graph != nullptr, ErrorKind::InvalidParams, "certificate has no graph");
    if (c.deleted_vertex)
        return c.graph->without_vertex(*c.deleted_vertex);
    if (c.deleted_edge)
        return c.graph->without_edge(c.deleted_edge->first, c.deleted_edge->second);
    return *c.graph;
}

std::vector<std::string> certificate_violations(const ColoringCertificate &c)
{
    std::vector<std::string> out;
    if (c.graph == nullptr)
        return {"certificate has no graph"};
    if (c.deleted_vertex && c.deleted_edge)
        return {"certificate deletes both a vertex and an edge"};
    const LabeledGraph modified = modified_graph(c);

    FractionalColoring translated;
    translated.weights = c.coloring.weights;
    for (std::size_t i = 0; i < c.coloring.sets.size(); ++i) {
        const auto &s = c.coloring.sets[i];
        if (s.capacity() != c.graph->size()) {
            out.push_back("set " + std::to_string(i) + " is over the wrong vertex count");
            return out;
        }
        VertexSet t(modified.size());
        for (int v = s.first(); v >= 0; v = s.next(v + 1)) {
            if (c.deleted_vertex && v == *c.deleted_vertex) {
                out.push_back("set " + std::to_string(i) + " uses the deleted vertex");
                continue;
            }
            t.set(c.deleted_vertex && v > *c.deleted_vertex ? v - 1 : v);
        }
        translated.sets.push_back(std::move(t));
    }
    for (auto &v : coloring_violations(modified.graph(), translated))
        out.push_back(std::move(v));
    if (c.coloring.total() != c.claimed_value)
        out.push_back("total weight " + to_fraction_string(c.coloring.total()) + " differs from the claimed " +
                      to_fraction_string(c.claimed_value));
    return out;
}

ColoringCertificate vertex_deleted_coloring(int n, int k, int deleted, const BuildOptions &opts)
{
    const QGraph q = coprime_q(n, k, opts);
    require(deleted >= 0 && deleted < n, ErrorKind::InvalidParams, "vertex id " + std::to_string(deleted) +
                                                                       " out of range");
    const auto [a, b] = critical_params(n, k);
    const auto star = star_of_zero(q);
    std::vector<bool> member(static_cast<std::size_t>(n), false);
    for (int p : star)
        member[static_cast<std::size_t>(p)] = true;
    const int rotation = q.natural.position_of(deleted) - light_arc_start(member, a, b);

    std::vector<VertexSet> sets;
    for (int m = 0; m < a; ++m) {
        const VertexSet positions = shifted(star, rotation - m, n);
        VertexSet ids(n);
        for (int p = positions.first(); p >= 0; p = positions.next(p + 1))
            ids.set(q.natural.at(p));
        ids.reset(deleted); // covered b-1 times, harmless once removed
        sets.push_back(std::move(ids));
    }
    ColoringCertificate c{std::make_shared<const LabeledGraph>(q.graph), deleted, std::nullopt,
                          uniform_coloring(std::move(sets), b), make_rational(a, b)};
    return checked(std::move(c), "vertex-deleted colouring of Q" + params(n, k));
}

ColoringCertificate edge_deleted_coloring(int n, int k, const Edge &e, const BuildOptions &opts)
{
    const QGraph q = coprime_q(n, k, opts);
    const int w = cycle_edge_start(q, e);
    const auto [a, b] = critical_params(n, k);
    const auto star = star_of_zero(q);

    const VertexSet first = shifted(star, 0, n);
    const VertexSet far = shifted(star, -a, n);
    const auto gained = minus(far, first).members(); // X
    const auto lost = minus(first, far).members();   // Y
    require(gained.size() == 1 && lost.size() == 1, ErrorKind::ValidationFailed,
            "a-fold rotation of the star does not differ in exactly one vertex");
    const int x = gained.front(), y = lost.front();
    const int low = mod(x - y, n) == 1 ? y : x;
    const int rotation = w - low;

    std::vector<VertexSet> sets;
    for (int m = 0; m < a; ++m) {
        std::vector<int> positions = star;
        if (m == 0)
            positions.push_back(x);
        const VertexSet moved = shifted(positions, rotation - m, n);
        VertexSet ids(n);
        for (int p = moved.first(); p >= 0; p = moved.next(p + 1))
            ids.set(q.natural.at(p));
        sets.push_back(std::move(ids));
    }
    ColoringCertificate c{std::make_shared<const LabeledGraph>(q.graph), std::nullopt, make_edge(e.first, e.second),
                          uniform_coloring(std::move(sets), b), make_rational(a, b)};
    return checked(std::move(c), "edge-deleted colouring of Q" + params(n, k));
}

VertexMap vertex_deleted_retraction(int n, int k, int deleted, const BuildOptions &opts)
{
    const QGraph q = coprime_q(n, k, opts);
    require_above_half(n, k);
    require(deleted >= 0 && deleted < n, ErrorKind::InvalidParams, "vertex id " + std::to_string(deleted) +
                                                                       " out of range");
    auto source = std::make_shared<const LabeledGraph>(q.graph.without_vertex(deleted));
    std::vector<int> positions;
    for (int v = 0; v < n; ++v)
        if (v != deleted)
            positions.push_back(q.natural.position_of(v));
    VertexMap m = fold_onto_qab(q, source, positions, q.natural.position_of(deleted) - 1, opts);
    ensure_valid(m, "retraction of Q" + params(n, k) + " minus a vertex");
    return m;
}

VertexMap edge_deleted_retraction(int n, int k, const Edge &e, const BuildOptions &opts)
{
    const QGraph q = coprime_q(n, k, opts);
    require_above_half(n, k);
    const int w = cycle_edge_start(q, e);
    auto source = std::make_shared<const LabeledGraph>(q.graph.without_edge(e.first, e.second));
    std::vector<int> positions;
    for (int v = 0; v < n; ++v)
        positions.push_back(q.natural.position_of(v));
    VertexMap m = fold_onto_qab(q, source, positions, w, opts);
    ensure_valid(m, "retraction of Q" + params(n, k) + " minus a cycle-edge");
    return m;
}

FractionalColoring kneser_star_coloring(const LabeledGraph &kg)
{
    require(kg.tag().family == Family::Kneser, ErrorKind::InvalidParams, "star colouring needs a Kneser graph");
    const int n = kg.tag().n, k = kg.tag().k;
    FractionalColoring c;
    for (int i = 0; i < n; ++i) {
        VertexSet star(kg.size());
        for (int v = 0; v < kg.size(); ++v)
            if (kg.subset_label(v).contains(i))
                star.set(v);
        c.sets.push_back(std::move(star));
        c.weights.push_back(make_rational(1, k));
    }
    return c;
}

} // namespace kq

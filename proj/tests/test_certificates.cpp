#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "kneserq/certificates.hpp"
#include "kneserq/cyclic.hpp"
#include "kneserq/error.hpp"
#include "oracles.hpp"

#include <numeric>
#include <set>

using namespace kq;

namespace {

BigRational q(long long p, long long d = 1) { return make_rational(p, d); }

ErrorKind kind_of(const std::function<void()> &f)
{
    try {
        f();
    } catch (const Error &e) {
        return e.kind();
    }
    FAIL("no error raised");
    return ErrorKind::InvalidParams;
}

std::vector<std::pair<int, int>> coprime_grid(int max_n)
{
    std::vector<std::pair<int, int>> out;
    for (int n = 3; n <= max_n; ++n)
        for (int k = 1; 2 * k < n; ++k)
            if (std::gcd(n, k) == 1)
                out.emplace_back(n, k);
    return out;
}

std::vector<std::set<int>> member_sets(const FractionalColoring &c)
{
    std::vector<std::set<int>> out;
    for (const auto &s : c.sets) {
        const auto m = s.members();
        out.emplace_back(m.begin(), m.end());
    }
    return out;
}

std::vector<Edge> cycle_edges(const LabeledGraph &g)
{
    std::vector<Edge> out;
    for (const auto &[u, v] : g.graph().edges())
        if (is_cycle_edge(g, u, v))
            out.push_back({u, v});
    return out;
}

} // namespace

TEST_CASE("right j-neighbours of Q(5,2)")
{
    const auto q52 = build_q(5, 2);
    const auto t = right_j_neighbors(q52, 0);
    CHECK(t.source == 0);
    CHECK(q52.graph.subset_label(0) == CyclicSubset(5, {0, 2}));
    CHECK(t.entries.size() == 2);
    auto ones = t.neighbours_for(1);
    std::sort(ones.begin(), ones.end());
    REQUIRE(ones.size() == 2);
    CHECK(q52.graph.subset_label(ones[0]) == CyclicSubset(5, {2, 4}));
    CHECK(q52.graph.subset_label(ones[1]) == CyclicSubset(5, {0, 3}));
    for (const auto &e : t.entries)
        CHECK(rotate(q52.graph.subset_label(0), e.offset) == q52.graph.subset_label(e.vertex));
}

TEST_CASE("right j-neighbours: empty for k = 1, two adjacent per j otherwise")
{
    for (int n = 2; n <= 8; ++n)
        CHECK(right_j_neighbors(build_q(n, 1), 0).entries.empty());

    for (const auto &[n, k] : coprime_grid(13)) {
        const auto qg = build_q(n, k);
        for (int x = 0; x < n; ++x) {
            const auto t = right_j_neighbors(qg, x);
            CHECK(t.entries.size() == static_cast<std::size_t>(2 * (k - 1)));
            for (int j = 1; j < k; ++j) {
                const auto ys = t.neighbours_for(j);
                REQUIRE(ys.size() == 2);
                CHECK(qg.graph.graph().adjacent(ys[0], ys[1]));
                for (int y : ys)
                    CHECK_FALSE(qg.graph.graph().adjacent(x, y));
            }
        }
    }
    CHECK(kind_of([] { right_j_neighbors(build_q(6, 2), 0); }) == ErrorKind::NotCoprime);
}

TEST_CASE("scaling isomorphism")
{
    const auto m = scaling_isomorphism(3, 1, 2);
    CHECK(m.kind == MapKind::Isomorphism);
    CHECK(m.source->size() == 3);
    CHECK(m.target->size() == 3);
    CHECK(validate_map(m).empty());
    CHECK(validate_map(scaling_isomorphism(5, 2, 2)).empty());
    for (int l = 2; l <= 5; ++l) {
        const auto k2 = scaling_isomorphism(2, 1, l);
        CHECK(k2.target->size() == 2);
        CHECK(validate_map(k2).empty());
    }
    for (int n = 2; n <= 8; ++n)
        for (int k = 1; 2 * k <= n; ++k)
            for (int l = 2; l <= 3; ++l)
                CHECK(validate_map(scaling_isomorphism(n, k, l)).empty());
    CHECK(kind_of([] { scaling_isomorphism(5, 2, 1); }) == ErrorKind::InvalidParams);
    CHECK(kind_of([] { scaling_isomorphism(3, 2, 2); }) == ErrorKind::InvalidParams);
}

TEST_CASE("circular isomorphism")
{
    const auto m = circular_isomorphism(5, 2);
    CHECK(m.mapping == std::vector<int>{0, 2, 4, 1, 3});
    CHECK(validate_map(m).empty());
    for (int n = 2; n <= 9; ++n) {
        const auto id = circular_isomorphism(n, 1);
        std::vector<int> want(static_cast<std::size_t>(n));
        std::iota(want.begin(), want.end(), 0);
        CHECK(id.mapping == want);
    }
    const auto m13 = circular_isomorphism(13, 5);
    const auto edges = cycle_edges(*m13.source);
    CHECK(edges.size() == 13);
    for (const auto &[u, v] : edges) {
        const int d = ((m13(u) - m13(v)) % 13 + 13) % 13;
        CHECK((d == 5 || d == 8));
    }
    for (const auto &[n, k] : coprime_grid(14))
        CHECK(validate_map(circular_isomorphism(n, k)).empty());
    CHECK(kind_of([] { circular_isomorphism(6, 2); }) == ErrorKind::NotCoprime);
}

TEST_CASE("Q(a,b) inside Q(n,k)")
{
    const auto m = find_subgraph_qab(13, 5);
    CHECK(m.kind == MapKind::Embedding);
    CHECK(m.source->size() == 5);
    CHECK(m.mapping == std::vector<int>{0, 1, 2, 3, 4});
    CHECK(validate_map(m).empty());

    const auto k3 = find_subgraph_qab(7, 2);
    CHECK(k3.source->graph() == oracle::complete(3));
    CHECK(validate_map(k3).empty());
    const auto k2 = find_subgraph_qab(7, 3);
    CHECK(k2.source->size() == 2);
    CHECK(k2.target->graph().adjacent(k2(0), k2(1)));

    for (const auto &[n, k] : coprime_grid(14)) {
        const auto e = find_subgraph_qab(n, k);
        const auto [a, b] = critical_params(n, k);
        CHECK(e.source->size() == a);
        CHECK(validate_map(e).empty());
        // induced: adjacency both ways
        for (int u = 0; u < a; ++u)
            for (int v = 0; v < a; ++v)
                CHECK(e.source->graph().adjacent(u, v) == e.target->graph().adjacent(e(u), e(v)));
        (void)b;
    }
    CHECK(kind_of([] { find_subgraph_qab(2, 1); }) == ErrorKind::InvalidParams);
    CHECK(kind_of([] { find_subgraph_qab(10, 4); }) == ErrorKind::NotCoprime);
}

TEST_CASE("vertex-deleted colouring of Q(7,2)")
{
    const auto c = vertex_deleted_coloring(7, 2, 1);
    CHECK(member_sets(c.coloring) == std::vector<std::set<int>>{{0, 4}, {3, 6}, {2, 5}});
    for (const auto &w : c.coloring.weights)
        CHECK(w == q(1));
    CHECK(c.claimed_value == q(3));
    CHECK(c.deleted_vertex == 1);
    CHECK(certificate_violations(c).empty());
    CHECK(modified_graph(c).size() == 6);
}

TEST_CASE("vertex-deleted colourings reach a/b")
{
    for (int v = 0; v < 5; ++v)
        CHECK(vertex_deleted_coloring(5, 2, v).claimed_value == q(2));
    for (int v = 0; v < 13; ++v) {
        const auto c = vertex_deleted_coloring(13, 5, v);
        CHECK(c.claimed_value == q(5, 2));
        CHECK(certificate_violations(c).empty());
    }
    for (const auto &[n, k] : coprime_grid(14)) {
        const auto [a, b] = critical_params(n, k);
        CHECK(q(a, b) < q(n, k));
        for (int v = 0; v < n; ++v) {
            const auto c = vertex_deleted_coloring(n, k, v);
            CHECK(c.claimed_value == q(a, b));
            CHECK(c.coloring.total() == q(a, b));
            CHECK(certificate_violations(c).empty());
            for (const auto &s : c.coloring.sets)
                CHECK_FALSE(s.test(v));
        }
        // The independent LP agrees.
        const auto c = vertex_deleted_coloring(n, k, 0);
        CHECK(fractional_chromatic_number(modified_graph(c).graph()).value == c.claimed_value);
    }
}

TEST_CASE("edge-deleted colouring of Q(7,2)")
{
    const auto c = edge_deleted_coloring(7, 2, {0, 1});
    CHECK(member_sets(c.coloring) == std::vector<std::set<int>>{{0, 1, 4}, {3, 6}, {2, 5}});
    CHECK(c.claimed_value == q(3));
    CHECK(c.deleted_edge == Edge{0, 1});
    CHECK(certificate_violations(c).empty());
    const auto g = modified_graph(c);
    CHECK_FALSE(g.graph().adjacent(0, 1));
    CHECK(g.graph().edge_count() == build_q(7, 2).graph.graph().edge_count() - 1);
}

TEST_CASE("edge-deleted colourings reach a/b on every cycle-edge")
{
    for (const auto &[u, v] : build_q(5, 2).graph.graph().edges())
        CHECK(edge_deleted_coloring(5, 2, {u, v}).claimed_value == q(2));
    for (const auto &[n, k] : coprime_grid(14)) {
        const auto [a, b] = critical_params(n, k);
        const auto qg = build_q(n, k).graph;
        const auto edges = cycle_edges(qg);
        CHECK(edges.size() == static_cast<std::size_t>(n));
        for (const auto &e : edges) {
            const auto c = edge_deleted_coloring(n, k, e);
            CHECK(c.claimed_value == q(a, b));
            CHECK(certificate_violations(c).empty());
        }
        const auto c = edge_deleted_coloring(n, k, edges.front());
        CHECK(fractional_chromatic_number(modified_graph(c).graph()).value == c.claimed_value);
    }
}

TEST_CASE("tampered colouring certificates are caught")
{
    auto c = vertex_deleted_coloring(7, 2, 1);
    c.claimed_value = q(5, 2);
    CHECK_FALSE(certificate_violations(c).empty());
    c = vertex_deleted_coloring(7, 2, 1);
    c.coloring.sets[0].set(1);
    CHECK_FALSE(certificate_violations(c).empty());
    c = vertex_deleted_coloring(7, 2, 1);
    c.coloring.weights[2] = q(1, 2);
    c.claimed_value = q(5, 2);
    CHECK_FALSE(certificate_violations(c).empty()); // X_2, X_5 under-covered
    auto e = edge_deleted_coloring(7, 2, {0, 1});
    e.deleted_edge = Edge{1, 2};
    CHECK_FALSE(certificate_violations(e).empty());
}

TEST_CASE("retractions")
{
    for (int d = 0; d < 7; ++d) {
        const auto m = vertex_deleted_retraction(7, 3, d);
        CHECK(m.kind == MapKind::Homomorphism);
        CHECK(m.source->size() == 6);
        CHECK(m.target->size() == 2);
        CHECK(validate_map(m).empty());
        // a path folds onto an edge: neighbours along it alternate sides
        for (const auto &[u, v] : m.source->graph().edges())
            CHECK(m(u) != m(v));
    }
    const auto r13 = vertex_deleted_retraction(13, 5, 0);
    CHECK(r13.source->size() == 12);
    CHECK(r13.target->size() == 5);
    CHECK(std::set<int>(r13.mapping.begin(), r13.mapping.end()).size() == 5);
    CHECK(validate_map(vertex_deleted_retraction(5, 2, 3)).empty());

    for (const auto &[u, v] : build_q(5, 2).graph.graph().edges())
        CHECK(validate_map(edge_deleted_retraction(5, 2, {u, v})).empty());

    for (const auto &[n, k] : coprime_grid(14)) {
        const auto [a, b] = critical_params(n, k);
        for (int d = 0; d < n; ++d) {
            const auto m = vertex_deleted_retraction(n, k, d);
            CHECK(m.target->size() == a);
            CHECK(validate_map(m).empty());
        }
        for (const auto &e : cycle_edges(build_q(n, k).graph)) {
            const auto m = edge_deleted_retraction(n, k, e);
            CHECK(m.target->size() == a);
            CHECK(validate_map(m).empty());
            CHECK_FALSE(m.source->graph().adjacent(e.first, e.second));
        }
        (void)b;
    }
}

TEST_CASE("certificate errors")
{
    CHECK(kind_of([] { vertex_deleted_coloring(10, 4, 0); }) == ErrorKind::NotCoprime);
    CHECK(kind_of([] { edge_deleted_coloring(10, 4, {0, 1}); }) == ErrorKind::NotCoprime);
    CHECK(kind_of([] { edge_deleted_coloring(7, 2, {0, 2}); }) == ErrorKind::NotCycleEdge);
    CHECK(kind_of([] { edge_deleted_coloring(7, 2, {0, 3}); }) == ErrorKind::NotAnEdge);
    CHECK(kind_of([] { edge_deleted_retraction(7, 2, {0, 2}); }) == ErrorKind::NotCycleEdge);
    CHECK(kind_of([] { vertex_deleted_retraction(2, 1, 0); }) == ErrorKind::InvalidParams);
    CHECK(kind_of([] { edge_deleted_retraction(2, 1, {0, 1}); }) == ErrorKind::InvalidParams);
    CHECK(kind_of([] { vertex_deleted_coloring(7, 2, 7); }) == ErrorKind::InvalidParams);
}

TEST_CASE("non-cycle edges leave no larger independent set")
{
    for (const auto &[n, k] : coprime_grid(14)) {
        if (k == 1)
            continue; // K_n, see below
        const auto qg = build_q(n, k).graph;
        CHECK(independence_number(qg.graph()) == k);
        for (const auto &[u, v] : qg.graph().edges()) {
            const auto g = qg.without_edge(u, v).graph();
            CHECK(independence_number(g) == (is_cycle_edge(qg, u, v) ? k + 1 : k));
        }
    }
}

// Q(n,1) = K_n: removing any edge, cycle-edge or not, frees an independent pair.
TEST_CASE("complete graphs have no non-critical edges")
{
    for (int n = 3; n <= 14; ++n) {
        const auto qg = build_q(n, 1).graph;
        for (const auto &[u, v] : qg.graph().edges()) {
            const auto g = qg.without_edge(u, v).graph();
            CHECK(independence_number(g) == 2);
            CHECK(fractional_chromatic_number(g).value == q(n - 1));
        }
    }
}

TEST_CASE("kneser stars")
{
    for (int n = 4; n <= 9; ++n)
        for (int k = 1; 2 * k <= n; ++k) {
            const auto kg = build_kneser(n, k);
            const auto c = kneser_star_coloring(kg);
            CHECK(c.sets.size() == static_cast<std::size_t>(n));
            CHECK(c.total() == q(n, k));
            CHECK(coloring_violations(kg.graph(), c).empty());
        }
}

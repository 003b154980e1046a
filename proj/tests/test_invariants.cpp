#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "kneserq/error.hpp"
#include "kneserq/families.hpp"
#include "kneserq/invariants.hpp"
#include "kneserq/lp.hpp"
#include "oracles.hpp"

#include <algorithm>
#include <numeric>
#include <set>

using namespace kq;

namespace {

BigRational q(long long p, long long d = 1) { return make_rational(p, d); }

std::uint32_t mask_of(const VertexSet &s)
{
    std::uint32_t m = 0;
    for (int v : s.members())
        m |= 1u << v;
    return m;
}

VertexSet set_of(int n, std::uint32_t m)
{
    VertexSet s(n);
    for (int v = 0; v < n; ++v)
        if (m >> v & 1u)
            s.set(v);
    return s;
}

std::vector<Graph> small_graphs()
{
    std::mt19937 rng(20240611);
    std::vector<Graph> out{oracle::cycle(5), oracle::cycle(6), oracle::cycle(7), oracle::complete(4),
                           build_kneser(5, 2).graph(), Graph(3), Graph(0)};
    for (int i = 0; i < 40; ++i)
        out.push_back(oracle::random_graph(3 + i % 7, 0.2 + 0.05 * (i % 9), rng));
    return out;
}

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

} // namespace

TEST_CASE("rationals")
{
    CHECK(to_fraction_string(q(6, 4)) == "3/2");
    CHECK(to_fraction_string(q(3)) == "3/1");
    CHECK(to_fraction_string(q(-2, 4)) == "-1/2");
    CHECK(parse_rational("10/4") == q(5, 2));
    CHECK(parse_rational("7") == q(7));
    CHECK(parse_rational("-3/9") == q(-1, 3));
    for (const char *bad : {"", "1/0", "a/b", "1/-2", "1//2", " 1/2"})
        CHECK(kind_of([&] { parse_rational(bad); }) == ErrorKind::ParseError);
    CHECK(ceil_of(q(13, 5)) == 3);
    CHECK(ceil_of(q(3)) == 3);
    CHECK(ceil_of(q(-1, 2)) == 0);
}

TEST_CASE("exact covering simplex on a 5-cycle")
{
    CoveringSimplex lp(5);
    for (int i = 0; i < 5; ++i) {
        VertexSet s(5);
        s.set(i);
        s.set((i + 2) % 5);
        lp.add_column(s);
    }
    lp.solve();
    CHECK(lp.objective() == q(5, 2));
    const auto y = lp.duals();
    CHECK(std::accumulate(y.begin(), y.end(), q(0)) == q(5, 2));
}

TEST_CASE("maximal independent sets match the subset scan")
{
    const auto c5 = enumerate_maximal_independent_sets(oracle::cycle(5));
    CHECK(c5.size() == 5);
    for (const auto &s : c5)
        CHECK(s.count() == 2);
    CHECK(enumerate_maximal_independent_sets(oracle::complete(6)).size() == 6);
    const auto petersen = enumerate_maximal_independent_sets(build_kneser(5, 2).graph());
    CHECK(std::count_if(petersen.begin(), petersen.end(), [](const VertexSet &s) { return s.count() == 4; }) == 5);

    for (const auto &g : small_graphs()) {
        std::set<std::uint32_t> got;
        for (const auto &s : enumerate_maximal_independent_sets(g))
            CHECK(got.insert(mask_of(s)).second);
        const auto want = oracle::maximal_masks(g);
        CHECK(got == std::set<std::uint32_t>(want.begin(), want.end()));
    }
    SolverLimits tight;
    tight.mis_cap = 3;
    CHECK(kind_of([&] { enumerate_maximal_independent_sets(oracle::cycle(9), tight); }) == ErrorKind::ResourceCap);
}

TEST_CASE("independence number")
{
    CHECK(independence_number(build_kneser(5, 2).graph()) == 4);
    CHECK(independence_number(build_schrijver(7, 2).graph()) == 4);
    CHECK(independence_number(build_q(13, 5).graph.graph()) == 5);
    for (const auto &g : small_graphs())
        CHECK(independence_number(g) == oracle::alpha(g));
}

TEST_CASE("maximum independent sets")
{
    const auto sg = build_schrijver(7, 2);
    const auto sets = max_independent_sets(sg.graph());
    CHECK(sets.size() == 7);
    for (const auto &s : sets) {
        CyclicSubset common = CyclicSubset::full(7);
        for (int v : s.members())
            common = common.intersection(sg.subset_label(v));
        CHECK(common.size() == 1);
    }
    const auto q13 = build_q(13, 5).graph;
    const auto qs = max_independent_sets(q13.graph());
    CHECK(qs.size() == 13);
    for (const auto &s : qs) {
        CyclicSubset common = CyclicSubset::full(13);
        for (int v : s.members())
            common = common.intersection(q13.subset_label(v));
        CHECK_FALSE(common.empty());
    }
    const auto sg6 = build_schrijver(6, 2);
    bool non_star = false;
    for (const auto &s : max_independent_sets(sg6.graph())) {
        CyclicSubset common = CyclicSubset::full(6);
        for (int v : s.members())
            common = common.intersection(sg6.subset_label(v));
        non_star = non_star || common.empty();
    }
    CHECK(non_star);

    for (const auto &g : small_graphs()) {
        const int a = oracle::alpha(g);
        std::set<std::uint32_t> want;
        for (auto m : oracle::independent_masks(g))
            if (std::popcount(m) == a)
                want.insert(m);
        std::set<std::uint32_t> got;
        for (const auto &s : max_independent_sets(g))
            got.insert(mask_of(s));
        CHECK(got == want);
    }
}

TEST_CASE("clique number")
{
    CHECK(clique_number(oracle::complete(5)) == 5);
    CHECK(clique_number(oracle::cycle(5)) == 2);
    for (const auto &g : small_graphs())
        CHECK(clique_number(g) == oracle::alpha(g.complement()));
}

TEST_CASE("chromatic number")
{
    CHECK(chromatic_number(build_kneser(5, 2).graph()) == 3);
    CHECK(chromatic_number(build_q(13, 5).graph.graph()) == 3);
    CHECK(chromatic_number(Graph(4)) == 1);
    CHECK(chromatic_number(Graph(0)) == 0);
    for (const auto &g : small_graphs()) {
        const auto r = exact_coloring(g);
        CHECK(r.colors == oracle::chi(g));
        for (const auto &[u, v] : g.edges())
            CHECK(r.coloring[static_cast<std::size_t>(u)] != r.coloring[static_cast<std::size_t>(v)]);
    }
}

TEST_CASE("fractional chromatic number")
{
    CHECK(fractional_chromatic_number(build_schrijver(5, 2).graph()).value == q(5, 2));
    CHECK(fractional_chromatic_number(build_q(13, 5).graph.graph()).value == q(13, 5));
    for (int n = 1; n <= 7; ++n)
        CHECK(fractional_chromatic_number(oracle::complete(n)).value == q(n));
    CHECK(fractional_chromatic_number(Graph(0)).value == q(0));
    CHECK(fractional_chromatic_number(Graph(3)).value == q(1));
    CHECK(fractional_chromatic_number(build_kneser(7, 3).graph()).value == q(7, 3));
}

TEST_CASE("certificate of the fractional optimum")
{
    for (const auto &g : small_graphs()) {
        const auto r = fractional_chromatic_number(g);
        CHECK(coloring_violations(g, r.coloring).empty());
        CHECK(r.coloring.total() == r.value);
        REQUIRE(r.dual.size() == static_cast<std::size_t>(g.size()));
        CHECK(std::accumulate(r.dual.begin(), r.dual.end(), q(0)) == r.value);
        for (auto m : oracle::independent_masks(g)) {
            BigRational load = 0;
            for (int v = 0; v < g.size(); ++v)
                if (m >> v & 1u)
                    load += r.dual[static_cast<std::size_t>(v)];
            CHECK(load <= 1);
        }
    }
}

TEST_CASE("maximal sets lose nothing against all independent sets")
{
    for (const auto &g : small_graphs()) {
        if (g.size() > 9 || g.size() == 0)
            continue;
        std::vector<VertexSet> every;
        for (auto m : oracle::independent_masks(g))
            if (m != 0)
                every.push_back(set_of(g.size(), m));
        CHECK(fractional_chromatic_number_over(g, every) == fractional_chromatic_number(g).value);
    }
}

TEST_CASE("fractional bounds: n/alpha on transitive graphs, clique and chromatic sandwich")
{
    for (int n = 2; n <= 9; ++n)
        for (int k = 1; 2 * k <= n; ++k) {
            const auto g = build_kneser(n, k).graph();
            if (g.size() > 60)
                continue;
            const auto f = fractional_chromatic_number(g).value;
            CHECK(f == q(g.size(), independence_number(g)));
        }
    for (const auto &g : small_graphs()) {
        if (g.size() == 0)
            continue;
        const auto f = fractional_chromatic_number(g).value;
        CHECK(f >= q(g.size(), oracle::alpha(g)));
        CHECK(f >= clique_number(g));
        CHECK(f <= chromatic_number(g));
    }
}

TEST_CASE("colouring violations are reported")
{
    const Graph c5 = oracle::cycle(5);
    FractionalColoring bad;
    bad.sets.push_back(set_of(5, 0b00011)); // an edge
    bad.weights.push_back(q(1));
    CHECK_FALSE(coloring_violations(c5, bad).empty());

    FractionalColoring thin;
    for (int i = 0; i < 5; ++i) {
        thin.sets.push_back(set_of(5, 1u << i | 1u << ((i + 2) % 5)));
        thin.weights.push_back(q(1, 3));
    }
    CHECK_FALSE(coloring_violations(c5, thin).empty());
    for (auto &w : thin.weights)
        w = q(1, 2);
    CHECK(coloring_violations(c5, thin).empty());
    thin.weights.back() = q(0);
    CHECK_FALSE(coloring_violations(c5, thin).empty());
}

TEST_CASE("sandwich certificate for chi_f")
{
    const auto kg = build_kneser(7, 3);
    const auto circ = embed_circular_in_kneser(7, 3);
    FractionalColoring stars;
    for (int i = 0; i < 7; ++i) {
        VertexSet s(kg.size());
        for (int v = 0; v < kg.size(); ++v)
            if (kg.subset_label(v).contains(i))
                s.set(v);
        stars.sets.push_back(s);
        stars.weights.push_back(q(1, 3));
    }
    const auto r = fractional_value_from_bounds(kg.graph(), stars, circ.mapping);
    REQUIRE(r.has_value());
    CHECK(r->value == q(7, 3));
    CHECK(std::accumulate(r->dual.begin(), r->dual.end(), q(0)) == q(7, 3));

    // A 3-set support misses the optimum: no certificate.
    CHECK_FALSE(fractional_value_from_bounds(kg.graph(), stars, {0, 1, 2}).has_value());
}

TEST_CASE("homomorphisms")
{
    CHECK(find_homomorphism(oracle::cycle(5), oracle::complete(3)).has_value());
    CHECK_FALSE(find_homomorphism(oracle::cycle(5), oracle::complete(2)).has_value());
    const auto q7 = std::make_shared<const LabeledGraph>(build_q(7, 3).graph.without_vertex(0));
    const auto k2 = std::make_shared<const LabeledGraph>(build_circular(2, 1));
    const auto m = find_homomorphism(q7, k2);
    REQUIRE(m.has_value());
    CHECK(validate_map(*m).empty());

    std::mt19937 rng(7);
    const std::vector<Graph> targets{oracle::complete(2), oracle::complete(3), oracle::cycle(5), oracle::circulant(7, 2),
                                     oracle::circulant(8, 3)};
    for (const auto &g : small_graphs()) {
        if (g.size() > 7)
            continue;
        for (const auto &h : targets) {
            const bool want = oracle::hom_exists(g, h);
            CHECK(find_homomorphism(g, h).has_value() == want);
            std::vector<int> pg(static_cast<std::size_t>(g.size())), ph(static_cast<std::size_t>(h.size()));
            std::iota(pg.begin(), pg.end(), 0);
            std::iota(ph.begin(), ph.end(), 0);
            std::shuffle(pg.begin(), pg.end(), rng);
            std::shuffle(ph.begin(), ph.end(), rng);
            CHECK(find_homomorphism(oracle::relabel(g, pg), oracle::relabel(h, ph)).has_value() == want);
        }
    }
}

TEST_CASE("circular chromatic number")
{
    CHECK(circular_chromatic_number(oracle::cycle(5)) == q(5, 2));
    CHECK(circular_chromatic_number(oracle::complete(4)) == q(4));
    const auto k72 = build_circular(7, 2);
    CHECK(circular_chromatic_number(k72.without_edge(0, 2).graph()) == q(3));
    CHECK(circular_chromatic_number(k72.without_edge(0, 3).graph()) == q(7, 2));
    CHECK(circular_chromatic_number(Graph(0)) == q(0));
    CHECK(circular_chromatic_number(Graph(4)) == q(1));

    // Brute-force oracle: an optimal p/q always has p <= |V|.
    for (const auto &g : small_graphs()) {
        if (g.size() > 6 || g.edge_count() == 0)
            continue;
        BigRational best = g.size() + 1;
        for (int p = 2; p <= g.size(); ++p)
            for (int d = 1; 2 * d <= p; ++d)
                if (std::gcd(p, d) == 1 && q(p, d) < best && oracle::hom_exists(g, oracle::circulant(p, d)))
                    best = q(p, d);
        const auto chi_c = circular_chromatic_number(g);
        CHECK(chi_c == best);
        CHECK(fractional_chromatic_number(g).value <= chi_c);
        CHECK(chi_c <= chromatic_number(g));
        CHECK(ceil_of(chi_c) == chromatic_number(g));
    }
}

TEST_CASE("isomorphisms")
{
    const auto q52 = std::make_shared<const LabeledGraph>(build_q(5, 2).graph);
    const auto k52 = std::make_shared<const LabeledGraph>(build_circular(5, 2));
    const auto m = find_isomorphism(q52, k52);
    REQUIRE(m.has_value());
    CHECK(validate_map(*m).empty());
    CHECK(find_isomorphism(build_q(6, 2).graph.graph(), build_q(3, 1).graph.graph()).has_value());
    CHECK_FALSE(find_isomorphism(oracle::cycle(6), oracle::cycle(5)).has_value());
    CHECK_FALSE(find_isomorphism(oracle::cycle(6), build_circular(6, 2).graph()).has_value());

    std::mt19937 rng(99);
    for (const auto &g : small_graphs()) {
        std::vector<int> perm(static_cast<std::size_t>(g.size()));
        std::iota(perm.begin(), perm.end(), 0);
        std::shuffle(perm.begin(), perm.end(), rng);
        const auto f = find_isomorphism(g, oracle::relabel(g, perm));
        REQUIRE(f.has_value());
        for (int u = 0; u < g.size(); ++u)
            for (int v = 0; v < g.size(); ++v)
                CHECK(g.adjacent(u, v) == oracle::relabel(g, perm).adjacent((*f)[static_cast<std::size_t>(u)],
                                                                            (*f)[static_cast<std::size_t>(v)]));
    }
    // Same degree sequence, different graphs: two triangles versus a hexagon.
    Graph triangles(6);
    for (int base : {0, 3})
        for (int i = 0; i < 3; ++i)
            triangles.add_edge(base + i, base + (i + 1) % 3);
    CHECK_FALSE(find_isomorphism(triangles, oracle::cycle(6)).has_value());
}

TEST_CASE("map validation")
{
    const auto c5 = std::make_shared<const LabeledGraph>(build_circular(5, 2));
    VertexMap id{c5, c5, {0, 1, 2, 3, 4}, MapKind::Isomorphism};
    CHECK(validate_map(id).empty());
    const auto k2 = std::make_shared<const LabeledGraph>(build_circular(2, 1));
    VertexMap collapse{k2, k2, {0, 0}, MapKind::Homomorphism};
    CHECK(validate_map(collapse).size() == 1);
    VertexMap short_map{c5, c5, {0, 1}, MapKind::Homomorphism};
    CHECK_FALSE(validate_map(short_map).empty());
    VertexMap out_of_range{k2, k2, {0, 5}, MapKind::Homomorphism};
    CHECK_FALSE(validate_map(out_of_range).empty());
    CHECK(kind_of([&] { ensure_valid(collapse, "test"); }) == ErrorKind::ValidationFailed);
}

TEST_CASE("node budget")
{
    SolverLimits tiny;
    tiny.node_budget = 5;
    CHECK(kind_of([&] { chromatic_number(build_kneser(7, 2).graph(), tiny); }) == ErrorKind::ResourceCap);
    CHECK(kind_of([&] { find_homomorphism(build_kneser(7, 2).graph(), oracle::complete(4), tiny); }) ==
          ErrorKind::ResourceCap);
}

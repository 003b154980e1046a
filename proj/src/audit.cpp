#include "kneserq/audit.hpp"
#include "kneserq/certificates.hpp"
#include "kneserq/criticality.hpp"
#include "kneserq/error.hpp"
#include "kneserq/families.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <sstream>

namespace kq {

namespace {

struct Outcome {
    bool ok = false;
    std::string facts;
};

std::string str(const BigRational &r)
{
    return denominator_of(r) == 1 ? numerator_of(r).str() : to_fraction_string(r);
}

std::string params(int n, int k) { return "(" + std::to_string(n) + "," + std::to_string(k) + ")"; }

// Runs one check; exceptions become a failed line carrying the message.
void check(CriterionReport &report, const std::string &name, const std::function<Outcome()> &body)
{
    AuditCheck c;
    try {
        Outcome o = body();
        c.ok = o.ok;
        c.line = name + ": " + o.facts;
    } catch (const std::exception &e) {
        c.ok = false;
        c.line = name + ": " + e.what();
    }
    c.line += c.ok ? " OK" : " FAIL";
    report.checks.push_back(std::move(c));
}

template <class F> void for_params(int lo_n, int hi_n, F &&f)
{
    for (int n = lo_n; n <= hi_n; ++n)
        for (int k = 1; 2 * k <= n; ++k)
            f(n, k);
}

std::string expect(const std::string &what, const BigRational &got, const BigRational &want)
{
    return what + "=" + str(got) + (got == want ? "" : " (expected " + str(want) + ")");
}

BigRational ceil_ratio(int n, int k) { return (n + k - 1) / k; }

bool is_star(const LabeledGraph &g, const VertexSet &s)
{
    std::vector<int> members = s.members();
    CyclicSubset common = g.subset_label(members.front());
    for (int v : members)
        common = common.intersection(g.subset_label(v));
    return !common.empty();
}

// chi_f of a Kneser graph: column generation on small instances, otherwise the star colouring
// against the dual of the embedded circular complete graph.
FractionalResult kneser_fractional(const LabeledGraph &kg, const SolverLimits &limits, std::string &how)
{
    if (kg.size() <= 100) {
        how = "LP";
        return fractional_chromatic_number(kg.graph(), limits);
    }
    how = "sandwich";
    const VertexMap circ = embed_circular_in_kneser(kg.tag().n, kg.tag().k);
    auto r = fractional_value_from_bounds(kg.graph(), kneser_star_coloring(kg), circ.mapping, limits);
    require(r.has_value(), ErrorKind::ValidationFailed, "star colouring and circular dual bounds differ");
    return *r;
}

CriterionReport criterion_1(const AuditOptions &o)
{
    CriterionReport r{1, "chromatic law for Kneser and Schrijver graphs", {}};
    for_params(2, std::min(10, o.max_n), [&](int n, int k) {
        const int want = n - 2 * k + 2;
        for (auto family : {Family::Kneser, Family::Schrijver}) {
            const LabeledGraph g = build_family(family, n, k);
            check(r, "chromatic law " + g.name(), [&] {
                const int chi = chromatic_number(g.graph(), o.limits);
                return Outcome{chi == want, expect("chi", chi, want)};
            });
        }
        if (n > 8)
            return;
        const LabeledGraph sg = build_schrijver(n, k);
        check(r, "vertex-colour-criticality " + sg.name(), [&] {
            const auto report = vertex_criticality(sg, Invariant::Chi, o.limits);
            int good = 0;
            for (const auto &d : report.per_vertex)
                good += d.value == want - 1 ? 1 : 0;
            return Outcome{good == sg.size(), std::to_string(good) + "/" + std::to_string(sg.size()) +
                                                  " deletions give chi=" + std::to_string(want - 1)};
        });
    });
    return r;
}

CriterionReport criterion_2(const AuditOptions &o)
{
    CriterionReport r{2, "independence numbers and star structure", {}};
    for_params(2, std::min(9, o.max_n), [&](int n, int k) {
        const LabeledGraph kg = build_kneser(n, k);
        check(r, "independence number " + kg.name(), [&] {
            const int alpha = independence_number(kg.graph(), o.limits);
            const auto want = static_cast<int>(binomial(n - 1, k - 1));
            return Outcome{alpha == want, expect("alpha", alpha, want)};
        });
    });
    for_params(2, std::min(11, o.max_n), [&](int n, int k) {
        const LabeledGraph sg = build_schrijver(n, k);
        const auto want = static_cast<int>(binomial(n - k - 1, k - 1));
        check(r, "independence number " + sg.name(), [&] {
            const int alpha = independence_number(sg.graph(), o.limits);
            return Outcome{alpha == want, expect("alpha", alpha, want)};
        });
        if (n == 2 * k)
            return;
        if (n != 2 * k + 2) {
            check(r, "star structure " + sg.name(), [&] {
                const auto sets = max_independent_sets(sg.graph(), o.limits);
                const auto stars = std::count_if(sets.begin(), sets.end(), [&](const VertexSet &s) {
                    return s.count() == want && is_star(sg, s);
                });
                return Outcome{!sets.empty() && stars == static_cast<long>(sets.size()),
                               std::to_string(stars) + "/" + std::to_string(sets.size()) +
                                   " maximum sets are stars"};
            });
        } else if (k == 2 || k == 3) {
            check(r, "non-star maximum set " + sg.name(), [&] {
                const auto sets = max_independent_sets(sg.graph(), o.limits);
                const auto others = std::count_if(sets.begin(), sets.end(),
                                                  [&](const VertexSet &s) { return !is_star(sg, s); });
                return Outcome{others > 0, std::to_string(others) + " of " + std::to_string(sets.size()) +
                                               " maximum sets are not stars"};
            });
        }
    });
    return r;
}

CriterionReport criterion_3(const AuditOptions &o)
{
    CriterionReport r{3, "fractional chromatic number n/k", {}};
    for_params(2, std::min(10, o.max_n), [&](int n, int k) {
        const BigRational want = make_rational(n, k);
        const LabeledGraph kg = build_kneser(n, k);
        check(r, "fractional chromatic number " + kg.name(), [&] {
            std::string how;
            const auto got = kneser_fractional(kg, o.limits, how);
            return Outcome{got.value == want, expect("chi_f", got.value, want) + " [" + how + "]"};
        });
        const LabeledGraph sg = build_schrijver(n, k);
        check(r, "fractional chromatic number " + sg.name(), [&] {
            const auto got = fractional_chromatic_number(sg.graph(), o.limits).value;
            return Outcome{got == want, expect("chi_f", got, want)};
        });
    });
    for_params(2, std::min(20, o.max_n), [&](int n, int k) {
        if (gcd(n, k) != 1)
            return;
        const LabeledGraph q = build_q(n, k).graph;
        check(r, "fractional chromatic number " + q.name(), [&] {
            const auto got = fractional_chromatic_number(q.graph(), o.limits).value;
            return Outcome{got == make_rational(n, k), expect("chi_f", got, make_rational(n, k))};
        });
    });
    return r;
}

template <class F> void for_coprime_above_half(int hi_n, F &&f)
{
    for (int n = 3; n <= hi_n; ++n)
        for (int k = 1; 2 * k < n; ++k)
            if (gcd(n, k) == 1)
                f(n, k);
}

CriterionReport criterion_4(const AuditOptions &o)
{
    CriterionReport r{4, "fractional vertex criticality of Q(n,k)", {}};
    for_coprime_above_half(std::min(14, o.max_n), [&](int n, int k) {
        const LabeledGraph q = build_q(n, k).graph;
        const auto [a, b] = critical_params(n, k);
        const BigRational want = make_rational(a, b);
        check(r, "fractional vertex criticality " + q.name(), [&] {
            int good = 0;
            for (int u = 0; u < q.size(); ++u)
                good += fractional_chromatic_number(q.without_vertex(u).graph(), o.limits).value == want ? 1 : 0;
            const bool below = want < make_rational(n, k);
            return Outcome{good == q.size() && below, std::to_string(good) + "/" + std::to_string(q.size()) +
                                                          " deletions give chi_f=" + str(want) +
                                                          (below ? " < " : " >= ") + to_fraction_string(make_rational(n, k))};
        });
    });
    return r;
}

CriterionReport criterion_5(const AuditOptions &o)
{
    CriterionReport r{5, "fractional edge classification of Q(n,k)", {}};
    for_coprime_above_half(std::min(14, o.max_n), [&](int n, int k) {
        const LabeledGraph q = build_q(n, k).graph;
        check(r, "fractional edge classification " + q.name(), [&] {
            const auto report = edge_criticality(q, o.limits);
            const auto [a, b] = critical_params(n, k);
            int cycle = 0, other = 0;
            std::string mismatch;
            for (const auto &e : report.per_edge) {
                const bool flagged = e.cycle_edge.value_or(false);
                const BigRational want = flagged ? make_rational(a, b) : make_rational(n, k);
                (flagged ? cycle : other) += 1;
                if (e.value != want && mismatch.empty())
                    mismatch = "; edge {" + std::to_string(e.edge.first) + "," + std::to_string(e.edge.second) +
                               "} " + (flagged ? "cycle" : "non-cycle") + " gives " + str(e.value) +
                               ", expected " + str(want);
            }
            const bool ok = report.summary == CriticalitySummary::EdgeClassification;
            return Outcome{ok, std::to_string(cycle) + " cycle-edges -> " + str(make_rational(a, b)) + ", " +
                                   std::to_string(other) + " others -> " + str(make_rational(n, k)) + mismatch};
        });
    });
    return r;
}

CriterionReport criterion_6(const AuditOptions &o)
{
    CriterionReport r{6, "explicit certificates", {}};
    for_params(2, std::min(8, o.max_n), [&](int n, int k) {
        for (int l = 2; l <= 3; ++l)
            check(r, "certificate scaling Q" + params(n, k) + " -> Q" + params(l * n, l * k), [&] {
                const auto m = scaling_isomorphism(n, k, l);
                return Outcome{validate_map(m).empty(), std::to_string(m.mapping.size()) + " vertices"};
            });
    });
    for_coprime_above_half(std::min(14, o.max_n), [&](int n, int k) {
        const QGraph q = build_q(n, k);
        const auto [a, b] = critical_params(n, k);
        const std::string name = q.graph.name();
        std::vector<Edge> cycle_edges;
        for (const auto &[u, v] : q.graph.graph().edges())
            if (is_cycle_edge(q.graph, u, v))
                cycle_edges.push_back({u, v});

        check(r, "certificate circular isomorphism " + name, [&] {
            return Outcome{validate_map(circular_isomorphism(n, k)).empty(), "onto K_" + params(n, k)};
        });
        check(r, "certificate Q" + params(a, b) + " inside " + name, [&] {
            return Outcome{validate_map(find_subgraph_qab(n, k)).empty(), "induced embedding"};
        });
        check(r, "certificate vertex retraction " + name, [&] {
            int good = 0;
            for (int d = 0; d < n; ++d)
                good += validate_map(vertex_deleted_retraction(n, k, d)).empty() ? 1 : 0;
            return Outcome{good == n, std::to_string(good) + "/" + std::to_string(n) + " onto Q" + params(a, b)};
        });
        check(r, "certificate edge retraction " + name, [&] {
            int good = 0;
            for (const auto &e : cycle_edges)
                good += validate_map(edge_deleted_retraction(n, k, e)).empty() ? 1 : 0;
            return Outcome{good == static_cast<int>(cycle_edges.size()),
                           std::to_string(good) + "/" + std::to_string(cycle_edges.size()) + " cycle-edges"};
        });
        const BigRational want = make_rational(a, b);
        auto matches_lp = [&](const ColoringCertificate &c) {
            return certificate_violations(c).empty() && c.claimed_value == want &&
                   fractional_chromatic_number(modified_graph(c).graph(), o.limits).value == want;
        };
        check(r, "certificate vertex-deleted colouring " + name, [&] {
            int good = 0;
            for (int d = 0; d < n; ++d)
                good += matches_lp(vertex_deleted_coloring(n, k, d)) ? 1 : 0;
            return Outcome{good == n, std::to_string(good) + "/" + std::to_string(n) + " weigh " + str(want) +
                                          " = LP optimum"};
        });
        check(r, "certificate edge-deleted colouring " + name, [&] {
            int good = 0;
            for (const auto &e : cycle_edges)
                good += matches_lp(edge_deleted_coloring(n, k, e)) ? 1 : 0;
            return Outcome{good == static_cast<int>(cycle_edges.size()),
                           std::to_string(good) + "/" + std::to_string(cycle_edges.size()) + " weigh " + str(want) +
                               " = LP optimum"};
        });
    });
    return r;
}

CriterionReport criterion_7(const AuditOptions &o)
{
    CriterionReport r{7, "structure of Q(n,k)", {}};
    for_params(2, std::min(30, o.max_n), [&](int n, int k) {
        if (gcd(n, k) != 1)
            return;
        const LabeledGraph q = build_q(n, k).graph;
        check(r, "order and degree " + q.name(), [&] {
            bool regular = true;
            for (int v = 0; v < q.size(); ++v)
                regular = regular && q.graph().degree(v) == n - 2 * k + 1;
            return Outcome{q.size() == n && regular, "|V|=" + std::to_string(q.size()) + ", " +
                                                         (regular ? "" : "not ") + std::to_string(n - 2 * k + 1) +
                                                         "-regular"};
        });
    });
    for_params(2, std::min(14, o.max_n), [&](int n, int k) {
        const LabeledGraph q = build_q(n, k).graph;
        check(r, "chromatic number " + q.name(), [&] {
            const int chi = chromatic_number(q.graph(), o.limits);
            return Outcome{chi == ceil_ratio(n, k), expect("chi", chi, ceil_ratio(n, k))};
        });
        const int d = gcd(n, k);
        check(r, "circular isomorphism search " + q.name(), [&] {
            const LabeledGraph c = build_circular(n / d, k / d);
            const bool iso = find_isomorphism(q.graph(), c.graph(), o.limits).has_value();
            return Outcome{iso, std::string(iso ? "isomorphic to " : "not isomorphic to ") + c.name()};
        });
    });
    const auto brooks = brooks_boundary_check(std::min(12, o.max_n));
    for (const auto &e : brooks.entries)
        check(r, "Q equals SG " + params(e.n, e.k), [&] {
            return Outcome{e.equal == e.expected, e.equal ? "equal" : "unequal"};
        });
    return r;
}

CriterionReport criterion_8(const AuditOptions &o)
{
    CriterionReport r{8, "well-spread machinery", {}};
    for (int n = 1; n <= std::min(16, o.max_n); ++n) {
        std::vector<std::set<CyclicSubset>> spread(static_cast<std::size_t>(n) + 1);
        long subsets = 0, agree = 0;
        for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
            std::vector<int> elements;
            for (int i = 0; i < n; ++i)
                if (mask >> i & 1u)
                    elements.push_back(i);
            const CyclicSubset s(n, std::move(elements));
            const bool direct = is_well_spread(s);
            agree += direct == is_well_spread_dual(s) ? 1 : 0;
            ++subsets;
            if (direct)
                spread[static_cast<std::size_t>(s.size())].insert(s);
        }
        check(r, "well-spread duality Z_" + std::to_string(n), [&] {
            return Outcome{agree == subsets, std::to_string(agree) + "/" + std::to_string(subsets) + " subsets agree"};
        });
        check(r, "well-spread rotations Z_" + std::to_string(n), [&] {
            int good = 0;
            for (int k = 1; k <= n; ++k) {
                std::set<CyclicSubset> rotations;
                const CyclicSubset c = canonical_well_spread(n, k);
                for (int t = 0; t < n; ++t)
                    rotations.insert(rotate(c, t));
                good += rotations == spread[static_cast<std::size_t>(k)] &&
                                static_cast<int>(rotations.size()) == n / gcd(n, k)
                            ? 1
                            : 0;
            }
            return Outcome{good == n, std::to_string(good) + "/" + std::to_string(n) +
                                          " sizes are exactly n/gcd rotations of the canonical set"};
        });
        check(r, "reduction terminal size Z_" + std::to_string(n), [&] {
            long total = 0, good = 0;
            for (int k = 1; 2 * k <= n; ++k)
                for (const auto &s : spread[static_cast<std::size_t>(k)]) {
                    ++total;
                    good += euclid_reduce(s).terminal_size == gcd(n, k) ? 1 : 0;
                }
            return Outcome{good == total, std::to_string(good) + "/" + std::to_string(total) + " end at gcd"};
        });
    }
    return r;
}

CriterionReport criterion_9(const AuditOptions &o)
{
    CriterionReport r{9, "circular chromatic number after edge deletion", {}};
    for (const auto &[n, k] : std::vector<std::pair<int, int>>{{5, 2}, {7, 2}, {7, 3}, {8, 3}, {9, 4}, {11, 3}}) {
        if (n > o.max_n)
            continue;
        check(r, "circular edge deletion K_" + params(n, k), [&] {
            const auto report = circular_edge_corollary(n, k, o.limits);
            const auto [a, b] = critical_params(n, k);
            int good = 0;
            for (const auto &e : report.per_edge) {
                const int gap = e.edge.second - e.edge.first;
                const bool flagged = gap == k || gap == n - k;
                good += e.value == (flagged ? make_rational(a, b) : make_rational(n, k)) ? 1 : 0;
            }
            return Outcome{good == static_cast<int>(report.per_edge.size()),
                           std::to_string(good) + "/" + std::to_string(report.per_edge.size()) +
                               " edges match (a/b=" + str(make_rational(a, b)) + ")"};
        });
    }
    return r;
}

CriterionReport criterion_10(const AuditOptions &o)
{
    CriterionReport r{10, "interlacing graphs", {}};
    for_params(2, std::min(10, o.max_n), [&](int n, int k) {
        const LabeledGraph ig = build_interlacing(n, k);
        check(r, "interlacing edges " + ig.name(), [&] {
            const LabeledGraph q = build_q(n, k).graph;
            int inside = 0;
            const auto edges = q.graph().edges();
            for (const auto &[u, v] : edges) {
                const auto iu = ig.find(q.label(u)), iv = ig.find(q.label(v));
                inside += iu && iv && ig.adjacent(*iu, *iv) ? 1 : 0;
            }
            return Outcome{inside == static_cast<int>(edges.size()),
                           std::to_string(inside) + "/" + std::to_string(edges.size()) + " edges of Q" + params(n, k) +
                               " present"};
        });
        check(r, "interlacing chromatic number " + ig.name(), [&] {
            const int chi = chromatic_number(ig.graph(), o.limits);
            return Outcome{chi == ceil_ratio(n, k), expect("chi", chi, ceil_ratio(n, k))};
        });
    });
    return r;
}

} // namespace

bool CriterionReport::passed() const { return !checks.empty() && failures() == 0; }

int CriterionReport::failures() const
{
    return static_cast<int>(std::count_if(checks.begin(), checks.end(), [](const AuditCheck &c) { return !c.ok; }));
}

CriterionReport audit_criterion(int number, const AuditOptions &opts)
{
    switch (number) {
    case 1: return criterion_1(opts);
    case 2: return criterion_2(opts);
    case 3: return criterion_3(opts);
    case 4: return criterion_4(opts);
    case 5: return criterion_5(opts);
    case 6: return criterion_6(opts);
    case 7: return criterion_7(opts);
    case 8: return criterion_8(opts);
    case 9: return criterion_9(opts);
    case 10: return criterion_10(opts);
    }
    fail(ErrorKind::InvalidParams, "no criterion " + std::to_string(number));
}

std::vector<CriterionReport> audit_all(const AuditOptions &opts)
{
    std::vector<CriterionReport> out;
    for (int i = 1; i <= kCriterionCount; ++i)
        out.push_back(audit_criterion(i, opts));
    return out;
}

} // namespace kq

#include "kneserq/criticality.hpp"
#include "kneserq/error.hpp"

#include <algorithm>

namespace kq {

namespace {

CriticalitySummary summarise(const BigRational &baseline, const std::vector<BigRational> &after)
{
    const auto lowered = std::count_if(after.begin(), after.end(), [&](const BigRational &v) { return v < baseline; });
    if (!after.empty() && lowered == static_cast<long>(after.size()))
        return CriticalitySummary::VertexCritical;
    return lowered == 0 ? CriticalitySummary::NotCritical : CriticalitySummary::Mixed;
}

void check_monotone(const BigRational &baseline, const BigRational &after, const std::string &what)
{
    require(after <= baseline, ErrorKind::ValidationFailed,
            what + " raised the invariant from " + to_fraction_string(baseline) + " to " + to_fraction_string(after));
}

// EdgeClassification when the flags predict every value, otherwise the generic summary.
CriticalitySummary classify(const CriticalityReport &r, const BigRational &flagged, const BigRational &unflagged)
{
    bool matches = !r.per_edge.empty();
    std::vector<BigRational> values;
    for (const auto &e : r.per_edge) {
        values.push_back(e.value);
        matches = matches && e.value == (e.cycle_edge.value_or(false) ? flagged : unflagged);
    }
    if (matches)
        return CriticalitySummary::EdgeClassification;
    const auto s = summarise(r.baseline, values);
    return s == CriticalitySummary::VertexCritical ? CriticalitySummary::Mixed : s;
}

} // namespace

std::string to_string(Invariant inv)
{
    switch (inv) {
    case Invariant::Chi:
        return "CHI";
    case Invariant::ChiF:
        return "CHI_F";
    case Invariant::ChiC:
        return "CHI_C";
    }
    return "?";
}

std::optional<Invariant> parse_invariant(const std::string &text)
{
    for (auto inv : {Invariant::Chi, Invariant::ChiF, Invariant::ChiC})
        if (to_string(inv) == text)
            return inv;
    if (text == "chi")
        return Invariant::Chi;
    if (text == "chi-f")
        return Invariant::ChiF;
    if (text == "chi-c")
        return Invariant::ChiC;
    return std::nullopt;
}

std::string to_string(CriticalitySummary s)
{
    switch (s) {
    case CriticalitySummary::VertexCritical:
        return "VERTEX_CRITICAL";
    case CriticalitySummary::EdgeClassification:
        return "EDGE_CLASSIFICATION";
    case CriticalitySummary::NotCritical:
        return "NOT_CRITICAL";
    case CriticalitySummary::Mixed:
        return "MIXED";
    }
    return "?";
}

std::optional<CriticalitySummary> parse_summary(const std::string &text)
{
    for (auto s : {CriticalitySummary::VertexCritical, CriticalitySummary::EdgeClassification,
                   CriticalitySummary::NotCritical, CriticalitySummary::Mixed})
        if (to_string(s) == text)
            return s;
    return std::nullopt;
}

CriticalitySummary recompute_summary(const CriticalityReport &r)
{
    if (r.per_edge.empty()) {
        std::vector<BigRational> values;
        for (const auto &d : r.per_vertex)
            values.push_back(d.value);
        return summarise(r.baseline, values);
    }
    const int n = r.graph.n, k = r.graph.k;
    require(n >= 1 && k >= 1 && gcd(n, k) == 1, ErrorKind::InvalidParams, "edge report needs coprime parameters");
    const auto [a, b] = critical_params(n, k);
    return classify(r, make_rational(a, b), make_rational(n, k));
}

BigRational evaluate(const Graph &g, Invariant inv, const SolverLimits &limits)
{
    switch (inv) {
    case Invariant::Chi:
        return chromatic_number(g, limits);
    case Invariant::ChiF:
        return fractional_chromatic_number(g, limits).value;
    case Invariant::ChiC:
        return circular_chromatic_number(g, limits);
    }
    fail(ErrorKind::InvalidParams, "unknown invariant");
}

CriticalityReport vertex_criticality(const LabeledGraph &g, Invariant inv, const SolverLimits &limits)
{
    CriticalityReport r;
    r.graph = g.tag();
    r.invariant = inv;
    r.baseline = evaluate(g.graph(), inv, limits);
    for (int v = 0; v < g.size(); ++v) {
        BigRational after = evaluate(g.without_vertex(v).graph(), inv, limits);
        check_monotone(r.baseline, after, "deleting vertex " + std::to_string(v) + " of " + g.name());
        r.per_vertex.push_back({v, std::move(after)});
    }
    r.summary = recompute_summary(r);
    return r;
}

CriticalityReport edge_criticality(const LabeledGraph &input, const SolverLimits &limits)
{
    require(input.tag().family == Family::Q, ErrorKind::InvalidParams, "edge criticality is defined on Q(n,k)");
    const int n = input.tag().n, k = input.tag().k;
    const int d = gcd(n, k);

    CriticalityReport r;
    LabeledGraph q = input;
    if (d > 1) {
        r.original = input.tag();
        q = build_q(n / d, k / d).graph;
    }
    r.graph = q.tag();
    r.invariant = Invariant::ChiF;
    r.baseline = fractional_chromatic_number(q.graph(), limits).value;

    for (const auto &[u, v] : q.graph().edges()) {
        BigRational after = fractional_chromatic_number(q.without_edge(u, v).graph(), limits).value;
        check_monotone(r.baseline, after, "deleting an edge of " + q.name());
        r.per_edge.push_back({{u, v}, std::move(after), is_cycle_edge(q, u, v)});
    }
    r.summary = recompute_summary(r);
    return r;
}

CriticalityReport circular_edge_corollary(int n, int k, const SolverLimits &limits)
{
    require(gcd(n, k) == 1, ErrorKind::NotCoprime, "gcd(" + std::to_string(n) + "," + std::to_string(k) + ") != 1");
    const LabeledGraph g = build_circular(n, k);

    CriticalityReport r;
    r.graph = g.tag();
    r.invariant = Invariant::ChiC;
    r.baseline = circular_chromatic_number(g.graph(), limits);
    for (const auto &[u, v] : g.graph().edges()) {
        BigRational after = circular_chromatic_number(g.without_edge(u, v).graph(), limits);
        check_monotone(r.baseline, after, "deleting an edge of " + g.name());
        const int gap = v - u;
        r.per_edge.push_back({{u, v}, std::move(after), gap == k || gap == n - k});
    }
    r.summary = recompute_summary(r);
    return r;
}

bool BrooksReport::consistent() const
{
    return std::all_of(entries.begin(), entries.end(), [](const BrooksEntry &e) { return e.equal == e.expected; });
}

BrooksReport brooks_boundary_check(int max_n, const BuildOptions &opts)
{
    BrooksReport report;
    for (int n = 2; n <= max_n; ++n)
        for (int k = 1; 2 * k <= n; ++k) {
            const LabeledGraph q = build_q(n, k, opts).graph;
            const LabeledGraph sg = build_schrijver(n, k, opts);
            auto lq = q.labels(), ls = sg.labels();
            std::sort(lq.begin(), lq.end());
            std::sort(ls.begin(), ls.end());
            report.entries.push_back({n, k, lq == ls, k == 1 || n == 2 * k || n == 2 * k + 1});
        }
    return report;
}

} // namespace kq

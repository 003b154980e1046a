#include "kneserq/audit.hpp"
#include "kneserq/certificates.hpp"
#include "kneserq/criticality.hpp"
#include "kneserq/error.hpp"
#include "kneserq/serialize.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

using namespace kq;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFailed = 1;
constexpr int kExitInput = 2;
constexpr int kExitCap = 3;

constexpr int kMaxNCeiling = 30;

int exit_code(ErrorKind kind)
{
    switch (kind) {
    case ErrorKind::ValidationFailed: return kExitFailed;
    case ErrorKind::ResourceCap: return kExitCap;
    default: return kExitInput;
    }
}

struct Common {
    std::string family = "q";
    int n = 0;
    int k = 0;
    int vertex_cap = BuildOptions{}.vertex_cap;
    long long mis_cap = static_cast<long long>(SolverLimits{}.mis_cap);

    BuildOptions build() const { return {vertex_cap}; }
    SolverLimits limits() const
    {
        SolverLimits l;
        l.mis_cap = static_cast<decltype(l.mis_cap)>(mis_cap);
        return l;
    }
    Family parsed_family() const
    {
        const auto f = parse_family(family);
        require(f.has_value() && *f != Family::Generic, ErrorKind::InvalidParams, "unknown family '" + family + "'");
        return *f;
    }
};

void add_graph_flags(CLI::App *cmd, Common &c, bool with_family = true)
{
    if (with_family)
        cmd->add_option("--family", c.family, "kneser, sg, q, circular or interlacing")->required();
    cmd->add_option("--n", c.n, "ground set size")->required();
    cmd->add_option("--k", c.k, "subset size")->required();
    cmd->add_option("--vertex-cap", c.vertex_cap, "largest graph to build");
    cmd->add_option("--mis-cap", c.mis_cap, "largest maximal independent set enumeration");
}

Edge parse_edge(const std::string &text)
{
    const auto comma = text.find(',');
    require(comma != std::string::npos, ErrorKind::ParseError, "edge must be given as U,V");
    try {
        std::size_t used_u = 0, used_v = 0;
        const int u = std::stoi(text.substr(0, comma), &used_u);
        const int v = std::stoi(text.substr(comma + 1), &used_v);
        require(used_u == comma && used_v == text.size() - comma - 1, ErrorKind::ParseError, "bad edge " + text);
        return make_edge(u, v);
    } catch (const std::logic_error &) {
        fail(ErrorKind::ParseError, "bad edge '" + text + "'");
    }
}

void print(const Json &doc) { std::cout << doc.dump(2) << "\n"; }

int run_build(const Common &c, const std::string &format)
{
    const LabeledGraph g = build_family(c.parsed_family(), c.n, c.k, c.build());
    if (format == "dot")
        std::cout << to_dot(g);
    else
        print(graph_to_json(g));
    return kExitOk;
}

int run_invariants(const Common &c, bool alpha, bool chi, bool chi_f, bool chi_c)
{
    if (!alpha && !chi && !chi_f && !chi_c)
        alpha = chi = chi_f = chi_c = true;
    const LabeledGraph g = build_family(c.parsed_family(), c.n, c.k, c.build());
    const auto limits = c.limits();
    Json out{{"graph", g.name()}, {"vertices", g.size()}, {"edges", g.graph().edge_count()}};
    if (alpha)
        out["alpha"] = independence_number(g.graph(), limits);
    if (chi)
        out["chi"] = chromatic_number(g.graph(), limits);
    if (chi_f)
        out["chiF"] = to_fraction_string(fractional_chromatic_number(g.graph(), limits).value);
    if (chi_c)
        out["chiC"] = to_fraction_string(circular_chromatic_number(g.graph(), limits));
    print(out);
    return kExitOk;
}

int run_criticality(const Common &c, const std::string &invariant, bool edges)
{
    const Family f = c.parsed_family();
    const auto limits = c.limits();
    if (edges) {
        if (f == Family::Circular)
            print(certificate_to_json(circular_edge_corollary(c.n, c.k, limits)));
        else {
            require(f == Family::Q, ErrorKind::InvalidParams, "edge sweeps need --family q or circular");
            print(certificate_to_json(edge_criticality(build_q(c.n, c.k, c.build()).graph, limits)));
        }
        return kExitOk;
    }
    const auto inv = parse_invariant(invariant);
    require(inv.has_value(), ErrorKind::InvalidParams, "unknown invariant '" + invariant + "'");
    print(certificate_to_json(vertex_criticality(build_family(f, c.n, c.k, c.build()), *inv, limits)));
    return kExitOk;
}

struct CertifyArgs {
    std::string kind;
    std::optional<int> delete_vertex;
    std::optional<std::string> delete_edge;
    int scale = 2;
};

int run_certify(const Common &c, const CertifyArgs &a)
{
    const auto opts = c.build();
    const bool deletes = a.delete_vertex.has_value() || a.delete_edge.has_value();
    require(!(a.delete_vertex && a.delete_edge), ErrorKind::InvalidParams,
            "give at most one of --delete-vertex and --delete-edge");

    if (a.kind == "coloring" || a.kind == "retraction") {
        require(deletes, ErrorKind::InvalidParams, a.kind + " needs --delete-vertex or --delete-edge");
        const bool coloring = a.kind == "coloring";
        if (a.delete_vertex) {
            if (coloring)
                print(certificate_to_json(vertex_deleted_coloring(c.n, c.k, *a.delete_vertex, opts)));
            else
                print(certificate_to_json(vertex_deleted_retraction(c.n, c.k, *a.delete_vertex, opts)));
        } else {
            const Edge e = parse_edge(*a.delete_edge);
            if (coloring)
                print(certificate_to_json(edge_deleted_coloring(c.n, c.k, e, opts)));
            else
                print(certificate_to_json(edge_deleted_retraction(c.n, c.k, e, opts)));
        }
        return kExitOk;
    }
    require(!deletes, ErrorKind::InvalidParams, a.kind + " takes no deletion");
    if (a.kind == "iso-circular")
        print(certificate_to_json(circular_isomorphism(c.n, c.k, opts)));
    else if (a.kind == "iso-scaling")
        print(certificate_to_json(scaling_isomorphism(c.n, c.k, a.scale, opts)));
    else if (a.kind == "subgraph-qab")
        print(certificate_to_json(find_subgraph_qab(c.n, c.k, opts)));
    else if (a.kind == "embed-circular")
        print(certificate_to_json(embed_circular_in_kneser(c.n, c.k, opts)));
    else if (a.kind == "reduction-trace") {
        const CyclicSubset s = canonical_well_spread(c.n, c.k);
        print(certificate_to_json(s, euclid_reduce(s)));
    } else
        fail(ErrorKind::InvalidParams, "unknown certificate kind '" + a.kind + "'");
    return kExitOk;
}

int run_verify(int max_n, const Common &c)
{
    require(max_n >= 2 && max_n <= kMaxNCeiling, ErrorKind::InvalidParams,
            "--max-n must lie in [2, " + std::to_string(kMaxNCeiling) + "]");
    AuditOptions opts;
    opts.max_n = max_n;
    opts.limits = c.limits();
    Json summary = Json::array();
    bool all = true;
    for (int i = 1; i <= kCriterionCount; ++i) {
        const CriterionReport r = audit_criterion(i, opts);
        for (const auto &check : r.checks)
            std::cout << check.line << "\n";
        std::cout << "criterion " << i << " (" << r.title << "): " << (r.passed() ? "PASS" : "FAIL") << "\n";
        std::cout.flush();
        summary.push_back({{"criterion", i},
                           {"title", r.title},
                           {"checks", r.checks.size()},
                           {"failures", r.failures()},
                           {"passed", r.passed()}});
        all = all && r.passed();
    }
    std::cout << Json{{"maxN", max_n}, {"passed", all}, {"criteria", summary}}.dump() << "\n";
    return all ? kExitOk : kExitFailed;
}

int run_validate(const std::string &path, const Common &c)
{
    std::ifstream in(path);
    require(in.good(), ErrorKind::InvalidParams, "cannot read " + path);
    Json doc;
    try {
        doc = Json::parse(in);
    } catch (const nlohmann::json::exception &e) {
        fail(ErrorKind::ParseError, e.what());
    }
    if (doc.is_object() && !doc.contains("kind")) {
        const LabeledGraph g = graph_from_json(doc, c.build());
        std::cout << "graph " << g.name() << " valid\n";
    } else
        std::cout << to_string(validate_document(doc, c.build())) << " valid\n";
    return kExitOk;
}

} // namespace

int main(int argc, char **argv)
{
    CLI::App app{"Kneser, Schrijver and well-spread graphs: exact invariants and certificates"};
    app.require_subcommand(1);

    Common common;
    std::string format = "json";
    auto *build = app.add_subcommand("build", "emit a graph document");
    add_graph_flags(build, common);
    build->add_option("--format", format, "json or dot")->check(CLI::IsMember({"json", "dot"}));

    bool alpha = false, chi = false, chi_f = false, chi_c = false;
    auto *inv = app.add_subcommand("invariants", "exact alpha, chi, chi_f, chi_c");
    add_graph_flags(inv, common);
    inv->add_flag("--alpha", alpha);
    inv->add_flag("--chi", chi);
    inv->add_flag("--chi-f", chi_f);
    inv->add_flag("--chi-c", chi_c);

    std::string invariant = "chi-f";
    bool edges = false;
    auto *crit = app.add_subcommand("criticality", "recompute an invariant after every deletion");
    add_graph_flags(crit, common);
    crit->add_option("--invariant", invariant, "chi, chi-f or chi-c (vertex sweeps)");
    crit->add_flag("--edges", edges, "edge sweep: chi_f on Q, chi_c on circular");

    CertifyArgs certify_args;
    auto *cert = app.add_subcommand("certify", "build and validate an explicit certificate");
    cert->add_option("kind", certify_args.kind,
                     "iso-circular, iso-scaling, subgraph-qab, coloring, retraction, embed-circular, reduction-trace")
        ->required();
    add_graph_flags(cert, common, false);
    cert->add_option("--delete-vertex", certify_args.delete_vertex, "vertex id");
    cert->add_option("--delete-edge", certify_args.delete_edge, "U,V");
    cert->add_option("--l", certify_args.scale, "scaling factor for iso-scaling");

    int max_n = 10;
    auto *verify = app.add_subcommand("verify-paper", "run the acceptance grid");
    verify->add_option("--max-n", max_n, "largest n in every grid");
    verify->add_option("--mis-cap", common.mis_cap, "largest maximal independent set enumeration");

    std::string path;
    auto *validate = app.add_subcommand("validate", "re-check a saved document");
    validate->add_option("file", path)->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp &e) {
        return app.exit(e);
    } catch (const CLI::ParseError &e) {
        app.exit(e);
        return kExitInput;
    }

    try {
        if (*build)
            return run_build(common, format);
        if (*inv)
            return run_invariants(common, alpha, chi, chi_f, chi_c);
        if (*crit)
            return run_criticality(common, invariant, edges);
        if (*cert)
            return run_certify(common, certify_args);
        if (*verify)
            return run_verify(max_n, common);
        if (*validate)
            return run_validate(path, common);
    } catch (const Error &e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_code(e.kind());
    }
    return kExitInput;
}

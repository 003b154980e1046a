#include "kneserq/serialize.hpp"
#include "kneserq/error.hpp"

#include <algorithm>
#include <sstream>

namespace kq {

namespace {

[[noreturn]] void bad(const std::string &what) { fail(ErrorKind::ParseError, what); }

const Json &field(const Json &doc, const char *name)
{
    if (!doc.is_object() || !doc.contains(name))
        bad(std::string("missing field \"") + name + "\"");
    return doc.at(name);
}

int int_field(const Json &doc, const char *name)
{
    const Json &v = field(doc, name);
    if (!v.is_number_integer())
        bad(std::string("field \"") + name + "\" must be an integer");
    return v.get<int>();
}

std::string string_field(const Json &doc, const char *name)
{
    const Json &v = field(doc, name);
    if (!v.is_string())
        bad(std::string("field \"") + name + "\" must be a string");
    return v.get<std::string>();
}

std::vector<int> int_array(const Json &v, const std::string &what)
{
    if (!v.is_array())
        bad(what + " must be an array");
    std::vector<int> out;
    for (const auto &x : v) {
        if (!x.is_number_integer())
            bad(what + " must hold integers");
        out.push_back(x.get<int>());
    }
    return out;
}

BigRational rational_of(const Json &v, const std::string &what)
{
    if (!v.is_string())
        bad(what + " must be a \"p/q\" string");
    return parse_rational(v.get<std::string>());
}

void check_header(const Json &doc, std::optional<DocumentKind> kind)
{
    if (!doc.is_object())
        bad("document must be a JSON object");
    if (string_field(doc, "schemaVersion") != kSchemaVersion)
        bad("unsupported schemaVersion " + doc.at("schemaVersion").dump());
    if (kind && string_field(doc, "kind") != to_string(*kind))
        bad("expected a " + to_string(*kind) + " document");
}

Json header(DocumentKind kind) { return Json{{"schemaVersion", kSchemaVersion}, {"kind", to_string(kind)}}; }

Json tag_to_json(const FamilyTag &t) { return Json{{"name", to_string(t.family)}, {"n", t.n}, {"k", t.k}}; }

FamilyTag tag_from_json(const Json &v)
{
    const auto family = parse_family(string_field(v, "name"));
    if (!family)
        bad("unknown family " + v.at("name").dump());
    return {*family, int_field(v, "n"), int_field(v, "k")};
}

Json edge_to_json(const Edge &e) { return Json::array({e.first, e.second}); }

Edge edge_from_json(const Json &v)
{
    const auto pair = int_array(v, "edge");
    if (pair.size() != 2)
        bad("edge must hold two vertex ids");
    return {pair[0], pair[1]};
}

Json set_to_json(const VertexSet &s) { return Json(s.members()); }

Json trace_step_to_json(const ReductionStep &s)
{
    return Json{{"cycleLength", s.cycle_length}, {"setSize", s.set_size},        {"quotient", s.quotient},
                {"remainder", s.remainder},      {"survivingSet", s.surviving_set.elements()}};
}

// Library complaints about document content are reported as parse errors.
template <class F> auto parsing(F &&f)
{
    try {
        return f();
    } catch (const Error &e) {
        if (e.kind() == ErrorKind::InvalidParams)
            bad(e.what());
        throw;
    } catch (const nlohmann::json::exception &e) {
        bad(e.what());
    }
}

} // namespace

std::string to_string(DocumentKind kind)
{
    switch (kind) {
    case DocumentKind::FractionalColoring: return "FRACTIONAL_COLORING";
    case DocumentKind::VertexMap: return "VERTEX_MAP";
    case DocumentKind::ReductionTrace: return "REDUCTION_TRACE";
    case DocumentKind::Report: return "REPORT";
    }
    return "REPORT";
}

Json graph_to_json(const LabeledGraph &g)
{
    Json vertices = Json::array();
    for (const auto &label : g.labels()) {
        if (const auto *s = std::get_if<CyclicSubset>(&label))
            vertices.push_back(s->elements());
        else
            vertices.push_back(std::get<int>(label));
    }
    Json edges = Json::array();
    for (const auto &e : g.graph().edges())
        edges.push_back(edge_to_json(e));
    return Json{{"schemaVersion", kSchemaVersion},
                {"family", tag_to_json(g.tag())},
                {"vertices", std::move(vertices)},
                {"edges", std::move(edges)}};
}

LabeledGraph graph_from_json(const Json &doc, const BuildOptions &opts)
{
    LabeledGraph g = parsing([&] {
        check_header(doc, std::nullopt);
        const FamilyTag tag = tag_from_json(field(doc, "family"));
        const Json &vertices = field(doc, "vertices");
        if (!vertices.is_array())
            bad("\"vertices\" must be an array");
        std::vector<VertexLabel> labels;
        for (const auto &v : vertices) {
            if (v.is_number_integer())
                labels.emplace_back(v.get<int>());
            else
                labels.emplace_back(CyclicSubset(tag.n, int_array(v, "vertex label")));
        }
        Graph graph(static_cast<int>(labels.size()));
        std::optional<Edge> previous;
        const Json &edges = field(doc, "edges");
        if (!edges.is_array())
            bad("\"edges\" must be an array");
        for (const auto &e : edges) {
            const Edge edge = edge_from_json(e);
            if (edge.first < 0 || edge.first >= edge.second || edge.second >= graph.size())
                bad("edge [" + std::to_string(edge.first) + "," + std::to_string(edge.second) +
                    "] needs 0 <= u < v < |V|");
            if (previous && !(*previous < edge))
                bad("edges must be sorted lexicographically without repeats");
            previous = edge;
            graph.add_edge(edge.first, edge.second);
        }
        return LabeledGraph(tag, std::move(labels), std::move(graph));
    });
    if (g.tag().family != Family::Generic)
        require(build_family(g.tag().family, g.tag().n, g.tag().k, opts) == g, ErrorKind::ValidationFailed,
                "document does not match a fresh build of " + g.name());
    return g;
}

std::string to_dot(const LabeledGraph &g)
{
    std::ostringstream out;
    out << "graph \"" << g.name() << "\" {\n";
    for (int v = 0; v < g.size(); ++v)
        out << "  " << v << " [label=\"" << label_string(g.label(v)) << "\"];\n";
    for (const auto &[u, v] : g.graph().edges())
        out << "  " << u << " -- " << v << ";\n";
    out << "}\n";
    return out.str();
}

Json certificate_to_json(const ColoringCertificate &c)
{
    require(c.graph != nullptr, ErrorKind::InvalidParams, "certificate has no graph");
    Json doc = header(DocumentKind::FractionalColoring);
    doc["graph"] = graph_to_json(*c.graph);
    doc["deletedVertex"] = c.deleted_vertex ? Json(*c.deleted_vertex) : Json(nullptr);
    doc["deletedEdge"] = c.deleted_edge ? edge_to_json(*c.deleted_edge) : Json(nullptr);
    Json sets = Json::array(), weights = Json::array();
    for (std::size_t i = 0; i < c.coloring.sets.size(); ++i) {
        sets.push_back(set_to_json(c.coloring.sets[i]));
        weights.push_back(to_fraction_string(c.coloring.weights.at(i)));
    }
    doc["sets"] = std::move(sets);
    doc["weights"] = std::move(weights);
    doc["claimedValue"] = to_fraction_string(c.claimed_value);
    return doc;
}

ColoringCertificate coloring_certificate_from_json(const Json &doc, const BuildOptions &opts)
{
    ColoringCertificate c = parsing([&] {
        check_header(doc, DocumentKind::FractionalColoring);
        ColoringCertificate out;
        out.graph = std::make_shared<const LabeledGraph>(graph_from_json(field(doc, "graph"), opts));
        const int size = out.graph->size();
        if (const Json &v = field(doc, "deletedVertex"); !v.is_null()) {
            if (!v.is_number_integer())
                bad("\"deletedVertex\" must be an integer or null");
            out.deleted_vertex = v.get<int>();
            if (*out.deleted_vertex < 0 || *out.deleted_vertex >= size)
                bad("deleted vertex out of range");
        }
        if (const Json &v = field(doc, "deletedEdge"); !v.is_null())
            out.deleted_edge = edge_from_json(v);
        const Json &sets = field(doc, "sets");
        const Json &weights = field(doc, "weights");
        if (!sets.is_array() || !weights.is_array() || sets.size() != weights.size())
            bad("\"sets\" and \"weights\" must be arrays of equal length");
        for (std::size_t i = 0; i < sets.size(); ++i) {
            VertexSet s(size);
            for (int v : int_array(sets[i], "set"))
                if (v < 0 || v >= size)
                    bad("set member out of range");
                else
                    s.set(v);
            out.coloring.sets.push_back(std::move(s));
            out.coloring.weights.push_back(rational_of(weights[i], "weight"));
        }
        out.claimed_value = rational_of(field(doc, "claimedValue"), "\"claimedValue\"");
        return out;
    });
    const auto violations = certificate_violations(c);
    require(violations.empty(), ErrorKind::ValidationFailed,
            "colouring document: " + (violations.empty() ? std::string() : violations.front()));
    return c;
}

Json certificate_to_json(const VertexMap &m)
{
    require(m.source && m.target, ErrorKind::InvalidParams, "map without graphs");
    Json doc = header(DocumentKind::VertexMap);
    doc["mapKind"] = to_string(m.kind);
    doc["source"] = graph_to_json(*m.source);
    doc["target"] = graph_to_json(*m.target);
    doc["mapping"] = m.mapping;
    return doc;
}

VertexMap vertex_map_from_json(const Json &doc, const BuildOptions &opts)
{
    VertexMap m = parsing([&] {
        check_header(doc, DocumentKind::VertexMap);
        VertexMap out;
        const std::string kind = string_field(doc, "mapKind");
        bool known = false;
        for (auto k : {MapKind::Homomorphism, MapKind::Isomorphism, MapKind::Embedding})
            if (to_string(k) == kind) {
                out.kind = k;
                known = true;
            }
        if (!known)
            bad("unknown mapKind " + kind);
        out.source = std::make_shared<const LabeledGraph>(graph_from_json(field(doc, "source"), opts));
        out.target = std::make_shared<const LabeledGraph>(graph_from_json(field(doc, "target"), opts));
        out.mapping = int_array(field(doc, "mapping"), "\"mapping\"");
        return out;
    });
    ensure_valid(m, "map document");
    return m;
}

Json certificate_to_json(const CyclicSubset &start, const ReductionTrace &t)
{
    Json doc = header(DocumentKind::ReductionTrace);
    doc["set"] = Json{{"n", start.modulus()}, {"elements", start.elements()}};
    Json steps = Json::array();
    for (const auto &s : t.steps)
        steps.push_back(trace_step_to_json(s));
    doc["steps"] = std::move(steps);
    doc["terminalSize"] = t.terminal_size;
    return doc;
}

std::pair<CyclicSubset, ReductionTrace> reduction_trace_from_json(const Json &doc)
{
    auto [start, trace] = parsing([&] {
        check_header(doc, DocumentKind::ReductionTrace);
        const Json &set = field(doc, "set");
        CyclicSubset s(int_field(set, "n"), int_array(field(set, "elements"), "set elements"));
        ReductionTrace t;
        const Json &steps = field(doc, "steps");
        if (!steps.is_array())
            bad("\"steps\" must be an array");
        for (const auto &step : steps) {
            ReductionStep r;
            r.cycle_length = int_field(step, "cycleLength");
            r.set_size = int_field(step, "setSize");
            r.quotient = int_field(step, "quotient");
            r.remainder = int_field(step, "remainder");
            if (r.set_size + r.remainder < 1)
                bad("reduction step with an empty cycle");
            r.surviving_set = CyclicSubset(r.set_size + r.remainder, int_array(field(step, "survivingSet"), "set"));
            t.steps.push_back(std::move(r));
        }
        t.terminal_size = int_field(doc, "terminalSize");
        return std::make_pair(std::move(s), std::move(t));
    });
    require(euclid_reduce(start) == trace, ErrorKind::ValidationFailed,
            "reduction trace differs from a fresh reduction of " + start.to_string());
    return {std::move(start), std::move(trace)};
}

Json certificate_to_json(const CriticalityReport &r)
{
    Json doc = header(DocumentKind::Report);
    doc["graph"] = tag_to_json(r.graph);
    doc["original"] = r.original ? tag_to_json(*r.original) : Json(nullptr);
    doc["invariant"] = to_string(r.invariant);
    doc["baseline"] = to_fraction_string(r.baseline);
    Json vertices = Json::array();
    for (const auto &d : r.per_vertex)
        vertices.push_back({{"vertex", d.vertex}, {"value", to_fraction_string(d.value)}});
    Json edges = Json::array();
    for (const auto &d : r.per_edge)
        edges.push_back({{"edge", edge_to_json(d.edge)},
                         {"value", to_fraction_string(d.value)},
                         {"cycleEdge", d.cycle_edge ? Json(*d.cycle_edge) : Json(nullptr)}});
    doc["perVertex"] = std::move(vertices);
    doc["perEdge"] = std::move(edges);
    doc["summary"] = to_string(r.summary);
    return doc;
}

CriticalityReport report_from_json(const Json &doc)
{
    CriticalityReport r = parsing([&] {
        check_header(doc, DocumentKind::Report);
        CriticalityReport out;
        out.graph = tag_from_json(field(doc, "graph"));
        if (const Json &o = field(doc, "original"); !o.is_null())
            out.original = tag_from_json(o);
        const auto inv = parse_invariant(string_field(doc, "invariant"));
        if (!inv)
            bad("unknown invariant");
        out.invariant = *inv;
        out.baseline = rational_of(field(doc, "baseline"), "\"baseline\"");
        for (const auto &d : field(doc, "perVertex"))
            out.per_vertex.push_back({int_field(d, "vertex"), rational_of(field(d, "value"), "value")});
        for (const auto &d : field(doc, "perEdge")) {
            EdgeDeletion e{edge_from_json(field(d, "edge")), rational_of(field(d, "value"), "value"), std::nullopt};
            if (const Json &flag = field(d, "cycleEdge"); flag.is_boolean())
                e.cycle_edge = flag.get<bool>();
            else if (!flag.is_null())
                bad("\"cycleEdge\" must be a boolean or null");
            out.per_edge.push_back(std::move(e));
        }
        const auto summary = parse_summary(string_field(doc, "summary"));
        if (!summary)
            bad("unknown summary");
        out.summary = *summary;
        return out;
    });
    for (std::size_t i = 0; i < r.per_vertex.size(); ++i) {
        require(i == 0 || r.per_vertex[i - 1].vertex < r.per_vertex[i].vertex, ErrorKind::ValidationFailed,
                "report vertices out of order");
        require(r.per_vertex[i].value <= r.baseline, ErrorKind::ValidationFailed, "deletion raised the invariant");
    }
    for (std::size_t i = 0; i < r.per_edge.size(); ++i) {
        require(r.per_edge[i].edge.first < r.per_edge[i].edge.second &&
                    (i == 0 || r.per_edge[i - 1].edge < r.per_edge[i].edge),
                ErrorKind::ValidationFailed, "report edges out of order");
        require(r.per_edge[i].value <= r.baseline, ErrorKind::ValidationFailed, "deletion raised the invariant");
    }
    require(recompute_summary(r) == r.summary, ErrorKind::ValidationFailed, "summary disagrees with the values");
    return r;
}

DocumentKind validate_document(const Json &doc, const BuildOptions &opts)
{
    const std::string kind = parsing([&] {
        check_header(doc, std::nullopt);
        return string_field(doc, "kind");
    });
    if (kind == to_string(DocumentKind::FractionalColoring)) {
        coloring_certificate_from_json(doc, opts);
        return DocumentKind::FractionalColoring;
    }
    if (kind == to_string(DocumentKind::VertexMap)) {
        vertex_map_from_json(doc, opts);
        return DocumentKind::VertexMap;
    }
    if (kind == to_string(DocumentKind::ReductionTrace)) {
        reduction_trace_from_json(doc);
        return DocumentKind::ReductionTrace;
    }
    if (kind == to_string(DocumentKind::Report)) {
        report_from_json(doc);
        return DocumentKind::Report;
    }
    bad("unknown document kind " + kind);
}

} // namespace kq

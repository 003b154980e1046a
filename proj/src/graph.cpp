#include "kneserq/graph.hpp"
#include "kneserq/error.hpp"

namespace kq {

Graph::Graph(int vertex_count)
{
    require(vertex_count >= 0, ErrorKind::InvalidParams, "negative vertex count");
    rows_.assign(static_cast<std::size_t>(vertex_count), VertexSet(vertex_count));
}

void Graph::check_vertex(int v) const
{
    require(v >= 0 && v < size(), ErrorKind::InvalidParams, "vertex id " + std::to_string(v) + " out of range");
}

void Graph::add_edge(int u, int v)
{
    check_vertex(u);
    check_vertex(v);
    require(u != v, ErrorKind::InvalidParams, "self-loop at " + std::to_string(u));
    rows_[static_cast<std::size_t>(u)].set(v);
    rows_[static_cast<std::size_t>(v)].set(u);
}

void Graph::remove_edge(int u, int v)
{
    check_vertex(u);
    check_vertex(v);
    rows_[static_cast<std::size_t>(u)].reset(v);
    rows_[static_cast<std::size_t>(v)].reset(u);
}

std::size_t Graph::edge_count() const
{
    std::size_t twice = 0;
    for (const auto &row : rows_)
        twice += static_cast<std::size_t>(row.count());
    return twice / 2;
}

std::vector<Edge> Graph::edges() const
{
    std::vector<Edge> out;
    for (int u = 0; u < size(); ++u)
        for (int v = rows_[static_cast<std::size_t>(u)].next(u + 1); v >= 0;
             v = rows_[static_cast<std::size_t>(u)].next(v + 1))
            out.emplace_back(u, v);
    return out;
}

bool Graph::is_independent(const VertexSet &s) const
{
    for (int v = s.first(); v >= 0; v = s.next(v + 1))
        if (rows_[static_cast<std::size_t>(v)].intersects(s))
            return false;
    return true;
}

Graph Graph::induced(const std::vector<int> &keep) const
{
    Graph out(static_cast<int>(keep.size()));
    for (std::size_t i = 0; i < keep.size(); ++i) {
        check_vertex(keep[i]);
        for (std::size_t j = i + 1; j < keep.size(); ++j) {
            require(keep[i] != keep[j], ErrorKind::InvalidParams, "repeated vertex in induced()");
            if (adjacent(keep[i], keep[j]))
                out.add_edge(static_cast<int>(i), static_cast<int>(j));
        }
    }
    return out;
}

Graph Graph::complement() const
{
    Graph out(size());
    for (int u = 0; u < size(); ++u)
        for (int v = u + 1; v < size(); ++v)
            if (!adjacent(u, v))
                out.add_edge(u, v);
    return out;
}

std::string to_string(Family f)
{
    switch (f) {
    case Family::Kneser: return "kneser";
    case Family::Schrijver: return "sg";
    case Family::Q: return "q";
    case Family::Circular: return "circular";
    case Family::Interlacing: return "interlacing";
    case Family::Generic: return "generic";
    }
    return "generic";
}

std::optional<Family> parse_family(const std::string &text)
{
    for (Family f : {Family::Kneser, Family::Schrijver, Family::Q, Family::Circular, Family::Interlacing,
                     Family::Generic})
        if (to_string(f) == text)
            return f;
    return std::nullopt;
}

std::string label_string(const VertexLabel &label)
{
    if (const auto *s = std::get_if<CyclicSubset>(&label))
        return s->to_string();
    return std::to_string(std::get<int>(label));
}

LabeledGraph::LabeledGraph(FamilyTag tag, std::vector<VertexLabel> labels, Graph graph)
    : tag_(tag), labels_(std::move(labels)), graph_(std::move(graph))
{
    require(static_cast<int>(labels_.size()) == graph_.size(), ErrorKind::InvalidParams,
            "label count differs from vertex count");
    for (std::size_t v = 0; v < labels_.size(); ++v) {
        const bool fresh = index_.emplace(labels_[v], static_cast<int>(v)).second;
        require(fresh, ErrorKind::InvalidParams, "repeated vertex label " + label_string(labels_[v]));
    }
}

const CyclicSubset &LabeledGraph::subset_label(int v) const
{
    const auto *s = std::get_if<CyclicSubset>(&label(v));
    require(s != nullptr, ErrorKind::InvalidParams, "vertex " + std::to_string(v) + " has no subset label");
    return *s;
}

std::optional<int> LabeledGraph::find(const VertexLabel &label) const
{
    const auto it = index_.find(label);
    if (it == index_.end())
        return std::nullopt;
    return it->second;
}

LabeledGraph LabeledGraph::induced(const std::vector<int> &keep) const
{
    std::vector<VertexLabel> labels;
    labels.reserve(keep.size());
    for (int v : keep)
        labels.push_back(label(v));
    return LabeledGraph({Family::Generic, tag_.n, tag_.k}, std::move(labels), graph_.induced(keep));
}

LabeledGraph LabeledGraph::without_vertex(int v) const
{
    require(v >= 0 && v < size(), ErrorKind::InvalidParams, "vertex id " + std::to_string(v) + " out of range");
    std::vector<int> keep;
    keep.reserve(static_cast<std::size_t>(size()));
    for (int u = 0; u < size(); ++u)
        if (u != v)
            keep.push_back(u);
    return induced(keep);
}

LabeledGraph LabeledGraph::without_edge(int u, int v) const
{
    require(u >= 0 && v >= 0 && u < size() && v < size() && u != v && adjacent(u, v), ErrorKind::NotAnEdge,
            "{" + std::to_string(u) + "," + std::to_string(v) + "} is not an edge of " + name());
    Graph g = graph_;
    g.remove_edge(u, v);
    return LabeledGraph({Family::Generic, tag_.n, tag_.k}, labels_, std::move(g));
}

std::string LabeledGraph::name() const
{
    const std::string nk = "(" + std::to_string(tag_.n) + "," + std::to_string(tag_.k) + ")";
    switch (tag_.family) {
    case Family::Kneser: return "KG" + nk;
    case Family::Schrijver: return "SG" + nk;
    case Family::Q: return "Q" + nk;
    case Family::Circular: return "K_{" + std::to_string(tag_.n) + "/" + std::to_string(tag_.k) + "}";
    case Family::Interlacing: return "I" + nk;
    case Family::Generic: break;
    }
    return "G[" + std::to_string(size()) + "]";
}

} // namespace kq

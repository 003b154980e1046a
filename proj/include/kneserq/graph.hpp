#pragma once

#include "kneserq/cyclic.hpp"
#include "kneserq/vertex_set.hpp"

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace kq {

// Always stored with first < second.
using Edge = std::pair<int, int>;

inline Edge make_edge(int u, int v) { return u < v ? Edge{u, v} : Edge{v, u}; }

// Simple undirected graph on 0..size()-1 with bitset adjacency rows.
class Graph {
  public:
    Graph() = default;
    explicit Graph(int vertex_count);

    int size() const noexcept { return static_cast<int>(rows_.size()); }

    void add_edge(int u, int v);
    void remove_edge(int u, int v);
    bool adjacent(int u, int v) const { return rows_[static_cast<std::size_t>(u)].test(v); }
    const VertexSet &neighbours(int v) const { return rows_[static_cast<std::size_t>(v)]; }
    int degree(int v) const { return rows_[static_cast<std::size_t>(v)].count(); }

    std::size_t edge_count() const;
    std::vector<Edge> edges() const; // lexicographic

    bool is_independent(const VertexSet &s) const;

    // Vertex i of the result is keep[i]; keep must hold distinct ids.
    Graph induced(const std::vector<int> &keep) const;
    Graph complement() const;

    friend bool operator==(const Graph &, const Graph &) = default;

  private:
    void check_vertex(int v) const;

    std::vector<VertexSet> rows_;
};

enum class Family { Kneser, Schrijver, Q, Circular, Interlacing, Generic };

std::string to_string(Family f);
std::optional<Family> parse_family(const std::string &text);

struct FamilyTag {
    Family family = Family::Generic;
    int n = 0;
    int k = 0;

    friend bool operator==(const FamilyTag &, const FamilyTag &) = default;
};

// CyclicSubset for set-based families, a bare residue for circular complete graphs.
using VertexLabel = std::variant<CyclicSubset, int>;

std::string label_string(const VertexLabel &label);

class LabeledGraph {
  public:
    LabeledGraph() = default;
    // Throws InvalidParams if label count differs from the vertex count or labels repeat.
    LabeledGraph(FamilyTag tag, std::vector<VertexLabel> labels, Graph graph);

    const FamilyTag &tag() const noexcept { return tag_; }
    const Graph &graph() const noexcept { return graph_; }
    int size() const noexcept { return graph_.size(); }
    bool adjacent(int u, int v) const { return graph_.adjacent(u, v); }

    const std::vector<VertexLabel> &labels() const noexcept { return labels_; }
    const VertexLabel &label(int v) const { return labels_.at(static_cast<std::size_t>(v)); }
    // Throws InvalidParams for integer-labelled vertices.
    const CyclicSubset &subset_label(int v) const;

    std::optional<int> find(const VertexLabel &label) const;

    // Family tag becomes Generic; surviving vertices keep their labels, ids are renumbered
    // in increasing order.
    LabeledGraph without_vertex(int v) const;
    // Throws NotAnEdge if {u, v} is not an edge.
    LabeledGraph without_edge(int u, int v) const;
    LabeledGraph induced(const std::vector<int> &keep) const;

    std::string name() const; // KG(5,2), SG(7,2), Q(13,5), K_{5/2}, I(7,2), G

    friend bool operator==(const LabeledGraph &a, const LabeledGraph &b)
    {
        return a.tag_ == b.tag_ && a.labels_ == b.labels_ && a.graph_ == b.graph_;
    }

  private:
    FamilyTag tag_;
    std::vector<VertexLabel> labels_;
    Graph graph_;
    std::map<VertexLabel, int> index_;
};

} // namespace kq

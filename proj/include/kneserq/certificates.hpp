#pragma once

#include "kneserq/families.hpp"
#include "kneserq/invariants.hpp"

#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace kq {

// Positions below are base-cycle positions of Q(n,k): X_u is the u-fold clockwise rotation
// of the canonical well-spread set, and Q's vertex ids coincide with positions.

struct RightNeighbor {
    int vertex = -1;
    int offset = 0; // rotate(label(source), offset) == label(vertex), 0 < offset < n
    int j = 0;

    friend bool operator==(const RightNeighbor &, const RightNeighbor &) = default;
};

struct RightNeighborTable {
    int source = -1;
    std::vector<RightNeighbor> entries; // every non-neighbour other than source, by (j, vertex)

    std::vector<int> neighbours_for(int j) const;
};

// Throws NotCoprime unless gcd(n,k) = 1; ValidationFailed if the count depends on the witness.
RightNeighborTable right_j_neighbors(const QGraph &q, int x);

// Q(n,k) -> Q(l*n, l*k), X_t -> t-fold rotation of the periodic extension. Requires n >= 2k, l >= 2.
VertexMap scaling_isomorphism(int n, int k, int l, const BuildOptions &opts = {});

// Q(n,k) -> K_{n/k}, X_u -> u*k mod n.
VertexMap circular_isomorphism(int n, int k, const BuildOptions &opts = {});

// Embedding of Q(a,b) onto base-cycle positions 0..a-1 of Q(n,k), (a,b) = critical_params.
// Requires gcd(n,k) = 1 and n > 2k.
VertexMap find_subgraph_qab(int n, int k, const BuildOptions &opts = {});

struct ColoringCertificate {
    std::shared_ptr<const LabeledGraph> graph; // Q(n,k) before deletion
    std::optional<int> deleted_vertex;
    std::optional<Edge> deleted_edge;
    FractionalColoring coloring; // over ids of `graph`; never uses a deleted vertex
    BigRational claimed_value;
};

// The graph with the deletion applied; vertex deletion renumbers ids above it.
LabeledGraph modified_graph(const ColoringCertificate &c);

// Empty iff the colouring is valid on the modified graph and its total is claimed_value.
std::vector<std::string> certificate_violations(const ColoringCertificate &c);

// Weight 1/b on A_1..A_a: A_1 is the star of residue 0 rotated so that its light a-arc
// starts at `deleted`, A_{m+1} is A_m rotated one step anticlockwise; each set restricted to the
// surviving vertices.
ColoringCertificate vertex_deleted_coloring(int n, int k, int deleted, const BuildOptions &opts = {});

// As above with A_1 widened by the one vertex of A_{a+1} \ A_1, the construction rotated so
// its cycle-edge lands on {u, v}. Throws NotCycleEdge (NotAnEdge) for other pairs.
ColoringCertificate edge_deleted_coloring(int n, int k, const Edge &e, const BuildOptions &opts = {});

// Q(n,k) \ {deleted} -> Q(a,b), position p -> Y of position T - ((T - p) mod n mod a), T = deleted - 1.
VertexMap vertex_deleted_retraction(int n, int k, int deleted, const BuildOptions &opts = {});

// Q(n,k) \ {e} -> Q(a,b) for a cycle-edge e = {X_w, X_{w+1}}, using T = w.
VertexMap edge_deleted_retraction(int n, int k, const Edge &e, const BuildOptions &opts = {});

// The n stars {X : i in X} of KG(n,k), each with weight 1/k.
FractionalColoring kneser_star_coloring(const LabeledGraph &kg);

} // namespace kq

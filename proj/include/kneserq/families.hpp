#pragma once

#include "kneserq/graph.hpp"
#include "kneserq/vertex_map.hpp"

#include <cstdint>
#include <vector>

namespace kq {

struct BuildOptions {
    int vertex_cap = 10'000;
};

// C(n, k), saturating at `limit` + 1 so callers can compare against caps safely.
std::uint64_t binomial(int n, int k, std::uint64_t limit = UINT64_MAX - 1);

// Position u on the base cycle holds the u-fold clockwise rotation of order[0]'s label.
struct NaturalRepresentation {
    std::vector<int> order;

    int size() const noexcept { return static_cast<int>(order.size()); }
    int at(long long position) const;
    // Inverse of order.
    int position_of(int vertex) const;
};

struct QGraph {
    LabeledGraph graph;
    NaturalRepresentation natural;
};

// All k-subsets of Z_n in lexicographic order, edges between disjoint subsets.
LabeledGraph build_kneser(int n, int k, const BuildOptions &opts = {});
// Induced on the 2-separated k-subsets, lexicographic order.
LabeledGraph build_schrijver(int n, int k, const BuildOptions &opts = {});
// Induced on the well-spread k-subsets; vertex u is the u-fold rotation of the canonical set.
QGraph build_q(int n, int k, const BuildOptions &opts = {});
// Vertices 0..n-1, i ~ j iff k <= |i-j| <= n-k.
LabeledGraph build_circular(int n, int k, const BuildOptions &opts = {});
// Schrijver vertex set, only interlacing edges kept.
LabeledGraph build_interlacing(int n, int k, const BuildOptions &opts = {});

LabeledGraph build_family(Family family, int n, int k, const BuildOptions &opts = {});

// Marks of x and y strictly alternate around Z_n. Requires equal sizes, a common
// modulus and disjointness (InvalidParams otherwise).
bool is_interlacing_edge(const CyclicSubset &x, const CyclicSubset &y);

// label(v) is a one-step rotation (either direction) of label(u). NotAnEdge unless u ~ v.
bool is_cycle_edge(const LabeledGraph &q, int u, int v);

// K_{n'/k'} -> KG(n, k) via h -> union over l = gcd(n,k) cycles of k' consecutive elements.
VertexMap embed_circular_in_kneser(int n, int k, const BuildOptions &opts = {});

} // namespace kq

#pragma once

#include "kneserq/graph.hpp"
#include "kneserq/rational.hpp"
#include "kneserq/vertex_map.hpp"

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace kq {

// Exceeding any of these raises Error(ResourceCap); no solver returns a partial answer.
struct SolverLimits {
    std::size_t mis_cap = 200'000;
    std::uint64_t node_budget = 100'000'000;
};

struct FractionalColoring {
    std::vector<VertexSet> sets;
    std::vector<BigRational> weights; // parallel to sets, all positive

    BigRational total() const;
};

// Empty iff every set is independent, every weight positive and every vertex covered
// with total weight >= 1.
std::vector<std::string> coloring_violations(const Graph &g, const FractionalColoring &c);

struct FractionalResult {
    BigRational value;
    FractionalColoring coloring;     // optimal primal certificate, every set maximal
    std::vector<BigRational> dual;   // optimal vertex weights, no independent set exceeds 1
};

// Bron-Kerbosch with pivoting; each maximal independent set once, sorted by member list.
std::vector<VertexSet> enumerate_maximal_independent_sets(const Graph &g, const SolverLimits &limits = {});

// Heaviest independent set whose weight strictly exceeds `threshold`, if one exists.
// Weights must be non-negative.
std::optional<VertexSet> max_weight_independent_set(const Graph &g, const std::vector<std::int64_t> &weights,
                                                    std::int64_t threshold, const SolverLimits &limits = {});

int independence_number(const Graph &g, const SolverLimits &limits = {});

// Every independent set of size alpha(g), sorted by member list.
std::vector<VertexSet> max_independent_sets(const Graph &g, const SolverLimits &limits = {});

int clique_number(const Graph &g, const SolverLimits &limits = {});

struct ColoringResult {
    int colors = 0;
    std::vector<int> coloring; // proper, colours 0..colors-1
};

// Exact DSATUR branch and bound.
ColoringResult exact_coloring(const Graph &g, const SolverLimits &limits = {});
int chromatic_number(const Graph &g, const SolverLimits &limits = {});

// Column generation over maximal independent sets with exact pricing.
FractionalResult fractional_chromatic_number(const Graph &g, const SolverLimits &limits = {});

// The same LP solved over an explicit column family (e.g. all maximal independent sets).
BigRational fractional_chromatic_number_over(const Graph &g, const std::vector<VertexSet> &columns,
                                            const SolverLimits &limits = {});

// chi_f(g) proven from two certificates: `upper` is a fractional colouring of g, and the
// lower bound is the optimal LP dual of the induced subgraph on `support`, lifted by zeros
// (an independent set of g meets `support` in an independent set of the subgraph).
// Returns the value with both certificates when the bounds meet.
std::optional<FractionalResult> fractional_value_from_bounds(const Graph &g, const FractionalColoring &upper,
                                                             const std::vector<int> &support,
                                                             const SolverLimits &limits = {});

struct HomomorphismOptions {
    // Permits pinning one vertex per connected component of the source to target vertex 0.
    bool target_vertex_transitive = false;
};

std::optional<std::vector<int>> find_homomorphism(const Graph &g, const Graph &h, const SolverLimits &limits = {},
                                                  const HomomorphismOptions &opts = {});
std::optional<VertexMap> find_homomorphism(std::shared_ptr<const LabeledGraph> g,
                                           std::shared_ptr<const LabeledGraph> h,
                                           const SolverLimits &limits = {});

// Least p/q with g -> K_{p/q}, searched over q <= |V(g)| between chi_f and chi.
BigRational circular_chromatic_number(const Graph &g, const SolverLimits &limits = {});

std::optional<std::vector<int>> find_isomorphism(const Graph &g, const Graph &h, const SolverLimits &limits = {});
std::optional<VertexMap> find_isomorphism(std::shared_ptr<const LabeledGraph> g, std::shared_ptr<const LabeledGraph> h,
                                          const SolverLimits &limits = {});

} // namespace kq

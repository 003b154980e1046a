#pragma once

#include "kneserq/families.hpp"
#include "kneserq/invariants.hpp"

#include <optional>
#include <string>
#include <vector>

namespace kq {

enum class Invariant { Chi, ChiF, ChiC };
std::string to_string(Invariant inv);
std::optional<Invariant> parse_invariant(const std::string &text);

enum class CriticalitySummary { VertexCritical, EdgeClassification, NotCritical, Mixed };
std::string to_string(CriticalitySummary s);
std::optional<CriticalitySummary> parse_summary(const std::string &text);

struct VertexDeletion {
    int vertex = -1;
    BigRational value;
    friend bool operator==(const VertexDeletion &, const VertexDeletion &) = default;
};

struct EdgeDeletion {
    Edge edge;
    BigRational value;
    std::optional<bool> cycle_edge;
    friend bool operator==(const EdgeDeletion &, const EdgeDeletion &) = default;
};

struct CriticalityReport {
    FamilyTag graph;                   // the graph actually swept
    std::optional<FamilyTag> original; // set when a gcd > 1 input was reduced first
    Invariant invariant = Invariant::ChiF;
    BigRational baseline;
    std::vector<VertexDeletion> per_vertex; // by vertex id
    std::vector<EdgeDeletion> per_edge;     // lexicographic
    CriticalitySummary summary = CriticalitySummary::NotCritical;
    friend bool operator==(const CriticalityReport &, const CriticalityReport &) = default;
};

// Vertex reports: VertexCritical / NotCritical / Mixed from the values. Edge reports also use the
// graph's critical parameters (a,b) to test the cycle-edge classification.
CriticalitySummary recompute_summary(const CriticalityReport &r);

BigRational evaluate(const Graph &g, Invariant inv, const SolverLimits &limits = {});

// Throws ValidationFailed if some deletion increases the invariant.
CriticalityReport vertex_criticality(const LabeledGraph &g, Invariant inv, const SolverLimits &limits = {});

// chi_f after every edge deletion of Q(n,k). EdgeClassification iff cycle-edges give a/b and
// all other edges n/k. A gcd > 1 input is swept as Q(n', k').
CriticalityReport edge_criticality(const LabeledGraph &q, const SolverLimits &limits = {});

// chi_c of K_{n/k} minus each edge; an edge is flagged when its circular distance is k or n-k.
CriticalityReport circular_edge_corollary(int n, int k, const SolverLimits &limits = {});

struct BrooksEntry {
    int n = 0;
    int k = 0;
    bool equal = false;    // V(Q) = V(SG) as label sets
    bool expected = false; // k = 1, n = 2k or n = 2k + 1
    friend bool operator==(const BrooksEntry &, const BrooksEntry &) = default;
};

struct BrooksReport {
    std::vector<BrooksEntry> entries; // every 2 <= 2k <= n <= maxN
    bool consistent() const;
};

BrooksReport brooks_boundary_check(int max_n, const BuildOptions &opts = {});

} // namespace kq

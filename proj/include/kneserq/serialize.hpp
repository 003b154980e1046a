#pragma once

#include "kneserq/certificates.hpp"
#include "kneserq/criticality.hpp"
#include "kneserq/cyclic.hpp"

#include <json.hpp>

#include <string>

namespace kq {

using Json = nlohmann::ordered_json;

inline constexpr const char *kSchemaVersion = "1";

// {"schemaVersion", "family": {"name", "n", "k"}, "vertices": [...], "edges": [[u, v], ...]}
Json graph_to_json(const LabeledGraph &g);
// ParseError on malformed input; ValidationFailed if a family-tagged document differs from a fresh build.
LabeledGraph graph_from_json(const Json &doc, const BuildOptions &opts = {});

// Stable output: labels as set literals, edges in lexicographic order.
std::string to_dot(const LabeledGraph &g);

enum class DocumentKind { FractionalColoring, VertexMap, ReductionTrace, Report };
std::string to_string(DocumentKind kind);

Json certificate_to_json(const ColoringCertificate &c);
Json certificate_to_json(const VertexMap &m);
Json certificate_to_json(const CyclicSubset &start, const ReductionTrace &t);
Json certificate_to_json(const CriticalityReport &r);

// Loaders re-check every invariant of the payload; ValidationFailed when one breaks.
ColoringCertificate coloring_certificate_from_json(const Json &doc, const BuildOptions &opts = {});
VertexMap vertex_map_from_json(const Json &doc, const BuildOptions &opts = {});
std::pair<CyclicSubset, ReductionTrace> reduction_trace_from_json(const Json &doc);
CriticalityReport report_from_json(const Json &doc);

// Dispatch on "kind" and run the matching loader.
DocumentKind validate_document(const Json &doc, const BuildOptions &opts = {});

} // namespace kq

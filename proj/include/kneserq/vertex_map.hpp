#pragma once

#include "kneserq/graph.hpp"

#include <memory>
#include <string>
#include <vector>

namespace kq {

enum class MapKind { Homomorphism, Isomorphism, Embedding };

std::string to_string(MapKind kind);

struct VertexMap {
    std::shared_ptr<const LabeledGraph> source;
    std::shared_ptr<const LabeledGraph> target;
    std::vector<int> mapping; // source id -> target id
    MapKind kind = MapKind::Homomorphism;

    int operator()(int v) const { return mapping.at(static_cast<std::size_t>(v)); }
};

struct MapViolation {
    int u = -1; // offending source vertices; v is -1 for single-vertex problems
    int v = -1;
    std::string reason;

    friend bool operator==(const MapViolation &, const MapViolation &) = default;
};

// Empty iff the map satisfies the invariant of its kind.
std::vector<MapViolation> validate_map(const VertexMap &m);

// Throws ValidationFailed with the first violation when the map is invalid.
void ensure_valid(const VertexMap &m, const std::string &what);

} // namespace kq

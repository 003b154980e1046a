#include "kneserq/vertex_map.hpp"
#include "kneserq/error.hpp"

namespace kq {

std::string to_string(MapKind kind)
{
    switch (kind) {
    case MapKind::Homomorphism: return "HOMOMORPHISM";
    case MapKind::Isomorphism: return "ISOMORPHISM";
    case MapKind::Embedding: return "EMBEDDING";
    }
    return "HOMOMORPHISM";
}

std::vector<MapViolation> validate_map(const VertexMap &m)
{
    std::vector<MapViolation> out;
    if (!m.source || !m.target) {
        out.push_back({-1, -1, "missing source or target graph"});
        return out;
    }
    const Graph &g = m.source->graph();
    const Graph &h = m.target->graph();
    if (static_cast<int>(m.mapping.size()) != g.size()) {
        out.push_back({-1, -1, "mapping is not total on the source"});
        return out;
    }
    bool in_range = true;
    for (int u = 0; u < g.size(); ++u)
        if (m.mapping[static_cast<std::size_t>(u)] < 0 || m.mapping[static_cast<std::size_t>(u)] >= h.size()) {
            out.push_back({u, -1, "image outside the target"});
            in_range = false;
        }
    if (!in_range)
        return out;

    const bool two_sided = m.kind != MapKind::Homomorphism;
    for (int u = 0; u < g.size(); ++u)
        for (int v = u + 1; v < g.size(); ++v) {
            const int fu = m.mapping[static_cast<std::size_t>(u)];
            const int fv = m.mapping[static_cast<std::size_t>(v)];
            if (two_sided && fu == fv) {
                out.push_back({u, v, "not injective"});
                continue;
            }
            const bool src = g.adjacent(u, v);
            const bool dst = fu != fv && h.adjacent(fu, fv);
            if (src && !dst)
                out.push_back({u, v, "edge not preserved"});
            else if (two_sided && !src && dst)
                out.push_back({u, v, "non-edge mapped to an edge"});
        }
    if (m.kind == MapKind::Isomorphism && g.size() != h.size())
        out.push_back({-1, -1, "not surjective"});
    return out;
}

void ensure_valid(const VertexMap &m, const std::string &what)
{
    const auto violations = validate_map(m);
    if (violations.empty())
        return;
    const auto &first = violations.front();
    fail(ErrorKind::ValidationFailed, what + ": " + first.reason + " at (" + std::to_string(first.u) + "," +
                                          std::to_string(first.v) + ")");
}

} // namespace kq

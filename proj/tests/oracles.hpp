#pragma once

// Brute-force references for small inputs. Nothing here calls the solvers it is used to check.

#include "kneserq/graph.hpp"

#include <algorithm>
#include <bit>
#include <cassert>
#include <cstdint>
#include <functional>
#include <random>
#include <vector>

namespace oracle {

inline bool independent(const kq::Graph &g, std::uint32_t mask)
{
    for (int u = 0; u < g.size(); ++u)
        if (mask >> u & 1u)
            for (int v = u + 1; v < g.size(); ++v)
                if ((mask >> v & 1u) && g.adjacent(u, v))
                    return false;
    return true;
}

inline std::vector<std::uint32_t> independent_masks(const kq::Graph &g)
{
    assert(g.size() < 32);
    std::vector<std::uint32_t> out;
    for (std::uint32_t m = 0; m < (1u << g.size()); ++m)
        if (independent(g, m))
            out.push_back(m);
    return out;
}

inline std::vector<std::uint32_t> maximal_masks(const kq::Graph &g)
{
    std::vector<std::uint32_t> out;
    for (auto m : independent_masks(g)) {
        bool maximal = true;
        for (int v = 0; v < g.size() && maximal; ++v)
            if (!(m >> v & 1u) && independent(g, m | 1u << v))
                maximal = false;
        if (maximal)
            out.push_back(m);
    }
    return out;
}

inline int alpha(const kq::Graph &g)
{
    int best = 0;
    for (auto m : independent_masks(g))
        best = std::max(best, std::popcount(m));
    return best;
}

// Every map V(g) -> V(h), first edge-preserving one wins.
inline bool hom_exists(const kq::Graph &g, const kq::Graph &h)
{
    const int n = g.size(), m = h.size();
    if (n == 0)
        return true;
    if (m == 0)
        return false;
    std::vector<int> f(static_cast<std::size_t>(n), 0);
    while (true) {
        bool ok = true;
        for (const auto &[u, v] : g.edges())
            if (!h.adjacent(f[static_cast<std::size_t>(u)], f[static_cast<std::size_t>(v)])) {
                ok = false;
                break;
            }
        if (ok)
            return true;
        int i = 0;
        while (i < n && ++f[static_cast<std::size_t>(i)] == m)
            f[static_cast<std::size_t>(i++)] = 0;
        if (i == n)
            return false;
    }
}

inline kq::Graph complete(int n)
{
    kq::Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            g.add_edge(u, v);
    return g;
}

inline kq::Graph cycle(int n)
{
    kq::Graph g(n);
    for (int u = 0; u < n; ++u)
        g.add_edge(u, (u + 1) % n);
    return g;
}

inline kq::Graph circulant(int p, int q)
{
    kq::Graph g(p);
    for (int i = 0; i < p; ++i)
        for (int j = i + 1; j < p; ++j)
            if (j - i >= q && j - i <= p - q)
                g.add_edge(i, j);
    return g;
}

inline int chi(const kq::Graph &g)
{
    for (int c = 1; c <= g.size(); ++c)
        if (hom_exists(g, complete(c)))
            return c;
    return 0;
}

inline kq::Graph random_graph(int n, double p, std::mt19937 &rng)
{
    std::bernoulli_distribution coin(p);
    kq::Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (coin(rng))
                g.add_edge(u, v);
    return g;
}

inline kq::Graph relabel(const kq::Graph &g, const std::vector<int> &perm)
{
    kq::Graph out(g.size());
    for (const auto &[u, v] : g.edges())
        out.add_edge(perm[static_cast<std::size_t>(u)], perm[static_cast<std::size_t>(v)]);
    return out;
}

// Arc counts straight from the definition, over bitmask subsets of Z_n.
inline bool well_spread_mask(int n, std::uint32_t mask)
{
    for (int len = 1; len < n; ++len) {
        int lo = n, hi = -1;
        for (int s = 0; s < n; ++s) {
            int c = 0;
            for (int i = 0; i < len; ++i)
                c += (mask >> ((s + i) % n)) & 1u;
            lo = std::min(lo, c);
            hi = std::max(hi, c);
        }
        if (hi - lo > 1)
            return false;
    }
    return true;
}

} // namespace oracle

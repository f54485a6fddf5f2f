#pragma once

#include <limits>

#include "topolab/graph.hpp"

namespace topolab {

// Join G1 + G2: disjoint union plus every cross pair. Labels are
// deterministic so serialized output is stable: G1 keeps 0..n1-1,
// G2 shifts to n1..n1+n2-1.
inline Graph join(const Graph& g1, const Graph& g2) {
    const int n1 = g1.vertex_count();
    const int n2 = g2.vertex_count();
    if ((long long)n1 + n2 > std::numeric_limits<int>::max())
        throw std::invalid_argument("join: result order overflows vertex labels");
    Graph out(n1 + n2);
    g1.for_each_edge([&out](int u, int v) { out.add_edge(u, v); });
    g2.for_each_edge([&out, n1](int u, int v) { out.add_edge(u + n1, v + n1); });
    for (int u = 0; u < n1; ++u)
        for (int v = 0; v < n2; ++v) out.add_edge(u, n1 + v);
    return out;
}

// Corona G (.) H: one copy of H per vertex of G, vertex i joined to all
// of copy i. G keeps 0..n-1; copy i occupies n + i*|V(H)| .. n + (i+1)*|V(H)| - 1
// in H's label order.
inline Graph corona(const Graph& g, const Graph& h) {
    const int n = g.vertex_count();
    const int hn = h.vertex_count();
    if (n < 1) throw std::invalid_argument("corona: base graph needs at least one vertex");
    if (hn < 1) throw std::invalid_argument("corona: attached graph needs at least one vertex");
    if ((long long)n * (1 + (long long)hn) > std::numeric_limits<int>::max())
        throw std::invalid_argument("corona: result order overflows vertex labels");
    Graph out(n * (1 + hn));
    g.for_each_edge([&out](int u, int v) { out.add_edge(u, v); });
    for (int i = 0; i < n; ++i) {
        const int base = n + i * hn;
        h.for_each_edge([&out, base](int u, int v) { out.add_edge(base + u, base + v); });
        for (int w = 0; w < hn; ++w) out.add_edge(i, base + w);
    }
    return out;
}

} // namespace topolab

#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <utility>

#include "topolab/graph.hpp"
#include "topolab/radical.hpp"

namespace topolab {

// ESO: sum over edges of (du+dv)*sqrt(du^2+dv^2)
// EU:  sum over edges of sqrt(du^2+dv^2+du*dv)
// SO:  sum over edges of sqrt(du^2+dv^2)
enum class IndexKind { ESO, EU, SO };

inline const char* index_name(IndexKind k) {
    switch (k) {
        case IndexKind::ESO: return "eso";
        case IndexKind::EU: return "eu";
        case IndexKind::SO: return "so";
    }
    throw std::invalid_argument("unknown index kind");
}

inline IndexKind parse_index_kind(const std::string& name) {
    if (name == "eso") return IndexKind::ESO;
    if (name == "eu") return IndexKind::EU;
    if (name == "so") return IndexKind::SO;
    throw std::invalid_argument("unknown index kind \"" + name + "\" (expected eso, eu or so)");
}

// Unordered degree pair (a, b) with a <= b.
using DegreePair = std::pair<int, int>;

// Multiset of degree pairs realized by the edges of a graph; counts sum to m.
using EdgeClassPartition = std::map<DegreePair, long long>;

inline EdgeClassPartition edge_partition(const Graph& g) {
    EdgeClassPartition part;
    g.for_each_edge([&](int u, int v) {
        int a = g.degree(u), b = g.degree(v);
        if (a > b) std::swap(a, b);
        ++part[{a, b}];
    });
    return part;
}

// Contribution of one (a, b) edge, as a normalized radical.
inline Radical edge_weight(IndexKind kind, int a, int b) {
    if (a < 1 || b < 1)
        throw std::invalid_argument("edge_weight: degrees on an edge must be >= 1");
    const long long aa = (long long)a * a, bb = (long long)b * b;
    switch (kind) {
        case IndexKind::ESO: return normalize_radical(Rational(a + b), aa + bb);
        case IndexKind::EU: return normalize_radical(Rational(1), aa + bb + (long long)a * b);
        case IndexKind::SO: return normalize_radical(Rational(1), aa + bb);
    }
    throw std::invalid_argument("unknown index kind");
}

// Partition-weighted total: sum over classes of count * weight(a, b).
inline RadicalSum evaluate_partition(const EdgeClassPartition& part, IndexKind kind) {
    RadicalSum total;
    for (const auto& [pair, count] : part) {
        Radical w = edge_weight(kind, pair.first, pair.second);
        total.add(Radical{w.coef * Rational(count), w.radicand});
    }
    return total;
}

// Ground-truth index value, computed twice: edge-by-edge and through the
// degree-pair partition. The two routes must agree exactly.
inline RadicalSum index_exact(const Graph& g, IndexKind kind) {
    RadicalSum by_edges;
    g.for_each_edge([&](int u, int v) { by_edges.add(edge_weight(kind, g.degree(u), g.degree(v))); });
    RadicalSum by_partition = evaluate_partition(edge_partition(g), kind);
    if (by_edges != by_partition)
        throw std::logic_error("index_exact: edge summation and partition summation disagree");
    return by_edges;
}

inline double index_float(const Graph& g, IndexKind kind) {
    return index_exact(g, kind).to_double();
}

} // namespace topolab

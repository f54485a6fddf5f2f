#pragma once

#include <cstddef>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace topolab {

struct ParseError : std::runtime_error {
    ParseError(int line_no, const std::string& what_arg)
        : std::runtime_error("parse error at line " + std::to_string(line_no) + ": " + what_arg),
          line(line_no) {}
    int line;
};

// Undirected simple graph on vertices 0..n-1, adjacency-set representation.
// Construction enforces: no self-loops, no duplicate edges, labels in range,
// symmetric adjacency. Treat instances as immutable once built.
class Graph {
public:
    explicit Graph(int n) : adj_(check_order(n)), m_(0) {}

    int vertex_count() const { return static_cast<int>(adj_.size()); }
    std::size_t edge_count() const { return m_; }

    void add_edge(int u, int v) {
        check_vertex(u);
        check_vertex(v);
        if (u == v) throw std::invalid_argument("add_edge: self-loop at vertex " + std::to_string(u));
        if (!adj_[u].insert(v).second)
            throw std::invalid_argument("add_edge: duplicate edge " + std::to_string(u) + " " + std::to_string(v));
        adj_[v].insert(u);
        ++m_;
    }

    bool has_edge(int u, int v) const {
        check_vertex(u);
        check_vertex(v);
        return adj_[u].count(v) > 0;
    }

    const std::set<int>& neighbors(int v) const {
        check_vertex(v);
        return adj_[v];
    }

    int degree(int v) const {
        check_vertex(v);
        return static_cast<int>(adj_[v].size());
    }

    // Calls f(u, v) once per edge with u < v, in lexicographic order.
    template <typename F>
    void for_each_edge(F&& f) const {
        for (int u = 0; u < vertex_count(); ++u)
            for (int v : adj_[u])
                if (u < v) f(u, v);
    }

    friend bool operator==(const Graph& a, const Graph& b) { return a.adj_ == b.adj_; }
    friend bool operator!=(const Graph& a, const Graph& b) { return !(a == b); }

private:
    static std::size_t check_order(int n) {
        if (n < 0) throw std::invalid_argument("graph order must be nonnegative");
        return static_cast<std::size_t>(n);
    }
    void check_vertex(int v) const {
        if (v < 0 || v >= vertex_count())
            throw std::invalid_argument("vertex label " + std::to_string(v) + " out of range [0, " +
                                        std::to_string(vertex_count()) + ")");
    }

    std::vector<std::set<int>> adj_;
    std::size_t m_;
};

// P_n: vertices 0..n-1, edges {i, i+1}.
inline Graph make_path(int n) {
    if (n < 1) throw std::invalid_argument("make_path: n must be >= 1");
    Graph g(n);
    for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
    return g;
}

// C_n: edges {i, (i+1) mod n}. C_1 and C_2 are not simple graphs.
inline Graph make_cycle(int n) {
    if (n < 3) throw std::invalid_argument("make_cycle: n must be >= 3");
    Graph g(n);
    for (int i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
    return g;
}

// K_n: all pairs adjacent.
inline Graph make_complete(int n) {
    if (n < 1) throw std::invalid_argument("make_complete: n must be >= 1");
    Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
    return g;
}

inline std::vector<int> degree_sequence(const Graph& g) {
    std::vector<int> deg(g.vertex_count());
    for (int v = 0; v < g.vertex_count(); ++v) deg[v] = g.degree(v);
    return deg;
}

// Edge-list text format: header "n m", then m lines "u v" (0-based).
// Serialization is canonical: u < v, edges in lexicographic order, LF
// line endings, every line terminated.
inline std::string serialize_graph(const Graph& g) {
    std::string out = std::to_string(g.vertex_count()) + " " + std::to_string(g.edge_count()) + "\n";
    g.for_each_edge([&out](int u, int v) {
        out += std::to_string(u) + " " + std::to_string(v) + "\n";
    });
    return out;
}

namespace detail {

inline bool parse_two_ints(const std::string& line, long long& a, long long& b) {
    std::istringstream in(line);
    if (!(in >> a >> b)) return false;
    char c;
    if (in >> c) return false; // trailing junk
    return true;
}

} // namespace detail

inline Graph parse_graph(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::string line;
    int line_no = 0;

    if (!std::getline(in, line)) throw ParseError(1, "missing header line \"n m\"");
    ++line_no;
    long long n = 0, m = 0;
    if (!detail::parse_two_ints(line, n, m) || n < 0 || m < 0)
        throw ParseError(line_no, "malformed header, expected \"n m\"");
    if (n > 50'000'000) throw ParseError(line_no, "vertex count too large");

    Graph g(static_cast<int>(n));
    for (long long i = 0; i < m; ++i) {
        if (!std::getline(in, line))
            throw ParseError(line_no + 1, "unexpected end of input, expected " + std::to_string(m) +
                                              " edge lines");
        ++line_no;
        long long u = 0, v = 0;
        if (!detail::parse_two_ints(line, u, v))
            throw ParseError(line_no, "malformed edge line \"" + line + "\"");
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw ParseError(line_no, "vertex label out of range [0, " + std::to_string(n) + ")");
        if (u == v) throw ParseError(line_no, "self-loop at vertex " + std::to_string(u));
        if (g.has_edge(static_cast<int>(u), static_cast<int>(v)))
            throw ParseError(line_no, "duplicate edge " + std::to_string(u) + " " + std::to_string(v));
        g.add_edge(static_cast<int>(u), static_cast<int>(v));
    }
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty())
            throw ParseError(line_no, "trailing content after " + std::to_string(m) + " edges");
    }
    return g;
}

} // namespace topolab

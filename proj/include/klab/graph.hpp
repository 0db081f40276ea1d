#ifndef KLAB_GRAPH_HPP
#define KLAB_GRAPH_HPP

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

#include "bits.hpp"
#include "errors.hpp"

namespace klab {

/// Unordered edge stored with `u < v`.
struct Edge {
    int u = 0;
    int v = 0;
    friend auto operator<=>(const Edge&, const Edge&) = default;
};

inline Edge make_edge(int a, int b) { return a < b ? Edge{a, b} : Edge{b, a}; }

/// Simple undirected graph on vertices 0..n-1 (n <= 64).  Edges are kept
/// sorted; adjacency is mirrored as bitmasks for fast neighbourhood tests.
class Graph {
public:
    Graph() = default;
    explicit Graph(int n) : adj_(static_cast<std::size_t>(n), 0) {
        if (n < 0 || n > 64) throw InputError("graph supports at most 64 vertices, got " + std::to_string(n));
    }

    Graph(int n, const std::vector<Edge>& edges) : Graph(n) {
        for (const Edge& e : edges) add_edge(e.u, e.v);
    }

    int order() const { return static_cast<int>(adj_.size()); }
    int size() const { return static_cast<int>(edges_.size()); }

    /// Adds {a,b}; returns false if already present.  Loops are rejected.
    bool add_edge(int a, int b) {
        if (a == b) throw InputError("loop at vertex " + std::to_string(a));
        if (has_edge(a, b)) return false;
        adj_[a] |= bit(b);
        adj_[b] |= bit(a);
        const Edge e = make_edge(a, b);
        edges_.insert(std::upper_bound(edges_.begin(), edges_.end(), e), e);
        return true;
    }

    bool has_edge(int a, int b) const { return contains(adj_[a], b); }
    Mask neighbors(int v) const { return adj_[v]; }
    int degree(int v) const { return popcount(adj_[v]); }
    const std::vector<Edge>& edges() const { return edges_; }
    Mask all_vertices() const { return low_mask(order()); }

    /// Position of {a,b} in `edges()`, or -1.
    int edge_index(int a, int b) const {
        const Edge e = make_edge(a, b);
        auto it = std::lower_bound(edges_.begin(), edges_.end(), e);
        return (it != edges_.end() && *it == e) ? static_cast<int>(it - edges_.begin()) : -1;
    }

    /// Vertices reachable from `start` using only vertices in `allowed`.
    Mask component(int start, Mask allowed) const {
        Mask seen = bit(start);
        Mask frontier = seen;
        while (frontier != 0) {
            const int v = lowest(frontier);
            frontier &= frontier - 1;
            const Mask fresh = adj_[v] & allowed & ~seen;
            seen |= fresh;
            frontier |= fresh;
        }
        return seen;
    }

    bool is_connected() const {
        if (order() == 0) return true;
        return component(0, all_vertices()) == all_vertices();
    }

    /// Number of edges with both ends in `vs`.
    int induced_size(Mask vs) const {
        int twice = 0;
        for (Mask m = vs; m != 0; m &= m - 1) twice += popcount(adj_[lowest(m)] & vs);
        return twice / 2;
    }

    /// Induced subgraph on `vs`, vertices renumbered in increasing order.
    Graph induced(Mask vs) const {
        const std::vector<int> keep = elements(vs);
        std::vector<int> index(adj_.size(), -1);
        for (std::size_t i = 0; i < keep.size(); ++i) index[keep[i]] = static_cast<int>(i);
        Graph h(static_cast<int>(keep.size()));
        for (const Edge& e : edges_) {
            if (index[e.u] >= 0 && index[e.v] >= 0) h.add_edge(index[e.u], index[e.v]);
        }
        return h;
    }

    bool is_clique(Mask vs) const {
        for (Mask m = vs; m != 0; m &= m - 1) {
            const int v = lowest(m);
            if (!is_subset(vs & ~bit(v), adj_[v])) return false;
        }
        return true;
    }

    friend bool operator==(const Graph& a, const Graph& b) { return a.adj_ == b.adj_; }

private:
    std::vector<Mask> adj_;
    std::vector<Edge> edges_;
};

namespace graphs {

inline Graph complete(int n) {
    Graph g(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) g.add_edge(i, j);
    return g;
}

inline Graph edgeless(int n) { return Graph(n); }

inline Graph cycle(int n) {
    Graph g(n);
    for (int i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
    return g;
}

inline Graph path(int n) {
    Graph g(n);
    for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
    return g;
}

/// Wheel on 5 vertices: 4-cycle 0-1-2-3 plus hub 4.
inline Graph wheel5() {
    Graph g = cycle(4);
    Graph w(5);
    for (const Edge& e : g.edges()) w.add_edge(e.u, e.v);
    for (int i = 0; i < 4; ++i) w.add_edge(4, i);
    return w;
}

/// Disjoint union of g and h plus every edge between them; h's vertices
/// are shifted by g.order().
inline Graph join(const Graph& g, const Graph& h) {
    const int off = g.order();
    Graph out(off + h.order());
    for (const Edge& e : g.edges()) out.add_edge(e.u, e.v);
    for (const Edge& e : h.edges()) out.add_edge(e.u + off, e.v + off);
    for (int i = 0; i < off; ++i)
        for (int j = 0; j < h.order(); ++j) out.add_edge(i, j + off);
    return out;
}

} // namespace graphs

} // namespace klab

#endif // KLAB_GRAPH_HPP

#ifndef KLAB_GROUND_HPP
#define KLAB_GROUND_HPP

// The cone's ground set Ê = {ê} ∪ E and circuit shapes.  Element 0 is ê;
// element e+1 is the e-th network edge, so ê is the minimum.

#include <optional>
#include <string>
#include <vector>

#include "bits.hpp"
#include "errors.hpp"
#include "network.hpp"

namespace klab {

inline constexpr int kCone = 0;

struct GroundSet {
    int k = 0;  // |Ê|

    explicit GroundSet(const Network& n) : k(n.size() + 1) {}
    explicit GroundSet(int size) : k(size) {}

    static int element_of_edge(int e) { return e + 1; }
    static int edge_of_element(int a) { return a - 1; }
    static bool is_cone(int a) { return a == kCone; }

    Mask all() const { return low_mask(k); }
    Mask edges_only() const { return all() & ~bit(kCone); }

    void require_small(const std::string& what) const {
        if (k > 64) throw CapExceeded(what + ": ground set of size " + std::to_string(k) + " exceeds 64");
    }
};

inline Mask edges_to_ground(const std::vector<int>& edges) {
    Mask m = 0;
    for (int e : edges) m |= bit(GroundSet::element_of_edge(e));
    return m;
}

enum class CircuitType { A, B, C, Other };

inline const char* to_string(CircuitType t) {
    switch (t) {
    case CircuitType::A: return "A";
    case CircuitType::B: return "B";
    case CircuitType::C: return "C";
    case CircuitType::Other: return "other";
    }
    return "other";
}

struct Circuit {
    Mask elements = 0;
    CircuitType type = CircuitType::Other;
    /// Crossings (as vertex paths) contained in the circuit.  For type A this
    /// is the single crossing C∖ê.
    std::vector<std::vector<int>> crossings;
    /// Vertex cycle for type B.
    std::vector<int> cycle;
    /// Type-C circuit that contains a cycle of G, i.e. is not acyclic.
    bool cyclic_residual = false;

    int size() const { return popcount(elements); }
    friend bool operator<(const Circuit& a, const Circuit& b) {
        if (a.size() != b.size()) return a.size() < b.size();
        return a.elements < b.elements;
    }
};

/// Degree profile of the subgraph formed by a set of ground edges.
struct EdgeShape {
    Mask vertices = 0;
    std::vector<int> degree;  // indexed by vertex
    int edge_count = 0;
    bool connected = false;
};

inline EdgeShape edge_shape(const Network& n, Mask ground) {
    EdgeShape s;
    s.degree.assign(static_cast<std::size_t>(n.order()), 0);
    Graph sub(n.order());
    for (int a : elements(ground & ~bit(kCone))) {
        const Edge& e = n.edges()[GroundSet::edge_of_element(a)];
        ++s.degree[e.u];
        ++s.degree[e.v];
        s.vertices |= bit(e.u) | bit(e.v);
        sub.add_edge(e.u, e.v);
        ++s.edge_count;
    }
    s.connected = s.vertices == 0 || sub.component(lowest(s.vertices), s.vertices) == s.vertices;
    return s;
}

/// Ordered vertex walk along a path or cycle edge set (connected, max degree 2).
inline std::vector<int> trace_edges(const Network& n, Mask ground, int start) {
    std::vector<int> walk{start};
    Mask left = ground & ~bit(kCone);
    int cur = start;
    while (left != 0) {
        bool moved = false;
        for (int a : elements(left)) {
            const Edge& e = n.edges()[GroundSet::edge_of_element(a)];
            if (e.u == cur || e.v == cur) {
                cur = e.u == cur ? e.v : e.u;
                walk.push_back(cur);
                left &= ~bit(a);
                moved = true;
                break;
            }
        }
        if (!moved) break;
    }
    return walk;
}

/// If the edges form a crossing, its vertex path (from the smaller end).
inline std::optional<std::vector<int>> as_crossing(const Network& n, Mask ground_edges) {
    const EdgeShape s = edge_shape(n, ground_edges);
    if (s.edge_count == 0 || !s.connected) return std::nullopt;
    std::vector<int> ends;
    for (int v : elements(s.vertices)) {
        if (s.degree[v] == 1) ends.push_back(v);
        else if (s.degree[v] != 2) return std::nullopt;
        else if (n.is_boundary(v)) return std::nullopt;
    }
    if (ends.size() != 2 || !n.is_boundary(ends[0]) || !n.is_boundary(ends[1])) return std::nullopt;
    return trace_edges(n, ground_edges, ends[0]);
}

/// If the edges form a single cycle, its vertex cycle (closing vertex not
/// repeated), starting from the smallest vertex.
inline std::optional<std::vector<int>> as_cycle(const Network& n, Mask ground_edges) {
    const EdgeShape s = edge_shape(n, ground_edges);
    if (s.edge_count < 3 || !s.connected) return std::nullopt;
    for (int v : elements(s.vertices)) {
        if (s.degree[v] != 2) return std::nullopt;
    }
    std::vector<int> walk = trace_edges(n, ground_edges, lowest(s.vertices));
    walk.pop_back();
    return walk;
}

/// True iff the edge set contains a cycle of G.
inline bool has_cycle(const Network& n, Mask ground_edges) {
    const EdgeShape s = edge_shape(n, ground_edges);
    // forest iff |E| = |V| - #components over the touched vertices
    Graph sub(n.order());
    for (int a : elements(ground_edges & ~bit(kCone))) {
        const Edge& e = n.edges()[GroundSet::edge_of_element(a)];
        sub.add_edge(e.u, e.v);
    }
    int comps = 0;
    for (Mask left = s.vertices; left != 0;) {
        left &= ~sub.component(lowest(left), s.vertices);
        ++comps;
    }
    return s.edge_count > popcount(s.vertices) - comps;
}

/// Assigns the A/B/C/other tag and witnesses.  `crossing_masks[i]` is the
/// ground mask of `all_crossings[i]`.
inline Circuit classify_circuit(const Network& n, Mask c, const std::vector<Crossing>& all_crossings,
                                const std::vector<Mask>& crossing_masks) {
    Circuit out;
    out.elements = c;
    if (contains(c, kCone)) {
        if (auto path = as_crossing(n, c & ~bit(kCone))) {
            out.type = CircuitType::A;
            out.crossings.push_back(*path);
        }
        return out;
    }
    if (auto cyc = as_cycle(n, c)) {
        int touched = 0;
        for (int v : *cyc) touched += n.is_boundary(v) ? 1 : 0;
        if (touched <= 1) {
            out.type = CircuitType::B;
            out.cycle = *cyc;
            return out;
        }
    }
    for (std::size_t i = 0; i < crossing_masks.size(); ++i) {
        if (is_subset(crossing_masks[i], c)) out.crossings.push_back(all_crossings[i].vertices);
    }
    if (out.crossings.size() >= 2) {
        out.type = CircuitType::C;
        out.cyclic_residual = has_cycle(n, c);
    }
    return out;
}

inline std::vector<Mask> crossing_ground_masks(const std::vector<Crossing>& xs) {
    std::vector<Mask> out;
    out.reserve(xs.size());
    for (const Crossing& x : xs) out.push_back(edges_to_ground(x.edges));
    return out;
}

} // namespace klab

#endif // KLAB_GROUND_HPP

#ifndef KLAB_CHORDALITY_HPP
#define KLAB_CHORDALITY_HPP

#include <algorithm>
#include <deque>
#include <optional>
#include <vector>

#include "bits.hpp"
#include "errors.hpp"
#include "graph.hpp"
#include "ground.hpp"
#include "network.hpp"

namespace klab {

/// Rotates/reflects a vertex cycle to its lexicographically least form.
inline std::vector<int> canonical_cycle(std::vector<int> cyc) {
    if (cyc.empty()) return cyc;
    auto lo = std::min_element(cyc.begin(), cyc.end());
    std::rotate(cyc.begin(), lo, cyc.end());
    if (cyc.size() > 2 && cyc[1] > cyc.back()) std::reverse(cyc.begin() + 1, cyc.end());
    return cyc;
}

struct ChordalityResult {
    bool chordal = false;
    /// Perfect elimination order when chordal.
    std::vector<int> elimination_order;
    /// A chordless cycle of length >= 4 when not chordal (canonical form).
    std::vector<int> hole;
};

/// Maximum cardinality search visit order.
inline std::vector<int> mcs_order(const Graph& g) {
    const int n = g.order();
    std::vector<int> weight(static_cast<std::size_t>(n), 0);
    Mask unvisited = g.all_vertices();
    std::vector<int> order;
    order.reserve(static_cast<std::size_t>(n));
    while (unvisited != 0) {
        int pick = lowest(unvisited);
        for (int v : elements(unvisited))
            if (weight[v] > weight[pick]) pick = v;
        order.push_back(pick);
        unvisited &= ~bit(pick);
        for (int w : elements(g.neighbors(pick) & unvisited)) ++weight[w];
    }
    return order;
}

/// True iff every vertex's neighbours later in `peo` form a clique.
inline bool is_perfect_elimination_order(const Graph& g, const std::vector<int>& peo) {
    Mask later = g.all_vertices();
    for (int v : peo) {
        later &= ~bit(v);
        if (!g.is_clique(g.neighbors(v) & later)) return false;
    }
    return true;
}

/// Some hole of g, searching over (v, x, y) triples in increasing order;
/// nullopt iff g is chordal.
inline std::optional<std::vector<int>> find_hole(const Graph& g) {
    for (int v = 0; v < g.order(); ++v) {
        const std::vector<int> nb = elements(g.neighbors(v));
        for (std::size_t a = 0; a < nb.size(); ++a) {
            for (std::size_t b = a + 1; b < nb.size(); ++b) {
                const int x = nb[a], y = nb[b];
                if (g.has_edge(x, y)) continue;
                const Mask allowed = g.all_vertices() & ~((g.neighbors(v) | bit(v)) & ~(bit(x) | bit(y)));
                // BFS x -> y inside `allowed`
                std::vector<int> parent(static_cast<std::size_t>(g.order()), -1);
                std::deque<int> queue{x};
                Mask seen = bit(x);
                while (!queue.empty() && !contains(seen, y)) {
                    const int c = queue.front();
                    queue.pop_front();
                    for (int w : elements(g.neighbors(c) & allowed & ~seen)) {
                        // x and y are only allowed as endpoints
                        if (w == x) continue;
                        parent[w] = c;
                        seen |= bit(w);
                        queue.push_back(w);
                    }
                }
                if (!contains(seen, y)) continue;
                std::vector<int> cyc{v};
                std::vector<int> path;
                for (int c = y; c != -1; c = parent[c]) path.push_back(c);
                std::reverse(path.begin(), path.end());
                cyc.insert(cyc.end(), path.begin(), path.end());
                return canonical_cycle(cyc);
            }
        }
    }
    return std::nullopt;
}

inline ChordalityResult is_chordal(const Graph& g) {
    ChordalityResult r;
    std::vector<int> order = mcs_order(g);
    std::reverse(order.begin(), order.end());
    if (is_perfect_elimination_order(g, order)) {
        r.chordal = true;
        r.elimination_order = std::move(order);
        return r;
    }
    auto hole = find_hole(g);
    if (!hole) throw LogicError("MCS order is not perfect but no hole was found");
    r.hole = std::move(*hole);
    return r;
}

inline constexpr std::uint64_t kDefaultHoleCap = 100'000;

/// All chordless cycles of length 4..max_len, canonical and sorted.
inline std::vector<std::vector<int>> holes(const Graph& g, int max_len, std::uint64_t cap = effective_cap(kDefaultHoleCap)) {
    std::vector<std::vector<int>> out;
    std::vector<int> path;
    // path is an induced path starting at its minimum vertex s
    auto grow = [&](auto&& self, Mask on_path, Mask blocked) -> void {
        const int s = path.front();
        const int last = path.back();
        for (int w : elements(g.neighbors(last) & ~on_path)) {
            if (w < s || contains(blocked, w)) continue;
            if (g.has_edge(w, s) && path.size() >= 2) {
                if (path.size() + 1 >= 4 && path[1] < w) {
                    out.push_back(path);
                    out.back().push_back(w);
                    if (out.size() > cap) throw CapExceeded("hole enumeration exceeded cap " + std::to_string(cap));
                }
                continue;
            }
            if (static_cast<int>(path.size()) + 1 >= max_len) continue;
            // w extends the induced path: it must avoid all earlier interior vertices,
            // which `blocked` records as neighbours of path[1..last-1]
            path.push_back(w);
            self(self, on_path | bit(w), blocked | (g.neighbors(last) & ~bit(w)));
            path.pop_back();
        }
    };
    for (int s = 0; s < g.order(); ++s) {
        for (int p1 : elements(g.neighbors(s))) {
            if (p1 < s) continue;
            path = {s, p1};
            grow(grow, bit(s) | bit(p1), 0);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

/// Vertex triples spanning triangles, each sorted, in lexicographic order.
inline std::vector<std::vector<int>> triangles(const Graph& g) {
    std::vector<std::vector<int>> out;
    for (const Edge& e : g.edges()) {
        for (int w : elements(g.neighbors(e.u) & g.neighbors(e.v))) {
            if (w > e.v) out.push_back({e.u, e.v, w});
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

/// Circuit-level chord test: an edge of G outside C joining two vertices
/// met by the edges of C.
inline bool has_circuit_chord(const Network& n, Mask c) {
    const EdgeShape s = edge_shape(n, c);
    for (std::size_t e = 0; e < n.edges().size(); ++e) {
        const int a = GroundSet::element_of_edge(static_cast<int>(e));
        if (contains(c, a)) continue;
        const Edge& ed = n.edges()[e];
        if (contains(s.vertices, ed.u) && contains(s.vertices, ed.v)) return true;
    }
    return false;
}

struct ChordlessCircuit {
    Circuit circuit;
    std::vector<int> source_cycle;  // cycle of Ĝ it came from
    bool chordless = false;         // by the circuit-chord criterion
};

struct ChordlessCircuits {
    std::vector<ChordlessCircuit> circuits;
    /// Holes of Ĝ through two or more added edges (expected to stay empty).
    std::vector<std::vector<int>> multi_added;
};

/// Triangles followed by holes of Ĝ.
inline std::vector<std::vector<int>> closure_cycles(const Network& n) {
    const ClosureGraph cg = closure_graph(n);
    std::vector<std::vector<int>> cycles = triangles(cg.graph);
    for (auto& h : holes(cg.graph, cg.graph.order())) cycles.push_back(std::move(h));
    return cycles;
}

/// Maps the triangles and holes of Ĝ back to circuits: no added edge gives
/// type B, exactly one added edge e gives type A via (Z∖e) ∪ ê.
inline ChordlessCircuits chordless_ab_circuits(const Network& n) {
    GroundSet(n).require_small("chordless circuit mapping");
    const std::vector<std::vector<int>> cycles = closure_cycles(n);
    ChordlessCircuits out;
    for (const auto& cyc : cycles) {
        Mask ground = 0;
        int added = 0;
        for (std::size_t i = 0; i < cyc.size(); ++i) {
            const int a = cyc[i], b = cyc[(i + 1) % cyc.size()];
            if (n.is_boundary(a) && n.is_boundary(b)) {
                ++added;
            } else {
                ground |= bit(GroundSet::element_of_edge(n.graph().edge_index(a, b)));
            }
        }
        if (added >= 2) {
            if (cyc.size() >= 4) out.multi_added.push_back(cyc);
            continue;
        }
        ChordlessCircuit cc;
        cc.source_cycle = cyc;
        cc.circuit.elements = ground;
        if (added == 0) {
            int touched = 0;
            for (int v : cyc) touched += n.is_boundary(v) ? 1 : 0;
            if (touched > 1) continue;
            cc.circuit.type = CircuitType::B;
            cc.circuit.cycle = cyc;
        } else {
            cc.circuit.elements |= bit(kCone);
            cc.circuit.type = CircuitType::A;
            if (auto path = as_crossing(n, ground)) cc.circuit.crossings.push_back(*path);
        }
        cc.chordless = !has_circuit_chord(n, cc.circuit.elements);
        out.circuits.push_back(std::move(cc));
    }
    std::sort(out.circuits.begin(), out.circuits.end(),
              [](const ChordlessCircuit& a, const ChordlessCircuit& b) { return a.circuit < b.circuit; });
    return out;
}

struct QuadraticFast {
    bool quadratic = false;
    bool closure_chordal = false;
    std::vector<int> hole;  // of Ĝ when not chordal
    /// chordless A/B circuit count keyed by size
    std::vector<int> chordless_by_size;
    bool agree() const { return quadratic == closure_chordal; }
};

/// Quadratic iff no chordless type-A/B circuit of size >= 4.  Works on the
/// vertex cycles of Ĝ directly, so the ground set may exceed 64 elements:
/// a cycle Z through at most one added edge gives a circuit of size |Z|,
/// and the circuit has a chord iff G has an edge inside V(Z) off the cycle.
inline QuadraticFast is_quadratic_fast(const Network& n) {
    QuadraticFast q;
    q.chordless_by_size.assign(static_cast<std::size_t>(n.size() + 2), 0);
    q.quadratic = true;
    const Graph& g = n.graph();
    for (const auto& cyc : closure_cycles(n)) {
        int added = 0, touched = 0;
        for (std::size_t i = 0; i < cyc.size(); ++i) {
            if (n.is_boundary(cyc[i]) && n.is_boundary(cyc[(i + 1) % cyc.size()])) ++added;
            touched += n.is_boundary(cyc[i]) ? 1 : 0;
        }
        if (added >= 2 || (added == 0 && touched > 1)) continue;
        const int cycle_edges = static_cast<int>(cyc.size()) - added;
        if (g.induced_size(mask_of(cyc)) != cycle_edges) continue;
        ++q.chordless_by_size[cyc.size()];
        if (cyc.size() >= 4) q.quadratic = false;
    }
    const ChordalityResult ch = is_chordal(closure_graph(n).graph);
    q.closure_chordal = ch.chordal;
    q.hole = ch.hole;
    return q;
}

} // namespace klab

#endif // KLAB_CHORDALITY_HPP

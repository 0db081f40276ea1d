#ifndef KLAB_HYPERSOLVABLE_HPP
#define KLAB_HYPERSOLVABLE_HPP

// Hypersolvability at the graph level (solvable edge-set containments) and
// at the matroid level (closed, complete, solvable containments), both by
// forward search over subsets.

#include <algorithm>
#include <cstdint>
#include <deque>
#include <optional>
#include <vector>

#include "bits.hpp"
#include "errors.hpp"
#include "graph.hpp"
#include "matroid.hpp"
#include "network.hpp"

namespace klab {

enum class StepKind { None, IsolatedEdge, VertexToClique, Generic };

struct SolvableStep {
    Mask source = 0;
    Mask target = 0;
    StepKind kind = StepKind::None;
    int vertex = -1;            // v, for vertex-to-clique
    std::vector<int> clique;    // v₁..v_k
    bool triangle_violation = false;
    bool ok() const { return kind != StepKind::None; }
};

inline constexpr std::uint64_t kDefaultGraphDpCap = 20;
inline constexpr std::uint64_t kDefaultMatroidDpCap = 16;

namespace detail {

inline Mask met_vertices(const Graph& g, Mask edge_set) {
    Mask vs = 0;
    for (int e : elements(edge_set)) vs |= bit(g.edges()[e].u) | bit(g.edges()[e].v);
    return vs;
}

inline bool edge_in(const Graph& g, Mask edge_set, int a, int b) {
    const int e = g.edge_index(a, b);
    return e >= 0 && contains(edge_set, e);
}

/// Condition (a): a triangle with two edges in S and the third in T∖S.
inline bool triangle_with_two_from(const Graph& g, Mask s, Mask added) {
    for (int e : elements(added)) {
        const Edge& ed = g.edges()[e];
        for (int w : elements(g.neighbors(ed.u) & g.neighbors(ed.v))) {
            if (edge_in(g, s, ed.u, w) && edge_in(g, s, ed.v, w)) return true;
        }
    }
    return false;
}

inline bool s_clique(const Graph& g, Mask s, const std::vector<int>& vs) {
    for (std::size_t i = 0; i < vs.size(); ++i)
        for (std::size_t j = i + 1; j < vs.size(); ++j)
            if (!edge_in(g, s, vs[i], vs[j])) return false;
    return true;
}

} // namespace detail

/// Decides whether S ⊂ T (edge masks over g.edges()) is solvable.  Branch 2
/// follows the literal condition: v₁..v_k are met by S and span a clique of
/// S, and T∖S is exactly the set of edges v v_s.
inline SolvableStep graph_solvable_step(const Graph& g, Mask s, Mask t) {
    SolvableStep st;
    st.source = s;
    st.target = t;
    if (!is_subset(s, t) || s == t) return st;
    const Mask added = t & ~s;
    if (detail::triangle_with_two_from(g, s, added)) {
        st.triangle_violation = true;
        return st;
    }
    const Mask met = detail::met_vertices(g, s);
    const std::vector<int> es = elements(added);
    if (es.size() == 1) {
        const Edge& e = g.edges()[es[0]];
        if (!contains(met, e.u) && !contains(met, e.v)) {
            st.kind = StepKind::IsolatedEdge;
            return st;
        }
    }
    // candidate centres: the common vertex of every added edge
    Mask centres = g.all_vertices();
    for (int e : es) centres &= bit(g.edges()[e].u) | bit(g.edges()[e].v);
    for (int v : elements(centres)) {
        std::vector<int> others;
        for (int e : es) others.push_back(g.edges()[e].u == v ? g.edges()[e].v : g.edges()[e].u);
        std::sort(others.begin(), others.end());
        bool ok = true;
        for (int w : others) ok = ok && contains(met, w);
        if (!ok || !detail::s_clique(g, s, others)) continue;
        st.kind = StepKind::VertexToClique;
        st.vertex = v;
        st.clique = others;
        return st;
    }
    return st;
}

struct HypersolvableResult {
    bool hypersolvable = false;
    std::vector<Mask> series;  // composition series, |first| = 1, last = everything
};

/// Search over edge subsets reachable from single edges by solvable steps.
inline HypersolvableResult graph_is_hypersolvable(const Graph& g, std::uint64_t cap = effective_cap(kDefaultGraphDpCap)) {
    const int m = g.size();
    require_cap(static_cast<std::uint64_t>(m), cap, "graph hypersolvability edge count");
    HypersolvableResult r;
    if (m == 0) return r;
    const Mask all = low_mask(m);
    std::vector<std::int64_t> parent(std::size_t{1} << m, -2);  // -2 unseen, -1 root
    std::deque<Mask> queue;
    for (int e = 0; e < m; ++e) {
        parent[bit(e)] = -1;
        queue.push_back(bit(e));
    }
    auto visit = [&](Mask from, Mask to) {
        if (parent[to] != -2) return;
        parent[to] = static_cast<std::int64_t>(from);
        queue.push_back(to);
    };
    while (!queue.empty() && parent[all] == -2) {
        const Mask s = queue.front();
        queue.pop_front();
        const Mask met = detail::met_vertices(g, s);
        for (int e = 0; e < m; ++e) {
            if (contains(s, e)) continue;
            const Edge& ed = g.edges()[e];
            if (!contains(met, ed.u) && !contains(met, ed.v)) visit(s, s | bit(e));
        }
        for (int v = 0; v < g.order(); ++v) {
            std::vector<int> cand;
            for (int w : elements(g.neighbors(v) & met))
                if (!detail::edge_in(g, s, v, w)) cand.push_back(w);
            // enumerate non-empty S-cliques K ⊆ cand
            std::vector<int> chosen;
            auto rec = [&](auto&& self, std::size_t from, Mask added) -> void {
                if (added != 0 && !detail::triangle_with_two_from(g, s, added)) visit(s, s | added);
                for (std::size_t i = from; i < cand.size(); ++i) {
                    bool clique = true;
                    for (int c : chosen) clique = clique && detail::edge_in(g, s, c, cand[i]);
                    if (!clique) continue;
                    chosen.push_back(cand[i]);
                    self(self, i + 1, added | bit(g.edge_index(v, cand[i])));
                    chosen.pop_back();
                }
            };
            rec(rec, 0, 0);
        }
    }
    if (parent[all] == -2) return r;
    r.hypersolvable = true;
    for (std::int64_t cur = static_cast<std::int64_t>(all); cur >= 0; cur = parent[static_cast<std::size_t>(cur)])
        r.series.push_back(static_cast<Mask>(cur));
    std::reverse(r.series.begin(), r.series.end());
    return r;
}

/// Every induced subgraph of a hypersolvable graph should be hypersolvable.
struct InducedClosureReport {
    bool applicable = false;  // g itself hypersolvable
    int checked = 0;
    std::vector<Mask> violations;  // vertex sets
};

inline InducedClosureReport check_induced_closure(const Graph& g, int max_vertices = 10) {
    if (g.order() > max_vertices) throw CapExceeded("induced-subgraph closure check: too many vertices");
    InducedClosureReport r;
    r.applicable = graph_is_hypersolvable(g).hypersolvable;
    if (!r.applicable) return r;
    for (Mask vs = 1; vs <= g.all_vertices(); ++vs) {
        const Graph h = g.induced(vs);
        if (h.size() == 0) continue;
        ++r.checked;
        if (!graph_is_hypersolvable(h).hypersolvable) r.violations.push_back(vs);
        if (vs == g.all_vertices()) break;
    }
    return r;
}

// ---------------------------------------------------------------------------
// Matroid level.

/// dependents[a][b]: elements γ ∉ {a,b} with {a,b,γ} dependent.
struct TripleDependence {
    int k = 0;
    std::vector<Mask> dependents;  // k*k

    Mask of(int a, int b) const { return dependents[static_cast<std::size_t>(a * k + b)]; }
    bool dependent(int a, int b, int c) const { return contains(of(a, b), c); }

    static TripleDependence of(const Representation& r) {
        TripleDependence d;
        d.k = r.k();
        d.dependents.assign(static_cast<std::size_t>(d.k * d.k), 0);
        for (int a = 0; a < d.k; ++a)
            for (int b = a + 1; b < d.k; ++b)
                for (int c = b + 1; c < d.k; ++c) {
                    if (r.rank(bit(a) | bit(b) | bit(c)) < 3) {
                        d.dependents[a * d.k + b] |= bit(c);
                        d.dependents[b * d.k + a] |= bit(c);
                        d.dependents[a * d.k + c] |= bit(b);
                        d.dependents[c * d.k + a] |= bit(b);
                        d.dependents[b * d.k + c] |= bit(a);
                        d.dependents[c * d.k + b] |= bit(a);
                    }
                }
        return d;
    }
};

struct MatroidStep {
    bool closed = false;
    bool complete = false;
    bool solvable = false;
};

/// Elements c for which some pair in X forms a dependent triple with c;
/// a closed containment X ⊂ Y must avoid them.
inline Mask closure_obstructions(const TripleDependence& d, Mask x) {
    Mask out = 0;
    const std::vector<int> xs = elements(x);
    for (std::size_t i = 0; i < xs.size(); ++i)
        for (std::size_t j = i + 1; j < xs.size(); ++j) out |= d.of(xs[i], xs[j]);
    return out & ~x;
}

/// Closed, complete and solvable tests for X ⊂ Y.  Throws LogicError if f
/// is not well defined on a closed containment.
inline MatroidStep matroid_solvable_step(const TripleDependence& d, Mask x, Mask y) {
    MatroidStep st;
    if (!is_subset(x, y) || x == y) return st;
    const Mask added = y & ~x;
    st.closed = (closure_obstructions(d, x) & added) == 0;
    const std::vector<int> as = elements(added);
    const int n = static_cast<int>(as.size());
    std::vector<int> f(static_cast<std::size_t>(n * n), -1);
    st.complete = true;
    for (int i = 0; i < n && st.complete; ++i) {
        for (int j = i + 1; j < n; ++j) {
            const Mask g = d.of(as[i], as[j]) & x;
            if (g == 0) {
                st.complete = false;
                break;
            }
            if (st.closed && popcount(g) != 1) throw LogicError("f(a,b) not unique on a closed containment");
            f[i * n + j] = f[j * n + i] = lowest(g);
        }
    }
    if (!st.closed || !st.complete) return st;
    st.solvable = true;
    for (int i = 0; i < n && st.solvable; ++i)
        for (int j = i + 1; j < n && st.solvable; ++j)
            for (int l = j + 1; l < n; ++l) {
                const int p = f[i * n + j], q = f[i * n + l], r = f[j * n + l];
                if (p == q || p == r || q == r) continue;
                if (!d.dependent(p, q, r)) {
                    st.solvable = false;
                    break;
                }
            }
    return st;
}

/// Search over ground subsets reachable from singletons by solvable steps.
inline HypersolvableResult matroid_is_hypersolvable(const Representation& rep, std::uint64_t cap = effective_cap(kDefaultMatroidDpCap)) {
    const int k = rep.k();
    require_cap(static_cast<std::uint64_t>(k), cap, "matroid hypersolvability ground set");
    HypersolvableResult r;
    if (k == 0) return r;
    const TripleDependence d = TripleDependence::of(rep);
    const Mask all = low_mask(k);
    std::vector<std::int64_t> parent(std::size_t{1} << k, -2);
    std::deque<Mask> queue;
    for (int a = 0; a < k; ++a) {
        parent[bit(a)] = -1;
        queue.push_back(bit(a));
    }
    while (!queue.empty() && parent[all] == -2) {
        const Mask x = queue.front();
        queue.pop_front();
        const Mask allowed = all & ~x & ~closure_obstructions(d, x);
        for (Mask sub = allowed; sub != 0; sub = (sub - 1) & allowed) {
            const Mask y = x | sub;
            if (parent[y] != -2) continue;
            if (!matroid_solvable_step(d, x, y).solvable) continue;
            parent[y] = static_cast<std::int64_t>(x);
            queue.push_back(y);
        }
    }
    if (parent[all] == -2) return r;
    r.hypersolvable = true;
    for (std::int64_t cur = static_cast<std::int64_t>(all); cur >= 0; cur = parent[static_cast<std::size_t>(cur)])
        r.series.push_back(static_cast<Mask>(cur));
    std::reverse(r.series.begin(), r.series.end());
    return r;
}

/// Columns x_i − x_j of the graphic arrangement, in g.edges() order.
inline Representation graphic_representation(const Graph& g) {
    std::vector<std::vector<std::int64_t>> cols;
    for (const Edge& e : g.edges()) {
        std::vector<std::int64_t> c(static_cast<std::size_t>(g.order()), 0);
        c[e.u] = 1;
        c[e.v] = -1;
        cols.push_back(std::move(c));
    }
    return Representation::from_columns(g.order(), std::move(cols));
}

struct HatImplication {
    bool matroid_hypersolvable = false;
    bool closure_hypersolvable = false;
    bool holds() const { return !matroid_hypersolvable || closure_hypersolvable; }
};

/// Cone matroid hypersolvable ⇒ Ĝ hypersolvable.
inline HatImplication check_hat_implication(const Network& n) {
    HatImplication h;
    h.matroid_hypersolvable = matroid_is_hypersolvable(Representation::of(n)).hypersolvable;
    h.closure_hypersolvable = graph_is_hypersolvable(closure_graph(n).graph).hypersolvable;
    return h;
}

} // namespace klab

#endif // KLAB_HYPERSOLVABLE_HPP

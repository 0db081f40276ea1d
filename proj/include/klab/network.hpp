#ifndef KLAB_NETWORK_HPP
#define KLAB_NETWORK_HPP

// Graphs with boundary: the data model behind a Dirichlet arrangement,
// plus the purely graph-theoretic statistics used by the analyses.

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "bits.hpp"
#include "errors.hpp"
#include "graph.hpp"

namespace klab {

/// Unvalidated network description, as read from JSON.
struct RawNetwork {
    std::vector<std::string> vertices;
    std::vector<std::pair<std::string, std::string>> edges;
    std::vector<std::string> boundary;
    std::optional<std::map<std::string, std::int64_t>> u;
};

class Network;
Network validate(const RawNetwork& raw);

/// A finite simple connected graph with an edgeless boundary vertex set
/// (at least two nodes) and an injective integer potential on the boundary.
class Network {
public:
    const std::vector<std::string>& names() const { return names_; }
    const Graph& graph() const { return graph_; }
    int order() const { return graph_.order(); }
    int size() const { return graph_.size(); }
    const std::vector<Edge>& edges() const { return graph_.edges(); }

    Mask boundary() const { return boundary_; }
    Mask interior() const { return graph_.all_vertices() & ~boundary_; }
    bool is_boundary(int v) const { return contains(boundary_, v); }
    /// Boundary nodes in input order.
    const std::vector<int>& boundary_order() const { return boundary_order_; }
    int boundary_count() const { return static_cast<int>(boundary_order_.size()); }
    int interior_count() const { return order() - boundary_count(); }

    /// Potential u(j) of boundary node j.
    std::int64_t potential(int j) const { return potential_.at(static_cast<std::size_t>(j)); }

    /// Same network with a different injective boundary potential.
    Network with_potential(const std::map<int, std::int64_t>& u) const {
        RawNetwork raw = to_raw();
        std::map<std::string, std::int64_t> named;
        for (const auto& [v, val] : u) named[names_[v]] = val;
        raw.u = named;
        return validate(raw);
    }

    RawNetwork to_raw() const {
        RawNetwork raw;
        raw.vertices = names_;
        for (const Edge& e : edges()) raw.edges.emplace_back(names_[e.u], names_[e.v]);
        for (int j : boundary_order_) raw.boundary.push_back(names_[j]);
        std::map<std::string, std::int64_t> u;
        for (int j : boundary_order_) u[names_[j]] = potential(j);
        raw.u = u;
        return raw;
    }

    int vertex_index(const std::string& name) const {
        auto it = std::find(names_.begin(), names_.end(), name);
        return it == names_.end() ? -1 : static_cast<int>(it - names_.begin());
    }

    friend Network validate(const RawNetwork& raw);

private:
    std::vector<std::string> names_;
    Graph graph_;
    Mask boundary_ = 0;
    std::vector<int> boundary_order_;
    std::vector<std::int64_t> potential_;
};

/// Checks every invariant of a network description.  Missing potentials are
/// assigned 1..|boundary| in boundary order.  Throws InputError naming the
/// offending element.
inline Network validate(const RawNetwork& raw) {
    Network n;
    std::map<std::string, int> index;
    for (const std::string& name : raw.vertices) {
        if (!index.emplace(name, static_cast<int>(index.size())).second)
            throw InputError("duplicate vertex: " + name);
    }
    if (raw.vertices.size() > 64) throw InputError("at most 64 vertices are supported");
    n.names_ = raw.vertices;
    n.graph_ = Graph(static_cast<int>(raw.vertices.size()));
    auto lookup = [&](const std::string& name, const char* what) {
        auto it = index.find(name);
        if (it == index.end()) throw InputError(std::string("unknown vertex in ") + what + ": " + name);
        return it->second;
    };
    for (const std::string& b : raw.boundary) {
        const int j = lookup(b, "boundary");
        if (contains(n.boundary_, j)) throw InputError("duplicate boundary node: " + b);
        n.boundary_ |= bit(j);
        n.boundary_order_.push_back(j);
    }
    for (const auto& [a, b] : raw.edges) {
        const int x = lookup(a, "edge");
        const int y = lookup(b, "edge");
        if (x == y) throw InputError("loop at vertex: " + a);
        if (n.graph_.has_edge(x, y)) throw InputError("repeated edge: " + a + "-" + b);
        if (contains(n.boundary_, x) && contains(n.boundary_, y))
            throw InputError("boundary edge present: " + a + "-" + b);
        n.graph_.add_edge(x, y);
    }
    if (n.boundary_order_.size() < 2)
        throw InputError("boundary must contain at least 2 nodes, got " + std::to_string(n.boundary_order_.size()));
    if (!n.graph_.is_connected()) {
        const Mask reach = n.graph_.component(0, n.graph_.all_vertices());
        const int missing = lowest(n.graph_.all_vertices() & ~reach);
        throw InputError("graph is disconnected: vertex " + raw.vertices[missing] + " unreachable from " +
                         raw.vertices[0]);
    }
    n.potential_.assign(raw.vertices.size(), 0);
    if (raw.u) {
        std::map<std::int64_t, std::string> seen;
        for (const auto& [name, val] : *raw.u) {
            const int j = lookup(name, "u");
            if (!contains(n.boundary_, j)) throw InputError("u assigned to interior vertex: " + name);
            auto [it, fresh] = seen.emplace(val, name);
            if (!fresh) throw InputError("u is not injective: " + it->second + " and " + name + " share " + std::to_string(val));
            n.potential_[j] = val;
        }
        for (int j : n.boundary_order_) {
            if (!raw.u->count(raw.vertices[j])) throw InputError("u missing for boundary node: " + raw.vertices[j]);
        }
    } else {
        std::int64_t next = 1;
        for (int j : n.boundary_order_) n.potential_[j] = next++;
    }
    return n;
}

// ---------------------------------------------------------------------------
// JSON: {"vertices": [...], "edges": [[a,b],...], "boundary": [...], "u": {...}}

inline RawNetwork raw_from_json(const nlohmann::json& j) {
    RawNetwork raw;
    try {
        for (const auto& v : j.at("vertices")) raw.vertices.push_back(v.get<std::string>());
        for (const auto& e : j.at("edges")) {
            if (!e.is_array() || e.size() != 2) throw InputError("edge must be a pair of vertex names: " + e.dump());
            raw.edges.emplace_back(e[0].get<std::string>(), e[1].get<std::string>());
        }
        for (const auto& b : j.at("boundary")) raw.boundary.push_back(b.get<std::string>());
        if (j.contains("u") && !j.at("u").is_null()) {
            std::map<std::string, std::int64_t> u;
            for (const auto& [k, v] : j.at("u").items()) u[k] = v.get<std::int64_t>();
            raw.u = std::move(u);
        }
    } catch (const nlohmann::json::exception& ex) {
        throw InputError(std::string("malformed network JSON: ") + ex.what());
    }
    return raw;
}

inline Network network_from_json(const nlohmann::json& j) { return validate(raw_from_json(j)); }

inline nlohmann::json network_to_json(const Network& n) {
    nlohmann::json j;
    j["vertices"] = n.names();
    j["edges"] = nlohmann::json::array();
    for (const Edge& e : n.edges()) j["edges"].push_back({n.names()[e.u], n.names()[e.v]});
    j["boundary"] = nlohmann::json::array();
    nlohmann::json u = nlohmann::json::object();
    for (int b : n.boundary_order()) {
        j["boundary"].push_back(n.names()[b]);
        u[n.names()[b]] = n.potential(b);
    }
    j["u"] = u;
    return j;
}

/// Network from an index-based graph; boundary given as vertex indices.
/// Vertices are named v0, v1, ...
inline Network make_network(const Graph& g, const std::vector<int>& boundary) {
    RawNetwork raw;
    for (int i = 0; i < g.order(); ++i) raw.vertices.push_back("v" + std::to_string(i));
    for (const Edge& e : g.edges()) raw.edges.emplace_back(raw.vertices[e.u], raw.vertices[e.v]);
    for (int b : boundary) raw.boundary.push_back(raw.vertices[b]);
    return validate(raw);
}

// ---------------------------------------------------------------------------
// Closure graph Ĝ: G plus an edge between every pair of boundary nodes.

struct ClosureGraph {
    Graph graph;
    /// Original edges in network order, then added boundary pairs in
    /// lexicographic order of boundary-order position.
    std::vector<Edge> ordered_edges;
    std::vector<bool> added;

    int added_count() const { return static_cast<int>(std::count(added.begin(), added.end(), true)); }
};

inline ClosureGraph closure_graph(const Network& n) {
    ClosureGraph c;
    c.graph = n.graph();
    for (const Edge& e : n.edges()) {
        c.ordered_edges.push_back(e);
        c.added.push_back(false);
    }
    const auto& bo = n.boundary_order();
    for (std::size_t i = 0; i < bo.size(); ++i) {
        for (std::size_t j = i + 1; j < bo.size(); ++j) {
            c.graph.add_edge(bo[i], bo[j]);
            c.ordered_edges.push_back(make_edge(bo[i], bo[j]));
            c.added.push_back(true);
        }
    }
    return c;
}

// ---------------------------------------------------------------------------
// Crossings: simple paths between distinct boundary nodes through interior
// vertices only.

struct Crossing {
    int from = 0;  // boundary endpoints, from < to as vertex indices
    int to = 0;
    std::vector<int> vertices;  // from ... to
    std::vector<int> edges;     // indices into Network::edges(), sorted

    int length() const { return static_cast<int>(edges.size()); }
};

inline constexpr std::uint64_t kDefaultCrossingCap = 1'000'000;

inline std::vector<Crossing> crossings(const Network& n, std::uint64_t cap = effective_cap(kDefaultCrossingCap)) {
    const Graph& g = n.graph();
    const Mask interior = n.interior();
    std::vector<Crossing> out;
    std::vector<int> stack;
    auto emit = [&](int end) {
        Crossing c;
        c.from = stack.front();
        c.to = end;
        c.vertices = stack;
        c.vertices.push_back(end);
        for (std::size_t i = 0; i + 1 < c.vertices.size(); ++i)
            c.edges.push_back(g.edge_index(c.vertices[i], c.vertices[i + 1]));
        std::sort(c.edges.begin(), c.edges.end());
        out.push_back(std::move(c));
        if (out.size() > cap) throw CapExceeded("crossing enumeration exceeded cap " + std::to_string(cap));
    };
    // DFS; `visited` holds interior vertices on the current path.
    auto dfs = [&](auto&& self, int v, Mask visited) -> void {
        for (Mask m = g.neighbors(v); m != 0; m &= m - 1) {
            const int w = lowest(m);
            if (n.is_boundary(w)) {
                if (w > stack.front()) emit(w);
            } else if (!contains(visited, w)) {
                stack.push_back(w);
                self(self, w, visited | bit(w));
                stack.pop_back();
            }
        }
    };
    for (int b : elements(n.boundary())) {
        for (Mask m = g.neighbors(b) & interior; m != 0; m &= m - 1) {
            const int w = lowest(m);
            stack = {b, w};
            dfs(dfs, w, bit(w));
        }
    }
    std::sort(out.begin(), out.end(), [](const Crossing& a, const Crossing& b) {
        return std::tie(a.from, a.to, a.edges) < std::tie(b.from, b.to, b.edges);
    });
    return out;
}

/// Graph on boundary-order positions with {i,j} whenever a crossing joins
/// the i-th and j-th boundary nodes.  Computed from the components of the
/// interior: a crossing exists iff some interior component touches both.
inline Graph crossing_graph(const Network& n) {
    const auto& bo = n.boundary_order();
    const int m = static_cast<int>(bo.size());
    Graph out(m);
    const Graph& g = n.graph();
    Mask left = n.interior();
    while (left != 0) {
        const Mask comp = g.component(lowest(left), n.interior());
        left &= ~comp;
        std::vector<int> touched;
        for (int i = 0; i < m; ++i) {
            if (g.neighbors(bo[i]) & comp) touched.push_back(i);
        }
        for (std::size_t a = 0; a < touched.size(); ++a)
            for (std::size_t b = a + 1; b < touched.size(); ++b) out.add_edge(touched[a], touched[b]);
    }
    return out;
}

/// Exact chromatic number by DSATUR branch and bound, seeded with a greedy
/// clique lower bound.
inline int chromatic_number(const Graph& g) {
    const int n = g.order();
    if (n == 0) return 0;
    if (g.size() == 0) return 1;
    // greedy clique for the lower bound
    int lower = 1;
    for (int v = 0; v < n; ++v) {
        Mask clique = bit(v);
        Mask cand = g.neighbors(v);
        while (cand != 0) {
            int best = lowest(cand);
            for (Mask m = cand; m != 0; m &= m - 1) {
                const int w = lowest(m);
                if (popcount(g.neighbors(w) & cand) > popcount(g.neighbors(best) & cand)) best = w;
            }
            clique |= bit(best);
            cand &= g.neighbors(best);
        }
        lower = std::max(lower, popcount(clique));
    }
    int best = n;
    std::vector<int> color(static_cast<std::size_t>(n), -1);
    auto search = [&](auto&& self, int colored, int used) -> void {
        if (used >= best) return;
        if (colored == n) {
            best = used;
            return;
        }
        // pick uncoloured vertex of maximum saturation, ties by degree
        int pick = -1, pick_sat = -1, pick_deg = -1;
        for (int v = 0; v < n; ++v) {
            if (color[v] >= 0) continue;
            Mask seen = 0;
            for (Mask m = g.neighbors(v); m != 0; m &= m - 1) {
                const int c = color[lowest(m)];
                if (c >= 0) seen |= bit(c);
            }
            const int sat = popcount(seen);
            if (sat > pick_sat || (sat == pick_sat && g.degree(v) > pick_deg)) {
                pick = v;
                pick_sat = sat;
                pick_deg = g.degree(v);
            }
        }
        Mask forbidden = 0;
        for (Mask m = g.neighbors(pick); m != 0; m &= m - 1) {
            const int c = color[lowest(m)];
            if (c >= 0) forbidden |= bit(c);
        }
        for (int c = 0; c <= used; ++c) {
            if (contains(forbidden, c)) continue;
            const int next_used = std::max(used, c + 1);
            if (next_used >= best) continue;
            color[pick] = c;
            self(self, colored + 1, next_used);
            color[pick] = -1;
            if (best == lower) return;
        }
    };
    search(search, 0, 0);
    return best;
}

/// χ(G,∂): chromatic number of the crossing graph.
inline int chi_boundary(const Network& n) { return chromatic_number(crossing_graph(n)); }

/// Network over K̄_m + K_n + W₅ with boundary the K̄_m part.
inline Network family_example(int m, int n) {
    if (m < 2) throw InputError("family_example needs m >= 2");
    if (n < 0) throw InputError("family_example needs n >= 0");
    const Graph g = graphs::join(graphs::join(graphs::edgeless(m), graphs::complete(n)), graphs::wheel5());
    RawNetwork raw;
    for (int i = 0; i < m; ++i) raw.vertices.push_back("b" + std::to_string(i + 1));
    for (int i = 0; i < n; ++i) raw.vertices.push_back("k" + std::to_string(i + 1));
    for (int i = 0; i < 5; ++i) raw.vertices.push_back("w" + std::to_string(i + 1));
    for (const Edge& e : g.edges()) raw.edges.emplace_back(raw.vertices[e.u], raw.vertices[e.v]);
    for (int i = 0; i < m; ++i) raw.boundary.push_back(raw.vertices[i]);
    return validate(raw);
}

/// Some 5-vertex set inducing W₅ (a 4-cycle plus a hub adjacent to all of
/// it), returned hub first; nullopt if none.  Restricted to `allowed`.
inline std::optional<std::vector<int>> find_induced_wheel5(const Graph& g, Mask allowed) {
    const std::vector<int> vs = elements(allowed & g.all_vertices());
    const int n = static_cast<int>(vs.size());
    std::optional<std::vector<int>> found;
    if (n < 5) return found;
    // W₅ has 8 edges, a hub of degree 4 and rim vertices of degree 3 (the
    // complement is a perfect matching on the rim).
    std::vector<int> idx{0, 1, 2, 3, 4};
    while (true) {
        Mask s = 0;
        for (int i : idx) s |= bit(vs[i]);
        if (g.induced_size(s) == 8) {
            int hub = -1, rim = 0;
            for (int i : idx) {
                const int d = popcount(g.neighbors(vs[i]) & s);
                if (d == 4) hub = vs[i];
                rim += d == 3;
            }
            if (hub >= 0 && rim == 4) {
                std::vector<int> w{hub};
                for (int x : elements(s & ~bit(hub))) w.push_back(x);
                return w;
            }
        }
        int i = 4;
        while (i >= 0 && idx[i] == n - 5 + i) --i;
        if (i < 0) break;
        ++idx[i];
        for (int j = i + 1; j < 5; ++j) idx[j] = idx[j - 1] + 1;
    }
    return found;
}

inline std::optional<std::vector<int>> find_induced_wheel5(const Graph& g) {
    return find_induced_wheel5(g, g.all_vertices());
}

/// The four hypotheses of the "not previously classified" criterion.
struct EgCheck {
    int edge_count = 0;
    int chi = 0;
    bool many_edges = false;         // |E| >= 240
    bool chi_at_least_4 = false;     // χ(G,∂) >= 4
    bool triple_boundary = false;    // a vertex adjacent to >= 3 boundary nodes
    bool interior_wheel5 = false;    // G∖∂ has an induced W₅
    std::optional<std::vector<int>> wheel_witness;
    bool verdict = false;
};

inline EgCheck theorem_eg_check(const Network& n) {
    EgCheck r;
    r.edge_count = n.size();
    r.many_edges = r.edge_count >= 240;
    r.chi = chi_boundary(n);
    r.chi_at_least_4 = r.chi >= 4;
    for (int v = 0; v < n.order(); ++v) {
        if (popcount(n.graph().neighbors(v) & n.boundary()) >= 3) r.triple_boundary = true;
    }
    r.wheel_witness = find_induced_wheel5(n.graph(), n.interior());
    r.interior_wheel5 = r.wheel_witness.has_value();
    r.verdict = r.many_edges && r.chi_at_least_4 && r.triple_boundary && r.interior_wheel5;
    return r;
}

} // namespace klab

#endif // KLAB_NETWORK_HPP

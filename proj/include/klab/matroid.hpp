#ifndef KLAB_MATROID_HPP
#define KLAB_MATROID_HPP

// The cone arrangement as a matroid: integer normal vectors, exact rank,
// circuits (two routes), lattice of flats and supersolvability (two routes).

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <unordered_set>
#include <vector>

#include "bits.hpp"
#include "chordality.hpp"
#include "errors.hpp"
#include "ground.hpp"
#include "linalg.hpp"
#include "network.hpp"

namespace klab {

/// Normal vectors of the cone, one column per ground element.  Rows are the
/// interior vertices (in vertex order) followed by x₀.
class Representation {
public:
    static Representation of(const Network& n) {
        Representation r;
        std::vector<int> row_of(static_cast<std::size_t>(n.order()), -1);
        int rows = 0;
        for (int v : elements(n.interior())) row_of[v] = rows++;
        const int x0 = rows++;
        r.rows_ = rows;
        std::vector<std::int64_t> cone(static_cast<std::size_t>(rows), 0);
        cone[x0] = 1;
        r.columns_.push_back(cone);
        for (const Edge& e : n.edges()) {
            std::vector<std::int64_t> col(static_cast<std::size_t>(rows), 0);
            if (n.is_boundary(e.u) || n.is_boundary(e.v)) {
                const int j = n.is_boundary(e.u) ? e.u : e.v;
                const int i = j == e.u ? e.v : e.u;
                col[row_of[i]] = 1;
                col[x0] = -n.potential(j);
            } else {
                col[row_of[e.u]] = 1;
                col[row_of[e.v]] = -1;
            }
            r.columns_.push_back(std::move(col));
        }
        return r;
    }

    static Representation from_columns(int rows, std::vector<std::vector<std::int64_t>> columns) {
        Representation r;
        r.rows_ = rows;
        r.columns_ = std::move(columns);
        return r;
    }

    int rows() const { return rows_; }
    int k() const { return static_cast<int>(columns_.size()); }
    const std::vector<std::int64_t>& column(int a) const { return columns_.at(static_cast<std::size_t>(a)); }

    /// Exact rank over Q of the selected columns.
    int rank(Mask s) const {
        if (s == 0) return 0;
        DenseMatrix<std::int64_t> m;
        for (int a : elements(s)) m.push_back(columns_[a]);  // columns as rows; rank is the same
        return exact_rank(m);
    }

    int full_rank() const { return rank(low_mask(k())); }

private:
    int rows_ = 0;
    std::vector<std::vector<std::int64_t>> columns_;
};

inline int rank(const Representation& r, Mask s) { return r.rank(s); }

/// Rank from graph structure alone: components of (V, S) with no boundary
/// node contribute |Q|-1, others their interior count; x₀ is spanned once
/// ê is present or some component meets two boundary nodes.
inline int combinatorial_rank(const Network& n, Mask s) {
    const Graph& g = n.graph();
    Graph sub(n.order());
    for (int a : elements(s & ~bit(kCone))) {
        const Edge& e = n.edges()[GroundSet::edge_of_element(a)];
        sub.add_edge(e.u, e.v);
    }
    int r = 0;
    bool x0 = contains(s, kCone);
    for (Mask left = g.all_vertices(); left != 0;) {
        const Mask comp = sub.component(lowest(left), g.all_vertices());
        left &= ~comp;
        const int b = popcount(comp & n.boundary());
        const int interior = popcount(comp) - b;
        if (b == 0) r += interior - 1;
        else r += interior;
        if (b >= 2) x0 = true;
    }
    return r + (x0 ? 1 : 0);
}

inline constexpr std::uint64_t kDefaultCircuitCap = 18;

/// All circuits as ground masks in (size, mask) order, by levelwise search:
/// a subset all of whose maximal proper subsets are independent is a
/// circuit iff it is dependent.  `rank_of` decides dependence.
template <typename RankFn>
std::vector<Mask> minimal_dependent_sets(int k, Mask universe, int max_size, RankFn&& rank_of) {
    std::vector<Mask> out;
    std::unordered_set<Mask> prev{0};
    const std::vector<int> univ = elements(universe);
    const int u = static_cast<int>(univ.size());
    for (int m = 1; m <= std::min(max_size, u); ++m) {
        std::unordered_set<Mask> cur;
        for_each_subset_of_size(u, m, [&](Mask local) {
            Mask s = 0;
            for (int i : elements(local)) s |= bit(univ[i]);
            for (Mask t = s; t != 0; t &= t - 1) {
                if (!prev.count(s & ~bit(lowest(t)))) return;
            }
            if (rank_of(s) == m) cur.insert(s);
            else out.push_back(s);
        });
        if (cur.empty()) break;
        prev = std::move(cur);
    }
    (void)k;
    std::sort(out.begin(), out.end(), [](Mask a, Mask b) {
        return popcount(a) != popcount(b) ? popcount(a) < popcount(b) : a < b;
    });
    return out;
}

/// Circuits of the cone matroid found with the linear-algebra rank oracle.
inline std::vector<Circuit> circuits_oracle(const Network& n, std::uint64_t cap = effective_cap(kDefaultCircuitCap)) {
    const GroundSet gs(n);
    require_cap(static_cast<std::uint64_t>(gs.k), cap, "circuit search ground set");
    gs.require_small("circuit search");
    const Representation rep = Representation::of(n);
    const int r = rep.full_rank();
    const auto masks = minimal_dependent_sets(gs.k, gs.all(), r + 1, [&](Mask s) { return rep.rank(s); });
    const auto xs = crossings(n);
    const auto xm = crossing_ground_masks(xs);
    std::vector<Circuit> out;
    for (Mask c : masks) out.push_back(classify_circuit(n, c, xs, xm));
    return out;
}

/// Simple cycles of G meeting at most one boundary node, as ground masks.
inline std::vector<Mask> low_boundary_cycles(const Network& n) {
    const Graph& g = n.graph();
    std::vector<Mask> out;
    std::vector<int> path;
    auto dfs = [&](auto&& self, Mask on_path, int boundary_hits) -> void {
        const int s = path.front();
        const int last = path.back();
        for (int w : elements(g.neighbors(last))) {
            if (w < s) continue;
            if (w == s) {
                if (path.size() >= 3 && path[1] < last) {
                    Mask m = 0;
                    for (std::size_t i = 0; i < path.size(); ++i)
                        m |= bit(GroundSet::element_of_edge(g.edge_index(path[i], path[(i + 1) % path.size()])));
                    out.push_back(m);
                }
                continue;
            }
            if (contains(on_path, w)) continue;
            const int hits = boundary_hits + (n.is_boundary(w) ? 1 : 0);
            if (hits > 1) continue;
            path.push_back(w);
            self(self, on_path | bit(w), hits);
            path.pop_back();
        }
    };
    for (int s = 0; s < g.order(); ++s) {
        path = {s};
        dfs(dfs, bit(s), n.is_boundary(s) ? 1 : 0);
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

struct CombinatorialCircuits {
    std::vector<Circuit> circuits;  // sorted like circuits_oracle
    /// type-C circuits that contain a cycle (not acyclic as literally stated)
    int cyclic_residuals = 0;
};

/// Circuits assembled from graph structure: crossings plus ê (type A),
/// cycles meeting at most one boundary node (type B), and the remaining
/// minimal dependent subsets of E, dependence decided by component counting.
inline CombinatorialCircuits circuits_combinatorial(const Network& n, std::uint64_t cap = effective_cap(kDefaultCircuitCap)) {
    const GroundSet gs(n);
    require_cap(static_cast<std::uint64_t>(gs.k), cap, "circuit search ground set");
    gs.require_small("circuit search");
    const auto xs = crossings(n);
    const auto xm = crossing_ground_masks(xs);
    CombinatorialCircuits out;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        Circuit c;
        c.elements = xm[i] | bit(kCone);
        c.type = CircuitType::A;
        c.crossings.push_back(xs[i].vertices);
        out.circuits.push_back(std::move(c));
    }
    const auto cycles = low_boundary_cycles(n);
    for (Mask m : cycles) out.circuits.push_back(classify_circuit(n, m, xs, xm));
    const int r = n.interior_count() + 1;
    const auto deps = minimal_dependent_sets(gs.k, gs.edges_only(), r + 1, [&](Mask s) { return combinatorial_rank(n, s); });
    for (Mask m : deps) {
        if (std::binary_search(cycles.begin(), cycles.end(), m)) continue;
        Circuit c = classify_circuit(n, m, xs, xm);
        if (c.type == CircuitType::B) throw LogicError("cycle search missed a low-boundary cycle");
        if (c.cyclic_residual) ++out.cyclic_residuals;
        out.circuits.push_back(std::move(c));
    }
    std::sort(out.circuits.begin(), out.circuits.end());
    return out;
}

inline std::vector<Mask> circuit_masks(const std::vector<Circuit>& cs) {
    std::vector<Mask> out;
    out.reserve(cs.size());
    for (const Circuit& c : cs) out.push_back(c.elements);
    return out;
}

/// Elements i with C = C₁ △ C₂ and C₁ ∩ C₂ = {i} for circuits C₁, C₂.
inline Mask abstract_chords(const std::vector<Mask>& circuits, Mask c) {
    std::unordered_set<Mask> all(circuits.begin(), circuits.end());
    Mask out = 0;
    for (Mask c1 : circuits) {
        const Mask outside = c1 & ~c;
        if (popcount(outside) != 1) continue;
        const Mask inside = c1 & c;
        if (inside == 0 || inside == c) continue;
        const Mask c2 = (c & ~inside) | outside;
        if (all.count(c2)) out |= outside;
    }
    return out;
}

// ---------------------------------------------------------------------------
// Lattice of flats.

inline constexpr int kDefaultLatticeCap = 12;

/// Ranks of every subset of a ground set with k <= ~22 elements.
inline std::vector<std::uint8_t> rank_table(const Representation& r) {
    const int k = r.k();
    std::vector<std::uint8_t> t(std::size_t{1} << k, 0);
    for (Mask s = 1; s < (Mask{1} << k); ++s) t[s] = static_cast<std::uint8_t>(r.rank(s));
    return t;
}

class FlatLattice {
public:
    static FlatLattice of(const Representation& r, std::uint64_t cap = effective_cap(kDefaultLatticeCap)) {
        require_cap(static_cast<std::uint64_t>(r.k()), cap, "flat lattice ground set");
        FlatLattice L;
        L.k_ = r.k();
        L.rank_ = rank_table(r);
        std::unordered_set<Mask> seen;
        const Mask all = low_mask(L.k_);
        for (Mask s = 0; s <= all; ++s) {
            seen.insert(L.closure(s));
            if (s == all) break;
        }
        L.flats_.assign(seen.begin(), seen.end());
        std::sort(L.flats_.begin(), L.flats_.end(), [&](Mask a, Mask b) {
            return L.rank_[a] != L.rank_[b] ? L.rank_[a] < L.rank_[b] : a < b;
        });
        for (std::size_t i = 0; i < L.flats_.size(); ++i) L.index_[L.flats_[i]] = static_cast<int>(i);
        L.covers_.resize(L.flats_.size());
        for (std::size_t i = 0; i < L.flats_.size(); ++i) {
            for (std::size_t j = 0; j < L.flats_.size(); ++j) {
                if (L.rank_[L.flats_[j]] == L.rank_[L.flats_[i]] + 1 && is_subset(L.flats_[i], L.flats_[j]))
                    L.covers_[i].push_back(static_cast<int>(j));
            }
        }
        return L;
    }

    int k() const { return k_; }
    const std::vector<Mask>& flats() const { return flats_; }
    int rank(Mask s) const { return rank_[s]; }
    int height() const { return rank_[low_mask(k_)]; }
    Mask bottom() const { return flats_.front(); }
    Mask top() const { return flats_.back(); }
    /// Flats covering flats()[i].
    const std::vector<int>& covers(int i) const { return covers_[static_cast<std::size_t>(i)]; }
    int index(Mask flat) const { return index_.at(flat); }

    Mask closure(Mask s) const {
        Mask c = s;
        for (int a = 0; a < k_; ++a) {
            if (!contains(s, a) && rank_[s | bit(a)] == rank_[s]) c |= bit(a);
        }
        return c;
    }
    Mask meet(Mask x, Mask y) const { return x & y; }
    Mask join(Mask x, Mask y) const { return closure(x | y); }

    int count_of_rank(int r) const {
        return static_cast<int>(std::count_if(flats_.begin(), flats_.end(), [&](Mask f) { return rank_[f] == r; }));
    }

    /// rk X + rk Y = rk(X∧Y) + rk(X∨Y) for every flat Y.
    bool is_modular(Mask x) const {
        for (Mask y : flats_) {
            if (rank_[x] + rank_[y] != rank_[x & y] + rank_[x | y]) return false;
        }
        return true;
    }

private:
    int k_ = 0;
    std::vector<std::uint8_t> rank_;
    std::vector<Mask> flats_;
    std::map<Mask, int> index_;
    std::vector<std::vector<int>> covers_;
};

inline FlatLattice flat_lattice(const Representation& r, std::uint64_t cap = effective_cap(kDefaultLatticeCap)) {
    return FlatLattice::of(r, cap);
}

struct SupersolvableOracle {
    bool supersolvable = false;
    std::vector<Mask> chain;  // maximal chain of modular flats, bottom to top
};

/// Depth-first search for a maximal chain of modular flats.
inline SupersolvableOracle is_supersolvable_oracle(const FlatLattice& L) {
    std::vector<char> modular(L.flats().size());
    for (std::size_t i = 0; i < L.flats().size(); ++i) modular[i] = L.is_modular(L.flats()[i]) ? 1 : 0;
    SupersolvableOracle out;
    std::vector<char> dead(L.flats().size(), 0);
    std::vector<Mask> chain;
    auto dfs = [&](auto&& self, int i) -> bool {
        chain.push_back(L.flats()[i]);
        if (L.flats()[i] == L.top()) return true;
        for (int j : L.covers(i)) {
            if (!modular[j] || dead[j]) continue;
            if (self(self, j)) return true;
            dead[j] = 1;
        }
        chain.pop_back();
        return false;
    };
    out.supersolvable = dfs(dfs, L.index(L.bottom()));
    if (out.supersolvable) out.chain = chain;
    return out;
}

/// Supersolvable iff Ĝ is chordal.
inline bool is_supersolvable_fast(const Network& n) { return is_chordal(closure_graph(n).graph).chordal; }

} // namespace klab

#endif // KLAB_MATROID_HPP

#ifndef KLAB_CORPUS_HPP
#define KLAB_CORPUS_HPP

// Small connected graphs up to isomorphism and their admissible boundary
// sets, for exhaustive sweeps.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <set>
#include <vector>

#include "bits.hpp"
#include "errors.hpp"
#include "graph.hpp"
#include "network.hpp"

namespace klab {

inline constexpr int kMaxCorpusVertices = 7;

/// Packs the upper triangle of the adjacency matrix, relabelled by perm
/// (new vertex i is old vertex perm[i]), into an integer.
inline std::uint64_t adjacency_code(const Graph& g, const std::vector<int>& perm) {
    std::uint64_t code = 0;
    const int n = g.order();
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) code = (code << 1) | (g.has_edge(perm[i], perm[j]) ? 1u : 0u);
    return code;
}

inline Graph graph_from_code(int n, std::uint64_t code) {
    Graph g(n);
    int shift = n * (n - 1) / 2;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if ((code >> --shift) & 1u) g.add_edge(i, j);
    return g;
}

struct CanonicalForm {
    std::uint64_t code = 0;
    std::vector<int> perm;  // relabelling that attains the code
};

/// Largest adjacency code over all relabellings.
inline CanonicalForm canonical_form(const Graph& g) {
    if (g.order() > kMaxCorpusVertices) throw CapExceeded("canonical form: too many vertices");
    std::vector<int> perm(static_cast<std::size_t>(g.order()));
    std::iota(perm.begin(), perm.end(), 0);
    CanonicalForm best{adjacency_code(g, perm), perm};
    while (std::next_permutation(perm.begin(), perm.end())) {
        const std::uint64_t c = adjacency_code(g, perm);
        if (c > best.code) best = {c, perm};
    }
    return best;
}

/// Relabellings that fix g.
inline std::vector<std::vector<int>> automorphisms(const Graph& g) {
    std::vector<int> perm(static_cast<std::size_t>(g.order()));
    std::iota(perm.begin(), perm.end(), 0);
    const std::uint64_t self = adjacency_code(g, perm);
    std::vector<std::vector<int>> out;
    do {
        if (adjacency_code(g, perm) == self) out.push_back(perm);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return out;
}

/// All graphs on n vertices up to isomorphism, as canonical codes, built by
/// attaching a new vertex to every graph on n − 1 vertices.
inline std::vector<std::uint64_t> all_graph_codes(int n) {
    if (n < 1 || n > kMaxCorpusVertices) throw InputError("vertex count must lie in 1..7");
    std::vector<std::uint64_t> layer{0};
    for (int m = 2; m <= n; ++m) {
        std::set<std::uint64_t> next;
        for (std::uint64_t code : layer) {
            const Graph base = graph_from_code(m - 1, code);
            for (Mask nbrs = 0; nbrs < (Mask{1} << (m - 1)); ++nbrs) {
                Graph g(m);
                for (const Edge& e : base.edges()) g.add_edge(e.u, e.v);
                for (int v : elements(nbrs)) g.add_edge(v, m - 1);
                next.insert(canonical_form(g).code);
            }
        }
        layer.assign(next.begin(), next.end());
    }
    return layer;
}

inline std::vector<Graph> connected_graphs(int n) {
    std::vector<Graph> out;
    for (std::uint64_t code : all_graph_codes(n)) {
        Graph g = graph_from_code(n, code);
        if (g.is_connected()) out.push_back(std::move(g));
    }
    return out;
}

struct CorpusInstance {
    Graph graph;            // canonical labelling
    std::uint64_t code = 0; // canonical adjacency code
    Mask boundary = 0;      // least image under automorphisms
    Network network() const {
        return make_network(graph, elements(boundary));
    }
};

/// Every (connected graph, edgeless boundary) pair with |V| in [3, max_vertices]
/// and |∂| in sizes, one per isomorphism class.
inline std::vector<CorpusInstance> corpus(int max_vertices, const std::vector<int>& sizes) {
    if (max_vertices > kMaxCorpusVertices) throw CapExceeded("sweep supports at most 7 vertices");
    std::vector<CorpusInstance> out;
    for (int n = 3; n <= max_vertices; ++n) {
        for (const Graph& g : connected_graphs(n)) {
            const std::uint64_t code = canonical_form(g).code;
            const auto autos = automorphisms(g);
            for (int b : sizes) {
                if (b < 2 || b >= n) continue;
                std::set<Mask> seen;
                for_each_subset_of_size(n, b, [&](Mask s) {
                    for (const Edge& e : g.edges())
                        if (contains(s, e.u) && contains(s, e.v)) return;
                    Mask least = s;
                    for (const auto& p : autos) {
                        Mask img = 0;
                        // vertex i of the relabelled graph is p[i]
                        for (int i = 0; i < n; ++i)
                            if (contains(s, p[i])) img |= bit(i);
                        least = std::min(least, img);
                    }
                    if (seen.insert(least).second) out.push_back({g, code, least});
                });
            }
        }
    }
    return out;
}

} // namespace klab

#endif // KLAB_CORPUS_HPP

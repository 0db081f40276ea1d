#include <catch_amalgamated.hpp>

#include <random>
#include <set>

#include <klab/chordality.hpp>
#include <klab/corpus.hpp>
#include <klab/matroid.hpp>

#include "fixtures.hpp"

using namespace klab;
using namespace fixtures;

namespace {

bool induces_cycle(const Graph& g, Mask s) {
    if (popcount(s) < 3 || g.component(lowest(s), s) != s) return false;
    for (int v : elements(s))
        if (popcount(g.neighbors(v) & s) != 2) return false;
    return true;
}

// Vertex sets of size >= 4 inducing a cycle.
std::set<Mask> hole_sets_brute(const Graph& g) {
    std::set<Mask> out;
    for (Mask s = 0; s < (Mask{1} << g.order()); ++s)
        if (popcount(s) >= 4 && induces_cycle(g, s)) out.insert(s);
    return out;
}

bool is_peo_brute(const Graph& g, const std::vector<int>& order) {
    if (static_cast<int>(order.size()) != g.order()) return false;
    for (std::size_t i = 0; i < order.size(); ++i) {
        Mask later = 0;
        for (std::size_t j = i + 1; j < order.size(); ++j)
            if (g.has_edge(order[i], order[j])) later |= bit(order[j]);
        for (int a : elements(later))
            for (int b : elements(later))
                if (a < b && !g.has_edge(a, b)) return false;
    }
    return true;
}

Graph random_graph(std::mt19937_64& rng, int n, double p) {
    std::bernoulli_distribution coin(p);
    Graph g(n);
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            if (coin(rng)) g.add_edge(a, b);
    return g;
}

void check_graph(const Graph& g) {
    const auto res = is_chordal(g);
    const auto brute = hole_sets_brute(g);
    REQUIRE(res.chordal == brute.empty());
    if (res.chordal) {
        REQUIRE(is_peo_brute(g, res.elimination_order));
    } else {
        REQUIRE(res.hole.size() >= 4);
        REQUIRE(brute.count(mask_of(res.hole)) == 1);
        for (std::size_t i = 0; i < res.hole.size(); ++i)
            REQUIRE(g.has_edge(res.hole[i], res.hole[(i + 1) % res.hole.size()]));
    }
    const auto hs = holes(g, g.order());
    std::set<Mask> found;
    for (const auto& h : hs) {
        REQUIRE(found.insert(mask_of(h)).second);
        REQUIRE(canonical_cycle(h) == h);
    }
    REQUIRE(found == brute);
}

} // namespace

TEST_CASE("chordality examples", "[chordality]") {
    CHECK(is_chordal(graphs::complete(4)).chordal);
    const auto c4 = is_chordal(graphs::cycle(4));
    CHECK_FALSE(c4.chordal);
    CHECK(c4.hole == std::vector<int>{0, 1, 2, 3});

    const Graph closure = closure_graph(c6()).graph;
    const auto r = is_chordal(closure);
    CHECK_FALSE(r.chordal);
    CHECK(r.hole == std::vector<int>{0, 1, 2, 3});  // b1 i1 i2 b2

    CHECK(holes(graphs::cycle(6), 6).size() == 1);
    CHECK(holes(graphs::cycle(6), 6).front().size() == 6);
    CHECK(holes(graphs::complete(4), 4).empty());
    const auto hs = holes(closure, 6);
    REQUIRE(hs.size() == 2);
    CHECK(hs[0].size() == 4);
    CHECK(hs[1].size() == 4);
    CHECK(holes(graphs::cycle(6), 5).empty());  // length bound respected
}

TEST_CASE("chordality and holes against brute force on all small graphs", "[chordality]") {
    for (int n = 1; n <= 7; ++n)
        for (std::uint64_t code : all_graph_codes(n)) check_graph(graph_from_code(n, code));
}

TEST_CASE("chordality and holes on random graphs with eight vertices", "[chordality]") {
    std::mt19937_64 rng(8);
    for (int t = 0; t < 400; ++t) check_graph(random_graph(rng, 8, 0.2 + 0.6 * (t % 5) / 4.0));
}

TEST_CASE("triangles", "[chordality]") {
    CHECK(triangles(graphs::complete(4)).size() == 4);
    CHECK(triangles(graphs::cycle(5)).empty());
    CHECK(triangles(graphs::wheel5()).size() == 4);
}

TEST_CASE("chordless type-A and type-B circuits from the closure graph", "[chordality][circuits]") {
    auto chordless_sizes = [](const Network& n, CircuitType t) {
        std::vector<int> out;
        for (const auto& c : chordless_ab_circuits(n).circuits)
            if (c.chordless && c.circuit.type == t) out.push_back(c.circuit.size());
        return out;
    };
    CHECK(chordless_sizes(c6(), CircuitType::A) == std::vector<int>{4, 4});
    CHECK(chordless_sizes(c6(), CircuitType::B).empty());
    CHECK(chordless_sizes(star3(), CircuitType::A) == std::vector<int>{3, 3, 3});
    CHECK(chordless_sizes(square_with_pendants(), CircuitType::B) == std::vector<int>{4});

    CHECK(is_quadratic_fast(wheatstone()).quadratic);
    CHECK(is_quadratic_fast(star3()).quadratic);
    const auto q = is_quadratic_fast(c6());
    CHECK_FALSE(q.quadratic);
    CHECK(q.chordless_by_size[4] == 2);
    CHECK(q.agree());

    // 246 ground elements: decided on vertex cycles of the closure graph
    const Network family = family_example(4, 14);
    const auto fam = is_quadratic_fast(family);
    CHECK(fam.agree());
    CHECK_FALSE(fam.quadratic);
    CHECK(fam.chordless_by_size[4] == 1);  // the rim of W5
    CHECK_THROWS_AS(chordless_ab_circuits(family), CapExceeded);
}

TEST_CASE("closure-graph circuits are exactly the chordless A/B circuits of the oracle", "[chordality][circuits]") {
    for (const auto& inst : corpus(6, {2, 3})) {
        const Network n = inst.network();
        if (GroundSet(n).k > 14) continue;
        const auto oracle = circuits_oracle(n);
        const auto cm = circuit_masks(oracle);
        std::set<Mask> expected;
        for (const auto& c : oracle) {
            if (c.type != CircuitType::A && c.type != CircuitType::B) continue;
            const bool concrete = has_circuit_chord(n, c.elements);
            REQUIRE(concrete == (abstract_chords(cm, c.elements) != 0));
            if (!concrete) expected.insert(c.elements);
        }
        const auto cc = chordless_ab_circuits(n);
        const std::set<Mask> all(cm.begin(), cm.end());
        std::set<Mask> got;
        std::vector<int> by_size(static_cast<std::size_t>(n.size() + 2), 0);
        for (const auto& c : cc.circuits) {
            REQUIRE(all.count(c.circuit.elements) == 1);
            if (c.chordless) {
                got.insert(c.circuit.elements);
                ++by_size[c.circuit.size()];
            }
        }
        REQUIRE(got == expected);
        CHECK(cc.multi_added.empty());
        const auto q = is_quadratic_fast(n);
        REQUIRE(q.agree());
        REQUIRE(q.chordless_by_size == by_size);
    }
}

#include <catch_amalgamated.hpp>

#include <random>

#include <klab/corpus.hpp>
#include <klab/exterior.hpp>
#include <klab/matroid.hpp>

#include "fixtures.hpp"

using namespace klab;
using namespace fixtures;
using E = ExteriorElement;

namespace {

E random_element(std::mt19937_64& rng, int k, int terms) {
    std::uniform_int_distribution<int> coef(-5, 5);
    E x;
    for (int t = 0; t < terms; ++t) x.add_term(rng() & low_mask(k), Rational(coef(rng)));
    return x;
}

E random_homogeneous(std::mt19937_64& rng, int k, int p, int terms) {
    std::uniform_int_distribution<int> coef(-5, 5);
    E x;
    for (int t = 0; t < terms; ++t) {
        Mask m = 0;
        while (popcount(m) < p) m |= bit(static_cast<int>(rng() % static_cast<unsigned>(k)));
        x.add_term(m, Rational(coef(rng)));
    }
    return x;
}

E d_of(Mask c) {
    return E::monomial(c).boundary();
}

// dim I^p from the spanning set {e_S ∧ ∂e_C : |S| + |C| - 1 = p}, ranked by
// rational elimination over the coordinate vectors.
std::uint64_t ideal_dim_brute(int k, const std::vector<Mask>& circuits, int p) {
    std::vector<std::vector<Rational>> rows;
    std::vector<Mask> basis;
    for (Mask s = 0; s < (Mask{1} << k); ++s)
        if (popcount(s) == p) basis.push_back(s);
    for (Mask c : circuits) {
        const int extra = p - (popcount(c) - 1);
        if (extra < 0) continue;
        const E dc = d_of(c);
        for (Mask s = 0; s < (Mask{1} << k); ++s) {
            if (popcount(s) != extra) continue;
            const E prod = E::monomial(s) * dc;
            if (prod.is_zero()) continue;
            std::vector<Rational> row;
            for (Mask b : basis) row.push_back(prod.coefficient(b));
            rows.push_back(std::move(row));
        }
    }
    std::uint64_t r = 0;
    const std::size_t cols = basis.size();
    for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
        std::size_t piv = r;
        while (piv < rows.size() && rows[piv][c] == 0) ++piv;
        if (piv == rows.size()) continue;
        std::swap(rows[r], rows[piv]);
        for (std::size_t i = r + 1; i < rows.size(); ++i) {
            if (rows[i][c] == 0) continue;
            const Rational f = rows[i][c] / rows[r][c];
            for (std::size_t j = c; j < cols; ++j) rows[i][j] -= f * rows[r][j];
        }
        ++r;
    }
    return r;
}

} // namespace

TEST_CASE("wedge product basics", "[exterior]") {
    const E e1 = E::gen(1), e2 = E::gen(2), e3 = E::gen(3);
    CHECK(e1 * e2 == E::monomial(bit(1) | bit(2)));
    CHECK(e2 * e1 == E::monomial(bit(1) | bit(2), Rational(-1)));
    CHECK((e1 * e1).is_zero());
    CHECK((e1 + e2) * e3 == E::monomial(bit(1) | bit(3)) + E::monomial(bit(2) | bit(3)));
    CHECK(E::product_of({3, 1, 2}) == E::monomial(bit(1) | bit(2) | bit(3)));
    CHECK(E::product_of({2, 1, 3}) == -E::monomial(bit(1) | bit(2) | bit(3)));
    CHECK(E::unit().boundary().is_zero());
    CHECK(E::monomial(0b111).boundary() == E::monomial(0b110) - E::monomial(0b101) + E::monomial(0b011));
}

TEST_CASE("boundary squares to zero and is a graded derivation", "[exterior][property]") {
    std::mt19937_64 rng(20261014);
    int checked = 0;
    for (int t = 0; t < 1200; ++t) {
        const int k = 3 + static_cast<int>(rng() % 8);
        const E x = random_element(rng, k, 1 + static_cast<int>(rng() % 6));
        REQUIRE(x.boundary().boundary().is_zero());
        const int p = static_cast<int>(rng() % static_cast<unsigned>(k + 1));
        const E a = random_homogeneous(rng, k, p, 1 + static_cast<int>(rng() % 4));
        const E b = random_element(rng, k, 1 + static_cast<int>(rng() % 4));
        const Rational sign = (p % 2 == 0) ? Rational(1) : Rational(-1);
        REQUIRE((a * b).boundary() == a.boundary() * b + sign * (a * b.boundary()));
        ++checked;
    }
    CHECK(checked >= 1000);
}

TEST_CASE("product is associative and graded commutative", "[exterior][property]") {
    std::mt19937_64 rng(3);
    for (int t = 0; t < 300; ++t) {
        const int k = 6;
        const int p = static_cast<int>(rng() % 4), q = static_cast<int>(rng() % 4);
        const E a = random_homogeneous(rng, k, p, 3);
        const E b = random_homogeneous(rng, k, q, 3);
        const E c = random_element(rng, k, 3);
        REQUIRE((a * b) * c == a * (b * c));
        const Rational s = (p * q) % 2 == 0 ? Rational(1) : Rational(-1);
        REQUIRE(a * b == s * (b * a));
    }
}

TEST_CASE("ideal dimensions of examples", "[exterior][ideal]") {
    SECTION("wheatstone") {
        const auto cs = circuit_masks(circuits_oracle(wheatstone()));
        const auto prof = ideal_profile(6, cs, 4);
        CHECK(prof.ideal == std::vector<std::uint64_t>{0, 0, 4, 14, 15});
        const auto gens = minimal_generator_counts(prof);
        REQUIRE(gens.size() == 1);
        CHECK(gens.begin()->first == 2);
        CHECK(is_quadratic_oracle(gens));
    }
    SECTION("star3") {
        const auto cs = circuit_masks(circuits_oracle(star3()));
        CHECK(ideal_dimension(4, cs, 2) == 3);
        CHECK(ideal_dimension(4, cs, 0) == 0);
        CHECK(ideal_dimension(4, cs, 1) == 0);
        CHECK(minimal_generator_counts(4, cs, 3) == std::map<int, std::uint64_t>{{2, 3}});
    }
    SECTION("c4 with opposite boundary") {
        const auto cs = circuit_masks(circuits_oracle(c4()));
        CHECK(ideal_dimension(5, cs, 2) == 2);
    }
    SECTION("c6 with opposite boundary") {
        const auto cs = circuit_masks(circuits_oracle(c6()));
        CHECK(minimal_generator_counts(7, cs, 5) == std::map<int, std::uint64_t>{{3, 2}});
        CHECK_FALSE(is_quadratic_oracle(7, cs, 5));
    }
    SECTION("interior square with two pendants") {
        const auto cs = circuit_masks(circuits_oracle(square_with_pendants()));
        const auto gens = minimal_generator_counts(7, cs, 5);
        CHECK(gens.count(3) == 1);
        CHECK_FALSE(is_quadratic_oracle(gens));
    }
}

TEST_CASE("ideal dimensions match a direct spanning-set computation", "[exterior][ideal]") {
    for (const auto& inst : corpus(5, {2, 3})) {
        const Network n = inst.network();
        const int k = GroundSet(n).k;
        if (k > 8) continue;
        const auto cs = circuit_masks(circuits_oracle(n));
        const int top = degree_cap(k, n.interior_count() + 1);
        const auto prof = ideal_profile(k, cs, top);
        for (int p = 0; p <= top; ++p) REQUIRE(prof.ideal[p] == ideal_dim_brute(k, cs, p));
        // the algebra vanishes above the rank
        CHECK(prof.ideal[top] == binomial(k, top));
    }
}

TEST_CASE("closure dimensions bracket the ideal", "[exterior][ideal]") {
    const auto cs = circuit_masks(circuits_oracle(c6()));
    const auto full = closure_dimensions(7, cs, 5, 5);
    const auto quad = closure_dimensions(7, cs, 2, 5);
    for (int p = 0; p <= 5; ++p) CHECK(quad[p] <= full[p]);
    CHECK(quad[3] == 0);
    CHECK(full[3] == 2);
}

#include <catch_amalgamated.hpp>

#include <klab/identities.hpp>

using namespace klab;

TEST_CASE("junction identity", "[identities]") {
    const auto spokes = junction_identity(1, 1, 1);
    CHECK(spokes.literal);
    CHECK(spokes.circuits_ok);
    int cases = 0;
    for (int a1 = 1; a1 <= 4; ++a1)
        for (int a2 = 1; a2 <= 4; ++a2)
            for (int a3 = 1; a3 <= 4; ++a3) {
                const auto c = junction_identity(a1, a2, a3);
                INFO(c.to_string());
                CHECK(c.literal);
                CHECK(c.circuits_ok);
                ++cases;
            }
    CHECK(cases == 64);
}

TEST_CASE("disjoint crossings identity", "[identities]") {
    // C4 with opposite boundary nodes: two crossings of length 2 sharing both ends
    const auto c4 = disjoint_crossings_identity(2, 2, 2);
    CHECK(c4.literal);
    CHECK(c4.corrected);
    for (int shared = 0; shared <= 2; ++shared)
        for (int b1 = 2; b1 <= 4; ++b1)
            for (int b2 = 2; b2 <= 4; ++b2) {
                const auto c = disjoint_crossings_identity(b1, b2, shared);
                INFO(c.to_string());
                CHECK(c.circuits_ok);
                CHECK(c.corrected);
                // ê placed after X₂ costs (−1)^{|X₂|}
                CHECK(c.literal == (b2 % 2 == 0));
            }
}

TEST_CASE("chorded cycle identity", "[identities]") {
    for (int a1 = 2; a1 <= 5; ++a1)
        for (int a2 = 2; a2 <= 5; ++a2) {
            const auto c = chorded_cycle_identity(a1, a2);
            INFO(c.to_string());
            CHECK(c.literal);
            CHECK(c.circuits_ok);
        }
}

TEST_CASE("chorded crossing identity", "[identities]") {
    for (int b1 = 2; b1 <= 4; ++b1)
        for (int b2 = 1; b2 <= 4; ++b2)
            for (int left = 0; left <= b2; ++left) {
                const auto c = chorded_crossing_identity(b1, b2, left);
                INFO(c.to_string());
                CHECK(c.circuits_ok);
                CHECK(c.corrected);
                CHECK_FALSE(c.literal);
            }
}

TEST_CASE("identity summary", "[identities]") {
    const auto s = verify_circuit_identities(4);
    CHECK(s.count(IdentityFamily::Junction) == 64);
    CHECK(s.count(IdentityFamily::DisjointCrossings) == 27);
    CHECK(s.count(IdentityFamily::ChordedCycle) == 9);
    CHECK(s.count(IdentityFamily::ChordedCrossing) == 42);
    CHECK(s.literal_failures(IdentityFamily::Junction) == 0);
    CHECK(s.literal_failures(IdentityFamily::DisjointCrossings) == 9);
    CHECK(s.literal_failures(IdentityFamily::ChordedCycle) == 0);
    CHECK(s.literal_failures(IdentityFamily::ChordedCrossing) == 42);
    for (auto f : {IdentityFamily::Junction, IdentityFamily::DisjointCrossings, IdentityFamily::ChordedCycle,
                   IdentityFamily::ChordedCrossing})
        CHECK(s.corrected_failures(f) == 0);
    CHECK(s.circuit_failures() == 0);
    CHECK(junction_identity(1, 2, 3).to_string() == "junction(1,2,3;0)");
}

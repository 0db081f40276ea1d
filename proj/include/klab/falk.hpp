#ifndef KLAB_FALK_HPP
#define KLAB_FALK_HPP

// The Falk invariant φ₃ of the cone: pattern counts and the nullity of the
// multiplication map F¹ ⊗ I² → F³.

#include <cstdint>
#include <set>
#include <vector>

#include "bits.hpp"
#include "exterior.hpp"
#include "ground.hpp"
#include "linalg.hpp"
#include "network.hpp"

namespace klab {

struct FalkCounts {
    std::uint64_t short_crossings = 0;    // κ₁
    std::uint64_t wheatstone_bridges = 0; // κ₂
    std::uint64_t triangles = 0;          // κ₃
    std::uint64_t k4s = 0;                // κ₄
    std::uint64_t bridge_triangles = 0;   // μ
    /// interior vertex with three chosen boundary neighbours; each one makes
    /// {ê, e₁, e₂, e₃} a rank-2 flat of size 4
    std::uint64_t boundary_claws = 0;
};

inline FalkCounts falk_counts(const Network& n) {
    const Graph& g = n.graph();
    FalkCounts c;
    const std::vector<int> bd = elements(n.boundary());
    const std::vector<int> in = elements(n.interior());
    // short crossings b - i - b'
    for (int i : in) {
        const int d = popcount(g.neighbors(i) & n.boundary());
        c.short_crossings += binomial(d, 2);
        c.boundary_claws += binomial(d, 3);
    }
    // bridges: boundary pair {b,b'} and adjacent interior pair {i,i'} with all four cross edges
    std::set<Mask> bridge_tris;
    for (std::size_t x = 0; x < bd.size(); ++x) {
        for (std::size_t y = x + 1; y < bd.size(); ++y) {
            const Mask common = g.neighbors(bd[x]) & g.neighbors(bd[y]) & n.interior();
            for (int i : elements(common)) {
                for (int j : elements(common & g.neighbors(i))) {
                    if (j <= i) continue;
                    ++c.wheatstone_bridges;
                    bridge_tris.insert(bit(bd[x]) | bit(i) | bit(j));
                    bridge_tris.insert(bit(bd[y]) | bit(i) | bit(j));
                }
            }
        }
    }
    c.bridge_triangles = bridge_tris.size();
    for (const Edge& e : g.edges()) {
        const Mask common = g.neighbors(e.u) & g.neighbors(e.v);
        for (int w : elements(common)) {
            if (w <= e.v) continue;
            ++c.triangles;
            for (int z : elements(common & g.neighbors(w)))
                if (z > w) ++c.k4s;
        }
    }
    return c;
}

/// 2(κ₁ + κ₂ + κ₃ + κ₄).
inline std::uint64_t phi3_formula(const FalkCounts& c) {
    return 2 * (c.short_crossings + c.wheatstone_bridges + c.triangles + c.k4s);
}

/// The same sum with boundary claws added.  Not asserted anywhere; tracked
/// against the nullity in sweeps.
inline std::uint64_t phi3_formula_with_claws(const FalkCounts& c) {
    return phi3_formula(c) + 2 * c.boundary_claws;
}

namespace detail {
template <typename Int>
std::vector<SparseRow<Int>> degree_two_ideal_basis(const std::vector<Mask>& circuits) {
    RowEchelon<Int> ech;
    for (Mask c : circuits)
        if (popcount(c) == 3) ech.insert(boundary_row<Int>(c));
    return ech.basis();
}
} // namespace detail

struct Phi3Nullity {
    std::uint64_t domain = 0;  // k · dim I²
    std::uint64_t image = 0;   // rank of the multiplication map
    std::uint64_t nullity() const { return domain - image; }
};

/// Nullity of a ⊗ b ↦ ab from F¹ ⊗ I² to F³, using a basis of I².
inline Phi3Nullity phi3_nullity(int k, const std::vector<Mask>& circuits) {
    if (k > 64) throw CapExceeded("exterior algebra supports at most 64 generators");
    return with_exact_integers([&]<typename Int>() {
        const auto basis = detail::degree_two_ideal_basis<Int>(circuits);
        RowEchelon<Int> image;
        for (int a = 0; a < k; ++a)
            for (const auto& b : basis) image.insert(left_multiply(a, b));
        Phi3Nullity r;
        r.domain = static_cast<std::uint64_t>(k) * basis.size();
        r.image = image.rank();
        return r;
    });
}

struct DimA2Check {
    std::uint64_t lhs = 0;  // C(k,2) - dim I², from exact rank
    std::uint64_t rhs = 0;  // C(k,2) - κ₁ - κ₃
    bool equal() const { return lhs == rhs; }
};

inline DimA2Check dim_a2_check(const Network& n, const std::vector<Mask>& circuits) {
    const int k = n.size() + 1;
    const FalkCounts c = falk_counts(n);
    DimA2Check r;
    r.lhs = binomial(k, 2) - ideal_dimension(k, circuits, 2);
    r.rhs = binomial(k, 2) - c.short_crossings - c.triangles;
    return r;
}

/// 2·C(k+1,3) − k·dim A² + D for the candidate readings of D.
struct FalkRankIdentity {
    struct Reading {
        const char* name;
        std::uint64_t term = 0;
        std::int64_t value = 0;
        bool matches = false;
    };
    std::uint64_t phi3 = 0;
    std::vector<Reading> readings;
};

inline FalkRankIdentity falk_rank_identity(int k, const std::vector<Mask>& circuits, std::uint64_t phi3) {
    FalkRankIdentity r;
    r.phi3 = phi3;
    const auto full = closure_dimensions(k, circuits, 3, 3);   // I_3 = I through degree 3
    const auto quad = closure_dimensions(k, circuits, 2, 3);   // I_2
    const std::uint64_t a2 = binomial(k, 2) - full[2];
    const std::int64_t base = 2 * static_cast<std::int64_t>(binomial(k + 1, 3)) - static_cast<std::int64_t>(k) * static_cast<std::int64_t>(a2);
    auto add = [&](const char* name, std::uint64_t term) {
        FalkRankIdentity::Reading rd{name, term, base + static_cast<std::int64_t>(term), false};
        rd.matches = rd.value == static_cast<std::int64_t>(phi3);
        r.readings.push_back(rd);
    };
    add("A_3 degree 2", binomial(k, 2) - full[2]);
    add("A_3 degree 3", binomial(k, 3) - full[3]);
    add("A_2 degree 3", binomial(k, 3) - quad[3]);
    return r;
}

} // namespace klab

#endif // KLAB_FALK_HPP

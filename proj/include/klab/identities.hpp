#ifndef KLAB_IDENTITIES_HPP
#define KLAB_IDENTITIES_HPP

// Explicit exterior-algebra identities that express ∂(C) for a
// non-minimal circuit C through boundaries of smaller circuits.  Each
// identity is evaluated on concrete networks built from paths of chosen
// lengths; the network also certifies that every set involved is a
// circuit of the cone matroid.
//
// Products are taken in the order written (a path P is the wedge of its
// edges along the path).  Two displayed identities only hold up to a
// parity-dependent sign; for those a sign-corrected form is evaluated next
// to the literal one.

#include <string>
#include <utility>
#include <vector>

#include "exterior.hpp"
#include "ground.hpp"
#include "matroid.hpp"
#include "network.hpp"

namespace klab {

enum class IdentityFamily {
    Junction,          // three paths meeting at an interior vertex
    DisjointCrossings, // two crossings with no common interior vertex
    ChordedCycle,      // cycle of G split by a chord
    ChordedCrossing,   // crossing split by a chord into a cycle and a crossing
};

inline const char* to_string(IdentityFamily f) {
    switch (f) {
    case IdentityFamily::Junction: return "junction";
    case IdentityFamily::DisjointCrossings: return "disjoint-crossings";
    case IdentityFamily::ChordedCycle: return "chorded-cycle";
    case IdentityFamily::ChordedCrossing: return "chorded-crossing";
    }
    return "?";
}

struct IdentityCase {
    IdentityFamily family{};
    std::vector<int> lengths;  // path or crossing lengths
    int variant = 0;           // shared boundary nodes, or chord placement
    bool literal = false;      // identity exactly as displayed
    bool corrected = false;    // sign-corrected form
    bool circuits_ok = false;  // every set used is a circuit of the network
    std::string to_string() const {
        std::string s = std::string(klab::to_string(family)) + "(";
        for (std::size_t i = 0; i < lengths.size(); ++i) s += (i ? "," : "") + std::to_string(lengths[i]);
        return s + ";" + std::to_string(variant) + ")";
    }
};

namespace detail {

/// Builds small networks out of named paths.
class PathBuilder {
public:
    void vertex(const std::string& v, bool boundary) {
        raw_.vertices.push_back(v);
        if (boundary) raw_.boundary.push_back(v);
    }
    /// Adds a path of `len` edges from a to b through fresh interior vertices
    /// and returns its edges in path order.
    std::vector<std::pair<std::string, std::string>> path(const std::string& a, const std::string& b, int len) {
        std::vector<std::pair<std::string, std::string>> out;
        std::string prev = a;
        for (int i = 1; i < len; ++i) {
            std::string w = "w" + std::to_string(fresh_++);
            raw_.vertices.push_back(w);
            out.emplace_back(prev, w);
            prev = w;
        }
        out.emplace_back(prev, b);
        for (const auto& e : out) raw_.edges.push_back(e);
        return out;
    }
    Network build() const { return validate(raw_); }

private:
    RawNetwork raw_;
    int fresh_ = 0;
};

using NamedPath = std::vector<std::pair<std::string, std::string>>;

inline std::vector<int> ground_sequence(const Network& n, const NamedPath& p) {
    std::vector<int> out;
    for (const auto& [a, b] : p) out.push_back(n.graph().edge_index(n.vertex_index(a), n.vertex_index(b)) + 1);
    return out;
}

inline std::vector<int> concat(std::vector<int> a, const std::vector<int>& b) {
    a.insert(a.end(), b.begin(), b.end());
    return a;
}

inline std::vector<int> cone_then(const std::vector<int>& s) { return concat({kCone}, s); }

inline ExteriorElement prod(const std::vector<int>& s) { return ExteriorElement::product_of(s); }
inline ExteriorElement d(const std::vector<int>& s) { return prod(s).boundary(); }
inline Rational sgn(int e) { return Rational(e % 2 == 0 ? 1 : -1); }

inline bool is_circuit(const Representation& r, const std::vector<int>& s) {
    const Mask m = mask_of(s);
    const int sz = popcount(m);
    if (r.rank(m) != sz - 1) return false;
    for (int e : s)
        if (r.rank(m & ~bit(e)) != sz - 1) return false;
    return true;
}

inline bool all_circuits(const Network& n, const std::vector<std::vector<int>>& sets) {
    const Representation r = Representation::of(n);
    for (const auto& s : sets)
        if (!is_circuit(r, s)) return false;
    return true;
}

} // namespace detail

/// Three paths P₁,P₂,P₃ from an interior junction to boundary nodes b₁,b₂,b₃;
/// C = P₁P₂P₃ and X₁ = P₂P₃, X₂ = P₁P₃, X₃ = P₁P₂.
inline IdentityCase junction_identity(int a1, int a2, int a3) {
    using namespace detail;
    PathBuilder pb;
    pb.vertex("c", false);
    for (const char* b : {"b1", "b2", "b3"}) pb.vertex(b, true);
    const NamedPath q1 = pb.path("c", "b1", a1), q2 = pb.path("c", "b2", a2), q3 = pb.path("c", "b3", a3);
    const Network n = pb.build();
    const auto p1 = ground_sequence(n, q1), p2 = ground_sequence(n, q2), p3 = ground_sequence(n, q3);
    const auto x1 = concat(p2, p3), x2 = concat(p1, p3), x3 = concat(p1, p2);
    const auto c = concat(p1, x1);

    IdentityCase r{IdentityFamily::Junction, {a1, a2, a3}, 0};
    const ExteriorElement lhs = d(c);
    const ExteriorElement rhs = d(p1) * d(cone_then(x1)) + sgn(a1 * a2) * (d(p2) * d(cone_then(x2))) +
                                sgn((a1 + a2) * a3) * (d(p3) * d(cone_then(x3)));
    r.literal = r.corrected = (lhs == rhs);
    r.circuits_ok = all_circuits(n, {c, cone_then(x1), cone_then(x2), cone_then(x3)});
    return r;
}

/// Crossings X₁, X₂ of lengths b₁, b₂ ≥ 2 sharing `shared` ∈ {0,1,2}
/// boundary endpoints and no interior vertex; C = X₁X₂.  With no shared
/// endpoint a separate path joins the two crossings.
inline IdentityCase disjoint_crossings_identity(int b1, int b2, int shared) {
    using namespace detail;
    PathBuilder pb;
    const int nb = 4 - shared;
    for (int j = 1; j <= nb; ++j) pb.vertex("b" + std::to_string(j), true);
    const NamedPath q1 = pb.path("b1", "b2", b1);
    const NamedPath q2 = shared == 2 ? pb.path("b1", "b2", b2) : shared == 1 ? pb.path("b1", "b3", b2) : pb.path("b3", "b4", b2);
    if (shared == 0) pb.path("b2", "b3", 2);  // keeps the network connected
    const Network n = pb.build();
    const auto x1 = ground_sequence(n, q1), x2 = ground_sequence(n, q2);
    const auto c = concat(x1, x2);

    IdentityCase r{IdentityFamily::DisjointCrossings, {b1, b2}, shared};
    const ExteriorElement lhs = d(c);
    // ∂(X₁ê)∂(X₂) + ∂(X₁)∂(X₂ê)
    const ExteriorElement literal = d(concat(x1, {kCone})) * d(x2) + d(x1) * d(concat(x2, {kCone}));
    // ∂(X₁ê)∂(X₂) + ∂(X₁)∂(êX₂)
    const ExteriorElement corrected = d(concat(x1, {kCone})) * d(x2) + d(x1) * d(cone_then(x2));
    r.literal = (lhs == literal);
    r.corrected = (lhs == corrected);
    r.circuits_ok = all_circuits(n, {c, cone_then(x1), cone_then(x2)});
    return r;
}

/// A cycle C = P₁P₂ of interior vertices split by a chord i, with P₁∪i and
/// P₂∪i cycles.  Two pendant boundary nodes keep the network valid.
inline IdentityCase chorded_cycle_identity(int a1, int a2) {
    using namespace detail;
    PathBuilder pb;
    pb.vertex("s", false);
    pb.vertex("t", false);
    pb.vertex("b1", true);
    pb.vertex("b2", true);
    const NamedPath q1 = pb.path("s", "t", a1), q2 = pb.path("t", "s", a2);
    const NamedPath qi = pb.path("s", "t", 1);
    pb.path("s", "b1", 1);
    pb.path("s", "b2", 1);
    const Network n = pb.build();
    const auto p1 = ground_sequence(n, q1), p2 = ground_sequence(n, q2), i = ground_sequence(n, qi);
    const auto c = concat(p1, p2);

    IdentityCase r{IdentityFamily::ChordedCycle, {a1, a2}, 0};
    const ExteriorElement lhs = d(c);
    const ExteriorElement rhs = d(p1) * d(concat(i, p2)) + sgn(a1 * a2) * (d(p2) * d(concat(i, p1)));
    r.literal = r.corrected = (lhs == rhs);
    r.circuits_ok = all_circuits(n, {c, concat(i, p1), concat(i, p2)});
    return r;
}

/// A crossing X = X₁X₂ from b₁ to b₂ with a chord i such that X₁∪i is a
/// cycle (|X₁| = b₁ ≥ 2) and X₂∪i a crossing (|X₂| = b₂ ≥ 1).  `left` edges
/// of X₂ run from b₁ to the chord, the remaining b₂ − left from it to b₂.
inline IdentityCase chorded_crossing_identity(int b1, int b2, int left) {
    using namespace detail;
    PathBuilder pb;
    pb.vertex("b1", true);
    pb.vertex("b2", true);
    const std::string s = left == 0 ? "b1" : "s";
    const std::string t = left == b2 ? "b2" : "t";
    if (s == "s") pb.vertex(s, false);
    if (t == "t") pb.vertex(t, false);
    NamedPath ql, qr;
    if (left > 0) ql = pb.path("b1", s, left);
    const NamedPath q1 = pb.path(s, t, b1);
    if (left < b2) qr = pb.path(t, "b2", b2 - left);
    const NamedPath qi = pb.path(s, t, 1);
    const Network n = pb.build();
    const auto x1 = ground_sequence(n, q1), i = ground_sequence(n, qi);
    const auto x2 = concat(ground_sequence(n, ql), ground_sequence(n, qr));
    const auto c = cone_then(concat(x1, x2));

    IdentityCase r{IdentityFamily::ChordedCrossing, {b1, b2}, left};
    const ExteriorElement lhs = d(c);
    const ExteriorElement cone = ExteriorElement::gen(kCone);
    const ExteriorElement left_factor = d(x1) * d(cone_then(concat(i, x2)));
    const ExteriorElement literal = left_factor + (cone * d(x2) + sgn(b2) * prod(x2)) * d(concat(i, x1));
    const ExteriorElement corrected = left_factor + sgn(b1 * (b2 + 1)) * ((cone * d(x2) - prod(x2)) * d(concat(i, x1)));
    r.literal = (sgn(b1) * lhs == literal);
    r.corrected = (sgn(b1 + 1) * lhs == corrected);
    r.circuits_ok = all_circuits(n, {c, concat(i, x1), cone_then(concat(i, x2))});
    return r;
}

struct IdentitySummary {
    std::vector<IdentityCase> cases;
    int count(IdentityFamily f) const {
        int k = 0;
        for (const auto& c : cases) k += c.family == f;
        return k;
    }
    int literal_failures(IdentityFamily f) const {
        int k = 0;
        for (const auto& c : cases) k += c.family == f && !c.literal;
        return k;
    }
    int corrected_failures(IdentityFamily f) const {
        int k = 0;
        for (const auto& c : cases) k += c.family == f && !c.corrected;
        return k;
    }
    int circuit_failures() const {
        int k = 0;
        for (const auto& c : cases) k += !c.circuits_ok;
        return k;
    }
};

/// All configurations with path or crossing lengths up to `max_len`.
inline IdentitySummary verify_circuit_identities(int max_len = 4) {
    IdentitySummary s;
    for (int a1 = 1; a1 <= max_len; ++a1)
        for (int a2 = 1; a2 <= max_len; ++a2)
            for (int a3 = 1; a3 <= max_len; ++a3) s.cases.push_back(junction_identity(a1, a2, a3));
    for (int shared = 0; shared <= 2; ++shared)
        for (int b1 = 2; b1 <= max_len; ++b1)
            for (int b2 = 2; b2 <= max_len; ++b2) s.cases.push_back(disjoint_crossings_identity(b1, b2, shared));
    for (int a1 = 2; a1 <= max_len; ++a1)
        for (int a2 = 2; a2 <= max_len; ++a2) s.cases.push_back(chorded_cycle_identity(a1, a2));
    for (int b1 = 2; b1 <= max_len; ++b1)
        for (int b2 = 1; b2 <= max_len; ++b2)
            for (int left = 0; left <= b2; ++left) s.cases.push_back(chorded_crossing_identity(b1, b2, left));
    return s;
}

} // namespace klab

#endif // KLAB_IDENTITIES_HPP

#ifndef KLAB_EXTERIOR_HPP
#define KLAB_EXTERIOR_HPP

// Exterior algebra on generators e_0..e_{k-1} (k <= 64) with exact
// coefficients, the derivation ∂, and graded dimensions of the
// Orlik–Solomon ideal and its q-adic closures.

#include <cstdint>
#include <map>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "bits.hpp"
#include "errors.hpp"
#include "linalg.hpp"

namespace klab {

using Rational = boost::multiprecision::cpp_rational;

/// A monomial e_{a1}⋯e_{ap} with a1 < ⋯ < ap, stored as a bitmask.
using Monomial = Mask;

inline int degree(Monomial m) { return popcount(m); }

/// Sign of e_a ∧ e_b relative to e_{a∪b}; 0 when they overlap.
inline int wedge_sign(Monomial a, Monomial b) {
    if (a & b) return 0;
    int inversions = 0;
    for (Mask m = b; m != 0; m &= m - 1) {
        const int y = lowest(m);
        inversions += popcount(a >> y >> 1);
    }
    return (inversions & 1) ? -1 : 1;
}

namespace detail {
template <typename T>
std::string to_string_any(const T& v) {
    if constexpr (std::is_arithmetic_v<T>) return std::to_string(v);
    else return v.str();
}
} // namespace detail

/// Sparse linear combination of monomials; zero coefficients never stored.
template <typename Scalar>
class BasicExterior {
public:
    using Terms = std::map<Monomial, Scalar>;

    BasicExterior() = default;

    static BasicExterior unit() { return monomial(0); }
    static BasicExterior gen(int a) { return monomial(bit(a)); }
    static BasicExterior monomial(Monomial m, Scalar c = Scalar(1)) {
        BasicExterior x;
        x.add_term(m, c);
        return x;
    }
    /// Product e_{a1} ∧ ⋯ ∧ e_{ap} in the given order (not necessarily sorted).
    static BasicExterior product_of(const std::vector<int>& gens) {
        BasicExterior x = unit();
        for (int a : gens) x = x.wedge(gen(a));
        return x;
    }

    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    Scalar coefficient(Monomial m) const {
        auto it = terms_.find(m);
        return it == terms_.end() ? Scalar(0) : it->second;
    }

    /// Degree if homogeneous, -1 otherwise (and for zero).
    int homogeneous_degree() const {
        if (terms_.empty()) return -1;
        const int d = degree(terms_.begin()->first);
        for (const auto& [m, c] : terms_)
            if (degree(m) != d) return -1;
        return d;
    }

    void add_term(Monomial m, const Scalar& c) {
        if (c == 0) return;
        auto [it, fresh] = terms_.emplace(m, c);
        if (!fresh) {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    BasicExterior& operator+=(const BasicExterior& o) {
        for (const auto& [m, c] : o.terms_) add_term(m, c);
        return *this;
    }
    BasicExterior& operator-=(const BasicExterior& o) {
        for (const auto& [m, c] : o.terms_) add_term(m, -c);
        return *this;
    }
    friend BasicExterior operator+(BasicExterior a, const BasicExterior& b) { return a += b; }
    friend BasicExterior operator-(BasicExterior a, const BasicExterior& b) { return a -= b; }
    friend BasicExterior operator-(const BasicExterior& a) { return BasicExterior() - a; }
    friend BasicExterior operator*(const Scalar& s, const BasicExterior& a) {
        BasicExterior out;
        if (s == 0) return out;
        for (const auto& [m, c] : a.terms_) out.terms_.emplace(m, s * c);
        return out;
    }

    BasicExterior wedge(const BasicExterior& o) const {
        BasicExterior out;
        for (const auto& [m1, c1] : terms_) {
            for (const auto& [m2, c2] : o.terms_) {
                const int s = wedge_sign(m1, m2);
                if (s == 0) continue;
                out.add_term(m1 | m2, s > 0 ? Scalar(c1 * c2) : Scalar(-(c1 * c2)));
            }
        }
        return out;
    }
    friend BasicExterior operator*(const BasicExterior& a, const BasicExterior& b) { return a.wedge(b); }

    /// ∂: e_{a1⋯ap} ↦ Σ_j (-1)^{j-1} e_{a1⋯âj⋯ap}; ∂1 = 0.
    BasicExterior boundary() const {
        BasicExterior out;
        for (const auto& [m, c] : terms_) {
            int j = 0;
            for (Mask t = m; t != 0; t &= t - 1, ++j) {
                const Monomial face = m & ~(t & (~t + 1));
                out.add_term(face, (j & 1) ? Scalar(-c) : c);
            }
        }
        return out;
    }

    friend bool operator==(const BasicExterior& a, const BasicExterior& b) { return a.terms_ == b.terms_; }

    std::string to_string() const {
        if (terms_.empty()) return "0";
        std::string s;
        for (const auto& [m, c] : terms_) {
            if (!s.empty()) s += " + ";
            s += "(" + detail::to_string_any(c) + ")e{";
            bool first = true;
            for (int a : elements(m)) {
                if (!first) s += ",";
                s += std::to_string(a);
                first = false;
            }
            s += "}";
        }
        return s;
    }

private:
    Terms terms_;
};

using ExteriorElement = BasicExterior<Rational>;

inline ExteriorElement boundary(const ExteriorElement& x) { return x.boundary(); }
inline ExteriorElement wedge(const ExteriorElement& x, const ExteriorElement& y) { return x.wedge(y); }

/// ∂(e_C) as an integer sparse row keyed by monomial.
template <typename Int>
SparseRow<Int> boundary_row(Monomial c) {
    std::vector<std::pair<std::uint64_t, Int>> terms;
    int j = 0;
    for (Mask t = c; t != 0; t &= t - 1, ++j) terms.emplace_back(c & ~(t & (~t + 1)), Int((j & 1) ? -1 : 1));
    return SparseRow<Int>::from_terms(std::move(terms));
}

/// e_a ∧ row, or an empty row when every term contains a.
template <typename Int>
SparseRow<Int> left_multiply(int a, const SparseRow<Int>& row) {
    std::vector<std::pair<std::uint64_t, Int>> terms;
    terms.reserve(row.entries.size());
    for (const auto& [m, c] : row.entries) {
        const int s = wedge_sign(bit(a), m);
        if (s == 0) continue;
        terms.emplace_back(m | bit(a), s > 0 ? c : Int(-c));
    }
    return SparseRow<Int>::from_terms(std::move(terms));
}

// ---------------------------------------------------------------------------
// Orlik–Solomon ideal.

/// Graded dimensions of I, of a q-adic closure I_q, and of the quotients.
struct GradedIdealDims {
    int k = 0;
    int q = 0;  // closure bound used for `closure`
    std::vector<std::uint64_t> ideal;    // dim I^p
    std::vector<std::uint64_t> closure;  // dim I_q^p

    std::uint64_t algebra(int p) const { return binomial(k, p) - ideal.at(static_cast<std::size_t>(p)); }
    std::uint64_t closure_algebra(int p) const { return binomial(k, p) - closure.at(static_cast<std::size_t>(p)); }
    int max_degree() const { return static_cast<int>(ideal.size()) - 1; }
};

/// Per-degree data of the ideal generated by {∂e_C}: for each p the
/// dimension of I^p and of F¹·I^{p-1} (= I_{p-1}^p).
struct IdealProfile {
    int k = 0;
    std::vector<std::uint64_t> ideal;
    std::vector<std::uint64_t> from_lower;
};

namespace detail {

template <typename Int>
std::vector<std::uint64_t> graded_closure(int k, const std::vector<Mask>& circuits, int q, int max_degree,
                                          std::vector<std::uint64_t>* from_lower = nullptr) {
    std::vector<std::uint64_t> dims(static_cast<std::size_t>(max_degree + 1), 0);
    if (from_lower) from_lower->assign(dims.size(), 0);
    std::vector<SparseRow<Int>> prev;
    for (int p = 0; p <= max_degree; ++p) {
        RowEchelon<Int> ech;
        const std::uint64_t full = binomial(k, p);
        for (const auto& b : prev) {
            for (int a = 0; a < k && ech.rank() < full; ++a) {
                auto row = left_multiply(a, b);
                if (!row.empty()) ech.insert(std::move(row));
            }
            if (ech.rank() == full) break;
        }
        if (from_lower) (*from_lower)[p] = ech.rank();
        if (p <= q) {
            for (Mask c : circuits) {
                if (popcount(c) != p + 1 || ech.rank() == full) continue;
                ech.insert(boundary_row<Int>(c));
            }
        }
        dims[p] = ech.rank();
        prev = ech.basis();
    }
    return dims;
}

} // namespace detail

/// dim I_q^p for p = 0..max_degree.
inline std::vector<std::uint64_t> closure_dimensions(int k, const std::vector<Mask>& circuits, int q, int max_degree) {
    if (k > 64) throw CapExceeded("exterior algebra supports at most 64 generators");
    return with_exact_integers([&]<typename Int>() { return detail::graded_closure<Int>(k, circuits, q, max_degree); });
}

inline IdealProfile ideal_profile(int k, const std::vector<Mask>& circuits, int max_degree) {
    if (k > 64) throw CapExceeded("exterior algebra supports at most 64 generators");
    IdealProfile prof;
    prof.k = k;
    prof.ideal = with_exact_integers([&]<typename Int>() {
        return detail::graded_closure<Int>(k, circuits, max_degree, max_degree, &prof.from_lower);
    });
    return prof;
}

/// Largest degree worth computing: min(k, rank + 1).
inline int degree_cap(int k, int rank) { return std::min(k, rank + 1); }

inline std::uint64_t ideal_dimension(int k, const std::vector<Mask>& circuits, int p) {
    return closure_dimensions(k, circuits, p, p).at(static_cast<std::size_t>(p));
}

inline std::uint64_t adic_closure_dimension(int k, const std::vector<Mask>& circuits, int q, int p) {
    return closure_dimensions(k, circuits, q, p).at(static_cast<std::size_t>(p));
}

inline GradedIdealDims graded_ideal_dims(int k, const std::vector<Mask>& circuits, int q, int max_degree) {
    GradedIdealDims d;
    d.k = k;
    d.q = q;
    d.ideal = closure_dimensions(k, circuits, max_degree, max_degree);
    d.closure = closure_dimensions(k, circuits, q, max_degree);
    return d;
}

/// Count of minimal generators per degree: dim I^p - dim I_{p-1}^p, only
/// non-zero entries kept.
inline std::map<int, std::uint64_t> minimal_generator_counts(const IdealProfile& prof) {
    std::map<int, std::uint64_t> out;
    for (std::size_t p = 0; p < prof.ideal.size(); ++p) {
        const std::uint64_t c = prof.ideal[p] - prof.from_lower[p];
        if (c > 0) out[static_cast<int>(p)] = c;
    }
    return out;
}

inline std::map<int, std::uint64_t> minimal_generator_counts(int k, const std::vector<Mask>& circuits, int max_degree) {
    return minimal_generator_counts(ideal_profile(k, circuits, max_degree));
}

inline bool is_quadratic_oracle(const std::map<int, std::uint64_t>& counts) {
    return counts.empty() || counts.rbegin()->first <= 2;
}

inline bool is_quadratic_oracle(int k, const std::vector<Mask>& circuits, int max_degree) {
    return is_quadratic_oracle(minimal_generator_counts(k, circuits, max_degree));
}

} // namespace klab

#endif // KLAB_EXTERIOR_HPP

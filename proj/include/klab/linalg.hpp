#ifndef KLAB_LINALG_HPP
#define KLAB_LINALG_HPP

// Exact rank computations over the rationals, carried out in the integers.
//
// Two engines live here:
//   * dense Bareiss elimination, for small representation matrices;
//   * an incremental sparse row echelon with fraction-free pivoting and
//     content normalisation, for the large 0/±1 matrices produced by the
//     exterior algebra.
// Both are parameterised on the integer type.  `std::int64_t` runs with
// overflow checks and raises `Overflow`; callers then retry with
// `BigInt` (boost::multiprecision::cpp_int).

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <unordered_map>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace klab {

using BigInt = boost::multiprecision::cpp_int;

struct Overflow : std::overflow_error {
    Overflow() : std::overflow_error("int64 overflow in exact elimination") {}
};

namespace detail {

inline std::int64_t mul(std::int64_t a, std::int64_t b) {
    std::int64_t r = 0;
    if (__builtin_mul_overflow(a, b, &r)) throw Overflow{};
    return r;
}
inline std::int64_t sub(std::int64_t a, std::int64_t b) {
    std::int64_t r = 0;
    if (__builtin_sub_overflow(a, b, &r)) throw Overflow{};
    return r;
}
inline std::int64_t gcd(std::int64_t a, std::int64_t b) { return std::gcd(a, b); }
inline std::int64_t abs(std::int64_t a) {
    if (a == INT64_MIN) throw Overflow{};
    return a < 0 ? -a : a;
}

inline BigInt mul(const BigInt& a, const BigInt& b) { return a * b; }
inline BigInt sub(const BigInt& a, const BigInt& b) { return a - b; }
inline BigInt gcd(const BigInt& a, const BigInt& b) { return boost::multiprecision::gcd(a, b); }
inline BigInt abs(const BigInt& a) { return a < 0 ? BigInt(-a) : a; }

} // namespace detail

/// Dense integer matrix, row-major.
template <typename Int>
using DenseMatrix = std::vector<std::vector<Int>>;

/// Rank of `m` by Bareiss fraction-free elimination with row pivoting.
/// The matrix is taken by value and destroyed.
template <typename Int>
int bareiss_rank(DenseMatrix<Int> m) {
    const std::size_t rows = m.size();
    if (rows == 0) return 0;
    const std::size_t cols = m.front().size();
    Int prev = 1;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t p = r;
        while (p < rows && m[p][c] == 0) ++p;
        if (p == rows) continue;
        std::swap(m[p], m[r]);
        for (std::size_t i = r + 1; i < rows; ++i) {
            for (std::size_t j = c + 1; j < cols; ++j) {
                // exact division by the previous pivot (Sylvester identity)
                m[i][j] = detail::sub(detail::mul(m[r][c], m[i][j]), detail::mul(m[i][c], m[r][j])) / prev;
            }
            m[i][c] = 0;
        }
        prev = m[r][c];
        ++r;
    }
    return static_cast<int>(r);
}

/// Rank over Q of an integer matrix given in int64; falls back to
/// arbitrary precision on overflow.
inline int exact_rank(const DenseMatrix<std::int64_t>& m) {
    try {
        return bareiss_rank<std::int64_t>(m);
    } catch (const Overflow&) {
        DenseMatrix<BigInt> big(m.size());
        for (std::size_t i = 0; i < m.size(); ++i) big[i].assign(m[i].begin(), m[i].end());
        return bareiss_rank<BigInt>(std::move(big));
    }
}

/// Sparse integer vector indexed by 64-bit column keys, stored with
/// strictly decreasing keys so that the leading entry is `front()`.
template <typename Int>
struct SparseRow {
    std::vector<std::pair<std::uint64_t, Int>> entries;

    bool empty() const { return entries.empty(); }
    std::uint64_t lead() const { return entries.front().first; }

    /// Builds a row from unsorted (column, value) pairs, summing duplicates.
    static SparseRow from_terms(std::vector<std::pair<std::uint64_t, Int>> terms) {
        std::sort(terms.begin(), terms.end(), [](const auto& a, const auto& b) { return a.first > b.first; });
        SparseRow row;
        for (auto& [col, v] : terms) {
            if (!row.entries.empty() && row.entries.back().first == col) {
                row.entries.back().second += v;
                if (row.entries.back().second == 0) row.entries.pop_back();
            } else if (v != 0) {
                row.entries.emplace_back(col, std::move(v));
            }
        }
        return row;
    }
};

/// Incremental row space over Q.  `insert` reduces the incoming row against
/// the current pivots and keeps it if it is not in the span.
template <typename Int>
class RowEchelon {
public:
    /// Returns true iff the row increased the rank.
    bool insert(SparseRow<Int> row) {
        while (!row.empty()) {
            auto it = pivots_.find(row.lead());
            if (it == pivots_.end()) break;
            reduce(row, rows_[it->second]);
        }
        if (row.empty()) return false;
        normalize(row);
        pivots_.emplace(row.lead(), rows_.size());
        rows_.push_back(std::move(row));
        return true;
    }

    /// True iff `row` lies in the current span (the row space is unchanged).
    bool contains(SparseRow<Int> row) const {
        while (!row.empty()) {
            auto it = pivots_.find(row.lead());
            if (it == pivots_.end()) return false;
            reduce(row, rows_[it->second]);
        }
        return true;
    }

    std::size_t rank() const { return rows_.size(); }
    const std::vector<SparseRow<Int>>& basis() const { return rows_; }

private:
    static void normalize(SparseRow<Int>& row) {
        Int g = 0;
        for (const auto& e : row.entries) {
            g = detail::gcd(g, detail::abs(e.second));
            if (g == 1) break;
        }
        if (row.entries.front().second < 0) g = -g;
        if (g != 1) {
            for (auto& e : row.entries) e.second /= g;
        }
    }

    // row <- (p0/g)*row - (r0/g)*pivot: cancels the common leading column.
    static void reduce(SparseRow<Int>& row, const SparseRow<Int>& pivot) {
        const Int& p0 = pivot.entries.front().second;
        const Int& r0 = row.entries.front().second;
        const Int g = detail::gcd(detail::abs(p0), detail::abs(r0));
        const Int a = p0 / g;
        const Int b = r0 / g;
        std::vector<std::pair<std::uint64_t, Int>> out;
        out.reserve(row.entries.size() + pivot.entries.size());
        std::size_t i = 1, j = 1;
        const auto& x = row.entries;
        const auto& y = pivot.entries;
        while (i < x.size() || j < y.size()) {
            if (j == y.size() || (i < x.size() && x[i].first > y[j].first)) {
                out.emplace_back(x[i].first, detail::mul(a, x[i].second));
                ++i;
            } else if (i == x.size() || y[j].first > x[i].first) {
                out.emplace_back(y[j].first, detail::sub(Int(0), detail::mul(b, y[j].second)));
                ++j;
            } else {
                Int v = detail::sub(detail::mul(a, x[i].second), detail::mul(b, y[j].second));
                if (v != 0) out.emplace_back(x[i].first, std::move(v));
                ++i;
                ++j;
            }
        }
        row.entries = std::move(out);
        if (!row.empty()) normalize(row);
    }

    std::vector<SparseRow<Int>> rows_;
    std::unordered_map<std::uint64_t, std::size_t> pivots_;
};

/// Runs `body.template operator()<Int>()` with int64 first and retries with
/// BigInt if any intermediate value overflowed.
template <typename Body>
auto with_exact_integers(Body&& body) {
    try {
        return body.template operator()<std::int64_t>();
    } catch (const Overflow&) {
        return body.template operator()<BigInt>();
    }
}

} // namespace klab

#endif // KLAB_LINALG_HPP

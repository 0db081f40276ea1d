#ifndef KLAB_TESTS_FIXTURES_HPP
#define KLAB_TESTS_FIXTURES_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include <klab/matroid.hpp>
#include <klab/network.hpp>

namespace fixtures {

using namespace klab;

inline Network build(std::vector<std::string> vertices, std::vector<std::pair<std::string, std::string>> edges,
                     std::vector<std::string> boundary) {
    RawNetwork r;
    r.vertices = std::move(vertices);
    r.edges = std::move(edges);
    r.boundary = std::move(boundary);
    return validate(r);
}

inline Network wheatstone() {
    return build({"i1", "i2", "j1", "j2"}, {{"i1", "i2"}, {"i1", "j1"}, {"i1", "j2"}, {"i2", "j1"}, {"i2", "j2"}},
                 {"j1", "j2"});
}

inline Network star3() {
    return build({"i", "b1", "b2", "b3"}, {{"i", "b1"}, {"i", "b2"}, {"i", "b3"}}, {"b1", "b2", "b3"});
}

inline Network c6() {
    return build({"b1", "i1", "i2", "b2", "i3", "i4"},
                 {{"b1", "i1"}, {"i1", "i2"}, {"i2", "b2"}, {"b2", "i3"}, {"i3", "i4"}, {"i4", "b1"}}, {"b1", "b2"});
}

inline Network c4() {
    return build({"b1", "i1", "b2", "i2"}, {{"b1", "i1"}, {"i1", "b2"}, {"b2", "i2"}, {"i2", "b1"}}, {"b1", "b2"});
}

inline Network single_crossing() { return build({"b1", "i", "b2"}, {{"b1", "i"}, {"i", "b2"}}, {"b1", "b2"}); }

/// Interior 4-cycle i1 i2 i3 i4 with pendant boundary nodes on i1 and i3.
inline Network square_with_pendants() {
    return build({"i1", "i2", "i3", "i4", "b1", "b2"},
                 {{"i1", "i2"}, {"i2", "i3"}, {"i3", "i4"}, {"i4", "i1"}, {"i1", "b1"}, {"i3", "b2"}}, {"b1", "b2"});
}

/// Rank over Q by plain Gaussian elimination on rationals.
inline int rational_rank(const Representation& rep, Mask s) {
    using Q = boost::multiprecision::cpp_rational;
    std::vector<std::vector<Q>> rows;
    for (int a : elements(s)) {
        std::vector<Q> col;
        for (std::int64_t x : rep.column(a)) col.emplace_back(x);
        rows.push_back(std::move(col));
    }
    int r = 0;
    const int cols = rep.rows();
    for (int c = 0; c < cols && r < static_cast<int>(rows.size()); ++c) {
        int piv = -1;
        for (int i = r; i < static_cast<int>(rows.size()); ++i)
            if (rows[i][c] != 0) { piv = i; break; }
        if (piv < 0) continue;
        std::swap(rows[r], rows[piv]);
        for (int i = r + 1; i < static_cast<int>(rows.size()); ++i) {
            if (rows[i][c] == 0) continue;
            const Q f = rows[i][c] / rows[r][c];
            for (int j = c; j < cols; ++j) rows[i][j] -= f * rows[r][j];
        }
        ++r;
    }
    return r;
}

/// Circuits by testing every subset: dependent, with all one-smaller subsets
/// independent.
inline std::vector<Mask> brute_circuits(const Representation& rep) {
    const int k = rep.k();
    std::vector<int> rk(std::size_t{1} << k);
    for (Mask s = 0; s < (Mask{1} << k); ++s) rk[s] = rational_rank(rep, s);
    std::vector<Mask> out;
    for (Mask s = 1; s < (Mask{1} << k); ++s) {
        if (rk[s] == popcount(s)) continue;
        bool minimal = true;
        for (int a : elements(s))
            if (rk[s & ~bit(a)] != popcount(s) - 1) minimal = false;
        if (minimal) out.push_back(s);
    }
    return out;
}

} // namespace fixtures

#endif

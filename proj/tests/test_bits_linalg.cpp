#include <catch_amalgamated.hpp>

#include <random>
#include <set>

#include <klab/bits.hpp>
#include <klab/linalg.hpp>

using namespace klab;
using boost::multiprecision::cpp_rational;

namespace {

// Plain Gaussian elimination over Q, used as the reference rank.
int rational_rank(const std::vector<std::vector<std::int64_t>>& m) {
    if (m.empty()) return 0;
    std::vector<std::vector<cpp_rational>> a(m.size());
    for (std::size_t i = 0; i < m.size(); ++i) a[i].assign(m[i].begin(), m[i].end());
    const std::size_t rows = a.size(), cols = a[0].size();
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t p = r;
        while (p < rows && a[p][c] == 0) ++p;
        if (p == rows) continue;
        std::swap(a[p], a[r]);
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || a[i][c] == 0) continue;
            const cpp_rational f = a[i][c] / a[r][c];
            for (std::size_t j = c; j < cols; ++j) a[i][j] -= f * a[r][j];
        }
        ++r;
    }
    return static_cast<int>(r);
}

std::vector<std::vector<std::int64_t>> random_matrix(std::mt19937_64& rng, int rows, int cols, int lo, int hi, int rank_hint) {
    std::uniform_int_distribution<int> d(lo, hi);
    // product of rows×rank_hint and rank_hint×cols factors bounds the rank
    std::vector<std::vector<std::int64_t>> a(rows, std::vector<std::int64_t>(rank_hint)), b(rank_hint, std::vector<std::int64_t>(cols));
    for (auto& row : a)
        for (auto& x : row) x = d(rng);
    for (auto& row : b)
        for (auto& x : row) x = d(rng);
    std::vector<std::vector<std::int64_t>> m(rows, std::vector<std::int64_t>(cols, 0));
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j)
            for (int t = 0; t < rank_hint; ++t) m[i][j] += a[i][t] * b[t][j];
    return m;
}

} // namespace

TEST_CASE("subset enumeration visits each k-subset once") {
    for (int n = 0; n <= 10; ++n) {
        for (int k = 0; k <= n; ++k) {
            std::set<Mask> seen;
            for_each_subset_of_size(n, k, [&](Mask s) {
                REQUIRE(popcount(s) == k);
                REQUIRE(is_subset(s, low_mask(n)));
                seen.insert(s);
            });
            REQUIRE(seen.size() == binomial(n, k));
        }
    }
}

TEST_CASE("mask helpers") {
    REQUIRE(elements(0b101101) == std::vector<int>{0, 2, 3, 5});
    REQUIRE(mask_of({5, 0, 3, 2}) == 0b101101);
    REQUIRE(lowest(0b101000) == 3);
    REQUIRE(highest(0b101000) == 5);
    REQUIRE(binomial(15, 7) == 6435);
    REQUIRE(binomial(4, 5) == 0);
}

TEST_CASE("Bareiss rank matches rational elimination") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 300; ++trial) {
        const int rows = 1 + static_cast<int>(rng() % 7), cols = 1 + static_cast<int>(rng() % 7);
        const int hint = 1 + static_cast<int>(rng() % 6);
        const auto m = random_matrix(rng, rows, cols, -3, 3, hint);
        REQUIRE(exact_rank(m) == rational_rank(m));
    }
}

TEST_CASE("overflowing entries fall back to arbitrary precision") {
    std::mt19937_64 rng(11);
    int overflowed = 0;
    for (int trial = 0; trial < 40; ++trial) {
        const auto m = random_matrix(rng, 8, 8, -1'000'000, 1'000'000, 1 + trial % 8);
        try {
            (void)bareiss_rank<std::int64_t>(m);
        } catch (const Overflow&) {
            ++overflowed;
        }
        REQUIRE(exact_rank(m) == rational_rank(m));
    }
    REQUIRE(overflowed > 0);
}

TEST_CASE("row echelon rank equals dense rank") {
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 200; ++trial) {
        const int rows = 1 + static_cast<int>(rng() % 8), cols = 1 + static_cast<int>(rng() % 8);
        const auto m = random_matrix(rng, rows, cols, -2, 2, 1 + static_cast<int>(rng() % 5));
        RowEchelon<std::int64_t> e;
        RowEchelon<BigInt> eb;
        for (const auto& row : m) {
            std::vector<std::pair<std::uint64_t, std::int64_t>> terms;
            std::vector<std::pair<std::uint64_t, BigInt>> bterms;
            for (int j = 0; j < cols; ++j) {
                if (row[j] == 0) continue;
                terms.emplace_back(j, row[j]);
                bterms.emplace_back(j, BigInt(row[j]));
            }
            e.insert(SparseRow<std::int64_t>::from_terms(terms));
            eb.insert(SparseRow<BigInt>::from_terms(bterms));
        }
        REQUIRE(static_cast<int>(e.rank()) == rational_rank(m));
        REQUIRE(eb.rank() == e.rank());
        for (const auto& row : m) {
            std::vector<std::pair<std::uint64_t, std::int64_t>> terms;
            for (int j = 0; j < cols; ++j)
                if (row[j] != 0) terms.emplace_back(j, row[j]);
            REQUIRE(e.contains(SparseRow<std::int64_t>::from_terms(terms)));
        }
    }
}

TEST_CASE("with_exact_integers retries on overflow") {
    int calls = 0;
    const auto r = with_exact_integers([&]<typename Int>() {
        ++calls;
        if constexpr (std::is_same_v<Int, std::int64_t>) throw Overflow();
        return 42;
    });
    REQUIRE(r == 42);
    REQUIRE(calls == 2);
}

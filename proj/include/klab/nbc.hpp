#ifndef KLAB_NBC_HPP
#define KLAB_NBC_HPP

// Broken circuits under an ordering of the ground set, minimal broken
// circuits, and the search for an ordering that makes them disjoint.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <random>
#include <vector>

#include "bits.hpp"
#include "errors.hpp"
#include "ground.hpp"
#include "network.hpp"

namespace klab {

/// A total order on the ground set: `sequence[i]` is the i-th smallest
/// element.
class Ordering {
public:
    explicit Ordering(std::vector<int> sequence) : sequence_(std::move(sequence)), position_(sequence_.size()) {
        for (std::size_t i = 0; i < sequence_.size(); ++i) {
            const int a = sequence_[i];
            if (a < 0 || a >= static_cast<int>(sequence_.size()) || seen(a, i))
                throw InputError("ordering is not a permutation of the ground set");
            position_[a] = static_cast<int>(i);
        }
    }

    /// Natural order 0 < 1 < ⋯; ê = 0 comes first.
    static Ordering natural(int k) {
        std::vector<int> seq(static_cast<std::size_t>(k));
        std::iota(seq.begin(), seq.end(), 0);
        return Ordering(std::move(seq));
    }

    int size() const { return static_cast<int>(sequence_.size()); }
    const std::vector<int>& sequence() const { return sequence_; }
    int position(int a) const { return position_[a]; }

    int min_of(Mask s) const {
        int best = -1;
        for (Mask m = s; m != 0; m &= m - 1) {
            const int a = lowest(m);
            if (best < 0 || position_[a] < position_[best]) best = a;
        }
        return best;
    }

private:
    bool seen(int a, std::size_t upto) const {
        for (std::size_t j = 0; j < upto; ++j)
            if (sequence_[j] == a) return true;
        return false;
    }

    std::vector<int> sequence_;
    std::vector<int> position_;
};

/// {C ∖ min C}, deduplicated and sorted.
inline std::vector<Mask> broken_circuits(const std::vector<Mask>& circuits, const Ordering& ord) {
    std::vector<Mask> out;
    out.reserve(circuits.size());
    for (Mask c : circuits) out.push_back(c & ~bit(ord.min_of(c)));
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

/// Inclusion-minimal members.
inline std::vector<Mask> minimal_broken_circuits(const std::vector<Mask>& bcs) {
    std::vector<Mask> sorted = bcs;
    std::sort(sorted.begin(), sorted.end(), [](Mask a, Mask b) {
        return popcount(a) != popcount(b) ? popcount(a) < popcount(b) : a < b;
    });
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    std::vector<Mask> out;
    for (Mask b : sorted) {
        bool minimal = true;
        for (Mask m : out) {
            if (is_subset(m, b) && m != b) {
                minimal = false;
                break;
            }
        }
        if (minimal) out.push_back(b);
    }
    std::sort(out.begin(), out.end());
    return out;
}

inline bool pairwise_disjoint(const std::vector<Mask>& sets) {
    Mask seen = 0;
    for (Mask s : sets) {
        if (seen & s) return false;
        seen |= s;
    }
    return true;
}

/// Number of p-subsets of the ground set containing no broken circuit.
inline std::uint64_t nbc_count(int k, const std::vector<Mask>& bcs, int p) {
    std::uint64_t count = 0;
    for_each_subset_of_size(k, p, [&](Mask s) {
        for (Mask b : bcs)
            if (is_subset(b, s)) return;
        ++count;
    });
    return count;
}

inline std::uint64_t factorial(int n) {
    std::uint64_t f = 1;
    for (int i = 2; i <= n; ++i) f *= static_cast<std::uint64_t>(i);
    return f;
}

inline constexpr std::uint64_t kDefaultOrderingCap = 3'628'800;  // 10!

struct DmbcSearch {
    bool exists = false;
    bool exhaustive = false;
    bool inconclusive = false;  // sampled mode without a witness
    std::uint64_t orderings_checked = 0;
    std::optional<std::vector<int>> witness;
};

struct DmbcOptions {
    std::uint64_t cap = kDefaultOrderingCap;
    bool allow_sampling = false;
    std::uint64_t samples = 100'000;
    std::uint64_t seed = 0x5eed;
};

/// Searches for an ordering whose minimal broken circuits are pairwise
/// disjoint.  Exhaustive when k! <= cap; otherwise sampled on request.
inline DmbcSearch disjoint_mbc_exists_ordering(int k, const std::vector<Mask>& circuits, const DmbcOptions& opt = {}) {
    DmbcSearch r;
    auto test = [&](const std::vector<int>& seq) {
        ++r.orderings_checked;
        const Ordering ord(seq);
        if (pairwise_disjoint(minimal_broken_circuits(broken_circuits(circuits, ord)))) {
            r.exists = true;
            r.witness = seq;
            return true;
        }
        return false;
    };
    std::vector<int> seq(static_cast<std::size_t>(k));
    std::iota(seq.begin(), seq.end(), 0);
    const bool small = k <= 20 && factorial(k) <= opt.cap;
    if (small) {
        r.exhaustive = true;
        do {
            if (test(seq)) return r;
        } while (std::next_permutation(seq.begin(), seq.end()));
        return r;
    }
    if (!opt.allow_sampling)
        throw CapExceeded("ordering search: " + std::to_string(k) + "! orderings exceed cap " + std::to_string(opt.cap));
    std::mt19937_64 rng(opt.seed);
    for (std::uint64_t i = 0; i < opt.samples; ++i) {
        std::shuffle(seq.begin(), seq.end(), rng);
        if (test(seq)) return r;
    }
    r.inconclusive = true;
    return r;
}

/// Some interior vertex has at least three boundary neighbours.
inline bool dmbc_criterion(const Network& n) {
    for (int v : elements(n.interior()))
        if (popcount(n.graph().neighbors(v) & n.boundary()) >= 3) return true;
    return false;
}

/// For an interior vertex with boundary edges e1 < e2 < e3 (under `ord`),
/// the broken circuits of {ê,e1,e3} and {ê,e2,e3}.  Empty when no
/// vertex qualifies.
struct SharedElementWitness {
    int vertex = -1;
    Mask first = 0, second = 0;      // the two circuits
    Mask broken_first = 0, broken_second = 0;
    int shared = -1;                 // e3
};

inline std::optional<SharedElementWitness> dmbc_witness(const Network& n, const Ordering& ord) {
    for (int v : elements(n.interior())) {
        std::vector<int> es;
        for (int b : elements(n.graph().neighbors(v) & n.boundary()))
            es.push_back(GroundSet::element_of_edge(n.graph().edge_index(v, b)));
        if (es.size() < 3) continue;
        es.resize(3);
        std::sort(es.begin(), es.end(), [&](int a, int b) { return ord.position(a) < ord.position(b); });
        SharedElementWitness w;
        w.vertex = v;
        w.first = bit(kCone) | bit(es[0]) | bit(es[2]);
        w.second = bit(kCone) | bit(es[1]) | bit(es[2]);
        w.broken_first = w.first & ~bit(ord.min_of(w.first));
        w.broken_second = w.second & ~bit(ord.min_of(w.second));
        w.shared = es[2];
        return w;
    }
    return std::nullopt;
}

} // namespace klab

#endif // KLAB_NBC_HPP

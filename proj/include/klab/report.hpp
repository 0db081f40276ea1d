#ifndef KLAB_REPORT_HPP
#define KLAB_REPORT_HPP

// Report assembly for a single network and the per-instance checks used in
// corpus sweeps.

#include <cstdint>
#include <cstdio>
#include <functional>
#include <map>
#include <string>
#include <thread>
#include <vector>

#include <json.hpp>

#include "chordality.hpp"
#include "corpus.hpp"
#include "errors.hpp"
#include "exterior.hpp"
#include "falk.hpp"
#include "ground.hpp"
#include "hypersolvable.hpp"
#include "matroid.hpp"
#include "nbc.hpp"
#include "network.hpp"

namespace klab {

using Json = nlohmann::ordered_json;

// ---------------------------------------------------------------------------
// Naming helpers.

inline std::string element_name(const Network& n, int a) {
    if (a == kCone) return "e^";
    const Edge& e = n.edges()[GroundSet::edge_of_element(a)];
    return n.names()[e.u] + "-" + n.names()[e.v];
}

inline Json element_list(const Network& n, Mask s) {
    Json out = Json::array();
    for (int a : elements(s)) out.push_back(element_name(n, a));
    return out;
}

inline Json vertex_list(const Network& n, const std::vector<int>& vs) {
    Json out = Json::array();
    for (int v : vs) out.push_back(n.names()[v]);
    return out;
}

inline Json map_json(const std::map<int, std::uint64_t>& m) {
    Json out = Json::object();
    for (const auto& [p, c] : m) out[std::to_string(p)] = c;
    return out;
}

/// 64-bit FNV-1a, printed as 16 hex digits.
inline std::string fnv1a_hex(const std::string& bytes) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

// ---------------------------------------------------------------------------
// Analysis report.

struct AnalysisOptions {
    bool oracle = false;  // run the exact oracles
    bool force = false;   // skip capped sections instead of failing
};

inline constexpr int kReportQuadraticOracleCap = 24;
inline constexpr int kReportPhi3Cap = 40;

namespace detail {

/// Runs `body` into `out[key]`.  A section over its cap is recorded as
/// skipped when `optional` or `force`; otherwise the CapExceeded propagates.
inline void section(Json& out, const std::string& key, bool optional, bool force, const std::function<Json()>& body) {
    try {
        out[key] = body();
    } catch (const CapExceeded& e) {
        if (!optional && !force) throw;
        out[key] = Json{{"skipped", e.what()}};
    }
}

inline Json agreement(const Json& a, const Json& b) {
    if (a.is_null() || b.is_null()) return nullptr;
    return a == b;
}

} // namespace detail

inline Json network_summary(const Network& n) {
    return Json{{"vertices", n.order()},
                {"edges", n.size()},
                {"boundary", n.boundary_count()},
                {"k", n.size() + 1},
                {"boundary_nodes", vertex_list(n, n.boundary_order())}};
}

/// Full report.  Fast paths always run; exact oracles run with opt.oracle.
inline Json analyze(const Network& n, const AnalysisOptions& opt = {}) {
    const int k = n.size() + 1;
    Json r;
    r["network"] = network_summary(n);

    const ClosureGraph cg = closure_graph(n);
    const ChordalityResult ch = is_chordal(cg.graph);
    {
        Json c{{"chordal", ch.chordal}};
        if (ch.chordal) c["elimination_order"] = vertex_list(n, ch.elimination_order);
        else c["hole"] = vertex_list(n, ch.hole);
        c["added_edges"] = cg.added_count();
        r["closure"] = c;
    }

    Json agree = Json::object();
    const bool supersolvable_fast = is_supersolvable_fast(n);
    r["supersolvable"] = Json{{"fast", supersolvable_fast}};

    QuadraticFast qf;
    detail::section(r, "quadratic", false, opt.force, [&] {
        qf = is_quadratic_fast(n);
        Json by = Json::object();
        for (std::size_t s = 0; s < qf.chordless_by_size.size(); ++s)
            if (qf.chordless_by_size[s] > 0) by[std::to_string(s)] = qf.chordless_by_size[s];
        Json q{{"fast", qf.quadratic}, {"chordless_ab_by_size", by}};
        if (!qf.hole.empty()) q["hole"] = vertex_list(n, qf.hole);
        return q;
    });
    if (!r["quadratic"].contains("skipped")) agree["quadratic_fast_vs_closure_chordal"] = qf.agree();

    const FalkCounts fc = falk_counts(n);
    r["falk"] = Json{{"kappa1", fc.short_crossings},   {"kappa2", fc.wheatstone_bridges}, {"kappa3", fc.triangles},
                     {"kappa4", fc.k4s},               {"mu", fc.bridge_triangles},        {"boundary_claws", fc.boundary_claws},
                     {"phi3_formula", phi3_formula(fc)},
                     {"dim_a2_formula", binomial(k, 2) - fc.short_crossings - fc.triangles}};

    r["chi_boundary"] = chi_boundary(n);
    {
        const EgCheck eg = theorem_eg_check(n);
        Json e{{"edges_at_least_240", eg.many_edges},
               {"chi_at_least_4", eg.chi_at_least_4},
               {"vertex_with_3_boundary_neighbors", eg.triple_boundary},
               {"interior_induced_w5", eg.interior_wheel5},
               {"verdict", eg.verdict}};
        if (eg.wheel_witness) e["w5_witness"] = vertex_list(n, *eg.wheel_witness);
        r["theorem_eg_check"] = e;
    }

    Json hyp = Json::object();
    detail::section(hyp, "closure_graph", true, opt.force, [&] {
        const HypersolvableResult h = graph_is_hypersolvable(cg.graph);
        return Json{{"hypersolvable", h.hypersolvable}, {"series_length", h.series.size()}};
    });
    r["hypersolvable"] = hyp;

    Json bc{{"criterion", dmbc_criterion(n)}};
    r["broken_circuits"] = bc;

    if (opt.oracle) {
        std::vector<Circuit> circs;
        bool have_circuits = false;
        detail::section(r, "circuits", false, opt.force, [&] {
            circs = circuits_oracle(n);
            have_circuits = true;
            std::map<std::string, int> census;
            for (const auto& c : circs) ++census[to_string(c.type)];
            const CombinatorialCircuits comb = circuits_combinatorial(n);
            bool same = comb.circuits.size() == circs.size();
            for (std::size_t i = 0; same && i < circs.size(); ++i)
                same = comb.circuits[i].elements == circs[i].elements && comb.circuits[i].type == circs[i].type;
            agree["circuits_combinatorial_vs_oracle"] = same;
            Json cj{{"total", circs.size()}, {"by_type", census}, {"cyclic_residuals", comb.cyclic_residuals}};
            return cj;
        });
        const std::vector<Mask> cm = circuit_masks(circs);
        const Representation rep = Representation::of(n);

        detail::section(r["supersolvable"], "oracle", false, opt.force, [&] {
            const SupersolvableOracle so = is_supersolvable_oracle(flat_lattice(rep));
            agree["supersolvable_fast_vs_oracle"] = so.supersolvable == supersolvable_fast;
            return Json(so.supersolvable);
        });

        if (have_circuits) {
            detail::section(r["quadratic"], "oracle", false, opt.force, [&] {
                require_cap(static_cast<std::uint64_t>(k), effective_cap(kReportQuadraticOracleCap), "ideal computation ground set");
                const IdealProfile prof = ideal_profile(k, cm, degree_cap(k, rep.full_rank()));
                const auto counts = minimal_generator_counts(prof);
                const bool q = is_quadratic_oracle(counts);
                r["quadratic"]["minimal_generators"] = map_json(counts);
                Json dims = Json::array();
                for (auto d : prof.ideal) dims.push_back(d);
                r["quadratic"]["ideal_dims"] = dims;
                if (!r["quadratic"].contains("skipped")) {
                    agree["quadratic_fast_vs_oracle"] = q == qf.quadratic;
                    bool mg = true;
                    for (std::size_t s = 0; s < qf.chordless_by_size.size(); ++s) {
                        const int p = static_cast<int>(s) - 1;
                        const std::uint64_t want = static_cast<std::uint64_t>(qf.chordless_by_size[s]);
                        const auto it = counts.find(p);
                        mg = mg && (it == counts.end() ? 0 : it->second) == want;
                    }
                    for (const auto& [p, c] : counts) mg = mg && static_cast<std::size_t>(p + 1) < qf.chordless_by_size.size();
                    agree["minimal_generators_vs_chordless_circuits"] = mg;
                }
                return Json(q);
            });

            detail::section(r["falk"], "phi3_nullity", false, opt.force, [&] {
                require_cap(static_cast<std::uint64_t>(k), effective_cap(kReportPhi3Cap), "multiplication map ground set");
                const std::uint64_t phi = phi3_nullity(k, cm).nullity();
                agree["phi3_formula_vs_nullity"] = phi == phi3_formula(fc);
                const DimA2Check d = dim_a2_check(n, cm);
                r["falk"]["dim_a2_rank"] = d.lhs;
                agree["dim_a2_rank_vs_formula"] = d.equal();
                Json rd = Json::array();
                for (const auto& x : falk_rank_identity(k, cm, phi).readings)
                    rd.push_back(Json{{"reading", x.name}, {"value", x.value}, {"matches", x.matches}});
                r["falk"]["rank_identity"] = rd;
                return Json(phi);
            });

            detail::section(r["broken_circuits"], "exhaustive", false, opt.force, [&] {
                const DmbcSearch s = disjoint_mbc_exists_ordering(k, cm);
                Json j{{"disjoint_ordering_exists", s.exists}, {"orderings_checked", s.orderings_checked}};
                if (s.witness) j["witness"] = *s.witness;
                if (bc["criterion"].get<bool>()) agree["dmbc_criterion_excludes_disjoint"] = !s.exists;
                return j;
            });
        }

        detail::section(r["hypersolvable"], "matroid", false, opt.force, [&] {
            const HypersolvableResult h = matroid_is_hypersolvable(rep);
            return Json{{"hypersolvable", h.hypersolvable}, {"series_length", h.series.size()}};
        });
        const Json& hj = r["hypersolvable"];
        if (hj["matroid"].contains("hypersolvable") && hj["closure_graph"].contains("hypersolvable"))
            agree["matroid_implies_closure_hypersolvable"] =
                !hj["matroid"]["hypersolvable"].get<bool>() || hj["closure_graph"]["hypersolvable"].get<bool>();
    }

    r["agreement"] = agree;
    r["digest"] = fnv1a_hex(r.dump());
    return r;
}

// ---------------------------------------------------------------------------
// Sweeps.

/// Outcome of one check on one instance: not run, passed, or failed.
enum class Check : std::int8_t { Skipped = -1, Fail = 0, Pass = 1 };

inline Check check_of(bool ok) { return ok ? Check::Pass : Check::Fail; }

/// Hard checks must pass on every instance; informational ones gather
/// evidence only.
struct CheckSpec {
    const char* name;
    bool hard;
};

inline const std::vector<CheckSpec>& sweep_checks() {
    static const std::vector<CheckSpec> specs = {
        {"chordal_closure_vs_quadratic_oracle", true},
        {"quadratic_fast_vs_closure_chordal", true},
        {"supersolvable_oracle_vs_closure_chordal", true},
        {"minimal_generators_vs_chordless_circuits", true},
        {"circuits_combinatorial_vs_oracle", true},
        {"circuits_independent_of_potential", true},
        {"holes_use_at_most_one_added_edge", true},
        {"concrete_vs_abstract_chords", true},
        {"matroid_implies_closure_hypersolvable", true},
        {"dmbc_criterion_excludes_disjoint", true},
        {"dim_a2_rank_vs_formula", true},
        {"phi3_formula_vs_nullity", false},
        {"phi3_formula_with_claws_vs_nullity", false},
        {"nbc_count_vs_algebra_dims", true},
        {"rank_of_ground_set", true},
        {"closure_hypersolvable_matroid_not", false},  // converse evidence: Pass = no counterexample
        {"supersolvable_implies_hypersolvable", false},
        {"falk_identity_a3_degree2", false},
        {"falk_identity_a3_degree3", false},
        {"falk_identity_a2_degree3", false},
    };
    return specs;
}

struct SweepLimits {
    int circuit_k = static_cast<int>(kDefaultCircuitCap);  // larger instances run the graph checks only
    int lattice_k = 12;
    int matroid_k = 16;
    int ordering_k = 8;
};

struct InstanceResult {
    CorpusInstance instance;
    std::vector<Check> checks;  // parallel to sweep_checks()
    Json record;
};

/// A second injective potential, different from the default 1..m.
inline std::map<int, std::int64_t> alternate_potential(const Network& n) {
    std::map<int, std::int64_t> u;
    const auto& bo = n.boundary_order();
    for (std::size_t i = 0; i < bo.size(); ++i) {
        const auto x = static_cast<std::int64_t>(i);
        u[bo[i]] = 11 - 3 * x * x - 2 * x;
    }
    return u;
}

/// The reversed natural ordering (ê last), an ordering far from the default.
inline Ordering reversed_ordering(int k) {
    std::vector<int> seq(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) seq[static_cast<std::size_t>(i)] = k - 1 - i;
    return Ordering(std::move(seq));
}

inline InstanceResult run_instance(const CorpusInstance& inst, const SweepLimits& lim = {}) {
    const Network n = inst.network();
    const int k = n.size() + 1;
    std::map<std::string, Check> c;

    const ClosureGraph cg = closure_graph(n);
    const bool chordal = is_chordal(cg.graph).chordal;
    const QuadraticFast qf = is_quadratic_fast(n);
    const ChordlessCircuits cc = chordless_ab_circuits(n);
    c["quadratic_fast_vs_closure_chordal"] = check_of(qf.agree());
    c["holes_use_at_most_one_added_edge"] = check_of(cc.multi_added.empty());

    const Representation rep = Representation::of(n);
    c["rank_of_ground_set"] = check_of(rep.full_rank() == n.interior_count() + 1);
    Json summary{{"k", k}, {"closure_chordal", chordal}};
    const bool criterion = dmbc_criterion(n);
    summary["dmbc_criterion"] = criterion;
    if (k <= lim.circuit_k) {
        const std::vector<Circuit> circs = circuits_oracle(n);
        const std::vector<Mask> cm = circuit_masks(circs);

        const IdealProfile prof = ideal_profile(k, cm, degree_cap(k, rep.full_rank()));
        const auto counts = minimal_generator_counts(prof);
        const bool quadratic = is_quadratic_oracle(counts);
        c["chordal_closure_vs_quadratic_oracle"] = check_of(quadratic == chordal);
        {
            bool ok = true;
            for (int p = 0; p + 1 < static_cast<int>(qf.chordless_by_size.size()); ++p) {
                const auto it = counts.find(p);
                ok = ok && (it == counts.end() ? 0 : it->second) == static_cast<std::uint64_t>(qf.chordless_by_size[p + 1]);
            }
            for (const auto& [p, cnt] : counts) ok = ok && p + 1 < static_cast<int>(qf.chordless_by_size.size());
            c["minimal_generators_vs_chordless_circuits"] = check_of(ok);
        }

        bool supersolvable = false;
        if (k <= lim.lattice_k) {
            supersolvable = is_supersolvable_oracle(flat_lattice(rep)).supersolvable;
            c["supersolvable_oracle_vs_closure_chordal"] = check_of(supersolvable == chordal);
        }

        {
            auto same = [](const std::vector<Circuit>& a, const std::vector<Circuit>& b) {
                if (a.size() != b.size()) return false;
                for (std::size_t i = 0; i < a.size(); ++i)
                    if (a[i].elements != b[i].elements || a[i].type != b[i].type) return false;
                return true;
            };
            const Network alt = n.with_potential(alternate_potential(n));
            const std::vector<Circuit> alt_oracle = circuits_oracle(alt);
            c["circuits_combinatorial_vs_oracle"] =
                check_of(same(circuits_combinatorial(n).circuits, circs) && same(circuits_combinatorial(alt).circuits, alt_oracle));
            c["circuits_independent_of_potential"] = check_of(same(alt_oracle, circs));
        }

        {
            bool ok = true;
            for (const Circuit& ci : circs) {
                if (ci.type != CircuitType::A && ci.type != CircuitType::B) continue;
                ok = ok && (has_circuit_chord(n, ci.elements) == (abstract_chords(cm, ci.elements) != 0));
            }
            c["concrete_vs_abstract_chords"] = check_of(ok);
        }

        bool closure_hyp = false, matroid_hyp = false;
        const bool hyp_feasible = k <= lim.matroid_k && cg.graph.size() <= static_cast<int>(effective_cap(kDefaultGraphDpCap));
        if (hyp_feasible) {
            closure_hyp = graph_is_hypersolvable(cg.graph).hypersolvable;
            matroid_hyp = matroid_is_hypersolvable(rep).hypersolvable;
            c["matroid_implies_closure_hypersolvable"] = check_of(!matroid_hyp || closure_hyp);
            c["closure_hypersolvable_matroid_not"] = check_of(!(closure_hyp && !matroid_hyp));
            if (k <= lim.lattice_k && supersolvable) c["supersolvable_implies_hypersolvable"] = check_of(matroid_hyp && closure_hyp);
        }

        if (criterion && k <= lim.ordering_k)
            c["dmbc_criterion_excludes_disjoint"] = check_of(!disjoint_mbc_exists_ordering(k, cm).exists);

        const FalkCounts fc = falk_counts(n);
        const std::uint64_t phi = phi3_nullity(k, cm).nullity();
        c["phi3_formula_vs_nullity"] = check_of(phi == phi3_formula(fc));
        c["phi3_formula_with_claws_vs_nullity"] = check_of(phi == phi3_formula_with_claws(fc));
        c["dim_a2_rank_vs_formula"] = check_of(dim_a2_check(n, cm).equal());
        {
            const auto id = falk_rank_identity(k, cm, phi);
            c["falk_identity_a3_degree2"] = check_of(id.readings[0].matches);
            c["falk_identity_a3_degree3"] = check_of(id.readings[1].matches);
            c["falk_identity_a2_degree3"] = check_of(id.readings[2].matches);
        }

        {
            bool ok = true;
            for (const Ordering& ord : {Ordering::natural(k), reversed_ordering(k)}) {
                const auto bcs = broken_circuits(cm, ord);
                for (int p = 0; p < static_cast<int>(prof.ideal.size()); ++p)
                    ok = ok && nbc_count(k, bcs, p) == binomial(k, p) - prof.ideal[static_cast<std::size_t>(p)];
            }
            c["nbc_count_vs_algebra_dims"] = check_of(ok);
        }
        summary["quadratic"] = quadratic;
        summary["minimal_generators"] = map_json(counts);
        summary["circuits"] = circs.size();
        summary["phi3"] = phi;
        if (hyp_feasible) {
            summary["closure_hypersolvable"] = closure_hyp;
            summary["matroid_hypersolvable"] = matroid_hyp;
        }
    }

    InstanceResult res;
    res.instance = inst;
    Json checks = Json::object();
    for (const auto& spec : sweep_checks()) {
        const auto it = c.find(spec.name);
        const Check v = it == c.end() ? Check::Skipped : it->second;
        res.checks.push_back(v);
        if (v != Check::Skipped) checks[spec.name] = v == Check::Pass;
    }
    Json edges = Json::array();
    for (const Edge& e : inst.graph.edges()) edges.push_back({e.u, e.v});
    char code[17];
    std::snprintf(code, sizeof code, "%llx", static_cast<unsigned long long>(inst.code));
    res.record = Json{{"vertices", inst.graph.order()},
                      {"graph_code", code},
                      {"edges", edges},
                      {"boundary", elements(inst.boundary)},
                      {"digest", fnv1a_hex(summary.dump())},
                      {"summary", summary},
                      {"checks", checks}};
    return res;
}

struct SweepSummary {
    std::size_t instances = 0;
    std::vector<std::size_t> run;       // per check
    std::vector<std::size_t> failures;  // per check
    std::size_t hard_failures() const {
        std::size_t f = 0;
        for (std::size_t i = 0; i < failures.size(); ++i) f += sweep_checks()[i].hard ? failures[i] : 0;
        return f;
    }
    std::size_t failures_of(const std::string& name) const {
        for (std::size_t i = 0; i < sweep_checks().size(); ++i)
            if (name == sweep_checks()[i].name) return failures[i];
        throw LogicError("unknown check " + name);
    }
    std::size_t runs_of(const std::string& name) const {
        for (std::size_t i = 0; i < sweep_checks().size(); ++i)
            if (name == sweep_checks()[i].name) return run[i];
        throw LogicError("unknown check " + name);
    }
    Json to_json() const {
        Json hard = Json::object(), info = Json::object();
        for (std::size_t i = 0; i < sweep_checks().size(); ++i) {
            Json e{{"checked", run[i]}, {"failures", failures[i]}};
            (sweep_checks()[i].hard ? hard : info)[sweep_checks()[i].name] = e;
        }
        return Json{{"instances", instances}, {"hard_failures", hard_failures()}, {"hard", hard}, {"informational", info}};
    }
};

/// Runs every instance on `jobs` worker threads.  Results come back in
/// corpus order, and `sink` sees them in that order.
inline SweepSummary sweep(const std::vector<CorpusInstance>& instances, int jobs = 1, const SweepLimits& lim = {},
                          const std::function<void(const InstanceResult&)>& sink = {}) {
    std::vector<InstanceResult> results(instances.size());
    std::vector<std::exception_ptr> errors(instances.size());
    const int workers = std::max(1, jobs);
    std::vector<std::thread> pool;
    for (int w = 0; w < workers; ++w) {
        pool.emplace_back([&, w] {
            for (std::size_t i = static_cast<std::size_t>(w); i < instances.size(); i += static_cast<std::size_t>(workers)) {
                try {
                    results[i] = run_instance(instances[i], lim);
                } catch (...) {
                    errors[i] = std::current_exception();
                }
            }
        });
    }
    for (auto& t : pool) t.join();
    for (const auto& e : errors)
        if (e) std::rethrow_exception(e);

    SweepSummary s;
    s.instances = instances.size();
    s.run.assign(sweep_checks().size(), 0);
    s.failures.assign(sweep_checks().size(), 0);
    for (const auto& r : results) {
        for (std::size_t i = 0; i < r.checks.size(); ++i) {
            if (r.checks[i] == Check::Skipped) continue;
            ++s.run[i];
            if (r.checks[i] == Check::Fail) ++s.failures[i];
        }
        if (sink) sink(r);
    }
    return s;
}

} // namespace klab

#endif // KLAB_REPORT_HPP

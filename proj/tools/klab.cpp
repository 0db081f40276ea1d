// klab: command-line front end for the network analyses.
//
// Exit codes: 0 success, 1 input error, 2 resource cap exceeded,
// 3 a sweep found a hard-check failure, 4 internal error.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include <klab/klab.hpp>

namespace {

using klab::Json;

klab::Network load_network(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw klab::InputError("cannot open " + path);
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw klab::InputError("malformed JSON in " + path + ": " + e.what());
    }
    return klab::network_from_json(j);
}

void print(const Json& j) { std::cout << j.dump(2) << "\n"; }

Json circuit_json(const klab::Network& n, const klab::Circuit& c) {
    Json j{{"type", klab::to_string(c.type)}, {"elements", klab::element_list(n, c.elements)}};
    if (!c.crossings.empty()) {
        Json xs = Json::array();
        for (const auto& x : c.crossings) xs.push_back(klab::vertex_list(n, x));
        j["crossings"] = xs;
    }
    if (!c.cycle.empty()) j["cycle"] = klab::vertex_list(n, c.cycle);
    if (c.cyclic_residual) j["cyclic_residual"] = true;
    return j;
}

Json series_json(const klab::Network& n, const klab::ClosureGraph& cg, const std::vector<klab::Mask>& series) {
    Json out = Json::array();
    for (klab::Mask s : series) {
        Json step = Json::array();
        for (int e : klab::elements(s)) {
            const klab::Edge& ed = cg.graph.edges()[e];
            step.push_back(n.names()[ed.u] + "-" + n.names()[ed.v]);
        }
        out.push_back(step);
    }
    return out;
}

Json ground_series_json(const klab::Network& n, const std::vector<klab::Mask>& series) {
    Json out = Json::array();
    for (klab::Mask s : series) out.push_back(klab::element_list(n, s));
    return out;
}

std::vector<int> parse_sizes(const std::string& s) {
    std::vector<int> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            out.push_back(std::stoi(item));
        } catch (const std::exception&) {
            throw klab::InputError("bad boundary size '" + item + "'");
        }
    }
    if (out.empty()) throw klab::InputError("no boundary sizes given");
    return out;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Dirichlet arrangement analyses"};
    app.require_subcommand(1);

    std::string file;
    bool oracle = false, force = false, matroid = false, all_orderings = false;

    auto* analyze = app.add_subcommand("analyze", "full report for a network");
    analyze->add_option("file", file, "network JSON")->required();
    analyze->add_flag("--oracle", oracle, "also run the exact oracles");
    analyze->add_flag("--force", force, "skip sections over their caps instead of failing");

    int max_vertices = 6, jobs = 1;
    std::string sizes = "2,3", out_path;
    auto* sweep = app.add_subcommand("sweep", "exhaustive verification over small networks");
    sweep->add_option("--max-vertices", max_vertices, "largest vertex count (<= 7)");
    sweep->add_option("--boundary-sizes", sizes, "comma-separated boundary sizes");
    sweep->add_option("--out", out_path, "JSONL corpus file");
    sweep->add_option("--jobs", jobs, "worker threads");

    int fam_m = 4, fam_n = 14;
    auto* family = app.add_subcommand("family", "the join family network");
    family->add_option("--m", fam_m, "boundary part size")->required();
    family->add_option("--n", fam_n, "complete part size")->required();

    auto* circuits = app.add_subcommand("circuits", "circuits of the cone matroid");
    circuits->add_option("file", file, "network JSON")->required();

    auto* falk = app.add_subcommand("falk", "Falk invariant");
    falk->add_option("file", file, "network JSON")->required();
    falk->add_flag("--oracle", oracle, "compute the exact nullity");

    auto* hyp = app.add_subcommand("hypersolvable", "hypersolvability of the closure graph");
    hyp->add_option("file", file, "network JSON")->required();
    hyp->add_flag("--matroid", matroid, "also decide the cone matroid");

    auto* bc = app.add_subcommand("broken-circuits", "broken circuits under the natural order");
    bc->add_option("file", file, "network JSON")->required();
    bc->add_flag("--all-orderings", all_orderings, "search every ordering for disjoint minimal broken circuits");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        if (*analyze) {
            print(klab::analyze(load_network(file), {oracle, force}));
        } else if (*sweep) {
            if (max_vertices > klab::kMaxCorpusVertices) throw klab::InputError("--max-vertices must be at most 7");
            const auto instances = klab::corpus(max_vertices, parse_sizes(sizes));
            std::ofstream out;
            if (!out_path.empty()) {
                out.open(out_path);
                if (!out) throw klab::InputError("cannot write " + out_path);
            }
            const auto summary = klab::sweep(instances, jobs, {}, [&](const klab::InstanceResult& r) {
                if (out) out << r.record.dump() << "\n";
            });
            print(summary.to_json());
            if (summary.hard_failures() > 0) return 3;
        } else if (*family) {
            if (fam_m < 2 || fam_n < 0) throw klab::InputError("family needs m >= 2 and n >= 0");
            print(klab::network_to_json(klab::family_example(fam_m, fam_n)));
        } else if (*circuits) {
            const auto n = load_network(file);
            Json list = Json::array();
            for (const auto& c : klab::circuits_oracle(n)) list.push_back(circuit_json(n, c));
            print(Json{{"k", n.size() + 1}, {"circuits", list}});
        } else if (*falk) {
            const auto n = load_network(file);
            const int k = n.size() + 1;
            const auto c = klab::falk_counts(n);
            Json j{{"kappa1", c.short_crossings}, {"kappa2", c.wheatstone_bridges}, {"kappa3", c.triangles},
                   {"kappa4", c.k4s},             {"mu", c.bridge_triangles},       {"boundary_claws", c.boundary_claws},
                   {"phi3_formula", klab::phi3_formula(c)}};
            if (oracle) {
                const auto cm = klab::circuit_masks(klab::circuits_oracle(n));
                const auto phi = klab::phi3_nullity(k, cm).nullity();
                const auto d = klab::dim_a2_check(n, cm);
                j["phi3_nullity"] = phi;
                j["agree"] = phi == klab::phi3_formula(c);
                j["dim_a2"] = Json{{"rank", d.lhs}, {"formula", d.rhs}, {"equal", d.equal()}};
                Json rd = Json::array();
                for (const auto& x : klab::falk_rank_identity(k, cm, phi).readings)
                    rd.push_back(Json{{"reading", x.name}, {"value", x.value}, {"matches", x.matches}});
                j["rank_identity"] = rd;
            }
            print(j);
        } else if (*hyp) {
            const auto n = load_network(file);
            const auto cg = klab::closure_graph(n);
            const auto g = klab::graph_is_hypersolvable(cg.graph);
            Json j{{"closure_graph", Json{{"hypersolvable", g.hypersolvable}, {"series", series_json(n, cg, g.series)}}}};
            if (matroid) {
                const auto m = klab::matroid_is_hypersolvable(klab::Representation::of(n));
                j["matroid"] = Json{{"hypersolvable", m.hypersolvable}, {"series", ground_series_json(n, m.series)}};
                j["implication_holds"] = !m.hypersolvable || g.hypersolvable;
            }
            print(j);
        } else if (*bc) {
            const auto n = load_network(file);
            const int k = n.size() + 1;
            const auto cm = klab::circuit_masks(klab::circuits_oracle(n));
            const auto bcs = klab::broken_circuits(cm, klab::Ordering::natural(k));
            const auto mbc = klab::minimal_broken_circuits(bcs);
            Json b = Json::array(), m = Json::array();
            for (auto s : bcs) b.push_back(klab::element_list(n, s));
            for (auto s : mbc) m.push_back(klab::element_list(n, s));
            Json j{{"broken_circuits", b},
                   {"minimal", m},
                   {"pairwise_disjoint", klab::pairwise_disjoint(mbc)},
                   {"criterion", klab::dmbc_criterion(n)}};
            if (all_orderings) {
                const auto s = klab::disjoint_mbc_exists_ordering(k, cm);
                j["search"] = Json{{"disjoint_ordering_exists", s.exists}, {"orderings_checked", s.orderings_checked}};
                if (s.witness) j["search"]["witness"] = *s.witness;
            }
            print(j);
        }
    } catch (const klab::InputError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const klab::CapExceeded& e) {
        std::cerr << "cap exceeded: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 4;
    }
    return 0;
}

// Command-line front end: graph generators, complex construction, homology,
// Leray numbers, collapsibility search and rainbow numbers, with text or JSON
// output. Exit codes: 0 success / all checks pass, 1 a check failed or a
// witness was rejected, 2 usage or parse errors.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "icx/collapse.hpp"
#include "icx/complex.hpp"
#include "icx/graph.hpp"
#include "icx/homology.hpp"
#include "icx/io.hpp"
#include "icx/rainbow.hpp"
#include "icx/verify.hpp"

namespace {

using nlohmann::json;

struct GlobalOptions {
    std::string format = "text";
    std::uint64_t seed = 0;
    std::uint64_t budget = 10'000'000;
    std::uint64_t limit_faces = icx::kDefaultFaceLimit;
};

void emit(const GlobalOptions& opt, const json& payload, const std::string& text) {
    if (opt.format == "json")
        std::cout << payload.dump(2) << "\n";
    else
        std::cout << text;
}

std::ostream& open_output(std::ofstream& file, const std::string& path) {
    if (path.empty()) return std::cout;
    file.open(path);
    if (!file) throw std::runtime_error("cannot write file: " + path);
    return file;
}

std::vector<int> parse_int_list(const std::string& csv) {
    std::vector<int> out;
    std::stringstream ss(csv);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (!item.empty()) out.push_back(std::stoi(item));
    }
    return out;
}

icx::Graph make_family(const std::string& family, int m, int j, const std::string& dists,
                       const std::string& parts, int delta, std::uint64_t seed) {
    if (family == "cycle") return icx::cycle_graph(m);
    if (family == "path") return icx::path_graph(m);
    if (family == "complete") return icx::complete_graph(m);
    if (family == "complete_multipartite") return icx::complete_multipartite(parse_int_list(parts));
    if (family == "circulant") return icx::circulant(m, parse_int_list(dists));
    if (family == "generalized_petersen") return icx::generalized_petersen(m, j);
    if (family == "dodecahedral") return icx::dodecahedral_graph();
    if (family == "random_max_degree") return icx::random_max_degree(m, delta, seed);
    if (family == "random_chordal") return icx::random_chordal(m, seed);
    throw CLI::ValidationError("--family", "unknown family '" + family + "'");
}

int run(int argc, char** argv) {
    CLI::App app{"exact combinatorial topology of graph independence complexes"};
    app.require_subcommand(1);
    app.fallthrough();  // global flags may follow the subcommand
    GlobalOptions opt;
    app.add_option("--format", opt.format, "output format")->check(CLI::IsMember({"text", "json"}));
    app.add_option("--seed", opt.seed, "seed for random generators");
    app.add_option("--budget", opt.budget, "collapse search budget (nodes + generated moves)");
    app.add_option("--limit-faces", opt.limit_faces, "face enumeration limit for homology");

    // gen
    auto* gen = app.add_subcommand("gen", "generate a graph and write its edge list");
    std::string family, dists, parts, out_path;
    int m = 0, j = 2, delta = 3;
    gen->add_option("--family", family, "graph family")->required();
    gen->add_option("--m", m, "vertex/cycle parameter");
    gen->add_option("--j", j, "generalized Petersen skip");
    gen->add_option("--dists", dists, "circulant distances, comma separated");
    gen->add_option("--parts", parts, "multipartite part sizes, comma separated");
    gen->add_option("--delta", delta, "max degree for random_max_degree");
    gen->add_option("--out", out_path, "output file (default stdout)");

    // complex
    auto* cplx = app.add_subcommand("complex", "construct I_n(G) and write it");
    std::string graph_path, cplx_out;
    int n_param = 2;
    bool as_facets = false;
    cplx->add_option("--graph", graph_path, "edge-list file")->required();
    cplx->add_option("--n", n_param, "independence parameter n")->required();
    cplx->add_flag("--facets", as_facets, "write facets instead of missing faces");
    cplx->add_option("--out", cplx_out, "output file (default stdout)");

    // betti
    auto* betti = app.add_subcommand("betti", "reduced rational Betti numbers");
    std::string betti_complex, betti_graph;
    int betti_degree = std::numeric_limits<int>::min();
    bool dual_nerve = false;
    int betti_n = 2;
    betti->add_option("--complex", betti_complex, "complex file");
    betti->add_option("--graph", betti_graph, "edge-list file (with --dual-nerve)");
    betti->add_option("--n", betti_n, "independence parameter (with --dual-nerve)");
    betti->add_flag("--dual-nerve", dual_nerve, "compute through the Alexander-dual nerve");
    betti->add_option("--degree", betti_degree, "single degree only");

    // leray
    auto* leray = app.add_subcommand("leray", "Leray number of a complex");
    std::string leray_complex;
    int vertex_limit = 14;
    bool lower_only = false;
    leray->add_option("--complex", leray_complex, "complex file")->required();
    leray->add_option("--vertex-limit", vertex_limit, "exhaustive search limit");
    leray->add_flag("--lower-bound", lower_only, "report the homological lower bound only");

    // collapse
    auto* collapse = app.add_subcommand("collapse", "d-collapsibility search and witness checking");
    std::string collapse_complex, witness_out, witness_verify;
    int d_param = -1;
    bool number_mode = false;
    collapse->add_option("--complex", collapse_complex, "complex file")->required();
    collapse->add_option("--d", d_param, "test d-collapsibility");
    collapse->add_flag("--number", number_mode, "compute the collapsibility number / bracket");
    collapse->add_option("--witness-out", witness_out, "write a found witness as JSON");
    collapse->add_option("--verify", witness_verify, "re-check a witness JSON file");

    // fnum
    auto* fnum = app.add_subcommand("fnum", "rainbow independent set number f_G(n)");
    std::string fnum_graph;
    int fnum_n = 2, cap = 20;
    fnum->add_option("--graph", fnum_graph, "edge-list file")->required();
    fnum->add_option("--n", fnum_n, "rainbow size n")->required();
    fnum->add_option("--cap", cap, "largest family size to enumerate");

    // verify-paper
    auto* verify = app.add_subcommand("verify-paper", "run the reproduction suite");
    std::string profile = "quick";
    verify->add_option("--profile", profile, "quick skips the direct dodecahedral elimination")
        ->check(CLI::IsMember({"quick", "full"}));

    // explore: observations on C(I_n) against ceil((delta+1)/2)(n-1) for
    // random bounded-degree graphs. Records data; no pass/fail semantics --
    // the bound is known to fail for some families.
    auto* explore = app.add_subcommand("explore", "sample bounded-degree graphs against the half-degree bound");
    int ex_delta = 3, ex_n = 2, ex_m = 8, ex_count = 20;
    explore->add_option("--delta", ex_delta, "max degree of sampled graphs");
    explore->add_option("--n", ex_n, "independence parameter n");
    explore->add_option("--m", ex_m, "vertices per sample");
    explore->add_option("--count", ex_count, "number of samples");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }
    icx::HomologyOptions homology_options{opt.limit_faces};

    if (gen->parsed()) {
        icx::Graph g = make_family(family, m, j, dists, parts, delta, opt.seed);
        std::ofstream file;
        icx::write_edge_list(open_output(file, out_path), g);
        return 0;
    }

    if (cplx->parsed()) {
        icx::Graph g = icx::load_graph(graph_path);
        icx::Complex x = icx::independence_complex(g, n_param);
        std::ofstream file;
        icx::write_complex(open_output(file, cplx_out), x, as_facets);
        return 0;
    }

    if (betti->parsed()) {
        if (dual_nerve) {
            if (betti_graph.empty()) throw CLI::ValidationError("--graph", "required with --dual-nerve");
            auto result = icx::betti_via_dual_nerve(icx::load_graph(betti_graph), betti_n, homology_options);
            if (!result) {
                std::cerr << "refused: " << result.refusal_reason() << "\n";
                return 1;
            }
            emit(opt, icx::betti_to_json(*result), result->to_string() + "\n");
            return 0;
        }
        if (betti_complex.empty()) throw CLI::ValidationError("--complex", "required without --dual-nerve");
        icx::Complex x = icx::load_complex(betti_complex);
        if (betti_degree != std::numeric_limits<int>::min()) {
            auto result = icx::betti_in_degree(x, betti_degree, homology_options);
            if (!result) {
                std::cerr << "refused: " << result.refusal_reason() << "\n";
                return 1;
            }
            emit(opt, {{std::to_string(betti_degree), *result}},
                 "betti_" + std::to_string(betti_degree) + " = " + std::to_string(*result) + "\n");
            return 0;
        }
        auto result = icx::reduced_betti(x, homology_options);
        if (!result) {
            std::cerr << "refused: " << result.refusal_reason() << "\n";
            return 1;
        }
        emit(opt, icx::betti_to_json(*result), result->to_string() + "\n");
        return 0;
    }

    if (leray->parsed()) {
        icx::Complex x = icx::load_complex(leray_complex);
        if (lower_only) {
            int bound = icx::leray_lower_bound(x, {}, homology_options);
            emit(opt, {{"leray_lower_bound", bound}}, "L >= " + std::to_string(bound) + "\n");
            return 0;
        }
        auto result = icx::leray_number(x, vertex_limit, homology_options);
        if (!result) {
            std::cerr << "refused: " << result.refusal_reason() << "\n";
            return 1;
        }
        emit(opt, {{"leray", *result}}, "L = " + std::to_string(*result) + "\n");
        return 0;
    }

    if (collapse->parsed()) {
        icx::Complex x = icx::load_complex(collapse_complex);
        if (!witness_verify.empty()) {
            std::ifstream in(witness_verify);
            if (!in) throw std::runtime_error("cannot open witness file: " + witness_verify);
            json payload = json::parse(in);
            icx::CollapseSequence seq = icx::witness_from_json(payload);
            icx::SequenceCheck check = icx::verify_sequence(x, seq);
            emit(opt, {{"ok", check.ok}, {"failing_step", check.failing_step}},
                 check.ok ? "witness accepted\n"
                          : "witness rejected at step " + std::to_string(check.failing_step) + "\n");
            return check.ok ? 0 : 1;
        }
        if (number_mode) {
            icx::CollapsibilityNumber c = icx::collapsibility_number(x, opt.budget);
            json payload = {{"exact", c.exact},
                            {"lower", c.lower},
                            {"upper", c.upper},
                            {"lower_provenance", c.lower_provenance},
                            {"upper_provenance", c.upper_provenance}};
            if (c.exact) payload["value"] = c.value;
            emit(opt, payload, "C = " + c.to_string() + "\n");
            return 0;
        }
        if (d_param < 0) throw CLI::ValidationError("--d", "give --d, --number or --verify");
        icx::CollapseSearchResult result = icx::is_d_collapsible(x, d_param, opt.budget);
        std::string status = result.status == icx::CollapseStatus::witness    ? "witness"
                             : result.status == icx::CollapseStatus::refuted ? "refuted"
                                                                             : "budget_exhausted";
        json payload = {{"status", status}, {"nodes", result.nodes}};
        if (result.status == icx::CollapseStatus::witness) {
            json w = icx::witness_to_json(result.witness);
            payload["witness_length"] = result.witness.steps.size();
            if (!witness_out.empty()) {
                std::ofstream out(witness_out);
                if (!out) throw std::runtime_error("cannot write witness file: " + witness_out);
                out << w.dump(2) << "\n";
            } else {
                payload["witness"] = w;
            }
        }
        emit(opt, payload, status + " (" + std::to_string(result.nodes) + " budget units)\n");
        return 0;
    }

    if (fnum->parsed()) {
        icx::Graph g = icx::load_graph(fnum_graph);
        icx::FNumResult result = icx::f_exact(g, fnum_n, cap);
        json family_json = json::array();
        for (int idx : result.no_rainbow_family)
            family_json.push_back(result.independent_sets[static_cast<std::size_t>(idx)].to_vector());
        json payload = {{"f", result.f}, {"witness_family", family_json}, {"certificate", result.certificate}};
        std::ostringstream text;
        text << "f = " << result.f << (result.exact ? "" : " (lower bound)") << ", certificate "
             << result.certificate << "\n";
        emit(opt, payload, text.str());
        return 0;
    }

    if (explore->parsed()) {
        const int conjectured = (ex_delta + 2) / 2 * (ex_n - 1);
        json samples = json::array();
        int observed_max = 0;
        bool any_bracket = false;
        for (int i = 0; i < ex_count; ++i) {
            icx::Graph g = icx::random_max_degree(ex_m, ex_delta, opt.seed + static_cast<std::uint64_t>(i));
            icx::CollapsibilityNumber c = icx::collapsibility_number(icx::independence_complex(g, ex_n), opt.budget);
            json sample = {{"seed", opt.seed + static_cast<std::uint64_t>(i)},
                           {"max_degree", g.max_degree()},
                           {"lower", c.lower},
                           {"upper", c.upper}};
            if (c.exact) {
                sample["value"] = c.value;
                observed_max = std::max(observed_max, c.value);
            } else {
                any_bracket = true;
                observed_max = std::max(observed_max, c.lower);
            }
            samples.push_back(sample);
        }
        json payload = {{"samples", samples},
                        {"half_degree_bound", conjectured},
                        {"observed_max", observed_max},
                        {"all_exact", !any_bracket}};
        std::ostringstream text;
        text << ex_count << " samples (m=" << ex_m << ", delta<=" << ex_delta << ", n=" << ex_n
             << "): observed max C = " << observed_max << (any_bracket ? " (some brackets)" : "")
             << ", half-degree bound " << conjectured << "\n";
        emit(opt, payload, text.str());
        return 0;
    }

    if (verify->parsed()) {
        std::vector<icx::CheckReport> reports =
            icx::verify_paper(profile == "full" ? icx::Profile::full : icx::Profile::quick);
        bool all_pass = true;
        json payload = json::array();
        std::ostringstream text;
        for (const icx::CheckReport& r : reports) {
            payload.push_back(icx::report_to_json(r));
            text << "[" << (r.verdict == icx::Verdict::pass ? "PASS" : "FAIL") << "] " << r.check << ": "
                 << r.computed << " (" << r.seconds << " s)\n";
            all_pass = all_pass && r.verdict == icx::Verdict::pass;
        }
        emit(opt, payload, text.str());
        return all_pass ? 0 : 1;
    }

    return 2;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const icx::ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}

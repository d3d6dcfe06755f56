// Command-line front end: graph generation, colorings, stable-set reports,
// bipartite extraction, separation choosability, experiment campaigns.

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "sepbip/bip_extract.hpp"
#include "sepbip/catalog.hpp"
#include "sepbip/choosability.hpp"
#include "sepbip/coloring.hpp"
#include "sepbip/edgelist_io.hpp"
#include "sepbip/error.hpp"
#include "sepbip/experiments.hpp"
#include "sepbip/generators.hpp"
#include "sepbip/stable_sets.hpp"

using namespace sepbip;
using nlohmann::ordered_json;

namespace {

constexpr int kSchemaVersion = 1;

void write_output(const std::string& path, const std::string& text) {
    if (path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(path);
    if (!out) fail(ErrorCode::Io, "cannot open " + path + " for writing");
    out << text;
}

std::string dump(const ordered_json& j) {
    return j.dump(2) + "\n";
}

ordered_json bipartite_witness_json(const Graph& g, const BipartiteWitness& w,
                                    const std::string& method) {
    w.verify(g);
    ordered_json j;
    j["schema_version"] = kSchemaVersion;
    j["method"] = method;
    j["part1"] = w.part1.members();
    j["part2"] = w.part2.members();
    j["edge_count"] = w.edge_count;
    j["avg_degree"] = to_frac_string(w.avg_degree);
    j["avg_degree_float"] = to_double(w.avg_degree);
    j["min_degree"] = w.min_degree;
    j["verified"] = true;
    return j;
}

ordered_json semi_witness_json(const Graph& g, const SemiBipartiteWitness& w,
                               const std::string& method) {
    w.verify(g);
    ordered_json j;
    j["schema_version"] = kSchemaVersion;
    j["method"] = method;
    j["stable_part"] = w.stable_part.members();
    j["other_part"] = w.other_part.members();
    j["cross_edge_count"] = w.cross_edge_count;
    j["avg_degree"] = to_frac_string(w.avg_degree);
    j["avg_degree_float"] = to_double(w.avg_degree);
    j["verified"] = true;
    return j;
}

ordered_json assignment_json(const ListAssignment& L) {
    ordered_json j = ordered_json::object();
    for (size_t v = 0; v < L.lists.size(); ++v) j[std::to_string(v)] = L.lists[v];
    return j;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"separation choosability and dense bipartite subgraph workbench"};
    app.require_subcommand(1);

    // ---- gen ----------------------------------------------------------
    auto* gen = app.add_subcommand("gen", "generate a graph and write it as an edge list");
    std::string gen_kind = "gnp";
    int gen_n = 0, gen_b = 0, gen_r = 4, gen_g = 5;
    std::string gen_p = "1/2", gen_D = "1/2", gen_c = "1/2", gen_name = "petersen";
    uint64_t gen_seed = 0;
    std::string gen_out, gen_stats;
    gen->add_option("--kind", gen_kind,
                    "gnp | triangle_free | kr_free | high_girth | complete_bipartite | cycle | "
                    "named_fixture");
    gen->add_option("--n", gen_n, "vertex count (first part size for complete_bipartite)");
    gen->add_option("--b", gen_b, "second part size for complete_bipartite");
    gen->add_option("--p", gen_p, "edge probability for gnp, as num/den");
    gen->add_option("--D", gen_D, "density parameter for triangle_free, as num/den");
    gen->add_option("--c", gen_c, "leading constant for kr_free / high_girth");
    gen->add_option("--r", gen_r, "forbidden clique order for kr_free");
    gen->add_option("--g", gen_g, "girth target for high_girth");
    gen->add_option("--name", gen_name, "fixture name: petersen | grotzsch");
    gen->add_option("--seed", gen_seed, "64-bit seed");
    gen->add_option("--out", gen_out, "output edge-list path (stdout when omitted)");
    gen->add_option("--stats-json", gen_stats, "write construction statistics to this path");

    // ---- color --------------------------------------------------------
    auto* color = app.add_subcommand("color", "proper and fractional colorings");
    std::string color_in, color_mode = "greedy", color_out;
    color->add_option("--in", color_in, "input edge-list path")->required();
    color->add_option("--mode", color_mode, "greedy | exact | fractional");
    color->add_option("--out", color_out, "output path (stdout when omitted)");

    // ---- stable -------------------------------------------------------
    auto* stable = app.add_subcommand("stable", "stable-set enumeration and expectations");
    stable->require_subcommand(1);
    std::string st_in, st_out;
    auto* st_enum = stable->add_subcommand("enumerate", "list every stable set");
    st_enum->add_option("--in", st_in, "input edge-list path")->required();
    st_enum->add_option("--out", st_out, "output path");
    auto* st_exp =
        stable->add_subcommand("expectation", "expected degree sum over a uniform stable set");
    st_exp->add_option("--in", st_in, "input edge-list path")->required();
    st_exp->add_option("--out", st_out, "output path");
    auto* st_ver =
        stable->add_subcommand("verify-appendix", "check the conditional expectation bound");
    long st_dmax = 10000, st_kcap = 60;
    st_ver->add_option("--dmax", st_dmax, "largest degree to check");
    st_ver->add_option("--kcap", st_kcap, "largest k to check");
    st_ver->add_option("--out", st_out, "output path");

    // ---- extract ------------------------------------------------------
    auto* extract = app.add_subcommand("extract", "dense bipartite / semi-bipartite witnesses");
    std::string ex_in, ex_method = "coloring", ex_out;
    uint64_t ex_seed = 0;
    extract->add_option("--in", ex_in, "input edge-list path")->required();
    extract->add_option("--method", ex_method,
                        "fractional | coloring | semi-exact | semi-local | oracle");
    extract->add_option("--seed", ex_seed, "seed for the heuristic modes");
    extract->add_option("--out", ex_out, "output path (stdout when omitted)");

    // ---- sep ----------------------------------------------------------
    auto* sep = app.add_subcommand("sep", "separation choosability");
    std::string sep_in, sep_mode = "exact", sep_out;
    int sep_k = 2, sep_trials = 1000;
    uint64_t sep_seed = 0, sep_budget = kDefaultSepBudget;
    sep->add_option("--in", sep_in, "input edge-list path")->required();
    sep->add_option("--k", sep_k, "list size")->required();
    sep->add_option("--mode", sep_mode, "exact | search");
    sep->add_option("--trials", sep_trials, "trials for the randomized search");
    sep->add_option("--seed", sep_seed, "seed for the randomized search");
    sep->add_option("--budget", sep_budget, "canonical assignment budget for exact mode");
    sep->add_option("--out", sep_out, "output path (stdout when omitted)");

    // ---- exp ----------------------------------------------------------
    auto* exp = app.add_subcommand("exp", "experiment campaigns");
    auto* exp_run = exp->add_subcommand("run", "run a campaign from a JSON spec");
    std::string exp_spec, exp_dir = ".";
    int exp_workers = 0;
    bool exp_timings = false;
    exp_run->add_option("--spec", exp_spec, "experiment spec JSON path")->required();
    exp_run->add_option("--out-dir", exp_dir, "output directory");
    exp_run->add_option(
        "--workers", exp_workers,
        "worker threads (default: SEPBIP_WORKERS or 1; results never depend on it)");
    exp_run->add_flag("--timings", exp_timings,
                      "fill runtime_ms with wall-clock times (breaks byte-identical reruns)");

    CLI11_PARSE(app, argc, argv);

    try {
        if (gen->parsed()) {
            GenSpec spec;
            spec.kind = parse_gen_kind(gen_kind);
            spec.n = gen_n;
            spec.b = gen_b;
            spec.p = parse_frac(gen_p);
            spec.d_param = parse_frac(gen_D);
            spec.c_param = parse_frac(gen_c);
            spec.r = gen_r;
            spec.g = gen_g;
            spec.fixture = gen_name;
            spec.seed = gen_seed;
            TriangleFreeStats tf;
            DeletionStats del;
            Graph g = generate(spec, &tf, &del);
            std::ostringstream edge_text;
            write_edge_list(edge_text, g);
            write_output(gen_out, edge_text.str());
            if (!gen_stats.empty()) {
                ordered_json j;
                j["schema_version"] = kSchemaVersion;
                j["kind"] = gen_kind;
                j["n"] = spec.n;
                j["seed"] = spec.seed;
                j["vertices"] = g.vertex_count();
                j["edges"] = g.edge_count();
                if (spec.kind == GenKind::TriangleFree) {
                    j["p"] = to_frac_string(tf.p);
                    j["initial_triangles"] = tf.initial_triangles;
                    j["vertices_deleted"] = tf.vertices_deleted;
                    j["min_degree_before"] = tf.min_degree_before;
                    j["max_degree_before"] = tf.max_degree_before;
                    j["min_degree_after"] = tf.min_degree_after;
                    j["max_degree_after"] = tf.max_degree_after;
                } else if (spec.kind == GenKind::KrFree || spec.kind == GenKind::HighGirth) {
                    j["p"] = to_frac_string(del.p);
                    j["vertices_deleted"] = del.vertices_deleted;
                }
                write_output(gen_stats, dump(j));
            }
        } else if (color->parsed()) {
            Graph g = read_edge_list_file(color_in);
            ordered_json j;
            j["schema_version"] = kSchemaVersion;
            j["mode"] = color_mode;
            if (color_mode == "greedy" || color_mode == "exact") {
                ProperColoring col = color_mode == "greedy" ? greedy_coloring(g)
                                                            : chromatic_number_exact(g).second;
                col.validate(g);
                j["k"] = col.k;
                j["colors"] = col.colors;
                ordered_json classes = ordered_json::array();
                for (const VertexSet& cls : col.classes()) classes.push_back(cls.members());
                j["classes"] = classes;
            } else if (color_mode == "fractional") {
                FractionalSolution sol = fractional_chromatic_exact(g);
                j["value"] = to_frac_string(sol.coloring.value);
                j["value_float"] = to_double(sol.coloring.value);
                ordered_json support = ordered_json::array();
                for (size_t i = 0; i < sol.coloring.support.size(); ++i) {
                    ordered_json entry;
                    entry["set"] = sol.coloring.support[i].members();
                    entry["weight"] = to_frac_string(sol.coloring.weights[i]);
                    support.push_back(entry);
                }
                j["support"] = support;
                ordered_json dual = ordered_json::array();
                for (const Rational& y : sol.dual) dual.push_back(to_frac_string(y));
                j["dual"] = dual;
            } else {
                fail(ErrorCode::BadParameter, "unknown color mode: " + color_mode);
            }
            write_output(color_out, dump(j));
        } else if (st_enum->parsed()) {
            Graph g = read_edge_list_file(st_in);
            StableSetFamily fam = enumerate_stable_sets(g);
            ordered_json j;
            j["schema_version"] = kSchemaVersion;
            j["count"] = fam.count();
            ordered_json sets = ordered_json::array();
            for (const VertexSet& s : fam.all_sets) sets.push_back(s.members());
            j["sets"] = sets;
            write_output(st_out, dump(j));
        } else if (st_exp->parsed()) {
            Graph g = read_edge_list_file(st_in);
            Rational e = expected_degree_sum(g);
            ordered_json j;
            j["schema_version"] = kSchemaVersion;
            j["count"] = enumerate_stable_sets(g).count();
            j["expected_degree_sum"] = to_frac_string(e);
            j["expected_degree_sum_float"] = to_double(e);
            write_output(st_out, dump(j));
        } else if (st_ver->parsed()) {
            AppendixReport rep = verify_appendix_inequality(st_dmax, st_kcap);
            AuxMinimum aux = appendix_aux_minimum();
            ordered_json j;
            j["schema_version"] = kSchemaVersion;
            j["d_max"] = st_dmax;
            j["k_cap"] = st_kcap;
            j["pairs_checked"] = rep.pairs_checked;
            j["violations"] = rep.violations;
            j["min_slack"] = to_frac_string(rep.min_slack);
            j["min_slack_float"] = to_double(rep.min_slack);
            j["min_at_d"] = rep.min_d;
            j["min_at_k"] = rep.min_k;
            j["aux_minimum_x"] = aux.x;
            j["aux_minimum_value"] = aux.value;
            write_output(st_out, dump(j));
        } else if (extract->parsed()) {
            Graph g = read_edge_list_file(ex_in);
            ordered_json j;
            if (ex_method == "coloring") {
                j = bipartite_witness_json(g, extract_from_coloring(g, greedy_coloring(g)),
                                           ex_method);
            } else if (ex_method == "fractional") {
                StableSetDistribution dist =
                    fractional_to_distribution(g, fractional_chromatic_exact(g).coloring);
                j = bipartite_witness_json(g, extract_from_distribution(g, dist), ex_method);
            } else if (ex_method == "oracle") {
                j = bipartite_witness_json(g, max_bip_induced_oracle(g), ex_method);
            } else if (ex_method == "semi-exact") {
                j = semi_witness_json(g, best_semi_bipartite(g, SemiMode::Exact), ex_method);
            } else if (ex_method == "semi-local") {
                j = semi_witness_json(g, best_semi_bipartite(g, SemiMode::LocalSearch, ex_seed),
                                      ex_method);
            } else {
                fail(ErrorCode::BadParameter, "unknown extract method: " + ex_method);
            }
            write_output(ex_out, dump(j));
        } else if (sep->parsed()) {
            Graph g = read_edge_list_file(sep_in);
            ordered_json j;
            j["schema_version"] = kSchemaVersion;
            j["k"] = sep_k;
            j["mode"] = sep_mode;
            if (sep_mode == "exact") {
                SepDecision dec = decide_sep_choosable(g, sep_k, sep_budget);
                j["status"] = dec.status == SepStatus::Choosable      ? "choosable"
                              : dec.status == SepStatus::NotChoosable ? "not_choosable"
                                                                      : "unknown";
                j["assignments_checked"] = dec.assignments_checked;
                if (dec.witness) j["witness"] = assignment_json(*dec.witness);
            } else if (sep_mode == "search") {
                auto witness = search_bad_assignment(g, sep_k, sep_trials, sep_seed);
                j["trials"] = sep_trials;
                j["seed"] = sep_seed;
                j["found"] = witness.has_value();
                if (witness) j["witness"] = assignment_json(*witness);
            } else {
                fail(ErrorCode::BadParameter, "unknown sep mode: " + sep_mode);
            }
            write_output(sep_out, dump(j));
        } else if (exp_run->parsed()) {
            std::ifstream spec_file(exp_spec);
            if (!spec_file) fail(ErrorCode::Io, "cannot open " + exp_spec);
            std::stringstream buf;
            buf << spec_file.rdbuf();
            ExperimentSpec spec = ExperimentSpec::from_json(buf.str());
            RunOptions options;
            options.workers = exp_workers > 0 ? exp_workers : workers_from_env();
            options.timings = exp_timings;
            RunRecord record = run_experiment(spec, options);
            emit_report(record, exp_dir);
            std::cout << "wrote " << record.rows.size() << " rows to " << exp_dir << "\n";
        }
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}

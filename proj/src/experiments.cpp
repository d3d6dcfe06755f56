#include "sepbip/experiments.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <thread>

#include <json.hpp>

#include "sepbip/bip_extract.hpp"
#include "sepbip/coloring.hpp"
#include "sepbip/error.hpp"
#include "sepbip/generators.hpp"
#include "sepbip/graph.hpp"
#include "sepbip/rng.hpp"

namespace sepbip {

ExperimentKind parse_experiment_kind(const std::string& s) {
    if (s == "erdosrenyi_scaling") return ExperimentKind::ErdosRenyiScaling;
    if (s == "trianglebip_stats") return ExperimentKind::TrianglebipStats;
    if (s == "transition_profile") return ExperimentKind::TransitionProfile;
    fail(ErrorCode::BadParameter, "unknown experiment: " + s);
}

std::string experiment_kind_name(ExperimentKind k) {
    switch (k) {
        case ExperimentKind::ErdosRenyiScaling: return "erdosrenyi_scaling";
        case ExperimentKind::TrianglebipStats: return "trianglebip_stats";
        case ExperimentKind::TransitionProfile: return "transition_profile";
    }
    return "?";
}

namespace {

std::vector<std::string> default_methods(ExperimentKind kind) {
    switch (kind) {
        case ExperimentKind::ErdosRenyiScaling: return {"semi-local"};
        case ExperimentKind::TrianglebipStats: return {"semi-local"};
        case ExperimentKind::TransitionProfile: return {"coloring", "semi-local", "oracle"};
    }
    return {};
}

std::string format_double(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.12g", x);
    return buf;
}

} // namespace

void ExperimentSpec::validate() const {
    if (n_values.empty()) fail(ErrorCode::BadParameter, "empty n sweep");
    if (params.empty()) fail(ErrorCode::BadParameter, "empty parameter sweep");
    if (trials < 1) fail(ErrorCode::BadParameter, "trials must be >= 1");
    for (int n : n_values)
        if (n < 1) fail(ErrorCode::BadParameter, "n must be positive");
    for (const Rational& p : params) {
        switch (kind) {
            case ExperimentKind::ErdosRenyiScaling:
                if (p <= 0) fail(ErrorCode::BadParameter, "scaling constant must be positive");
                break;
            case ExperimentKind::TrianglebipStats:
                if (p <= 0 || p * p * p * p >= Rational(1, 2))
                    fail(ErrorCode::BadParameter, "D must lie in (0, 2^(-1/4))");
                break;
            case ExperimentKind::TransitionProfile:
                if (p < 0 || p >= 1) fail(ErrorCode::BadParameter, "eta must lie in [0, 1)");
                break;
        }
    }
}

std::string ExperimentSpec::canonical_json() const {
    std::ostringstream out;
    out << "{\"name\":\"" << name << "\",\"experiment\":\"" << experiment_kind_name(kind)
        << "\",\"n\":[";
    for (size_t i = 0; i < n_values.size(); ++i) out << (i ? "," : "") << n_values[i];
    out << "],\"param\":[";
    for (size_t i = 0; i < params.size(); ++i)
        out << (i ? "," : "") << "\"" << to_frac_string(params[i]) << "\"";
    out << "],\"trials\":" << trials << ",\"master_seed\":" << master_seed << ",\"methods\":[";
    std::vector<std::string> ms = methods.empty() ? default_methods(kind) : methods;
    for (size_t i = 0; i < ms.size(); ++i) out << (i ? "," : "") << "\"" << ms[i] << "\"";
    out << "],\"local_restarts\":" << local_restarts << "}";
    return out.str();
}

ExperimentSpec ExperimentSpec::from_json(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        fail(ErrorCode::Io, std::string("bad experiment spec json: ") + e.what());
    }
    ExperimentSpec spec;
    try {
        spec.name = j.at("name").get<std::string>();
        spec.kind = parse_experiment_kind(j.at("experiment").get<std::string>());
        for (const auto& n : j.at("n")) spec.n_values.push_back(n.get<int>());
        for (const auto& p : j.at("param")) spec.params.push_back(parse_frac(p.get<std::string>()));
        spec.trials = j.value("trials", 1);
        spec.master_seed = j.value("master_seed", uint64_t(0));
        if (j.contains("methods"))
            for (const auto& m : j.at("methods")) spec.methods.push_back(m.get<std::string>());
        spec.local_restarts = j.value("local_restarts", 8);
    } catch (const nlohmann::json::exception& e) {
        fail(ErrorCode::Io, std::string("bad experiment spec field: ") + e.what());
    }
    spec.validate();
    return spec;
}

std::string ExperimentSpec::hash() const {
    // FNV-1a, 64-bit
    uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : canonical_json()) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    char buf[20];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

int workers_from_env() {
    const char* env = std::getenv("SEPBIP_WORKERS");
    if (!env) return 1;
    int w = std::atoi(env);
    return w >= 1 ? w : 1;
}

namespace {

struct PreparedGraph {
    Graph graph;
    std::map<std::string, std::string> extras;
};

// deterministic rational proxy for n^(1/3)
Rational cbrt_rational(int n) {
    Rational r(scaled_root(BigInt(n), 3), BigInt(1) << 32);
    r.canonicalize();
    return r;
}

PreparedGraph prepare_graph(const ExperimentSpec& spec, int n, const Rational& param,
                            uint64_t seed) {
    PreparedGraph out;
    switch (spec.kind) {
        case ExperimentKind::ErdosRenyiScaling: {
            Rational p = param * neg_power(static_cast<unsigned long>(n), 2, 3);
            if (p > 1) p = 1;
            out.graph = gnp(n, p, seed);
            out.extras["p"] = to_frac_string(p);
            double np = static_cast<double>(n) * to_double(p);
            out.extras["ln_np"] = format_double(np > 0 ? std::log(np) : 0.0);
            break;
        }
        case ExperimentKind::TrianglebipStats: {
            auto [g, stats] = triangle_free_construction(n, param, seed);
            out.extras["p"] = to_frac_string(stats.p);
            out.extras["initial_triangles"] = std::to_string(stats.initial_triangles);
            out.extras["vertices_deleted"] = std::to_string(stats.vertices_deleted);
            out.extras["min_degree_before"] = std::to_string(stats.min_degree_before);
            out.extras["max_degree_before"] = std::to_string(stats.max_degree_before);
            out.extras["min_degree_after"] = std::to_string(stats.min_degree_after);
            out.extras["max_degree_after"] = std::to_string(stats.max_degree_after);
            // asymptotic degree window, rational proxy within 2^-32
            Rational root = cbrt_rational(n);
            Rational lo = param * (1 - 2 * param * param * param * param) * root / 4;
            Rational hi = 3 * param * root / 2;
            int in_window = 0;
            for (int v = 0; v < g.vertex_count(); ++v) {
                Rational d(g.degree(v));
                if (d >= lo && d <= hi) ++in_window;
            }
            out.extras["window_lo"] = format_double(to_double(lo));
            out.extras["window_hi"] = format_double(to_double(hi));
            out.extras["degrees_in_window"] = std::to_string(in_window);
            out.extras["graph_n"] = std::to_string(g.vertex_count());
            out.graph = std::move(g);
            break;
        }
        case ExperimentKind::TransitionProfile: {
            // eta = a/b; density parameter D = n^(eta - 1/3), capped below 2^(-1/4)
            BigInt a = param.get_num();
            BigInt b = param.get_den();
            unsigned long au = mpz_get_ui(a.get_mpz_t());
            unsigned long bu = mpz_get_ui(b.get_mpz_t());
            BigInt npow;
            mpz_ui_pow_ui(npow.get_mpz_t(), static_cast<unsigned long>(n), au);
            BigInt target;
            mpz_root(target.get_mpz_t(), npow.get_mpz_t(), bu);
            long target_deg = std::max(1L, mpz_get_si(target.get_mpz_t()));

            Rational d_param;
            long e_num = 3 * static_cast<long>(au) - static_cast<long>(bu);
            unsigned long e_den = 3 * bu;
            if (e_num == 0) {
                d_param = 1;
            } else if (e_num > 0) {
                BigInt pw;
                mpz_ui_pow_ui(pw.get_mpz_t(), static_cast<unsigned long>(n),
                              static_cast<unsigned long>(e_num));
                d_param = Rational(scaled_root(pw, e_den), BigInt(1) << 32);
            } else {
                BigInt pw;
                mpz_ui_pow_ui(pw.get_mpz_t(), static_cast<unsigned long>(n),
                              static_cast<unsigned long>(-e_num));
                d_param = Rational(BigInt(1) << 32, scaled_root(pw, e_den));
            }
            d_param.canonicalize();
            Rational cap(21, 25); // largest simple rational with cap^4 < 1/2
            if (d_param > cap) d_param = cap;

            auto [g0, stats] = triangle_free_construction(n, d_param, seed);
            VertexSet core = peel_to_min_degree(g0, Rational(target_deg));
            Graph g = core.empty() ? Graph() : induced_subgraph(g0, core).graph;
            out.extras["D"] = to_frac_string(d_param);
            out.extras["target_min_degree"] = std::to_string(target_deg);
            out.extras["target_reached"] = core.empty() ? "0" : "1";
            out.extras["graph_n"] = std::to_string(g.vertex_count());
            out.extras["graph_min_degree"] =
                std::to_string(g.vertex_count() ? g.min_degree() : 0);
            out.graph = std::move(g);
            break;
        }
    }
    return out;
}

int semi_min_cross_degree(const Graph& g, const SemiBipartiteWitness& w) {
    if (w.stable_part.empty() && w.other_part.empty()) return 0;
    int best = g.vertex_count();
    auto cross_degree = [&](int v, const VertexSet& opposite) {
        int d = 0;
        for (int u : g.neighbors(v))
            if (opposite.contains(u)) ++d;
        return d;
    };
    for (int v : w.stable_part.members()) best = std::min(best, cross_degree(v, w.other_part));
    for (int v : w.other_part.members()) best = std::min(best, cross_degree(v, w.stable_part));
    return best;
}

void run_method(const ExperimentSpec& spec, const std::string& method, const Graph& g,
                uint64_t seed, RunRow& row) {
    if (method == "semi-exact" || method == "semi-local" || method == "semi-sampled") {
        SemiMode mode = method == "semi-exact"  ? SemiMode::Exact
                        : method == "semi-local" ? SemiMode::LocalSearch
                                                 : SemiMode::Sampled;
        int trials = mode == SemiMode::LocalSearch ? spec.local_restarts : 64;
        SemiBipartiteWitness w = best_semi_bipartite(g, mode, seed, trials);
        w.verify(g);
        row.witness_size1 = w.stable_part.size();
        row.witness_size2 = w.other_part.size();
        row.cross_edges = w.cross_edge_count;
        row.avg_degree = w.avg_degree;
        row.min_degree = semi_min_cross_degree(g, w);
        row.verified = true;
    } else if (method == "coloring") {
        BipartiteWitness w = extract_from_coloring(g, greedy_coloring(g));
        w.verify(g);
        row.witness_size1 = w.part1.size();
        row.witness_size2 = w.part2.size();
        row.cross_edges = w.edge_count;
        row.avg_degree = w.avg_degree;
        row.min_degree = w.min_degree;
        row.verified = true;
    } else if (method == "fractional") {
        StableSetDistribution dist =
            fractional_to_distribution(g, fractional_chromatic_exact(g).coloring);
        BipartiteWitness w = extract_from_distribution(g, dist);
        w.verify(g);
        row.witness_size1 = w.part1.size();
        row.witness_size2 = w.part2.size();
        row.cross_edges = w.edge_count;
        row.avg_degree = w.avg_degree;
        row.min_degree = w.min_degree;
        row.verified = true;
    } else if (method == "oracle") {
        BipartiteWitness w = max_bip_induced_oracle(g);
        w.verify(g);
        row.witness_size1 = w.part1.size();
        row.witness_size2 = w.part2.size();
        row.cross_edges = w.edge_count;
        row.avg_degree = w.avg_degree;
        row.min_degree = w.min_degree;
        row.verified = true;
    } else {
        fail(ErrorCode::BadParameter, "unknown method: " + method);
    }
    row.avg_degree_float = to_double(row.avg_degree);
}

} // namespace

RunRecord run_experiment(const ExperimentSpec& spec, const RunOptions& options) {
    spec.validate();
    std::vector<std::string> methods = spec.methods.empty() ? default_methods(spec.kind)
                                                            : spec.methods;

    struct Point {
        int n;
        Rational param;
    };
    std::vector<Point> points;
    for (int n : spec.n_values)
        for (const Rational& p : spec.params) points.push_back({n, p});

    RunRecord record;
    record.spec = spec;
    record.spec_hash = spec.hash();
    size_t tasks = points.size() * static_cast<size_t>(spec.trials);
    record.rows.assign(tasks * methods.size(), RunRow{});

    std::atomic<size_t> next_task{0};
    auto worker = [&]() {
        while (true) {
            size_t task = next_task.fetch_add(1);
            if (task >= tasks) return;
            size_t point_idx = task / spec.trials;
            size_t trial_idx = task % spec.trials;
            const Point& pt = points[point_idx];
            // per-row seed: a pure function of (master_seed, point, trial)
            uint64_t seed = stream_u64(spec.master_seed, point_idx, trial_idx);
            PreparedGraph prep;
            bool prep_ok = true;
            std::string prep_error;
            try {
                prep = prepare_graph(spec, pt.n, pt.param, seed);
            } catch (const Error& e) {
                prep_ok = false;
                prep_error = e.what();
            }
            for (size_t mi = 0; mi < methods.size(); ++mi) {
                RunRow& row = record.rows[task * methods.size() + mi];
                row.n = pt.n;
                row.param = to_frac_string(pt.param);
                row.seed = seed;
                row.method = methods[mi];
                row.extras = prep.extras;
                if (!prep_ok) {
                    row.verified = false;
                    row.extras["error"] = prep_error;
                    continue;
                }
                auto started = std::chrono::steady_clock::now();
                try {
                    run_method(spec, methods[mi], prep.graph, seed, row);
                } catch (const Error& e) {
                    row.verified = false;
                    row.extras["error"] = e.what(); // budget violations stay per-row
                }
                if (options.timings) {
                    auto elapsed = std::chrono::steady_clock::now() - started;
                    row.runtime_ms =
                        std::chrono::duration_cast<std::chrono::milliseconds>(elapsed).count();
                }
            }
        }
    };

    int workers = std::max(1, options.workers);
    if (workers == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (int w = 0; w < workers; ++w) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
    }

    record.aggregates = recompute_aggregates(spec, record.rows);
    return record;
}

std::vector<Aggregate> recompute_aggregates(const ExperimentSpec& spec,
                                            const std::vector<RunRow>& rows) {
    // group rows by (n, param, method) preserving sweep order
    std::vector<Aggregate> out;
    std::map<std::tuple<int, std::string, std::string>, size_t> index;
    std::vector<std::vector<const RunRow*>> buckets;
    std::vector<std::tuple<int, std::string, std::string>> order;
    for (const RunRow& row : rows) {
        auto key = std::make_tuple(row.n, row.param, row.method);
        auto it = index.find(key);
        if (it == index.end()) {
            index.emplace(key, buckets.size());
            buckets.emplace_back();
            order.push_back(key);
            it = index.find(key);
        }
        buckets[it->second].push_back(&row);
    }
    for (size_t b = 0; b < buckets.size(); ++b) {
        Aggregate agg;
        agg.n = std::get<0>(order[b]);
        agg.param = std::get<1>(order[b]);
        agg.method = std::get<2>(order[b]);
        std::vector<double> avgs;
        double sum_avg = 0, sum_min = 0, max_avg = 0, max_min = 0;
        for (const RunRow* row : buckets[b]) {
            avgs.push_back(row->avg_degree_float);
            sum_avg += row->avg_degree_float;
            sum_min += row->min_degree;
            max_avg = std::max(max_avg, row->avg_degree_float);
            max_min = std::max(max_min, static_cast<double>(row->min_degree));
        }
        agg.rows = static_cast<int>(avgs.size());
        agg.mean_avg_degree = sum_avg / agg.rows;
        agg.mean_min_degree = sum_min / agg.rows;
        agg.max_avg_degree = max_avg;
        agg.max_min_degree = max_min;
        std::sort(avgs.begin(), avgs.end());
        agg.median_avg_degree = avgs.size() % 2 == 1
                                    ? avgs[avgs.size() / 2]
                                    : (avgs[avgs.size() / 2 - 1] + avgs[avgs.size() / 2]) / 2;
        switch (spec.kind) {
            case ExperimentKind::ErdosRenyiScaling: {
                Rational p = parse_frac(agg.param) *
                             neg_power(static_cast<unsigned long>(agg.n), 2, 3);
                if (p > 1) p = 1;
                double lnnp = std::log(static_cast<double>(agg.n) * to_double(p));
                agg.ratio = lnnp > 0 ? agg.mean_avg_degree / lnnp : 0;
                break;
            }
            case ExperimentKind::TrianglebipStats:
                agg.ratio = agg.max_avg_degree / std::log(static_cast<double>(agg.n));
                break;
            case ExperimentKind::TransitionProfile:
                agg.ratio = agg.mean_min_degree / std::log(static_cast<double>(agg.n));
                break;
        }
        out.push_back(agg);
    }
    return out;
}

void emit_report(const RunRecord& record, const std::string& out_dir) {
    std::filesystem::create_directories(out_dir);

    {
        std::ofstream csv(out_dir + "/rows.csv");
        if (!csv) fail(ErrorCode::Io, "cannot write rows.csv");
        csv << "# sepbip-exp-schema " << kExperimentSchemaVersion << "\n";
        csv << "n,param,seed,method,witness_size1,witness_size2,cross_edges,"
               "avg_degree_rational,avg_degree_float,min_degree,runtime_ms,verified\n";
        for (const RunRow& r : record.rows) {
            csv << r.n << ',' << r.param << ',' << r.seed << ',' << r.method << ','
                << r.witness_size1 << ',' << r.witness_size2 << ',' << r.cross_edges << ','
                << to_frac_string(r.avg_degree) << ',' << format_double(r.avg_degree_float) << ','
                << r.min_degree << ',' << r.runtime_ms << ',' << (r.verified ? 1 : 0) << "\n";
        }
    }
    {
        std::ofstream csv(out_dir + "/aggregates.csv");
        if (!csv) fail(ErrorCode::Io, "cannot write aggregates.csv");
        csv << "# sepbip-exp-schema " << kExperimentSchemaVersion << "\n";
        csv << "n,param,method,rows,mean_avg_degree,median_avg_degree,max_avg_degree,"
               "mean_min_degree,max_min_degree,ratio\n";
        for (const Aggregate& a : record.aggregates) {
            csv << a.n << ',' << a.param << ',' << a.method << ',' << a.rows << ','
                << format_double(a.mean_avg_degree) << ',' << format_double(a.median_avg_degree)
                << ',' << format_double(a.max_avg_degree) << ','
                << format_double(a.mean_min_degree) << ',' << format_double(a.max_min_degree)
                << ',' << format_double(a.ratio) << "\n";
        }
    }
    {
        nlohmann::ordered_json j;
        j["schema_version"] = kExperimentSchemaVersion;
        j["spec"] = nlohmann::ordered_json::parse(record.spec.canonical_json());
        j["spec_hash"] = record.spec_hash;
        nlohmann::ordered_json rows = nlohmann::ordered_json::array();
        for (const RunRow& r : record.rows) {
            nlohmann::ordered_json row;
            row["n"] = r.n;
            row["param"] = r.param;
            row["seed"] = r.seed;
            row["method"] = r.method;
            row["witness_size1"] = r.witness_size1;
            row["witness_size2"] = r.witness_size2;
            row["cross_edges"] = r.cross_edges;
            row["avg_degree_rational"] = to_frac_string(r.avg_degree);
            row["avg_degree_float"] = r.avg_degree_float;
            row["min_degree"] = r.min_degree;
            row["runtime_ms"] = r.runtime_ms;
            row["verified"] = r.verified;
            if (!r.extras.empty()) row["extras"] = r.extras;
            rows.push_back(row);
        }
        j["rows"] = rows;
        nlohmann::ordered_json aggs = nlohmann::ordered_json::array();
        for (const Aggregate& a : record.aggregates) {
            nlohmann::ordered_json agg;
            agg["n"] = a.n;
            agg["param"] = a.param;
            agg["method"] = a.method;
            agg["rows"] = a.rows;
            agg["mean_avg_degree"] = a.mean_avg_degree;
            agg["median_avg_degree"] = a.median_avg_degree;
            agg["max_avg_degree"] = a.max_avg_degree;
            agg["mean_min_degree"] = a.mean_min_degree;
            agg["max_min_degree"] = a.max_min_degree;
            agg["ratio"] = a.ratio;
            aggs.push_back(agg);
        }
        j["aggregates"] = aggs;
        std::ofstream js(out_dir + "/record.json");
        if (!js) fail(ErrorCode::Io, "cannot write record.json");
        js << j.dump(2) << "\n";
    }
}

std::vector<RunRow> parse_rows_csv(const std::string& path) {
    std::ifstream in(path);
    if (!in) fail(ErrorCode::Io, "cannot open " + path);
    std::string line;
    std::vector<RunRow> rows;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#' || line.rfind("n,", 0) == 0) continue;
        std::istringstream ls(line);
        std::string field;
        std::vector<std::string> fields;
        while (std::getline(ls, field, ',')) fields.push_back(field);
        if (fields.size() != 12) fail(ErrorCode::Io, "bad csv row: " + line);
        RunRow r;
        r.n = std::stoi(fields[0]);
        r.param = fields[1];
        r.seed = std::stoull(fields[2]);
        r.method = fields[3];
        r.witness_size1 = std::stoi(fields[4]);
        r.witness_size2 = std::stoi(fields[5]);
        r.cross_edges = std::stol(fields[6]);
        r.avg_degree = parse_frac(fields[7]);
        // the rational column is the source of truth; the float column is a
        // 12-digit convenience rendering
        r.avg_degree_float = to_double(r.avg_degree);
        r.min_degree = std::stoi(fields[9]);
        r.runtime_ms = std::stol(fields[10]);
        r.verified = fields[11] == "1";
        rows.push_back(r);
    }
    return rows;
}

} // namespace sepbip

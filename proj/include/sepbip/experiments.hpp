#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "sepbip/rational.hpp"

namespace sepbip {

enum class ExperimentKind { ErdosRenyiScaling, TrianglebipStats, TransitionProfile };

ExperimentKind parse_experiment_kind(const std::string& s);
std::string experiment_kind_name(ExperimentKind k);

// One sweep: the cross product of n values and rational parameters.
// The parameter means, per experiment:
//   erdosrenyi_scaling : C with p = C * n^(-2/3)
//   trianglebip_stats  : the density parameter D
//   transition_profile : the exponent eta in (0,1); min degree target n^eta
struct ExperimentSpec {
    std::string name;
    ExperimentKind kind = ExperimentKind::ErdosRenyiScaling;
    std::vector<int> n_values;
    std::vector<Rational> params;
    int trials = 1;
    uint64_t master_seed = 0;
    std::vector<std::string> methods; // empty = per-experiment default
    int local_restarts = 8;           // hill-climbing restarts for semi-local

    void validate() const;
    std::string canonical_json() const;      // stable field order
    static ExperimentSpec from_json(const std::string& text);
    std::string hash() const; // FNV-1a of the canonical form, hex
};

inline constexpr int kExperimentSchemaVersion = 1;

struct RunRow {
    int n = 0;
    std::string param; // "num/den"
    uint64_t seed = 0;
    std::string method;
    int witness_size1 = 0;
    int witness_size2 = 0;
    long cross_edges = 0;
    Rational avg_degree;
    double avg_degree_float = 0;
    int min_degree = 0;
    long runtime_ms = 0;
    bool verified = false;
    std::map<std::string, std::string> extras; // JSON only, never in the CSV
};

struct Aggregate {
    int n = 0;
    std::string param;
    std::string method;
    int rows = 0;
    double mean_avg_degree = 0;
    double median_avg_degree = 0;
    double max_avg_degree = 0;
    double mean_min_degree = 0;
    double max_min_degree = 0;
    double ratio = 0; // per-experiment scaling ratio, see implementation
};

struct RunRecord {
    std::string spec_hash;
    ExperimentSpec spec;
    std::vector<RunRow> rows; // points x trials x methods, in sweep order
    std::vector<Aggregate> aggregates;
};

struct RunOptions {
    int workers = 1;       // SEPBIP_WORKERS overrides; affects speed only
    bool timings = false;  // off by default so reruns are byte-identical
};

int workers_from_env();

RunRecord run_experiment(const ExperimentSpec& spec, const RunOptions& options = {});

// Deterministic fold over the rows in sweep order.
std::vector<Aggregate> recompute_aggregates(const ExperimentSpec& spec,
                                            const std::vector<RunRow>& rows);

// rows.csv, aggregates.csv and record.json under out_dir.
void emit_report(const RunRecord& record, const std::string& out_dir);

// Parses a rows.csv produced by emit_report (extras are not round-tripped).
std::vector<RunRow> parse_rows_csv(const std::string& path);

} // namespace sepbip

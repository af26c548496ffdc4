#pragma once

#include "area/types.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace area {

// Full parameterisation of one batch experiment.  Zero/empty fields are
// resolved to the experimental-protocol defaults for the chosen problem.
struct ExperimentSpec {
    std::string algorithm = "area";  // "area" or "moead"
    std::string problem;
    int objectives = 0;
    int population = 0;       // 0: protocol default for the problem
    int max_evaluations = 0;  // 0: protocol default for the problem
    int runs = 30;
    std::uint64_t base_seed = 1;
    std::string operator_kind = "auto";  // auto | sbx | de
    double update_fraction = 0.05;
    double archive_factor = 1.5;
    int additions = -1;
    std::string replacement = "neighbourhood";  // neighbourhood | single
    std::string aggregation = "division";       // division | multiplication (moead)
    std::string mode = "alternate";             // alternate | fixed | evolving
    std::string worst_from = "population";      // population | archive | merged
    int trajectory_stride = 100;
    int threads = 0;  // 0: hardware concurrency
    std::string out_dir;  // empty: nothing persisted
};

struct MetricRow {
    int run = 0;
    std::uint64_t seed = 0;
    double igd = 0.0;
    double hv = 0.0;
    double spacing = 0.0;
    int evaluations = 0;
};

struct MetricSummary {
    double mean = 0.0;
    double stddev = 0.0;
    double sem = 0.0;
};

struct ExperimentResult {
    ExperimentSpec spec;  // with defaults resolved
    std::vector<MetricRow> rows;

    std::vector<double> metric(const std::string& name) const;
    MetricSummary summary(const std::string& name) const;
};

// Fill protocol defaults (population, budget, operator) for the problem.
ExperimentSpec resolve_defaults(ExperimentSpec spec);

// Runs `spec.runs` seeded replications (seeds base, base+1, ...), writes
// per-run fronts, trajectories and a metrics.json document when out_dir is
// set, and returns the in-memory result.
ExperimentResult run_experiment(const ExperimentSpec& spec);

// Re-reads a persisted metrics.json.
ExperimentResult load_experiment(const std::string& metrics_json_path);

struct RankSumResult {
    double p_value = 1.0;
    char verdict = '=';  // '+': xs better, '-': ys better, '=': no significant difference
};

// Two-sided Mann-Whitney rank-sum test at alpha = 0.05; exact enumeration for
// small untied samples, normal approximation with tie correction otherwise.
RankSumResult rank_sum_test(const std::vector<double>& xs, const std::vector<double>& ys);

// Sample standard deviation (n-1) divided by sqrt(n).
double sem(const std::vector<double>& values);

// Plot-ready exports: concatenated and best-run fronts, mean IGD trajectory,
// and a parallel-coordinates table for more than three objectives.
void export_plot_data(const std::string& experiment_dir, const std::string& out_dir);

}  // namespace area

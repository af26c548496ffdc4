// Command-line driver: seeded batch experiments, rank-sum comparisons,
// plot-data export and reference-front generation.

#include "area/harness.hpp"
#include "area/metrics.hpp"
#include "area/problems.hpp"

#include <CLI11.hpp>

#include <cstdio>
#include <filesystem>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

namespace {

// --check band "metric:lo:hi"; run exits 3 when the aggregate mean is outside.
struct Band {
    std::string metric;
    double lo = 0.0;
    double hi = 0.0;
};

Band parse_band(const std::string& text) {
    Band b;
    std::istringstream ss(text);
    std::string lo, hi;
    if (!std::getline(ss, b.metric, ':') || !std::getline(ss, lo, ':') ||
        !std::getline(ss, hi, ':'))
        throw area::ConfigError("bad --check band, expected metric:lo:hi");
    b.lo = std::stod(lo);
    b.hi = std::stod(hi);
    return b;
}

int cmd_run(const area::ExperimentSpec& spec, const std::vector<std::string>& checks) {
    const area::ExperimentResult result = area::run_experiment(spec);
    for (const std::string metric : {"igd", "hv", "spacing"}) {
        const area::MetricSummary s = result.summary(metric);
        std::printf("%-8s mean=%.6e std=%.3e sem=%.3e\n", metric.c_str(), s.mean,
                    s.stddev, s.sem);
    }
    int status = 0;
    for (const auto& text : checks) {
        const Band band = parse_band(text);
        const double mean = result.summary(band.metric).mean;
        const bool ok = mean >= band.lo && mean <= band.hi;
        std::printf("check %s in [%g, %g]: %.6e %s\n", band.metric.c_str(), band.lo,
                    band.hi, mean, ok ? "PASS" : "FAIL");
        if (!ok) status = 3;
    }
    return status;
}

int cmd_stats(const std::string& a, const std::string& b, const std::string& metric) {
    const area::ExperimentResult ra = area::load_experiment(a);
    std::printf("A: %s/%s  %s mean=%.6e sem=%.3e\n", ra.spec.algorithm.c_str(),
                ra.spec.problem.c_str(), metric.c_str(), ra.summary(metric).mean,
                ra.summary(metric).sem);
    if (b.empty()) return 0;
    const area::ExperimentResult rb = area::load_experiment(b);
    std::printf("B: %s/%s  %s mean=%.6e sem=%.3e\n", rb.spec.algorithm.c_str(),
                rb.spec.problem.c_str(), metric.c_str(), rb.summary(metric).mean,
                rb.summary(metric).sem);
    const area::RankSumResult t = area::rank_sum_test(ra.metric(metric), rb.metric(metric));
    std::printf("rank-sum p=%.6g verdict=%c (on %s; '+' favours A, '-' favours B)\n",
                t.p_value, t.verdict, metric.c_str());
    return 0;
}

int cmd_genpf(const std::string& out, int points) {
    namespace fs = std::filesystem;
    fs::create_directories(out);
    for (const std::string& name : area::problem_names()) {
        if (area::has_analytic_front(name)) continue;
        std::vector<int> ms;
        if (name.rfind("WFG", 0) == 0)
            ms = {3, 8, 15};
        else if (name.rfind("MOP", 0) == 0)
            ms = {std::atoi(name.c_str() + 3) <= 5 ? 2 : 3};
        else if (name.rfind("UF", 0) == 0)
            ms = {std::atoi(name.c_str() + 2) <= 7 ? 2 : 3};
        else if (name == "F5" || name == "F6" || name == "F7" || name == "F8")
            ms = {3};
        else
            ms = {2};
        for (int m : ms) {
            const auto front = area::construct_front(name, m, points);
            const std::string path =
                out + "/" + name + "_" + std::to_string(m) + "d.pf";
            area::write_front_file(path, front);
            std::printf("%s: %zu points\n", path.c_str(), front.size());
        }
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"AREA multiobjective optimisation harness"};
    app.require_subcommand(1);

    area::ExperimentSpec spec;
    std::vector<std::string> checks;
    auto* run = app.add_subcommand("run", "run a seeded batch experiment");
    run->add_option("--alg", spec.algorithm, "area | moead");
    run->add_option("--problem", spec.problem, "problem name (see `list`)")->required();
    run->add_option("--objectives", spec.objectives, "objective count (0 = default)");
    run->add_option("--pop", spec.population, "population size (0 = protocol default)");
    run->add_option("--fe", spec.max_evaluations, "evaluation budget (0 = default)");
    run->add_option("--runs", spec.runs, "number of replications");
    run->add_option("--seed", spec.base_seed, "base seed; run k uses seed+k");
    run->add_option("--operator", spec.operator_kind, "auto | sbx | de");
    run->add_option("--fr", spec.update_fraction, "reference update interval fraction");
    run->add_option("--archive-factor", spec.archive_factor, "archive capacity / N");
    run->add_option("--additions", spec.additions,
                    "reference points added per update (-1 = ceil(sqrt(N)))");
    run->add_option("--replacement", spec.replacement, "neighbourhood | single");
    run->add_option("--aggregation", spec.aggregation,
                    "moead scalarisation: division | multiplication");
    run->add_option("--worst-from", spec.worst_from,
                    "anti-ideal source: population | archive | merged");
    run->add_option("--mode", spec.mode, "alternate | fixed | evolving");
    run->add_option("--traj-every", spec.trajectory_stride,
                    "IGD trajectory stride in evaluations (0 = off)");
    run->add_option("--threads", spec.threads, "worker threads (0 = hardware)");
    run->add_option("--out", spec.out_dir, "output directory");
    run->add_option("--check", checks,
                    "acceptance band metric:lo:hi; exit code 3 on failure");

    std::string stats_a, stats_b, metric = "igd";
    auto* stats = app.add_subcommand("stats", "summary and rank-sum comparison");
    stats->add_option("--a", stats_a, "metrics.json of experiment A")->required();
    stats->add_option("--b", stats_b, "metrics.json of experiment B");
    stats->add_option("--metric", metric, "igd | hv | spacing");

    std::string exp_dir, exp_out;
    auto* exp = app.add_subcommand("export", "write plot-ready data files");
    exp->add_option("--in", exp_dir, "experiment directory")->required();
    exp->add_option("--out", exp_out, "output directory (default <in>/plot)");

    std::string pf_out = "data";
    int pf_points = 1000;
    auto* gen = app.add_subcommand("genpf", "generate bundled reference fronts");
    gen->add_option("--out", pf_out, "output directory");
    gen->add_option("--points", pf_points, "target points per front");

    auto* list = app.add_subcommand("list", "list known problems");

    CLI11_PARSE(app, argc, argv);

    try {
        if (run->parsed()) return cmd_run(spec, checks);
        if (stats->parsed()) return cmd_stats(stats_a, stats_b, metric);
        if (exp->parsed()) {
            area::export_plot_data(exp_dir, exp_out.empty() ? exp_dir + "/plot" : exp_out);
            return 0;
        }
        if (gen->parsed()) return cmd_genpf(pf_out, pf_points);
        if (list->parsed()) {
            for (const auto& name : area::problem_names()) std::printf("%s\n", name.c_str());
            return 0;
        }
    } catch (const area::ConfigError& e) {
        std::fprintf(stderr, "configuration error: %s\n", e.what());
        return 2;
    } catch (const area::DataError& e) {
        std::fprintf(stderr, "data error: %s\n", e.what());
        return 2;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    }
    return 0;
}

#include "area/harness.hpp"

#include "area/archive.hpp"
#include "area/area.hpp"
#include "area/metrics.hpp"
#include "area/moead.hpp"
#include "area/problems.hpp"

#include <json.hpp>

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <numeric>
#include <stdexcept>
#include <thread>

namespace area {

namespace fs = std::filesystem;
using json = nlohmann::ordered_json;

namespace {

bool is_prefix(const std::string& prefix, const std::string& s) {
    return s.rfind(prefix, 0) == 0;
}

int default_population(const std::string& problem, int M) {
    if (is_prefix("UF", problem)) return M == 2 ? 600 : 595;
    switch (M) {
        case 2: return 100;
        case 3: return 105;
        case 8: return 156;
        case 15: return 135;
        default: return 100;
    }
}

int default_budget(const std::string& problem) {
    if (is_prefix("MOP", problem)) {
        const int idx = std::atoi(problem.c_str() + 3);
        return idx <= 5 ? 200000 : 300000;
    }
    if (is_prefix("UF", problem) || is_prefix("WFG", problem)) return 300000;
    return 20000;
}

OperatorKind resolve_operator(const ExperimentSpec& spec) {
    if (spec.operator_kind == "sbx") return OperatorKind::sbx;
    if (spec.operator_kind == "de") return OperatorKind::de;
    if (spec.operator_kind == "auto")
        return (is_prefix("MOP", spec.problem) || is_prefix("UF", spec.problem))
                   ? OperatorKind::de
                   : OperatorKind::sbx;
    throw ConfigError("unknown operator kind: " + spec.operator_kind);
}

ReferenceMode resolve_mode(const std::string& mode) {
    if (mode == "alternate") return ReferenceMode::alternate;
    if (mode == "fixed") return ReferenceMode::fixed_only;
    if (mode == "evolving") return ReferenceMode::evolving_only;
    throw ConfigError("unknown reference mode: " + mode);
}

Aggregation resolve_aggregation(const std::string& form) {
    if (form == "division") return Aggregation::division;
    if (form == "multiplication") return Aggregation::multiplication;
    throw ConfigError("unknown aggregation form: " + form);
}

WorstFrom resolve_worst(const std::string& rule) {
    if (rule == "population") return WorstFrom::population;
    if (rule == "archive") return WorstFrom::archive;
    if (rule == "merged") return WorstFrom::merged;
    throw ConfigError("unknown worst-from rule: " + rule);
}

ReplacementRule resolve_replacement(const std::string& rule) {
    if (rule == "neighbourhood") return ReplacementRule::neighbourhood;
    if (rule == "single") return ReplacementRule::single;
    throw ConfigError("unknown replacement rule: " + rule);
}

double median(std::vector<double> v) {
    std::sort(v.begin(), v.end());
    const std::size_t n = v.size();
    return n % 2 == 1 ? v[n / 2] : 0.5 * (v[n / 2 - 1] + v[n / 2]);
}

// Exact two-sided p-value by dynamic programming over rank subsets.
double exact_rank_sum_p(int n1, int n2, double u_obs) {
    const int n = n1 + n2;
    const int max_w = n1 * n * 2;  // generous bound on twice the rank sum
    // ways[j][w]: subsets of size j with rank sum w (ranks 1..n)
    std::vector<std::vector<double>> ways(n1 + 1, std::vector<double>(max_w + 1, 0.0));
    ways[0][0] = 1.0;
    for (int r = 1; r <= n; ++r)
        for (int j = std::min(r, n1); j >= 1; --j)
            for (int w = max_w; w >= r; --w)
                if (ways[j - 1][w - r] > 0.0) ways[j][w] += ways[j - 1][w - r];
    double total = 0.0, low = 0.0, high = 0.0;
    for (int w = 0; w <= max_w; ++w) {
        const double c = ways[n1][w];
        if (c == 0.0) continue;
        total += c;
        const double u = w - n1 * (n1 + 1) / 2.0;
        if (u <= u_obs) low += c;
        if (u >= u_obs) high += c;
    }
    return std::min(1.0, 2.0 * std::min(low, high) / total);
}

void write_trajectory(const std::string& path,
                      const std::vector<std::pair<int, double>>& samples) {
    std::ofstream out(path);
    char buf[64];
    for (const auto& [fe, value] : samples) {
        std::snprintf(buf, sizeof(buf), "%d %.12g", fe, value);
        out << buf << '\n';
    }
}

}  // namespace

std::vector<double> ExperimentResult::metric(const std::string& name) const {
    std::vector<double> out;
    out.reserve(rows.size());
    for (const auto& r : rows) {
        if (name == "igd")
            out.push_back(r.igd);
        else if (name == "hv")
            out.push_back(r.hv);
        else if (name == "spacing")
            out.push_back(r.spacing);
        else
            throw std::invalid_argument("unknown metric: " + name);
    }
    return out;
}

MetricSummary ExperimentResult::summary(const std::string& name) const {
    const std::vector<double> v = metric(name);
    MetricSummary s;
    const double n = static_cast<double>(v.size());
    s.mean = std::accumulate(v.begin(), v.end(), 0.0) / n;
    double acc = 0.0;
    for (double x : v) acc += (x - s.mean) * (x - s.mean);
    s.stddev = v.size() > 1 ? std::sqrt(acc / (n - 1.0)) : 0.0;
    s.sem = v.size() > 1 ? s.stddev / std::sqrt(n) : 0.0;
    return s;
}

ExperimentSpec resolve_defaults(ExperimentSpec spec) {
    if (spec.algorithm != "area" && spec.algorithm != "moead")
        throw ConfigError("unknown algorithm: " + spec.algorithm);
    if (spec.objectives == 0) {
        // biobjective unless the instance is triobjective-only
        try {
            make_problem(spec.problem, 2);
            spec.objectives = 2;
        } catch (const ConfigError&) {
            spec.objectives = 3;
        }
    }
    if (spec.population == 0)
        spec.population = default_population(spec.problem, spec.objectives);
    if (spec.max_evaluations == 0) spec.max_evaluations = default_budget(spec.problem);
    if (spec.runs < 1) throw ConfigError("runs must be positive");
    resolve_operator(spec);
    resolve_mode(spec.mode);
    resolve_replacement(spec.replacement);
    resolve_worst(spec.worst_from);
    resolve_aggregation(spec.aggregation);
    return spec;
}

ExperimentResult run_experiment(const ExperimentSpec& raw) {
    const ExperimentSpec spec = resolve_defaults(raw);
    const ProblemSpec problem = make_problem(spec.problem, spec.objectives);
    const std::vector<ObjectiveVector> front = pf_sample(problem, 1000);
    const ObjectiveVector hv_ref = nadir_plus(front);

    OperatorParams op;
    op.kind = resolve_operator(spec);

    ExperimentResult result;
    result.spec = spec;
    result.rows.resize(spec.runs);
    std::vector<std::vector<ObjectiveVector>> fronts(spec.runs);
    std::vector<std::vector<std::pair<int, double>>> trajectories(spec.runs);

    auto one_run = [&](int k) {
        const std::uint64_t seed = spec.base_seed + static_cast<std::uint64_t>(k);
        RunResult rr;
        if (spec.algorithm == "area") {
            AreaConfig cfg;
            cfg.problem = problem;
            cfg.population = spec.population;
            cfg.max_evaluations = spec.max_evaluations;
            cfg.update_fraction = spec.update_fraction;
            cfg.archive_factor = spec.archive_factor;
            cfg.additions = spec.additions;
            cfg.operators = op;
            cfg.replacement = resolve_replacement(spec.replacement);
            cfg.worst_from = resolve_worst(spec.worst_from);
            cfg.mode = resolve_mode(spec.mode);
            cfg.seed = seed;
            cfg.trajectory_stride = spec.trajectory_stride;
            if (spec.trajectory_stride > 0) cfg.trajectory_front = front;
            rr = run_area(cfg);
        } else {
            MoeadConfig cfg;
            cfg.problem = problem;
            cfg.population = spec.population;
            cfg.max_evaluations = spec.max_evaluations;
            cfg.operators = op;
            cfg.aggregation = resolve_aggregation(spec.aggregation);
            cfg.seed = seed;
            cfg.trajectory_stride = spec.trajectory_stride;
            if (spec.trajectory_stride > 0) cfg.trajectory_front = front;
            rr = run_moead(cfg);
        }
        Archive assessed;
        assessed.members = rr.final_archive;
        const std::vector<ObjectiveVector> objs = assess(assessed, spec.population);
        MetricRow row;
        row.run = k;
        row.seed = seed;
        row.igd = igd(objs, front);
        row.hv = hv(objs, hv_ref);
        row.spacing = objs.size() >= 2 ? spacing(objs) : 0.0;
        row.evaluations = rr.evaluations_used;
        result.rows[k] = row;
        fronts[k] = objs;
        trajectories[k] = std::move(rr.igd_trajectory);
    };

    const int hw = static_cast<int>(std::thread::hardware_concurrency());
    const int workers =
        std::max(1, std::min(spec.threads > 0 ? spec.threads : hw, spec.runs));
    if (workers <= 1) {
        for (int k = 0; k < spec.runs; ++k) one_run(k);
    } else {
        std::atomic<int> next{0};
        std::vector<std::thread> pool;
        pool.reserve(workers);
        for (int w = 0; w < workers; ++w)
            pool.emplace_back([&]() {
                for (int k = next.fetch_add(1); k < spec.runs; k = next.fetch_add(1))
                    one_run(k);
            });
        for (auto& t : pool) t.join();
    }

    if (!spec.out_dir.empty()) {
        fs::create_directories(spec.out_dir + "/fronts");
        if (spec.trajectory_stride > 0) fs::create_directories(spec.out_dir + "/trajectories");
        for (int k = 0; k < spec.runs; ++k) {
            write_front_file(spec.out_dir + "/fronts/run_" + std::to_string(k) + ".pf",
                             fronts[k]);
            if (spec.trajectory_stride > 0)
                write_trajectory(
                    spec.out_dir + "/trajectories/run_" + std::to_string(k) + ".dat",
                    trajectories[k]);
        }

        json doc;
        doc["schema_version"] = 1;
        json js;
        js["algorithm"] = spec.algorithm;
        js["problem"] = spec.problem;
        js["objectives"] = spec.objectives;
        js["population"] = spec.population;
        js["max_evaluations"] = spec.max_evaluations;
        js["runs"] = spec.runs;
        js["base_seed"] = spec.base_seed;
        js["operator"] = op.kind == OperatorKind::de ? "de" : "sbx";
        js["update_fraction"] = spec.update_fraction;
        js["archive_factor"] = spec.archive_factor;
        js["additions"] = spec.additions;
        js["replacement"] = spec.replacement;
        js["aggregation"] = spec.aggregation;
        js["worst_from"] = spec.worst_from;
        js["mode"] = spec.mode;
        js["trajectory_stride"] = spec.trajectory_stride;
        doc["spec"] = js;
        json runs = json::array();
        for (const auto& r : result.rows) {
            json row;
            row["run"] = r.run;
            row["seed"] = r.seed;
            row["igd"] = r.igd;
            row["hv"] = r.hv;
            row["spacing"] = r.spacing;
            row["evaluations"] = r.evaluations;
            runs.push_back(row);
        }
        doc["runs"] = runs;
        json agg;
        for (const std::string m : {"igd", "hv", "spacing"}) {
            const MetricSummary s = result.summary(m);
            agg[m] = {{"mean", s.mean}, {"stddev", s.stddev}, {"sem", s.sem}};
        }
        doc["aggregate"] = agg;
        std::ofstream out(spec.out_dir + "/metrics.json");
        out << doc.dump(2) << '\n';
    }
    return result;
}

ExperimentResult load_experiment(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw DataError("cannot open metrics file: " + path);
    json doc = json::parse(in);
    ExperimentResult result;
    const json& js = doc.at("spec");
    result.spec.algorithm = js.at("algorithm").get<std::string>();
    result.spec.problem = js.at("problem").get<std::string>();
    result.spec.objectives = js.at("objectives").get<int>();
    result.spec.population = js.at("population").get<int>();
    result.spec.max_evaluations = js.at("max_evaluations").get<int>();
    result.spec.runs = js.at("runs").get<int>();
    result.spec.base_seed = js.at("base_seed").get<std::uint64_t>();
    result.spec.update_fraction = js.at("update_fraction").get<double>();
    result.spec.archive_factor = js.at("archive_factor").get<double>();
    result.spec.replacement = js.at("replacement").get<std::string>();
    result.spec.aggregation = js.at("aggregation").get<std::string>();
    result.spec.mode = js.at("mode").get<std::string>();
    result.spec.trajectory_stride = js.at("trajectory_stride").get<int>();
    for (const auto& row : doc.at("runs")) {
        MetricRow r;
        r.run = row.at("run").get<int>();
        r.seed = row.at("seed").get<std::uint64_t>();
        r.igd = row.at("igd").get<double>();
        r.hv = row.at("hv").get<double>();
        r.spacing = row.at("spacing").get<double>();
        r.evaluations = row.at("evaluations").get<int>();
        result.rows.push_back(r);
    }
    return result;
}

RankSumResult rank_sum_test(const std::vector<double>& xs, const std::vector<double>& ys) {
    const int n1 = static_cast<int>(xs.size());
    const int n2 = static_cast<int>(ys.size());
    if (n1 < 2 || n2 < 2)
        throw std::invalid_argument("rank_sum_test: need at least two samples per side");

    // Average ranks over the pooled sample.
    std::vector<std::pair<double, int>> pooled;
    pooled.reserve(n1 + n2);
    for (double v : xs) pooled.emplace_back(v, 0);
    for (double v : ys) pooled.emplace_back(v, 1);
    std::sort(pooled.begin(), pooled.end());

    const int n = n1 + n2;
    std::vector<double> rank(n);
    bool has_ties = false;
    double tie_term = 0.0;
    for (int i = 0; i < n;) {
        int j = i;
        while (j < n && pooled[j].first == pooled[i].first) ++j;
        const double avg = (i + 1 + j) / 2.0;
        for (int k = i; k < j; ++k) rank[k] = avg;
        const int t = j - i;
        if (t > 1) {
            has_ties = true;
            tie_term += static_cast<double>(t) * t * t - t;
        }
        i = j;
    }
    double r1 = 0.0;
    for (int i = 0; i < n; ++i)
        if (pooled[i].second == 0) r1 += rank[i];
    const double u = r1 - n1 * (n1 + 1) / 2.0;

    RankSumResult out;
    if (!has_ties && n1 <= 8 && n2 <= 8) {
        out.p_value = exact_rank_sum_p(n1, n2, u);
    } else {
        const double mu = 0.5 * n1 * n2;
        const double var =
            n1 * static_cast<double>(n2) / 12.0 *
            ((n + 1.0) - tie_term / (static_cast<double>(n) * (n - 1.0)));
        if (var <= 0.0) {
            out.p_value = 1.0;
        } else {
            const double z = (u - mu) / std::sqrt(var);
            out.p_value = std::erfc(std::abs(z) / std::sqrt(2.0));
        }
    }
    if (out.p_value < 0.05) {
        const double mx = median(xs), my = median(ys);
        if (mx < my)
            out.verdict = '+';
        else if (mx > my)
            out.verdict = '-';
    }
    return out;
}

double sem(const std::vector<double>& values) {
    const int n = static_cast<int>(values.size());
    if (n < 2) throw std::invalid_argument("sem: need at least two values");
    const double mean = std::accumulate(values.begin(), values.end(), 0.0) / n;
    double acc = 0.0;
    for (double v : values) acc += (v - mean) * (v - mean);
    return std::sqrt(acc / (n - 1.0)) / std::sqrt(static_cast<double>(n));
}

void export_plot_data(const std::string& experiment_dir, const std::string& out_dir) {
    const ExperimentResult result = load_experiment(experiment_dir + "/metrics.json");
    fs::create_directories(out_dir);

    // Concatenated scatter of every final front, plus the best run on its own.
    int best = 0;
    for (std::size_t k = 1; k < result.rows.size(); ++k)
        if (result.rows[k].igd < result.rows[best].igd) best = static_cast<int>(k);
    std::ofstream all(out_dir + "/fronts_all.dat");
    for (const auto& row : result.rows) {
        const auto pts = read_front_file(experiment_dir + "/fronts/run_" +
                                         std::to_string(row.run) + ".pf");
        char buf[64];
        for (const auto& p : pts) {
            std::string line;
            for (Eigen::Index j = 0; j < p.size(); ++j) {
                std::snprintf(buf, sizeof(buf), "%.12g", p[j]);
                if (j) line += ' ';
                line += buf;
            }
            all << line << '\n';
        }
    }
    fs::copy_file(experiment_dir + "/fronts/run_" + std::to_string(best) + ".pf",
                  out_dir + "/front_best.dat", fs::copy_options::overwrite_existing);

    // Mean IGD trajectory over runs, strictly increasing in evaluations.
    if (result.spec.trajectory_stride > 0) {
        std::vector<std::vector<std::pair<int, double>>> all_traj;
        for (const auto& row : result.rows) {
            std::ifstream in(experiment_dir + "/trajectories/run_" +
                             std::to_string(row.run) + ".dat");
            if (!in) continue;
            std::vector<std::pair<int, double>> t;
            int fe;
            double v;
            while (in >> fe >> v) t.emplace_back(fe, v);
            all_traj.push_back(std::move(t));
        }
        if (!all_traj.empty()) {
            std::ofstream out(out_dir + "/trajectory_mean.dat");
            const std::size_t len = std::min_element(all_traj.begin(), all_traj.end(),
                                                     [](const auto& a, const auto& b) {
                                                         return a.size() < b.size();
                                                     })
                                        ->size();
            char buf[64];
            for (std::size_t i = 0; i < len; ++i) {
                double mean = 0.0;
                for (const auto& t : all_traj) mean += t[i].second;
                mean /= static_cast<double>(all_traj.size());
                std::snprintf(buf, sizeof(buf), "%d %.12g", all_traj.front()[i].first,
                              mean);
                out << buf << '\n';
            }
        }
    }

    // Parallel-coordinates table for many-objective fronts.
    if (result.spec.objectives > 3) {
        fs::copy_file(experiment_dir + "/fronts/run_" + std::to_string(best) + ".pf",
                      out_dir + "/parallel_coords.dat",
                      fs::copy_options::overwrite_existing);
    }
}

}  // namespace area

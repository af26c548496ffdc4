#include "area/moead.hpp"

#include "area/metrics.hpp"
#include "area/reference.hpp"
#include "area/rng.hpp"

#include <chrono>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace area {

double tchebycheff(const ObjectiveVector& f, const Eigen::VectorXd& weight,
                   const ObjectiveVector& ideal, Aggregation form) {
    double value = -std::numeric_limits<double>::infinity();
    for (Eigen::Index j = 0; j < f.size(); ++j) {
        const double w = std::max(weight[j], 1e-6);
        const double diff = std::abs(f[j] - ideal[j]);
        value = std::max(value, form == Aggregation::division ? diff / w : diff * w);
    }
    return value;
}

RunResult run_moead(const MoeadConfig& cfg) {
    const auto t0 = std::chrono::steady_clock::now();
    const ProblemSpec& problem = cfg.problem;
    const int N = cfg.population;
    if (N < 2) throw ConfigError("run_moead: population too small");
    if (cfg.max_evaluations < 2 * N)
        throw ConfigError("run_moead: evaluation budget below one generation");
    const int T = std::min(cfg.neighbourhood, N);

    Rng rng(cfg.seed);
    const Matrix weights = simplex_weights(problem.objectives, N);
    const std::vector<std::vector<int>> neigh = build_neighbourhood(weights, T);

    Population pop(N);
    for (int i = 0; i < N; ++i) {
        DecisionVector x(problem.variables);
        for (int j = 0; j < problem.variables; ++j)
            x[j] = rng.uniform(problem.lower[j], problem.upper[j]);
        pop[i] = {x, evaluate(problem, x), i};
    }
    int evaluations = N;
    ObjectiveVector ideal = pop.front().f;
    for (const auto& ind : pop) ideal = ideal.cwiseMin(ind.f);

    RunResult result;
    long long next_sample = cfg.trajectory_stride > 0 ? cfg.trajectory_stride : -1;
    auto sample_trajectory = [&]() {
        if (next_sample < 0 || cfg.trajectory_front.empty()) return;
        while (next_sample <= evaluations) {
            std::vector<ObjectiveVector> objs;
            objs.reserve(pop.size());
            for (const auto& ind : pop) objs.push_back(ind.f);
            result.igd_trajectory.emplace_back(static_cast<int>(next_sample),
                                               igd(objs, cfg.trajectory_front));
            next_sample += cfg.trajectory_stride;
        }
    };
    sample_trajectory();

    while (evaluations < cfg.max_evaluations) {
        for (int i = 0; i < N && evaluations < cfg.max_evaluations; ++i) {
            const std::vector<int>& pool = neigh[i];
            const int k = pool[rng.index(pool.size())];
            int l = pool[rng.index(pool.size())];
            for (int tries = 0; l == k && pool.size() > 1 && tries < 16; ++tries)
                l = pool[rng.index(pool.size())];

            DecisionVector child;
            if (cfg.operators.kind == OperatorKind::sbx) {
                child = sbx_crossover(pop[k].x, pop[l].x, cfg.operators, problem.lower,
                                      problem.upper, rng);
            } else {
                child = de_offspring(pop[i].x, pop[k].x, pop[l].x, cfg.operators,
                                     problem.lower, problem.upper, rng);
            }
            if (cfg.operators.kind == OperatorKind::sbx)
                child = polynomial_mutation(child, cfg.operators, problem.lower,
                                            problem.upper, rng);
            const ObjectiveVector fy = evaluate(problem, child);
            ++evaluations;
            ideal = ideal.cwiseMin(fy);
            for (int j : pool) {
                if (tchebycheff(fy, weights.row(j), ideal, cfg.aggregation) <=
                    tchebycheff(pop[j].f, weights.row(j), ideal, cfg.aggregation)) {
                    pop[j].x = child;
                    pop[j].f = fy;
                }
            }
        }
        sample_trajectory();
    }

    result.final_population = pop;
    result.final_archive = std::move(pop);
    result.evaluations_used = evaluations;
    result.wall_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return result;
}

}  // namespace area

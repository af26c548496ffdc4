#include "area/area.hpp"

#include "area/core.hpp"
#include "area/metrics.hpp"
#include "area/rng.hpp"

#include <chrono>
#include <cmath>
#include <limits>
#include <ostream>
#include <stdexcept>

namespace area {

namespace {

Population random_population(const ProblemSpec& p, int count, Rng& rng) {
    Population pop(count);
    for (int i = 0; i < count; ++i) {
        DecisionVector x(p.variables);
        for (int j = 0; j < p.variables; ++j) x[j] = rng.uniform(p.lower[j], p.upper[j]);
        pop[i] = {x, evaluate(p, x), i};
    }
    return pop;
}

IdealPoints ideal_points_of_population(const Population& pop) {
    IdealPoints z{pop.front().f, pop.front().f};
    for (const auto& ind : pop) {
        z.ideal = z.ideal.cwiseMin(ind.f);
        z.worst = z.worst.cwiseMax(ind.f);
    }
    return z;
}

Individual make_offspring(const ProblemSpec& problem, const AreaConfig& cfg,
                          const Population& pop, const ReferenceSet& refs, int parent,
                          double prob, Rng& rng) {
    const Individual& self = pop[parent];
    DecisionVector child;
    if (cfg.operators.kind == OperatorKind::sbx) {
        const int mate = select_mate(parent, refs.neighbours[self.target],
                                     static_cast<int>(pop.size()), prob, rng);
        child = sbx_crossover(self.x, pop[mate].x, cfg.operators, problem.lower,
                              problem.upper, rng);
        child = polynomial_mutation(child, cfg.operators, problem.lower, problem.upper, rng);
    } else {
        const int first = select_mate(parent, refs.neighbours[self.target],
                                      static_cast<int>(pop.size()), prob, rng);
        int second = select_mate(parent, refs.neighbours[self.target],
                                 static_cast<int>(pop.size()), prob, rng);
        for (int tries = 0; second == first && tries < 16; ++tries)
            second = select_mate(parent, refs.neighbours[self.target],
                                 static_cast<int>(pop.size()), prob, rng);
        if (second == first)
            second = (first + 1) % static_cast<int>(pop.size());
        child = de_offspring(self.x, pop[first].x, pop[second].x, cfg.operators,
                             problem.lower, problem.upper, rng);
    }
    Individual y;
    y.x = std::move(child);
    y.f = evaluate(problem, y.x);
    return y;
}

}  // namespace

int replace_in_neighbourhood(const Individual& y, const ReferenceSet& refs, Population& pop,
                             const IdealPoints& z, ReplacementRule rule) {
    const ObjectiveVector fy = normalize(y.f, z);
    int best = 0;
    double best_d = std::numeric_limits<double>::infinity();
    for (int r = 0; r < refs.size(); ++r) {
        const double d = (fy.transpose() - refs.points.row(r)).cwiseAbs().maxCoeff();
        if (d < best_d) {
            best_d = d;
            best = r;
        }
    }
    int replaced = 0;
    auto try_replace = [&](int slot) {
        const ObjectiveVector fx = normalize(pop[slot].f, z);
        const double incumbent =
            (fx.transpose() - refs.points.row(best)).cwiseAbs().maxCoeff();
        if (best_d < incumbent) {
            pop[slot].x = y.x;
            pop[slot].f = y.f;
            ++replaced;
        }
    };
    if (rule == ReplacementRule::single) {
        try_replace(best);
    } else {
        for (int slot : refs.neighbours[best]) try_replace(slot);
    }
    return replaced;
}

RunResult run_area(const AreaConfig& cfg) {
    const auto t0 = std::chrono::steady_clock::now();
    const ProblemSpec& problem = cfg.problem;
    const int N = cfg.population;
    const int M = problem.objectives;
    if (N < 2) throw ConfigError("run_area: population too small");
    if (cfg.max_evaluations < 2 * N)
        throw ConfigError("run_area: evaluation budget below one generation");
    const int T = std::min(cfg.neighbourhood, N);
    const int K = cfg.additions >= 0
                      ? cfg.additions
                      : static_cast<int>(std::ceil(std::sqrt(static_cast<double>(N))));

    Rng rng(cfg.seed);
    ReferenceSet base = initial_reference_set(M, N, T);
    ReferenceSet refs = base;
    Population pop = random_population(problem, N, rng);
    int evaluations = N;
    IdealPoints z = ideal_points_of_population(pop);

    Archive archive;
    archive.capacity = static_cast<int>(cfg.archive_factor * N);
    update_archive(archive, pop, {});

    const int step = std::max(1, static_cast<int>(std::ceil(cfg.update_fraction *
                                                            cfg.max_evaluations)));
    long long next_switch = step;
    bool evolving = false;

    RunResult result;
    long long next_sample = cfg.trajectory_stride > 0 ? cfg.trajectory_stride : -1;
    auto sample_trajectory = [&]() {
        if (next_sample < 0 || cfg.trajectory_front.empty()) return;
        while (next_sample <= evaluations) {
            result.igd_trajectory.emplace_back(
                static_cast<int>(next_sample),
                igd(assess(archive, N), cfg.trajectory_front));
            next_sample += cfg.trajectory_stride;
        }
    };
    sample_trajectory();

    int generation = 0;
    while (evaluations < cfg.max_evaluations) {
        if (cfg.mode != ReferenceMode::fixed_only) {
            while (evaluations >= next_switch) {
                const bool enter_evolving =
                    cfg.mode == ReferenceMode::evolving_only || !evolving;
                if (enter_evolving) {
                    ReferenceUpdate upd = update_reference_set(pop, archive.members, refs,
                                                               N, T, K, z, rng);
                    if (upd.skipped && cfg.log)
                        *cfg.log << "gen=" << generation << " fe=" << evaluations
                                 << " update skipped: empty archive\n";
                    refs = std::move(upd.refs);
                    pop = std::move(upd.pop);
                    evolving = true;
                } else {
                    refs = base;
                    pop = match_population(pop, archive.members, base, N, z);
                    evolving = false;
                }
                next_switch += step;
            }
        }

        const Eigen::VectorXd probs = local_mating_probabilities(pop, archive.members, z);
        Population offspring;
        offspring.reserve(N);
        for (int i = 0; i < N && evaluations < cfg.max_evaluations; ++i) {
            Individual y = make_offspring(problem, cfg, pop, refs, i, probs[i], rng);
            ++evaluations;
            z.ideal = z.ideal.cwiseMin(y.f);
            offspring.push_back(y);
            replace_in_neighbourhood(y, refs, pop, z, cfg.replacement);
        }

        // End of generation: refresh the anti-ideal point and fold parents
        // plus offspring into the archive.
        update_archive(archive, pop, offspring);
        if (cfg.worst_from == WorstFrom::population) {
            z.worst = ideal_points_of_population(pop).worst;
        } else if (cfg.worst_from == WorstFrom::archive) {
            ObjectiveVector worst = archive.members.front().f;
            for (const auto& m : archive.members) worst = worst.cwiseMax(m.f);
            z.worst = worst;
        } else {
            IdealPoints fresh = ideal_points_of_population(pop);
            for (const auto& y : offspring) fresh.worst = fresh.worst.cwiseMax(y.f);
            z.worst = fresh.worst;
        }

        if (cfg.log)
            *cfg.log << "gen=" << generation << " fe=" << evaluations
                     << " mode=" << (evolving ? "evolving" : "fixed")
                     << " archive=" << archive.members.size() << "\n";
        sample_trajectory();
        if (cfg.observer) cfg.observer(generation, pop, archive);
        ++generation;
    }

    result.final_population = std::move(pop);
    result.final_archive = archive.members;
    result.evaluations_used = evaluations;
    result.wall_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return result;
}

}  // namespace area

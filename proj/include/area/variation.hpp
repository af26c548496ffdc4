#pragma once

#include "area/rng.hpp"
#include "area/types.hpp"

#include <vector>

namespace area {

enum class OperatorKind { sbx, de };

struct OperatorParams {
    OperatorKind kind = OperatorKind::sbx;
    double crossover_index = 20.0;  // SBX distribution index
    double crossover_prob = 1.0;
    double mutation_index = 20.0;   // polynomial mutation distribution index
    double mutation_prob = -1.0;    // negative means 1/n, resolved per problem
    double de_scale = 0.5;          // F
    double de_crossover = 1.0;      // CR
};

double resolved_mutation_prob(const OperatorParams& params, int variables);

// Simulated binary crossover, one child, clamped to the box.
DecisionVector sbx_crossover(const DecisionVector& p1, const DecisionVector& p2,
                             const OperatorParams& params, const DecisionVector& lower,
                             const DecisionVector& upper, Rng& rng);

DecisionVector polynomial_mutation(const DecisionVector& x, const OperatorParams& params,
                                   const DecisionVector& lower, const DecisionVector& upper,
                                   Rng& rng);

// rand/1 trial with per-variable crossover gate; out-of-box components are
// repaired to the midpoint between the violated bound and the target value.
// Polynomial mutation is applied to the repaired trial.
DecisionVector de_offspring(const DecisionVector& target, const DecisionVector& a,
                            const DecisionVector& b, const OperatorParams& params,
                            const DecisionVector& lower, const DecisionVector& upper,
                            Rng& rng);

// Per-member probability of mating inside the local neighbourhood, derived
// from closeness to the archive and the crowding around the nearest archive
// member.  The maximal raw score maps to 1; everything is floored at 0.2.
Eigen::VectorXd local_mating_probabilities(const Population& pop, const Population& archive,
                                           const IdealPoints& z);

// With probability `prob` draw from the neighbourhood, otherwise from the
// whole population; the parent itself is excluded whenever an alternative
// exists, falling back to a global draw for self-only neighbourhoods.
int select_mate(int self, const std::vector<int>& neighbourhood, int pop_size, double prob,
                Rng& rng);

}  // namespace area

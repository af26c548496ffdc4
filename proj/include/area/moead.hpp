#pragma once

#include "area/area.hpp"
#include "area/problems.hpp"
#include "area/variation.hpp"

#include <cstdint>
#include <vector>

namespace area {

// Both classic spellings of the Tchebycheff aggregation: `division`
// (max |f_j - z_j| / w_j, uniform weights land uniformly on the front) and
// `multiplication` (max w_j |f_j - z_j|, the literal original).
enum class Aggregation { division, multiplication };

// Compact Tchebycheff-decomposition baseline with neighbourhood mating and
// unbounded neighbourhood replacement; the comparison anchor of the
// experiment protocol.
struct MoeadConfig {
    ProblemSpec problem;
    int population = 0;
    int neighbourhood = 20;
    int max_evaluations = 0;
    OperatorParams operators;
    Aggregation aggregation = Aggregation::division;
    std::uint64_t seed = 1;
    int trajectory_stride = 0;
    std::vector<ObjectiveVector> trajectory_front;
};

// Aggregation value of f for weight w given the current ideal point.
double tchebycheff(const ObjectiveVector& f, const Eigen::VectorXd& weight,
                   const ObjectiveVector& ideal,
                   Aggregation form = Aggregation::division);

RunResult run_moead(const MoeadConfig& cfg);

}  // namespace area

#pragma once

#include "area/archive.hpp"
#include "area/problems.hpp"
#include "area/reference.hpp"
#include "area/variation.hpp"

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <utility>
#include <vector>

namespace area {

// Which incumbents an offspring may replace once its best target is known.
enum class ReplacementRule { neighbourhood, single };

// Reference-set schedule: alternate between the initial and an evolving set,
// or stay in one of the two modes for the whole run.
enum class ReferenceMode { alternate, fixed_only, evolving_only };

// Anti-ideal refresh source at the end of each generation (experimentally
// distinguishable; see AreaConfig::worst_from).
enum class WorstFrom { population, archive, merged };

struct AreaConfig {
    ProblemSpec problem;
    int population = 0;
    int neighbourhood = 20;          // T
    int max_evaluations = 0;
    double update_fraction = 0.05;   // reference maintenance interval as share of budget
    double archive_factor = 1.5;
    int additions = -1;              // points added per update; negative = ceil(sqrt(N))
    OperatorParams operators;
    ReplacementRule replacement = ReplacementRule::neighbourhood;
    WorstFrom worst_from = WorstFrom::population;
    ReferenceMode mode = ReferenceMode::alternate;
    std::uint64_t seed = 1;
    int trajectory_stride = 0;       // log IGD at every crossing of this many FEs
    std::vector<ObjectiveVector> trajectory_front;
    std::ostream* log = nullptr;
    // Called after every generation with the current population and archive;
    // used by tests to assert per-generation invariants.
    std::function<void(int, const Population&, const Archive&)> observer;
};

struct RunResult {
    Population final_population;
    Population final_archive;
    std::vector<std::pair<int, double>> igd_trajectory;
    int evaluations_used = 0;
    double wall_seconds = 0.0;
};

// Offspring insertion: find the Chebyshev-nearest reference, then replace the
// incumbents in its neighbourhood (or the single slot) that it beats.
// Returns the number of replaced members.
int replace_in_neighbourhood(const Individual& y, const ReferenceSet& refs, Population& pop,
                             const IdealPoints& z,
                             ReplacementRule rule = ReplacementRule::neighbourhood);

RunResult run_area(const AreaConfig& cfg);

}  // namespace area

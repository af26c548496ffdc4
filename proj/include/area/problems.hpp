#pragma once

#include "area/types.hpp"

#include <functional>
#include <string>
#include <utility>
#include <vector>

namespace area {

// A fully configured benchmark instance.  `objective` is a pure function;
// `front` produces ~count points of the true Pareto front, either by an
// analytic sampler or by loading a bundled reference file.
struct ProblemSpec {
    std::string name;
    int objectives = 0;
    int variables = 0;
    DecisionVector lower;
    DecisionVector upper;
    std::function<ObjectiveVector(const DecisionVector&)> objective;
    std::function<std::vector<ObjectiveVector>(int)> front;
};

// Builds a problem from the registry.  Throws ConfigError for an unknown
// name or an objective count the instance does not support.
ProblemSpec make_problem(const std::string& name, int objectives);

// Names accepted by make_problem.
std::vector<std::string> problem_names();

// Bounds-checked evaluation.  Out-of-bounds or wrong-length input is a usage
// error; evaluation never clamps silently.
ObjectiveVector evaluate(const ProblemSpec& p, const DecisionVector& x);

// Roughly `count` points of the true front, deterministic for a fixed
// stratification.  Missing reference files raise DataError naming the file.
std::vector<ObjectiveVector> pf_sample(const ProblemSpec& p, int count = 1000);

// Per-variable [low, high] box, used by the variation operators for repair.
std::vector<std::pair<double, double>> bounds(const ProblemSpec& p);

// Dense construction of the true front on the known optimal manifold.  This
// is what the bundled reference files are generated from; analytic families
// call it directly at runtime.
std::vector<ObjectiveVector> construct_front(const std::string& name, int objectives,
                                             int count);

// True when pf_sample computes the front at runtime instead of loading a file.
bool has_analytic_front(const std::string& name);

// Reference front files: one objective vector per line, space-separated
// decimals, no header, named <problem>_<M>d.pf under the data directory
// ($AREA_DATA_DIR overrides the default ./data).
std::string front_data_dir();
std::string front_file_path(const std::string& name, int objectives);
std::vector<ObjectiveVector> read_front_file(const std::string& path);
void write_front_file(const std::string& path, const std::vector<ObjectiveVector>& points);

}  // namespace area

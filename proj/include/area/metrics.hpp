#pragma once

#include "area/types.hpp"

#include <vector>

namespace area {

// Mean distance from every reference-front point to its nearest neighbour in
// the approximation set.
double igd(const std::vector<ObjectiveVector>& approx,
           const std::vector<ObjectiveVector>& ref);

// Normalised hypervolume: Lebesgue measure of the space dominated by the
// approximation inside the box bounded by `ref_point`, divided by the product
// of the reference-point coordinates.  Exact for two and three objectives,
// seeded Monte Carlo beyond.
double hv(const std::vector<ObjectiveVector>& approx, const ObjectiveVector& ref_point);

struct HvEstimate {
    double value = 0.0;
    double standard_error = 0.0;
};

// Monte-Carlo hypervolume with its standard error; used for many-objective
// instances and as an independent route in the test suite.
HvEstimate hv_monte_carlo(const std::vector<ObjectiveVector>& approx,
                          const ObjectiveVector& ref_point, int samples = 1000000,
                          std::uint64_t seed = 9001);

// Standard deviation of nearest-neighbour distances within the set (the
// uniformity indicator of the experimental protocol).
double spacing(const std::vector<ObjectiveVector>& approx);

// Componentwise maximum of the front sample plus delta in every objective.
ObjectiveVector nadir_plus(const std::vector<ObjectiveVector>& ref, double delta = 0.1);

}  // namespace area

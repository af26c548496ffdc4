#pragma once

#include "area/types.hpp"

#include <vector>

namespace area {

// Pareto dominance for minimisation: true iff a <= b componentwise and
// a < b in at least one component.  Equal vectors never dominate.
bool dominates(const ObjectiveVector& a, const ObjectiveVector& b);

// Indices of all points not dominated by any other point of the list.
// Duplicates are mutually nondominated and are all kept.
std::vector<int> nondominated_filter(const std::vector<ObjectiveVector>& points);

// Componentwise (f - ideal) / (worst - ideal).  A spread below 1e-12 in some
// objective substitutes denominator 1 so early generations cannot blow up.
ObjectiveVector normalize(const ObjectiveVector& f, const IdealPoints& z);

double chebyshev_distance(const ObjectiveVector& a, const ObjectiveVector& b);

double euclidean_distance(const ObjectiveVector& a, const ObjectiveVector& b);

// Componentwise min/max over a non-empty set of objective vectors.
IdealPoints ideal_points_of(const std::vector<ObjectiveVector>& points);

}  // namespace area

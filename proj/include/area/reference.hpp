#pragma once

#include "area/rng.hpp"
#include "area/types.hpp"

#include <vector>

namespace area {

// A reference point lives on the plane sum(coords) == 0 in normalised
// objective space.
using ReferencePoint = Eigen::VectorXd;

struct ReferenceSet {
    Matrix points;                            // one reference per row
    std::vector<std::vector<int>> neighbours; // T nearest indices, self first

    int size() const { return static_cast<int>(points.rows()); }
    int objectives() const { return static_cast<int>(points.cols()); }
};

// All weight vectors with components in {0, 1/H, ..., 1} summing to 1,
// C(H+M-1, M-1) rows in lexicographic order.
Matrix simplex_lattice(int objectives, int divisions);

// Exactly `count` unit-simplex weights: the largest lattice that fits plus
// inner layers shrunk toward the centroid until the count is reached.
Matrix simplex_weights(int objectives, int count);

// Eq.-style shift of a unit-simplex weight onto the reference plane.
ReferencePoint shift_to_plane(const Eigen::VectorXd& weight);

// Orthogonal projection of a normalised objective vector onto the plane;
// idempotent, and coincides with shift_to_plane when the input sums to 1.
ReferencePoint project_to_plane(const ObjectiveVector& f);

// For each point the T Euclidean-nearest indices sorted ascending by
// distance; a point is always its own first neighbour.
std::vector<std::vector<int>> build_neighbourhood(const Matrix& points, int T);

ReferenceSet initial_reference_set(int objectives, int count, int T);

// Promise score of each reference: the number of other references strictly
// Chebyshev-closer to its associated solution than the reference itself.
// pop targets must form a bijection onto the reference indices.
std::vector<int> zeta_scores(const ReferenceSet& refs, const Population& pop,
                             const IdealPoints& z);

struct ReferenceUpdate {
    ReferenceSet refs;
    Population pop;
    bool skipped = false;  // empty archive: inputs returned unchanged
};

// Reference-set maintenance: add `additions` archive projections by the
// max-min rule, then remove by descending score (random tie-break) and, if
// scores run out, by nearest-neighbour truncation, back to `target_size`.
ReferenceUpdate update_reference_set(const Population& pop, const Population& archive,
                                     const ReferenceSet& refs, int target_size, int T,
                                     int additions, const IdealPoints& z, Rng& rng);

// Greedy bipartite rebinding of population+archive candidates to a reference
// set: every reference ends up with its nearest still-free candidate.
Population match_population(const Population& pop, const Population& archive,
                            const ReferenceSet& base, int target_size,
                            const IdealPoints& z);

}  // namespace area

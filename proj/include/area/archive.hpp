#pragma once

#include "area/types.hpp"

#include <vector>

namespace area {

// Bounded store of mutually nondominated solutions.
struct Archive {
    Population members;
    int capacity = 0;
};

// Indices kept after iteratively deleting the point whose sorted
// distance-to-others vector is lexicographically smallest, until `target`
// points remain.
std::vector<int> spea2_truncate(const std::vector<ObjectiveVector>& points, int target);

// Merge population and offspring into the archive, keep the nondominated
// subset (exact objective duplicates are not stored twice) and truncate to
// capacity when needed.
void update_archive(Archive& archive, const Population& pop, const Population& offspring);

// Objective vectors used for performance assessment: the archive truncated
// to at most `count` members.
std::vector<ObjectiveVector> assess(const Archive& archive, int count);

}  // namespace area

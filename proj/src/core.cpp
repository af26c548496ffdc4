#include "area/core.hpp"

#include <stdexcept>

namespace area {

namespace {

void check_same_size(const ObjectiveVector& a, const ObjectiveVector& b) {
    if (a.size() != b.size())
        throw std::invalid_argument("objective vectors differ in length");
}

}  // namespace

bool dominates(const ObjectiveVector& a, const ObjectiveVector& b) {
    check_same_size(a, b);
    return (a.array() <= b.array()).all() && (a.array() < b.array()).any();
}

std::vector<int> nondominated_filter(const std::vector<ObjectiveVector>& points) {
    if (points.empty()) throw std::invalid_argument("nondominated_filter: empty input");
    std::vector<int> keep;
    const int n = static_cast<int>(points.size());
    for (int i = 0; i < n; ++i) {
        bool dominated = false;
        for (int j = 0; j < n && !dominated; ++j)
            if (j != i && dominates(points[j], points[i])) dominated = true;
        if (!dominated) keep.push_back(i);
    }
    return keep;
}

ObjectiveVector normalize(const ObjectiveVector& f, const IdealPoints& z) {
    ObjectiveVector den = z.worst - z.ideal;
    for (Eigen::Index j = 0; j < den.size(); ++j)
        if (den[j] < 1e-12) den[j] = 1.0;
    return (f - z.ideal).cwiseQuotient(den);
}

double chebyshev_distance(const ObjectiveVector& a, const ObjectiveVector& b) {
    check_same_size(a, b);
    return (a - b).cwiseAbs().maxCoeff();
}

double euclidean_distance(const ObjectiveVector& a, const ObjectiveVector& b) {
    check_same_size(a, b);
    return (a - b).norm();
}

IdealPoints ideal_points_of(const std::vector<ObjectiveVector>& points) {
    if (points.empty()) throw std::invalid_argument("ideal_points_of: empty input");
    IdealPoints z{points.front(), points.front()};
    for (const auto& p : points) {
        z.ideal = z.ideal.cwiseMin(p);
        z.worst = z.worst.cwiseMax(p);
    }
    return z;
}

}  // namespace area

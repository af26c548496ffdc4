#include "area/metrics.hpp"

#include "area/rng.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace area {

namespace {

void check_ref_point(const ObjectiveVector& r) {
    if ((r.array() <= 0.0).any())
        throw std::invalid_argument("hv: reference point must be positive in every dimension");
}

// Points that can contribute volume, clipped into [0, ref) so the normalised
// value stays in [0, 1] even when an objective dips below zero.
std::vector<ObjectiveVector> clip_dominators(const std::vector<ObjectiveVector>& approx,
                                             const ObjectiveVector& ref) {
    std::vector<ObjectiveVector> pts;
    const ObjectiveVector zero = ObjectiveVector::Zero(ref.size());
    for (const auto& p : approx)
        if ((p.array() < ref.array()).all()) pts.push_back(p.cwiseMax(zero));
    return pts;
}

// Raw 2-D dominated area inside [0, ref] via the staircase sweep.
double hv2_raw(std::vector<ObjectiveVector> pts, double r1, double r2) {
    std::sort(pts.begin(), pts.end(),
              [](const auto& a, const auto& b) { return a[0] < b[0]; });
    double area = 0.0;
    double best2 = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < pts.size(); ++i) {
        if (pts[i][1] >= best2) continue;
        const double x0 = pts[i][0];
        double x1 = r1;
        for (std::size_t j = i + 1; j < pts.size(); ++j) {
            if (pts[j][1] < pts[i][1]) {
                x1 = pts[j][0];
                break;
            }
        }
        area += (x1 - x0) * (r2 - pts[i][1]);
        best2 = pts[i][1];
    }
    return area;
}

// Raw 3-D dominated volume by sweeping slabs along the third objective.
double hv3_raw(const std::vector<ObjectiveVector>& pts, const ObjectiveVector& ref) {
    std::vector<double> levels;
    levels.reserve(pts.size());
    for (const auto& p : pts) levels.push_back(p[2]);
    std::sort(levels.begin(), levels.end());
    levels.erase(std::unique(levels.begin(), levels.end()), levels.end());

    double volume = 0.0;
    for (std::size_t k = 0; k < levels.size(); ++k) {
        const double z0 = levels[k];
        const double z1 = k + 1 < levels.size() ? levels[k + 1] : ref[2];
        std::vector<ObjectiveVector> layer;
        for (const auto& p : pts)
            if (p[2] <= z0) layer.push_back(Eigen::Vector2d(p[0], p[1]));
        if (!layer.empty()) volume += hv2_raw(std::move(layer), ref[0], ref[1]) * (z1 - z0);
    }
    return volume;
}

}  // namespace

double igd(const std::vector<ObjectiveVector>& approx,
           const std::vector<ObjectiveVector>& ref) {
    if (approx.empty() || ref.empty()) throw std::invalid_argument("igd: empty input");
    const int M = static_cast<int>(ref.front().size());
    Matrix a(approx.size(), M);
    for (std::size_t i = 0; i < approx.size(); ++i) a.row(i) = approx[i];
    double acc = 0.0;
    for (const auto& r : ref)
        acc += (a.rowwise() - r.transpose()).rowwise().norm().minCoeff();
    return acc / static_cast<double>(ref.size());
}

double hv(const std::vector<ObjectiveVector>& approx, const ObjectiveVector& ref_point) {
    check_ref_point(ref_point);
    const int M = static_cast<int>(ref_point.size());
    std::vector<ObjectiveVector> pts = clip_dominators(approx, ref_point);
    const double denom = ref_point.prod();
    if (pts.empty()) return 0.0;
    if (M == 2) return hv2_raw(std::move(pts), ref_point[0], ref_point[1]) / denom;
    if (M == 3) return hv3_raw(pts, ref_point) / denom;
    return hv_monte_carlo(approx, ref_point).value;
}

HvEstimate hv_monte_carlo(const std::vector<ObjectiveVector>& approx,
                          const ObjectiveVector& ref_point, int samples,
                          std::uint64_t seed) {
    check_ref_point(ref_point);
    const int M = static_cast<int>(ref_point.size());
    std::vector<ObjectiveVector> pts = clip_dominators(approx, ref_point);
    if (pts.empty()) return {0.0, 0.0};

    ObjectiveVector lo = pts.front();
    for (const auto& p : pts) lo = lo.cwiseMin(p);
    const double box = (ref_point - lo).prod();
    const double scale = box / ref_point.prod();

    Rng rng(seed);
    Eigen::VectorXd u(M);
    long long hits = 0;
    for (int s = 0; s < samples; ++s) {
        for (int j = 0; j < M; ++j) u[j] = rng.uniform(lo[j], ref_point[j]);
        for (const auto& p : pts) {
            if ((p.array() <= u.array()).all()) {
                ++hits;
                break;
            }
        }
    }
    const double frac = static_cast<double>(hits) / samples;
    const double se = std::sqrt(std::max(frac * (1.0 - frac), 0.0) / samples) * scale;
    return {frac * scale, se};
}

double spacing(const std::vector<ObjectiveVector>& approx) {
    const int n = static_cast<int>(approx.size());
    if (n < 2) throw std::invalid_argument("spacing: need at least two points");
    Eigen::VectorXd d(n);
    for (int i = 0; i < n; ++i) {
        double nearest = std::numeric_limits<double>::infinity();
        for (int j = 0; j < n; ++j)
            if (j != i) nearest = std::min(nearest, (approx[i] - approx[j]).norm());
        d[i] = nearest;
    }
    const double mean = d.mean();
    return std::sqrt((d.array() - mean).square().mean());
}

ObjectiveVector nadir_plus(const std::vector<ObjectiveVector>& ref, double delta) {
    if (ref.empty()) throw std::invalid_argument("nadir_plus: empty front sample");
    ObjectiveVector nadir = ref.front();
    for (const auto& p : ref) nadir = nadir.cwiseMax(p);
    return nadir.array() + delta;
}

}  // namespace area

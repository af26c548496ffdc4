#include "area/core.hpp"
#include "area/problems.hpp"
#include "area/reference.hpp"
#include "area/rng.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <limits>
#include <sstream>

namespace area {

namespace {

constexpr double kPi = 3.14159265358979323846;

using PointList = std::vector<ObjectiveVector>;

// ---- sampling utilities ---------------------------------------------------

// Unit-simplex lattice of roughly `count` points (exact via inner layers).
Matrix simplex_points(int M, int count) { return simplex_weights(M, count); }

PointList rows_of(const Matrix& m) {
    PointList out;
    out.reserve(m.rows());
    for (int r = 0; r < m.rows(); ++r) out.push_back(m.row(r));
    return out;
}

// Lattice points pushed onto the unit sphere octant.
PointList sphere_points(int M, int count) {
    Matrix w = simplex_points(M, count);
    PointList out;
    out.reserve(w.rows());
    for (int r = 0; r < w.rows(); ++r) {
        Eigen::VectorXd v = w.row(r);
        const double norm = v.norm();
        out.push_back(norm > 0 ? ObjectiveVector(v / norm)
                               : ObjectiveVector(Eigen::VectorXd::Constant(M, std::sqrt(1.0 / M))));
    }
    return out;
}

// Seeded quasi-uniform sphere octant sample for many objectives, where a
// lattice would be far too coarse.
PointList sphere_points_random(int M, int count, std::uint64_t seed) {
    Rng rng(seed);
    PointList out;
    out.reserve(count);
    while (static_cast<int>(out.size()) < count) {
        Eigen::VectorXd v(M);
        for (int j = 0; j < M; ++j) {
            // |N(0,1)| via Box-Muller on the portable uniform stream
            const double u1 = std::max(rng.uniform(), 1e-300);
            const double u2 = rng.uniform();
            v[j] = std::abs(std::sqrt(-2.0 * std::log(u1)) *
                            std::cos(2.0 * kPi * u2));
        }
        const double norm = v.norm();
        if (norm > 1e-12) out.push_back(v / norm);
    }
    return out;
}

// Nondominated sweep of a biobjective curve given by dense (f1, f2) samples.
// Keeps strictly improving f2 in f1-ascending order.
PointList sweep_curve(PointList pts) {
    std::stable_sort(pts.begin(), pts.end(), [](const auto& a, const auto& b) {
        return a[0] < b[0] || (a[0] == b[0] && a[1] < b[1]);
    });
    PointList keep;
    double best = std::numeric_limits<double>::infinity();
    for (auto& p : pts) {
        if (p[1] < best) {
            best = p[1];
            keep.push_back(std::move(p));
        }
    }
    return keep;
}

// Dense parameter-uniform sample of a biobjective curve, reduced to the
// nondominated sweep and thinned to `count` points uniform in the parameter.
// Parameter-uniform (not arc-length) sampling is the convention reference
// fronts in this field follow; it keeps near-vertical arcs represented by
// their endpoint instead of demanding sub-epsilon decision values.
PointList curve_front(const std::function<ObjectiveVector(double)>& gen, int count,
                      int dense = 200001) {
    PointList pts;
    pts.reserve(dense);
    for (int i = 0; i < dense; ++i)
        pts.push_back(gen(static_cast<double>(i) / (dense - 1)));
    PointList kept = sweep_curve(std::move(pts));
    if (static_cast<int>(kept.size()) <= count) return kept;
    PointList out;
    out.reserve(count);
    const std::size_t last = kept.size() - 1;
    for (int k = 0; k < count; ++k) {
        const std::size_t idx = static_cast<std::size_t>(
            std::llround(static_cast<double>(k) * last / (count - 1)));
        if (out.empty() || (kept[idx] - out.back()).norm() > 0.0)
            out.push_back(kept[idx]);
    }
    return out;
}

// O(n^2) filter for moderate point clouds.
PointList nd_filter(const PointList& pts) {
    PointList out;
    std::vector<int> keep = nondominated_filter(pts);
    out.reserve(keep.size());
    for (int idx : keep) out.push_back(pts[idx]);
    return out;
}

// Greedy max-min thinning: keeps the per-objective extremes, then repeatedly
// the point furthest from the kept set.
PointList thin_points(const PointList& pts, int count) {
    const int n = static_cast<int>(pts.size());
    if (n <= count) return pts;
    const int M = static_cast<int>(pts.front().size());
    std::vector<char> taken(n, 0);
    std::vector<double> best(n, std::numeric_limits<double>::infinity());
    PointList out;
    out.reserve(count);
    auto take = [&](int idx) {
        taken[idx] = 1;
        out.push_back(pts[idx]);
        for (int i = 0; i < n; ++i)
            if (!taken[i]) best[i] = std::min(best[i], (pts[i] - pts[idx]).norm());
    };
    for (int m = 0; m < M && static_cast<int>(out.size()) < count; ++m) {
        int extreme = 0;
        for (int i = 1; i < n; ++i)
            if (pts[i][m] < pts[extreme][m]) extreme = i;
        if (!taken[extreme]) take(extreme);
    }
    while (static_cast<int>(out.size()) < count) {
        int pick = -1;
        double far = -1.0;
        for (int i = 0; i < n; ++i)
            if (!taken[i] && best[i] > far) {
                far = best[i];
                pick = i;
            }
        take(pick);
    }
    return out;
}

// Per-coordinate nondominated set of t -> (t asc, score(t) must rise): keeps
// grid values whose score exceeds everything to their left.
std::vector<double> rising_profile(const std::function<double(double)>& score,
                                   int dense = 100001) {
    std::vector<double> kept;
    double best = -std::numeric_limits<double>::infinity();
    for (int i = 0; i < dense; ++i) {
        const double t = static_cast<double>(i) / (dense - 1);
        const double s = score(t);
        if (s > best) {
            best = s;
            kept.push_back(t);
        }
    }
    return kept;
}

std::vector<double> stratified_pick(const std::vector<double>& values, int count) {
    if (static_cast<int>(values.size()) <= count) return values;
    std::vector<double> out;
    out.reserve(count);
    for (int k = 0; k < count; ++k) {
        const std::size_t idx =
            static_cast<std::size_t>(static_cast<double>(k) * (values.size() - 1) /
                                     (count - 1));
        out.push_back(values[idx]);
    }
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

// ---- per-family constructions ---------------------------------------------

PointList front_dtlz7(int M, int count) {
    // f_M = 2(M - sum phi(f_i)) with phi(t) = t(1+sin(3 pi t))/... per the
    // evaluation at g = 1; coordinates must lie on the rising profile of phi.
    auto phi = [](double t) { return t * (1.0 + std::sin(3.0 * kPi * t)); };
    const std::vector<double> axis = rising_profile(phi);
    const int per_axis = std::max(2, static_cast<int>(std::round(
                                         std::pow(static_cast<double>(count),
                                                  1.0 / (M - 1)))));
    const std::vector<double> picked = stratified_pick(axis, per_axis);
    PointList out;
    std::vector<int> idx(M - 1, 0);
    while (true) {
        ObjectiveVector f(M);
        double h = M;
        for (int i = 0; i < M - 1; ++i) {
            f[i] = picked[idx[i]];
            h -= f[i] / 2.0 * (1.0 + std::sin(3.0 * kPi * f[i]));
        }
        f[M - 1] = 2.0 * h;
        out.push_back(f);
        int d = M - 2;
        while (d >= 0 && ++idx[d] == static_cast<int>(picked.size())) idx[d--] = 0;
        if (d < 0) break;
    }
    return out;
}

PointList front_dtlz5(int M, int count) {
    // Degenerate arc: all middle angles pinned to pi/4.
    PointList out;
    out.reserve(count);
    for (int i = 0; i < count; ++i) {
        const double theta = 0.5 * kPi * i / (count - 1);
        ObjectiveVector f(M);
        double c = 1.0;
        for (int j = 0; j < M - 2; ++j) c *= std::cos(kPi / 4.0);
        f[0] = std::cos(theta) * c;
        for (int m = 1; m < M - 1; ++m) {
            double v = std::cos(theta);
            for (int j = 0; j < M - 2 - m; ++j) v *= std::cos(kPi / 4.0);
            v *= std::sin(kPi / 4.0);
            f[m] = v;
        }
        f[M - 1] = std::sin(theta);
        out.push_back(f);
    }
    return out;
}

PointList front_f5(int M, int count, const ProblemSpec& p) {
    // Spherical patches where the floor-sine product vanishes for some
    // position variable; holes elsewhere.
    const int grid = 64;
    PointList pts;
    auto zero_band = [](double v) {
        const long long k = static_cast<long long>(std::floor(4.0 * v + 1.6));
        return k % 2 == 0;
    };
    DecisionVector x = DecisionVector::Constant(p.variables, 0.5);
    for (int i = 0; i <= grid; ++i) {
        for (int j = 0; j <= grid; ++j) {
            const double a = static_cast<double>(i) / grid;
            const double b = static_cast<double>(j) / grid;
            if (!zero_band(a) && !zero_band(b)) continue;
            x[0] = a;
            x[1] = b;
            pts.push_back(p.objective(x));
        }
    }
    return thin_points(pts, count);
}

PointList front_f6(int M, int count, const ProblemSpec& p) {
    // Curves: one position variable pinned to a zero of sin(2 pi t).
    PointList pts;
    const int dense = 1200;
    DecisionVector x = DecisionVector::Constant(p.variables, 0.5);
    const double zeros[3] = {0.0, 0.5, 1.0};
    for (double z : zeros) {
        for (int pos = 0; pos < M - 1; ++pos) {
            for (int i = 0; i <= dense; ++i) {
                x[0] = pos == 0 ? z : static_cast<double>(i) / dense;
                x[1] = pos == 1 ? z : static_cast<double>(i) / dense;
                pts.push_back(p.objective(x));
            }
        }
    }
    return thin_points(nd_filter(thin_points(pts, 4 * count)), count);
}

PointList front_f7(int M, int count, const ProblemSpec& p) {
    const int grid = 96;
    PointList pts;
    DecisionVector x = DecisionVector::Constant(p.variables, 0.0);
    for (int i = 0; i <= grid; ++i) {
        for (int j = 0; j <= grid; ++j) {
            const double a = static_cast<double>(i) / grid;
            const double b = static_cast<double>(j) / grid;
            const long long k =
                static_cast<long long>(std::floor(4.0 * (a - 2.0) * (b - 2.0)));
            if (k % 2 != 0) continue;
            x[0] = a;
            x[1] = b;
            const double link = a * b;
            for (int v = M - 1; v < p.variables; ++v) x[v] = link;
            pts.push_back(p.objective(x));
        }
    }
    return thin_points(nd_filter(pts), count);
}

PointList front_f8(int, int, const ProblemSpec& p) {
    // The componentwise minimum of every objective is attained at the all-ones
    // vector, so the front collapses to that single point.
    DecisionVector x = DecisionVector::Constant(p.variables, 1.0);
    return {p.objective(x)};
}

PointList front_uf9(int count) {
    PointList pts;
    const int nx = 40, ny = 50;
    for (int wedge = 0; wedge < 2; ++wedge) {
        for (int i = 0; i <= nx; ++i) {
            const double x1 = wedge == 0 ? 0.25 * i / nx : 0.75 + 0.25 * i / nx;
            for (int j = 0; j <= ny; ++j) {
                const double x2 = static_cast<double>(j) / ny;
                pts.push_back(Eigen::Vector3d(x1 * x2, (1.0 - x1) * x2, 1.0 - x2));
            }
        }
    }
    return thin_points(nd_filter(thin_points(pts, 4 * count)), count);
}

PointList front_wfg_concave(int M, int count) {
    PointList sphere = M <= 3 ? sphere_points(M, count)
                              : sphere_points_random(M, count, 20240u + M);
    for (auto& p : sphere)
        for (int m = 0; m < M; ++m) p[m] *= 2.0 * (m + 1);
    return sphere;
}

PointList front_wfg2(int M, int count) {
    // Optimal distance parameters give x_M = 0; sweep the position space.
    PointList pts;
    auto shape_point = [&](const Eigen::VectorXd& x) {
        ObjectiveVector f(M);
        for (int m = 1; m <= M; ++m) {
            double h;
            if (m < M) {
                double v = 1.0;
                for (int i = 1; i <= M - m; ++i) v *= 1.0 - std::cos(x[i - 1] * kPi / 2.0);
                if (m > 1) v *= 1.0 - std::sin(x[M - m] * kPi / 2.0);
                h = v;
            } else {
                const double c = std::cos(5.0 * kPi * x[0]);
                h = 1.0 - x[0] * c * c;
            }
            f[m - 1] = 2.0 * m * h;
        }
        return f;
    };
    if (M == 3) {
        const int grid = 160;
        Eigen::VectorXd x(2);
        for (int i = 0; i <= grid; ++i)
            for (int j = 0; j <= grid; ++j) {
                x[0] = static_cast<double>(i) / grid;
                x[1] = static_cast<double>(j) / grid;
                pts.push_back(shape_point(x));
            }
    } else {
        Rng rng(777u + M);
        Eigen::VectorXd x(M - 1);
        for (int s = 0; s < 4000; ++s) {
            for (int j = 0; j < M - 1; ++j) x[j] = rng.uniform();
            pts.push_back(shape_point(x));
        }
    }
    return thin_points(nd_filter(thin_points(pts, 6 * count)), count);
}

}  // namespace

bool has_analytic_front(const std::string& name) {
    return name == "DTLZ1" || name == "DTLZ2" || name == "DTLZ5" || name == "DTLZ7" ||
           name == "IDTLZ1" || name == "IDTLZ2" || name == "SDTLZ2" || name == "CDTLZ2";
}

std::vector<ObjectiveVector> construct_front(const std::string& name, int M, int count) {
    if (name == "DTLZ1") {
        PointList out = rows_of(0.5 * simplex_points(M, count));
        return out;
    }
    if (name == "DTLZ2") return sphere_points(M, count);
    if (name == "DTLZ5") return front_dtlz5(M, count);
    if (name == "DTLZ7") return front_dtlz7(M, count);
    if (name == "IDTLZ1") {
        PointList out = rows_of(0.5 * simplex_points(M, count));
        for (auto& p : out) p = (0.5 - p.array()).matrix();
        return out;
    }
    if (name == "IDTLZ2") {
        PointList out = sphere_points(M, count);
        for (auto& p : out) p = (1.0 - p.array()).matrix();
        return out;
    }
    if (name == "SDTLZ2") {
        PointList out = sphere_points(M, count);
        for (auto& p : out)
            for (int m = 0; m < M; ++m) p[m] *= std::pow(2.0, m);
        return out;
    }
    if (name == "CDTLZ2") {
        PointList out = sphere_points(M, count);
        for (auto& p : out) {
            for (int m = 0; m < M - 1; ++m) p[m] = std::pow(p[m], 4.0);
            p[M - 1] = p[M - 1] * p[M - 1];
        }
        return out;
    }

    if (name == "MOP1" || name == "MOP5")
        return curve_front(
            [](double t) { return Eigen::Vector2d(t, 1.0 - std::sqrt(t)); }, count);
    if (name == "MOP2")
        return curve_front([](double t) { return Eigen::Vector2d(t, 1.0 - t * t); },
                           count);
    if (name == "MOP3")
        return curve_front(
            [](double t) {
                return Eigen::Vector2d(std::cos(0.5 * kPi * t), std::sin(0.5 * kPi * t));
            },
            count);
    if (name == "MOP4")
        return curve_front(
            [](double t) {
                const double c = std::cos(2.0 * kPi * t);
                return Eigen::Vector2d(t, 1.0 - std::sqrt(t) * c * c);
            },
            count);
    if (name == "MOP6") return rows_of(simplex_points(M, count));
    if (name == "MOP7") return sphere_points(M, count);

    if (name == "UF1" || name == "UF2" || name == "UF3")
        return curve_front(
            [](double t) { return Eigen::Vector2d(t, 1.0 - std::sqrt(t)); }, count);
    if (name == "UF4")
        return curve_front([](double t) { return Eigen::Vector2d(t, 1.0 - t * t); },
                           count);
    if (name == "UF5") {
        PointList out;
        for (int i = 0; i <= 20; ++i)
            out.push_back(Eigen::Vector2d(i / 20.0, 1.0 - i / 20.0));
        return out;
    }
    if (name == "UF6") {
        PointList out;
        out.push_back(Eigen::Vector2d(0.0, 1.0));
        const int per = (count - 1) / 2;
        for (int i = 0; i < per; ++i) {
            const double t = 0.25 + 0.25 * i / (per - 1);
            out.push_back(Eigen::Vector2d(t, 1.0 - t));
        }
        for (int i = 0; i < per; ++i) {
            const double t = 0.75 + 0.25 * i / (per - 1);
            out.push_back(Eigen::Vector2d(t, 1.0 - t));
        }
        return out;
    }
    if (name == "UF7")
        return curve_front([](double t) { return Eigen::Vector2d(t, 1.0 - t); }, count);
    if (name == "UF8") return sphere_points(M, count);
    if (name == "UF9") return front_uf9(count);

    if (name == "WFG2") return front_wfg2(M, count);
    if (name == "WFG4" || name == "WFG6") return front_wfg_concave(M, count);

    // F1-F8 fronts come from the problem's own optimal manifolds.
    const ProblemSpec p = make_problem(name, M);
    if (name == "F1")
        return curve_front(
            [](double t) { return Eigen::Vector2d(t, 1.0 - std::pow(t, 0.1)); }, count);
    if (name == "F2")
        return curve_front(
            [](double t) {
                return Eigen::Vector2d(
                    t, 1.0 - std::pow(t, 10.0) - 0.05 * std::sin(6.0 * kPi * t));
            },
            count);
    if (name == "F3")
        return curve_front(
            [](double t) {
                const double s = std::sin(3.0 * kPi * t);
                return Eigen::Vector2d(t * t, (1.0 - t) * (1.0 - t) + 0.1 * s * s);
            },
            count);
    if (name == "F4")
        return curve_front(
            [](double t) {
                return Eigen::Vector2d(
                    t, 1.0 - t + std::sin(10.0 * kPi * t) / (10.0 * kPi));
            },
            count);
    if (name == "F5") return front_f5(M, count, p);
    if (name == "F6") return front_f6(M, count, p);
    if (name == "F7") return front_f7(M, count, p);
    if (name == "F8") return front_f8(M, count, p);

    throw ConfigError("no front construction for " + name);
}

// ---- reference front files --------------------------------------------------

std::string front_data_dir() {
    const char* env = std::getenv("AREA_DATA_DIR");
    return env && *env ? std::string(env) : std::string("data");
}

std::string front_file_path(const std::string& name, int M) {
    return front_data_dir() + "/" + name + "_" + std::to_string(M) + "d.pf";
}

std::vector<ObjectiveVector> read_front_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw DataError("missing reference front file: " + path);
    std::vector<ObjectiveVector> out;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::istringstream ss(line);
        std::vector<double> vals;
        double v;
        while (ss >> v) vals.push_back(v);
        if (vals.empty()) continue;
        ObjectiveVector p(vals.size());
        for (std::size_t i = 0; i < vals.size(); ++i) p[i] = vals[i];
        out.push_back(std::move(p));
    }
    if (out.empty()) throw DataError("empty reference front file: " + path);
    return out;
}

void write_front_file(const std::string& path, const std::vector<ObjectiveVector>& points) {
    std::ofstream out(path);
    if (!out) throw DataError("cannot write front file: " + path);
    char buf[64];
    for (const auto& p : points) {
        std::string line;
        for (Eigen::Index j = 0; j < p.size(); ++j) {
            std::snprintf(buf, sizeof(buf), "%.12g", p[j]);
            if (j) line += ' ';
            line += buf;
        }
        out << line << '\n';
    }
}

}  // namespace area

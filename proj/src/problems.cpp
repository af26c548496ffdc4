#include "area/problems.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <stdexcept>

namespace area {

namespace {

constexpr double kPi = 3.14159265358979323846;

// |sin(pi*k/2)| for integer k, evaluated exactly.
double half_pi_sin_mag(long long k) { return (k % 2 == 0) ? 0.0 : 1.0; }

// ---- DTLZ family ------------------------------------------------------

double g_rastrigin(const Eigen::VectorXd& xm) {
    double acc = static_cast<double>(xm.size());
    for (Eigen::Index i = 0; i < xm.size(); ++i) {
        const double c = xm[i] - 0.5;
        acc += c * c - std::cos(20.0 * kPi * c);
    }
    return 100.0 * acc;
}

double g_sphere(const Eigen::VectorXd& xm) {
    return (xm.array() - 0.5).square().sum();
}

// theta holds M-1 position values in [0,1] interpreted as angles * pi/2.
ObjectiveVector dtlz2_shape(const Eigen::VectorXd& theta, double g) {
    const int M = static_cast<int>(theta.size()) + 1;
    ObjectiveVector f(M);
    for (int i = 0; i < M; ++i) {
        double v = 1.0 + g;
        for (int j = 0; j < M - 1 - i; ++j) v *= std::cos(theta[j] * kPi / 2.0);
        if (i > 0) v *= std::sin(theta[M - 1 - i] * kPi / 2.0);
        f[i] = v;
    }
    return f;
}

ObjectiveVector dtlz1_shape(const Eigen::VectorXd& t, double g) {
    const int M = static_cast<int>(t.size()) + 1;
    ObjectiveVector f(M);
    for (int i = 0; i < M; ++i) {
        double v = 0.5 * (1.0 + g);
        for (int j = 0; j < M - 1 - i; ++j) v *= t[j];
        if (i > 0) v *= 1.0 - t[M - 1 - i];
        f[i] = v;
    }
    return f;
}

ObjectiveVector eval_dtlz1(int M, const DecisionVector& x) {
    return dtlz1_shape(x.head(M - 1), g_rastrigin(x.tail(x.size() - M + 1)));
}

ObjectiveVector eval_dtlz2(int M, const DecisionVector& x) {
    return dtlz2_shape(x.head(M - 1), g_sphere(x.tail(x.size() - M + 1)));
}

ObjectiveVector eval_dtlz5(int M, const DecisionVector& x) {
    const double g = g_sphere(x.tail(x.size() - M + 1));
    Eigen::VectorXd theta(M - 1);
    theta[0] = x[0];
    for (int i = 1; i < M - 1; ++i)
        theta[i] = (1.0 + 2.0 * g * x[i]) / (2.0 * (1.0 + g));
    return dtlz2_shape(theta, g);
}

ObjectiveVector eval_dtlz7(int M, const DecisionVector& x) {
    const Eigen::VectorXd xm = x.tail(x.size() - M + 1);
    const double g = 1.0 + 9.0 * xm.mean();
    ObjectiveVector f(M);
    double h = M;
    for (int i = 0; i < M - 1; ++i) {
        f[i] = x[i];
        h -= f[i] / (1.0 + g) * (1.0 + std::sin(3.0 * kPi * f[i]));
    }
    f[M - 1] = (1.0 + g) * h;
    return f;
}

ObjectiveVector eval_idtlz1(int M, const DecisionVector& x) {
    const double g = g_rastrigin(x.tail(x.size() - M + 1));
    ObjectiveVector f = dtlz1_shape(x.head(M - 1), g);
    return (0.5 * (1.0 + g) - f.array()).matrix();
}

ObjectiveVector eval_idtlz2(int M, const DecisionVector& x) {
    const double g = g_sphere(x.tail(x.size() - M + 1));
    ObjectiveVector f = dtlz2_shape(x.head(M - 1), g);
    return ((1.0 + g) - f.array()).matrix();
}

ObjectiveVector eval_sdtlz2(int M, const DecisionVector& x) {
    ObjectiveVector f = eval_dtlz2(M, x);
    for (int i = 0; i < M; ++i) f[i] *= std::pow(2.0, i);
    return f;
}

ObjectiveVector eval_cdtlz2(int M, const DecisionVector& x) {
    ObjectiveVector f = eval_dtlz2(M, x);
    for (int i = 0; i < M - 1; ++i) f[i] = std::pow(f[i], 4.0);
    f[M - 1] = f[M - 1] * f[M - 1];
    return f;
}

// ---- F5-F8: DTLZ2 variants with new difficulty terms -------------------

ObjectiveVector eval_f5(int M, const DecisionVector& x) {
    double prod = 1.0;
    for (int i = 0; i < M - 1; ++i)
        prod *= half_pi_sin_mag(static_cast<long long>(std::floor(4.0 * x[i] + 1.6)));
    const double g = g_sphere(x.tail(x.size() - M + 1)) + prod;
    return dtlz2_shape(x.head(M - 1), g);
}

ObjectiveVector eval_f6(int M, const DecisionVector& x) {
    double pos_prod = 1.0;
    double sin_prod = 1.0;
    for (int i = 0; i < M - 1; ++i) {
        pos_prod *= x[i];
        sin_prod *= std::abs(std::sin(2.0 * kPi * x[i]));
    }
    const double g =
        std::pow(pos_prod, 0.1) * g_sphere(x.tail(x.size() - M + 1)) + sin_prod;
    return dtlz2_shape(x.head(M - 1), g);
}

ObjectiveVector eval_f7(int M, const DecisionVector& x) {
    double pos_prod = 1.0;
    double shifted_prod = 1.0;
    for (int i = 0; i < M - 1; ++i) {
        pos_prod *= x[i];
        shifted_prod *= x[i] - 2.0;
    }
    double dist = 0.0;
    for (Eigen::Index i = M - 1; i < x.size(); ++i) {
        const double c = x[i] - pos_prod;
        dist += c * c;
    }
    const double g =
        dist + half_pi_sin_mag(static_cast<long long>(std::floor(4.0 * shifted_prod)));
    return dtlz2_shape(x.head(M - 1), g);
}

ObjectiveVector eval_f8(int M, const DecisionVector& x) {
    const int n = static_cast<int>(x.size());
    double g = 0.0;
    for (int i = M - 1; i < n; ++i) {
        const double c = (x[i] - x[0]) / n;
        g += c * c;
    }
    const double total = x.sum();
    ObjectiveVector f(M);
    for (int i = 0; i < M - 1; ++i) f[i] = 1.0 + g * ((1.0 + total) / x[i] - 1.0);
    f[M - 1] = total;
    return f;
}

// ---- MOP suite ----------------------------------------------------------

double mop_g_power(const DecisionVector& x, double mult) {
    // sum of -0.9 t^2 + |t|^0.6 over the linked tail
    const double s = std::sin(0.5 * kPi * x[0]);
    double acc = 0.0;
    for (Eigen::Index i = 1; i < x.size(); ++i) {
        const double t = x[i] - s;
        acc += -0.9 * t * t + std::pow(std::abs(t), 0.6);
    }
    return mult * acc;
}

double mop_g_sigmoid(const DecisionVector& x, double mult) {
    const double s = std::sin(0.5 * kPi * x[0]);
    double acc = 0.0;
    for (Eigen::Index i = 1; i < x.size(); ++i) {
        const double t = std::abs(x[i] - s);
        acc += t / (1.0 + std::exp(5.0 * t));
    }
    return mult * acc;
}

ObjectiveVector eval_mop1(const DecisionVector& x) {
    const double g = mop_g_power(x, 2.0 * std::sin(kPi * x[0]));
    return Eigen::Vector2d((1.0 + g) * x[0], (1.0 + g) * (1.0 - std::sqrt(x[0])));
}

ObjectiveVector eval_mop2(const DecisionVector& x) {
    const double g = mop_g_sigmoid(x, 10.0 * std::sin(kPi * x[0]));
    return Eigen::Vector2d((1.0 + g) * x[0], (1.0 + g) * (1.0 - x[0] * x[0]));
}

ObjectiveVector eval_mop3(const DecisionVector& x) {
    const double g = mop_g_sigmoid(x, 10.0 * std::sin(0.5 * kPi * x[0]));
    return Eigen::Vector2d((1.0 + g) * std::cos(0.5 * kPi * x[0]),
                           (1.0 + g) * std::sin(0.5 * kPi * x[0]));
}

ObjectiveVector eval_mop4(const DecisionVector& x) {
    const double g = mop_g_sigmoid(x, 10.0 * std::sin(kPi * x[0]));
    const double c = std::cos(2.0 * kPi * x[0]);
    return Eigen::Vector2d((1.0 + g) * x[0],
                           (1.0 + g) * (1.0 - std::sqrt(x[0]) * c * c));
}

ObjectiveVector eval_mop5(const DecisionVector& x) {
    const double g = mop_g_power(x, 2.0 * std::abs(std::cos(kPi * x[0])));
    return Eigen::Vector2d((1.0 + g) * x[0], (1.0 + g) * (1.0 - std::sqrt(x[0])));
}

double mop_g3_power(const DecisionVector& x) {
    const double link = x[0] * x[1];
    double acc = 0.0;
    for (Eigen::Index i = 2; i < x.size(); ++i) {
        const double t = x[i] - link;
        acc += -0.9 * t * t + std::pow(std::abs(t), 0.6);
    }
    return 2.0 * std::sin(kPi * x[0]) * acc;
}

ObjectiveVector eval_mop6(const DecisionVector& x) {
    const double g = mop_g3_power(x);
    return Eigen::Vector3d((1.0 + g) * x[0] * x[1], (1.0 + g) * x[0] * (1.0 - x[1]),
                           (1.0 + g) * (1.0 - x[0]));
}

ObjectiveVector eval_mop7(const DecisionVector& x) {
    const double g = mop_g3_power(x);
    return Eigen::Vector3d(
        (1.0 + g) * std::cos(0.5 * kPi * x[0]) * std::cos(0.5 * kPi * x[1]),
        (1.0 + g) * std::cos(0.5 * kPi * x[0]) * std::sin(0.5 * kPi * x[1]),
        (1.0 + g) * std::sin(0.5 * kPi * x[0]));
}

// ---- UF suite (CEC 2009 unconstrained instances) ------------------------

ObjectiveVector eval_uf1(const DecisionVector& x) {
    const int n = static_cast<int>(x.size());
    double s1 = 0.0, s2 = 0.0;
    int c1 = 0, c2 = 0;
    for (int j = 2; j <= n; ++j) {
        const double y = x[j - 1] - std::sin(6.0 * kPi * x[0] + j * kPi / n);
        if (j % 2 == 1) {
            s1 += y * y;
            ++c1;
        } else {
            s2 += y * y;
            ++c2;
        }
    }
    return Eigen::Vector2d(x[0] + 2.0 * s1 / c1,
                           1.0 - std::sqrt(x[0]) + 2.0 * s2 / c2);
}

ObjectiveVector eval_uf2(const DecisionVector& x) {
    const int n = static_cast<int>(x.size());
    double s1 = 0.0, s2 = 0.0;
    int c1 = 0, c2 = 0;
    for (int j = 2; j <= n; ++j) {
        const double arg = 6.0 * kPi * x[0] + j * kPi / n;
        const double base = 0.3 * x[0] * x[0] * std::cos(24.0 * kPi * x[0] + 4.0 * j * kPi / n) +
                            0.6 * x[0];
        double y;
        if (j % 2 == 1) {
            y = x[j - 1] - base * std::cos(arg);
            s1 += y * y;
            ++c1;
        } else {
            y = x[j - 1] - base * std::sin(arg);
            s2 += y * y;
            ++c2;
        }
    }
    return Eigen::Vector2d(x[0] + 2.0 * s1 / c1,
                           1.0 - std::sqrt(x[0]) + 2.0 * s2 / c2);
}

ObjectiveVector eval_uf3(const DecisionVector& x) {
    const int n = static_cast<int>(x.size());
    double s1 = 0.0, s2 = 0.0, p1 = 1.0, p2 = 1.0;
    int c1 = 0, c2 = 0;
    for (int j = 2; j <= n; ++j) {
        const double y =
            x[j - 1] - std::pow(x[0], 0.5 * (1.0 + 3.0 * (j - 2.0) / (n - 2.0)));
        const double cosy = std::cos(20.0 * y * kPi / std::sqrt(static_cast<double>(j)));
        if (j % 2 == 1) {
            s1 += y * y;
            p1 *= cosy;
            ++c1;
        } else {
            s2 += y * y;
            p2 *= cosy;
            ++c2;
        }
    }
    return Eigen::Vector2d(x[0] + 2.0 / c1 * (4.0 * s1 - 2.0 * p1 + 2.0),
                           1.0 - std::sqrt(x[0]) + 2.0 / c2 * (4.0 * s2 - 2.0 * p2 + 2.0));
}

ObjectiveVector eval_uf4(const DecisionVector& x) {
    const int n = static_cast<int>(x.size());
    double s1 = 0.0, s2 = 0.0;
    int c1 = 0, c2 = 0;
    for (int j = 2; j <= n; ++j) {
        const double y = x[j - 1] - std::sin(6.0 * kPi * x[0] + j * kPi / n);
        const double h = std::abs(y) / (1.0 + std::exp(2.0 * std::abs(y)));
        if (j % 2 == 1) {
            s1 += h;
            ++c1;
        } else {
            s2 += h;
            ++c2;
        }
    }
    return Eigen::Vector2d(x[0] + 2.0 * s1 / c1,
                           1.0 - x[0] * x[0] + 2.0 * s2 / c2);
}

ObjectiveVector eval_uf5(const DecisionVector& x) {
    const int n = static_cast<int>(x.size());
    const double N = 10.0, eps = 0.1;
    double s1 = 0.0, s2 = 0.0;
    int c1 = 0, c2 = 0;
    for (int j = 2; j <= n; ++j) {
        const double y = x[j - 1] - std::sin(6.0 * kPi * x[0] + j * kPi / n);
        const double h = 2.0 * y * y - std::cos(4.0 * kPi * y) + 1.0;
        if (j % 2 == 1) {
            s1 += h;
            ++c1;
        } else {
            s2 += h;
            ++c2;
        }
    }
    const double bump = (0.5 / N + eps) * std::abs(std::sin(2.0 * N * kPi * x[0]));
    return Eigen::Vector2d(x[0] + bump + 2.0 * s1 / c1,
                           1.0 - x[0] + bump + 2.0 * s2 / c2);
}

ObjectiveVector eval_uf6(const DecisionVector& x) {
    const int n = static_cast<int>(x.size());
    const double N = 2.0, eps = 0.1;
    double s1 = 0.0, s2 = 0.0, p1 = 1.0, p2 = 1.0;
    int c1 = 0, c2 = 0;
    for (int j = 2; j <= n; ++j) {
        const double y = x[j - 1] - std::sin(6.0 * kPi * x[0] + j * kPi / n);
        const double cosy = std::cos(20.0 * y * kPi / std::sqrt(static_cast<double>(j)));
        if (j % 2 == 1) {
            s1 += y * y;
            p1 *= cosy;
            ++c1;
        } else {
            s2 += y * y;
            p2 *= cosy;
            ++c2;
        }
    }
    const double bump =
        std::max(0.0, 2.0 * (0.5 / N + eps) * std::sin(2.0 * N * kPi * x[0]));
    return Eigen::Vector2d(x[0] + bump + 2.0 / c1 * (4.0 * s1 - 2.0 * p1 + 2.0),
                           1.0 - x[0] + bump + 2.0 / c2 * (4.0 * s2 - 2.0 * p2 + 2.0));
}

ObjectiveVector eval_uf7(const DecisionVector& x) {
    const int n = static_cast<int>(x.size());
    double s1 = 0.0, s2 = 0.0;
    int c1 = 0, c2 = 0;
    for (int j = 2; j <= n; ++j) {
        const double y = x[j - 1] - std::sin(6.0 * kPi * x[0] + j * kPi / n);
        if (j % 2 == 1) {
            s1 += y * y;
            ++c1;
        } else {
            s2 += y * y;
            ++c2;
        }
    }
    const double root = std::pow(x[0], 0.2);
    return Eigen::Vector2d(root + 2.0 * s1 / c1, 1.0 - root + 2.0 * s2 / c2);
}

ObjectiveVector eval_uf8(const DecisionVector& x) {
    const int n = static_cast<int>(x.size());
    double s[3] = {0.0, 0.0, 0.0};
    int c[3] = {0, 0, 0};
    for (int j = 3; j <= n; ++j) {
        const double y = x[j - 1] - 2.0 * x[1] * std::sin(2.0 * kPi * x[0] + j * kPi / n);
        // J1: j-1 divisible by 3; J2: j-2 divisible by 3; J3: j divisible by 3.
        int idx;
        if ((j - 1) % 3 == 0)
            idx = 0;
        else if ((j - 2) % 3 == 0)
            idx = 1;
        else
            idx = 2;
        s[idx] += y * y;
        ++c[idx];
    }
    return Eigen::Vector3d(
        std::cos(0.5 * kPi * x[0]) * std::cos(0.5 * kPi * x[1]) + 2.0 * s[0] / c[0],
        std::cos(0.5 * kPi * x[0]) * std::sin(0.5 * kPi * x[1]) + 2.0 * s[1] / c[1],
        std::sin(0.5 * kPi * x[0]) + 2.0 * s[2] / c[2]);
}

ObjectiveVector eval_uf9(const DecisionVector& x) {
    const int n = static_cast<int>(x.size());
    const double eps = 0.1;
    double s[3] = {0.0, 0.0, 0.0};
    int c[3] = {0, 0, 0};
    for (int j = 3; j <= n; ++j) {
        const double y = x[j - 1] - 2.0 * x[1] * std::sin(2.0 * kPi * x[0] + j * kPi / n);
        int idx;
        if ((j - 1) % 3 == 0)
            idx = 0;
        else if ((j - 2) % 3 == 0)
            idx = 1;
        else
            idx = 2;
        s[idx] += y * y;
        ++c[idx];
    }
    const double dip = 2.0 * x[0] - 1.0;
    const double e = std::max(0.0, (1.0 + eps) * (1.0 - 4.0 * dip * dip));
    return Eigen::Vector3d(0.5 * (e + 2.0 * x[0]) * x[1] + 2.0 * s[0] / c[0],
                           0.5 * (e - 2.0 * x[0] + 2.0) * x[1] + 2.0 * s[1] / c[1],
                           1.0 - x[1] + 2.0 * s[2] / c[2]);
}

// ---- WFG 2/4/6 -----------------------------------------------------------

double s_linear(double y, double a) {
    return std::abs(y - a) / std::abs(std::floor(a - y) + a);
}

double s_multi(double y, double a, double b, double c) {
    const double w = std::abs(y - c) / (2.0 * (std::floor(c - y) + c));
    return (1.0 + std::cos((4.0 * a + 2.0) * kPi * (0.5 - w)) + 4.0 * b * w * w) /
           (b + 2.0);
}

double r_nonsep(const std::vector<double>& y, int a) {
    const int sz = static_cast<int>(y.size());
    double num = 0.0;
    for (int j = 0; j < sz; ++j) {
        num += y[j];
        for (int p = 0; p <= a - 2; ++p) num += std::abs(y[j] - y[(j + 1 + p) % sz]);
    }
    const double half = std::ceil(a / 2.0);
    const double den = (sz / static_cast<double>(a)) * half * (1.0 + 2.0 * a - 2.0 * half);
    return num / den;
}

double wfg_convex(const Eigen::VectorXd& x, int m, int M) {
    // m is 1-based objective index
    if (m == M) return 1.0 - std::sin(x[0] * kPi / 2.0);
    double v = 1.0;
    for (int i = 1; i <= M - m; ++i) v *= 1.0 - std::cos(x[i - 1] * kPi / 2.0);
    if (m > 1) v *= 1.0 - std::sin(x[M - m] * kPi / 2.0);
    return v;
}

double wfg_concave(const Eigen::VectorXd& x, int m, int M) {
    if (m == M) return std::cos(x[0] * kPi / 2.0);
    double v = 1.0;
    for (int i = 1; i <= M - m; ++i) v *= std::sin(x[i - 1] * kPi / 2.0);
    if (m > 1) v *= std::cos(x[M - m] * kPi / 2.0);
    return v;
}

double wfg_disc(double x1) {
    const double c = std::cos(5.0 * kPi * x1);
    return 1.0 - x1 * c * c;
}

// Shared shape stage: underlying parameters -> objective vector.
ObjectiveVector wfg_shape(int variant, const Eigen::VectorXd& t) {
    const int M = static_cast<int>(t.size());
    Eigen::VectorXd x(M);
    for (int i = 0; i < M - 1; ++i)
        x[i] = std::max(t[M - 1], 1.0) * (t[i] - 0.5) + 0.5;
    x[M - 1] = t[M - 1];
    ObjectiveVector f(M);
    for (int m = 1; m <= M; ++m) {
        double h;
        if (variant == 2)
            h = (m < M) ? wfg_convex(x.head(M - 1), m, M) : wfg_disc(x[0]);
        else
            h = wfg_concave(x.head(M - 1), m, M);
        f[m - 1] = x[M - 1] + 2.0 * m * h;
    }
    return f;
}

// Position/distance reduction for each variant; k position and l distance
// parameters, block size k/(M-1) per position objective.
Eigen::VectorXd wfg_transition(int variant, int M, int k, int l,
                               const DecisionVector& z) {
    const int n = k + l;
    Eigen::VectorXd y(n);
    for (int i = 0; i < n; ++i) y[i] = z[i] / (2.0 * (i + 1));

    if (variant == 4) {
        for (int i = 0; i < n; ++i) y[i] = s_multi(y[i], 30.0, 10.0, 0.35);
    } else {
        for (int i = k; i < n; ++i) y[i] = s_linear(y[i], 0.35);
    }

    const int block = k / (M - 1);
    Eigen::VectorXd t(M);
    if (variant == 2) {
        std::vector<double> reduced(k + l / 2);
        for (int i = 0; i < k; ++i) reduced[i] = y[i];
        for (int i = 0; i < l / 2; ++i) {
            const std::vector<double> pair = {y[k + 2 * i], y[k + 2 * i + 1]};
            reduced[k + i] = r_nonsep(pair, 2);
        }
        for (int m = 0; m < M - 1; ++m) {
            double acc = 0.0;
            for (int i = 0; i < block; ++i) acc += reduced[m * block + i];
            t[m] = acc / block;
        }
        double acc = 0.0;
        for (int i = 0; i < l / 2; ++i) acc += reduced[k + i];
        t[M - 1] = acc / (l / 2);
    } else if (variant == 4) {
        for (int m = 0; m < M - 1; ++m) t[m] = y.segment(m * block, block).mean();
        t[M - 1] = y.segment(k, l).mean();
    } else {  // WFG6
        for (int m = 0; m < M - 1; ++m) {
            std::vector<double> blockv(block);
            for (int i = 0; i < block; ++i) blockv[i] = y[m * block + i];
            t[m] = r_nonsep(blockv, block);
        }
        std::vector<double> tail(l);
        for (int i = 0; i < l; ++i) tail[i] = y[k + i];
        t[M - 1] = r_nonsep(tail, l);
    }
    return t;
}

ObjectiveVector eval_wfg(int variant, int M, int k, int l, const DecisionVector& z) {
    return wfg_shape(variant, wfg_transition(variant, M, k, l, z));
}

// ---- F1-F4 (irregular biobjective instances) ----------------------------

double f_g_easy(const DecisionVector& x) {
    double acc = 0.0;
    for (Eigen::Index i = 1; i < x.size(); ++i) {
        const double c = x[i] - 0.5;
        acc += c * c;
    }
    return acc;
}

ObjectiveVector eval_f1(const DecisionVector& x) {
    const double g = f_g_easy(x);
    return Eigen::Vector2d((1.0 + g) * x[0], (1.0 + g) * (1.0 - std::pow(x[0], 0.1)));
}

ObjectiveVector eval_f2(const DecisionVector& x) {
    const double g = mop_g_sigmoid(x, 10.0 * std::sin(kPi * x[0]));
    const double shape =
        1.0 - std::pow(x[0], 10.0) - 0.05 * std::sin(6.0 * kPi * x[0]);
    return Eigen::Vector2d((1.0 + g) * x[0], (1.0 + g) * shape);
}

ObjectiveVector eval_f3(const DecisionVector& x) {
    const double g = f_g_easy(x);
    const double s = std::sin(3.0 * kPi * x[0]);
    const double shape = (1.0 - x[0]) * (1.0 - x[0]) + 0.1 * s * s;
    return Eigen::Vector2d((1.0 + g) * x[0] * x[0], (1.0 + g) * shape);
}

ObjectiveVector eval_f4(const DecisionVector& x) {
    const double g = mop_g_power(x, 2.0 * std::sin(kPi * x[0]));
    const double shape = 1.0 - x[0] + std::sin(10.0 * kPi * x[0]) / (10.0 * kPi);
    return Eigen::Vector2d((1.0 + g) * x[0], (1.0 + g) * shape);
}

// ---- registry ------------------------------------------------------------

void require_m(const std::string& name, int M, std::initializer_list<int> allowed) {
    for (int a : allowed)
        if (M == a) return;
    throw ConfigError("problem " + name + " does not support M=" + std::to_string(M));
}

ProblemSpec box_problem(std::string name, int M, int n, double lo, double hi,
                        std::function<ObjectiveVector(const DecisionVector&)> fn) {
    ProblemSpec p;
    p.name = std::move(name);
    p.objectives = M;
    p.variables = n;
    p.lower = DecisionVector::Constant(n, lo);
    p.upper = DecisionVector::Constant(n, hi);
    p.objective = std::move(fn);
    return p;
}

}  // namespace

std::vector<std::string> problem_names() {
    std::vector<std::string> names = {"DTLZ1",  "DTLZ2",  "DTLZ5",  "DTLZ7",
                                      "IDTLZ1", "IDTLZ2", "SDTLZ2", "CDTLZ2"};
    for (int i = 1; i <= 7; ++i) names.push_back("MOP" + std::to_string(i));
    for (int i = 1; i <= 9; ++i) names.push_back("UF" + std::to_string(i));
    names.insert(names.end(), {"WFG2", "WFG4", "WFG6"});
    for (int i = 1; i <= 8; ++i) names.push_back("F" + std::to_string(i));
    return names;
}

ProblemSpec make_problem(const std::string& name, int M) {
    ProblemSpec p;
    if (name == "DTLZ1" || name == "DTLZ2" || name == "DTLZ5" || name == "DTLZ7" ||
        name == "IDTLZ1" || name == "IDTLZ2" || name == "SDTLZ2" || name == "CDTLZ2") {
        require_m(name, M, {3});
        const int n = M + 9;
        auto fn = [name, M](const DecisionVector& x) {
            if (name == "DTLZ1") return eval_dtlz1(M, x);
            if (name == "DTLZ2") return eval_dtlz2(M, x);
            if (name == "DTLZ5") return eval_dtlz5(M, x);
            if (name == "DTLZ7") return eval_dtlz7(M, x);
            if (name == "IDTLZ1") return eval_idtlz1(M, x);
            if (name == "IDTLZ2") return eval_idtlz2(M, x);
            if (name == "SDTLZ2") return eval_sdtlz2(M, x);
            return eval_cdtlz2(M, x);
        };
        p = box_problem(name, M, n, 0.0, 1.0, fn);
    } else if (name == "F5" || name == "F6" || name == "F7") {
        require_m(name, M, {3});
        const int n = M + 9;
        auto fn = [name, M](const DecisionVector& x) {
            if (name == "F5") return eval_f5(M, x);
            if (name == "F6") return eval_f6(M, x);
            return eval_f7(M, x);
        };
        p = box_problem(name, M, n, 0.0, 1.0, fn);
    } else if (name == "F8") {
        require_m(name, M, {3});
        p = box_problem(name, M, M + 9, 1.0, 4.0,
                        [M](const DecisionVector& x) { return eval_f8(M, x); });
    } else if (name == "F1" || name == "F2" || name == "F3" || name == "F4") {
        require_m(name, M, {2});
        const int n = M + 9;
        auto fn = [name](const DecisionVector& x) {
            if (name == "F1") return eval_f1(x);
            if (name == "F2") return eval_f2(x);
            if (name == "F3") return eval_f3(x);
            return eval_f4(x);
        };
        p = box_problem(name, M, n, 0.0, 1.0, fn);
    } else if (name.rfind("MOP", 0) == 0) {
        const int idx = std::atoi(name.c_str() + 3);
        if (idx < 1 || idx > 7) throw ConfigError("unknown problem " + name);
        require_m(name, M, {idx <= 5 ? 2 : 3});
        auto fn = [idx](const DecisionVector& x) {
            switch (idx) {
                case 1: return eval_mop1(x);
                case 2: return eval_mop2(x);
                case 3: return eval_mop3(x);
                case 4: return eval_mop4(x);
                case 5: return eval_mop5(x);
                case 6: return eval_mop6(x);
                default: return eval_mop7(x);
            }
        };
        p = box_problem(name, M, 10, 0.0, 1.0, fn);
    } else if (name.rfind("UF", 0) == 0) {
        const int idx = std::atoi(name.c_str() + 2);
        if (idx < 1 || idx > 9) throw ConfigError("unknown problem " + name);
        require_m(name, M, {idx <= 7 ? 2 : 3});
        const int n = 30;
        auto fn = [idx](const DecisionVector& x) {
            switch (idx) {
                case 1: return eval_uf1(x);
                case 2: return eval_uf2(x);
                case 3: return eval_uf3(x);
                case 4: return eval_uf4(x);
                case 5: return eval_uf5(x);
                case 6: return eval_uf6(x);
                case 7: return eval_uf7(x);
                case 8: return eval_uf8(x);
                default: return eval_uf9(x);
            }
        };
        p.name = name;
        p.objectives = M;
        p.variables = n;
        p.objective = fn;
        p.lower = DecisionVector::Constant(n, 0.0);
        p.upper = DecisionVector::Constant(n, 1.0);
        if (idx == 1 || idx == 2 || idx == 5 || idx == 6 || idx == 7) {
            p.lower.tail(n - 1).setConstant(-1.0);
            p.upper.tail(n - 1).setConstant(1.0);
            p.lower[0] = 0.0;
            p.upper[0] = 1.0;
        } else if (idx == 4) {
            p.lower.tail(n - 1).setConstant(-2.0);
            p.upper.tail(n - 1).setConstant(2.0);
        } else if (idx == 8 || idx == 9) {
            p.lower.tail(n - 2).setConstant(-2.0);
            p.upper.tail(n - 2).setConstant(2.0);
        }
    } else if (name == "WFG2" || name == "WFG4" || name == "WFG6") {
        require_m(name, M, {3, 8, 15});
        const int variant = name[3] - '0';
        const int k = 2 * (M - 1);
        const int l = 20;
        const int n = k + l;
        p.name = name;
        p.objectives = M;
        p.variables = n;
        p.objective = [variant, M, k, l](const DecisionVector& x) {
            return eval_wfg(variant, M, k, l, x);
        };
        p.lower = DecisionVector::Zero(n);
        p.upper = DecisionVector(n);
        for (int i = 0; i < n; ++i) p.upper[i] = 2.0 * (i + 1);
    } else {
        throw ConfigError("unknown problem " + name);
    }

    const std::string pname = p.name;
    const int pm = p.objectives;
    p.front = [pname, pm](int count) -> std::vector<ObjectiveVector> {
        if (has_analytic_front(pname)) return construct_front(pname, pm, count);
        return read_front_file(front_file_path(pname, pm));
    };
    return p;
}

ObjectiveVector evaluate(const ProblemSpec& p, const DecisionVector& x) {
    if (x.size() != p.variables)
        throw std::invalid_argument("evaluate: wrong decision vector length for " + p.name);
    for (Eigen::Index i = 0; i < x.size(); ++i)
        if (x[i] < p.lower[i] || x[i] > p.upper[i])
            throw std::invalid_argument("evaluate: decision vector outside bounds of " +
                                        p.name);
    ObjectiveVector f = p.objective(x);
    if (!f.allFinite())
        throw std::runtime_error("evaluate: non-finite objective from " + p.name);
    return f;
}

std::vector<ObjectiveVector> pf_sample(const ProblemSpec& p, int count) {
    return p.front(count);
}

std::vector<std::pair<double, double>> bounds(const ProblemSpec& p) {
    std::vector<std::pair<double, double>> out(p.variables);
    for (int i = 0; i < p.variables; ++i) out[i] = {p.lower[i], p.upper[i]};
    return out;
}

}  // namespace area

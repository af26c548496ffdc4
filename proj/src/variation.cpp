#include "area/variation.hpp"

#include "area/core.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace area {

namespace {

double clamp(double v, double lo, double hi) { return std::min(std::max(v, lo), hi); }

}  // namespace

double resolved_mutation_prob(const OperatorParams& params, int variables) {
    return params.mutation_prob >= 0.0 ? params.mutation_prob : 1.0 / variables;
}

DecisionVector sbx_crossover(const DecisionVector& p1, const DecisionVector& p2,
                             const OperatorParams& params, const DecisionVector& lower,
                             const DecisionVector& upper, Rng& rng) {
    const DecisionVector* a = &p1;
    const DecisionVector* b = &p2;
    if (rng.uniform() < 0.5) std::swap(a, b);
    DecisionVector child = *a;
    if (rng.uniform() > params.crossover_prob) return child;

    const double eta = params.crossover_index;
    for (Eigen::Index j = 0; j < child.size(); ++j) {
        if (rng.uniform() > 0.5) continue;
        const double y1 = std::min((*a)[j], (*b)[j]);
        const double y2 = std::max((*a)[j], (*b)[j]);
        if (y2 - y1 < 1e-14) continue;
        const double u = rng.uniform();

        double beta = 1.0 + 2.0 * (y1 - lower[j]) / (y2 - y1);
        double alpha = 2.0 - std::pow(beta, -(eta + 1.0));
        double betaq = u <= 1.0 / alpha ? std::pow(u * alpha, 1.0 / (eta + 1.0))
                                        : std::pow(1.0 / (2.0 - u * alpha), 1.0 / (eta + 1.0));
        const double c_low = clamp(0.5 * (y1 + y2 - betaq * (y2 - y1)), lower[j], upper[j]);

        beta = 1.0 + 2.0 * (upper[j] - y2) / (y2 - y1);
        alpha = 2.0 - std::pow(beta, -(eta + 1.0));
        betaq = u <= 1.0 / alpha ? std::pow(u * alpha, 1.0 / (eta + 1.0))
                                 : std::pow(1.0 / (2.0 - u * alpha), 1.0 / (eta + 1.0));
        const double c_high = clamp(0.5 * (y1 + y2 + betaq * (y2 - y1)), lower[j], upper[j]);

        child[j] = rng.uniform() <= 0.5 ? c_low : c_high;
    }
    return child;
}

DecisionVector polynomial_mutation(const DecisionVector& x, const OperatorParams& params,
                                   const DecisionVector& lower, const DecisionVector& upper,
                                   Rng& rng) {
    DecisionVector out = x;
    const double pm = resolved_mutation_prob(params, static_cast<int>(x.size()));
    const double eta = params.mutation_index;
    for (Eigen::Index j = 0; j < out.size(); ++j) {
        if (rng.uniform() > pm) continue;
        const double span = upper[j] - lower[j];
        if (span <= 0.0) continue;
        const double y = out[j];
        const double d1 = (y - lower[j]) / span;
        const double d2 = (upper[j] - y) / span;
        const double u = rng.uniform();
        const double mut_pow = 1.0 / (eta + 1.0);
        double deltaq;
        if (u <= 0.5) {
            const double val = 2.0 * u + (1.0 - 2.0 * u) * std::pow(1.0 - d1, eta + 1.0);
            deltaq = std::pow(val, mut_pow) - 1.0;
        } else {
            const double val =
                2.0 * (1.0 - u) + 2.0 * (u - 0.5) * std::pow(1.0 - d2, eta + 1.0);
            deltaq = 1.0 - std::pow(val, mut_pow);
        }
        out[j] = clamp(y + deltaq * span, lower[j], upper[j]);
    }
    return out;
}

DecisionVector de_offspring(const DecisionVector& target, const DecisionVector& a,
                            const DecisionVector& b, const OperatorParams& params,
                            const DecisionVector& lower, const DecisionVector& upper,
                            Rng& rng) {
    DecisionVector trial = target;
    for (Eigen::Index j = 0; j < trial.size(); ++j) {
        if (rng.uniform() < params.de_crossover)
            trial[j] = target[j] + params.de_scale * (a[j] - b[j]);
        if (trial[j] < lower[j]) trial[j] = 0.5 * (lower[j] + target[j]);
        if (trial[j] > upper[j]) trial[j] = 0.5 * (upper[j] + target[j]);
    }
    return polynomial_mutation(trial, params, lower, upper, rng);
}

Eigen::VectorXd local_mating_probabilities(const Population& pop, const Population& archive,
                                           const IdealPoints& z) {
    const int n = static_cast<int>(pop.size());
    Eigen::VectorXd probs = Eigen::VectorXd::Ones(n);
    if (archive.empty()) return probs;

    const int M = z.objectives();
    const int na = static_cast<int>(archive.size());
    Matrix arch(na, M);
    for (int j = 0; j < na; ++j) arch.row(j) = normalize(archive[j].f, z);

    // Crowding factor per archive member: the product of its M smallest
    // distances to other members, padded with 1 where neighbours run out.
    Eigen::VectorXd crowding(na);
    std::vector<double> dist;
    for (int j = 0; j < na; ++j) {
        dist.clear();
        for (int k = 0; k < na; ++k)
            if (k != j) dist.push_back((arch.row(j) - arch.row(k)).norm());
        std::sort(dist.begin(), dist.end());
        double prod = 1.0;
        for (int m = 0; m < M; ++m)
            prod *= m < static_cast<int>(dist.size()) ? dist[m] : 1.0;
        crowding[j] = prod;
    }

    Eigen::VectorXd score(n);
    for (int i = 0; i < n; ++i) {
        const ObjectiveVector fx = normalize(pop[i].f, z);
        int nearest = 0;
        double d1 = std::numeric_limits<double>::infinity();
        for (int j = 0; j < na; ++j) {
            const double d = (fx.transpose() - arch.row(j)).norm();
            if (d < d1) {
                d1 = d;
                nearest = j;
            }
        }
        score[i] = d1 + crowding[nearest];
    }
    const double top = score.maxCoeff();
    for (int i = 0; i < n; ++i) {
        const double p = top > 0.0 ? score[i] / top : 1.0;
        probs[i] = std::min(1.0, p + 0.2);
    }
    return probs;
}

int select_mate(int self, const std::vector<int>& neighbourhood, int pop_size, double prob,
                Rng& rng) {
    if (rng.uniform() < prob) {
        int others = 0;
        for (int idx : neighbourhood)
            if (idx != self) ++others;
        if (others > 0) {
            int pick = static_cast<int>(rng.index(others));
            for (int idx : neighbourhood) {
                if (idx == self) continue;
                if (pick-- == 0) return idx;
            }
        }
    }
    if (pop_size <= 1) return self;
    const int pick = static_cast<int>(rng.index(pop_size - 1));
    return pick >= self ? pick + 1 : pick;
}

}  // namespace area

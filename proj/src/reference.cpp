#include "area/reference.hpp"

#include "area/archive.hpp"
#include "area/core.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace area {

namespace {

long long lattice_count(int objectives, int divisions) {
    // C(divisions + objectives - 1, objectives - 1) without overflow for the
    // sizes used here.
    long long c = 1;
    for (int i = 1; i < objectives; ++i) {
        c = c * (divisions + i) / i;
    }
    return c;
}

void fill_lattice(Matrix& out, int& row, Eigen::VectorXd& w, int dim, int remaining,
                  int divisions) {
    const int M = static_cast<int>(w.size());
    if (dim == M - 1) {
        w[dim] = static_cast<double>(remaining) / divisions;
        out.row(row++) = w;
        return;
    }
    for (int k = 0; k <= remaining; ++k) {
        w[dim] = static_cast<double>(k) / divisions;
        fill_lattice(out, row, w, dim + 1, remaining - k, divisions);
    }
}

Matrix normalized_population(const Population& pop, const IdealPoints& z) {
    Matrix out(pop.size(), z.objectives());
    for (std::size_t i = 0; i < pop.size(); ++i) out.row(i) = normalize(pop[i].f, z);
    return out;
}

void erase_row(Matrix& m, int row) {
    const int last = static_cast<int>(m.rows()) - 1;
    for (int r = row; r < last; ++r) m.row(r) = m.row(r + 1);
    m.conservativeResize(last, Eigen::NoChange);
}

}  // namespace

Matrix simplex_lattice(int objectives, int divisions) {
    if (objectives < 2 || divisions < 1)
        throw std::invalid_argument("simplex_lattice: need M >= 2 and H >= 1");
    Matrix out(lattice_count(objectives, divisions), objectives);
    Eigen::VectorXd w(objectives);
    int row = 0;
    fill_lattice(out, row, w, 0, divisions, divisions);
    return out;
}

Matrix simplex_weights(int objectives, int count) {
    if (count < 1) throw std::invalid_argument("simplex_weights: count must be positive");
    const double centroid = 1.0 / objectives;
    Matrix out(count, objectives);
    int filled = 0;
    double shrink = 1.0;
    while (filled < count) {
        const int remaining = count - filled;
        int divisions = 1;
        while (lattice_count(objectives, divisions + 1) <= remaining) ++divisions;
        if (lattice_count(objectives, divisions) > remaining) {
            // Fewer slots than the smallest lattice: pad with centroids.
            for (; filled < count; ++filled)
                out.row(filled).setConstant(centroid);
            break;
        }
        Matrix layer = simplex_lattice(objectives, divisions);
        for (int r = 0; r < layer.rows(); ++r) {
            out.row(filled++) =
                shrink * layer.row(r).array() + (1.0 - shrink) * centroid;
        }
        shrink *= 0.5;  // each extra layer moves halfway toward the centroid
    }
    return out;
}

ReferencePoint shift_to_plane(const Eigen::VectorXd& weight) {
    return weight.array() - 1.0 / weight.size();
}

ReferencePoint project_to_plane(const ObjectiveVector& f) {
    return f.array() - f.sum() / f.size();
}

std::vector<std::vector<int>> build_neighbourhood(const Matrix& points, int T) {
    const int n = static_cast<int>(points.rows());
    if (T < 1 || T > n) throw std::invalid_argument("build_neighbourhood: bad T");
    std::vector<std::vector<int>> table(n);
    std::vector<int> order(n);
    std::vector<double> dist(n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) dist[j] = (points.row(i) - points.row(j)).norm();
        std::iota(order.begin(), order.end(), 0);
        std::stable_sort(order.begin(), order.end(),
                         [&](int a, int b) { return dist[a] < dist[b]; });
        table[i].assign(order.begin(), order.begin() + T);
    }
    return table;
}

ReferenceSet initial_reference_set(int objectives, int count, int T) {
    Matrix w = simplex_weights(objectives, count);
    ReferenceSet refs;
    refs.points = Matrix(count, objectives);
    for (int r = 0; r < count; ++r) refs.points.row(r) = shift_to_plane(w.row(r));
    refs.neighbours = build_neighbourhood(refs.points, T);
    return refs;
}

std::vector<int> zeta_scores(const ReferenceSet& refs, const Population& pop,
                             const IdealPoints& z) {
    const int n = refs.size();
    if (static_cast<int>(pop.size()) != n)
        throw std::logic_error("zeta_scores: population/reference size mismatch");
    // Solution associated with each reference.
    std::vector<int> assoc(n, -1);
    for (int i = 0; i < n; ++i) {
        const int t = pop[i].target;
        if (t < 0 || t >= n || assoc[t] != -1)
            throw std::logic_error("zeta_scores: targets are not a bijection");
        assoc[t] = i;
    }
    std::vector<int> zeta(n, 0);
    for (int j = 0; j < n; ++j) {
        const ObjectiveVector fx = normalize(pop[assoc[j]].f, z);
        const double own = (fx - refs.points.row(j).transpose()).cwiseAbs().maxCoeff();
        for (int k = 0; k < n; ++k) {
            if (k == j) continue;
            const double d = (fx - refs.points.row(k).transpose()).cwiseAbs().maxCoeff();
            if (d < own) ++zeta[j];
        }
    }
    return zeta;
}

ReferenceUpdate update_reference_set(const Population& pop, const Population& archive,
                                     const ReferenceSet& refs, int target_size, int T,
                                     int additions, const IdealPoints& z, Rng& rng) {
    if (static_cast<int>(pop.size()) != refs.size())
        throw std::logic_error("update_reference_set: population/reference mismatch");
    if (archive.empty()) return {refs, pop, true};

    const int K = std::min<int>(additions, static_cast<int>(archive.size()));
    Population work = pop;
    std::vector<Eigen::VectorXd> points;
    points.reserve(refs.size() + K);
    for (int r = 0; r < refs.size(); ++r) points.push_back(refs.points.row(r));

    // Addition: K archive members furthest from the population (max-min rule),
    // each entering the population with its plane projection as new target.
    Matrix norm_arch(archive.size(), z.objectives());
    for (std::size_t a = 0; a < archive.size(); ++a)
        norm_arch.row(a) = normalize(archive[a].f, z);
    Matrix norm_pop = normalized_population(work, z);
    for (int add = 0; add < K; ++add) {
        int best = 0;
        double best_min = -1.0;
        for (int a = 0; a < norm_arch.rows(); ++a) {
            double dmin = std::numeric_limits<double>::infinity();
            for (int p = 0; p < norm_pop.rows(); ++p)
                dmin = std::min(dmin, (norm_arch.row(a) - norm_pop.row(p)).norm());
            if (dmin > best_min) {
                best_min = dmin;
                best = a;
            }
        }
        Individual picked = archive[best];
        picked.target = static_cast<int>(points.size());
        points.push_back(project_to_plane(norm_arch.row(best)));
        work.push_back(std::move(picked));
        norm_pop.conservativeResize(norm_pop.rows() + 1, Eigen::NoChange);
        norm_pop.row(norm_pop.rows() - 1) = norm_arch.row(best);
    }

    // Removal by descending score.  The decrement mirrors the bookkeeping of
    // the update procedure rather than recomputing scores from scratch.
    ReferenceSet extended;
    extended.points = Matrix(points.size(), z.objectives());
    for (std::size_t r = 0; r < points.size(); ++r) extended.points.row(r) = points[r];
    for (std::size_t i = 0; i < work.size(); ++i) work[i].target = static_cast<int>(i);
    std::vector<int> zeta = zeta_scores(extended, work, z);

    std::vector<Eigen::VectorXd> live = points;
    Matrix norm_live = normalized_population(work, z);
    while (static_cast<int>(work.size()) > target_size) {
        const int max_score = *std::max_element(zeta.begin(), zeta.end());
        if (max_score <= 0) break;
        std::vector<int> tied;
        for (std::size_t j = 0; j < zeta.size(); ++j)
            if (zeta[j] == max_score) tied.push_back(static_cast<int>(j));
        const int victim = tied[rng.index(tied.size())];
        for (std::size_t j = 0; j < work.size(); ++j) {
            if (static_cast<int>(j) == victim) continue;
            const double own =
                (norm_live.row(j).transpose() - live[j]).cwiseAbs().maxCoeff();
            const double to_victim =
                (norm_live.row(j).transpose() - live[victim]).cwiseAbs().maxCoeff();
            if (to_victim < own) --zeta[j];
        }
        work.erase(work.begin() + victim);
        live.erase(live.begin() + victim);
        zeta.erase(zeta.begin() + victim);
        erase_row(norm_live, victim);
    }

    // All remaining references are best for their solutions: fall back to
    // nearest-neighbour truncation of the population.
    if (static_cast<int>(work.size()) > target_size) {
        std::vector<ObjectiveVector> objs;
        objs.reserve(work.size());
        for (std::size_t i = 0; i < work.size(); ++i) objs.push_back(norm_live.row(i));
        std::vector<int> keep = spea2_truncate(objs, target_size);
        Population kept_pop;
        std::vector<Eigen::VectorXd> kept_refs;
        for (int idx : keep) {
            kept_pop.push_back(work[idx]);
            kept_refs.push_back(live[idx]);
        }
        work = std::move(kept_pop);
        live = std::move(kept_refs);
    }

    ReferenceUpdate out;
    out.refs.points = Matrix(work.size(), z.objectives());
    for (std::size_t r = 0; r < work.size(); ++r) {
        out.refs.points.row(r) = live[r];
        work[r].target = static_cast<int>(r);
    }
    out.refs.neighbours = build_neighbourhood(out.refs.points, std::min<int>(T, work.size()));
    out.pop = std::move(work);
    return out;
}

Population match_population(const Population& pop, const Population& archive,
                            const ReferenceSet& base, int target_size,
                            const IdealPoints& z) {
    Population pool = pop;
    pool.insert(pool.end(), archive.begin(), archive.end());
    if (static_cast<int>(pool.size()) < target_size)
        throw std::logic_error("match_population: not enough candidates");
    if (base.size() != target_size)
        throw std::logic_error("match_population: reference set size mismatch");

    Matrix fx = normalized_population(pool, z);
    Matrix dist(target_size, pool.size());
    for (int r = 0; r < target_size; ++r)
        for (std::size_t s = 0; s < pool.size(); ++s)
            dist(r, s) = (fx.row(s) - base.points.row(r)).norm();

    const double inf = std::numeric_limits<double>::infinity();
    Population result(target_size);
    std::vector<char> ref_done(target_size, 0);
    int assigned = 0;
    while (assigned < target_size) {
        // References that are currently the nearest for some free candidate.
        std::vector<char> wanted(target_size, 0);
        for (std::size_t s = 0; s < pool.size(); ++s) {
            int best = -1;
            double best_d = inf;
            for (int r = 0; r < target_size; ++r) {
                if (!ref_done[r] && dist(r, s) < best_d) {
                    best_d = dist(r, s);
                    best = r;
                }
            }
            if (best >= 0 && best_d < inf) wanted[best] = 1;
        }
        for (int r = 0; r < target_size && assigned < target_size; ++r) {
            if (!wanted[r]) continue;
            int pick = -1;
            double best_d = inf;
            for (std::size_t s = 0; s < pool.size(); ++s) {
                if (dist(r, s) < best_d) {
                    best_d = dist(r, s);
                    pick = static_cast<int>(s);
                }
            }
            if (pick < 0) continue;
            result[r] = pool[pick];
            result[r].target = r;
            ref_done[r] = 1;
            ++assigned;
            dist.row(r).setConstant(inf);
            dist.col(pick).setConstant(inf);
        }
    }
    return result;
}

}  // namespace area

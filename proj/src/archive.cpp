#include "area/archive.hpp"

#include "area/core.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <tuple>
#include <vector>

namespace area {

namespace {

// Sorted distances from `i` to all other alive points.
std::vector<double> sorted_row(const Matrix& dist, const std::vector<char>& alive, int i) {
    std::vector<double> row;
    row.reserve(dist.rows());
    for (int j = 0; j < dist.rows(); ++j)
        if (alive[j] && j != i) row.push_back(dist(i, j));
    std::sort(row.begin(), row.end());
    return row;
}

bool lex_less(const std::vector<double>& a, const std::vector<double>& b) {
    for (std::size_t k = 0; k < a.size() && k < b.size(); ++k) {
        if (a[k] < b[k]) return true;
        if (a[k] > b[k]) return false;
    }
    return a.size() < b.size();
}

void insert_candidate(Archive& archive, const Individual& cand) {
    for (const auto& m : archive.members) {
        if (dominates(m.f, cand.f) || (m.f.array() == cand.f.array()).all()) return;
    }
    std::erase_if(archive.members,
                  [&](const Individual& m) { return dominates(cand.f, m.f); });
    archive.members.push_back(cand);
}

}  // namespace

std::vector<int> spea2_truncate(const std::vector<ObjectiveVector>& points, int target) {
    const int n = static_cast<int>(points.size());
    if (target > n) throw std::invalid_argument("spea2_truncate: target exceeds input");
    std::vector<int> all(n);
    std::iota(all.begin(), all.end(), 0);
    if (target == n || n <= 1) {
        all.resize(target);
        return all;
    }

    Matrix dist(n, n);
    for (int i = 0; i < n; ++i) {
        dist(i, i) = 0.0;
        for (int j = i + 1; j < n; ++j) {
            const double d = (points[i] - points[j]).norm();
            dist(i, j) = d;
            dist(j, i) = d;
        }
    }

    // Min-heap over all pairs; dead entries are skipped lazily.  The point to
    // delete is always an endpoint of a currently-minimal pair, so only those
    // endpoints need the full lexicographic comparison.
    using Entry = std::tuple<double, int, int>;
    std::vector<Entry> heap;
    heap.reserve(static_cast<std::size_t>(n) * (n - 1) / 2);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) heap.emplace_back(dist(i, j), i, j);
    auto cmp = [](const Entry& a, const Entry& b) {
        return std::get<0>(a) > std::get<0>(b);
    };
    std::make_heap(heap.begin(), heap.end(), cmp);

    std::vector<char> alive(n, 1);
    int alive_count = n;
    while (alive_count > target) {
        std::vector<Entry> tied;
        double min_d = -1.0;
        while (!heap.empty()) {
            const Entry top = heap.front();
            const auto [d, i, j] = top;
            if (!alive[i] || !alive[j]) {
                std::pop_heap(heap.begin(), heap.end(), cmp);
                heap.pop_back();
                continue;
            }
            if (tied.empty()) {
                min_d = d;
            } else if (d > min_d) {
                break;
            }
            tied.push_back(top);
            std::pop_heap(heap.begin(), heap.end(), cmp);
            heap.pop_back();
        }
        if (tied.empty()) break;  // cannot happen while alive_count > 1

        std::vector<int> candidates;
        for (const auto& [d, i, j] : tied) {
            if (std::find(candidates.begin(), candidates.end(), i) == candidates.end())
                candidates.push_back(i);
            if (std::find(candidates.begin(), candidates.end(), j) == candidates.end())
                candidates.push_back(j);
        }
        std::sort(candidates.begin(), candidates.end());
        int victim = candidates.front();
        std::vector<double> victim_row = sorted_row(dist, alive, victim);
        for (std::size_t c = 1; c < candidates.size(); ++c) {
            std::vector<double> row = sorted_row(dist, alive, candidates[c]);
            if (lex_less(row, victim_row)) {
                victim = candidates[c];
                victim_row = std::move(row);
            }
        }
        alive[victim] = 0;
        --alive_count;
        for (const auto& entry : tied) {
            if (alive[std::get<1>(entry)] && alive[std::get<2>(entry)]) {
                heap.push_back(entry);
                std::push_heap(heap.begin(), heap.end(), cmp);
            }
        }
    }

    std::vector<int> keep;
    keep.reserve(target);
    for (int i = 0; i < n; ++i)
        if (alive[i]) keep.push_back(i);
    return keep;
}

void update_archive(Archive& archive, const Population& pop, const Population& offspring) {
    for (const auto& ind : pop) insert_candidate(archive, ind);
    for (const auto& ind : offspring) insert_candidate(archive, ind);
    if (archive.capacity > 0 && static_cast<int>(archive.members.size()) > archive.capacity) {
        std::vector<ObjectiveVector> objs;
        objs.reserve(archive.members.size());
        for (const auto& m : archive.members) objs.push_back(m.f);
        std::vector<int> keep = spea2_truncate(objs, archive.capacity);
        Population kept;
        kept.reserve(keep.size());
        for (int idx : keep) kept.push_back(archive.members[idx]);
        archive.members = std::move(kept);
    }
}

std::vector<ObjectiveVector> assess(const Archive& archive, int count) {
    std::vector<ObjectiveVector> objs;
    objs.reserve(archive.members.size());
    for (const auto& m : archive.members) objs.push_back(m.f);
    if (static_cast<int>(objs.size()) <= count) return objs;
    std::vector<int> keep = spea2_truncate(objs, count);
    std::vector<ObjectiveVector> out;
    out.reserve(keep.size());
    for (int idx : keep) out.push_back(objs[idx]);
    return out;
}

}  // namespace area

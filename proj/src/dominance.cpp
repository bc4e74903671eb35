#include "moplex/dominance.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "moplex/errors.hpp"

namespace moplex {

bool dominates(const std::vector<double>& a, const std::vector<double>& b) {
    if (a.size() != b.size()) {
        throw DimensionMismatch("dominates: vectors of length " + std::to_string(a.size()) +
                                " and " + std::to_string(b.size()));
    }
    bool strict = false;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] > b[i]) return false;
        if (a[i] < b[i]) strict = true;
    }
    return strict;
}

bool lex_less(const std::vector<double>& a, const std::vector<double>& b) {
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

bool same_y(const std::vector<double>& a, const std::vector<double>& b, double tol) {
    if (a.size() != b.size()) return false;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (std::abs(a[i] - b[i]) > tol) return false;
    }
    return true;
}

bool Frontier::merge(const SolutionPoint& p) {
    for (const auto& q : points_) {
        if (q.y.size() != p.y.size()) {
            throw DimensionMismatch("merge: objective dimension mismatch");
        }
        if (same_y(q.y, p.y) || dominates(q.y, p.y)) return false;
    }
    points_.erase(std::remove_if(points_.begin(), points_.end(),
                                 [&](const SolutionPoint& q) { return dominates(p.y, q.y); }),
                  points_.end());
    auto pos = std::lower_bound(points_.begin(), points_.end(), p,
                                [](const SolutionPoint& a, const SolutionPoint& b) {
                                    return lex_less(a.y, b.y);
                                });
    points_.insert(pos, p);
    return true;
}

Frontier filter_nondominated(const std::vector<SolutionPoint>& points) {
    if (points.empty()) return Frontier{};
    for (const auto& p : points) {
        if (p.y.size() != points.front().y.size()) {
            throw DimensionMismatch("filter_nondominated: mixed objective dimensions");
        }
    }
    Frontier out;
    for (std::size_t i = 0; i < points.size(); ++i) {
        bool keep = true;
        for (std::size_t j = 0; j < points.size() && keep; ++j) {
            if (j == i) continue;
            if (dominates(points[j].y, points[i].y)) keep = false;
            if (j < i && same_y(points[j].y, points[i].y)) keep = false;
        }
        if (keep) out.points_.push_back(points[i]);
    }
    std::sort(out.points_.begin(), out.points_.end(),
              [](const SolutionPoint& a, const SolutionPoint& b) { return lex_less(a.y, b.y); });
    return out;
}

std::pair<Frontier, bool> merge_into(Frontier f, const SolutionPoint& p) {
    bool changed = f.merge(p);
    return {std::move(f), changed};
}

} // namespace moplex

#include "buzz/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>
#include <unordered_set>

namespace buzz {

double euclidean(const Point& a, const Point& b) {
    if (a.x.size() != b.x.size())
        throw std::invalid_argument("euclidean: dimension mismatch");
    double s = 0.0;
    for (std::size_t k = 0; k < a.x.size(); ++k) {
        const double diff = a.x[k] - b.x[k];
        s += diff * diff;
    }
    return std::sqrt(s);
}

PointCloud delay_embed(const std::vector<double>& series, int dim, int tau) {
    if (dim < 1) throw std::invalid_argument("delay_embed: dim must be >= 1");
    if (tau < 1) throw std::invalid_argument("delay_embed: tau must be >= 1");
    const long n = static_cast<long>(series.size());
    const long min_len = static_cast<long>(dim - 1) * tau + 1;
    if (n < min_len)
        throw std::invalid_argument(
            "delay_embed: series of length " + std::to_string(n) +
            " is too short for dim=" + std::to_string(dim) + ", tau=" + std::to_string(tau) +
            " (minimum length " + std::to_string(min_len) + ")");

    const long count = n - static_cast<long>(dim - 1) * tau;
    PointCloud cloud;
    cloud.ambient_dim = dim;
    cloud.points.resize(static_cast<std::size_t>(count));
    for (long i = 0; i < count; ++i) {
        Point& p = cloud.points[static_cast<std::size_t>(i)];
        p.x.resize(static_cast<std::size_t>(dim));
        for (int j = 0; j < dim; ++j)
            p.x[static_cast<std::size_t>(j)] = series[static_cast<std::size_t>(i + static_cast<long>(j) * tau)];
        p.id = static_cast<int>(i);
        p.snapshot = -1;
    }
    return cloud;
}

DistanceMatrix pairwise_distances(const PointCloud& cloud) {
    if (cloud.empty()) throw std::invalid_argument("pairwise_distances: empty cloud");
    const int n = static_cast<int>(cloud.size());
    DistanceMatrix m;
    m.n = n;
    m.d.assign(static_cast<std::size_t>(n) * n, 0.0);
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            const double dij = euclidean(cloud.points[i], cloud.points[j]);
            m.d[static_cast<std::size_t>(i) * n + j] = dij;
            m.d[static_cast<std::size_t>(j) * n + i] = dij;
        }
    }
    return m;
}

PointCloud greedy_permutation(const PointCloud& cloud, int k, int seed_index) {
    const int n = static_cast<int>(cloud.size());
    if (n == 0) throw std::invalid_argument("greedy_permutation: empty cloud");
    if (k < 1 || k > n)
        throw std::invalid_argument("greedy_permutation: k=" + std::to_string(k) +
                                    " out of range [1, " + std::to_string(n) + "]");
    if (seed_index < 0 || seed_index >= n)
        throw std::invalid_argument("greedy_permutation: seed_index out of range");

    PointCloud out;
    out.ambient_dim = cloud.ambient_dim;
    out.points.reserve(static_cast<std::size_t>(k));

    // min_dist[i] = distance from point i to the selected set so far
    std::vector<double> min_dist(static_cast<std::size_t>(n));
    int current = seed_index;
    out.points.push_back(cloud.points[current]);
    for (int i = 0; i < n; ++i)
        min_dist[static_cast<std::size_t>(i)] = euclidean(cloud.points[i], cloud.points[current]);

    while (static_cast<int>(out.points.size()) < k) {
        int best = -1;
        double best_d = -1.0;
        for (int i = 0; i < n; ++i) {
            // strict > keeps the lowest index on ties
            if (min_dist[static_cast<std::size_t>(i)] > best_d) {
                best_d = min_dist[static_cast<std::size_t>(i)];
                best = i;
            }
        }
        current = best;
        out.points.push_back(cloud.points[current]);
        min_dist[static_cast<std::size_t>(current)] = 0.0;
        for (int i = 0; i < n; ++i) {
            const double di = euclidean(cloud.points[i], cloud.points[current]);
            if (di < min_dist[static_cast<std::size_t>(i)]) min_dist[static_cast<std::size_t>(i)] = di;
        }
    }
    return out;
}

PointCloud disjoint_union(const PointCloud& a, const PointCloud& b) {
    if (!a.empty() && !b.empty() && a.ambient_dim != b.ambient_dim)
        throw std::invalid_argument("disjoint_union: ambient dimensions differ (" +
                                    std::to_string(a.ambient_dim) + " vs " +
                                    std::to_string(b.ambient_dim) + ")");
    std::unordered_set<int> seen;
    seen.reserve(a.size());
    for (const Point& p : a.points) seen.insert(p.id);
    for (const Point& p : b.points)
        if (seen.count(p.id))
            throw std::invalid_argument("disjoint_union: duplicate vertex id " + std::to_string(p.id));

    PointCloud out;
    out.ambient_dim = a.empty() ? b.ambient_dim : a.ambient_dim;
    out.points = a.points;
    out.points.insert(out.points.end(), b.points.begin(), b.points.end());
    return out;
}

PointCloud relabel(const PointCloud& cloud, int id_offset, int snapshot) {
    PointCloud out = cloud;
    for (std::size_t i = 0; i < out.points.size(); ++i) {
        out.points[i].id = id_offset + static_cast<int>(i);
        out.points[i].snapshot = snapshot;
    }
    return out;
}

PointCloud sample_circle(double radius, int n, double phase, double cx, double cy) {
    if (n < 1) throw std::invalid_argument("sample_circle: n must be at least 1");
    if (radius < 0.0) throw std::invalid_argument("sample_circle: radius must be non-negative");
    PointCloud cloud;
    cloud.ambient_dim = 2;
    cloud.points.resize(static_cast<std::size_t>(n));
    const double step = 2.0 * 3.14159265358979323846 / n;
    for (int i = 0; i < n; ++i) {
        Point& p = cloud.points[static_cast<std::size_t>(i)];
        const double theta = phase + step * i;
        p.x = {cx + radius * std::cos(theta), cy + radius * std::sin(theta)};
        p.id = i;
        p.snapshot = -1;
    }
    return cloud;
}

}  // namespace buzz

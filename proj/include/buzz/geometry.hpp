#pragma once

#include <vector>

namespace buzz {

/// A single point of a point cloud. `id` is a globally unique vertex id used
/// by simplicial complexes built on top of the cloud; `snapshot` records which
/// snapshot X_i of a zigzag family the point came from (-1 when unassigned).
struct Point {
    std::vector<double> x;
    int id = 0;
    int snapshot = -1;
};

/// Finite point cloud in R^d. All points share the same ambient dimension.
struct PointCloud {
    int ambient_dim = 0;
    std::vector<Point> points;

    std::size_t size() const { return points.size(); }
    bool empty() const { return points.empty(); }
};

/// Dense symmetric matrix of Euclidean distances with zero diagonal.
struct DistanceMatrix {
    int n = 0;
    std::vector<double> d;  // row-major n*n

    double at(int i, int j) const { return d[static_cast<std::size_t>(i) * n + j]; }
};

/// Euclidean distance between two points (dimensions must match).
double euclidean(const Point& a, const Point& b);

/// Sliding-window (time-delay) embedding of a scalar series: point i is
/// (series[i], series[i+tau], ..., series[i+(dim-1)*tau]), producing
/// n - (dim-1)*tau points. Vertex ids are assigned 0..count-1; snapshots are
/// left unassigned. Throws std::invalid_argument when the series is shorter
/// than the minimum length (dim-1)*tau + 1 or when dim/tau are not positive.
PointCloud delay_embed(const std::vector<double>& series, int dim, int tau);

/// All pairwise Euclidean distances. Each unordered pair is computed once and
/// mirrored, so the result is exactly symmetric. Throws on an empty cloud.
DistanceMatrix pairwise_distances(const PointCloud& cloud);

/// Greedy permutation (furthest-point) subsample of k points, starting from
/// seed_index. Each step selects the point maximizing the distance to the
/// already-selected set; ties select the lowest original index. Returns points
/// in selection order with their original ids and snapshots. Prefix property:
/// the first j points of a k-point result equal the j-point result.
PointCloud greedy_permutation(const PointCloud& cloud, int k, int seed_index = 0);

/// Concatenation of two clouds with distinct ids. Throws when ambient
/// dimensions differ or when any id occurs in both clouds. Coincident
/// coordinates are allowed; points stay distinct.
PointCloud disjoint_union(const PointCloud& a, const PointCloud& b);

/// Copy of `cloud` with ids rebased to id_offset..id_offset+size-1 (in point
/// order) and every snapshot label set to `snapshot`. Used by the pipeline to
/// globalize the locally-numbered output of delay_embed.
PointCloud relabel(const PointCloud& cloud, int id_offset, int snapshot);

/// n points evenly spaced on the circle of the given radius and center,
/// point i at angle phase + 2*pi*i/n. Ids 0..n-1, snapshots unassigned.
/// Throws std::invalid_argument when n < 1 or radius < 0.
PointCloud sample_circle(double radius, int n, double phase = 0.0, double cx = 0.0,
                         double cy = 0.0);

}  // namespace buzz

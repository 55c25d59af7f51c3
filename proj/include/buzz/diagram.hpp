#pragma once

#include <string>
#include <vector>

namespace buzz {

/// One interval of a zigzag persistence diagram. Birth and death live on the
/// half-integer grid {0, 0.5, ..., n} with the additional death value n+1 for
/// features that survive through the final position; birth < death always
/// (zero-length intervals are dropped).
struct PersistencePoint {
    int dim = 0;
    double birth = 0.0;
    double death = 0.0;

    double lifetime() const { return death - birth; }
    bool operator==(const PersistencePoint& o) const {
        return dim == o.dim && birth == o.birth && death == o.death;
    }
};

/// Persistence diagram of a union zigzag over n_snapshots point clouds,
/// stored as a multiset of points sorted by (dim, birth, death).
struct ZigzagDiagram {
    int n_snapshots = 0;
    std::vector<PersistencePoint> points;

    // metadata (not part of the serialized diagram)
    std::vector<double> radii;
    int max_dim = 0;
    std::string provenance;

    std::vector<PersistencePoint> points_of_dim(int p) const;
};

void sort_points(std::vector<PersistencePoint>& pts);

/// Serialization. JSON schema:
///   {"n_snapshots": int, "points": [{"dim": p, "birth": t, "death": t}, ...]}
/// CSV: header "dim,birth,death" then one row per point. Numeric formatting is
/// shortest-round-trip, so equal diagrams serialize to identical bytes.
std::string diagram_to_json(const ZigzagDiagram& d);
ZigzagDiagram diagram_from_json(const std::string& text);
std::string diagram_to_csv(const ZigzagDiagram& d);

}  // namespace buzz

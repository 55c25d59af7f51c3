#pragma once

#include <string>
#include <vector>

#include "buzz/complex.hpp"
#include "buzz/geometry.hpp"

namespace buzz {

/// Per-simplex appearance timetable for a union zigzag over n_snapshots point
/// clouds X_0..X_n (n = n_snapshots-1). Grid positions are the half-integers
///
///   0    0.5      1    1.5      ...    n
///  X_0  X_0uX_1  X_1  X_1uX_2        X_n
///
/// where position i carries R(X_i, r_i) and position i+0.5 carries
/// R(X_i u X_{i+1}, max(r_i, r_{i+1})). Each simplex's times list alternates
/// appearance/disappearance values: the simplex is live at position t iff
/// times[2k] <= t < times[2k+1] for some k. Lists are strictly increasing and
/// of even length; a re-entering simplex (possible with per-snapshot radii)
/// has more than one appearance. Disappearance value n+1 means the simplex
/// survives through the final position.
struct ZigzagSchedule {
    int n_snapshots = 0;
    std::vector<double> radii;                     // per snapshot
    int max_dim = 0;                               // simplex dimension cap
    std::vector<Simplex> simplex_list;             // canonical (dim, lex) order
    std::vector<std::vector<double>> times_list;   // parallel to simplex_list
};

/// Half-integer grid helpers. Grid index g = 2t, so positions 0..2n map to
/// times 0..n and the end-of-zigzag death n+1 maps to 2n+2.
int grid_index(double t);       // throws std::invalid_argument when t is off-grid
double grid_time(int g);

/// Live simplex indices (into simplex_list, ascending) at every grid position
/// 0..2n, derived from the times lists.
std::vector<std::vector<int>> live_sets(const ZigzagSchedule& s);

/// Fixed-radius schedule. Every union complex R(X_i u X_{i+1}, r) is computed
/// once and each simplex classified by vertex provenance:
///   all vertices in X_i     -> appears i-0.5 (0 when i = 0), disappears i+1
///   all vertices in X_{i+1} -> appears i+0.5, disappears i+2
///   mixed                   -> appears i+0.5, disappears i+1
/// Duplicate appearances across consecutive unions coincide and are merged.
/// Integer-position complexes never need computing because at a fixed radius
/// a simplex with all vertices in X_i lies in R(X_i, r) exactly when it lies
/// in the union. Single-snapshot input yields times [0, 1] for everything.
ZigzagSchedule build_schedule_fixed(const std::vector<PointCloud>& clouds, double r, int max_dim);

/// Per-snapshot-radius schedule. This is the normative semantics: the complex
/// at every grid position (both R(X_i, r_i) and the unions at
/// max(r_i, r_{i+1})) is computed and each simplex's presence runs are turned
/// into times directly. A simplex can leave and re-enter when a union radius
/// exceeds a snapshot radius. build_schedule_fixed agrees with this path
/// whenever all radii are equal.
ZigzagSchedule build_schedule_variable(const std::vector<PointCloud>& clouds,
                                       const std::vector<double>& radii, int max_dim);

/// Structural check of a schedule. Never throws; reports the first violation
/// found (grid membership, monotone times, even lengths, duplicate simplices,
/// face closure at every position) plus per-position live counts.
struct ScheduleDiagnostics {
    bool pass = false;
    std::string first_violation;
    std::vector<std::size_t> live_counts;  // per grid position 0..2n
    std::size_t total_simplices = 0;
    std::size_t max_live = 0;
};

ScheduleDiagnostics validate_schedule(const ZigzagSchedule& s);

/// JSON round-trip. Schema:
///   {"n_snapshots": int, "radii": [...], "max_dim": int,
///    "simplices": [[ids]...], "times": [[t...]...]}
/// When max_dim is absent it is inferred from the largest simplex present.
std::string schedule_to_json(const ZigzagSchedule& s);
ZigzagSchedule schedule_from_json(const std::string& text);

}  // namespace buzz

#pragma once

#include <string>
#include <vector>

#include "buzz/complex.hpp"
#include "buzz/diagram.hpp"
#include "buzz/schedule.hpp"

namespace buzz {

/// Zigzag persistence of a union-zigzag schedule over Z/2, in homology
/// dimensions 0..max_hom_dim.
///
/// The sequence of complexes at grid positions 0, 0.5, ..., n is turned into
/// a zigzag of inclusions. A step that both removes and adds simplices (which
/// cannot happen for schedules produced by the builders, but is legal in a
/// hand-written schedule) is refined through the intersection complex, i.e.
/// removals are applied before additions. Homology is computed per position
/// by sparse Z/2 reduction, inclusion-induced maps are expressed in the
/// chosen bases, and the resulting quiver representation is decomposed into
/// interval summands dimension by dimension.
///
/// Interval endpoints follow the grid convention: a class alive on positions
/// t_a..t_b yields the point (t_a, t_b + 0.5), except that classes alive
/// through the final position n die at the sentinel n + 1.
///
/// Throws std::invalid_argument when the schedule fails validation or when
/// schedule.max_dim < max_hom_dim + 1 (one dimension of coface is needed
/// above the top homology dimension).
ZigzagDiagram compute_zigzag(const ZigzagSchedule& schedule, int max_hom_dim);

/// One step of an ordinary (monotone) filtration: the simplex and the grid
/// time at which it enters, never to leave.
struct FiltrationStep {
    Simplex simplex;
    double time = 0.0;
};

/// Standard persistent homology of a monotone filtration, for cross-checking
/// the zigzag engine on inputs where both apply. Steps must be listed in
/// insertion order: times non-decreasing and on the grid, every facet before
/// its cofaces. A class created at time b and destroyed at time d yields
/// (b, d), dropped when b == d; classes that survive die at the sentinel
/// n_snapshots (= n + 1 in grid terms). Throws std::invalid_argument on a
/// malformed filtration.
ZigzagDiagram standard_persistence(const std::vector<FiltrationStep>& filtration, int n_snapshots,
                                   int max_hom_dim);

/// Per-position comparison of a diagram against directly computed Betti
/// numbers of the live complex. An interval (b, d) is counted at position t
/// iff b <= t < d. Direct Betti numbers come from independent machinery:
/// union-find for dimension 0, cycle count minus sparse boundary rank for
/// dimension 1, and the dense kernel/image oracle for higher dimensions
/// (only usable on small complexes).
struct BettiMismatch {
    int position = 0;  // grid index 0..2n
    int dim = 0;
    std::size_t from_diagram = 0;
    std::size_t direct = 0;
};

struct BettiReport {
    bool pass = false;
    std::vector<BettiMismatch> mismatches;
    std::vector<std::vector<std::size_t>> betti;  // [position][dim], direct values
};

BettiReport betti_consistency(const ZigzagSchedule& schedule, const ZigzagDiagram& diagram,
                              int max_hom_dim);

}  // namespace buzz

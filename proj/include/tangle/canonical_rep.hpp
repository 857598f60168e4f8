#pragma once

#include "tangle/coordinate.hpp"
#include "tangle/surface_model.hpp"

namespace tangle {

// Which selection rule produced the representative.  The branches are
// mutually exclusive and tested in declaration order.
enum class SelectionBranch {
    Infinity,            // no arc crosses any window circle
    EmptyWindow,         // exactly one window circle is uncrossed
    StrictAll,           // every replacement strictly increases the weight
    OneEquality,         // exactly one arc admits a weight-preserving move
    TwoEqualityDisjoint, // two arcs preserve the weight, the strict arc
                         // avoids the first window
    TwoEqualityMeeting,  // two arcs preserve the weight, the strict arc
                         // crosses the first window
};

// Stable name used in JSON output and reports.
const char* branch_name(SelectionBranch b);

struct RepresentativeReport {
    DehnCoordinate representative;
    SelectionBranch branch = SelectionBranch::Infinity;
    int empty_window = 0; // 1..3 when branch == EmptyWindow, else 0
    // Invariant sum of the two live twist parameters on the empty-window
    // twist line (only meaningful when branch == EmptyWindow).
    int empty_q_sum = 0;
    // Number of minimal coordinates of the tangle; 0 reports an infinite
    // family (the empty-window and disjoint-strict-arc regimes carry twist
    // lines, so a positive count cannot be stated there).
    int plateau_size = 0;
    // False iff the final lexicographic tie-break chose among several
    // members that the selection rules could not separate.
    bool unique_by_rule = true;
};

// Normalizes, descends to a minimal system, and selects the canonical
// minimal coordinate of the tangle.  Deterministic; its output is the
// complete isotopy invariant.
RepresentativeReport representative(const ArcSystem& s);

// True iff both coordinates describe isotopic tangles, decided by comparing
// canonical representatives.
bool equivalent(const DehnCoordinate& a, const DehnCoordinate& b);

// Drops the internal memo table (results are cached per minimal system).
void clear_representative_cache();

} // namespace tangle

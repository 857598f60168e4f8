#pragma once

#include "tangle/surface_model.hpp"

#include <array>
#include <vector>

namespace tangle {

// A replacement of one arc keeps the other two fixed.  The standard variant
// is the replacement whose window pattern (the cyclic crossing word of every
// window circle) equals the source's; the second variant changes the
// pattern.  When only one replacement exists it is standard.  When two
// exist and neither shares the source's pattern, both are second variants:
// the pattern relation pairs systems symmetrically, and a system whose
// pattern no completion shares has no standard replacement at that arc.
enum class MoveVariant { Standard, Second };

struct JumpNeighbor {
    int arc = 0;
    MoveVariant variant = MoveVariant::Standard;
    DehnCoordinate result;

    bool operator==(const JumpNeighbor&) const = default;
};

// Every normal system that shares the two arcs other than `arc` with `s`,
// including `s` itself, sorted by coordinate.  The search is complete: a
// window with k surviving crossings admits at most one replacement crossing
// per gap (two in one gap would be adjacent equal labels), so candidate
// window words are finite and every compatible twist is solved for exactly.
// Throws NotNormal when `s` is not normal, and TripwireError if `s` is
// missing from its own answer or the answer exceeds three entries — more
// than two genuine replacements of one arc cannot exist.  Results are
// memoized per (coordinate, arc).
std::vector<DehnCoordinate> completions(const ArcSystem& s, int arc);

// completions minus the identity, tagged with arc and variant, ordered by
// arc then result coordinate.
std::vector<JumpNeighbor> neighbors(const ArcSystem& s);

// True when every window word of `a` equals the corresponding word of `b`
// up to cyclic rotation — the two systems cross the window circles in the
// same pattern.
bool same_window_pattern(const ArcSystem& a, const ArcSystem& b);

// Window words of the pattern-changing replacement of `arc`, by the local
// rewriting rules: an `arc` crossing whose cyclic neighbors carry equal
// labels survives, one whose neighbors differ is erased, and a new `arc`
// crossing appears inside every cyclically adjacent pair of non-`arc`
// crossings of the source word.  A crossing inserted in the pair that closes
// around the window end is reported at the right end; compare against
// realized words up to cyclic rotation.  Throws NotNormal when `s` is not
// normal and NoWindowIntersection when `arc` crosses no window at all.
std::array<std::vector<int>, 3> predict_window_words(const ArcSystem& s, int arc);

// True iff two distinct replacements of `arc` exist, i.e. |completions| == 3.
bool has_second_move(const ArcSystem& s, int arc);

// Drops the memoized completion answers (used by long-running scans to bound
// memory).
void clear_completion_cache();

} // namespace tangle

#pragma once

#include "tangle/surface_model.hpp"

#include <array>
#include <vector>

namespace tangle {

// Census of the first window's color pattern relative to one frame arc.
// Reading the window word left to right, every maximal run strictly between
// two consecutive frame crossings alternates between the other two labels
// (normal words have no equal adjacent labels), so an odd run has equal end
// colors and an even run has distinct ones.  The counted shapes:
//   * short type: exactly one crossing, of label Y, between two frame dots;
//   * long type: an odd run of >= 3 crossings whose ends are both Y.
// Runs before the first frame dot or after the last are not between a
// consecutive pair and count for nothing.
struct PatternCensus {
    struct PerLabel {
        int label = 0;        // the inner label Y
        int n_short = 0;      // frame,Y,frame triples
        int n_long = 0;       // odd runs >= 3 ending in Y on both sides
        int min_long_gap = 0; // least such run length; 0 when n_long == 0
    };

    int frame = 0;
    std::array<PerLabel, 2> inner{}; // the two non-frame labels, increasing
};

PatternCensus census(const std::vector<int>& window1_word, int frame);

// True when no replacement of one arc crosses the first window circle
// strictly fewer times than s does.
bool is_minimal_E1(const ArcSystem& s);

// Follows the strictly window-1-decreasing replacement while one exists and
// returns the terminal system.  At most one decreasing replacement can exist
// at any normal system; finding two raises TripwireError.
ArcSystem descend_E1(const ArcSystem& s);

// Minimal systems of equal window-1 weight connected to s through minimal
// systems, one replacement per step.  Some families of coordinates carry an
// infinite set of minimal systems (an empty window circle, or an arc
// avoiding the first window while the others cross it); a search cut short
// by either cap — `line_cap` steps from the seed, or `member_cap` collected
// systems — reports unbounded = true with the members found up to there.
// The caps never fire on the finite plateaus of the strict regimes.
struct Plateau {
    std::vector<DehnCoordinate> members; // sorted by coordinate
    int weight1 = 0;                     // common window-1 weight
    bool unbounded = false;
};

// Throws NotMinimal when s is not minimal.
Plateau plateau(const ArcSystem& s, int line_cap = 16, int member_cap = 256);

// Per-arc replacement summary at a minimal system: whether any replacement
// of arc i exists at all, and whether one of them keeps the window-1 weight.
// Throws NotMinimal when s is not minimal.
struct EqualityProfile {
    std::array<bool, 3> exists{false, false, false};
    std::array<bool, 3> equal{false, false, false};
};

EqualityProfile equality_profile(const ArcSystem& s);

} // namespace tangle

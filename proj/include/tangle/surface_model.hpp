#pragma once

#include "tangle/coordinate.hpp"

#include <array>
#include <string>
#include <utility>
#include <vector>

namespace tangle {

// The surface is the six-punctured sphere drawn as three twice-punctured
// disks in a row.  Disks are indexed 0..2 left to right; disk b carries
// punctures 2b+1 (left) and 2b+2 (right), numbered 1..6.  The "window" of a
// disk is the bottom arc of its boundary circle; every crossing between the
// arc system and that circle is pushed into the window and indexed 0..k-1
// left to right.

// Counts of the taut arc families in the outer region (the sphere minus the
// three disks): m_xy arcs run between windows x and y, s_b arcs leave and
// re-enter window b.
struct PantsRouting {
    int m12 = 0, m13 = 0, m23 = 0;
    int s1 = 0, s2 = 0, s3 = 0;

    bool operator==(const PantsRouting&) const = default;
};

// Unique non-negative solution of
//   p1 = m12 + m13 + 2 s1,  p2 = m12 + m23 + 2 s2,  p3 = m13 + m23 + 2 s3
// with at most one s_b nonzero.  Throws ParityError when p1+p2+p3 is odd and
// InvariantError on negative input.
PantsRouting route_pants(const std::array<int, 3>& p);

// Endpoint encoding inside one disk: window positions are 0..k-1, the left
// puncture is LEFT_END, the right one RIGHT_END.
inline constexpr int LEFT_END = -1;
inline constexpr int RIGHT_END = -2;

// Taut pattern inside one disk.  For k >= 2 it consists of n = (k-2)/2
// parallel chords separating the two punctures, a stem hanging below the
// left puncture, a stem above the right one, and a parallel cable of k
// strands joining the window to those inner ends.  Inner ends ("slots") are
// numbered counter-clockwise from the west: 0 = left stem, 1..n = chord
// bottoms left to right, n+1 = right stem, n+2..k-1 = chord tops right to
// left (chord j's top is slot k-j).  Window position x lands on slot
// (x+q) mod k after floor((x+q)/k) full turns of the cable.
struct DiskPattern {
    int disk = 0; // 0..2
    int k = 0;    // window size
    int q = 0;    // raw twist coordinate

    // q = k*twist + offset with offset in [0,k); both 0 when k == 0.
    int twist() const;
    int offset() const;

    // Sorted pair list over {0..k-1, LEFT_END, RIGHT_END}.
    std::vector<std::pair<int, int>> matching;

    bool operator==(const DiskPattern&) const = default;
};

// Slot and wrap arithmetic shared by the restriction machinery.
int slot_of(int k, int q, int x);
int wrap_of(int k, int q, int x);

// Other end of the outer-region arc leaving window `window` at `pos`.
// Returns {window', pos'}.
std::pair<int, int> pants_partner(const PantsRouting& r, const std::array<int, 3>& p,
                                  int window, int pos);

// A fully traced arc system: the realized diagram of one shape-valid Dehn
// coordinate, together with its component structure.
struct ArcSystem {
    DehnCoordinate dehn;
    PantsRouting routing;
    std::array<DiskPattern, 3> disks;

    // endpoints[l-1] = the two punctures (1..6, sorted) joined by arc l.
    // Labels follow the fixed rule: the arc through puncture 1 is arc 1; if
    // its far end is puncture 2 the arc through puncture 3 is arc 2,
    // otherwise the arc through puncture 2 is; the leftover arc is arc 3.
    std::array<std::pair<int, int>, 3> endpoints{};

    // words[b][x] = label (1..3) of the arc crossing window b at position x.
    std::array<std::vector<int>, 3> words{};

    bool operator==(const ArcSystem& o) const { return dehn == o.dehn; }
};

// Builds the taut diagram for c and traces it.  Throws InvariantError /
// ParityError for shape violations, ComponentCountError when some window
// count is odd (no three-arc matching exists), and ClosedComponentError when
// tracing leaves a loop that never reaches a puncture.
ArcSystem realize(const DehnCoordinate& c);

// Coordinate of a realized system (inverse of realize by construction).
DehnCoordinate dehn_of(const ArcSystem& s);

// Total crossing weight (window == 0) or the weight of one window (1..3).
int weight(const ArcSystem& s, int window = 0);

// Debug/CLI dump: routing, disk patterns, endpoints and words as JSON.
std::string arc_system_json(const ArcSystem& s);

} // namespace tangle

#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <string>

namespace tangle {

// Dehn coordinate of a three-arc system on the six-punctured sphere:
// (p1,q1,p2,q2,p3,q3), with p[i] the geometric intersection count with the
// i-th window circle and q[i] the twist/offset parameter of the i-th disk.
//
// Shape invariants (checked by validate / require_valid):
//   * p[i] >= 0
//   * p1 + p2 + p3 even
//   * p[i] == 0 implies q[i] == 0
// Shape-valid coordinates may still fail to describe a three-arc system;
// that is decided by realize() in surface_model.
struct DehnCoordinate {
    std::array<int, 3> p{0, 0, 0};
    std::array<int, 3> q{0, 0, 0};

    DehnCoordinate() = default;
    DehnCoordinate(int p1, int q1, int p2, int q2, int p3, int q3)
        : p{p1, p2, p3}, q{q1, q2, q3} {}

    bool operator==(const DehnCoordinate&) const = default;

    // Lexicographic on the interleaved tuple (p1,q1,p2,q2,p3,q3); this is the
    // tie-break order used everywhere a deterministic choice is needed.
    std::strong_ordering operator<=>(const DehnCoordinate& o) const;

    int weight() const { return p[0] + p[1] + p[2]; }

    // Throws InvariantError / ParityError when the shape invariants fail.
    void require_valid() const;
    bool shape_ok() const;

    // "p1,q1,p2,q2,p3,q3"
    std::string compact() const;
    // {"p":[p1,p2,p3],"q":[q1,q2,q3]}
    std::string json() const;
};

// Accepts either the compact or the JSON form.  Throws ParseError.
DehnCoordinate parse_coordinate(const std::string& text);

struct CoordinateHash {
    std::size_t operator()(const DehnCoordinate& c) const;
};

} // namespace tangle

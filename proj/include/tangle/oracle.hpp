#pragma once

#include "tangle/surface_model.hpp"

#include <array>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

namespace tangle {

// Slow, enumeration-based reference implementations.  These deliberately
// avoid the candidate generation and twist solving used by the fast paths:
// answers come from scanning coordinate boxes and comparing realized
// geometry directly, so agreement between the two routes is evidence, not
// circularity.

// All realizable coordinates with total crossing weight <= weight_bound and
// |q_b| <= q_bound per window, sorted.
std::vector<DehnCoordinate> enumerate_valid(int weight_bound, int q_bound);

// The normal ones among enumerate_valid.
std::vector<DehnCoordinate> enumerate_normal(int weight_bound, int q_bound);

// Deterministic sample of distinct realizable coordinates drawn uniformly
// from the same box, in discovery order.
std::vector<DehnCoordinate> sample_valid(int weight_bound, int q_bound, int count, uint64_t seed);

// Reference answer for completions: scan every coordinate whose window
// weights exceed the survivor counts by at most extra_weight and whose
// twists are at most q_bound in magnitude, and keep those whose realization
// contains the two surviving arcs of `s` in the same position — compared by
// slot order and window wrap counts of the survivors, their labels, and
// their endpoints.  Only normal systems are kept.  Sorted.
std::vector<DehnCoordinate> brute_completions(const ArcSystem& s, int arc, int extra_weight,
                                              int q_bound);

// Breadth-first closure of `seed` under brute_completions moves, cut off at
// `radius` moves.  Pass bounds wide enough for the weights encountered.
std::vector<DehnCoordinate> bfs_class(const ArcSystem& seed, int radius, int extra_weight,
                                      int q_bound);

// Disk pairing built by rotating the untwisted pairing one step at a time
// instead of by closed-form slot arithmetic.  Same output contract as
// DiskPattern::matching.
std::vector<std::pair<int, int>> disk_matching_by_rotation(int k, int q);

// Component structure via union-find over crossings and punctures instead of
// path walking.  Returns the three puncture pairs in arc label order, or
// nothing when the coordinate leaves a closed loop or an odd window.
std::optional<std::array<std::pair<int, int>, 3>> trace_by_union(const DehnCoordinate& c);

} // namespace tangle

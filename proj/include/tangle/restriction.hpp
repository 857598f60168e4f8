#pragma once

#include "tangle/surface_model.hpp"

#include <array>
#include <cstddef>
#include <utility>
#include <vector>

namespace tangle {

// Identity of the two-arc subsystem left after deleting one arc from a taut
// system.  Deleting strands from a parallel cable keeps it parallel and
// deleting whole chords/stems keeps the disk pattern taut, so the survivors
// are again in canonical position and carry their own window coordinate.
// Two systems extend the same two-arc subsystem exactly when these keys are
// equal.
struct WindowKey {
    int k = 0;             // surviving window crossings
    int q = 0;             // induced twist coordinate of the survivors
    std::vector<int> word; // surviving labels in window order

    bool operator==(const WindowKey&) const = default;
};

struct SubsystemKey {
    int removed = 0; // deleted arc label 1..3
    std::array<WindowKey, 3> windows{};
    // Puncture pairs of the two surviving arcs, in label order.
    std::array<std::pair<int, int>, 2> endpoints{};

    bool operator==(const SubsystemKey&) const = default;
};

// Throws InvariantError for arc outside 1..3.
SubsystemKey subsystem_key(const ArcSystem& s, int arc);

namespace detail {

// Induced coordinate of a strand subset: for survivor x at window rank
// rank_S(x), the survivor cable satisfies
//   q' = rank_I(slot(x)) + k' * wrap(x) - rank_S(x)
// where I is the set of surviving inner ends in counter-clockwise order.
// The value is independent of the chosen survivor; this helper asserts that
// and returns it.  `survivors` must be sorted window positions.
int induced_window_q(int k, int q, const std::vector<int>& survivors);

// All full-window coordinates q compatible with a candidate word: deleting
// the `arc` dots of `word` must reproduce `wk`.  When the window key is
// empty the twist is unconstrained by the key and the word must be empty;
// only q = 0 is returned then (any other q is either invalid or describes a
// different system handled elsewhere).
std::vector<int> window_q_solutions(const WindowKey& wk, const std::vector<int>& word, int arc);

// Valid systems whose subsystem after deleting key.removed equals `key`,
// restricted to candidates whose per-window deleted-dot placement matches
// `words`.  Every twist the per-window solver allows is tried; validity and
// key equality are checked on the realized system.  Results are deduplicated
// and sorted by coordinate.  Normality is not required here.
std::vector<ArcSystem> systems_for_words(const SubsystemKey& key,
                                         const std::array<std::vector<int>, 3>& words);

} // namespace detail

} // namespace tangle

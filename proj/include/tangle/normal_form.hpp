#pragma once

#include "tangle/surface_model.hpp"

#include <optional>

namespace tangle {

// Two consecutive window crossings by the same arc.  Such a pair bounds a
// strip that the arc could be pushed across, so the system is not in normal
// position; `arc` is the offending label, `window`/`pos` locate the pair
// (pos and pos+1, zero based, in window order).
struct NormalityViolation {
    int window = 0;
    int pos = 0;
    int arc = 0;

    bool operator==(const NormalityViolation&) const = default;
};

// A system is normal when no window word contains two equal adjacent labels.
bool is_normal(const ArcSystem& s);

// First violation in window order, scanning windows left to right.
std::optional<NormalityViolation> find_violation(const ArcSystem& s);

// Replace the arc named by the violation with a cheaper arc joining the same
// punctures and avoiding the other two arcs: among all valid systems that
// restrict to the same two-arc subsystem and weigh strictly less, returns the
// one of least total weight, ties broken by coordinate order.  Throws
// NotAViolation if `v` does not name an equal adjacent pair of `s`, and
// TripwireError if no lighter replacement exists (one always must).
ArcSystem bridge_replace(const ArcSystem& s, const NormalityViolation& v);

// Repeated bridge_replace until normal.  Total weight strictly drops each
// step, so this terminates.  If `steps` is non-null it receives the number
// of replacements performed.
ArcSystem normalize(const ArcSystem& s, int* steps = nullptr);

} // namespace tangle

#include "tangle/minimization.hpp"

#include "tangle/errors.hpp"
#include "tangle/jump_moves.hpp"

#include <algorithm>
#include <deque>
#include <set>

namespace tangle {

namespace {

// Window-1 weight of a replacement result without re-realizing s.
int weight1(const DehnCoordinate& c) { return c.p[0]; }

std::vector<JumpNeighbor> strictly_decreasing(const ArcSystem& s) {
    std::vector<JumpNeighbor> out;
    for (const JumpNeighbor& n : neighbors(s)) {
        if (weight1(n.result) < weight1(s.dehn)) out.push_back(n);
    }
    return out;
}

} // namespace

PatternCensus census(const std::vector<int>& window1_word, int frame) {
    if (frame < 1 || frame > 3) throw ParseError("census frame must be an arc label 1..3");
    PatternCensus out;
    out.frame = frame;
    int slot = 0;
    for (int label = 1; label <= 3; ++label) {
        if (label == frame) continue;
        out.inner[slot++].label = label;
    }
    auto bucket = [&out](int label) -> PatternCensus::PerLabel& {
        return out.inner[label == out.inner[0].label ? 0 : 1];
    };

    // Walk consecutive frame positions; the run between them is classified
    // by its length and end colors.
    int prev = -1;
    for (int t = 0; t < static_cast<int>(window1_word.size()); ++t) {
        if (window1_word[t] != frame) continue;
        if (prev >= 0) {
            int gap = t - prev - 1;
            if (gap == 1) {
                bucket(window1_word[prev + 1]).n_short += 1;
            } else if (gap >= 3 && gap % 2 == 1) {
                // Equal end colors are automatic for an odd alternating run.
                PatternCensus::PerLabel& b = bucket(window1_word[prev + 1]);
                b.n_long += 1;
                b.min_long_gap = b.min_long_gap == 0 ? gap : std::min(b.min_long_gap, gap);
            }
        }
        prev = t;
    }
    return out;
}

bool is_minimal_E1(const ArcSystem& s) {
    for (const JumpNeighbor& n : neighbors(s)) {
        if (weight1(n.result) < weight1(s.dehn)) return false;
    }
    return true;
}

ArcSystem descend_E1(const ArcSystem& s) {
    ArcSystem cur = s;
    for (;;) {
        std::vector<JumpNeighbor> down = strictly_decreasing(cur);
        if (down.empty()) return cur;
        if (down.size() > 1) {
            throw TripwireError("two distinct window-1-decreasing replacements at " +
                                cur.dehn.compact());
        }
        cur = realize(down[0].result);
    }
}

Plateau plateau(const ArcSystem& s, int line_cap, int member_cap) {
    if (!is_minimal_E1(s)) throw NotMinimal("plateau seed is not window-1 minimal: " + s.dehn.compact());

    Plateau out;
    out.weight1 = weight1(s.dehn);

    // Breadth-first closure over equal-weight minimal systems.  Depth is
    // tracked so an infinite twist line can be cut off at line_cap steps;
    // member_cap additionally bounds the collected set, since a zero-weight
    // seed makes every coordinate of its tangle minimal and the closure is
    // then a whole component rather than a line.
    std::set<DehnCoordinate> seen{s.dehn};
    std::deque<std::pair<DehnCoordinate, int>> queue{{s.dehn, 0}};
    while (!queue.empty()) {
        auto [cur, depth] = queue.front();
        queue.pop_front();
        out.members.push_back(cur);
        for (const JumpNeighbor& n : neighbors(realize(cur))) {
            if (weight1(n.result) != out.weight1) continue;
            if (seen.count(n.result)) continue;
            if (!is_minimal_E1(realize(n.result))) continue;
            if (depth >= line_cap || static_cast<int>(seen.size()) >= member_cap) {
                // A fresh plateau member past a cutoff: the closure is cut
                // short, which is how an infinite family announces itself.
                // Finite plateaus always exhaust before this.
                out.unbounded = true;
                continue;
            }
            seen.insert(n.result);
            queue.emplace_back(n.result, depth + 1);
        }
    }
    std::sort(out.members.begin(), out.members.end());
    return out;
}

EqualityProfile equality_profile(const ArcSystem& s) {
    if (!is_minimal_E1(s)) throw NotMinimal("equality profile needs a window-1 minimal system: " + s.dehn.compact());
    EqualityProfile out;
    for (const JumpNeighbor& n : neighbors(s)) {
        out.exists[n.arc - 1] = true;
        if (weight1(n.result) == weight1(s.dehn)) out.equal[n.arc - 1] = true;
    }
    return out;
}

} // namespace tangle

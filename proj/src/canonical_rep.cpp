#include "tangle/canonical_rep.hpp"

#include "tangle/errors.hpp"
#include "tangle/jump_moves.hpp"
#include "tangle/minimization.hpp"
#include "tangle/normal_form.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <set>
#include <vector>

namespace tangle {

namespace {

int weight1(const DehnCoordinate& c) { return c.p[0]; }

int total_weight(const DehnCoordinate& c) { return c.p[0] + c.p[1] + c.p[2]; }

// floor(x / 2) for any sign.
int floor_half(int x) { return x >= 0 ? x / 2 : (x - 1) / 2; }

// Replacement results that stay at the same window-1 weight and are again
// minimal: the steps along which a tangle's set of minimal systems is
// connected.  Sorted by coordinate.  Memoized: floor searches and line
// walks revisit coordinates heavily, and minimality checks dominate cost.
std::vector<DehnCoordinate> level_steps(const DehnCoordinate& c) {
    static std::mutex guard;
    static std::map<DehnCoordinate, std::vector<DehnCoordinate>> memo;
    {
        std::lock_guard<std::mutex> lock(guard);
        auto it = memo.find(c);
        if (it != memo.end()) return it->second;
    }
    std::vector<DehnCoordinate> out;
    for (const JumpNeighbor& n : neighbors(realize(c)))
        if (weight1(n.result) == weight1(c) && is_minimal_E1(realize(n.result)))
            out.push_back(n.result);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    std::lock_guard<std::mutex> lock(guard);
    memo.emplace(c, out);
    return out;
}

// Walks a twist line to the member whose twist at index b is `target`,
// holding the invariant sum of the twists at indices b and c.  Every step
// must exist among the level steps; a missing step means the family is not
// the expected line and is reported loudly.
DehnCoordinate walk_twist_line(const DehnCoordinate& start, int b, int c, int target) {
    const int sum = start.q[b] + start.q[c];
    DehnCoordinate cur = start;
    while (cur.q[b] != target) {
        int next_b = cur.q[b] + (target > cur.q[b] ? 1 : -1);
        bool stepped = false;
        for (const DehnCoordinate& t : level_steps(cur)) {
            if (t.p != cur.p || t.q[b] != next_b || t.q[c] != sum - next_b) continue;
            bool other_fixed = true;
            for (int i = 0; i < 3; ++i)
                if (i != b && i != c && t.q[i] != cur.q[i]) other_fixed = false;
            if (!other_fixed) continue;
            cur = t;
            stepped = true;
            break;
        }
        if (!stepped)
            throw TripwireError("twist line walk blocked at " + cur.compact());
    }
    return cur;
}

// The twist indices that move along the level line through `c`, in index
// order.  Falls back to `fallback` when no level step keeps the full
// intersection vector (a line of length one).
std::pair<int, int> moving_twist_pair(const DehnCoordinate& c, std::pair<int, int> fallback) {
    for (const DehnCoordinate& t : level_steps(c)) {
        if (t.p != c.p) continue;
        std::vector<int> moved;
        for (int i = 0; i < 3; ++i)
            if (t.q[i] != c.q[i]) moved.push_back(i);
        if (moved.size() == 2) return {moved[0], moved[1]};
    }
    return fallback;
}

// Connected set of minimal systems reachable from `c` at its window-1
// weight without changing the total weight.  Capped: these floors are small
// in every family seen, and an overflow is a structural surprise worth a
// loud stop.
std::vector<DehnCoordinate> floor_component(const DehnCoordinate& c, int cap) {
    std::set<DehnCoordinate> seen{c};
    std::vector<DehnCoordinate> queue{c};
    const int tw = total_weight(c);
    while (!queue.empty()) {
        DehnCoordinate cur = queue.back();
        queue.pop_back();
        for (const DehnCoordinate& t : level_steps(cur)) {
            if (total_weight(t) != tw || seen.count(t)) continue;
            if (static_cast<int>(seen.size()) >= cap)
                throw TripwireError("floor component overflow at " + c.compact());
            seen.insert(t);
            queue.push_back(t);
        }
    }
    return {seen.begin(), seen.end()};
}

// Exits from a floor component to strictly smaller total weight, sorted.
std::vector<DehnCoordinate> floor_exits(const std::vector<DehnCoordinate>& comp) {
    std::vector<DehnCoordinate> out;
    for (const DehnCoordinate& m : comp)
        for (const DehnCoordinate& t : level_steps(m))
            if (total_weight(t) < total_weight(m)) out.push_back(t);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

// Leftmost pattern sighting used by the one-equality selection: scanning the
// first window's word, the first pair of consecutive frame crossings whose
// gap is either the single other strict label (kind 0) or an odd run of
// >= 3 ending in the equal label on both sides (kind 1).  kind 2 = neither
// occurs.  `gap` is the run length of a long sighting, 0 otherwise.
struct Sighting {
    int kind = 2;
    int gap = 0;
};

Sighting leftmost_sighting(const std::vector<int>& word, int frame, int short_inner,
                           int long_inner) {
    int prev = -1;
    for (int i = 0; i < static_cast<int>(word.size()); ++i) {
        if (word[i] != frame) continue;
        if (prev >= 0) {
            int gap = i - prev - 1;
            if (gap == 1 && word[prev + 1] == short_inner) return {0, 0};
            if (gap >= 3 && gap % 2 == 1 && word[prev + 1] == long_inner &&
                word[i - 1] == long_inner)
                return {1, gap};
        }
        prev = i;
    }
    return {2, 0};
}

struct Cache {
    std::mutex guard;
    std::map<DehnCoordinate, RepresentativeReport> map;
};

Cache& cache() {
    static Cache c;
    return c;
}

} // namespace

const char* branch_name(SelectionBranch b) {
    switch (b) {
    case SelectionBranch::Infinity: return "INFINITY";
    case SelectionBranch::EmptyWindow: return "EMPTY_WINDOW";
    case SelectionBranch::StrictAll: return "STRICT_ALL";
    case SelectionBranch::OneEquality: return "ONE_EQUALITY";
    case SelectionBranch::TwoEqualityDisjoint: return "TWO_EQUALITY_DISJOINT";
    case SelectionBranch::TwoEqualityMeeting: return "TWO_EQUALITY_MEETING";
    }
    return "?";
}

RepresentativeReport representative(const ArcSystem& s) {
    ArcSystem minimal = descend_E1(normalize(s));
    DehnCoordinate m = minimal.dehn;
    {
        std::lock_guard<std::mutex> lock(cache().guard);
        auto it = cache().map.find(m);
        if (it != cache().map.end()) return it->second;
    }

    RepresentativeReport rep;

    if (m.p[0] == 0 && m.p[1] == 0 && m.p[2] == 0) {
        rep.branch = SelectionBranch::Infinity;
        rep.representative = m;
        rep.plateau_size = 1;
    } else if (m.p[0] == 0 || m.p[1] == 0 || m.p[2] == 0) {
        // Exactly one window circle can be uncrossed in a normal system with
        // crossings (a word over a single label repeats it adjacently), and
        // the minimal systems form a twist line over the other two disks.
        rep.branch = SelectionBranch::EmptyWindow;
        int a = m.p[0] == 0 ? 0 : (m.p[1] == 0 ? 1 : 2);
        int b = a == 0 ? 1 : 0;
        int c = a == 2 ? 1 : 2;
        rep.empty_window = a + 1;
        rep.empty_q_sum = m.q[b] + m.q[c];
        rep.representative = walk_twist_line(m, b, c, floor_half(rep.empty_q_sum + 1));
        rep.plateau_size = 0;
    } else {
        EqualityProfile prof = equality_profile(minimal);
        int nequal = prof.equal[0] + prof.equal[1] + prof.equal[2];
        if (nequal == 0) {
            // No replacement keeps the weight: the minimal system is unique.
            rep.branch = SelectionBranch::StrictAll;
            rep.representative = m;
            rep.plateau_size = 1;
        } else if (nequal == 1) {
            rep.branch = SelectionBranch::OneEquality;
            Plateau plat = plateau(minimal);
            if (plat.unbounded)
                throw TripwireError("unbounded minimal family in one-equality regime at " +
                                    m.compact());
            int equal_arc = prof.equal[0] ? 1 : (prof.equal[1] ? 2 : 3);
            std::array<int, 2> strict{};
            int at = 0;
            for (int arc = 1; arc <= 3; ++arc)
                if (arc != equal_arc) strict[at++] = arc;
            // The frame is a strict arc framing short types of the other
            // strict label; when both qualify the smaller index leads.
            auto qualifies = [&](const ArcSystem& sys, int f, int inner) {
                PatternCensus cen = census(sys.words[0], f);
                for (const auto& per : cen.inner)
                    if (per.label == inner && per.n_short > 0) return true;
                return false;
            };
            // Order members by: short sighting first, then smallest long
            // gap, then coordinate.  The final coordinate comparison is a
            // totality guarantee and is reported when it decides.
            std::vector<std::tuple<int, int, DehnCoordinate>> keyed;
            for (const DehnCoordinate& mem : plat.members) {
                ArcSystem sys = realize(mem);
                int frame = strict[0], other = strict[1];
                if (!qualifies(sys, strict[0], strict[1]) && qualifies(sys, strict[1], strict[0])) {
                    frame = strict[1];
                    other = strict[0];
                }
                Sighting sight = leftmost_sighting(sys.words[0], frame, other, equal_arc);
                keyed.emplace_back(sight.kind, sight.gap, mem);
            }
            std::sort(keyed.begin(), keyed.end());
            rep.representative = std::get<2>(keyed.front());
            rep.plateau_size = static_cast<int>(plat.members.size());
            rep.unique_by_rule = keyed.size() < 2 ||
                                 std::get<0>(keyed[1]) != std::get<0>(keyed[0]) ||
                                 std::get<1>(keyed[1]) != std::get<1>(keyed[0]);
        } else if (nequal == 2) {
            int strict_arc = !prof.equal[0] ? 1 : (!prof.equal[1] ? 2 : 3);
            bool meets = false;
            for (int x : minimal.words[0])
                if (x == strict_arc) meets = true;
            if (!meets) {
                rep.branch = SelectionBranch::TwoEqualityDisjoint;
                rep.plateau_size = 0;
                auto [b, c] = moving_twist_pair(m, {-1, -1});
                if (b >= 0) {
                    // The weight-preserving replacements keep the whole
                    // intersection vector: the minimal systems form a twist
                    // line moving the first twist, whose zero member is the
                    // representative.
                    if (b != 0)
                        throw TripwireError("level line misses the first twist at " +
                                            m.compact());
                    rep.representative = walk_twist_line(m, b, c, 0);
                } else {
                    // Here the preserving replacements grow the other two
                    // intersection numbers: the minimal systems form trees
                    // over a small floor of least total weight, and the
                    // floor's least member represents the family.
                    DehnCoordinate cur = m;
                    std::vector<DehnCoordinate> comp;
                    for (;;) {
                        comp = floor_component(cur, 64);
                        std::vector<DehnCoordinate> exits = floor_exits(comp);
                        if (exits.empty()) break;
                        cur = exits.front();
                    }
                    rep.representative = comp.front();
                    rep.unique_by_rule = comp.size() == 1;
                }
            } else {
                // The minimal systems form a twist line over the two disks
                // whose twists move together; pick its middle as on the
                // empty-window line.
                rep.branch = SelectionBranch::TwoEqualityMeeting;
                auto [b, c] = moving_twist_pair(
                    m, {prof.equal[0] ? 0 : 1, prof.equal[2] ? 2 : 1});
                rep.representative =
                    walk_twist_line(m, b, c, floor_half(m.q[b] + m.q[c] + 1));
                rep.plateau_size = 0;
            }
        } else {
            throw TripwireError("three weight-preserving arcs at " + m.compact());
        }
    }

    std::lock_guard<std::mutex> lock(cache().guard);
    cache().map.emplace(m, rep);
    return rep;
}

bool equivalent(const DehnCoordinate& a, const DehnCoordinate& b) {
    return representative(realize(a)).representative ==
           representative(realize(b)).representative;
}

void clear_representative_cache() {
    std::lock_guard<std::mutex> lock(cache().guard);
    cache().map.clear();
}

} // namespace tangle

#include "tangle/restriction.hpp"

#include "tangle/errors.hpp"

#include <algorithm>
#include <cassert>

namespace tangle {

namespace {

// Rank of `value` inside sorted `values`; value must be present.
int rank_in(const std::vector<int>& values, int value) {
    auto it = std::lower_bound(values.begin(), values.end(), value);
    assert(it != values.end() && *it == value);
    return static_cast<int>(it - values.begin());
}

} // namespace

namespace detail {

int induced_window_q(int k, int q, const std::vector<int>& survivors) {
    const int kk = static_cast<int>(survivors.size());
    assert(kk > 0);
    std::vector<int> slots;
    slots.reserve(survivors.size());
    for (int x : survivors) slots.push_back(slot_of(k, q, x));
    std::sort(slots.begin(), slots.end());

    int result = 0;
    for (int r = 0; r < kk; ++r) {
        const int x = survivors[r];
        const int value = rank_in(slots, slot_of(k, q, x)) + kk * wrap_of(k, q, x) - r;
        if (r == 0) {
            result = value;
        } else if (value != result) {
            // The survivor cable of a parallel cable is parallel, so the
            // induced coordinate cannot depend on the strand we read it from.
            throw TripwireError("induced window coordinate is not constant across survivors");
        }
    }
    return result;
}

std::vector<int> window_q_solutions(const WindowKey& wk, const std::vector<int>& word, int arc) {
    const int p = static_cast<int>(word.size());
    std::vector<int> survivors;
    for (int x = 0; x < p; ++x) {
        if (word[x] != arc) survivors.push_back(x);
    }
    const int kk = static_cast<int>(survivors.size());
    if (kk != wk.k) return {};
    for (int r = 0; r < kk; ++r) {
        if (word[survivors[r]] != wk.word[r]) return {};
    }
    if (kk == 0) {
        // No survivors pin the twist.  An empty window is the only candidate
        // we ever build here; wrapped all-deleted windows are never weight
        // minimal, so the search layers that call this do not need them.
        if (p == 0) return {0};
        return {};
    }

    // q = p * T + r.  For fixed r the induced coordinate of the survivors is
    // c + kk * T where c depends on r alone, so T is forced and must be
    // integral.
    std::vector<int> result;
    for (int r = 0; r < p; ++r) {
        std::vector<int> slots;
        slots.reserve(survivors.size());
        for (int x : survivors) slots.push_back(slot_of(p, r, x));
        std::sort(slots.begin(), slots.end());
        int c = 0;
        for (int j = 0; j < kk; ++j) {
            const int x = survivors[j];
            const int value = rank_in(slots, slot_of(p, r, x)) + kk * wrap_of(p, r, x) - j;
            if (j == 0) {
                c = value;
            } else if (value != c) {
                throw TripwireError("induced window coordinate is not constant across survivors");
            }
        }
        const int diff = wk.q - c;
        if (diff % kk != 0) continue;
        const int t = diff / kk;
        result.push_back(p * t + r);
    }
    std::sort(result.begin(), result.end());
    return result;
}

std::vector<ArcSystem> systems_for_words(const SubsystemKey& key,
                                         const std::array<std::vector<int>, 3>& words) {
    std::array<std::vector<int>, 3> qs;
    for (int b = 0; b < 3; ++b) {
        if (words[b].size() % 2 != 0) return {};
        qs[b] = window_q_solutions(key.windows[b], words[b], key.removed);
        if (qs[b].empty()) return {};
    }
    std::vector<ArcSystem> result;
    for (int q1 : qs[0]) {
        for (int q2 : qs[1]) {
            for (int q3 : qs[2]) {
                DehnCoordinate c(static_cast<int>(words[0].size()), q1,
                                 static_cast<int>(words[1].size()), q2,
                                 static_cast<int>(words[2].size()), q3);
                if (!c.shape_ok()) continue;
                ArcSystem t;
                try {
                    t = realize(c);
                } catch (const InvalidCoordinate&) {
                    continue;
                }
                if (subsystem_key(t, key.removed) == key) result.push_back(std::move(t));
            }
        }
    }
    std::sort(result.begin(), result.end(),
              [](const ArcSystem& a, const ArcSystem& b) { return a.dehn < b.dehn; });
    result.erase(std::unique(result.begin(), result.end()), result.end());
    return result;
}

} // namespace detail

SubsystemKey subsystem_key(const ArcSystem& s, int arc) {
    if (arc < 1 || arc > 3) throw InvariantError("arc label must be 1, 2 or 3");
    SubsystemKey key;
    key.removed = arc;
    for (int b = 0; b < 3; ++b) {
        const DiskPattern& d = s.disks[b];
        std::vector<int> survivors;
        WindowKey& wk = key.windows[b];
        for (int x = 0; x < d.k; ++x) {
            if (s.words[b][x] != arc) {
                survivors.push_back(x);
                wk.word.push_back(s.words[b][x]);
            }
        }
        wk.k = static_cast<int>(survivors.size());
        wk.q = wk.k == 0 ? 0 : detail::induced_window_q(d.k, d.q, survivors);
    }
    int out = 0;
    for (int label = 1; label <= 3; ++label) {
        if (label == arc) continue;
        key.endpoints[out++] = s.endpoints[label - 1];
    }
    return key;
}

} // namespace tangle

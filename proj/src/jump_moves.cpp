#include "tangle/jump_moves.hpp"

#include "tangle/errors.hpp"
#include "tangle/normal_form.hpp"
#include "tangle/restriction.hpp"

#include <algorithm>
#include <cstddef>
#include <unordered_map>

namespace tangle {

namespace {

struct CompletionKey {
    DehnCoordinate coord;
    int arc = 0;

    bool operator==(const CompletionKey&) const = default;
};

struct CompletionKeyHash {
    std::size_t operator()(const CompletionKey& k) const {
        std::size_t h = CoordinateHash{}(k.coord);
        h ^= static_cast<std::size_t>(k.arc) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
        return h;
    }
};

std::unordered_map<CompletionKey, std::vector<DehnCoordinate>, CompletionKeyHash>
    completion_cache;

// Appends every word that spreads `m` crossings of `arc` over the gaps of
// the survivor word, at most one per gap.  k survivors leave k+1 gaps (the
// two window ends count); two replacement crossings in one gap would be
// adjacent equal labels, which no normal system allows, so this census of
// candidate words is complete.
void words_with_gap_dots(const std::vector<int>& survivors, int arc, int m,
                         std::vector<std::vector<int>>& out) {
    const int gaps = static_cast<int>(survivors.size()) + 1;
    if (m < 0 || m > gaps) return;
    std::vector<int> pick(m);
    for (int i = 0; i < m; ++i) pick[i] = i;
    while (true) {
        std::vector<int> word;
        word.reserve(survivors.size() + m);
        int next = 0;
        for (int g = 0; g < gaps; ++g) {
            if (next < m && pick[next] == g) {
                word.push_back(arc);
                ++next;
            }
            if (g < gaps - 1) word.push_back(survivors[g]);
        }
        out.push_back(std::move(word));
        // next combination
        int i = m - 1;
        while (i >= 0 && pick[i] == gaps - m + i) --i;
        if (i < 0) break;
        ++pick[i];
        for (int j = i + 1; j < m; ++j) pick[j] = pick[j - 1] + 1;
    }
}

bool cyclic_equal(const std::vector<int>& u, const std::vector<int>& v) {
    if (u.size() != v.size()) return false;
    const int n = static_cast<int>(u.size());
    if (n == 0) return true;
    for (int r = 0; r < n; ++r) {
        bool same = true;
        for (int t = 0; t < n && same; ++t) same = u[(t + r) % n] == v[t];
        if (same) return true;
    }
    return false;
}

} // namespace

std::vector<DehnCoordinate> completions(const ArcSystem& s, int arc) {
    if (arc < 1 || arc > 3) throw InvariantError("completions: arc label out of range");
    if (!is_normal(s)) throw NotNormal("completions needs a normal system");

    const CompletionKey ck{s.dehn, arc};
    if (auto hit = completion_cache.find(ck); hit != completion_cache.end()) return hit->second;

    const SubsystemKey key = subsystem_key(s, arc);

    // Candidate window words: the survivors stay put, and the replacement
    // contributes between 0 and k+1 crossings per window, one per gap, with
    // the total count of each window even (odd windows realize nothing).
    std::array<std::vector<std::vector<int>>, 3> window_words;
    for (int b = 0; b < 3; ++b) {
        const WindowKey& wk = key.windows[b];
        for (int m = wk.k % 2; m <= wk.k + 1; m += 2)
            words_with_gap_dots(wk.word, arc, m, window_words[b]);
    }

    std::vector<DehnCoordinate> result;
    std::array<std::vector<int>, 3> words;
    for (const auto& w0 : window_words[0]) {
        words[0] = w0;
        for (const auto& w1 : window_words[1]) {
            words[1] = w1;
            for (const auto& w2 : window_words[2]) {
                words[2] = w2;
                for (const ArcSystem& cand : detail::systems_for_words(key, words))
                    if (is_normal(cand)) result.push_back(cand.dehn);
            }
        }
    }
    std::sort(result.begin(), result.end());
    result.erase(std::unique(result.begin(), result.end()), result.end());

    if (std::find(result.begin(), result.end(), s.dehn) == result.end())
        throw TripwireError("completion search lost its own input " + s.dehn.compact());
    if (result.size() > 3)
        throw TripwireError("more than three completions of one subsystem at " +
                            s.dehn.compact());

    completion_cache.emplace(ck, result);
    return result;
}

bool same_window_pattern(const ArcSystem& a, const ArcSystem& b) {
    for (int w = 0; w < 3; ++w)
        if (!cyclic_equal(a.words[w], b.words[w])) return false;
    return true;
}

std::vector<JumpNeighbor> neighbors(const ArcSystem& s) {
    if (!is_normal(s)) throw NotNormal("neighbors needs a normal system");

    std::vector<JumpNeighbor> out;
    for (int arc = 1; arc <= 3; ++arc) {
        std::vector<DehnCoordinate> others;
        for (const DehnCoordinate& c : completions(s, arc))
            if (!(c == s.dehn)) others.push_back(c);

        if (others.empty()) continue;
        if (others.size() == 1) {
            out.push_back({arc, MoveVariant::Standard, others[0]});
            continue;
        }

        // Two alternatives.  The standard one shares the source's window
        // pattern; pattern sharing is an equivalence, so this pairing is
        // symmetric across the triple.  When all three share one pattern the
        // two smallest coordinates pair up and the largest keeps two second
        // variants; when the source's pattern is unshared both replacements
        // change it and neither is standard.
        const ArcSystem o0 = realize(others[0]);
        const ArcSystem o1 = realize(others[1]);
        const bool m0 = same_window_pattern(s, o0);
        const bool m1 = same_window_pattern(s, o1);
        if (m0 != m1) {
            out.push_back({arc, m0 ? MoveVariant::Standard : MoveVariant::Second, others[0]});
            out.push_back({arc, m1 ? MoveVariant::Standard : MoveVariant::Second, others[1]});
        } else if (m0 && m1 && s.dehn < others[1]) {
            // others is sorted, so the clique reads {min, mid, max} with s
            // somewhere; s pairs with the smaller of the two others exactly
            // when s is not the largest of the three.
            out.push_back({arc, MoveVariant::Standard, others[0]});
            out.push_back({arc, MoveVariant::Second, others[1]});
        } else {
            out.push_back({arc, MoveVariant::Second, others[0]});
            out.push_back({arc, MoveVariant::Second, others[1]});
        }
    }
    return out;
}

std::array<std::vector<int>, 3> predict_window_words(const ArcSystem& s, int arc) {
    if (arc < 1 || arc > 3) throw InvariantError("predict_window_words: arc label out of range");
    if (!is_normal(s)) throw NotNormal("predict_window_words needs a normal system");

    bool crosses = false;
    for (int w = 0; w < 3 && !crosses; ++w)
        for (int x : s.words[w])
            if (x == arc) {
                crosses = true;
                break;
            }
    if (!crosses)
        throw NoWindowIntersection("pattern prediction needs the replaced arc to cross a window");

    std::array<std::vector<int>, 3> out;
    for (int w = 0; w < 3; ++w) {
        const std::vector<int>& word = s.words[w];
        const int n = static_cast<int>(word.size());
        std::vector<int>& res = out[w];
        for (int t = 0; t < n; ++t) {
            if (word[t] == arc) {
                // survives only between equal labels on the window circle
                if (word[(t + n - 1) % n] == word[(t + 1) % n]) res.push_back(arc);
            } else {
                res.push_back(word[t]);
                // a new crossing lands inside every cyclically adjacent pair
                // of survivor crossings; the pair through the window end is
                // reported at the right end
                if (word[(t + 1) % n] != arc) res.push_back(arc);
            }
        }
    }
    return out;
}

bool has_second_move(const ArcSystem& s, int arc) { return completions(s, arc).size() == 3; }

void clear_completion_cache() { completion_cache.clear(); }

} // namespace tangle

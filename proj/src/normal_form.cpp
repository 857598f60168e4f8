#include "tangle/normal_form.hpp"

#include "tangle/errors.hpp"
#include "tangle/restriction.hpp"

#include <algorithm>
#include <vector>

namespace tangle {

namespace {

// All ways to distribute deleted-arc dots among the survivor gaps of one
// window so that the window holds `p` crossings total: each candidate is the
// full window word with `arc` dots inserted into the key word.
void window_words_with_inserts(const WindowKey& wk, int arc, int p,
                               std::vector<std::vector<int>>& out) {
    const int inserts = p - wk.k;
    if (inserts < 0 || p % 2 != 0) return;
    // Choose the positions of the inserted dots among p slots; the key word
    // fills the rest in order.
    std::vector<int> pick(inserts);
    for (int i = 0; i < inserts; ++i) pick[i] = i;
    while (true) {
        std::vector<int> word(p, 0);
        for (int i : pick) word[i] = arc;
        int next = 0;
        for (int x = 0; x < p; ++x) {
            if (word[x] == 0) word[x] = wk.word[next++];
        }
        out.push_back(std::move(word));
        if (inserts == 0) break;
        // Next combination in lexicographic order.
        int i = inserts - 1;
        while (i >= 0 && pick[i] == p - inserts + i) --i;
        if (i < 0) break;
        ++pick[i];
        for (int j = i + 1; j < inserts; ++j) pick[j] = pick[j - 1] + 1;
    }
}

} // namespace

bool is_normal(const ArcSystem& s) {
    return !find_violation(s).has_value();
}

std::optional<NormalityViolation> find_violation(const ArcSystem& s) {
    for (int b = 0; b < 3; ++b) {
        const std::vector<int>& w = s.words[b];
        for (size_t x = 0; x + 1 < w.size(); ++x) {
            if (w[x] == w[x + 1]) return NormalityViolation{b, static_cast<int>(x), w[x]};
        }
    }
    return std::nullopt;
}

ArcSystem bridge_replace(const ArcSystem& s, const NormalityViolation& v) {
    if (v.window < 0 || v.window > 2) throw NotAViolation("window out of range");
    const std::vector<int>& w = s.words[v.window];
    if (v.pos < 0 || static_cast<size_t>(v.pos) + 1 >= w.size())
        throw NotAViolation("position out of range");
    if (w[v.pos] != w[v.pos + 1]) throw NotAViolation("labels at the named pair differ");
    if (v.arc != w[v.pos]) throw NotAViolation("arc does not match the pair");

    const int total = weight(s);
    const SubsystemKey key = subsystem_key(s, v.arc);
    const int base = key.windows[0].k + key.windows[1].k + key.windows[2].k;

    // Scan candidate total weights from the survivor weight upward and stop
    // at the first weight that admits a valid replacement; the replaced arc
    // never needs to wrap a window the survivors miss, since unwrapping only
    // sheds weight.
    for (int target = base; target < total; ++target) {
        std::vector<ArcSystem> found;
        for (int p1 = key.windows[0].k; p1 <= target; ++p1) {
            for (int p2 = key.windows[1].k; p1 + p2 <= target; ++p2) {
                const int p3 = target - p1 - p2;
                if (p3 < key.windows[2].k) continue;
                std::array<std::vector<std::vector<int>>, 3> options;
                window_words_with_inserts(key.windows[0], v.arc, p1, options[0]);
                window_words_with_inserts(key.windows[1], v.arc, p2, options[1]);
                window_words_with_inserts(key.windows[2], v.arc, p3, options[2]);
                if (options[0].empty() || options[1].empty() || options[2].empty()) continue;
                for (const auto& w1 : options[0]) {
                    for (const auto& w2 : options[1]) {
                        for (const auto& w3 : options[2]) {
                            auto matches = detail::systems_for_words(key, {w1, w2, w3});
                            found.insert(found.end(), matches.begin(), matches.end());
                        }
                    }
                }
            }
        }
        if (!found.empty()) {
            auto best = std::min_element(
                found.begin(), found.end(),
                [](const ArcSystem& a, const ArcSystem& b) { return a.dehn < b.dehn; });
            return *best;
        }
    }
    throw TripwireError("no lighter replacement for a removable pair: " + s.dehn.compact());
}

ArcSystem normalize(const ArcSystem& s, int* steps) {
    ArcSystem current = s;
    int count = 0;
    while (auto v = find_violation(current)) {
        current = bridge_replace(current, *v);
        ++count;
    }
    if (steps) *steps = count;
    return current;
}

} // namespace tangle

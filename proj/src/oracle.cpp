#include "tangle/oracle.hpp"

#include "tangle/errors.hpp"
#include "tangle/normal_form.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <random>
#include <set>

namespace tangle {

namespace {

// (survivor slot rank, window wrap) per survivor, in window order.  Two
// survivor cables are isotopic inside their disk exactly when these agree.
using WindowProfile = std::vector<std::pair<int, int>>;

WindowProfile window_profile(int k, int q, const std::vector<int>& positions) {
    std::vector<int> slots;
    slots.reserve(positions.size());
    for (int x : positions) slots.push_back(slot_of(k, q, x));
    std::vector<int> sorted = slots;
    std::sort(sorted.begin(), sorted.end());
    WindowProfile profile;
    profile.reserve(positions.size());
    for (size_t i = 0; i < positions.size(); ++i) {
        const int rank =
            static_cast<int>(std::lower_bound(sorted.begin(), sorted.end(), slots[i]) -
                             sorted.begin());
        profile.emplace_back(rank, wrap_of(k, q, positions[i]));
    }
    return profile;
}

// Does any size-m subset of window positions of a (p, q) window produce the
// wanted profile?  Subsets are scanned in lexicographic order with early
// exit; this is a sound filter run before realizing a candidate.
bool some_subset_matches(int p, int q, const WindowProfile& want) {
    const int m = static_cast<int>(want.size());
    if (m > p) return false;
    if (m == 0) return true;
    std::vector<int> pick(m);
    std::iota(pick.begin(), pick.end(), 0);
    while (true) {
        if (window_profile(p, q, pick) == want) return true;
        int i = m - 1;
        while (i >= 0 && pick[i] == p - m + i) --i;
        if (i < 0) return false;
        ++pick[i];
        for (int j = i + 1; j < m; ++j) pick[j] = pick[j - 1] + 1;
    }
}

std::vector<int> window_q_range(int p, int q_bound) {
    if (p == 0) return {0};
    std::vector<int> qs;
    for (int q = -q_bound; q <= q_bound; ++q) qs.push_back(q);
    return qs;
}

} // namespace

std::vector<DehnCoordinate> enumerate_valid(int weight_bound, int q_bound) {
    std::vector<DehnCoordinate> out;
    for (int p1 = 0; p1 <= weight_bound; ++p1) {
        for (int p2 = 0; p1 + p2 <= weight_bound; ++p2) {
            for (int p3 = 0; p1 + p2 + p3 <= weight_bound; ++p3) {
                if ((p1 + p2 + p3) % 2 != 0) continue;
                for (int q1 : window_q_range(p1, q_bound)) {
                    for (int q2 : window_q_range(p2, q_bound)) {
                        for (int q3 : window_q_range(p3, q_bound)) {
                            DehnCoordinate c(p1, q1, p2, q2, p3, q3);
                            try {
                                realize(c);
                            } catch (const InvalidCoordinate&) {
                                continue;
                            }
                            out.push_back(c);
                        }
                    }
                }
            }
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<DehnCoordinate> enumerate_normal(int weight_bound, int q_bound) {
    std::vector<DehnCoordinate> out;
    for (const DehnCoordinate& c : enumerate_valid(weight_bound, q_bound)) {
        if (is_normal(realize(c))) out.push_back(c);
    }
    return out;
}

std::vector<DehnCoordinate> sample_valid(int weight_bound, int q_bound, int count,
                                         uint64_t seed) {
    std::mt19937_64 gen(seed);
    std::uniform_int_distribution<int> pd(0, weight_bound);
    std::uniform_int_distribution<int> qd(-q_bound, q_bound);
    std::vector<DehnCoordinate> out;
    std::set<DehnCoordinate> seen;
    const long attempts_cap = 10000L * std::max(count, 1);
    for (long attempt = 0; attempt < attempts_cap && static_cast<int>(out.size()) < count;
         ++attempt) {
        const int p1 = pd(gen), p2 = pd(gen), p3 = pd(gen);
        if (p1 + p2 + p3 > weight_bound || (p1 + p2 + p3) % 2 != 0) continue;
        DehnCoordinate c(p1, p1 ? qd(gen) : 0, p2, p2 ? qd(gen) : 0, p3, p3 ? qd(gen) : 0);
        if (seen.count(c)) continue;
        seen.insert(c);
        try {
            realize(c);
        } catch (const InvalidCoordinate&) {
            continue;
        }
        out.push_back(c);
    }
    return out;
}

std::vector<DehnCoordinate> brute_completions(const ArcSystem& s, int arc, int extra_weight,
                                              int q_bound) {
    if (arc < 1 || arc > 3) throw InvariantError("arc label must be 1, 2 or 3");

    // What must survive: per window the deleted-arc complement, described by
    // geometry (slot ranks and wraps), labels, and the survivors' endpoints.
    std::array<WindowProfile, 3> want_profile;
    std::array<std::vector<int>, 3> want_labels;
    for (int b = 0; b < 3; ++b) {
        std::vector<int> positions;
        for (int x = 0; x < s.disks[b].k; ++x) {
            if (s.words[b][x] != arc) {
                positions.push_back(x);
                want_labels[b].push_back(s.words[b][x]);
            }
        }
        want_profile[b] = window_profile(s.disks[b].k, s.disks[b].q, positions);
    }
    std::array<std::pair<int, int>, 2> want_endpoints{};
    {
        int out = 0;
        for (int label = 1; label <= 3; ++label) {
            if (label != arc) want_endpoints[out++] = s.endpoints[label - 1];
        }
    }

    // Candidate (p, q) per window that pass the survivor-profile filter.
    // Normality of the answers trims the scan soundly: a window whose
    // crossings would all belong to the replaced arc repeats one label, so
    // it must be empty; elsewhere at most one replaced-arc crossing fits
    // between consecutive survivors, capping p at 2k'+1.  The survivor wraps
    // pin the twist to |q - p*w| <= p-1 for every survivor wrap w.
    std::array<std::vector<std::pair<int, int>>, 3> window_candidates;
    for (int b = 0; b < 3; ++b) {
        const int base = static_cast<int>(want_profile[b].size());
        if (base == 0) {
            window_candidates[b].emplace_back(0, 0);
            continue;
        }
        int w_min = want_profile[b][0].second, w_max = w_min;
        for (const auto& [rank, wrap] : want_profile[b]) {
            w_min = std::min(w_min, wrap);
            w_max = std::max(w_max, wrap);
        }
        const int p_cap = std::min(base + extra_weight, 2 * base + 1);
        for (int p = base; p <= p_cap; ++p) {
            const int q_lo = std::max(p * w_max - p + 1, -q_bound);
            const int q_hi = std::min(p * w_min + p - 1, q_bound);
            for (int q = q_lo; q <= q_hi; ++q) {
                if (some_subset_matches(p, q, want_profile[b]))
                    window_candidates[b].emplace_back(p, q);
            }
        }
    }

    std::vector<DehnCoordinate> out;
    for (auto [p1, q1] : window_candidates[0]) {
        for (auto [p2, q2] : window_candidates[1]) {
            for (auto [p3, q3] : window_candidates[2]) {
                DehnCoordinate c(p1, q1, p2, q2, p3, q3);
                if (!c.shape_ok()) continue;
                ArcSystem t;
                try {
                    t = realize(c);
                } catch (const InvalidCoordinate&) {
                    continue;
                }
                bool ok = true;
                for (int b = 0; b < 3 && ok; ++b) {
                    std::vector<int> positions;
                    std::vector<int> labels;
                    for (int x = 0; x < t.disks[b].k; ++x) {
                        if (t.words[b][x] != arc) {
                            positions.push_back(x);
                            labels.push_back(t.words[b][x]);
                        }
                    }
                    ok = labels == want_labels[b] &&
                         window_profile(t.disks[b].k, t.disks[b].q, positions) == want_profile[b];
                }
                if (!ok) continue;
                int idx = 0;
                for (int label = 1; label <= 3 && ok; ++label) {
                    if (label == arc) continue;
                    ok = t.endpoints[label - 1] == want_endpoints[idx++];
                }
                if (ok && is_normal(t)) out.push_back(c);
            }
        }
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::vector<DehnCoordinate> bfs_class(const ArcSystem& seed, int radius, int extra_weight,
                                      int q_bound) {
    std::set<DehnCoordinate> seen{seed.dehn};
    std::deque<std::pair<DehnCoordinate, int>> queue{{seed.dehn, 0}};
    while (!queue.empty()) {
        auto [c, depth] = queue.front();
        queue.pop_front();
        if (depth == radius) continue;
        const ArcSystem t = realize(c);
        for (int arc = 1; arc <= 3; ++arc) {
            for (const DehnCoordinate& n : brute_completions(t, arc, extra_weight, q_bound)) {
                if (seen.insert(n).second) queue.emplace_back(n, depth + 1);
            }
        }
    }
    return {seen.begin(), seen.end()};
}

std::vector<std::pair<int, int>> disk_matching_by_rotation(int k, int q) {
    std::vector<std::pair<int, int>> pairs;
    if (k == 0) {
        pairs.emplace_back(RIGHT_END, LEFT_END);
        std::sort(pairs.begin(), pairs.end());
        return pairs;
    }
    // Untwisted assignment, then |q| single-step rotations of the cable.
    std::vector<int> slot(static_cast<size_t>(k));
    std::iota(slot.begin(), slot.end(), 0);
    const int step = q >= 0 ? 1 : k - 1;
    for (int i = 0; i < std::abs(q); ++i) {
        for (int& s : slot) s = (s + step) % k;
    }
    const int n = (k - 2) / 2;
    std::vector<int> at_slot(static_cast<size_t>(k));
    for (int x = 0; x < k; ++x) at_slot[static_cast<size_t>(slot[static_cast<size_t>(x)])] = x;
    std::vector<bool> done(static_cast<size_t>(k), false);
    for (int x = 0; x < k; ++x) {
        if (done[static_cast<size_t>(x)]) continue;
        const int s = slot[static_cast<size_t>(x)];
        int mate;
        if (s == 0) {
            mate = LEFT_END;
        } else if (s == n + 1) {
            mate = RIGHT_END;
        } else {
            mate = at_slot[static_cast<size_t>(k - s)];
        }
        done[static_cast<size_t>(x)] = true;
        if (mate >= 0) done[static_cast<size_t>(mate)] = true;
        pairs.emplace_back(std::min(x, mate), std::max(x, mate));
    }
    std::sort(pairs.begin(), pairs.end());
    return pairs;
}

std::optional<std::array<std::pair<int, int>, 3>> trace_by_union(const DehnCoordinate& c) {
    c.require_valid();
    for (int b = 0; b < 3; ++b) {
        if (c.p[b] % 2 != 0) return std::nullopt;
    }
    const PantsRouting routing = route_pants(c.p);

    // Union-find over window crossings plus the six punctures.
    std::array<int, 3> offset{};
    int dots = 0;
    for (int b = 0; b < 3; ++b) {
        offset[b] = dots;
        dots += c.p[b];
    }
    const int total = dots + 6;
    std::vector<int> parent(static_cast<size_t>(total));
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int v) {
        while (parent[static_cast<size_t>(v)] != v) {
            parent[static_cast<size_t>(v)] =
                parent[static_cast<size_t>(parent[static_cast<size_t>(v)])];
            v = parent[static_cast<size_t>(v)];
        }
        return v;
    };
    auto join = [&](int a, int b) { parent[static_cast<size_t>(find(a))] = find(b); };
    auto puncture_node = [&](int pn) { return dots + pn - 1; };

    for (int b = 0; b < 3; ++b) {
        if (c.p[b] == 0) {
            join(puncture_node(2 * b + 1), puncture_node(2 * b + 2));
            continue;
        }
        for (auto [x, y] : disk_matching_by_rotation(c.p[b], c.q[b])) {
            const int node_y = offset[b] + y;
            if (x == LEFT_END) {
                join(puncture_node(2 * b + 1), node_y);
            } else if (x == RIGHT_END) {
                join(puncture_node(2 * b + 2), node_y);
            } else {
                join(offset[b] + x, node_y);
            }
        }
        for (int x = 0; x < c.p[b]; ++x) {
            auto [b2, x2] = pants_partner(routing, c.p, b, x);
            join(offset[b] + x, offset[b2] + x2);
        }
    }

    // Every crossing must share a component with some puncture.
    std::set<int> puncture_roots;
    for (int pn = 1; pn <= 6; ++pn) puncture_roots.insert(find(puncture_node(pn)));
    for (int v = 0; v < dots; ++v) {
        if (!puncture_roots.count(find(v))) return std::nullopt;
    }

    std::array<std::pair<int, int>, 3> by_component{};
    std::array<int, 6> root_of{};
    for (int pn = 1; pn <= 6; ++pn) root_of[static_cast<size_t>(pn - 1)] = find(puncture_node(pn));
    int filled = 0;
    std::set<int> used_roots;
    for (int pn = 1; pn <= 6; ++pn) {
        const int root = root_of[static_cast<size_t>(pn - 1)];
        if (used_roots.count(root)) continue;
        used_roots.insert(root);
        int mate = 0;
        for (int other = pn + 1; other <= 6; ++other) {
            if (root_of[static_cast<size_t>(other - 1)] == root) {
                if (mate != 0) return std::nullopt; // three punctures on one arc
                mate = other;
            }
        }
        if (mate == 0) return std::nullopt;
        if (filled == 3) return std::nullopt;
        by_component[static_cast<size_t>(filled++)] = {pn, mate};
    }
    if (filled != 3) return std::nullopt;

    // Same labeling rule as the tracer: the arc at puncture 1 is 1; if it
    // ends at 2 the arc at 3 is 2, otherwise the arc at 2 is; the rest is 3.
    std::array<std::pair<int, int>, 3> by_label{};
    by_label[0] = by_component[0];
    const int second_anchor = by_component[0].second == 2 ? 3 : 2;
    for (int i = 1; i < 3; ++i) {
        if (by_component[static_cast<size_t>(i)].first == second_anchor)
            by_label[1] = by_component[static_cast<size_t>(i)];
        else
            by_label[2] = by_component[static_cast<size_t>(i)];
    }
    return by_label;
}

} // namespace tangle

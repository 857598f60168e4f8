#include "tangle/surface_model.hpp"

#include "tangle/errors.hpp"

#include <json.hpp>

#include <algorithm>

namespace tangle {

PantsRouting route_pants(const std::array<int, 3>& p) {
    for (int i = 0; i < 3; ++i)
        if (p[i] < 0) throw InvariantError("window count p" + std::to_string(i + 1) + " is negative");
    if ((p[0] + p[1] + p[2]) % 2 != 0)
        throw ParityError("window counts (" + std::to_string(p[0]) + "," + std::to_string(p[1]) +
                          "," + std::to_string(p[2]) + ") have odd sum");

    PantsRouting r;
    // When one window outweighs the other two combined, the excess must leave
    // and re-enter that window; otherwise the triangle-inequality solution
    // with no same-window arcs is the unique non-negative one.
    if (p[0] > p[1] + p[2]) {
        r.s1 = (p[0] - p[1] - p[2]) / 2;
        r.m12 = p[1];
        r.m13 = p[2];
    } else if (p[1] > p[0] + p[2]) {
        r.s2 = (p[1] - p[0] - p[2]) / 2;
        r.m12 = p[0];
        r.m23 = p[2];
    } else if (p[2] > p[0] + p[1]) {
        r.s3 = (p[2] - p[0] - p[1]) / 2;
        r.m13 = p[0];
        r.m23 = p[1];
    } else {
        r.m12 = (p[0] + p[1] - p[2]) / 2;
        r.m13 = (p[0] + p[2] - p[1]) / 2;
        r.m23 = (p[1] + p[2] - p[0]) / 2;
    }
    return r;
}

namespace {

int floordiv(int a, int b) {
    int d = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --d;
    return d;
}

} // namespace

int slot_of(int k, int q, int x) {
    int m = (x + q) % k;
    return m < 0 ? m + k : m;
}

int wrap_of(int k, int q, int x) { return floordiv(x + q, k); }

int DiskPattern::twist() const { return k == 0 ? 0 : floordiv(q, k); }
int DiskPattern::offset() const { return k == 0 ? 0 : q - k * twist(); }

std::pair<int, int> pants_partner(const PantsRouting& r, const std::array<int, 3>& p,
                                  int window, int pos) {
    const int p1 = p[0], p2 = p[1], p3 = p[2];
    if (r.s1 > 0) {
        // Window 1 left to right: block to window 3, outer self legs, block
        // to window 2, inner self legs.  Self arcs wrap the middle disk.
        if (window == 0) {
            if (pos < p3) return {2, p3 - 1 - pos};
            if (pos < p3 + r.s1) return {0, p1 - 1 - (pos - p3)};
            if (pos < p3 + r.s1 + p2) return {1, p2 - 1 - (pos - p3 - r.s1)};
            return {0, p3 + (p1 - 1 - pos)};
        }
        if (window == 1) return {0, p3 + r.s1 + (p2 - 1 - pos)};
        return {0, p3 - 1 - pos};
    }
    if (r.s2 > 0) {
        if (window == 1) {
            if (pos < p1) return {0, p1 - 1 - pos};
            if (pos < p1 + r.s2) return {1, p2 - 1 - (pos - p1)};
            if (pos < p1 + r.s2 + p3) return {2, p3 - 1 - (pos - p1 - r.s2)};
            return {1, p1 + (p2 - 1 - pos)};
        }
        if (window == 0) return {1, p1 - 1 - pos};
        return {1, p1 + r.s2 + (p3 - 1 - pos)};
    }
    if (r.s3 > 0) {
        // Mirror image of the s1 layout: inner self legs, block to window 2,
        // outer self legs, block to window 1.
        if (window == 2) {
            if (pos < r.s3) return {2, 2 * r.s3 + p2 - 1 - pos};
            if (pos < r.s3 + p2) return {1, p2 - 1 - (pos - r.s3)};
            if (pos < 2 * r.s3 + p2) return {2, 2 * r.s3 + p2 - 1 - pos};
            return {0, p1 - 1 - (pos - 2 * r.s3 - p2)};
        }
        if (window == 0) return {2, 2 * r.s3 + p2 + (p1 - 1 - pos)};
        return {2, r.s3 + (p2 - 1 - pos)};
    }
    // No same-window arcs: nested blocks per pair of windows.
    if (window == 0) {
        if (pos < r.m13) return {2, p3 - 1 - pos};
        return {1, r.m12 - 1 - (pos - r.m13)};
    }
    if (window == 1) {
        if (pos < r.m12) return {0, r.m13 + (r.m12 - 1 - pos)};
        return {2, r.m23 - 1 - (pos - r.m12)};
    }
    if (pos < r.m23) return {1, r.m12 + (r.m23 - 1 - pos)};
    return {0, r.m13 - 1 - (pos - r.m23)};
}

namespace {

// Disk-side partner of window position x: another window position (via a
// chord) or a puncture end.  Valid for even k >= 2.
int disk_partner_of(int k, int q, int x) {
    const int n = (k - 2) / 2;
    const int s = slot_of(k, q, x);
    if (s == 0) return LEFT_END;
    if (s == n + 1) return RIGHT_END;
    const int mate_slot = k - s; // chord bottom <-> top
    // Invert the cable map: y + q == mate_slot (mod k) with y in [0,k).
    int y = (mate_slot - q) % k;
    if (y < 0) y += k;
    return y;
}

std::vector<std::pair<int, int>> disk_matching(int k, int q) {
    std::vector<std::pair<int, int>> pairs;
    if (k == 0) {
        pairs.emplace_back(RIGHT_END, LEFT_END);
    } else {
        std::vector<bool> done(static_cast<std::size_t>(k), false);
        for (int x = 0; x < k; ++x) {
            if (done[static_cast<std::size_t>(x)]) continue;
            int mate = disk_partner_of(k, q, x);
            done[static_cast<std::size_t>(x)] = true;
            if (mate >= 0) done[static_cast<std::size_t>(mate)] = true;
            pairs.emplace_back(std::min(x, mate), std::max(x, mate));
        }
    }
    std::sort(pairs.begin(), pairs.end());
    return pairs;
}

} // namespace

ArcSystem realize(const DehnCoordinate& c) {
    c.require_valid();

    ArcSystem s;
    s.dehn = c;
    s.routing = route_pants(c.p);

    for (int b = 0; b < 3; ++b) {
        if (c.p[b] % 2 != 0)
            throw ComponentCountError("window " + std::to_string(b + 1) + " of " + c.compact() +
                                      " has odd count " + std::to_string(c.p[b]) +
                                      "; no three-arc matching exists");
        s.disks[b].disk = b;
        s.disks[b].k = c.p[b];
        s.disks[b].q = c.q[b];
        s.disks[b].matching = disk_matching(c.p[b], c.q[b]);
    }

    // Trace components.  Each window dot has one outer-region link and one
    // disk-side link; each puncture has one disk-side link.  Walking from a
    // puncture alternates the two link kinds until another puncture is hit.
    std::array<std::vector<int>, 3> comp_of; // -1 = not visited yet
    for (int b = 0; b < 3; ++b) comp_of[b].assign(static_cast<std::size_t>(c.p[b]), -1);

    std::array<int, 6> puncture_comp;
    puncture_comp.fill(-1);
    std::array<std::pair<int, int>, 3> comp_ends{};
    int ncomp = 0;

    auto arm_position = [&](int b, int end) -> int {
        // Window dot whose slot is the stem of the given puncture.
        const int k = c.p[b];
        const int n = (k - 2) / 2;
        const int target = end == LEFT_END ? 0 : n + 1;
        int y = (target - c.q[b]) % k;
        if (y < 0) y += k;
        return y;
    };

    for (int pn = 1; pn <= 6; ++pn) {
        if (puncture_comp[pn - 1] != -1) continue;
        const int comp = ncomp++;
        if (comp > 2)
            throw ComponentCountError("tracing " + c.compact() + " produced more than three arcs");
        puncture_comp[pn - 1] = comp;

        int b = (pn - 1) / 2;
        const int my_end = (pn % 2 == 1) ? LEFT_END : RIGHT_END;
        int terminal;
        if (c.p[b] == 0) {
            terminal = 2 * b + (my_end == LEFT_END ? 2 : 1); // the disk's other puncture
        } else {
            int x = arm_position(b, my_end);
            for (;;) {
                comp_of[b][static_cast<std::size_t>(x)] = comp;
                auto [b2, x2] = pants_partner(s.routing, c.p, b, x);
                comp_of[b2][static_cast<std::size_t>(x2)] = comp;
                int mate = disk_partner_of(c.p[b2], c.q[b2], x2);
                if (mate < 0) {
                    terminal = 2 * b2 + (mate == LEFT_END ? 1 : 2);
                    break;
                }
                b = b2;
                x = mate;
            }
        }
        if (puncture_comp[terminal - 1] != -1)
            throw ComponentCountError("tracing " + c.compact() +
                                      " connected puncture " + std::to_string(terminal) + " twice");
        puncture_comp[terminal - 1] = comp;
        comp_ends[comp] = {std::min(pn, terminal), std::max(pn, terminal)};
    }

    for (int b = 0; b < 3; ++b)
        for (int x = 0; x < c.p[b]; ++x)
            if (comp_of[b][static_cast<std::size_t>(x)] == -1)
                throw ClosedComponentError("tracing " + c.compact() +
                                           " left a closed loop through window " +
                                           std::to_string(b + 1) + " position " + std::to_string(x));

    // Assign labels 1..3 from the endpoint rule.
    std::array<int, 3> label_of_comp{};
    const int comp1 = puncture_comp[0]; // arc through puncture 1
    label_of_comp[comp1] = 1;
    const int far_end = comp_ends[comp1].second;
    const int second_seed = (far_end == 2) ? 3 : 2;
    const int comp2 = puncture_comp[second_seed - 1];
    label_of_comp[comp2] = 2;
    for (int comp = 0; comp < 3; ++comp)
        if (comp != comp1 && comp != comp2) label_of_comp[comp] = 3;

    for (int comp = 0; comp < 3; ++comp)
        s.endpoints[label_of_comp[comp] - 1] = comp_ends[comp];
    for (int b = 0; b < 3; ++b) {
        s.words[b].resize(static_cast<std::size_t>(c.p[b]));
        for (int x = 0; x < c.p[b]; ++x)
            s.words[b][static_cast<std::size_t>(x)] =
                label_of_comp[comp_of[b][static_cast<std::size_t>(x)]];
    }
    return s;
}

DehnCoordinate dehn_of(const ArcSystem& s) { return s.dehn; }

int weight(const ArcSystem& s, int window) {
    if (window == 0) return s.dehn.weight();
    return s.dehn.p[window - 1];
}

std::string arc_system_json(const ArcSystem& s) {
    nlohmann::json j;
    j["dehn"] = nlohmann::json::parse(s.dehn.json());
    j["routing"] = {{"m12", s.routing.m12}, {"m13", s.routing.m13}, {"m23", s.routing.m23},
                    {"s1", s.routing.s1},   {"s2", s.routing.s2},   {"s3", s.routing.s3}};
    j["disks"] = nlohmann::json::array();
    for (const auto& d : s.disks) {
        nlohmann::json jd;
        jd["disk"] = d.disk + 1;
        jd["window_size"] = d.k;
        jd["twist"] = d.twist();
        jd["offset"] = d.offset();
        jd["matching"] = nlohmann::json::array();
        for (const auto& [a, b] : d.matching) jd["matching"].push_back({a, b});
        j["disks"].push_back(jd);
    }
    j["endpoints"] = nlohmann::json::array();
    for (const auto& [a, b] : s.endpoints) j["endpoints"].push_back({a, b});
    j["words"] = s.words;
    return j.dump();
}

} // namespace tangle

#include "tangle/checks.hpp"

#include "tangle/errors.hpp"
#include "tangle/jump_moves.hpp"
#include "tangle/minimization.hpp"
#include "tangle/oracle.hpp"
#include "tangle/surface_model.hpp"

#include <algorithm>
#include <array>
#include <set>
#include <vector>

namespace tangle {

namespace {

bool cyclic_equal(const std::vector<int>& a, const std::vector<int>& b) {
    if (a.size() != b.size()) return false;
    if (a.empty()) return true;
    for (size_t shift = 0; shift < a.size(); ++shift) {
        bool match = true;
        for (size_t i = 0; i < a.size() && match; ++i)
            if (a[i] != b[(i + shift) % b.size()]) match = false;
        if (match) return true;
    }
    return false;
}

} // namespace

std::vector<CheckResult> run_corpus_checks(int bound, int qbound) {
    CheckResult unique_desc{"unique_descending_replacement"};
    CheckResult comp_bound{"completion_bound"};
    CheckResult std_pairs{"standard_pair_symmetry"};
    CheckResult predict{"window_word_prediction"};
    CheckResult double_up{"double_replacement_growth"};
    CheckResult chained{"chained_second_moves"};
    CheckResult min_second{"second_moves_at_minimal"};
    CheckResult shift_pair{"twist_shift_pair"};
    CheckResult empty_balance{"empty_window_balance"};

    for (const DehnCoordinate& c : enumerate_normal(bound, qbound)) {
        ArcSystem s = realize(c);
        std::vector<JumpNeighbor> ns = neighbors(s);

        ++unique_desc.sites;
        int down = 0;
        for (const JumpNeighbor& n : ns)
            if (n.result.p[0] < c.p[0]) ++down;
        if (down > 1) ++unique_desc.violations;

        for (int arc = 1; arc <= 3; ++arc) {
            std::vector<DehnCoordinate> comp = completions(s, arc);
            ++comp_bound.sites;
            if (comp.size() > 3) ++comp_bound.violations;
            if (comp.size() == 3) {
                ++double_up.sites;
                for (const DehnCoordinate& t : comp)
                    if (!(t == c) && t.p[0] <= c.p[0]) {
                        ++double_up.violations;
                        break;
                    }
            }
        }

        for (const JumpNeighbor& n : ns) {
            ArcSystem t = realize(n.result);
            if (n.variant == MoveVariant::Standard) {
                ++std_pairs.sites;
                bool mirrored = false;
                for (const JumpNeighbor& back : neighbors(t))
                    if (back.arc == n.arc && back.result == c &&
                        back.variant == MoveVariant::Standard)
                        mirrored = true;
                if (!mirrored) ++std_pairs.violations;
            } else {
                ++chained.sites;
                for (const JumpNeighbor& onward : neighbors(t))
                    if (onward.arc != n.arc && onward.variant == MoveVariant::Second) {
                        ++chained.violations;
                        break;
                    }
            }
            if (!same_window_pattern(s, t)) {
                ++predict.sites;
                std::array<std::vector<int>, 3> want = predict_window_words(s, n.arc);
                bool ok = true;
                for (int w = 0; w < 3; ++w)
                    if (!cyclic_equal(want[w], t.words[w])) ok = false;
                if (!ok) ++predict.violations;
            }
        }

        if (down != 0) continue;

        ++min_second.sites;
        for (const JumpNeighbor& n : ns)
            if (n.variant == MoveVariant::Second) {
                ++min_second.violations;
                break;
            }

        if (c.p[0] == 0) {
            if (c.p[1] > 0 || c.p[2] > 0) {
                ++empty_balance.sites;
                Plateau pl = plateau(s, 4, 64);
                int ref = pl.members[0].q[1] + pl.members[0].q[2];
                for (const DehnCoordinate& m : pl.members)
                    if (m.p[1] != m.p[2] || m.q[1] + m.q[2] != ref) {
                        ++empty_balance.violations;
                        break;
                    }
            }
        } else if (c.p[1] > 0 && c.p[2] > 0) {
            EqualityProfile prof = equality_profile(s);
            if (prof.equal[0] + prof.equal[1] + prof.equal[2] == 2) {
                int strict_arc = !prof.equal[0] ? 1 : (!prof.equal[1] ? 2 : 3);
                bool meets = false;
                for (int x : s.words[0])
                    if (x == strict_arc) meets = true;
                if (!meets) {
                    ++shift_pair.sites;
                    std::set<int> plus_arcs, minus_arcs;
                    for (const JumpNeighbor& n : ns) {
                        if (n.result.p[0] != c.p[0]) continue;
                        if (n.result.q[0] == c.q[0] + 1) plus_arcs.insert(n.arc);
                        if (n.result.q[0] == c.q[0] - 1) minus_arcs.insert(n.arc);
                    }
                    bool distinct = false;
                    for (int a : plus_arcs)
                        for (int b : minus_arcs)
                            if (a != b) distinct = true;
                    if (!distinct) ++shift_pair.violations;
                }
            }
        }
    }

    return {unique_desc, comp_bound, std_pairs,  predict,    double_up,
            chained,     min_second, shift_pair, empty_balance};
}

CheckResult run_completion_agreement(int bound, int qbound, int extra, int brute_q) {
    CheckResult agree{"completion_agreement"};
    for (const DehnCoordinate& c : enumerate_normal(bound, qbound)) {
        ArcSystem s = realize(c);
        for (int arc = 1; arc <= 3; ++arc) {
            ++agree.sites;
            if (completions(s, arc) != brute_completions(s, arc, extra, brute_q))
                ++agree.violations;
        }
    }
    return agree;
}

} // namespace tangle

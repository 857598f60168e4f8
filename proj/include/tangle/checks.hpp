#pragma once

#include <string>
#include <vector>

namespace tangle {

// One desk-scale verification over an enumerated family of systems:
// `sites` counts the instances where the claim's hypothesis held, and
// `violations` counts those contradicting its conclusion.
struct CheckResult {
    std::string name;
    long long sites = 0;
    long long violations = 0;

    bool pass() const { return violations == 0; }
};

// Runs the per-claim checks over every normal system with total crossing
// weight <= bound and |q_i| <= qbound:
//   unique_descending_replacement  at most one weight-reducing move anywhere
//   completion_bound               at most three completions per arc
//   standard_pair_symmetry         standard moves pair up symmetrically
//   window_word_prediction         pattern-changing moves match the local
//                                  rewriting rules
//   double_replacement_growth      both moves of a doubly-movable arc raise
//                                  the first-window weight
//   chained_second_moves           a second-variant move is never followed
//                                  by one at a different arc
//   second_moves_at_minimal        minimal systems carry no second-variant
//                                  moves
//   twist_shift_pair               at minimal systems with two level arcs
//                                  whose strict arc avoids window 1, two
//                                  distinct arcs shift q1 by +1 and -1
//   empty_window_balance           at minimal systems with an empty first
//                                  window, every same-level system keeps
//                                  p2 = p3 and the same q2 + q3
std::vector<CheckResult> run_corpus_checks(int bound, int qbound);

// Cross-validates the fast completion search against the enumeration-based
// reference on every (system, arc) pair of the same family.  `extra` and
// `brute_q` widen the reference's search box; they must comfortably cover
// the completions' coordinates.
CheckResult run_completion_agreement(int bound, int qbound, int extra, int brute_q);

} // namespace tangle

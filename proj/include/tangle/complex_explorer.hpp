#pragma once

#include "tangle/coordinate.hpp"

#include <string>
#include <utility>
#include <vector>

namespace tangle {

// A radius-bounded ball of the replacement-move graph around one seed:
// every normal system reachable in at most `radius` moves, with all moves
// among the discovered systems as edges.
struct NormalComplexGraph {
    std::vector<DehnCoordinate> vertices;                          // sorted
    std::vector<std::pair<DehnCoordinate, DehnCoordinate>> edges;  // a < b, sorted
    DehnCoordinate seed;
    int radius = 0;
};

// Breadth-first exploration from `seed`.  Deterministic: the result depends
// only on (seed, radius).  Throws NotNormal when the realized seed is not
// normal, InvalidCoordinate when it is not realizable at all.
NormalComplexGraph explore(const DehnCoordinate& seed, int radius);

// True iff the graph is connected and has exactly |vertices| - 1 edges.
bool is_tree(const NormalComplexGraph& g);

// Deterministic DOT text: one node per vertex labelled by its coordinate,
// the seed drawn bold, vertices of least first-window weight annotated with
// that weight, and one undirected edge per move.
std::string export_dot(const NormalComplexGraph& g);

} // namespace tangle

#include "tangle/complex_explorer.hpp"

#include "tangle/errors.hpp"
#include "tangle/jump_moves.hpp"
#include "tangle/normal_form.hpp"
#include "tangle/surface_model.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

namespace tangle {

NormalComplexGraph explore(const DehnCoordinate& seed, int radius) {
    ArcSystem start = realize(seed);
    if (!is_normal(start))
        throw NotNormal("explore needs a normal seed, got " + seed.compact());

    NormalComplexGraph g;
    g.seed = seed;
    g.radius = radius;

    std::map<DehnCoordinate, std::vector<DehnCoordinate>> adjacent;
    std::set<DehnCoordinate> known{seed};
    std::vector<DehnCoordinate> frontier{seed};
    for (int depth = 0; depth < radius && !frontier.empty(); ++depth) {
        std::vector<DehnCoordinate> next;
        for (const DehnCoordinate& v : frontier) {
            for (const JumpNeighbor& n : neighbors(realize(v))) {
                adjacent[v].push_back(n.result);
                if (known.insert(n.result).second) next.push_back(n.result);
            }
        }
        frontier = std::move(next);
    }
    // The deepest shell's own moves were never expanded; count the edges
    // they contribute among already-known vertices.
    for (const DehnCoordinate& v : frontier)
        for (const JumpNeighbor& n : neighbors(realize(v)))
            if (known.count(n.result)) adjacent[v].push_back(n.result);

    g.vertices.assign(known.begin(), known.end());
    std::set<std::pair<DehnCoordinate, DehnCoordinate>> edges;
    for (const auto& [v, outs] : adjacent)
        for (const DehnCoordinate& w : outs)
            if (known.count(w) && !(w == v)) edges.insert(v < w ? std::make_pair(v, w)
                                                                : std::make_pair(w, v));
    g.edges.assign(edges.begin(), edges.end());
    return g;
}

bool is_tree(const NormalComplexGraph& g) {
    if (g.vertices.empty()) return false;
    if (g.edges.size() != g.vertices.size() - 1) return false;
    std::map<DehnCoordinate, std::vector<const DehnCoordinate*>> adj;
    for (const auto& [a, b] : g.edges) {
        adj[a].push_back(&b);
        adj[b].push_back(&a);
    }
    std::set<DehnCoordinate> seen{g.vertices.front()};
    std::vector<DehnCoordinate> queue{g.vertices.front()};
    while (!queue.empty()) {
        DehnCoordinate v = queue.back();
        queue.pop_back();
        for (const DehnCoordinate* w : adj[v])
            if (seen.insert(*w).second) queue.push_back(*w);
    }
    return seen.size() == g.vertices.size();
}

std::string export_dot(const NormalComplexGraph& g) {
    int least = 0;
    if (!g.vertices.empty()) {
        least = g.vertices.front().p[0];
        for (const DehnCoordinate& v : g.vertices) least = std::min(least, v.p[0]);
    }
    std::ostringstream out;
    out << "graph normal_complex {\n";
    out << "  graph [label=\"seed (" << g.seed.compact() << "), radius " << g.radius
        << "\"];\n";
    for (const DehnCoordinate& v : g.vertices) {
        out << "  \"" << v.compact() << "\"";
        std::vector<std::string> attrs;
        if (v == g.seed) attrs.push_back("style=bold");
        if (v.p[0] == least)
            attrs.push_back("label=\"" + v.compact() + "\\nweight1=" + std::to_string(least) +
                            "\"");
        if (!attrs.empty()) {
            out << " [" << attrs[0];
            for (size_t i = 1; i < attrs.size(); ++i) out << ", " << attrs[i];
            out << "]";
        }
        out << ";\n";
    }
    for (const auto& [a, b] : g.edges)
        out << "  \"" << a.compact() << "\" -- \"" << b.compact() << "\";\n";
    out << "}\n";
    return out.str();
}

} // namespace tangle

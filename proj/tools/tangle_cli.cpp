// Command-line front end: validation, normalization, minimization, canonical
// representatives, equivalence checks, neighbor listings, graph exploration,
// random sampling, and corpus verification runs.
//
// Exit codes: 0 success (equiv: equivalent), 1 equiv: not equivalent,
// 2 invalid input or misuse, 3 structural tripwire (the model's own
// assumptions failed on this input; see stderr for details).
#include "tangle/canonical_rep.hpp"
#include "tangle/checks.hpp"
#include "tangle/complex_explorer.hpp"
#include "tangle/coordinate.hpp"
#include "tangle/errors.hpp"
#include "tangle/jump_moves.hpp"
#include "tangle/minimization.hpp"
#include "tangle/normal_form.hpp"
#include "tangle/oracle.hpp"
#include "tangle/surface_model.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <string>
#include <vector>

namespace {

using nlohmann::ordered_json;
using namespace tangle;

// Coordinates travel through JSON as the flat interleaved sextuple.
ordered_json flat(const DehnCoordinate& c) {
    return ordered_json::array({c.p[0], c.q[0], c.p[1], c.q[1], c.p[2], c.q[2]});
}

void emit(const ordered_json& out) { std::printf("%s\n", out.dump().c_str()); }

int fail(const char* kind, const std::string& detail, int code) {
    ordered_json err;
    err["error"] = kind;
    err["detail"] = detail;
    std::fprintf(stderr, "%s\n", err.dump().c_str());
    return code;
}

int cmd_validate(const std::string& text) {
    DehnCoordinate c = parse_coordinate(text);
    c.require_valid();
    ArcSystem s = realize(c); // throws InvalidCoordinate when unrealizable
    ordered_json out;
    out["coordinate"] = flat(c);
    out["valid"] = true;
    out["normal"] = is_normal(s);
    emit(out);
    return 0;
}

int cmd_normalize(const std::string& text) {
    DehnCoordinate c = parse_coordinate(text);
    int steps = 0;
    ArcSystem n = normalize(realize(c), &steps);
    ordered_json out;
    out["input"] = flat(c);
    out["normal"] = flat(n.dehn);
    out["steps"] = steps;
    emit(out);
    return 0;
}

int cmd_minimize(const std::string& text) {
    DehnCoordinate c = parse_coordinate(text);
    ArcSystem m = descend_E1(normalize(realize(c)));
    ordered_json out;
    out["input"] = flat(c);
    out["minimal"] = flat(m.dehn);
    out["weight1"] = m.dehn.p[0];
    emit(out);
    return 0;
}

int cmd_rep(const std::string& text) {
    DehnCoordinate c = parse_coordinate(text);
    RepresentativeReport r = representative(realize(c));
    ordered_json out;
    out["input"] = flat(c);
    out["representative"] = flat(r.representative);
    out["branch"] = branch_name(r.branch);
    if (r.branch == SelectionBranch::EmptyWindow) {
        out["empty_window"] = r.empty_window;
        out["empty_q_sum"] = r.empty_q_sum;
    }
    out["plateau_size"] = r.plateau_size;
    out["unique_by_rule"] = r.unique_by_rule;
    emit(out);
    if (!r.unique_by_rule)
        return fail("tripwire",
                    "selection rules left several candidates; the lexicographic "
                    "tie-break chose " + r.representative.compact(),
                    3);
    return 0;
}

int cmd_equiv(const std::string& ta, const std::string& tb) {
    DehnCoordinate a = parse_coordinate(ta);
    DehnCoordinate b = parse_coordinate(tb);
    RepresentativeReport ra = representative(realize(a));
    RepresentativeReport rb = representative(realize(b));
    bool same = ra.representative == rb.representative;
    ordered_json out;
    out["first"] = flat(a);
    out["second"] = flat(b);
    out["equivalent"] = same;
    out["first_representative"] = flat(ra.representative);
    out["second_representative"] = flat(rb.representative);
    emit(out);
    return same ? 0 : 1;
}

int cmd_neighbors(const std::string& text) {
    DehnCoordinate c = parse_coordinate(text);
    ArcSystem s = realize(c);
    if (!is_normal(s)) throw NotNormal("neighbors need a normal system; normalize first");
    ordered_json list = ordered_json::array();
    for (const JumpNeighbor& n : neighbors(s)) {
        ordered_json e;
        e["arc"] = n.arc;
        e["variant"] = n.variant == MoveVariant::Standard ? "standard" : "second";
        e["result"] = flat(n.result);
        list.push_back(e);
    }
    ordered_json out;
    out["coordinate"] = flat(c);
    out["neighbors"] = list;
    emit(out);
    return 0;
}

int cmd_explore(const std::string& text, int radius, const std::string& dot_path,
                const std::string& json_path) {
    DehnCoordinate c = parse_coordinate(text);
    NormalComplexGraph g = explore(c, radius);
    bool tree = is_tree(g);
    if (!dot_path.empty()) {
        std::ofstream f(dot_path);
        if (!f) return fail("io", "cannot write " + dot_path, 2);
        f << export_dot(g);
    }
    if (!json_path.empty()) {
        ordered_json full;
        full["seed"] = flat(g.seed);
        full["radius"] = g.radius;
        ordered_json vs = ordered_json::array();
        for (const DehnCoordinate& v : g.vertices) vs.push_back(flat(v));
        full["vertices"] = vs;
        ordered_json es = ordered_json::array();
        for (const auto& [a, b] : g.edges) es.push_back(ordered_json::array({flat(a), flat(b)}));
        full["edges"] = es;
        full["tree"] = tree;
        std::ofstream f(json_path);
        if (!f) return fail("io", "cannot write " + json_path, 2);
        f << full.dump() << "\n";
    }
    ordered_json out;
    out["seed"] = flat(g.seed);
    out["radius"] = g.radius;
    out["vertices"] = g.vertices.size();
    out["edges"] = g.edges.size();
    out["tree"] = tree;
    emit(out);
    if (!tree)
        return fail("tripwire",
                    "explored ball contains a cycle: " + std::to_string(g.edges.size()) +
                        " edges on " + std::to_string(g.vertices.size()) + " vertices",
                    3);
    return 0;
}

int cmd_random(int bound, int qbound, int count, unsigned long long seed) {
    ordered_json coords = ordered_json::array();
    for (const DehnCoordinate& c : sample_valid(bound, qbound, count, seed))
        coords.push_back(flat(c));
    ordered_json out;
    out["bound"] = bound;
    out["qbound"] = qbound;
    out["count"] = count;
    out["seed"] = seed;
    out["coordinates"] = coords;
    emit(out);
    return 0;
}

int cmd_corpus_run(int bound, int qbound, const std::string& report_path) {
    std::vector<CheckResult> results = run_corpus_checks(bound, qbound);
    ordered_json checks = ordered_json::array();
    bool all = true;
    for (const CheckResult& r : results) {
        ordered_json e;
        e["name"] = r.name;
        e["sites"] = r.sites;
        e["violations"] = r.violations;
        e["pass"] = r.pass();
        checks.push_back(e);
        all = all && r.pass();
    }
    ordered_json report;
    report["bound"] = bound;
    report["qbound"] = qbound;
    report["checks"] = checks;
    report["all_pass"] = all;
    std::ofstream f(report_path);
    if (!f) return fail("io", "cannot write " + report_path, 2);
    f << report.dump(2) << "\n";
    f.close();
    ordered_json out;
    out["report"] = report_path;
    out["checks"] = results.size();
    out["all_pass"] = all;
    emit(out);
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"rational 3-tangle coordinates: canonical representatives and "
                 "replacement-move exploration"};
    app.require_subcommand(1);

    std::string c1, c2, dot_path, json_path, report_path;
    int radius = 3, bound = 8, qbound = 3, count = 10;
    unsigned long long seed = 42;

    CLI::App* validate = app.add_subcommand("validate", "check a coordinate");
    validate->add_option("coordinate", c1)->required();

    CLI::App* normalize = app.add_subcommand("normalize", "remove adjacent equal crossings");
    normalize->add_option("coordinate", c1)->required();

    CLI::App* minimize = app.add_subcommand("minimize", "descend to least first-window weight");
    minimize->add_option("coordinate", c1)->required();

    CLI::App* rep = app.add_subcommand("rep", "canonical representative");
    rep->add_option("coordinate", c1)->required();

    CLI::App* equiv = app.add_subcommand("equiv", "decide isotopy equivalence");
    equiv->add_option("first", c1)->required();
    equiv->add_option("second", c2)->required();

    CLI::App* neigh = app.add_subcommand("neighbors", "list replacement moves");
    neigh->add_option("coordinate", c1)->required();

    CLI::App* explore = app.add_subcommand("explore", "breadth-first ball of the move graph");
    explore->add_option("coordinate", c1)->required();
    explore->add_option("--radius", radius, "ball radius")->capture_default_str();
    explore->add_option("--dot", dot_path, "write DOT graph here");
    explore->add_option("--json", json_path, "write full graph JSON here");

    CLI::App* random = app.add_subcommand("random", "sample valid coordinates");
    random->add_option("--bound", bound, "max total crossing weight")->capture_default_str();
    random->add_option("--qbound", qbound, "max |q_i|")->capture_default_str();
    random->add_option("--count", count, "how many")->capture_default_str();
    random->add_option("--seed", seed, "rng seed")->capture_default_str();

    CLI::App* corpus = app.add_subcommand("corpus", "corpus verification");
    CLI::App* corpus_run = corpus->add_subcommand("run", "run every check, write a report");
    corpus_run->add_option("--bound", bound, "max total crossing weight")->capture_default_str();
    corpus_run->add_option("--qbound", qbound, "max |q_i|")->capture_default_str();
    corpus_run->add_option("--report", report_path, "report JSON path")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e); // --help and friends
        app.exit(e);
        return 2;
    }

    try {
        if (validate->parsed()) return cmd_validate(c1);
        if (normalize->parsed()) return cmd_normalize(c1);
        if (minimize->parsed()) return cmd_minimize(c1);
        if (rep->parsed()) return cmd_rep(c1);
        if (equiv->parsed()) return cmd_equiv(c1, c2);
        if (neigh->parsed()) return cmd_neighbors(c1);
        if (explore->parsed()) return cmd_explore(c1, radius, dot_path, json_path);
        if (random->parsed()) return cmd_random(bound, qbound, count, seed);
        if (corpus->parsed()) {
            if (!corpus_run->parsed()) return fail("usage", "expected: corpus run", 2);
            return cmd_corpus_run(bound, qbound, report_path);
        }
        return fail("usage", "unknown command", 2);
    } catch (const TripwireError& e) {
        return fail("tripwire", e.what(), 3);
    } catch (const InvalidCoordinate& e) {
        return fail("invalid_coordinate", e.what(), 2);
    } catch (const UsageError& e) {
        return fail("usage", e.what(), 2);
    } catch (const Error& e) {
        return fail("internal", e.what(), 2);
    }
}

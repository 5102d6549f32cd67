#pragma once

// Command dispatch for the varchenko tool. Parsing of argv lives in the
// executable; everything here writes to the given streams and returns an
// exit status.

#include <chrono>
#include <cstdio>
#include <cstddef>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include <json.hpp>

#include "varchenko/appendix.hpp"
#include "varchenko/graph.hpp"
#include "varchenko/io.hpp"
#include "varchenko/oriented_complex.hpp"
#include "varchenko/partial_cube.hpp"
#include "varchenko/pc_minor.hpp"
#include "varchenko/polynomial.hpp"
#include "varchenko/varchenko.hpp"

namespace varchenko::cli {

enum ExitCode : int { ok = 0, mismatch = 1, unreadable = 2, not_a_partial_cube = 3, usage = 4 };

struct RunConfig {
    std::string command;
    std::optional<std::string> graph_file;
    std::optional<std::string> generator;
    std::optional<std::string> covector_file;
    bool json = false;
    std::optional<std::vector<std::size_t>> class_perm;
    std::optional<std::vector<Vertex>> vertex_perm;
    bool extended = false;
    bool exact = false;
    std::optional<std::string> expect;
    DeterminantMethod method = DeterminantMethod::automatic;
};

inline const std::vector<std::string>& commands() {
    static const std::vector<std::string> names = {"generate", "check-pc", "classes",   "matrix",
                                                   "det",      "factor",   "minors",    "com-check",
                                                   "reproduce-appendix"};
    return names;
}

namespace detail {

using nlohmann::json;

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

inline Graph load_graph(const RunConfig& cfg) {
    if (cfg.graph_file && cfg.generator) throw UsageError("give either --graph or --generate, not both");
    if (cfg.graph_file) return io::read_edge_list(*cfg.graph_file);
    if (cfg.generator) return io::generate(*cfg.generator);
    throw UsageError("a graph is required: --graph FILE or --generate SPEC");
}

inline PartialCubeStructure load_structure(const RunConfig& cfg) { return require_partial_cube(load_graph(cfg)); }

inline std::vector<std::size_t> class_names(const RunConfig& cfg, const PartialCubeStructure& s) {
    return cfg.class_perm ? *cfg.class_perm : identity_permutation(s.n_classes());
}

inline VarchenkoMatrix load_matrix(const RunConfig& cfg) {
    auto s = load_structure(cfg);
    auto order = cfg.vertex_perm ? *cfg.vertex_perm : identity_permutation(s.n_vertices());
    auto names = class_names(cfg, s);
    return build_matrix(s, std::move(order), std::move(names));
}

inline json edges_json(const std::vector<Edge>& es) {
    json out = json::array();
    for (auto [u, v] : es) out.push_back({u, v});
    return out;
}

inline json report_json(const FactorizationReport& r) {
    json factors = json::array();
    for (const auto& f : r.factors) factors.push_back({{"classes", f.classes}, {"exponent", f.exponent}});
    return {{"factors", factors}, {"residual", to_canonical_string(r.residual)}, {"clean", r.clean}};
}

inline std::string ops_string(const std::vector<MinorOp>& ops) {
    if (ops.empty()) return "(none)";
    std::string s;
    for (const auto& op : ops) s += (s.empty() ? "" : " ") + to_string(op);
    return s;
}

inline int cmd_generate(const RunConfig& cfg, std::ostream& out) {
    if (!cfg.generator) throw UsageError("generate needs --generate SPEC");
    const Graph g = io::generate(*cfg.generator);
    if (cfg.json) {
        out << json{{"n_vertices", g.n_vertices()}, {"edges", edges_json(g.edges())}}.dump() << "\n";
    } else {
        out << io::format_edge_list(g);
    }
    return ok;
}

inline int cmd_check_pc(const RunConfig& cfg, std::ostream& out) {
    const Graph g = load_graph(cfg);
    auto r = build_structure(g);
    if (auto* f = std::get_if<RecognitionFailure>(&r)) {
        if (cfg.json) {
            out << json{{"partial_cube", false},
                        {"reason", to_string(f->reason)},
                        {"message", f->message},
                        {"witness", {f->witness.first, f->witness.second}}}
                       .dump()
                << "\n";
        } else {
            out << "not a partial cube: " << to_string(f->reason) << "\n" << f->message << "\n";
        }
        return not_a_partial_cube;
    }
    const auto& s = std::get<PartialCubeStructure>(r);
    if (cfg.json) {
        out << json{{"partial_cube", true}, {"n_vertices", s.n_vertices()}, {"n_classes", s.n_classes()}}.dump() << "\n";
    } else {
        out << "partial cube: " << s.n_vertices() << " vertices, " << s.graph().n_edges() << " edges, "
            << s.n_classes() << " classes\n";
    }
    return ok;
}

inline int cmd_classes(const RunConfig& cfg, std::ostream& out) {
    const auto s = load_structure(cfg);
    if (cfg.json) {
        json classes = json::array();
        for (ClassIndex c = 0; c < s.n_classes(); ++c)
            classes.push_back({{"index", c},
                               {"edges", edges_json(s.class_edges(c))},
                               {"minus", s.minus_side(c)},
                               {"plus", s.plus_side(c)}});
        json labels = json::array();
        for (Vertex v = 0; v < s.n_vertices(); ++v) labels.push_back(s.label(v));
        out << json{{"n_vertices", s.n_vertices()}, {"n_classes", s.n_classes()}, {"classes", classes}, {"labels", labels}}
                   .dump()
            << "\n";
        return ok;
    }
    for (ClassIndex c = 0; c < s.n_classes(); ++c) {
        out << "class " << c << ": |E-|=" << s.minus_side(c).size() << " |E+|=" << s.plus_side(c).size() << " edges";
        for (auto [u, v] : s.class_edges(c)) out << " " << u << "-" << v;
        out << "\n";
    }
    return ok;
}

inline int cmd_matrix(const RunConfig& cfg, std::ostream& out) {
    const auto m = load_matrix(cfg);
    std::vector<std::vector<std::string>> rows(m.size());
    for (std::size_t i = 0; i < m.size(); ++i)
        for (std::size_t j = 0; j < m.size(); ++j) rows[i].push_back(to_canonical_string(m(i, j)));
    if (cfg.json) {
        out << json{{"size", m.size()}, {"vertex_order", m.vertex_order()}, {"entries", rows}}.dump() << "\n";
        return ok;
    }
    for (const auto& row : rows) {
        for (std::size_t j = 0; j < row.size(); ++j) out << (j ? "; " : "") << row[j];
        out << "\n";
    }
    return ok;
}

inline int cmd_det(const RunConfig& cfg, std::ostream& out) {
    const auto d = determinant(load_matrix(cfg), cfg.method);
    if (cfg.json) {
        out << json{{"determinant", to_canonical_string(d)}}.dump() << "\n";
    } else {
        out << to_canonical_string(d) << "\n";
    }
    return ok;
}

inline int cmd_factor(const RunConfig& cfg, std::ostream& out) {
    const auto m = load_matrix(cfg);
    const auto r = factorize(determinant(m, cfg.method));
    const std::string text = to_factored_string(r);
    if (cfg.json) {
        auto j = report_json(r);
        j["factored"] = text;
        out << j.dump() << "\n";
    } else {
        out << text << "\n" << (r.clean ? "clean" : "not clean") << "\n";
    }
    if (cfg.expect) {
        const auto expected = parse_factored_string(*cfg.expect, m.n_vars());
        if (!same_factors(r, expected)) {
            out << "MISMATCH: expected " << to_factored_string(expected) << "\n";
            return mismatch;
        }
        if (!cfg.json) out << "matches expected\n";
    }
    return ok;
}

inline int cmd_minors(const RunConfig& cfg, std::ostream& out) {
    const auto minors = pc_minors(load_structure(cfg));
    if (cfg.json) {
        json list = json::array();
        for (const auto& mc : minors) {
            json ops = json::array();
            for (const auto& op : mc.derivation) ops.push_back(to_string(op));
            list.push_back({{"n_vertices", mc.structure.n_vertices()},
                            {"n_edges", mc.structure.graph().n_edges()},
                            {"n_classes", mc.structure.n_classes()},
                            {"derivation", ops}});
        }
        out << json{{"count", minors.size()}, {"minors", list}}.dump() << "\n";
        return ok;
    }
    out << minors.size() << " pc-minors up to isomorphism\n";
    for (const auto& mc : minors)
        out << "vertices=" << mc.structure.n_vertices() << " edges=" << mc.structure.graph().n_edges()
            << " classes=" << mc.structure.n_classes() << " via " << ops_string(mc.derivation) << "\n";
    return ok;
}

inline int com_check_covectors(const RunConfig& cfg, std::ostream& out) {
    const auto l = io::read_covectors(*cfg.covector_file);
    const auto axioms = check_axioms(l);
    const bool simple = is_simple(l);
    const auto ts = topes(l);
    const Graph tg = tope_graph(ts);
    json j{{"covectors", l.vectors().size()}, {"axioms", to_string(axioms)}, {"simple", simple}, {"topes", ts.size()},
           {"tope_graph_edges", tg.n_edges()}};
    std::optional<ComFactorizationVerdict> verdict;
    if (axioms.is_com() && simple && is_partial_cube(tg)) verdict = verify_com_factorization(l);
    if (verdict) {
        j["factorization"] = report_json(verdict->report);
        j["factored"] = to_factored_string(verdict->report);
        j["factorization_holds"] = verdict->holds;
        if (!verdict->holds) j["reason"] = verdict->reason;
    }
    if (cfg.json) {
        out << j.dump() << "\n";
    } else {
        out << "covectors: " << l.vectors().size() << "\naxioms: " << to_string(axioms)
            << "\nsimple: " << (simple ? "yes" : "no") << "\ntopes: " << ts.size()
            << "\ntope graph edges: " << tg.n_edges() << "\n";
        if (verdict) {
            out << "determinant: " << to_factored_string(verdict->report) << "\n"
                << "factorization: " << (verdict->holds ? "holds" : "fails: " + verdict->reason) << "\n";
        }
    }
    return axioms.is_com() && (!verdict || verdict->holds) ? ok : mismatch;
}

inline int cmd_com_check(const RunConfig& cfg, std::ostream& out) {
    if (cfg.covector_file) {
        if (cfg.graph_file || cfg.generator) throw UsageError("give either a graph or --covectors, not both");
        return com_check_covectors(cfg, out);
    }
    const auto r = is_com_tope_graph(load_structure(cfg));
    if (cfg.json) {
        json j{{"is_com", r.is_com}};
        if (r.witness) {
            json ops = json::array();
            for (const auto& op : r.derivation) ops.push_back(to_string(op));
            j["witness"] = to_string(*r.witness);
            j["derivation"] = ops;
        }
        out << j.dump() << "\n";
    } else if (r.is_com) {
        out << "COM tope graph: yes\n";
    } else {
        out << "COM tope graph: no\nwitness: " << to_string(*r.witness) << "\nderivation: " << ops_string(r.derivation)
            << "\n";
    }
    return ok;
}

inline int cmd_reproduce_appendix(const RunConfig& cfg, std::ostream& out) {
    std::vector<AppendixCase> cases = appendix_cases_n4();
    if (cfg.extended) cases.insert(cases.end(), appendix_cases_n5().begin(), appendix_cases_n5().end());
    bool all = true;
    json list = json::array();
    for (const auto& c : cases) {
        const auto start = std::chrono::steady_clock::now();
        const auto o = run_appendix_case(c);
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        const bool pass = o.passed(cfg.exact);
        all = all && pass;
        if (cfg.json) {
            list.push_back({{"case", c.name},
                            {"pass", pass},
                            {"shape_matches", o.shape_matches},
                            {"residual_matches", o.residual_matches},
                            {"exact_matches", o.exact_matches},
                            {"computed", o.computed_string}});
        } else {
            char timing[32];
            std::snprintf(timing, sizeof timing, "%.2fs", secs);
            out << (pass ? "PASS " : "FAIL ") << c.name << " [" << timing << "] " << o.computed_string << "\n";
            if (!pass)
                out << "  expected " << c.published << "\n  shape " << (o.shape_matches ? "ok" : "differs")
                    << ", residual " << (o.residual_matches ? "ok" : "differs") << "\n";
        }
    }
    if (cfg.json) out << json{{"cases", list}, {"pass", all}}.dump() << "\n";
    return all ? ok : mismatch;
}

}  // namespace detail

// Returns the exit status; reports go to `out`, diagnostics to `err`.
inline int run(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    try {
        if (cfg.command == "generate") return detail::cmd_generate(cfg, out);
        if (cfg.command == "check-pc") return detail::cmd_check_pc(cfg, out);
        if (cfg.command == "classes") return detail::cmd_classes(cfg, out);
        if (cfg.command == "matrix") return detail::cmd_matrix(cfg, out);
        if (cfg.command == "det") return detail::cmd_det(cfg, out);
        if (cfg.command == "factor") return detail::cmd_factor(cfg, out);
        if (cfg.command == "minors") return detail::cmd_minors(cfg, out);
        if (cfg.command == "com-check") return detail::cmd_com_check(cfg, out);
        if (cfg.command == "reproduce-appendix") return detail::cmd_reproduce_appendix(cfg, out);
        err << "unknown command '" << cfg.command << "'\n";
        return usage;
    } catch (const io::FileError& e) {
        err << "error: " << e.what() << "\n";
        return unreadable;
    } catch (const NotAPartialCube& e) {
        err << "not a partial cube: " << to_string(e.failure().reason) << "\n" << e.failure().message << "\n";
        return not_a_partial_cube;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return usage;
    }
}

}  // namespace varchenko::cli

#pragma once

// Text formats: edge lists ("n <count>" then "<u> <v>" lines), covector files
// (one "+-0" string per line), generator specs ("minus_minus:4:4") and
// comma-separated permutations.

#include <cstddef>
#include <fstream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "varchenko/graph.hpp"
#include "varchenko/oriented_complex.hpp"

namespace varchenko::io {

class FileError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

inline std::string strip_comment(std::string line) {
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos) return {};
    const auto last = line.find_last_not_of(" \t\r");
    return line.substr(first, last - first + 1);
}

inline Graph parse_edge_list(std::istream& in) {
    std::string line;
    std::size_t line_no = 0;
    std::optional<std::size_t> n;
    std::vector<Edge> edges;
    while (std::getline(in, line)) {
        ++line_no;
        line = strip_comment(line);
        if (line.empty()) continue;
        std::istringstream ls(line);
        if (!n) {
            std::string tag;
            std::size_t count;
            if (!(ls >> tag >> count) || tag != "n")
                throw std::invalid_argument("line " + std::to_string(line_no) + ": expected 'n <n_vertices>'");
            n = count;
        } else {
            long long u, v;
            if (!(ls >> u >> v) || u < 0 || v < 0)
                throw std::invalid_argument("line " + std::to_string(line_no) + ": expected '<u> <v>'");
            edges.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
        }
        std::string rest;
        if (ls >> rest) throw std::invalid_argument("line " + std::to_string(line_no) + ": trailing input");
    }
    if (!n) throw std::invalid_argument("missing 'n <n_vertices>' header");
    return Graph(*n, edges);
}

inline std::string format_edge_list(const Graph& g) {
    std::string out = "n " + std::to_string(g.n_vertices()) + "\n";
    for (auto [u, v] : g.edges()) out += std::to_string(u) + " " + std::to_string(v) + "\n";
    return out;
}

inline CovectorSet parse_covectors(std::istream& in) {
    std::string line;
    std::vector<SignVector> vs;
    std::optional<std::size_t> size;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        line = strip_comment(line);
        if (line.empty()) continue;
        auto v = SignVector::parse(line);
        if (size && *size != v.size())
            throw std::invalid_argument("line " + std::to_string(line_no) + ": covector length differs");
        size = v.size();
        vs.push_back(std::move(v));
    }
    if (!size) throw std::invalid_argument("covector file is empty");
    return CovectorSet(*size, std::move(vs));
}

inline std::ifstream open_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw FileError("cannot read " + path);
    return in;
}

inline Graph read_edge_list(const std::string& path) {
    auto in = open_file(path);
    return parse_edge_list(in);
}

inline CovectorSet read_covectors(const std::string& path) {
    auto in = open_file(path);
    return parse_covectors(in);
}

inline std::vector<std::string> split(std::string_view s, char sep) {
    std::vector<std::string> out;
    std::size_t start = 0;
    while (true) {
        auto pos = s.find(sep, start);
        out.emplace_back(s.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start));
        if (pos == std::string_view::npos) break;
        start = pos + 1;
    }
    return out;
}

inline std::size_t parse_count(const std::string& s) {
    std::size_t used = 0;
    unsigned long v = 0;
    try {
        v = std::stoul(s, &used);
    } catch (const std::exception&) {
        used = 0;
    }
    if (used == 0 || used != s.size() || s.front() == '-') throw std::invalid_argument("expected a non-negative integer, got '" + s + "'");
    return v;
}

// hypercube:n, minus_star:n, minus_minus:n:m, path:n, cycle:n
inline Graph generate(std::string_view spec) {
    const auto parts = split(spec, ':');
    const std::string& name = parts[0];
    auto arg = [&](std::size_t i) {
        if (i >= parts.size()) throw std::invalid_argument("generator '" + name + "' needs more arguments");
        return parse_count(parts[i]);
    };
    auto arity = [&](std::size_t k) {
        if (parts.size() != k + 1) throw std::invalid_argument("generator '" + name + "' takes " + std::to_string(k) + " argument(s)");
    };
    if (name == "hypercube") { arity(1); return hypercube(arg(1)); }
    if (name == "minus_star") { arity(1); return forbidden_minor(ForbiddenKind::minus_star, arg(1)); }
    if (name == "minus_minus") { arity(2); return forbidden_minor(ForbiddenKind::minus_minus, arg(1), arg(2)); }
    if (name == "path") { arity(1); return path_graph(arg(1)); }
    if (name == "cycle") { arity(1); return cycle_graph(arg(1)); }
    throw std::invalid_argument("unknown generator '" + name + "'");
}

inline std::vector<std::size_t> parse_permutation(std::string_view text) {
    std::vector<std::size_t> p;
    for (const auto& part : split(text, ',')) p.push_back(parse_count(strip_comment(part)));
    return p;
}

}  // namespace varchenko::io

#pragma once

#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "clutterkit/binary_matroid.hpp"
#include "clutterkit/clutter.hpp"
#include "clutterkit/graph.hpp"
#include "clutterkit/lp.hpp"
#include "clutterkit/polyhedra.hpp"

namespace clutterkit {

struct ParseError : std::runtime_error {
    int line;
    ParseError(int line_number, const std::string& message)
        : std::runtime_error("line " + std::to_string(line_number) + ": " + message), line(line_number) {}
};

namespace detail {

/// Lines stripped of '#' comments, with their 1-based numbers; blanks dropped.
inline std::vector<std::pair<int, std::string>> logical_lines(std::istream& in) {
    std::vector<std::pair<int, std::string>> out;
    std::string raw;
    int number = 0;
    while (std::getline(in, raw)) {
        ++number;
        auto hash = raw.find('#');
        if (hash != std::string::npos) raw.erase(hash);
        std::istringstream probe(raw);
        std::string token;
        if (probe >> token)
            out.emplace_back(number, raw);
    }
    return out;
}

}  // namespace detail

struct ClutterFile {
    Clutter clutter;
    std::optional<std::vector<std::pair<int, int>>> pairs;  // cuboid coordinate pairing, if declared
};

/// Format: header "clutter <n>", optional "pairs a b a b ...", then one member
/// per line as space-separated 1-based labels; "-" denotes the empty member.
inline ClutterFile read_clutter(std::istream& in) {
    auto lines = detail::logical_lines(in);
    if (lines.empty()) throw ParseError(1, "empty clutter file");

    std::istringstream header(lines[0].second);
    std::string keyword;
    int n = -1;
    if (!(header >> keyword >> n) || keyword != "clutter" || n < 0)
        throw ParseError(lines[0].first, "expected header 'clutter <n>'");

    ClutterFile out;
    std::vector<std::vector<int>> members;
    for (std::size_t i = 1; i < lines.size(); ++i) {
        std::istringstream row(lines[i].second);
        std::string first;
        row >> first;
        if (i == 1 && first == "pairs") {
            std::vector<int> flat;
            int v;
            while (row >> v) flat.push_back(v);
            if (flat.size() != static_cast<std::size_t>(n) || n % 2 != 0)
                throw ParseError(lines[i].first, "pairs line must list all elements of an even ground set");
            std::vector<std::pair<int, int>> pairs;
            for (std::size_t j = 0; j + 1 < flat.size(); j += 2) pairs.emplace_back(flat[j], flat[j + 1]);
            out.pairs = std::move(pairs);
            continue;
        }
        std::vector<int> member;
        if (first != "-") {
            std::istringstream tokens(lines[i].second);
            std::string tok;
            while (tokens >> tok) {
                if (tok.find_first_not_of("0123456789") != std::string::npos)
                    throw ParseError(lines[i].first, "expected integer element labels");
                member.push_back(std::stoi(tok));
            }
        }
        members.push_back(std::move(member));
    }
    try {
        out.clutter = Clutter::from_members(n, members);
    } catch (const std::invalid_argument& e) {
        throw ParseError(lines[0].first, e.what());
    }
    return out;
}

inline ClutterFile read_clutter_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    return read_clutter(in);
}

inline void write_clutter(std::ostream& out, const Clutter& c,
                          const std::optional<std::vector<std::pair<int, int>>>& pairs = std::nullopt) {
    out << "clutter " << c.ground_size() << "\n";
    if (pairs) {
        out << "pairs";
        for (const auto& [a, b] : *pairs) out << " " << a << " " << b;
        out << "\n";
    }
    for (const auto& labels : c.member_labels()) {
        if (labels.empty()) {
            out << "-\n";
            continue;
        }
        for (std::size_t j = 0; j < labels.size(); ++j) out << (j ? " " : "") << labels[j];
        out << "\n";
    }
}

/// Format: "p <vertices> <edges>" then one "e u v" line per edge in label order.
inline Graph read_graph(std::istream& in) {
    auto lines = detail::logical_lines(in);
    if (lines.empty()) throw ParseError(1, "empty graph file");
    std::istringstream header(lines[0].second);
    std::string keyword;
    int nv = -1, ne = -1;
    if (!(header >> keyword >> nv >> ne) || keyword != "p" || nv < 0 || ne < 0)
        throw ParseError(lines[0].first, "expected header 'p <vertices> <edges>'");
    std::vector<std::pair<int, int>> edges;
    for (std::size_t i = 1; i < lines.size(); ++i) {
        std::istringstream row(lines[i].second);
        std::string e;
        int u, v;
        if (!(row >> e >> u >> v) || e != "e") throw ParseError(lines[i].first, "expected 'e <u> <v>'");
        edges.emplace_back(u, v);
    }
    if (static_cast<int>(edges.size()) != ne)
        throw ParseError(lines[0].first, "edge count does not match header");
    try {
        return Graph::of(nv, std::move(edges));
    } catch (const std::invalid_argument& e) {
        throw ParseError(lines[0].first, e.what());
    }
}

inline Graph read_graph_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    return read_graph(in);
}

inline void write_graph(std::ostream& out, const Graph& g) {
    out << "p " << g.vertex_count << " " << g.edge_count() << "\n";
    for (const auto& [u, v] : g.edges) out << "e " << u << " " << v << "\n";
}

/// Format: "matroid <n>" then the reduced cycle-space basis rows as 0/1 strings.
inline BinaryMatroid read_matroid(std::istream& in) {
    auto lines = detail::logical_lines(in);
    if (lines.empty()) throw ParseError(1, "empty matroid file");
    std::istringstream header(lines[0].second);
    std::string keyword;
    int n = -1;
    if (!(header >> keyword >> n) || keyword != "matroid" || n < 0)
        throw ParseError(lines[0].first, "expected header 'matroid <n>'");
    std::vector<BitVector> rows;
    for (std::size_t i = 1; i < lines.size(); ++i) {
        std::istringstream row(lines[i].second);
        std::string bits;
        row >> bits;
        if (static_cast<int>(bits.size()) != n) throw ParseError(lines[i].first, "basis row width mismatch");
        try {
            rows.push_back(BitVector::from_string(bits));
        } catch (const std::invalid_argument& e) {
            throw ParseError(lines[i].first, e.what());
        }
    }
    std::vector<int> ground(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) ground[static_cast<std::size_t>(i)] = i + 1;
    return BinaryMatroid::from_cycle_space(std::move(ground), BinarySpace::span(n, rows));
}

inline void write_matroid(std::ostream& out, const BinaryMatroid& m) {
    out << "matroid " << m.element_count() << "\n";
    for (const auto& row : m.cycles().basis()) out << row.to_string() << "\n";
}

/// Member list with exact rational weights, plus value and denominator lcm.
inline void write_packing(std::ostream& out, const Clutter& c, const FractionalPacking& p) {
    out << "packing value " << p.value.str() << " denominator " << p.denominator.str() << "\n";
    auto labels = c.member_labels();
    for (std::size_t j = 0; j < labels.size(); ++j) {
        out << "member";
        if (labels[j].empty())
            out << " -";
        else
            for (int v : labels[j]) out << " " << v;
        out << " : " << p.weights[j].str() << "\n";
    }
}

/// One constraint per line with exact rationals; for cross-checks against
/// external solvers.
inline void write_lp(std::ostream& out, const LpProblem& p) {
    out << (p.sense == Sense::minimize ? "minimize" : "maximize");
    for (const auto& c : p.objective) out << " " << c.str();
    out << "\n";
    for (const auto& row : p.rows) {
        for (std::size_t j = 0; j < row.coeffs.size(); ++j) out << (j ? " " : "") << row.coeffs[j].str();
        out << (row.rel == Relation::less_equal ? " <= " : row.rel == Relation::greater_equal ? " >= " : " = ");
        out << row.rhs.str() << "\n";
    }
    out << "nonnegative variables\n";
}

}  // namespace clutterkit

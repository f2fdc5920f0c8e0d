#include "mixchrom/graph_io.hpp"

#include "mixchrom/errors.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>
#include <vector>

namespace mixchrom {

namespace {

bool valid_name(std::string_view name) {
    return !name.empty() && std::all_of(name.begin(), name.end(), [](unsigned char c) {
        return std::isalnum(c) || c == '_';
    });
}

std::vector<std::string> split(std::string_view line) {
    std::vector<std::string> tokens;
    std::istringstream in{std::string(line)};
    for (std::string token; in >> token;) {
        tokens.push_back(token);
    }
    return tokens;
}

} // namespace

MixedGraph parse_graph(std::string_view text) {
    MixedGraph g;
    std::size_t line_number = 0;
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t end = text.find('\n', start);
        if (end == std::string_view::npos) {
            end = text.size();
        }
        std::string_view line = text.substr(start, end - start);
        start = end + 1;
        ++line_number;
        if (auto hash = line.find('#'); hash != std::string_view::npos) {
            line = line.substr(0, hash);
        }
        const auto tokens = split(line);
        if (tokens.empty()) {
            continue;
        }
        const std::string& directive = tokens[0];
        const std::size_t arity = directive == "vertex" ? 1 : 2;
        if (directive != "vertex" && directive != "edge" && directive != "arc") {
            throw ParseError(line_number, "unknown directive '" + directive + "'");
        }
        if (tokens.size() != arity + 1) {
            throw ParseError(line_number, "'" + directive + "' takes " + std::to_string(arity) +
                                              (arity == 1 ? " name" : " names"));
        }
        for (std::size_t i = 1; i < tokens.size(); ++i) {
            if (!valid_name(tokens[i])) {
                throw ParseError(line_number, "invalid vertex name '" + tokens[i] + "'");
            }
        }
        try {
            if (directive == "vertex") {
                g.add_vertex(tokens[1]);
            } else if (directive == "edge") {
                g.add_edge(tokens[1], tokens[2]);
            } else {
                g.add_arc(tokens[1], tokens[2]);
            }
        } catch (const GraphError& e) {
            throw ParseError(line_number, e.what());
        }
    }
    return g;
}

MixedGraph read_graph_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) {
        throw ParseError(0, "cannot open '" + path.string() + "'");
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_graph(buffer.str());
}

std::string format_graph(const MixedGraph& g) {
    std::string out;
    for (const auto& name : g.names()) {
        out += "vertex " + name + "\n";
    }
    for (const auto& e : g.edges()) {
        out += "edge " + g.name(e.u) + " " + g.name(e.v) + "\n";
    }
    for (const auto& a : g.arcs()) {
        out += "arc " + g.name(a.tail) + " " + g.name(a.head) + "\n";
    }
    return out;
}

} // namespace mixchrom

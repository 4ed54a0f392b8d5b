#include "modec/io.hpp"

#include <sstream>
#include <unordered_map>

#include "modec/errors.hpp"

namespace modec {

namespace {

std::vector<std::string> split_tokens(const std::string& line) {
    std::vector<std::string> tokens;
    std::string current;
    for (char c : line) {
        if (c == '#') break;
        if (c == ' ' || c == '\t' || c == '\r' || c == '\v' || c == '\f') {
            if (!current.empty()) tokens.push_back(std::move(current));
            current.clear();
        } else {
            current.push_back(c);
        }
    }
    if (!current.empty()) tokens.push_back(std::move(current));
    return tokens;
}

}  // namespace

Digraph parse_edge_list(const std::string& text) {
    std::unordered_map<std::string, VertexId> ids;
    std::vector<std::string> labels;
    std::vector<Edge> edges;

    auto intern = [&](const std::string& token) {
        auto [it, inserted] = ids.emplace(token, static_cast<VertexId>(labels.size()));
        if (inserted) labels.push_back(token);
        return it->second;
    };

    std::istringstream in(text);
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        auto tokens = split_tokens(line);
        if (tokens.empty()) continue;
        if (tokens.size() == 1) {
            intern(tokens[0]);
        } else if (tokens.size() == 2) {
            if (tokens[0] == tokens[1]) throw SelfLoopError(line_no, tokens[0]);
            VertexId src = intern(tokens[0]);
            VertexId dst = intern(tokens[1]);
            edges.push_back({src, dst});
        } else {
            throw ParseError(line_no, "expected 1 or 2 tokens, got " +
                                          std::to_string(tokens.size()));
        }
    }
    const std::size_t n = labels.size();
    return Digraph(n, std::move(edges), std::move(labels));
}

std::string serialize_edge_list(const Digraph& g) {
    std::ostringstream out;
    for (VertexId v = 0; v < g.vertex_count(); ++v) out << g.label(v) << '\n';
    for (const Edge& e : g.edges()) out << g.label(e.src) << ' ' << g.label(e.dst) << '\n';
    return out.str();
}

namespace {

std::string dot_quote(const std::string& s) {
    std::string out = "\"";
    for (char c : s) {
        if (c == '"' || c == '\\') out.push_back('\\');
        out.push_back(c);
    }
    out.push_back('"');
    return out;
}

}  // namespace

std::string to_dot(const Digraph& g) {
    std::ostringstream out;
    out << "digraph {\n";
    for (VertexId v = 0; v < g.vertex_count(); ++v)
        out << "  " << dot_quote(g.label(v)) << ";\n";
    for (const Edge& e : g.edges())
        out << "  " << dot_quote(g.label(e.src)) << " -> " << dot_quote(g.label(e.dst)) << ";\n";
    out << "}\n";
    return out.str();
}

}  // namespace modec

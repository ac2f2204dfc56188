#include "hamilton/graph_io.hpp"

#include <fstream>
#include <sstream>

#include "hamilton/error.hpp"

namespace hamilton {

namespace {

[[noreturn]] void parse_fail(int line, const std::string& what) {
    throw Error("ParseError", "line " + std::to_string(line) + ": " + what);
}

// Exactly two whitespace-separated decimal integers, nothing else.
std::pair<long long, long long> parse_int_pair(const std::string& line, int line_no) {
    std::istringstream in(line);
    long long a = 0;
    long long b = 0;
    if (!(in >> a >> b)) parse_fail(line_no, "expected two integers");
    std::string rest;
    if (in >> rest) parse_fail(line_no, "trailing content '" + rest + "'");
    return {a, b};
}

} // namespace

Graph parse_graph_file(const std::string& text) {
    std::vector<std::string> lines;
    size_t start = 0;
    while (start <= text.size()) {
        const size_t nl = text.find('\n', start);
        if (nl == std::string::npos) {
            if (start < text.size()) lines.push_back(text.substr(start));
            break;
        }
        lines.push_back(text.substr(start, nl - start));
        start = nl + 1;
    }
    if (lines.empty()) parse_fail(1, "empty input");

    const auto [n_ll, m_ll] = parse_int_pair(lines[0], 1);
    if (n_ll < 1) parse_fail(1, "vertex count must be >= 1");
    if (m_ll < 0) parse_fail(1, "edge count must be >= 0");
    const int n = static_cast<int>(n_ll);
    const auto m = static_cast<std::int64_t>(m_ll);

    if (static_cast<std::int64_t>(lines.size()) - 1 != m)
        parse_fail(static_cast<int>(lines.size()),
                   "edge count mismatch: header says " + std::to_string(m) + ", found " +
                       std::to_string(lines.size() - 1) + " edge lines");

    std::vector<Edge> edges;
    edges.reserve(static_cast<size_t>(m));
    Edge prev{-1, -1};
    for (std::int64_t i = 0; i < m; ++i) {
        const int line_no = static_cast<int>(i) + 2;
        const auto [u, v] = parse_int_pair(lines[static_cast<size_t>(i + 1)], line_no);
        if (u < 0 || u >= v || v >= n)
            throw Error("InvariantViolation", "line " + std::to_string(line_no) + ": edge (" +
                                                  std::to_string(u) + ", " + std::to_string(v) +
                                                  ") violates 0 <= u < v < n");
        const Edge cur{static_cast<Vertex>(u), static_cast<Vertex>(v)};
        if (!(prev < cur))
            throw Error("InvariantViolation",
                        "line " + std::to_string(line_no) + ": edges not strictly ascending");
        prev = cur;
        edges.push_back(cur);
    }
    return build_graph(n, edges);
}

std::string write_graph_file(const Graph& g) {
    std::ostringstream out;
    out << g.n << ' ' << g.m << '\n';
    for (Vertex u = 0; u < g.n; ++u)
        for (Vertex v : g.adjacency[static_cast<size_t>(u)])
            if (u < v) out << u << ' ' << v << '\n';
    return out.str();
}

Graph load_graph_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("IoError", "cannot open '" + path + "' for reading");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_graph_file(buf.str());
}

void save_graph_file(const Graph& g, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error("IoError", "cannot open '" + path + "' for writing");
    out << write_graph_file(g);
    if (!out) throw Error("IoError", "write to '" + path + "' failed");
}

} // namespace hamilton

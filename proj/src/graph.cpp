#include "hamilton/graph.hpp"

#include <algorithm>
#include <set>

#include "hamilton/error.hpp"

namespace hamilton {

namespace {

void check_set(const Graph& g, const VertexSet& x) {
    if (!x.empty() && (x.members().front() < 0 || x.members().back() >= g.n))
        throw Error("VertexOutOfRange", "vertex set member outside [0, n)");
}

} // namespace

bool Graph::has_edge(Vertex u, Vertex v) const {
    const auto& nbrs = adjacency[u];
    return std::binary_search(nbrs.begin(), nbrs.end(), v);
}

VertexSet::VertexSet(std::vector<Vertex> members) : members_(std::move(members)) {
    std::sort(members_.begin(), members_.end());
    members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
}

VertexSet VertexSet::full(int n) {
    VertexSet s;
    s.members_.resize(static_cast<size_t>(n));
    for (int v = 0; v < n; ++v) s.members_[static_cast<size_t>(v)] = v;
    return s;
}

bool VertexSet::contains(Vertex v) const {
    return std::binary_search(members_.begin(), members_.end(), v);
}

Graph build_graph(int n, const std::vector<Edge>& edges) {
    if (n < 1) throw Error("InvalidSize", "vertex count must be >= 1");
    Graph g;
    g.n = n;
    g.adjacency.assign(static_cast<size_t>(n), {});
    std::set<Edge> seen;
    for (const auto& [a, b] : edges) {
        if (a < 0 || a >= n || b < 0 || b >= n)
            throw Error("VertexOutOfRange",
                        "edge endpoint (" + std::to_string(a) + ", " + std::to_string(b) +
                            ") outside [0, " + std::to_string(n) + ")");
        if (a == b)
            throw Error("InvalidEdge", "self-loop at vertex " + std::to_string(a));
        Edge key{std::min(a, b), std::max(a, b)};
        if (!seen.insert(key).second)
            throw Error("DuplicateEdge", "edge (" + std::to_string(key.first) + ", " +
                                             std::to_string(key.second) + ") listed twice");
        g.adjacency[static_cast<size_t>(a)].push_back(b);
        g.adjacency[static_cast<size_t>(b)].push_back(a);
    }
    for (auto& nbrs : g.adjacency) std::sort(nbrs.begin(), nbrs.end());
    g.m = static_cast<std::int64_t>(seen.size());
    return g;
}

std::int64_t volume(const Graph& g, const VertexSet& x) {
    check_set(g, x);
    std::int64_t vol = 0;
    for (Vertex v : x) vol += g.degree(v);
    return vol;
}

std::int64_t edge_count_between(const Graph& g, const VertexSet& x, const VertexSet& y) {
    check_set(g, x);
    check_set(g, y);
    std::vector<char> in_y(static_cast<size_t>(g.n), 0);
    for (Vertex v : y) in_y[static_cast<size_t>(v)] = 1;
    std::int64_t count = 0;
    for (Vertex u : x)
        for (Vertex v : g.adjacency[static_cast<size_t>(u)])
            count += in_y[static_cast<size_t>(v)];
    return count;
}

VertexSet neighborhood(const Graph& g, const VertexSet& x) {
    check_set(g, x);
    std::vector<char> in_x(static_cast<size_t>(g.n), 0);
    for (Vertex v : x) in_x[static_cast<size_t>(v)] = 1;
    std::vector<char> hit(static_cast<size_t>(g.n), 0);
    std::vector<Vertex> out;
    for (Vertex u : x)
        for (Vertex v : g.adjacency[static_cast<size_t>(u)])
            if (!in_x[static_cast<size_t>(v)] && !hit[static_cast<size_t>(v)]) {
                hit[static_cast<size_t>(v)] = 1;
                out.push_back(v);
            }
    return VertexSet(std::move(out));
}

Components connected_components(const Graph& g) {
    Components c;
    c.labels.assign(static_cast<size_t>(g.n), -1);
    std::vector<Vertex> stack;
    for (Vertex s = 0; s < g.n; ++s) {
        if (c.labels[static_cast<size_t>(s)] != -1) continue;
        const int id = c.count++;
        stack.push_back(s);
        c.labels[static_cast<size_t>(s)] = id;
        while (!stack.empty()) {
            Vertex u = stack.back();
            stack.pop_back();
            for (Vertex v : g.adjacency[static_cast<size_t>(u)])
                if (c.labels[static_cast<size_t>(v)] == -1) {
                    c.labels[static_cast<size_t>(v)] = id;
                    stack.push_back(v);
                }
        }
    }
    return c;
}

} // namespace hamilton

#pragma once

#include <cstdint>
#include <utility>
#include <vector>

namespace hamilton {

using Vertex = int;
using Edge = std::pair<Vertex, Vertex>;

// Simple undirected graph on vertices 0..n-1. Adjacency lists are sorted
// ascending and mirror each other (u in adj[v] iff v in adj[u]); no
// self-loops, no parallel edges. Immutable after build_graph.
struct Graph {
    int n = 0;
    std::int64_t m = 0;
    std::vector<std::vector<Vertex>> adjacency;

    int degree(Vertex v) const { return static_cast<int>(adjacency[v].size()); }
    bool has_edge(Vertex u, Vertex v) const;
};

// Subset of [0, n) with set semantics; members kept sorted and unique.
class VertexSet {
public:
    VertexSet() = default;
    explicit VertexSet(std::vector<Vertex> members);

    static VertexSet full(int n);

    bool contains(Vertex v) const;
    int size() const { return static_cast<int>(members_.size()); }
    bool empty() const { return members_.empty(); }
    const std::vector<Vertex>& members() const { return members_; }
    auto begin() const { return members_.begin(); }
    auto end() const { return members_.end(); }

private:
    std::vector<Vertex> members_;
};

// Throws InvalidEdge on self-loops, DuplicateEdge on repeated pairs (in
// either orientation), VertexOutOfRange on endpoints outside [0, n),
// InvalidSize on n < 1.
Graph build_graph(int n, const std::vector<Edge>& edges);

// Sum of degrees over x; volume(g, V) == 2m.
std::int64_t volume(const Graph& g, const VertexSet& x);

// Ordered-pair edge count |{(u, v) : u in X, v in Y, uv in E}|. An edge
// with both endpoints in X ∩ Y contributes twice, so for any X the value
// edge_count_between(g, X, X) is exactly twice the number of edges inside X.
std::int64_t edge_count_between(const Graph& g, const VertexSet& x, const VertexSet& y);

// Vertices outside x adjacent to at least one member of x.
VertexSet neighborhood(const Graph& g, const VertexSet& x);

struct Components {
    int count = 0;
    std::vector<int> labels; // labels[v] in [0, count), constant on components
};

Components connected_components(const Graph& g);

} // namespace hamilton

#pragma once

// Test-only fixtures and brute-force oracles, shared by the unit suites
// and the acceptance harness. Everything here is intentionally
// independent of the library's internal code paths: edge counts walk all
// vertex pairs, closures are plain recursive enumeration, Hamiltonicity
// is permutation search.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "hamilton/error.hpp"
#include "hamilton/generators.hpp"
#include "hamilton/graph.hpp"

namespace fixtures {

// Runs fn and reports the code of the Error it throws ("" if none).
inline std::string error_code(const std::function<void()>& fn) {
    try {
        fn();
    } catch (const hamilton::Error& e) {
        return e.code();
    }
    return "";
}

using hamilton::Graph;
using hamilton::Vertex;
using hamilton::VertexSet;

inline VertexSet set_from_mask(int n, std::uint64_t mask) {
    std::vector<Vertex> members;
    for (int v = 0; v < n; ++v)
        if (mask >> v & 1) members.push_back(v);
    return VertexSet(std::move(members));
}

// Named families at every valid size up to max_n (plus the Petersen graph
// once it fits), followed by 50 seeded G(6, 1/2) draws.
inline std::vector<Graph> ensemble(int max_n) {
    using hamilton::NamedFamily;
    std::vector<Graph> out;
    for (int n = 3; n <= max_n; ++n) out.push_back(generate_named(NamedFamily::complete, n));
    for (int n = 3; n <= max_n; ++n) out.push_back(generate_named(NamedFamily::cycle, n));
    for (int n = 2; n <= max_n; ++n) out.push_back(generate_named(NamedFamily::path, n));
    for (int n = 2; n <= max_n; ++n) out.push_back(generate_named(NamedFamily::star, n));
    if (max_n >= 10) out.push_back(generate_named(NamedFamily::petersen, 10));
    for (int seed = 0; seed < 50; ++seed) out.push_back(hamilton::erdos_renyi(6, 0.5, seed));
    return out;
}

inline bool is_connected(const Graph& g) { return hamilton::connected_components(g).count == 1; }

// Ordered-pair oracle: walks every (u, v) pair directly.
inline std::int64_t brute_ordered_pairs(const Graph& g, const VertexSet& x, const VertexSet& y) {
    std::int64_t count = 0;
    for (Vertex u : x)
        for (Vertex v : y)
            if (g.has_edge(u, v)) count++;
    return count;
}

inline std::vector<Vertex> brute_neighborhood(const Graph& g, const VertexSet& x) {
    std::vector<Vertex> out;
    for (Vertex v = 0; v < g.n; ++v) {
        if (x.contains(v)) continue;
        for (Vertex u : x)
            if (g.has_edge(u, v)) {
                out.push_back(v);
                break;
            }
    }
    return out;
}

// Endpoints reachable by at most `depth` rotations with the first vertex
// fixed and broken edges restricted to the edges of `original`: plain
// recursive enumeration, no deduplication or budgets.
inline void closure_rec(const Graph& g, const std::vector<Vertex>& seq,
                        const std::set<std::pair<Vertex, Vertex>>& original, int depth,
                        std::set<Vertex>& out) {
    const int m = static_cast<int>(seq.size());
    out.insert(seq.back());
    if (depth == 0) return;
    for (int i0 = 0; i0 + 2 < m; ++i0) {
        if (!g.has_edge(seq.back(), seq[static_cast<size_t>(i0)])) continue;
        const Vertex a = std::min(seq[static_cast<size_t>(i0)], seq[static_cast<size_t>(i0 + 1)]);
        const Vertex b = std::max(seq[static_cast<size_t>(i0)], seq[static_cast<size_t>(i0 + 1)]);
        if (!original.count({a, b})) continue;
        std::vector<Vertex> next(seq.begin(), seq.begin() + i0 + 1);
        next.insert(next.end(), seq.rbegin(), seq.rend() - (i0 + 1));
        closure_rec(g, next, original, depth - 1, out);
    }
}

inline std::set<Vertex> brute_endpoint_closure(const Graph& g, const std::vector<Vertex>& seq,
                                               int depth) {
    std::set<std::pair<Vertex, Vertex>> original;
    for (size_t i = 0; i + 1 < seq.size(); ++i)
        original.insert({std::min(seq[i], seq[i + 1]), std::max(seq[i], seq[i + 1])});
    std::set<Vertex> out;
    closure_rec(g, seq, original, depth, out);
    return out;
}

// Hamiltonicity by permutation search; usable to n ~ 10.
inline bool brute_hamiltonian(const Graph& g) {
    if (g.n < 3) return false;
    std::vector<Vertex> perm;
    for (Vertex v = 1; v < g.n; ++v) perm.push_back(v);
    do {
        bool ok = g.has_edge(0, perm.front()) && g.has_edge(perm.back(), 0);
        for (size_t i = 0; ok && i + 1 < perm.size(); ++i)
            ok = g.has_edge(perm[i], perm[i + 1]);
        if (ok) return true;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return false;
}

// Every directed maximal path (no extension possible at either end).
inline void maximal_paths_rec(const Graph& g, std::vector<Vertex>& seq, std::vector<char>& used,
                              std::vector<std::vector<Vertex>>& out) {
    bool head_extends = false;
    for (Vertex u : g.adjacency[static_cast<size_t>(seq.back())])
        if (!used[static_cast<size_t>(u)]) {
            head_extends = true;
            seq.push_back(u);
            used[static_cast<size_t>(u)] = 1;
            maximal_paths_rec(g, seq, used, out);
            used[static_cast<size_t>(u)] = 0;
            seq.pop_back();
        }
    if (head_extends) return;
    for (Vertex u : g.adjacency[static_cast<size_t>(seq.front())])
        if (!used[static_cast<size_t>(u)]) return; // tail still extends
    out.push_back(seq);
}

inline std::vector<std::vector<Vertex>> all_maximal_paths(const Graph& g) {
    std::vector<std::vector<Vertex>> out;
    std::vector<char> used(static_cast<size_t>(g.n), 0);
    std::vector<Vertex> seq;
    for (Vertex s = 0; s < g.n; ++s) {
        seq.assign(1, s);
        std::fill(used.begin(), used.end(), 0);
        used[static_cast<size_t>(s)] = 1;
        maximal_paths_rec(g, seq, used, out);
    }
    return out;
}

// Structural sanity shared by generator and I/O tests.
inline void require_valid_graph(const Graph& g) {
    std::int64_t degree_sum = 0;
    for (Vertex u = 0; u < g.n; ++u) {
        const auto& nbrs = g.adjacency[static_cast<size_t>(u)];
        degree_sum += static_cast<std::int64_t>(nbrs.size());
        for (size_t i = 0; i < nbrs.size(); ++i) {
            if (nbrs[i] < 0 || nbrs[i] >= g.n) throw std::logic_error("neighbor out of range");
            if (nbrs[i] == u) throw std::logic_error("self loop");
            if (i > 0 && nbrs[i] <= nbrs[i - 1]) throw std::logic_error("unsorted or duplicate");
            if (!g.has_edge(nbrs[i], u)) throw std::logic_error("asymmetric adjacency");
        }
    }
    if (degree_sum != 2 * g.m) throw std::logic_error("edge count mismatch");
}

} // namespace fixtures

#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "hamilton/graph.hpp"

namespace hamilton {

// A path together with the edge set of the path it was originally built
// from. Rotations may only break edges from that original set; the edges
// created by rotations are not eligible.
struct PathState {
    std::vector<Vertex> sequence;
    std::vector<Edge> original_edges; // normalized u < v, sorted

    Vertex fixed_endpoint() const { return sequence.front(); }
    Vertex endpoint() const { return sequence.back(); }
    int length() const { return static_cast<int>(sequence.size()); }
    bool has_original_edge(Vertex u, Vertex v) const;
};

// Validates adjacency of consecutive vertices and distinctness; records
// the current edges as the original set.
PathState make_path_state(const Graph& g, std::vector<Vertex> sequence);

// Rotation with fixed first endpoint. pivot_index counts path positions
// from 1; with pivot v_i the result is (v_1..v_i, v_m, v_{m-1}..v_{i+1}).
// Requires 1 <= pivot_index <= m-2, the endpoint adjacent to the pivot,
// and the broken edge (v_i, v_{i+1}) to be an original edge.
PathState rotate(const Graph& g, const PathState& p, int pivot_index);

// Greedy maximal path: random start, extend both ends with random
// unvisited neighbors until neither endpoint can grow.
PathState maximal_path(const Graph& g, std::uint64_t seed);

// Endpoint sets S_0..S_t reachable by at most t rotations (cumulative),
// computed by exact breadth-first closure over full path states. With a
// pivot restriction only rotations whose pivot lies in the set are taken.
struct RotationFrontier {
    Vertex fixed_endpoint = 0;
    std::vector<std::vector<Vertex>> levels; // each sorted ascending
    std::optional<VertexSet> pivot_restriction;
    bool truncated = false;          // budget hit; last level may be partial
    std::int64_t states_explored = 0;
};

RotationFrontier endpoint_sets(const Graph& g, const PathState& p, int t_max,
                               const std::optional<VertexSet>& pivot_restriction,
                               std::int64_t budget);

// Members of s both of whose path neighbors are also in s; path endpoints
// are never interior.
VertexSet interior_points(const PathState& p, const VertexSet& s);

// Fixed point of: while some vertex of the core has fewer than tau graph
// neighbors inside the core's path interior, delete the lowest such
// vertex id and recompute.
VertexSet dense_core(const Graph& g, const PathState& p, const VertexSet& c, double tau);

struct CycleCertificate {
    std::vector<Vertex> order; // cyclic, covers every vertex exactly once
};

bool validate_cycle(const Graph& g, const CycleCertificate& cert);

// Rotation-extension heuristic. Sound: any returned certificate is
// validated against the graph. Incomplete: absence of a certificate does
// not prove non-Hamiltonicity. budget > 0 caps total rotation states
// across restarts; budget <= 0 selects the default of 50 restarts with
// 10 * n * max_degree states each.
std::optional<CycleCertificate> posa_find_hamiltonian(const Graph& g, std::uint64_t seed,
                                                      std::int64_t budget);

// Exact subset dynamic program; decides Hamiltonicity for 3 <= n <= 20.
// Throws TooLarge for n > 20.
std::optional<CycleCertificate> held_karp(const Graph& g);

// Quantities lam, t0, rho = 2 t0, k, alpha evaluated at a given n, all
// logs natural. t0 floors at 2 when the log-ratio numerator is negative.
struct ProofConstants {
    double lam = 0.0;
    int t0 = 0;
    int rho = 0;
    std::int64_t k = 0;
    double alpha = 0.0;
    double alpha_inverse = 0.0; // 49 * k! * 6^k
    bool t0_floored = false;
};

ProofConstants proof_constants(std::int64_t n);

} // namespace hamilton

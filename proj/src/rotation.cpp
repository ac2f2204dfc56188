#include "hamilton/rotation.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <deque>
#include <random>
#include <set>
#include <unordered_set>

#include "hamilton/error.hpp"

namespace hamilton {

namespace {

struct SequenceHash {
    size_t operator()(const std::vector<Vertex>& v) const {
        std::uint64_t h = 1469598103934665603ULL;
        for (Vertex x : v) {
            h ^= static_cast<std::uint64_t>(x) + 0x9e3779b97f4a7c15ULL;
            h *= 1099511628211ULL;
        }
        return static_cast<size_t>(h);
    }
};

std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t salt) {
    std::uint64_t z = seed + (salt + 1) * 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

std::uint64_t edge_key(const Graph& g, Vertex u, Vertex v) {
    if (u > v) std::swap(u, v);
    return static_cast<std::uint64_t>(u) * static_cast<std::uint64_t>(g.n) +
           static_cast<std::uint64_t>(v);
}

std::vector<Vertex> rotated_sequence(const std::vector<Vertex>& seq, int i0) {
    std::vector<Vertex> next(seq.begin(), seq.begin() + i0 + 1);
    next.insert(next.end(), seq.rbegin(), seq.rend() - (i0 + 1));
    return next;
}

void extend_maximal(const Graph& g, std::vector<Vertex>& path, std::vector<char>& on_path,
                    std::mt19937_64& rng) {
    std::vector<Vertex> cands;
    bool grew = true;
    while (grew) {
        grew = false;
        for (int side = 0; side < 2; ++side) {
            const Vertex end = side == 0 ? path.back() : path.front();
            cands.clear();
            for (Vertex u : g.adjacency[static_cast<size_t>(end)])
                if (!on_path[static_cast<size_t>(u)]) cands.push_back(u);
            if (cands.empty()) continue;
            std::uniform_int_distribution<size_t> pick(0, cands.size() - 1);
            const Vertex u = cands[pick(rng)];
            if (side == 0)
                path.push_back(u);
            else
                path.insert(path.begin(), u);
            on_path[static_cast<size_t>(u)] = 1;
            grew = true;
        }
    }
}

std::vector<Vertex> random_maximal(const Graph& g, std::vector<char>& on_path,
                                   std::mt19937_64& rng) {
    std::fill(on_path.begin(), on_path.end(), 0);
    std::uniform_int_distribution<int> pick(0, g.n - 1);
    std::vector<Vertex> path{pick(rng)};
    on_path[static_cast<size_t>(path[0])] = 1;
    extend_maximal(g, path, on_path, rng);
    return path;
}

// One breadth-first pass over rotation-reachable endpoints with the front
// vertex fixed; any edge of the current path may be broken. Returns a
// path that either closes a cycle with the front or has an off-path
// neighbor at its endpoint, or nothing if the pass exhausts its endpoints
// or the state allowance.
std::optional<std::vector<Vertex>> rotation_search(const Graph& g,
                                                   const std::vector<Vertex>& path,
                                                   const std::vector<char>& on_path,
                                                   std::int64_t allowance, std::int64_t& used,
                                                   std::vector<int>& pos) {
    const int m = static_cast<int>(path.size());
    if (m < 3) return std::nullopt;
    const Vertex front = path.front();
    std::vector<char> endpoint_seen(static_cast<size_t>(g.n), 0);
    endpoint_seen[static_cast<size_t>(path.back())] = 1;
    std::deque<std::vector<Vertex>> queue;
    queue.push_back(path);
    while (!queue.empty()) {
        const std::vector<Vertex> cur = std::move(queue.front());
        queue.pop_front();
        for (int i = 0; i < m; ++i) pos[static_cast<size_t>(cur[static_cast<size_t>(i)])] = i;
        const Vertex e = cur[static_cast<size_t>(m - 1)];
        bool out_of_budget = false;
        for (Vertex v : g.adjacency[static_cast<size_t>(e)]) {
            const int i0 = pos[static_cast<size_t>(v)];
            if (i0 < 0 || i0 > m - 3) continue;
            const Vertex new_end = cur[static_cast<size_t>(i0 + 1)];
            if (endpoint_seen[static_cast<size_t>(new_end)]) continue;
            if (used >= allowance) {
                out_of_budget = true;
                break;
            }
            ++used;
            endpoint_seen[static_cast<size_t>(new_end)] = 1;
            std::vector<Vertex> next = rotated_sequence(cur, i0);
            bool useful = g.has_edge(front, new_end);
            if (!useful)
                for (Vertex w : g.adjacency[static_cast<size_t>(new_end)])
                    if (!on_path[static_cast<size_t>(w)]) {
                        useful = true;
                        break;
                    }
            if (useful) {
                for (int i = 0; i < m; ++i) pos[static_cast<size_t>(cur[static_cast<size_t>(i)])] = -1;
                return next;
            }
            queue.push_back(std::move(next));
        }
        for (int i = 0; i < m; ++i) pos[static_cast<size_t>(cur[static_cast<size_t>(i)])] = -1;
        if (out_of_budget) break;
    }
    return std::nullopt;
}

std::optional<std::vector<Vertex>> posa_attempt(const Graph& g, std::mt19937_64& rng,
                                                std::int64_t allowance, std::int64_t& used) {
    const int n = g.n;
    std::vector<char> on_path(static_cast<size_t>(n), 0);
    std::vector<int> pos(static_cast<size_t>(n), -1);
    std::vector<Vertex> path = random_maximal(g, on_path, rng);

    while (true) {
        if (g.has_edge(path.front(), path.back())) {
            if (static_cast<int>(path.size()) == n) return path;
            // Re-root the cycle at a vertex with an outside neighbor and
            // grow the path by one.
            bool spliced = false;
            const int m = static_cast<int>(path.size());
            for (int j = 0; j < m && !spliced; ++j)
                for (Vertex u : g.adjacency[static_cast<size_t>(path[static_cast<size_t>(j)])])
                    if (!on_path[static_cast<size_t>(u)]) {
                        std::vector<Vertex> np;
                        np.reserve(path.size() + 1);
                        np.push_back(u);
                        for (int k = j; k < m; ++k) np.push_back(path[static_cast<size_t>(k)]);
                        for (int k = 0; k < j; ++k) np.push_back(path[static_cast<size_t>(k)]);
                        path = std::move(np);
                        on_path[static_cast<size_t>(u)] = 1;
                        spliced = true;
                        break;
                    }
            if (!spliced) return std::nullopt; // component exhausted
            extend_maximal(g, path, on_path, rng);
            continue;
        }
        bool progressed = false;
        for (int side = 0; side < 2 && !progressed; ++side) {
            if (side == 1) std::reverse(path.begin(), path.end());
            auto better = rotation_search(g, path, on_path, allowance, used, pos);
            if (better) {
                path = std::move(*better);
                progressed = true;
            }
        }
        if (!progressed) return std::nullopt;
        if (!g.has_edge(path.front(), path.back())) extend_maximal(g, path, on_path, rng);
    }
}

} // namespace

bool PathState::has_original_edge(Vertex u, Vertex v) const {
    Edge key{std::min(u, v), std::max(u, v)};
    return std::binary_search(original_edges.begin(), original_edges.end(), key);
}

PathState make_path_state(const Graph& g, std::vector<Vertex> sequence) {
    if (sequence.empty()) throw Error("InvalidPath", "path must be non-empty");
    std::vector<char> seen(static_cast<size_t>(g.n), 0);
    for (Vertex v : sequence) {
        if (v < 0 || v >= g.n) throw Error("VertexOutOfRange", "path vertex outside [0, n)");
        if (seen[static_cast<size_t>(v)]) throw Error("InvalidPath", "repeated path vertex");
        seen[static_cast<size_t>(v)] = 1;
    }
    PathState p;
    for (size_t i = 0; i + 1 < sequence.size(); ++i) {
        if (!g.has_edge(sequence[i], sequence[i + 1]))
            throw Error("InvalidPath", "consecutive path vertices are not adjacent");
        p.original_edges.emplace_back(std::min(sequence[i], sequence[i + 1]),
                                      std::max(sequence[i], sequence[i + 1]));
    }
    std::sort(p.original_edges.begin(), p.original_edges.end());
    p.sequence = std::move(sequence);
    return p;
}

PathState rotate(const Graph& g, const PathState& p, int pivot_index) {
    const int m = p.length();
    if (pivot_index < 1 || pivot_index > m - 2)
        throw Error("InvalidPivot", "pivot index " + std::to_string(pivot_index) +
                                        " outside [1, m-2] for path length " + std::to_string(m));
    const Vertex pivot = p.sequence[static_cast<size_t>(pivot_index - 1)];
    if (!g.has_edge(p.endpoint(), pivot))
        throw Error("InvalidPivot", "endpoint is not adjacent to the pivot");
    const Vertex broken_a = p.sequence[static_cast<size_t>(pivot_index - 1)];
    const Vertex broken_b = p.sequence[static_cast<size_t>(pivot_index)];
    if (!p.has_original_edge(broken_a, broken_b))
        throw Error("BrokenEdgeNotOriginal", "broken edge (" + std::to_string(broken_a) + ", " +
                                                 std::to_string(broken_b) +
                                                 ") is not an original path edge");
    PathState next;
    next.sequence = rotated_sequence(p.sequence, pivot_index - 1);
    next.original_edges = p.original_edges;
    return next;
}

PathState maximal_path(const Graph& g, std::uint64_t seed) {
    std::mt19937_64 rng(mix_seed(seed, 0));
    std::vector<char> on_path(static_cast<size_t>(g.n), 0);
    return make_path_state(g, random_maximal(g, on_path, rng));
}

RotationFrontier endpoint_sets(const Graph& g, const PathState& p, int t_max,
                               const std::optional<VertexSet>& pivot_restriction,
                               std::int64_t budget) {
    if (t_max < 0) throw Error("DomainError", "t_max must be >= 0");
    RotationFrontier f;
    f.fixed_endpoint = p.fixed_endpoint();
    f.pivot_restriction = pivot_restriction;

    std::vector<char> allowed;
    if (pivot_restriction) {
        allowed.assign(static_cast<size_t>(g.n), 0);
        for (Vertex v : *pivot_restriction) allowed[static_cast<size_t>(v)] = 1;
    }

    std::unordered_set<std::uint64_t> original;
    for (const Edge& e : p.original_edges) original.insert(edge_key(g, e.first, e.second));

    std::set<Vertex> accum{p.endpoint()};
    f.levels.emplace_back(accum.begin(), accum.end());

    std::unordered_set<std::vector<Vertex>, SequenceHash> visited;
    std::vector<std::vector<Vertex>> frontier{p.sequence};
    visited.insert(p.sequence);
    f.states_explored = 1;
    if (budget < 1) {
        f.truncated = true;
        return f;
    }

    const int m = p.length();
    std::vector<int> pos(static_cast<size_t>(g.n), -1);

    for (int t = 1; t <= t_max && !f.truncated; ++t) {
        std::vector<std::vector<Vertex>> next;
        for (const auto& seq : frontier) {
            for (int i = 0; i < m; ++i) pos[static_cast<size_t>(seq[static_cast<size_t>(i)])] = i;
            const Vertex e = seq[static_cast<size_t>(m - 1)];
            for (Vertex v : g.adjacency[static_cast<size_t>(e)]) {
                const int i0 = pos[static_cast<size_t>(v)];
                if (i0 < 0 || i0 > m - 3) continue;
                if (pivot_restriction && !allowed[static_cast<size_t>(v)]) continue;
                if (original.find(edge_key(g, seq[static_cast<size_t>(i0)],
                                           seq[static_cast<size_t>(i0 + 1)])) == original.end())
                    continue;
                std::vector<Vertex> nseq = rotated_sequence(seq, i0);
                if (visited.count(nseq)) continue;
                if (f.states_explored + 1 > budget) {
                    f.truncated = true;
                    break;
                }
                ++f.states_explored;
                accum.insert(nseq[static_cast<size_t>(m - 1)]);
                visited.insert(nseq);
                next.push_back(std::move(nseq));
            }
            for (int i = 0; i < m; ++i) pos[static_cast<size_t>(seq[static_cast<size_t>(i)])] = -1;
            if (f.truncated) break;
        }
        f.levels.emplace_back(accum.begin(), accum.end());
        frontier = std::move(next);
        if (frontier.empty() && !f.truncated) {
            // closure reached; the remaining levels repeat
            for (int s = t + 1; s <= t_max; ++s) f.levels.push_back(f.levels.back());
            break;
        }
    }
    return f;
}

VertexSet interior_points(const PathState& p, const VertexSet& s) {
    const int m = p.length();
    std::vector<int> pos;
    int max_id = -1;
    for (Vertex v : p.sequence) max_id = std::max(max_id, v);
    for (Vertex v : s) max_id = std::max(max_id, v);
    pos.assign(static_cast<size_t>(max_id + 1), -1);
    for (int i = 0; i < m; ++i) pos[static_cast<size_t>(p.sequence[static_cast<size_t>(i)])] = i;
    for (Vertex v : s)
        if (pos[static_cast<size_t>(v)] < 0)
            throw Error("VertexOutOfRange", "set member " + std::to_string(v) + " is not on the path");
    std::vector<Vertex> interior;
    for (Vertex v : s) {
        const int i = pos[static_cast<size_t>(v)];
        if (i <= 0 || i >= m - 1) continue;
        if (s.contains(p.sequence[static_cast<size_t>(i - 1)]) &&
            s.contains(p.sequence[static_cast<size_t>(i + 1)]))
            interior.push_back(v);
    }
    return VertexSet(std::move(interior));
}

VertexSet dense_core(const Graph& g, const PathState& p, const VertexSet& c, double tau) {
    if (tau < 0.0) throw Error("DomainError", "tau must be >= 0");
    std::vector<Vertex> core = c.members();
    std::vector<char> in_interior(static_cast<size_t>(g.n), 0);
    for (;;) {
        VertexSet cur(core);
        const VertexSet interior = interior_points(p, cur); // validates c is on the path
        std::fill(in_interior.begin(), in_interior.end(), 0);
        for (Vertex v : interior) in_interior[static_cast<size_t>(v)] = 1;
        Vertex victim = -1;
        for (Vertex v : core) { // ascending: lowest failing id goes first
            int count = 0;
            for (Vertex u : g.adjacency[static_cast<size_t>(v)])
                count += in_interior[static_cast<size_t>(u)];
            if (static_cast<double>(count) < tau) {
                victim = v;
                break;
            }
        }
        if (victim < 0) return cur;
        core.erase(std::find(core.begin(), core.end(), victim));
    }
}

bool validate_cycle(const Graph& g, const CycleCertificate& cert) {
    if (static_cast<int>(cert.order.size()) != g.n || g.n < 3) return false;
    std::vector<char> seen(static_cast<size_t>(g.n), 0);
    for (Vertex v : cert.order) {
        if (v < 0 || v >= g.n || seen[static_cast<size_t>(v)]) return false;
        seen[static_cast<size_t>(v)] = 1;
    }
    for (size_t i = 0; i < cert.order.size(); ++i) {
        const Vertex u = cert.order[i];
        const Vertex v = cert.order[(i + 1) % cert.order.size()];
        if (!g.has_edge(u, v)) return false;
    }
    return true;
}

std::optional<CycleCertificate> posa_find_hamiltonian(const Graph& g, std::uint64_t seed,
                                                      std::int64_t budget) {
    if (g.n < 3) return std::nullopt;
    if (connected_components(g).count != 1) return std::nullopt;

    int max_degree = 0;
    for (Vertex v = 0; v < g.n; ++v) max_degree = std::max(max_degree, g.degree(v));
    const std::int64_t per_attempt = std::max<std::int64_t>(1, 10LL * g.n * std::max(1, max_degree));
    constexpr int kRestarts = 50;
    std::int64_t remaining = budget > 0 ? budget : per_attempt * kRestarts;

    for (int restart = 0; restart < kRestarts && remaining > 0; ++restart) {
        std::mt19937_64 rng(mix_seed(seed, static_cast<std::uint64_t>(restart) + 1));
        std::int64_t used = 0;
        const std::int64_t allowance = std::min(per_attempt, remaining);
        auto result = posa_attempt(g, rng, allowance, used);
        remaining -= std::max<std::int64_t>(used, 1);
        if (result) {
            CycleCertificate cert{std::move(*result)};
            if (!validate_cycle(g, cert))
                throw Error("InternalError", "finder produced an invalid cycle");
            return cert;
        }
    }
    return std::nullopt;
}

std::optional<CycleCertificate> held_karp(const Graph& g) {
    const int n = g.n;
    if (n > 20) throw Error("TooLarge", "held-karp oracle supports n <= 20");
    if (n < 3) return std::nullopt;

    std::vector<std::uint32_t> adj(static_cast<size_t>(n), 0);
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v : g.adjacency[static_cast<size_t>(u)])
            adj[static_cast<size_t>(u)] |= 1u << v;

    const std::uint32_t full = (1u << n) - 1;
    std::vector<std::uint32_t> reach(static_cast<size_t>(full) + 1, 0);
    reach[1] = 1; // the single-vertex path at vertex 0
    for (std::uint32_t mask = 1; mask <= full; ++mask) {
        if (!(mask & 1u)) continue;
        const std::uint32_t ends = reach[mask];
        if (!ends) continue;
        std::uint32_t cand = full & ~mask;
        while (cand) {
            const int u = std::countr_zero(cand);
            cand &= cand - 1;
            if (adj[static_cast<size_t>(u)] & ends) reach[mask | (1u << u)] |= 1u << u;
        }
    }

    const std::uint32_t closers = reach[full] & adj[0] & ~1u;
    if (!closers) return std::nullopt;

    std::vector<Vertex> order;
    order.reserve(static_cast<size_t>(n));
    std::uint32_t mask = full;
    int v = std::countr_zero(closers);
    while (true) {
        order.push_back(v);
        const std::uint32_t prev_mask = mask & ~(1u << v);
        if (prev_mask == 1u) {
            order.push_back(0);
            break;
        }
        const std::uint32_t preds = reach[prev_mask] & adj[static_cast<size_t>(v)];
        v = std::countr_zero(preds);
        mask = prev_mask;
    }
    std::reverse(order.begin(), order.end());
    CycleCertificate cert{std::move(order)};
    if (!validate_cycle(g, cert)) throw Error("InternalError", "oracle produced an invalid cycle");
    return cert;
}

ProofConstants proof_constants(std::int64_t n) {
    if (n < 16) throw Error("DomainError", "constants need n >= 16");
    const double nf = static_cast<double>(n);
    const double ln = std::log(nf);
    const double lnln = std::log(ln);
    const double lnlnln = std::log(lnln);
    ProofConstants pc;
    pc.lam = lnln * lnln / (7500.0 * ln * lnlnln);
    const double denom = 2.0 * (std::log(1.0 / (2.0 * pc.lam)) - 4.0) - std::log(std::sqrt(7.0));
    if (!(denom > 0.0))
        throw Error("DomainError", "t0 formula undefined: lambda too large for this n");
    const double ratio = std::log(4.0 * pc.lam * pc.lam * nf) / denom;
    const int raw_t0 = static_cast<int>(std::ceil(ratio)) + 2;
    pc.t0_floored = raw_t0 < 2;
    pc.t0 = std::max(2, raw_t0);
    pc.rho = 2 * pc.t0;
    pc.k = 2 * std::max<std::int64_t>(
                   1, static_cast<std::int64_t>(std::ceil(3000.0 * pc.rho * pc.lam)));
    double factorial = 1.0;
    for (std::int64_t i = 2; i <= pc.k; ++i) factorial *= static_cast<double>(i);
    pc.alpha_inverse = 49.0 * factorial * std::pow(6.0, static_cast<double>(pc.k));
    pc.alpha = std::isfinite(pc.alpha_inverse) ? 1.0 / pc.alpha_inverse : 0.0;
    return pc;
}

} // namespace hamilton

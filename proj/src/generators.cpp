#include "hamilton/generators.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "hamilton/error.hpp"

namespace hamilton {

NamedFamily parse_family(const std::string& name) {
    if (name == "complete") return NamedFamily::complete;
    if (name == "cycle") return NamedFamily::cycle;
    if (name == "path") return NamedFamily::path;
    if (name == "star") return NamedFamily::star;
    if (name == "petersen") return NamedFamily::petersen;
    throw Error("InvalidSize", "unknown family '" + name + "'");
}

Graph generate_named(NamedFamily family, int n) {
    std::vector<Edge> edges;
    switch (family) {
        case NamedFamily::complete:
            if (n < 3) throw Error("InvalidSize", "complete graph needs n >= 3");
            for (int i = 0; i < n; ++i)
                for (int j = i + 1; j < n; ++j) edges.emplace_back(i, j);
            return build_graph(n, edges);
        case NamedFamily::cycle:
            if (n < 3) throw Error("InvalidSize", "cycle needs n >= 3");
            for (int i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
            return build_graph(n, edges);
        case NamedFamily::path:
            if (n < 1) throw Error("InvalidSize", "path needs n >= 1");
            for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
            return build_graph(n, edges);
        case NamedFamily::star:
            if (n < 2) throw Error("InvalidSize", "star needs n >= 2");
            for (int i = 1; i < n; ++i) edges.emplace_back(0, i);
            return build_graph(n, edges);
        case NamedFamily::petersen:
            for (int i = 0; i < 5; ++i) {
                edges.emplace_back(i, (i + 1) % 5);         // outer cycle
                edges.emplace_back(5 + i, 5 + (i + 2) % 5); // inner pentagram
                edges.emplace_back(i, 5 + i);               // spokes
            }
            return build_graph(10, edges);
    }
    throw Error("InvalidSize", "unknown family");
}

Graph remark_family(int n, int beta) {
    if (n < 3) throw Error("InvalidSize", "remark family needs n >= 3");
    if (beta < 1 || beta > n - 1)
        throw Error("InvalidSize", "remark family needs 1 <= beta <= n-1");
    std::vector<Edge> edges;
    for (int i = 0; i < n - 1; ++i)
        for (int j = i + 1; j < n - 1; ++j) edges.emplace_back(i, j);
    for (int i = 0; i < beta; ++i) edges.emplace_back(i, n - 1);
    return build_graph(n, edges);
}

int remark_beta(int n, double alpha) {
    if (!(alpha > 0.0 && alpha < 1.0))
        throw Error("InvalidSize", "alpha must be in (0, 1)");
    return static_cast<int>(std::ceil(alpha * (n - 1)));
}

double remark_gap_formula(int n, int beta) {
    if (n < 4) throw Error("InvalidSize", "remark gap formula needs n >= 4");
    if (beta < 1 || beta > n - 1)
        throw Error("InvalidSize", "remark gap formula needs 1 <= beta <= n-1");
    const double a = static_cast<double>(n - 2 + beta);
    const double b =
        4.0 * static_cast<double>(n - 1) * static_cast<double>(n - 2) * static_cast<double>(n - beta - 2);
    return (a + std::sqrt(a * a + b)) / (2.0 * static_cast<double>(n - 1) * static_cast<double>(n - 2));
}

Graph erdos_renyi(int n, double p, std::uint64_t seed) {
    if (n < 1) throw Error("InvalidSize", "erdos-renyi needs n >= 1");
    if (!(p >= 0.0 && p <= 1.0)) throw Error("InvalidSize", "p must be in [0, 1]");
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    std::vector<Edge> edges;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (unit(rng) < p) edges.emplace_back(i, j);
    return build_graph(n, edges);
}

Graph random_regular(int n, int d, std::uint64_t seed) {
    if (n < 1 || d < 0 || d >= n)
        throw Error("InvalidSize", "random regular needs 0 <= d < n");
    if ((static_cast<std::int64_t>(n) * d) % 2 != 0)
        throw Error("ParityError", "n * d must be even");
    std::mt19937_64 rng(seed);
    std::vector<int> stubs;
    stubs.reserve(static_cast<size_t>(n) * d);
    for (int v = 0; v < n; ++v)
        for (int k = 0; k < d; ++k) stubs.push_back(v);
    for (int attempt = 0; attempt < 1000; ++attempt) {
        std::shuffle(stubs.begin(), stubs.end(), rng);
        std::vector<Edge> edges;
        edges.reserve(stubs.size() / 2);
        std::vector<std::vector<char>> seen(static_cast<size_t>(n),
                                            std::vector<char>(static_cast<size_t>(n), 0));
        bool ok = true;
        for (size_t i = 0; i + 1 < stubs.size(); i += 2) {
            const int u = stubs[i];
            const int v = stubs[i + 1];
            if (u == v || seen[static_cast<size_t>(u)][static_cast<size_t>(v)]) {
                ok = false;
                break;
            }
            seen[static_cast<size_t>(u)][static_cast<size_t>(v)] = 1;
            seen[static_cast<size_t>(v)][static_cast<size_t>(u)] = 1;
            edges.emplace_back(u, v);
        }
        if (ok) return build_graph(n, edges);
    }
    throw Error("GenerationFailure", "no simple pairing found in 1000 attempts");
}

} // namespace hamilton

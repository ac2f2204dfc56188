#pragma once

#include <cstdint>
#include <string>

#include "hamilton/graph.hpp"

namespace hamilton {

enum class NamedFamily { complete, cycle, path, star, petersen };

// Parses one of "complete", "cycle", "path", "star", "petersen".
NamedFamily parse_family(const std::string& name);

// Canonical labelings: complete joins all pairs; cycle has i ~ i+1 mod n;
// path has i ~ i+1; star has center 0; petersen is the outer 5-cycle,
// inner pentagram and spokes on 10 vertices (n ignored).
// Size rules: complete/cycle need n >= 3, path n >= 1, star n >= 2.
Graph generate_named(NamedFamily family, int n);

// K_{n-1} on vertices 0..n-2 plus vertex n-1 joined to 0..beta-1.
Graph remark_family(int n, int beta);

// beta = ceil(alpha * (n-1)) for 0 < alpha < 1.
int remark_beta(int n, double alpha);

// Closed form for the normalized spectral gap of remark_family(n, beta).
// Exact for 1 <= beta <= n-2; at beta = n-1 it gives 1/(n-2) while the
// actual K_n gap is 1/(n-1), so the eigensolver is authoritative there.
double remark_gap_formula(int n, int beta);

// Each unordered pair included independently with probability p;
// deterministic given seed.
Graph erdos_renyi(int n, double p, std::uint64_t seed);

// Pairing model with full rejection of self-loops and parallel edges;
// retries up to 1000 shuffles before giving up with GenerationFailure.
Graph random_regular(int n, int d, std::uint64_t seed);

} // namespace hamilton

#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "hamilton/graph.hpp"

namespace hamilton {

// One evaluation of the mixing inequality
//   |e(X,Y) - vol(X)vol(Y)/vol(G)| <= lam * sqrt(vol X vol X~ vol Y vol Y~) / vol(G)
// under the ordered-pair e(X,Y) convention.
struct MixingReport {
    int x_size = 0;
    int y_size = 0;
    std::int64_t e_xy = 0;
    double expected = 0.0;
    double discrepancy = 0.0;
    double bound = 0.0;
    bool holds = false; // discrepancy <= bound + 1e-9
};

MixingReport mixing_check(const Graph& g, const VertexSet& x, const VertexSet& y, double lam);

struct CorollaryBounds {
    double lower = 0.0;
    double upper = 0.0;
};

// Degree-only sandwich on e(X,Y), parameterized by set sizes alone.
CorollaryBounds cor22_bounds(int n, double d, int max_deg, int min_deg, double lam,
                             std::int64_t x, std::int64_t y);

// Degree-only sandwich on e(X) for |X| = x.
CorollaryBounds cor23_bounds(int n, double d, int max_deg, int min_deg, double lam,
                             std::int64_t x);

struct DegreeBoundsReport {
    double lower = 0.0; // (n-1)/n * delta^2/d - Delta^2/d * lam
    double upper = 0.0; // Delta^2/d * (1 + lam)
    std::vector<Vertex> violations;
};

// Checks every vertex degree against the singleton-cut bounds; the
// violation list must be empty whenever lam >= the true spectral gap.
DegreeBoundsReport degree_bounds_check(const Graph& g, double lam);

struct PredicateReport {
    std::int64_t checked = 0;
    std::int64_t violated = 0;
    // First violating witness; second set empty for single-set predicates.
    std::optional<std::pair<std::vector<Vertex>, std::vector<Vertex>>> witness;
};

struct AuditReport {
    double gap = 0.0; // true normalized spectral gap, used as lambda
    bool hypotheses_met = false;
    bool exhaustive = false;
    PredicateReport small_set_edges;     // e(X) <= 3*lam*Delta^2/(2d) |X| for |X| < lam n
    PredicateReport expansion;           // |N(X)| > (1/2-4lam)^2/(3 lam^2) |X| for |X| < lam^2 n
    PredicateReport large_set_expansion; // |N(X)| > n/2 - |X| for |X| > lam^2 Delta^4 n / delta^4
    PredicateReport non_adjacent_pairs;  // |X||Y| < lam^2 Delta^4 n^2 / delta^4 when e(X,Y) = 0
    PredicateReport connectivity;        // single check: component count == 1
};

// Audits the five small-gap consequences with lambda = the true gap.
// Hypotheses: gap < 1/8 and (Delta/delta)^2 <= 2(n-1)/n; predicates are
// only evaluated when both hold. Exhaustive over all subsets when
// n <= 12, otherwise seeded sampling with sample_budget draws per
// predicate.
AuditReport cor24_audit(const Graph& g, std::int64_t sample_budget, std::uint64_t seed);

} // namespace hamilton

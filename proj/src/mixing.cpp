#include "hamilton/mixing.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <random>

#include "hamilton/error.hpp"
#include "hamilton/spectral.hpp"

namespace hamilton {

namespace {

constexpr double kSlack = 1e-9; // float guard on exact integer comparisons

// Adjacency as packed bit rows for fast popcount arithmetic on subsets.
struct BitRows {
    int n = 0;
    int words = 0;
    std::vector<std::uint64_t> rows;

    explicit BitRows(const Graph& g)
        : n(g.n), words((g.n + 63) / 64), rows(static_cast<size_t>(g.n) * words, 0) {
        for (Vertex u = 0; u < g.n; ++u)
            for (Vertex v : g.adjacency[static_cast<size_t>(u)])
                rows[static_cast<size_t>(u) * words + v / 64] |= 1ULL << (v % 64);
    }

    const std::uint64_t* row(Vertex u) const { return rows.data() + static_cast<size_t>(u) * words; }
};

using Mask = std::vector<std::uint64_t>;

Mask make_mask(int words) { return Mask(static_cast<size_t>(words), 0); }

void mask_set(Mask& m, Vertex v) { m[static_cast<size_t>(v / 64)] |= 1ULL << (v % 64); }

std::int64_t ordered_pairs(const BitRows& bits, const std::vector<Vertex>& xs, const Mask& ymask) {
    std::int64_t total = 0;
    for (Vertex u : xs) {
        const std::uint64_t* r = bits.row(u);
        for (int w = 0; w < bits.words; ++w) total += std::popcount(r[w] & ymask[static_cast<size_t>(w)]);
    }
    return total;
}

std::int64_t neighborhood_size(const BitRows& bits, const std::vector<Vertex>& xs, const Mask& xmask) {
    Mask acc = make_mask(bits.words);
    for (Vertex u : xs) {
        const std::uint64_t* r = bits.row(u);
        for (int w = 0; w < bits.words; ++w) acc[static_cast<size_t>(w)] |= r[w];
    }
    std::int64_t size = 0;
    for (int w = 0; w < bits.words; ++w)
        size += std::popcount(acc[static_cast<size_t>(w)] & ~xmask[static_cast<size_t>(w)]);
    return size;
}

// Uniform random subset of the given size (partial Fisher-Yates).
std::vector<Vertex> sample_subset(std::vector<Vertex>& pool, int size, std::mt19937_64& rng) {
    const int n = static_cast<int>(pool.size());
    for (int i = 0; i < size; ++i) {
        std::uniform_int_distribution<int> pick(i, n - 1);
        std::swap(pool[static_cast<size_t>(i)], pool[static_cast<size_t>(pick(rng))]);
    }
    return {pool.begin(), pool.begin() + size};
}

struct AuditContext {
    const Graph& g;
    const BitRows bits;
    double lam;
    double delta2; // small-set edge coefficient 3*lam*Delta^2/(2d)
    double expansion_factor;
    double size_threshold_c; // lam^2 Delta^4 n / delta^4
    double pair_threshold;   // lam^2 Delta^4 n^2 / delta^4
};

void check_small_set_edges(const AuditContext& ctx, const std::vector<Vertex>& xs,
                           const Mask& xmask, PredicateReport& rep) {
    rep.checked++;
    const std::int64_t e_inside = ordered_pairs(ctx.bits, xs, xmask) / 2;
    const double limit = ctx.delta2 * static_cast<double>(xs.size());
    if (static_cast<double>(e_inside) > limit + kSlack) {
        rep.violated++;
        if (!rep.witness) rep.witness = {{xs, {}}};
    }
}

void check_expansion(const AuditContext& ctx, const std::vector<Vertex>& xs, const Mask& xmask,
                     PredicateReport& rep) {
    rep.checked++;
    const std::int64_t nbhd = neighborhood_size(ctx.bits, xs, xmask);
    const double limit = ctx.expansion_factor * static_cast<double>(xs.size());
    if (!(static_cast<double>(nbhd) > limit - kSlack)) {
        rep.violated++;
        if (!rep.witness) rep.witness = {{xs, {}}};
    }
}

void check_large_set_expansion(const AuditContext& ctx, const std::vector<Vertex>& xs,
                               const Mask& xmask, PredicateReport& rep) {
    rep.checked++;
    const std::int64_t nbhd = neighborhood_size(ctx.bits, xs, xmask);
    const double limit = static_cast<double>(ctx.g.n) / 2.0 - static_cast<double>(xs.size());
    if (!(static_cast<double>(nbhd) > limit - kSlack)) {
        rep.violated++;
        if (!rep.witness) rep.witness = {{xs, {}}};
    }
}

void check_pair(const AuditContext& ctx, const std::vector<Vertex>& xs, const std::vector<Vertex>& ys,
                const Mask& ymask, PredicateReport& rep) {
    if (ordered_pairs(ctx.bits, xs, ymask) != 0) return; // only e(X,Y)=0 pairs qualify
    rep.checked++;
    const double product = static_cast<double>(xs.size()) * static_cast<double>(ys.size());
    if (!(product < ctx.pair_threshold + kSlack)) {
        rep.violated++;
        if (!rep.witness) rep.witness = {{xs, ys}};
    }
}

} // namespace

MixingReport mixing_check(const Graph& g, const VertexSet& x, const VertexSet& y, double lam) {
    if (g.m == 0) throw Error("EmptyGraph", "mixing check needs at least one edge");
    const double vol_g = 2.0 * static_cast<double>(g.m);
    const double vol_x = static_cast<double>(volume(g, x));
    const double vol_y = static_cast<double>(volume(g, y));
    MixingReport r;
    r.x_size = x.size();
    r.y_size = y.size();
    r.e_xy = edge_count_between(g, x, y);
    r.expected = vol_x * vol_y / vol_g;
    r.discrepancy = std::abs(static_cast<double>(r.e_xy) - r.expected);
    r.bound = lam * std::sqrt(vol_x * (vol_g - vol_x) * vol_y * (vol_g - vol_y)) / vol_g;
    r.holds = r.discrepancy <= r.bound + kSlack;
    return r;
}

CorollaryBounds cor22_bounds(int n, double d, int max_deg, int min_deg, double lam,
                             std::int64_t x, std::int64_t y) {
    const double nd = static_cast<double>(n) * d;
    const double dd = static_cast<double>(max_deg) * max_deg;
    const double ss = static_cast<double>(min_deg) * min_deg;
    const double xy = static_cast<double>(x) * static_cast<double>(y);
    const double root = std::sqrt(static_cast<double>(x) * static_cast<double>(n - x) *
                                  static_cast<double>(y) * static_cast<double>(n - y));
    CorollaryBounds b;
    b.lower = ss / nd * xy - lam * dd / nd * root;
    b.upper = dd / nd * (xy + lam * root);
    return b;
}

CorollaryBounds cor23_bounds(int n, double d, int max_deg, int min_deg, double lam,
                             std::int64_t x) {
    const double nd = static_cast<double>(n) * d;
    const double dd = static_cast<double>(max_deg) * max_deg;
    const double ss = static_cast<double>(min_deg) * min_deg;
    const double xf = static_cast<double>(x);
    const double pairs = xf * (xf - 1.0);
    const double spread = xf * (static_cast<double>(n) - xf / 2.0);
    CorollaryBounds b;
    b.lower = ss / (2.0 * nd) * pairs - lam * dd / nd * spread;
    b.upper = dd / (2.0 * nd) * (pairs + 2.0 * lam * spread);
    return b;
}

DegreeBoundsReport degree_bounds_check(const Graph& g, double lam) {
    if (g.m == 0) throw Error("EmptyGraph", "degree bounds need at least one edge");
    const DegreeSummary ds = degree_summary(g);
    const double d = ds.average_degree;
    DegreeBoundsReport r;
    r.lower = static_cast<double>(g.n - 1) / g.n * static_cast<double>(ds.min_degree) *
                  ds.min_degree / d -
              static_cast<double>(ds.max_degree) * ds.max_degree / d * lam;
    r.upper = static_cast<double>(ds.max_degree) * ds.max_degree / d * (1.0 + lam);
    for (Vertex v = 0; v < g.n; ++v) {
        const double dv = static_cast<double>(g.degree(v));
        if (dv < r.lower - kSlack || dv > r.upper + kSlack) r.violations.push_back(v);
    }
    return r;
}

AuditReport cor24_audit(const Graph& g, std::int64_t sample_budget, std::uint64_t seed) {
    if (g.m == 0) throw Error("EmptyGraph", "audit needs at least one edge");
    AuditReport rep;
    rep.gap = spectral_gap(graph_spectrum(g, OperatorKind::normalized));

    const DegreeSummary ds = degree_summary(g);
    const double ratio = static_cast<double>(ds.max_degree) / ds.min_degree;
    rep.hypotheses_met =
        rep.gap < 0.125 && ratio * ratio <= 2.0 * static_cast<double>(g.n - 1) / g.n;
    if (!rep.hypotheses_met) return rep;

    const double lam = rep.gap;
    const double d = ds.average_degree;
    const double deg_ratio4 = std::pow(ratio, 4.0);
    AuditContext ctx{g,
                     BitRows(g),
                     lam,
                     3.0 * lam * ds.max_degree * ds.max_degree / (2.0 * d),
                     (0.5 - 4.0 * lam) * (0.5 - 4.0 * lam) / (3.0 * lam * lam),
                     lam * lam * deg_ratio4 * g.n,
                     lam * lam * deg_ratio4 * g.n * g.n};

    const int n = g.n;
    rep.connectivity.checked = 1;
    if (connected_components(g).count != 1) {
        rep.connectivity.violated = 1;
        rep.connectivity.witness = {{{}, {}}};
    }

    const auto size_a = [&](std::int64_t s) { return s >= 1 && static_cast<double>(s) < lam * n; };
    const auto size_b = [&](std::int64_t s) {
        return s >= 1 && static_cast<double>(s) < lam * lam * n;
    };
    const auto size_c = [&](std::int64_t s) {
        return s >= 1 && static_cast<double>(s) > ctx.size_threshold_c;
    };

    rep.exhaustive = n <= 12;
    if (rep.exhaustive) {
        std::vector<Vertex> xs;
        std::vector<Vertex> ys;
        for (std::uint32_t xm = 1; xm < (1u << n); ++xm) {
            xs.clear();
            Mask xmask = make_mask(ctx.bits.words);
            for (int v = 0; v < n; ++v)
                if (xm >> v & 1) {
                    xs.push_back(v);
                    mask_set(xmask, v);
                }
            const auto s = static_cast<std::int64_t>(xs.size());
            if (size_a(s)) check_small_set_edges(ctx, xs, xmask, rep.small_set_edges);
            if (size_b(s)) check_expansion(ctx, xs, xmask, rep.expansion);
            if (size_c(s)) check_large_set_expansion(ctx, xs, xmask, rep.large_set_expansion);
            // disjoint partners: submasks of the complement
            const std::uint32_t comp = ((1u << n) - 1) & ~xm;
            for (std::uint32_t ym = comp; ym != 0; ym = (ym - 1) & comp) {
                ys.clear();
                Mask ymask = make_mask(ctx.bits.words);
                for (int v = 0; v < n; ++v)
                    if (ym >> v & 1) {
                        ys.push_back(v);
                        mask_set(ymask, v);
                    }
                check_pair(ctx, xs, ys, ymask, rep.non_adjacent_pairs);
            }
        }
        return rep;
    }

    std::mt19937_64 rng(seed);
    std::vector<Vertex> pool(static_cast<size_t>(n));
    for (int v = 0; v < n; ++v) pool[static_cast<size_t>(v)] = v;

    const auto draw = [&](int lo, int hi) {
        std::uniform_int_distribution<int> pick(lo, hi);
        return sample_subset(pool, pick(rng), rng);
    };
    const auto to_mask = [&](const std::vector<Vertex>& vs) {
        Mask m = make_mask(ctx.bits.words);
        for (Vertex v : vs) mask_set(m, v);
        return m;
    };

    const int max_a = static_cast<int>(std::ceil(lam * n)) - 1;
    if (size_a(max_a))
        for (std::int64_t i = 0; i < sample_budget; ++i) {
            const auto xs = draw(1, max_a);
            check_small_set_edges(ctx, xs, to_mask(xs), rep.small_set_edges);
        }

    const int max_b = static_cast<int>(std::ceil(lam * lam * n)) - 1;
    if (size_b(max_b))
        for (std::int64_t i = 0; i < sample_budget; ++i) {
            const auto xs = draw(1, max_b);
            check_expansion(ctx, xs, to_mask(xs), rep.expansion);
        }

    const int min_c = static_cast<int>(std::floor(ctx.size_threshold_c)) + 1;
    if (min_c <= n && size_c(min_c))
        for (std::int64_t i = 0; i < sample_budget; ++i) {
            const auto xs = draw(min_c, n);
            check_large_set_expansion(ctx, xs, to_mask(xs), rep.large_set_expansion);
        }

    // Disjoint non-adjacent pairs barely exist in well-mixed graphs, so the
    // search stays on small sets; pairs with edges between them do not
    // count against `checked`.
    for (std::int64_t i = 0; i < sample_budget; ++i) {
        const auto xs = draw(1, std::min(4, n / 2));
        std::vector<Vertex> rest(pool.begin() + static_cast<std::int64_t>(xs.size()), pool.end());
        std::uniform_int_distribution<int> pick(1, std::min<int>(4, static_cast<int>(rest.size())));
        const int want = pick(rng);
        std::vector<Vertex> ys;
        for (int j = 0; j < want; ++j) {
            std::uniform_int_distribution<int> idx(j, static_cast<int>(rest.size()) - 1);
            std::swap(rest[static_cast<size_t>(j)], rest[static_cast<size_t>(idx(rng))]);
            ys.push_back(rest[static_cast<size_t>(j)]);
        }
        check_pair(ctx, xs, ys, to_mask(ys), rep.non_adjacent_pairs);
    }
    return rep;
}

} // namespace hamilton

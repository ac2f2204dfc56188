#include "hamilton/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "hamilton/error.hpp"

namespace hamilton {

namespace {

constexpr double kSymmetryTol = 1e-12;
constexpr double kJacobiConvergence = 1e-12; // of the full Frobenius norm
constexpr int kJacobiSweepCap = 100;
constexpr int kQlIterationCap = 50;

// Jacobi is the reference path; the Householder+QL path takes over for
// large orders where full sweeps get expensive. Both are cross-checked
// in the test suite.
constexpr int kJacobiMaxOrder = 128;

double offdiag_sq(const std::vector<double>& a, int n) {
    double off = 0.0;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            const double v = a[static_cast<size_t>(i) * n + j];
            off += 2.0 * v * v;
        }
    return off;
}

} // namespace

const char* operator_name(OperatorKind kind) {
    switch (kind) {
        case OperatorKind::adjacency: return "adjacency";
        case OperatorKind::laplacian: return "laplacian";
        case OperatorKind::normalized: return "normalized";
    }
    return "?";
}

const char* condition_name(ConditionVerdict::Kind kind) {
    switch (kind) {
        case ConditionVerdict::Kind::fan_yu: return "fan-yu";
        case ConditionVerdict::Kind::butler_chung: return "butler-chung";
        case ConditionVerdict::Kind::krivelevich_sudakov: return "krivelevich-sudakov";
    }
    return "?";
}

SymmetricMatrix operator_matrix(const Graph& g, OperatorKind kind) {
    if (kind == OperatorKind::normalized)
        for (Vertex v = 0; v < g.n; ++v)
            if (g.degree(v) == 0)
                throw Error("IsolatedVertex",
                            "normalized laplacian undefined: vertex " + std::to_string(v) +
                                " has degree 0");
    SymmetricMatrix m;
    m.kind = kind;
    m.order = g.n;
    m.entries.assign(static_cast<size_t>(g.n) * g.n, 0.0);
    for (Vertex u = 0; u < g.n; ++u) {
        switch (kind) {
            case OperatorKind::adjacency:
                for (Vertex v : g.adjacency[static_cast<size_t>(u)]) m.at(u, v) = 1.0;
                break;
            case OperatorKind::laplacian:
                m.at(u, u) = static_cast<double>(g.degree(u));
                for (Vertex v : g.adjacency[static_cast<size_t>(u)]) m.at(u, v) = -1.0;
                break;
            case OperatorKind::normalized:
                m.at(u, u) = 1.0;
                for (Vertex v : g.adjacency[static_cast<size_t>(u)])
                    m.at(u, v) = -1.0 / std::sqrt(static_cast<double>(g.degree(u)) *
                                                  static_cast<double>(g.degree(v)));
                break;
        }
    }
    return m;
}

namespace detail {

std::vector<double> jacobi_eigenvalues(std::vector<double> a, int n) {
    if (n == 1) return {a[0]};
    double frob_sq = 0.0;
    for (double v : a) frob_sq += v * v;
    const double frob = std::sqrt(frob_sq);
    if (frob == 0.0) return std::vector<double>(static_cast<size_t>(n), 0.0);

    const double conv = kJacobiConvergence * frob;
    // Rotations on entries below this threshold are skipped; even if every
    // off-diagonal entry sits exactly at the threshold the off-diagonal
    // Frobenius norm stays under the convergence bound.
    const double skip = 0.1 * conv / n;

    int sweep = 0;
    for (;; ++sweep) {
        if (std::sqrt(offdiag_sq(a, n)) <= conv) break;
        if (sweep >= kJacobiSweepCap)
            throw Error("ConvergenceFailure",
                        "jacobi sweep cap (" + std::to_string(kJacobiSweepCap) + ") reached");
        for (int p = 0; p < n - 1; ++p) {
            double* rp = a.data() + static_cast<size_t>(p) * n;
            for (int q = p + 1; q < n; ++q) {
                const double apq = rp[q];
                if (std::abs(apq) <= skip) continue;
                double* rq = a.data() + static_cast<size_t>(q) * n;
                const double app = rp[p];
                const double aqq = rq[q];
                const double theta = 0.5 * (aqq - app) / apq;
                double t;
                if (std::abs(theta) > 1e150)
                    t = 0.5 / theta;
                else
                    t = (theta >= 0.0 ? 1.0 : -1.0) /
                        (std::abs(theta) + std::sqrt(theta * theta + 1.0));
                const double c = 1.0 / std::sqrt(t * t + 1.0);
                const double s = t * c;
                for (int k = 0; k < n; ++k) {
                    if (k == p || k == q) continue;
                    const double akp = rp[k];
                    const double akq = rq[k];
                    const double np = c * akp - s * akq;
                    const double nq = s * akp + c * akq;
                    rp[k] = np;
                    rq[k] = nq;
                    a[static_cast<size_t>(k) * n + p] = np;
                    a[static_cast<size_t>(k) * n + q] = nq;
                }
                rp[p] = app - t * apq;
                rq[q] = aqq + t * apq;
                rp[q] = 0.0;
                rq[p] = 0.0;
            }
        }
    }

    std::vector<double> eig(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) eig[static_cast<size_t>(i)] = a[static_cast<size_t>(i) * n + i];
    std::sort(eig.begin(), eig.end());
    return eig;
}

namespace {

// Householder reduction to tridiagonal form, eigenvalues only: d gets the
// diagonal, e the subdiagonal in e[1..n-1].
void householder_tridiag(std::vector<double>& a, int n, std::vector<double>& d,
                         std::vector<double>& e) {
    d.assign(static_cast<size_t>(n), 0.0);
    e.assign(static_cast<size_t>(n), 0.0);
    auto at = [&](int i, int j) -> double& { return a[static_cast<size_t>(i) * n + j]; };
    for (int i = n - 1; i >= 1; --i) {
        const int l = i - 1;
        double h = 0.0;
        if (l > 0) {
            double scale = 0.0;
            for (int k = 0; k <= l; ++k) scale += std::abs(at(i, k));
            if (scale == 0.0) {
                e[static_cast<size_t>(i)] = at(i, l);
            } else {
                for (int k = 0; k <= l; ++k) {
                    at(i, k) /= scale;
                    h += at(i, k) * at(i, k);
                }
                double f = at(i, l);
                double g = (f >= 0.0) ? -std::sqrt(h) : std::sqrt(h);
                e[static_cast<size_t>(i)] = scale * g;
                h -= f * g;
                at(i, l) = f - g;
                f = 0.0;
                for (int j = 0; j <= l; ++j) {
                    g = 0.0;
                    for (int k = 0; k <= j; ++k) g += at(j, k) * at(i, k);
                    for (int k = j + 1; k <= l; ++k) g += at(k, j) * at(i, k);
                    e[static_cast<size_t>(j)] = g / h;
                    f += e[static_cast<size_t>(j)] * at(i, j);
                }
                const double hh = f / (h + h);
                for (int j = 0; j <= l; ++j) {
                    f = at(i, j);
                    g = e[static_cast<size_t>(j)] - hh * f;
                    e[static_cast<size_t>(j)] = g;
                    for (int k = 0; k <= j; ++k) at(j, k) -= f * e[static_cast<size_t>(k)] + g * at(i, k);
                }
            }
        } else {
            e[static_cast<size_t>(i)] = at(i, l);
        }
    }
    for (int i = 0; i < n; ++i) d[static_cast<size_t>(i)] = at(i, i);
}

// Implicit-shift QL on a tridiagonal matrix; d in/out eigenvalues,
// e subdiagonal (destroyed).
void ql_implicit(std::vector<double>& d, std::vector<double>& e, int n) {
    for (int i = 1; i < n; ++i) e[static_cast<size_t>(i - 1)] = e[static_cast<size_t>(i)];
    e[static_cast<size_t>(n - 1)] = 0.0;
    for (int l = 0; l < n; ++l) {
        int iter = 0;
        int m;
        do {
            for (m = l; m < n - 1; ++m) {
                const double dd = std::abs(d[static_cast<size_t>(m)]) + std::abs(d[static_cast<size_t>(m + 1)]);
                if (std::abs(e[static_cast<size_t>(m)]) <= std::numeric_limits<double>::epsilon() * dd)
                    break;
            }
            if (m != l) {
                if (iter++ == kQlIterationCap)
                    throw Error("ConvergenceFailure",
                                "ql iteration cap (" + std::to_string(kQlIterationCap) +
                                    ") reached");
                double g = (d[static_cast<size_t>(l + 1)] - d[static_cast<size_t>(l)]) /
                           (2.0 * e[static_cast<size_t>(l)]);
                double r = std::hypot(g, 1.0);
                g = d[static_cast<size_t>(m)] - d[static_cast<size_t>(l)] +
                    e[static_cast<size_t>(l)] / (g + std::copysign(r, g));
                double s = 1.0;
                double c = 1.0;
                double p = 0.0;
                int i = m - 1;
                for (; i >= l; --i) {
                    double f = s * e[static_cast<size_t>(i)];
                    const double b = c * e[static_cast<size_t>(i)];
                    r = std::hypot(f, g);
                    e[static_cast<size_t>(i + 1)] = r;
                    if (r == 0.0) {
                        d[static_cast<size_t>(i + 1)] -= p;
                        e[static_cast<size_t>(m)] = 0.0;
                        break;
                    }
                    s = f / r;
                    c = g / r;
                    g = d[static_cast<size_t>(i + 1)] - p;
                    r = (d[static_cast<size_t>(i)] - g) * s + 2.0 * c * b;
                    p = s * r;
                    d[static_cast<size_t>(i + 1)] = g + p;
                    g = c * r - b;
                }
                if (r == 0.0 && i >= l) continue;
                d[static_cast<size_t>(l)] -= p;
                e[static_cast<size_t>(l)] = g;
                e[static_cast<size_t>(m)] = 0.0;
            }
        } while (m != l);
    }
}

} // namespace

std::vector<double> tridiagonal_eigenvalues(std::vector<double> a, int n) {
    if (n == 1) return {a[0]};
    std::vector<double> d;
    std::vector<double> e;
    householder_tridiag(a, n, d, e);
    ql_implicit(d, e, n);
    std::sort(d.begin(), d.end());
    return d;
}

} // namespace detail

Spectrum eigenvalues(const SymmetricMatrix& m) {
    const int n = m.order;
    if (n < 1) throw Error("DomainError", "matrix order must be >= 1");
    std::vector<double> a = m.entries;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            const double x = a[static_cast<size_t>(i) * n + j];
            const double y = a[static_cast<size_t>(j) * n + i];
            if (std::abs(x - y) > kSymmetryTol)
                throw Error("NonSymmetric", "entry (" + std::to_string(i) + ", " +
                                                std::to_string(j) + ") differs from its mirror");
            const double avg = 0.5 * (x + y);
            a[static_cast<size_t>(i) * n + j] = avg;
            a[static_cast<size_t>(j) * n + i] = avg;
        }
    Spectrum s;
    s.op = m.kind;
    s.eigenvalues = (n <= kJacobiMaxOrder) ? detail::jacobi_eigenvalues(std::move(a), n)
                                           : detail::tridiagonal_eigenvalues(std::move(a), n);
    return s;
}

Spectrum graph_spectrum(const Graph& g, OperatorKind kind) {
    return eigenvalues(operator_matrix(g, kind));
}

double spectral_gap(const Spectrum& s) {
    if (s.op != OperatorKind::normalized)
        throw Error("WrongOperator", "spectral gap is defined on the normalized spectrum");
    if (s.eigenvalues.size() < 2)
        throw Error("DomainError", "spectral gap needs n >= 2");
    double gap = 0.0;
    for (size_t i = 1; i < s.eigenvalues.size(); ++i)
        gap = std::max(gap, std::abs(1.0 - s.eigenvalues[i]));
    return gap;
}

double sigma_adjacency(const Spectrum& s) {
    if (s.op != OperatorKind::adjacency)
        throw Error("WrongOperator", "sigma is defined on the adjacency spectrum");
    if (s.eigenvalues.size() < 2)
        throw Error("DomainError", "sigma needs n >= 2");
    std::vector<double> mags(s.eigenvalues.size());
    for (size_t i = 0; i < mags.size(); ++i) mags[i] = std::abs(s.eigenvalues[i]);
    std::sort(mags.begin(), mags.end(), std::greater<>());
    return mags[1];
}

DegreeSummary degree_summary(const Graph& g) {
    DegreeSummary ds;
    ds.max_degree = 0;
    ds.min_degree = g.n > 0 ? g.degree(0) : 0;
    for (Vertex v = 0; v < g.n; ++v) {
        ds.max_degree = std::max(ds.max_degree, g.degree(v));
        ds.min_degree = std::min(ds.min_degree, g.degree(v));
    }
    ds.average_degree = g.n > 0 ? 2.0 * static_cast<double>(g.m) / g.n : 0.0;
    return ds;
}

double log_threshold_ratio(int n) {
    if (n < 3) return std::numeric_limits<double>::quiet_NaN();
    const double ln = std::log(static_cast<double>(n));
    const double lnln = std::log(ln);
    const double lnlnln = std::log(lnln);
    return lnln * lnln / (ln * lnlnln);
}

ConditionVerdict check_fan_yu(const Graph& g, double c) {
    if (!(c > 1.0 && c < std::sqrt(2.0)))
        throw Error("InvalidConstant", "fan-yu requires c in (1, sqrt(2))");
    const Spectrum s = graph_spectrum(g, OperatorKind::normalized); // throws IsolatedVertex
    const DegreeSummary ds = degree_summary(g);
    ConditionVerdict v;
    v.condition = ConditionVerdict::Kind::fan_yu;
    v.applicable = g.n >= 16;
    v.measured = spectral_gap(s);
    v.threshold = log_threshold_ratio(g.n) / 7500.0;
    v.ratio_ok = ds.min_degree > 0 &&
                 static_cast<double>(ds.max_degree) / ds.min_degree < c;
    v.passes = v.applicable && *v.ratio_ok && v.measured <= v.threshold;
    return v;
}

ConditionVerdict check_butler_chung(const Graph& g, double c) {
    if (!(c > 0.0)) throw Error("InvalidConstant", "butler-chung requires c > 0");
    const Spectrum s = graph_spectrum(g, OperatorKind::laplacian);
    const double d = degree_summary(g).average_degree;
    ConditionVerdict v;
    v.condition = ConditionVerdict::Kind::butler_chung;
    v.applicable = g.n >= 16;
    v.measured = 0.0;
    for (size_t i = 1; i < s.eigenvalues.size(); ++i)
        v.measured = std::max(v.measured, std::abs(d - s.eigenvalues[i]));
    v.threshold = c * log_threshold_ratio(g.n) * d;
    v.passes = v.applicable && v.measured <= v.threshold;
    return v;
}

ConditionVerdict check_krivelevich_sudakov(const Graph& g, double c) {
    const DegreeSummary ds = degree_summary(g);
    if (ds.max_degree != ds.min_degree)
        throw Error("NotRegular", "graph is not regular (max degree " +
                                      std::to_string(ds.max_degree) + ", min degree " +
                                      std::to_string(ds.min_degree) + ")");
    const Spectrum s = graph_spectrum(g, OperatorKind::adjacency);
    ConditionVerdict v;
    v.condition = ConditionVerdict::Kind::krivelevich_sudakov;
    v.applicable = g.n >= 16;
    v.measured = sigma_adjacency(s);
    v.threshold = c * log_threshold_ratio(g.n) * ds.max_degree;
    v.passes = v.applicable && v.measured <= v.threshold;
    return v;
}

} // namespace hamilton

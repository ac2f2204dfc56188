#pragma once

#include <optional>
#include <vector>

#include "hamilton/graph.hpp"

namespace hamilton {

enum class OperatorKind { adjacency, laplacian, normalized };

const char* operator_name(OperatorKind kind);

// Dense real symmetric matrix, row-major. `kind` records which graph
// operator the entries came from so the spectrum can be tagged.
struct SymmetricMatrix {
    OperatorKind kind = OperatorKind::adjacency;
    int order = 0;
    std::vector<double> entries;

    double at(int i, int j) const { return entries[static_cast<size_t>(i) * order + j]; }
    double& at(int i, int j) { return entries[static_cast<size_t>(i) * order + j]; }
};

struct Spectrum {
    OperatorKind op = OperatorKind::adjacency;
    std::vector<double> eigenvalues; // ascending
};

struct DegreeSummary {
    int max_degree = 0;
    int min_degree = 0;
    double average_degree = 0.0; // 2m / n
};

// Outcome of one spectral Hamiltonicity condition check. `ratio_ok` is
// only populated for the max/min degree-ratio condition.
struct ConditionVerdict {
    enum class Kind { fan_yu, butler_chung, krivelevich_sudakov };
    Kind condition = Kind::fan_yu;
    bool applicable = false; // n >= 16 so the iterated-log threshold is positive
    double measured = 0.0;
    double threshold = 0.0; // NaN when the iterated logs are undefined
    std::optional<bool> ratio_ok;
    bool passes = false;
};

const char* condition_name(ConditionVerdict::Kind kind);

// Exact operator entries: adjacency 0/1; laplacian diag d_v, off-diag -1
// on edges; normalized diag 1, off-diag -1/sqrt(d_i d_j) on edges.
// Throws IsolatedVertex when kind == normalized and some degree is zero.
SymmetricMatrix operator_matrix(const Graph& g, OperatorKind kind);

// All eigenvalues of a real symmetric matrix, sorted ascending.
// Deterministic for identical input. Throws NonSymmetric and
// ConvergenceFailure.
Spectrum eigenvalues(const SymmetricMatrix& m);

// Convenience: eigenvalues(operator_matrix(g, kind)).
Spectrum graph_spectrum(const Graph& g, OperatorKind kind);

// max_{i != 0} |1 - lambda_i| over a normalized-Laplacian spectrum.
double spectral_gap(const Spectrum& s);

// Second largest absolute eigenvalue of the adjacency matrix, with
// multiplicity.
double sigma_adjacency(const Spectrum& s);

DegreeSummary degree_summary(const Graph& g);

// (ln ln n)^2 / (ln n * ln ln ln n); NaN when undefined (n <= 2), may be
// negative for n < 16.
double log_threshold_ratio(int n);

ConditionVerdict check_fan_yu(const Graph& g, double c);
ConditionVerdict check_butler_chung(const Graph& g, double c);
ConditionVerdict check_krivelevich_sudakov(const Graph& g, double c);

namespace detail {

// Cyclic Jacobi sweeps; converges when the off-diagonal Frobenius norm
// drops below 1e-12 of the full Frobenius norm, capped at 100 sweeps.
std::vector<double> jacobi_eigenvalues(std::vector<double> a, int n);

// Householder tridiagonalization followed by implicit-shift QL,
// eigenvalues only. Same accuracy contract as the Jacobi path.
std::vector<double> tridiagonal_eigenvalues(std::vector<double> a, int n);

} // namespace detail

} // namespace hamilton

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "oriray/embedder.hpp" // EmbedMode

namespace oriray {

/// ln(e^a + e^b) without overflow.
long double log_add(long double a, long double b);

/// Compensated log-sum-exp over a list.
long double log_sum(const std::vector<long double>& vals);

/// The three tail bounds for a sum of independent 0/1 variables with mean
/// EX, reported as natural logs of the probabilities:
///   P[X >= C EX]     <= (e^{C-1}/C^C)^{EX}
///   P[X >= (1+c)EX]  <= e^{-c^2 EX/3}
///   P[X <= (1-c)EX]  <= e^{-c^2 EX/2}
struct ChernoffBounds {
    long double log_upper_C = 0;
    long double log_upper_plus = 0;
    long double log_lower_minus = 0;
};

ChernoffBounds chernoff(double ex, double C, double c);

enum class GeomCheckResult { holds, fails, not_applicable };

/// Geometric-sum bound (a^n - 1)/(a - 1) < (1+c) a^{n-1}, valid whenever
/// a > 1 + 1/c. Outside that hypothesis reports not_applicable.
GeomCheckResult geom_lemma_check(double a, double c, long long n);

/// The (n, N, p, c, C) tuple driving the random-graph feasibility
/// conditions, kept in log space: N blows past floating range quickly in
/// isometric mode. log_pN is pinned by the recipes so that p*N identities
/// hold exactly.
struct RandomModelParameters {
    long long n = 0;
    EmbedMode mode = EmbedMode::isometric;
    double c = 0;
    long double log_N = 0;
    long double log_p = 0;
    long double log_C = 0;
    long double log_pN = 0;
    std::optional<unsigned long long> exact_N; // set when N fits 64 bits

    /// hbar = (1+c)^n (pN)^{n-2} in isometric mode,
    ///        (1+c)(n-2) pN       in plain mode.
    long double log_hbar() const;
};

/// Per-condition outcome; lhs/rhs are natural logs of the two sides.
struct FeasibilityReport {
    bool cond[4] = {false, false, false, false};
    long double lhs_log[4] = {0, 0, 0, 0};
    long double rhs_log[4] = {0, 0, 0, 0};
    bool all() const { return cond[0] && cond[1] && cond[2] && cond[3]; }
};

/// Conditions (1)-(4) in isometric mode, (1')-(4') in plain mode, evaluated
/// entirely in log space.
FeasibilityReport random_feasibility(const RandomModelParameters& p);

/// The parameter recipe behind the n^{2n+o(n)} bound: N is the smallest
/// integer exceeding ((2+c) e^n/(1-c)) (n-1) (1+c)^n (4(1+delta) n^2 ln n)^{n-2},
/// p = 4(1+delta) n^2 ln n / N and C = e^n. constraint_ok reports
/// 4(1+delta)(1-c)/(2+c) > 2+delta, the proof's admissibility requirement
/// on (delta, c).
struct PikhRecipe {
    RandomModelParameters params;
    double delta = 0, c = 0;
    bool constraint_ok = false;
};

PikhRecipe pikh_recipe(int n, double delta, double c);

/// Validating wrapper: throws std::invalid_argument when (delta, c) violate
/// the admissibility constraint.
RandomModelParameters pikh_parameters(int n, double delta, double c);

/// Largest grid point (delta, c) in (0,1)^2 with both admissibility
/// constraints under the given epsilon; used as the default choice.
std::pair<double, double> pikh_default_choice(double eps, int grid = 64);

/// Smallest n0 such that the recipe is feasible for every n in [n0, n_max],
/// or nullopt when no such n0 exists.
struct ThresholdScan {
    std::optional<int> n0;
    int n_max = 0;
    int feasible_count = 0;
};

ThresholdScan pikh_threshold_scan(double delta, double c, int n_max);

struct MinimizeKResult {
    double x_star = 0;
    double k_value = 0;
};

/// min over x > 1 of 16 x^2 / (1 - x + x ln x), by golden-section search to
/// absolute tolerance tol on x.
MinimizeKResult minimize_k(double tol = 1e-6);

/// Same minimization started from an arbitrary point (bracket expansion
/// first); exposed for restart-stability checks.
MinimizeKResult minimize_k_from(double start, double tol = 1e-6);

/// The n^4 ln n recipe: C is the minimizer of the K functional,
/// p = (1-c)/(2C(1+c)^2 n^2), N the smallest integer above K(1+delta) n^4 ln n,
/// with delta, c chosen internally so that K*delta < eps and
/// 4(1+delta)(1-c)^2/(1+c)^3 > 4+delta.
struct KlrRecipe {
    RandomModelParameters params;
    double k_value = 0, C = 0, delta = 0, c = 0;
};

KlrRecipe klr_parameters(long long n, double eps);

/// A named numeric bound with log-space support.
struct BoundReport {
    std::string name;
    double value = 0;          // meaningful when log_scale is false
    long double log_value = 0; // natural log, always set for positive values
    bool log_scale = false;
    bool certified = true;
    std::string note;
};

/// Chromatic-girth extremal bounds: lower k^{(g-1)/2} for any k,g; upper
/// ceil(h^g) with h = 6(k+1) ln(k+1) for g >= 4.
std::pair<BoundReport, BoundReport> erdos_bounds(long long k, long long g);

/// The uncertified third form: reports C*k for a caller-supplied constant,
/// against which m^{1/(g-2)} ln m is to be compared.
BoundReport erdos_spencer_form(long long k, long long g, double constant);

/// Everything the small-n bound table lists: Burr values, the
/// girth-composed upper bounds, the quadratic lower bound and the tower
/// bound.
std::vector<BoundReport> ir_upper_bounds(int n);

} // namespace oriray

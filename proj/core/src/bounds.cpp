#include "oriray/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace oriray {

namespace {

constexpr long double kNegInf = -std::numeric_limits<long double>::infinity();

long double safe_log(long double x) { return x > 0 ? std::log(x) : kNegInf; }

// ln(1 - C + C ln C) for C given by its log; positive for C > 1.
long double log_one_minus_c_plus_clnc(long double log_C) {
    if (log_C <= 0) throw std::invalid_argument("Chernoff factor must exceed 1");
    if (log_C < 30) {
        long double C = std::exp(log_C);
        return std::log(1 - C + C * log_C);
    }
    // 1 + C(lnC - 1); the +1 is far below representable precision here.
    return log_C + std::log(log_C - 1);
}

} // namespace

long double log_add(long double a, long double b) {
    if (a == kNegInf) return b;
    if (b == kNegInf) return a;
    long double hi = std::max(a, b), lo = std::min(a, b);
    return hi + std::log1p(std::exp(lo - hi));
}

long double log_sum(const std::vector<long double>& vals) {
    long double hi = kNegInf;
    for (long double v : vals) hi = std::max(hi, v);
    if (hi == kNegInf) return kNegInf;
    // Kahan-compensated sum of the shifted exponentials.
    long double sum = 0, comp = 0;
    for (long double v : vals) {
        long double term = std::exp(v - hi);
        long double y = term - comp;
        long double t = sum + y;
        comp = (t - sum) - y;
        sum = t;
    }
    return hi + std::log(sum);
}

ChernoffBounds chernoff(double ex, double C, double c) {
    if (!(ex > 0)) throw std::invalid_argument("chernoff: need EX > 0");
    if (!(C > 1)) throw std::invalid_argument("chernoff: need C > 1");
    if (!(c > 0 && c < 1)) throw std::invalid_argument("chernoff: need 0 < c < 1");
    ChernoffBounds b;
    b.log_upper_C = (long double)ex * ((C - 1) - C * std::log((long double)C));
    b.log_upper_plus = -(long double)c * c / 3 * ex;
    b.log_lower_minus = -(long double)c * c / 2 * ex;
    return b;
}

GeomCheckResult geom_lemma_check(double a, double c, long long n) {
    if (!(c > 0) || n < 1) return GeomCheckResult::not_applicable;
    if (!(a > 1 + 1.0 / c)) return GeomCheckResult::not_applicable;
    long double ln_a = std::log((long double)a);
    // ln((a^n - 1)/(a - 1)) = n ln a + ln(1 - a^-n) - ln(a - 1)
    long double lhs = n * ln_a + std::log1p(-std::exp(-(long double)n * ln_a)) - std::log((long double)a - 1);
    long double rhs = std::log1p((long double)c) + (n - 1) * ln_a;
    return lhs < rhs ? GeomCheckResult::holds : GeomCheckResult::fails;
}

long double RandomModelParameters::log_hbar() const {
    if (mode == EmbedMode::isometric) return n * std::log1p((long double)c) + (n - 2) * log_pN;
    return std::log1p((long double)c) + safe_log((long double)(n - 2)) + log_pN;
}

FeasibilityReport random_feasibility(const RandomModelParameters& p) {
    FeasibilityReport r;
    long double log_c = std::log((long double)p.c);
    long double log_1pc = std::log1p((long double)p.c);
    long double log_1mc = std::log1p(-(long double)p.c);
    long double log_A = log_one_minus_c_plus_clnc(p.log_C);
    long double n = (long double)p.n;

    // (1) c^2 pN > 3 ln(3N)
    r.lhs_log[0] = 2 * log_c + p.log_pN;
    r.rhs_log[0] = std::log(3 * (std::log((long double)3) + p.log_N));

    if (p.mode == EmbedMode::isometric) {
        // (2) (1-C+C lnC) p (1+c)^n (pN)^{n-2} > (n-1) lnN + ln(1+c) + ln 3
        r.lhs_log[1] = log_A + p.log_p + n * log_1pc + (n - 2) * p.log_pN;
        r.rhs_log[1] = std::log((n - 1) * p.log_N + log_1pc + std::log((long double)3));
        // (3) c^2 C^2 (1+c)^{2n} (pN)^{2n-4} > N ln 2 + ln(3n)
        r.lhs_log[2] = 2 * log_c + 2 * p.log_C + 2 * n * log_1pc + (2 * n - 4) * p.log_pN;
        r.rhs_log[2] = log_add(p.log_N + std::log(std::log((long double)2)),
                               safe_log(std::log(3 * n)));
        // (4) (n-1)(n-2)/((1-c)p) + (2C/(1-c))(n-1)(1+c)^n (pN)^{n-2} < N
        long double t1 = safe_log((n - 1) * (n - 2)) - log_1mc - p.log_p;
        long double t2 = std::log((long double)2) + p.log_C - log_1mc + safe_log(n - 1) + n * log_1pc +
                         (n - 2) * p.log_pN;
        r.lhs_log[3] = log_add(t1, t2);
        r.rhs_log[3] = p.log_N;
    } else {
        // (2') (1-C+C lnC)(1+c)(n-2) p^2 N > (n-1) lnN + ln(1+c) + ln 3
        r.lhs_log[1] = log_A + log_1pc + safe_log(n - 2) + 2 * p.log_p + p.log_N;
        r.rhs_log[1] = std::log((n - 1) * p.log_N + log_1pc + std::log((long double)3));
        // (3') (c C (1+c)(n-2) pN)^2 > N ln 2 + ln(3n)
        r.lhs_log[2] = 2 * (log_c + p.log_C + log_1pc + safe_log(n - 2) + p.log_pN);
        r.rhs_log[2] = log_add(p.log_N + std::log(std::log((long double)2)),
                               safe_log(std::log(3 * n)));
        // (4') n(n-1)/((1-c)p) + (2C(1+c)/(1-c))(n-1)(n-2) pN < N
        long double t1 = safe_log(n * (n - 1)) - log_1mc - p.log_p;
        long double t2 = std::log((long double)2) + p.log_C + log_1pc - log_1mc + safe_log(n - 1) +
                         safe_log(n - 2) + p.log_pN;
        r.lhs_log[3] = log_add(t1, t2);
        r.rhs_log[3] = p.log_N;
    }

    r.cond[0] = r.lhs_log[0] > r.rhs_log[0];
    r.cond[1] = r.lhs_log[1] > r.rhs_log[1];
    r.cond[2] = r.lhs_log[2] > r.rhs_log[2];
    r.cond[3] = r.lhs_log[3] < r.rhs_log[3];
    return r;
}

PikhRecipe pikh_recipe(int n, double delta, double c) {
    if (n < 2) throw std::invalid_argument("pikh_recipe: need n >= 2");
    if (!(delta > 0 && delta < 1 && c > 0 && c < 1))
        throw std::invalid_argument("pikh_recipe: need delta, c in (0,1)");
    PikhRecipe rec;
    rec.delta = delta;
    rec.c = c;
    rec.constraint_ok = 4 * (1 + delta) * (1 - c) / (2 + c) > 2 + delta;

    long double ln_n = std::log((long double)n);
    long double log_pN = std::log(4 * (1 + (long double)delta)) + 2 * ln_n + std::log(ln_n);
    long double log_A = std::log((2 + (long double)c) / (1 - (long double)c)) + n +
                        std::log((long double)n - 1) + n * std::log1p((long double)c) +
                        (n - 2) * log_pN;

    RandomModelParameters& p = rec.params;
    p.n = n;
    p.mode = EmbedMode::isometric;
    p.c = c;
    p.log_C = n;
    p.log_pN = log_pN;
    if (log_A < 62.0L * std::log(2.0L)) {
        unsigned long long N = (unsigned long long)std::floor(std::exp(log_A)) + 1;
        p.exact_N = N;
        p.log_N = std::log((long double)N);
    } else {
        // The +1 of "smallest integer above" is far below representable
        // precision at this magnitude.
        p.log_N = log_A;
    }
    p.log_p = log_pN - p.log_N;
    return rec;
}

RandomModelParameters pikh_parameters(int n, double delta, double c) {
    PikhRecipe rec = pikh_recipe(n, delta, c);
    if (!rec.constraint_ok)
        throw std::invalid_argument("pikh_parameters: (delta, c) violate 4(1+delta)(1-c)/(2+c) > 2+delta");
    return rec.params;
}

std::pair<double, double> pikh_default_choice(double eps, int grid) {
    if (!(eps > 0)) throw std::invalid_argument("pikh_default_choice: need eps > 0");
    // Largest (delta + c) grid point meeting both admissibility constraints.
    double best_delta = -1, best_c = -1;
    for (int i = grid; i >= 1; --i)
        for (int j = grid; j >= 1; --j) {
            double delta = std::min(0.999, eps * i / grid);
            double c = std::min(0.999, eps * j / grid);
            if ((1 + delta) * (1 + c) >= 1 + eps) continue;
            if (!(4 * (1 + delta) * (1 - c) / (2 + c) > 2 + delta)) continue;
            if (delta + c > best_delta + best_c) {
                best_delta = delta;
                best_c = c;
            }
        }
    if (best_delta < 0) throw std::invalid_argument("pikh_default_choice: no feasible grid point under eps");
    return {best_delta, best_c};
}

ThresholdScan pikh_threshold_scan(double delta, double c, int n_max) {
    ThresholdScan scan;
    scan.n_max = n_max;
    std::optional<int> run_start;
    for (int n = 2; n <= n_max; ++n) {
        bool ok = random_feasibility(pikh_recipe(n, delta, c).params).all();
        if (ok) {
            ++scan.feasible_count;
            if (!run_start) run_start = n;
        } else {
            run_start.reset();
        }
    }
    scan.n0 = run_start; // start of the feasible suffix, if any
    return scan;
}

namespace {

double k_functional(double x) { return 16 * x * x / (1 - x + x * std::log(x)); }

MinimizeKResult golden_section(double a, double b, double tol) {
    constexpr double kInvPhi = 0.6180339887498949;
    double x1 = b - kInvPhi * (b - a);
    double x2 = a + kInvPhi * (b - a);
    double f1 = k_functional(x1), f2 = k_functional(x2);
    while (b - a > tol) {
        if (f1 < f2) {
            b = x2;
            x2 = x1;
            f2 = f1;
            x1 = b - kInvPhi * (b - a);
            f1 = k_functional(x1);
        } else {
            a = x1;
            x1 = x2;
            f1 = f2;
            x2 = a + kInvPhi * (b - a);
            f2 = k_functional(x2);
        }
    }
    double x = (a + b) / 2;
    return {x, k_functional(x)};
}

} // namespace

MinimizeKResult minimize_k(double tol) { return golden_section(1 + 1e-9, 100, tol); }

MinimizeKResult minimize_k_from(double start, double tol) {
    if (!(start > 1)) throw std::invalid_argument("minimize_k_from: need start > 1");
    // Expand the right end until the functional rises; the function is
    // unimodal on (1, inf), so the minimum then sits inside the bracket.
    double hi = start;
    int guard = 0;
    while (k_functional(hi * 2) < k_functional(hi) && ++guard < 64) hi *= 2;
    return golden_section(1 + 1e-9, hi * 2, tol);
}

std::pair<double, double> klr_choose_delta_c(double eps) {
    double K = minimize_k().k_value;
    double delta = eps / (2 * K);
    if (!(delta > 0) || delta >= 1) throw std::invalid_argument("klr_parameters: eps out of range");
    // Largest c with 4(1+delta)(1-c)^2/(1+c)^3 > 4+delta, halved for margin.
    auto ok = [&](double c) { return 4 * (1 + delta) * std::pow(1 - c, 2) / std::pow(1 + c, 3) > 4 + delta; };
    double lo = 0, hi = 1;
    for (int it = 0; it < 200; ++it) {
        double mid = (lo + hi) / 2;
        (ok(mid) ? lo : hi) = mid;
    }
    double c = lo / 2;
    if (!(c > 0)) throw std::invalid_argument("klr_parameters: eps too small for a representable c");
    return {delta, c};
}

KlrRecipe klr_parameters(long long n, double eps) {
    if (n < 3) throw std::invalid_argument("klr_parameters: need n >= 3");
    if (!(eps > 0)) throw std::invalid_argument("klr_parameters: need eps > 0");
    KlrRecipe rec;
    MinimizeKResult km = minimize_k();
    rec.k_value = km.k_value;
    rec.C = km.x_star;
    auto [delta, c] = klr_choose_delta_c(eps);
    rec.delta = delta;
    rec.c = c;

    RandomModelParameters& p = rec.params;
    p.n = n;
    p.mode = EmbedMode::plain;
    p.c = c;
    p.log_C = std::log((long double)km.x_star);
    long double ln_n = std::log((long double)n);
    long double log_target = std::log((long double)km.k_value * (1 + (long double)delta)) + 4 * ln_n + std::log(ln_n);
    if (log_target < 62.0L * std::log(2.0L)) {
        unsigned long long N = (unsigned long long)std::floor(std::exp(log_target)) + 1;
        p.exact_N = N;
        p.log_N = std::log((long double)N);
    } else {
        p.log_N = log_target;
    }
    p.log_p = std::log1p(-(long double)c) - std::log((long double)2) - p.log_C -
              2 * std::log1p((long double)c) - 2 * ln_n;
    p.log_pN = p.log_p + p.log_N;
    return rec;
}

namespace {

BoundReport make_report(std::string name, long double log_value, bool certified = true, std::string note = "") {
    BoundReport r;
    r.name = std::move(name);
    r.log_value = log_value;
    r.certified = certified;
    r.note = std::move(note);
    if (log_value < std::log(std::numeric_limits<double>::max())) {
        r.value = double(std::exp(log_value));
        r.log_scale = false;
    } else {
        r.value = 0;
        r.log_scale = true;
    }
    return r;
}

} // namespace

std::pair<BoundReport, BoundReport> erdos_bounds(long long k, long long g) {
    if (k < 2) throw std::invalid_argument("erdos_bounds: need k >= 2");
    if (g < 4) throw std::invalid_argument("erdos_bounds: need g >= 4 (the upper bound form requires it)");
    long double log_lower = (long double)(g - 1) / 2 * std::log((long double)k);
    BoundReport lower = make_report("erdos_lower", log_lower);

    long double h = 6 * (long double)(k + 1) * std::log((long double)(k + 1));
    long double log_hg = g * std::log(h);
    BoundReport upper;
    if (log_hg < 62.0L * std::log(2.0L)) {
        long double exact = 1;
        for (long long i = 0; i < g; ++i) exact *= h;
        unsigned long long v = (unsigned long long)std::ceil(exact);
        upper = make_report("erdos_upper", std::log((long double)v));
        upper.value = double(v);
    } else {
        upper = make_report("erdos_upper", log_hg);
        upper.note = "ceil omitted at this magnitude";
    }
    return {lower, upper};
}

BoundReport erdos_spencer_form(long long k, long long g, double constant) {
    if (k < 3 || g < 3) throw std::invalid_argument("erdos_spencer_form: need k, g >= 3");
    BoundReport r = make_report("erdos_spencer_rhs", std::log((long double)constant * k), false,
                                "m^{1/(g-2)} ln m < C k with caller-supplied C; not certified");
    return r;
}

std::vector<BoundReport> ir_upper_bounds(int n) {
    if (n < 2) throw std::invalid_argument("ir_upper_bounds: need n >= 2");
    std::vector<BoundReport> out;

    out.push_back(make_report("burr_In", std::log((long double)n)));
    out.back().value = n;

    long double burr_tn = 0.5L * n * n - 0.5L * n + 1;
    out.push_back(make_report("burr_Tn_upper", std::log(burr_tn)));
    out.back().value = double(burr_tn);

    if (n >= 3) {
        auto [lo_i, up_i] = erdos_bounds(n, 2 * n - 2);
        up_i.name = "ir_In_upper";
        up_i.note = "E(n, 2n-2) upper form";
        out.push_back(up_i);
        auto [lo_t, up_t] = erdos_bounds((long long)burr_tn, 2 * n - 2);
        up_t.name = "ir_Tn_upper";
        up_t.note = "E(Burr(T_n) bound, 2n-2) upper form";
        out.push_back(up_t);
    } else {
        out.push_back(make_report("ir_In_upper", std::log((long double)2), true, "girth form needs n >= 3; IR(I_2) = 2 directly"));
        out.back().value = 2;
    }

    out.push_back(make_report("r_In_lower", std::log(0.5L * n * n)));
    out.back().value = double(0.5 * n * n);
    out.back().note = "R(I_n) >= n^2/2";

    BoundReport tower;
    tower.name = "tower_bound";
    tower.log_value = std::pow(2.0L, (long double)(n - 1)) * std::log(2.0L);
    tower.log_scale = tower.log_value >= std::log(std::numeric_limits<double>::max());
    if (!tower.log_scale) tower.value = double(std::exp(tower.log_value));
    tower.note = "IR(T_n) < 2^(2^(n-1))";
    out.push_back(tower);
    return out;
}

} // namespace oriray

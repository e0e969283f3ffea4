#include "gvrl/analysis.hpp"

#include <cmath>
#include <stdexcept>

#include "gvrl/codec.hpp"
#include "gvrl/numerics.hpp"

namespace gvrl::analysis {

namespace {

constexpr double kLn2 = 0.6931471805599453094;
constexpr double kLog2E = 1.4426950408889634074;
constexpr double kLog2Ln2 = -0.5287663729448976142;  // log2(ln 2)

}  // namespace

double expected_length_exact(double p) {
    const CodeParams cp = compute_params(p);
    const long double log_u = std::log1p(-static_cast<long double>(p));
    // m - 2h = 2^l - h is the count of short remainder codewords; it is the
    // exponent at which the remainder code switches from l to l+1 bits.
    const long double u_switch =
        std::exp(static_cast<long double>(cp.m - 2 * cp.h) * log_u);
    const long double u_m = std::exp(static_cast<long double>(cp.m) * log_u);
    const long double denom = -std::expm1(static_cast<long double>(cp.m) * log_u);
    return static_cast<double>(cp.l + (u_switch - u_m) / denom + 1.0L / denom);
}

double expected_length_enumeration(double p, double tol) {
    if (!(tol > 0.0)) throw std::invalid_argument("enumeration tolerance must be positive");
    const CodeParams cp = compute_params(p);

    const long double lp = static_cast<long double>(p);
    const long double log_u = std::log1p(-lp);
    const long double u_over_p = std::exp(log_u) / lp;  // (1-p)/p
    const std::uint64_t short_count = (std::uint64_t{1} << cp.l) - cp.h;
    const long double fixed_len = static_cast<long double>(cp.l) + 2.0L;

    // Kahan-compensated accumulation: the grids used by callers reach a few
    // times 1e7 terms, where plain summation error would be near the 1e-10
    // tolerances this function is checked against.
    long double sum = 0.0L;
    long double comp = 0.0L;
    long double weight = lp;  // p * (1-p)^k
    std::uint64_t s = 0;
    std::uint64_t r = 0;
    for (std::uint64_t k = 0;; ++k) {
        const long double len =
            static_cast<long double>(s) + 1.0L + (r < short_count ? cp.l : cp.l + 1);
        const long double y = weight * len - comp;
        const long double t = sum + y;
        comp = (t - sum) - y;
        sum = t;

        if ((k & 0x3F) == 0x3F) {
            // Everything past k is bounded by sum_{j>k} p u^j (j/m + l + 2)
            //   = u^(k+1) * (((k+1) + (1-p)/p) / m + l + 2).
            const long double u_tail = std::exp(static_cast<long double>(k + 1) * log_u);
            const long double tail =
                u_tail * ((static_cast<long double>(k + 1) + u_over_p) / cp.m + fixed_len);
            if (tail < tol) break;
        }
        if ((k & 0x3FFF) == 0x3FFF) {
            // Re-anchor the running weight; pure multiplication drifts a few
            // ulps per step, which matters over tens of millions of terms.
            weight = lp * std::exp(static_cast<long double>(k + 1) * log_u);
        } else {
            weight *= 1.0L - lp;
        }
        if (++r == cp.m) {
            r = 0;
            ++s;
        }
    }
    return static_cast<double>(sum);
}

double entropy(double p) {
    GeometricSource source(p);  // validates the range
    const double log2_u = std::log1p(-p) * kLog2E;
    return -std::log2(p) - (1.0 - p) / p * log2_u;
}

double fluctuation(double z) {
    const double frac = z - std::floor(z);
    return 4.0 * std::exp2(-std::exp2(1.0 - frac)) - frac - 1.0;
}

double expected_length_asymptotic(double p) {
    GeometricSource source(p);
    const double z = std::log2(1.0 / p) + kLog2Ln2;
    return z + 2.0 + fluctuation(z);
}

FluctuationConstants compute_constants() {
    FluctuationConstants c;

    // Integrating f over one period leaves a difference of exponential
    // integrals: omega = 4 log2(e) * (E1(ln 2) - E1(2 ln 2)) - 3/2.
    c.omega = 4.0 * kLog2E *
                  (numerics::exp_integral_e1(kLn2) - numerics::exp_integral_e1(2.0 * kLn2)) -
              1.5;

    // Interior extrema of f solve x e^-x = log2(e)/4 with x = 2^(1 - frac(z)) * ln 2.
    // The left-hand side peaks at x = 1 (value 1/e > log2(e)/4), giving one
    // root on each side.
    const auto extremum_eq = [](double x) { return x * std::exp(-x) - kLog2E / 4.0; };
    c.x1 = numerics::solve_bracketed(extremum_eq, {0.01, 1.0}, 1e-13);
    c.x0 = numerics::solve_bracketed(extremum_eq, {1.0, 3.0}, 1e-13);

    // Map a root x back to its location in the period: frac(z) = 1 - log2(x / ln 2).
    const auto z_of_root = [](double x) {
        const double z = 1.0 + kLog2Ln2 - std::log2(x);
        return z - std::floor(z);
    };
    c.z1 = z_of_root(c.x1);
    c.z0 = z_of_root(c.x0);
    c.f_max = fluctuation(c.z1);
    c.f_min = fluctuation(c.z0);

    c.redundancy_const = kLog2Ln2 + 2.0 + c.omega - kLog2E;
    return c;
}

AnalysisRow analyze(double p) {
    const CodeParams cp = compute_params(p);
    AnalysisRow row;
    row.p = p;
    row.m = cp.m;
    row.l = cp.l;
    row.h = cp.h;
    row.q = cp.q;
    const double log2_m = std::log2(static_cast<double>(cp.m));
    row.theta = log2_m - std::floor(log2_m);
    row.exact_len = expected_length_exact(p);
    row.entropy = entropy(p);
    row.asymptotic_len = expected_length_asymptotic(p);
    row.redundancy = row.exact_len - row.entropy;
    return row;
}

}  // namespace gvrl::analysis

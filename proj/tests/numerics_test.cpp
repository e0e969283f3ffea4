#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "gvrl/numerics.hpp"

using gvrl::numerics::Bracket;
using gvrl::numerics::exp_integral_e1;
using gvrl::numerics::solve_bracketed;

namespace {

// Independent oracle for E1. Substituting t = y - ln(1 - v) turns
// int_y^inf e^-t / t dt into int_0^1 e^-y / (y - ln(1 - v)) dv, which is
// smooth and bounded on [0, 1), so adaptive Simpson converges fast.
double e1_integrand(double y, double v) {
    return std::exp(-y) / (y - std::log1p(-v));
}

double simpson(double a, double b, double fa, double fm, double fb) {
    return (b - a) / 6.0 * (fa + 4.0 * fm + fb);
}

double adaptive_simpson(double y, double a, double b, double fa, double fm, double fb,
                        double whole, double tol, int depth) {
    const double m = 0.5 * (a + b);
    const double lm = 0.5 * (a + m);
    const double rm = 0.5 * (m + b);
    const double flm = e1_integrand(y, lm);
    const double frm = e1_integrand(y, rm);
    const double left = simpson(a, m, fa, flm, fm);
    const double right = simpson(m, b, fm, frm, fb);
    if (depth <= 0 || std::fabs(left + right - whole) < 15.0 * tol)
        return left + right + (left + right - whole) / 15.0;
    return adaptive_simpson(y, a, m, fa, flm, fm, left, 0.5 * tol, depth - 1) +
           adaptive_simpson(y, m, b, fm, frm, fb, right, 0.5 * tol, depth - 1);
}

double e1_quadrature(double y) {
    // Stop just short of v = 1; the discarded sliver contributes less than
    // e^-y * (1 - vmax) / y, far below the comparison tolerances.
    const double a = 0.0;
    const double b = 1.0 - 1e-16;
    const double fa = e1_integrand(y, a);
    const double fb = e1_integrand(y, b);
    const double fm = e1_integrand(y, 0.5 * (a + b));
    const double whole = simpson(a, b, fa, fm, fb);
    return adaptive_simpson(y, a, b, fa, fm, fb, whole, 1e-14, 40);
}

constexpr double kLn2 = 0.6931471805599453094;

}  // namespace

TEST_CASE("E1 matches frozen high-precision references") {
    CHECK(std::fabs(exp_integral_e1(kLn2) - 0.37867104306108795) < 1e-13);
    CHECK(std::fabs(exp_integral_e1(2 * kLn2) - 0.1186620564471231) < 1e-13);
    // classic tabulated value
    CHECK(std::fabs(exp_integral_e1(1.0) - 0.21938393439552028) < 1e-13);
}

TEST_CASE("E1 agrees with the quadrature oracle on both branches") {
    for (double y : {0.1, 0.2, 0.5, 0.69, 1.0, 1.38, 1.49, 1.51, 1.7, 2.0, 3.0, 5.0, 8.0}) {
        CAPTURE(y);
        CHECK(std::fabs(exp_integral_e1(y) - e1_quadrature(y)) < 5e-13);
    }
}

TEST_CASE("E1 series and continued fraction meet smoothly at the crossover") {
    // derivative is about -0.149 near 1.5, so 2e-9 apart means ~3e-10 change
    const double below = exp_integral_e1(1.5 - 1e-9);
    const double above = exp_integral_e1(1.5 + 1e-9);
    CHECK(std::fabs(below - above) < 1e-9);
}

TEST_CASE("E1 domain and monotonicity") {
    CHECK_THROWS_AS(exp_integral_e1(0.0), std::domain_error);
    CHECK_THROWS_AS(exp_integral_e1(-1.0), std::domain_error);
    CHECK_THROWS_AS(exp_integral_e1(std::nan("")), std::domain_error);
    CHECK(exp_integral_e1(0.5) > exp_integral_e1(1.0));
    CHECK(exp_integral_e1(1.0) > exp_integral_e1(2.0));
}

TEST_CASE("bisection finds bracketed roots") {
    const double linear = solve_bracketed([](double x) { return x - 0.5; }, {0.0, 1.0}, 1e-12);
    CHECK(std::fabs(linear - 0.5) < 1e-12);

    const double sqrt2 = solve_bracketed([](double x) { return x * x - 2.0; }, {1.0, 2.0}, 1e-13);
    CHECK(std::fabs(sqrt2 - std::sqrt(2.0)) < 1e-12);

    // decreasing function: sign order must not matter
    const double dec = solve_bracketed([](double x) { return 1.0 - x * x; }, {0.0, 3.0}, 1e-13);
    CHECK(std::fabs(dec - 1.0) < 1e-12);
}

TEST_CASE("bisection returns exact endpoint roots immediately") {
    CHECK(solve_bracketed([](double x) { return x; }, {0.0, 1.0}, 1e-12) == 0.0);
    CHECK(solve_bracketed([](double x) { return x - 1.0; }, {0.0, 1.0}, 1e-12) == 1.0);
}

TEST_CASE("bisection rejects bad input") {
    const auto fn = [](double x) { return x - 0.5; };
    CHECK_THROWS_AS(solve_bracketed(fn, {0.0, 1.0}, 0.0), std::invalid_argument);
    CHECK_THROWS_AS(solve_bracketed(fn, {0.0, 1.0}, -1e-9), std::invalid_argument);
    CHECK_THROWS_AS(solve_bracketed(fn, {1.0, 0.0}, 1e-12), std::invalid_argument);
    CHECK_THROWS_AS(solve_bracketed(fn, {1.0, 1.0}, 1e-12), std::invalid_argument);
    // no sign change
    CHECK_THROWS_AS(solve_bracketed([](double x) { return x + 1.0; }, {0.0, 1.0}, 1e-12),
                    std::invalid_argument);
}

TEST_CASE("bisection is deterministic") {
    const auto fn = [](double x) { return std::cos(x) - x; };
    const double a = solve_bracketed(fn, {0.0, 1.0}, 1e-13);
    const double b = solve_bracketed(fn, {0.0, 1.0}, 1e-13);
    CHECK(a == b);
    CHECK(std::fabs(std::cos(a) - a) < 1e-12);
}

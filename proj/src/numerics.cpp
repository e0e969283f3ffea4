#include "gvrl/numerics.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace gvrl::numerics {

namespace {

constexpr long double kEulerGamma = 0.577215664901532860606512090082402431L;

// E1(y) = -gamma - ln y + sum_{k>=1} (-1)^(k+1) y^k / (k * k!).
// Alternating but mild for y <= 1.5 (terms peak near 1), so long double
// headroom comfortably covers the 1e-12 target.
long double e1_series(long double y) {
    long double sum = 0.0L;
    long double power_over_factorial = 1.0L;  // y^k / k!
    for (int k = 1; k <= 80; ++k) {
        power_over_factorial *= y / k;
        const long double term = power_over_factorial / k;
        sum += (k % 2 == 1) ? term : -term;
        if (power_over_factorial < 1e-20L) break;
    }
    return -kEulerGamma - std::log(y) + sum;
}

// Modified Lentz evaluation of the continued fraction
//   E1(y) = e^-y / (y + 1 - 1/(y + 3 - 4/(y + 5 - 9/(...)))).
long double e1_continued_fraction(long double y) {
    const long double tiny = 1e-300L;
    long double b = y + 1.0L;
    long double c = 1.0L / tiny;
    long double d = 1.0L / b;
    long double h = d;
    for (int i = 1; i <= 200; ++i) {
        const long double a = -static_cast<long double>(i) * i;
        b += 2.0L;
        d = a * d + b;
        if (std::fabs(d) < tiny) d = tiny;
        c = b + a / c;
        if (std::fabs(c) < tiny) c = tiny;
        d = 1.0L / d;
        const long double delta = c * d;
        h *= delta;
        if (std::fabs(delta - 1.0L) < 1e-18L) break;
    }
    return std::exp(-y) * h;
}

}  // namespace

double exp_integral_e1(double y) {
    if (!(y > 0.0))
        throw std::domain_error("exp_integral_e1 requires y > 0, got " + std::to_string(y));
    const long double ly = static_cast<long double>(y);
    return static_cast<double>(ly <= 1.5L ? e1_series(ly) : e1_continued_fraction(ly));
}

double solve_bracketed(const std::function<double(double)>& fn, Bracket bracket, double tol) {
    if (!(tol > 0.0)) throw std::invalid_argument("bisection tolerance must be positive");
    double lo = bracket.lo;
    double hi = bracket.hi;
    if (!(lo < hi)) throw std::invalid_argument("bracket must satisfy lo < hi");

    double flo = fn(lo);
    double fhi = fn(hi);
    if (flo == 0.0) return lo;
    if (fhi == 0.0) return hi;
    if ((flo < 0.0) == (fhi < 0.0))
        throw std::invalid_argument("function does not change sign across the bracket");

    // 200 halvings take any finite bracket below double spacing, so the
    // width test is what actually terminates.
    for (int i = 0; i < 200 && hi - lo > tol; ++i) {
        const double mid = lo + 0.5 * (hi - lo);
        if (mid <= lo || mid >= hi) break;  // interval no longer splittable
        const double fmid = fn(mid);
        if (fmid == 0.0) return mid;
        if ((fmid < 0.0) == (flo < 0.0)) {
            lo = mid;
            flo = fmid;
        } else {
            hi = mid;
        }
    }
    return lo + 0.5 * (hi - lo);
}

}  // namespace gvrl::numerics

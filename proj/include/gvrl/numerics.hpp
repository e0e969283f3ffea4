#pragma once

#include <functional>

namespace gvrl::numerics {

/// Exponential integral E1(y) = integral from y to infinity of e^-t / t dt,
/// for y > 0. Absolute error is below 1e-12 over the range used here
/// (roughly [0.1, 10]): a power series around 0 hands off to a continued
/// fraction at y = 1.5.
double exp_integral_e1(double y);

struct Bracket {
    double lo = 0.0;
    double hi = 0.0;
};

/// Bisection on [lo, hi]. Requires fn(lo) and fn(hi) to have opposite
/// signs and tol > 0; returns the midpoint of the final interval once its
/// width drops below tol. Deterministic for a given (fn, bracket, tol).
double solve_bracketed(const std::function<double(double)>& fn, Bracket bracket, double tol);

}  // namespace gvrl::numerics

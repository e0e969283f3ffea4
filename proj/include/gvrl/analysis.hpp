#pragma once

#include <cstdint>

namespace gvrl::analysis {

/// One evaluation of the code at a given source parameter p.
struct AnalysisRow {
    double p = 0.0;
    std::uint64_t m = 1;
    unsigned l = 0;
    std::uint64_t h = 0;
    double q = 0.0;           // 1 - (1-p)^m
    double theta = 0.0;       // fractional part of log2 m, in [0, 1)
    double exact_len = 0.0;   // expected codeword length, closed form
    double entropy = 0.0;     // source entropy in bits per symbol
    double asymptotic_len = 0.0;
    double redundancy = 0.0;  // exact_len - entropy
};

/// Constants describing the periodic fluctuation f and the small-p
/// behavior of the redundancy.
struct FluctuationConstants {
    double omega = 0.0;             // mean of f over one period
    double x0 = 0.0;                // roots of x e^-x = log2(e)/4 ...
    double x1 = 0.0;                // ... with x1 < 1 < x0
    double z0 = 0.0;                // argmin of f in [0, 1)
    double z1 = 0.0;                // argmax of f in [0, 1)
    double f_min = 0.0;
    double f_max = 0.0;
    double redundancy_const = 0.0;  // log2(ln 2) + 2 + omega - log2(e)
};

/// Expected codeword length in closed form:
///   l + ((1-p)^(m-2h) - (1-p)^m) / (1 - (1-p)^m) + 1 / (1 - (1-p)^m).
double expected_length_exact(double p);

/// Brute-force cross-check: sums P(k) * |codeword(k)| until a certified
/// upper bound on the dropped tail falls below tol. Requires tol > 0.
double expected_length_enumeration(double p, double tol);

/// Entropy of the geometric source in bits:
///   log2(1/p) - ((1-p)/p) * log2(1-p).
double entropy(double p);

/// Period-1 fluctuation f(z) = 4 * 2^(-2^(1 - frac(z))) - frac(z) - 1.
/// Accepts any real z; f(integer) = 0 exactly.
double fluctuation(double z);

/// Small-p expected-length law: with z = log2(1/p) + log2(ln 2),
///   z + 2 + f(z).
double expected_length_asymptotic(double p);

/// Computes FluctuationConstants from scratch (exponential integrals for
/// omega, bisection for the extrema). Costs microseconds; no caching.
FluctuationConstants compute_constants();

AnalysisRow analyze(double p);

}  // namespace gvrl::analysis

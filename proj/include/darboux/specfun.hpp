#pragma once

// Special functions needed by the modified trace conditions and the Riemann
// function: Gamma, digamma, and the Gauss hypergeometric series.
//
// digamma uses the argument-raising recurrence psi(x+1) = psi(x) + 1/x up to
// x >= 8, then the asymptotic expansion
//     psi(x) ~ ln x - 1/(2x) - sum_k B_{2k} / (2k x^{2k}).
// 2F1 is summed directly with the term-ratio recurrence; only 0 <= z < 1 is
// supported (the Riemann function never needs more on proper sub-triangles).

#include <cmath>
#include <cstddef>

#include "darboux/errors.hpp"

namespace darboux::specfun {

inline double gamma_fn(double x) {
    if (!(x > 0.0)) throw DomainError("gamma_fn: argument must be positive");
    return std::tgamma(x);
}

inline double digamma(double x) {
    if (!(x > 0.0)) throw DomainError("digamma: argument must be positive");
    double acc = 0.0;
    while (x < 8.0) {
        acc -= 1.0 / x;
        x += 1.0;
    }
    // B_{2k}/(2k) for k = 1..8
    static constexpr double c[] = {
        1.0 / 12.0,   -1.0 / 120.0,    1.0 / 252.0, -1.0 / 240.0,
        1.0 / 132.0,  -691.0 / 32760.0, 1.0 / 12.0,  -3617.0 / 8160.0};
    const double inv2 = 1.0 / (x * x);
    double term = inv2, series = 0.0;
    for (double ck : c) {
        series += ck * term;
        term *= inv2;
    }
    return acc + std::log(x) - 0.5 / x - series;
}

inline double gauss_2f1(double a, double b, double c, double z) {
    if (c <= 0.0 && c == std::floor(c))
        throw DomainError("gauss_2f1: c must not be a non-positive integer");
    if (!(z >= 0.0 && z < 1.0))
        throw DomainError("gauss_2f1: z must lie in [0, 1)");
    double term = 1.0, sum = 1.0;
    for (std::size_t n = 0; n < 2'000'000; ++n) {
        const double dn = static_cast<double>(n);
        term *= (a + dn) * (b + dn) / ((c + dn) * (dn + 1.0)) * z;
        sum += term;
        if (std::abs(term) <= 1e-17 * std::abs(sum)) return sum;
    }
    throw DomainError("gauss_2f1: series did not converge (z too close to 1)");
}

enum class SpecialConstant {
    psi_half_minus_psi_one,  // psi(1/2) - psi(1)            = -2 ln 2
    c2_const,                // 2 psi(1/2) - 2 psi(1) + 1    = 1 - 4 ln 2
    c3_const,                // psi(3/2) - psi(3)            = 1/2 - 2 ln 2
    gamma_half_sq            // Gamma(1/2)^2                 = pi
};

// Computed once from the operations above; never hard-coded.
inline double special_constant(SpecialConstant which) {
    static const double psi_half = digamma(0.5);
    static const double psi_one = digamma(1.0);
    static const double vals[4] = {
        psi_half - psi_one,
        2.0 * psi_half - 2.0 * psi_one + 1.0,
        digamma(1.5) - digamma(3.0),
        gamma_fn(0.5) * gamma_fn(0.5),
    };
    return vals[static_cast<int>(which)];
}

inline double psi_half_minus_psi_one() {
    return special_constant(SpecialConstant::psi_half_minus_psi_one);
}
inline double c2_const() { return special_constant(SpecialConstant::c2_const); }
inline double c3_const() { return special_constant(SpecialConstant::c3_const); }
inline double gamma_half_sq() {
    return special_constant(SpecialConstant::gamma_half_sq);
}

}  // namespace darboux::specfun

#pragma once

// Scalar special functions shared by the whole library: reciprocal Gamma,
// the second-order Bessel-Wright function, the entire Bessel-Tricomi series
// for J0(2*sqrt(x)), and a classical Laguerre recurrence used as a
// cross-check oracle.

#include <array>
#include <cstddef>

namespace lagint {

// Compensated (Kahan) accumulator. All series and polynomial sums in the
// library accumulate through this.
class KahanSum {
public:
    void add(double term) {
        const double t = term - carry_;
        const double s = sum_ + t;
        carry_ = (s - sum_) - t;
        sum_ = s;
    }
    double value() const { return sum_; }

private:
    double sum_ = 0.0;
    double carry_ = 0.0;
};

inline constexpr int kMaxFactorial = 170;

// n! as a double, n in [0, 170]. Throws std::domain_error outside.
double factorial(int n);

// log Gamma(x) for x > 0.
double log_gamma(double x);

// 1/Gamma(g+1) for g > -1. Integer g uses the exact factorial table;
// non-integer arguments go through Gamma directly (no exp(log) round trip,
// which would lose relative precision at large g). Relative error stays
// below 1e-14 for g <= 170; larger non-integer g underflows toward zero.
double reciprocal_gamma(double g);

// Second-order Bessel-Wright function W_nu(x|2) = sum_k x^k / (k! Gamma(2k+nu+1)).
// Entire in x; requires nu > -1. Terms are generated by the multiplicative
// recurrence and summed ascending with compensation until the running term
// stays below 1e-17 of the partial sum for two consecutive indices.
double wright2(double nu, double x);

// sum_k (-x)^k / (k!)^2, entire in x. Equals J0(2*sqrt(x)) for x >= 0 and
// I0(2*sqrt(-x)) for x < 0, which is the continuation the Bessel-weighted
// integrals need on the negative half line.
double bessel_tricomi0(double x);

// Classical associated Laguerre polynomial L_n^(nu)(x) by the stable
// three-term recurrence. n >= 0, nu > -1.
double classical_laguerre(int n, double nu, double x);

} // namespace lagint

#pragma once

// Explicit-sum evaluation of the polynomial families used by the integral
// closed forms:
//
//   hermite2        H_n(x,y)          = n! sum_k x^(n-2k) y^k / ((n-2k)! k!)
//   laguerre2       L_n(x,y)          = n! sum_k (-1)^k x^k y^(n-k) / ((n-k)! (k!)^2)
//   laguerre_assoc  L_n^(nu)(x,y)     = (G(n+nu+1)/n!) sum_k C(n,k)(-x)^k y^(n-k) / G(k+nu+1)
//   q_poly          Q_n^(nu)(x,y)     = n! sum_k x^(n-2k) y^k / ((n-2k)! k! G(2k+nu+1))
//   hermite_2index  H_{m,n}(x,y;w,z|tau)
//   q_2index        Q_{m,n}^(mu,nu)(x,y;w,z|tau)   (order rises as k+mu, k+nu inside the sum)
//   t_poly          T_{m,n}^(nu)(x,y;w,z|tau)      (mixed Q x Hermite sum)
//
// Every family is evaluated as a finite explicit sum with coefficients from
// the factorial/Gamma tables, ascending in k with compensated summation.
// Indices are capped at 60 to keep mixed coefficient products inside double
// range.

#include <optional>
#include <stdexcept>

namespace lagint {

inline constexpr int kMaxPolyDegree = 60;

// Value plus summation diagnostics. max_abs_term / |value| is the
// cancellation magnitude reported by the integral layer.
struct SumDiag {
    double value = 0.0;
    double max_abs_term = 0.0;
    int term_count = 0;
};

double hermite2(int n, double x, double y);
double laguerre2(int n, double x, double y);
double laguerre_assoc(int n, double nu, double x, double y);
double q_poly(int n, double nu, double x, double y);

// Right-hand side of the argument-shift identity
// H_n(x+a, y) = sum_k C(n,k) a^k H_{n-k}(x,y); must agree with
// hermite2(n, x+a, y).
double hermite2_shift_expand(int n, double a, double x, double y);

double hermite_2index(int m, int n, double x, double y, double w, double z,
                      double tau);
double q_2index(int m, int n, double mu, double nu, double x, double y,
                double w, double z, double tau);
double t_poly(int m, int n, double nu, double x, double y, double w, double z,
              double tau);

// Diagnostic variants used by the integrals layer.
SumDiag hermite2_diag(int n, double x, double y);
SumDiag q_poly_diag(int n, double nu, double x, double y);
SumDiag q_2index_diag(int m, int n, double mu, double nu, double x, double y,
                      double w, double z, double tau);
SumDiag t_poly_diag(int m, int n, double nu, double x, double y, double w,
                    double z, double tau);

// Gamma(n + nu + 1) / n! for n >= 0, nu > -1. Exactly 1 when nu == 0.
double gamma_ratio_over_factorial(int n, double nu);

// x^e for integer e >= 0 by squaring, with 0^0 == 1.
double ipow(double x, int e);

enum class PolyFamily {
    Hermite2,
    Laguerre2,
    LaguerreAssoc,
    Q,
    Hermite2Index,
    Q2Index,
    T,
};

// Uniform evaluation request. Field presence per family is validated at
// construction; evaluate() dispatches to the functions above.
struct PolyEval {
    PolyFamily family;
    std::optional<int> n;
    std::optional<int> m;
    std::optional<double> mu;
    std::optional<double> nu;
    std::optional<double> x;
    std::optional<double> y;
    std::optional<double> w;
    std::optional<double> z;
    std::optional<double> tau;

    // Throws std::invalid_argument on wrong arity, std::domain_error on
    // domain violations (index cap, order <= -1).
    void validate() const;
    double evaluate() const;
};

} // namespace lagint

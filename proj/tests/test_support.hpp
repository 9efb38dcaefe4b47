#pragma once

// Catch-free helpers shared by the unit tests and the acceptance runner.
// Everything numeric here is computed in long double through routes that do
// not share code with the library: raw series, Gaussian moments against
// explicit x-coefficient lists, and exact rational differentiation. These
// are the "third opinions" used alongside the quadrature oracle.

#include "lagint/rational.hpp"
#include "lagint/umbral.hpp"

#include <cmath>
#include <cstdlib>
#include <map>
#include <random>
#include <utility>
#include <vector>

namespace testsup {

inline const long double kPi = acosl(-1.0L);

inline long double ref_factorial(int k) {
    long double f = 1.0L;
    for (int i = 2; i <= k; ++i) f *= i;
    return f;
}

// W_nu(x|2) = sum_k x^k / (k! Gamma(2k+nu+1)), long double throughout.
inline long double ref_wright2(long double nu, long double x) {
    long double term = 1.0L / tgammal(nu + 1.0L);
    long double sum = term;
    for (int k = 1; k <= 400; ++k) {
        term *= x / (k * (2.0L * k + nu - 1.0L) * (2.0L * k + nu));
        sum += term;
        if (fabsl(term) < 1e-25L * (1.0L + fabsl(sum))) break;
    }
    return sum;
}

// sum_k (-x)^k / (k!)^2: J0(2 sqrt x) continued through x < 0.
inline long double ref_tricomi0(long double x) {
    long double term = 1.0L;
    long double sum = 1.0L;
    for (int k = 1; k <= 400; ++k) {
        term *= -x / (static_cast<long double>(k) * k);
        sum += term;
        if (fabsl(term) < 1e-25L * (1.0L + fabsl(sum))) break;
    }
    return sum;
}

// int x^k e^{-alpha x^2} dx over the real line.
inline long double gaussian_moment(int k, long double alpha) {
    if (k % 2 == 1) return 0.0L;
    long double v = sqrtl(kPi / alpha);
    for (int i = 1; i <= k / 2; ++i) v *= (2.0L * i - 1.0L) / (2.0L * alpha);
    return v;
}

// x-coefficients of L_n^{(nu)}(x, u):
// (Gamma(n+nu+1)/n!) * C(n,k) (-1)^k u^{n-k} / Gamma(k+nu+1) at x^k.
inline std::vector<long double> laguerre_coeffs(int n, long double nu,
                                                long double u) {
    std::vector<long double> c(static_cast<size_t>(n) + 1);
    const long double pref = tgammal(n + nu + 1.0L) / ref_factorial(n);
    for (int k = 0; k <= n; ++k) {
        const long double binom =
            ref_factorial(n) / (ref_factorial(n - k) * ref_factorial(k));
        c[static_cast<size_t>(k)] = pref * binom * (k % 2 ? -1.0L : 1.0L) *
                                    powl(u, n - k) / tgammal(k + nu + 1.0L);
    }
    return c;
}

// x-coefficients of H_n(f x + g, z).
inline std::vector<long double> hermite_coeffs(int n, long double f,
                                               long double g, long double z) {
    std::vector<long double> c(static_cast<size_t>(n) + 1, 0.0L);
    for (int j = 0; 2 * j <= n; ++j) {
        const int p = n - 2 * j;
        const long double base = ref_factorial(n) /
                                 (ref_factorial(p) * ref_factorial(j)) *
                                 powl(z, j);
        for (int i = 0; i <= p; ++i) {
            const long double binom =
                ref_factorial(p) / (ref_factorial(i) * ref_factorial(p - i));
            c[static_cast<size_t>(i)] +=
                base * binom * powl(f, i) * powl(g, p - i);
        }
    }
    return c;
}

inline std::vector<long double> poly_mul(const std::vector<long double>& a,
                                         const std::vector<long double>& b) {
    std::vector<long double> c(a.size() + b.size() - 1, 0.0L);
    for (size_t i = 0; i < a.size(); ++i) {
        for (size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
    }
    return c;
}

// int (sum_k c_k x^k) e^{-alpha x^2} dx via the moment table.
inline long double integrate_coeffs(const std::vector<long double>& c,
                                    long double alpha) {
    long double sum = 0.0L;
    for (size_t k = 0; k < c.size(); ++k) {
        sum += c[k] * gaussian_moment(static_cast<int>(k), alpha);
    }
    return sum;
}

// Sheffer operational identity, exact: the truncated Wright series in
// y d^2/dx^2 applied to x^n (rational differentiation ladder) must equal
// the engine's reduced Q_n^{(alpha)} coefficient-by-coefficient.
inline bool operational_identity_holds(int n, int alpha) {
    using lagint::BigInt;
    using lagint::Rational;
    std::map<std::pair<int, int>, Rational> lhs;
    for (int k = 0; 2 * k <= n; ++k) {
        BigInt fall = 1;
        for (int d = 0; d < 2 * k; ++d) fall *= n - d;
        const Rational coeff(fall, lagint::big_factorial(static_cast<unsigned>(k)) *
                                       lagint::big_factorial(
                                           static_cast<unsigned>(2 * k + alpha)));
        if (coeff != 0) lhs[{n - 2 * k, k}] = coeff;
    }
    const lagint::ReducedSum reduced =
        lagint::vacuum_reduce(lagint::q_umbral_form("x", "y", n, Rational(alpha)));
    std::map<std::pair<int, int>, Rational> rhs;
    for (const lagint::ReducedTerm& t : reduced.terms()) {
        if (!t.gamma_args.empty()) return false;
        int xp = 0;
        int yp = 0;
        for (const auto& [name, e] : t.vars) {
            if (name == "x") xp = e;
            else if (name == "y") yp = e;
            else return false;
        }
        rhs[{xp, yp}] = t.coeff;
    }
    return lhs == rhs;
}

// Numeric value of a reduced sum at (x, y); symbolic Gamma factors are
// evaluated in floating point.
inline double reduced_value(const lagint::ReducedSum& s, double x, double y) {
    long double sum = 0.0L;
    for (const lagint::ReducedTerm& t : s.terms()) {
        long double v = t.coeff.convert_to<long double>();
        for (const auto& [name, e] : t.vars) {
            v *= powl(name == "x" ? x : y, e);
        }
        for (const lagint::Rational& g : t.gamma_args) {
            v /= tgammal(g.convert_to<long double>() + 1.0L);
        }
        sum += v;
    }
    return static_cast<double>(sum);
}

inline std::mt19937_64 seeded_rng() {
    if (const char* env = std::getenv("UMBRAL_LAGUERRE_SEED")) {
        return std::mt19937_64(std::strtoull(env, nullptr, 10));
    }
    return std::mt19937_64(0x1a91e57ull);
}

} // namespace testsup

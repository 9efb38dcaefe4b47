#include "lagint/special.hpp"

#include <boost/math/special_functions/gamma.hpp>

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace lagint {

namespace {

constexpr std::array<double, kMaxFactorial + 1> make_factorials() {
    std::array<double, kMaxFactorial + 1> f{};
    f[0] = 1.0;
    for (int i = 1; i <= kMaxFactorial; ++i) {
        f[i] = f[i - 1] * static_cast<double>(i);
    }
    return f;
}

constexpr auto kFactorials = make_factorials();

bool is_nonneg_integer(double g) {
    return g >= 0.0 && g == std::floor(g);
}

} // namespace

double factorial(int n) {
    if (n < 0 || n > kMaxFactorial) {
        throw std::domain_error("factorial: n = " + std::to_string(n) +
                                " outside [0, 170]");
    }
    return kFactorials[static_cast<std::size_t>(n)];
}

double log_gamma(double x) {
    if (!(x > 0.0)) {
        throw std::domain_error("log_gamma: requires x > 0");
    }
    return boost::math::lgamma(x);
}

double reciprocal_gamma(double g) {
    if (!(g > -1.0)) {
        throw std::domain_error("reciprocal_gamma: requires g > -1");
    }
    if (is_nonneg_integer(g)) {
        if (g > kMaxFactorial) return 0.0; // 1/Gamma underflows well before here
        return 1.0 / kFactorials[static_cast<std::size_t>(g)];
    }
    if (g <= 170.0) {
        return 1.0 / boost::math::tgamma(g + 1.0);
    }
    return std::exp(-boost::math::lgamma(g + 1.0));
}

double wright2(double nu, double x) {
    if (!(nu > -1.0)) {
        throw std::domain_error("wright2: requires nu > -1");
    }
    KahanSum sum;
    double term = reciprocal_gamma(nu); // k = 0: 1/Gamma(nu+1)
    int stagnant = 0;
    for (int k = 0; k < 500; ++k) {
        sum.add(term);
        term *= x / ((k + 1.0) * (2.0 * k + nu + 1.0) * (2.0 * k + nu + 2.0));
        if (term == 0.0) break;
        if (std::abs(term) < 1e-17 * std::abs(sum.value())) {
            if (++stagnant >= 2) break;
        } else {
            stagnant = 0;
        }
    }
    return sum.value();
}

double bessel_tricomi0(double x) {
    KahanSum sum;
    double term = 1.0;
    int stagnant = 0;
    for (int k = 0; k < 500; ++k) {
        sum.add(term);
        term *= -x / ((k + 1.0) * (k + 1.0));
        if (term == 0.0) break;
        if (std::abs(term) < 1e-17 * std::abs(sum.value())) {
            if (++stagnant >= 2) break;
        } else {
            stagnant = 0;
        }
    }
    return sum.value();
}

double classical_laguerre(int n, double nu, double x) {
    if (n < 0) {
        throw std::domain_error("classical_laguerre: requires n >= 0");
    }
    if (!(nu > -1.0)) {
        throw std::domain_error("classical_laguerre: requires nu > -1");
    }
    if (n == 0) return 1.0;
    double prev = 1.0;
    double cur = 1.0 + nu - x;
    for (int k = 1; k < n; ++k) {
        const double next =
            ((2.0 * k + nu + 1.0 - x) * cur - (k + nu) * prev) / (k + 1.0);
        prev = cur;
        cur = next;
    }
    return cur;
}

} // namespace lagint

#include "lagint/poly.hpp"

#include "lagint/special.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace lagint {

namespace {

void check_index(int n, const char* who) {
    if (n < 0) {
        throw std::domain_error(std::string(who) + ": index must be >= 0");
    }
    if (n > kMaxPolyDegree) {
        throw std::domain_error(std::string(who) + ": index " +
                                std::to_string(n) + " exceeds cap " +
                                std::to_string(kMaxPolyDegree));
    }
}

void check_order(double nu, const char* who) {
    if (!(nu > -1.0)) {
        throw std::domain_error(std::string(who) + ": order must be > -1");
    }
}

void accumulate(SumDiag& d, KahanSum& s, double term) {
    s.add(term);
    d.max_abs_term = std::max(d.max_abs_term, std::abs(term));
    ++d.term_count;
}

} // namespace

double ipow(double x, int e) {
    double r = 1.0;
    double b = x;
    for (; e > 0; e >>= 1) {
        if (e & 1) r *= b;
        b *= b;
    }
    return r;
}

double gamma_ratio_over_factorial(int n, double nu) {
    check_index(n, "gamma_ratio_over_factorial");
    check_order(nu, "gamma_ratio_over_factorial");
    if (nu == 0.0) return 1.0;
    if (nu == std::floor(nu)) {
        double r = 1.0;
        for (int j = 1; j <= static_cast<int>(nu); ++j) r *= n + j;
        return r;
    }
    return std::exp(log_gamma(n + nu + 1.0) - log_gamma(n + 1.0));
}

SumDiag hermite2_diag(int n, double x, double y) {
    check_index(n, "hermite2");
    SumDiag d;
    KahanSum s;
    for (int k = 0; k <= n / 2; ++k) {
        const double coeff = factorial(n) / (factorial(n - 2 * k) * factorial(k));
        accumulate(d, s, coeff * ipow(x, n - 2 * k) * ipow(y, k));
    }
    d.value = s.value();
    return d;
}

double hermite2(int n, double x, double y) { return hermite2_diag(n, x, y).value; }

double laguerre2(int n, double x, double y) {
    check_index(n, "laguerre2");
    KahanSum s;
    for (int k = 0; k <= n; ++k) {
        const double coeff =
            factorial(n) / (factorial(n - k) * factorial(k) * factorial(k));
        s.add(coeff * ipow(-x, k) * ipow(y, n - k));
    }
    return s.value();
}

double laguerre_assoc(int n, double nu, double x, double y) {
    check_index(n, "laguerre_assoc");
    check_order(nu, "laguerre_assoc");
    KahanSum s;
    for (int k = 0; k <= n; ++k) {
        const double binom = factorial(n) / (factorial(n - k) * factorial(k));
        s.add(binom * ipow(-x, k) * ipow(y, n - k) * reciprocal_gamma(k + nu));
    }
    return gamma_ratio_over_factorial(n, nu) * s.value();
}

SumDiag q_poly_diag(int n, double nu, double x, double y) {
    check_index(n, "q_poly");
    check_order(nu, "q_poly");
    SumDiag d;
    KahanSum s;
    for (int k = 0; k <= n / 2; ++k) {
        const double coeff = factorial(n) / (factorial(n - 2 * k) * factorial(k));
        accumulate(d, s,
                   coeff * ipow(x, n - 2 * k) * ipow(y, k) *
                       reciprocal_gamma(2.0 * k + nu));
    }
    d.value = s.value();
    return d;
}

double q_poly(int n, double nu, double x, double y) {
    return q_poly_diag(n, nu, x, y).value;
}

double hermite2_shift_expand(int n, double a, double x, double y) {
    check_index(n, "hermite2_shift_expand");
    KahanSum s;
    for (int k = 0; k <= n; ++k) {
        const double binom = factorial(n) / (factorial(n - k) * factorial(k));
        s.add(binom * ipow(a, k) * hermite2(n - k, x, y));
    }
    return s.value();
}

namespace {

// Shared two-index loop: sum over k of
//   m! n! tau^k / ((m-k)! (n-k)! k!) * left(k) * right(k).
// The left*right product is formed first so that evaluations symmetric in
// (m,left) <-> (n,right) produce bit-identical terms.
template <typename Left, typename Right>
SumDiag two_index_sum(int m, int n, double tau, Left left, Right right) {
    SumDiag d;
    KahanSum s;
    for (int k = 0; k <= std::min(m, n); ++k) {
        const double coeff = factorial(m) * factorial(n) /
                             (factorial(m - k) * factorial(n - k) * factorial(k));
        accumulate(d, s, coeff * ipow(tau, k) * (left(k) * right(k)));
    }
    d.value = s.value();
    return d;
}

} // namespace

double hermite_2index(int m, int n, double x, double y, double w, double z,
                      double tau) {
    check_index(m, "hermite_2index");
    check_index(n, "hermite_2index");
    return two_index_sum(
               m, n, tau, [&](int k) { return hermite2(m - k, x, y); },
               [&](int k) { return hermite2(n - k, w, z); })
        .value;
}

SumDiag q_2index_diag(int m, int n, double mu, double nu, double x, double y,
                      double w, double z, double tau) {
    check_index(m, "q_2index");
    check_index(n, "q_2index");
    check_order(mu, "q_2index");
    check_order(nu, "q_2index");
    return two_index_sum(
        m, n, tau, [&](int k) { return q_poly(m - k, k + mu, x, y); },
        [&](int k) { return q_poly(n - k, k + nu, w, z); });
}

double q_2index(int m, int n, double mu, double nu, double x, double y,
                double w, double z, double tau) {
    return q_2index_diag(m, n, mu, nu, x, y, w, z, tau).value;
}

SumDiag t_poly_diag(int m, int n, double nu, double x, double y, double w,
                    double z, double tau) {
    check_index(m, "t_poly");
    check_index(n, "t_poly");
    check_order(nu, "t_poly");
    return two_index_sum(
        m, n, tau, [&](int k) { return q_poly(m - k, k + nu, x, y); },
        [&](int k) { return hermite2(n - k, w, z); });
}

double t_poly(int m, int n, double nu, double x, double y, double w, double z,
              double tau) {
    return t_poly_diag(m, n, nu, x, y, w, z, tau).value;
}

namespace {

struct Arity {
    bool m = false, mu = false, nu = false, w = false, z = false, tau = false;
};

Arity family_arity(PolyFamily f) {
    switch (f) {
        case PolyFamily::Hermite2: return {};
        case PolyFamily::Laguerre2: return {};
        case PolyFamily::LaguerreAssoc: return {.nu = true};
        case PolyFamily::Q: return {.nu = true};
        case PolyFamily::Hermite2Index:
            return {.m = true, .w = true, .z = true, .tau = true};
        case PolyFamily::Q2Index:
            return {.m = true, .mu = true, .nu = true, .w = true, .z = true, .tau = true};
        case PolyFamily::T:
            return {.m = true, .nu = true, .w = true, .z = true, .tau = true};
    }
    throw std::invalid_argument("PolyEval: unknown family");
}

template <typename T>
void need(const std::optional<T>& v, bool wanted, const char* name) {
    if (wanted && !v.has_value()) {
        throw std::invalid_argument(std::string("PolyEval: missing '") + name + "'");
    }
    if (!wanted && v.has_value()) {
        throw std::invalid_argument(std::string("PolyEval: '") + name +
                                    "' not accepted by this family");
    }
}

} // namespace

void PolyEval::validate() const {
    const Arity a = family_arity(family);
    need(n, true, "n");
    need(x, true, "x");
    need(y, true, "y");
    need(m, a.m, "m");
    need(mu, a.mu, "mu");
    need(nu, a.nu, "nu");
    need(w, a.w, "w");
    need(z, a.z, "z");
    need(tau, a.tau, "tau");
}

double PolyEval::evaluate() const {
    validate();
    switch (family) {
        case PolyFamily::Hermite2: return hermite2(*n, *x, *y);
        case PolyFamily::Laguerre2: return laguerre2(*n, *x, *y);
        case PolyFamily::LaguerreAssoc: return laguerre_assoc(*n, *nu, *x, *y);
        case PolyFamily::Q: return q_poly(*n, *nu, *x, *y);
        case PolyFamily::Hermite2Index:
            return hermite_2index(*m, *n, *x, *y, *w, *z, *tau);
        case PolyFamily::Q2Index:
            return q_2index(*m, *n, *mu, *nu, *x, *y, *w, *z, *tau);
        case PolyFamily::T: return t_poly(*m, *n, *nu, *x, *y, *w, *z, *tau);
    }
    throw std::invalid_argument("PolyEval: unknown family");
}

} // namespace lagint

#include "lagint/integrals.hpp"

#include "lagint/poly.hpp"
#include "lagint/special.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <string>
#include <vector>

namespace lagint {

namespace {

void check_alpha(double alpha) {
    if (!(alpha > 0.0)) {
        throw std::domain_error("gaussian decay alpha must be > 0");
    }
}

double gauss_norm(double alpha) {
    return std::sqrt(std::numbers::pi / alpha);
}

// max |term| / |sum| clamped below at 1; +inf flags total cancellation.
double cancellation_of(const SumDiag& d) {
    if (d.max_abs_term == 0.0) return 1.0;
    if (d.value == 0.0) return std::numeric_limits<double>::infinity();
    return std::max(1.0, d.max_abs_term / std::abs(d.value));
}

ClosedFormResult from_diag(FormulaId id, double prefactor, const SumDiag& d) {
    return {prefactor * d.value, id, d.term_count, cancellation_of(d)};
}

} // namespace

const char* formula_name(FormulaId id) {
    switch (id) {
        case FormulaId::MasterGaussian: return "master-gaussian";
        case FormulaId::LaguerreGaussian: return "laguerre-gaussian";
        case FormulaId::LaguerreAssocGaussian: return "laguerre-assoc";
        case FormulaId::LaguerreShiftedGaussian: return "laguerre-shifted";
        case FormulaId::LaguerreProductGaussian: return "laguerre-product";
        case FormulaId::LaguerreHermiteGaussian: return "laguerre-hermite";
        case FormulaId::LaguerreBesselGaussian: return "laguerre-bessel";
    }
    throw std::invalid_argument("unknown formula id");
}

ClosedFormResult master_gaussian(int n, double a, double b, GaussianParams gp) {
    check_alpha(gp.alpha);
    const double pref = gauss_norm(gp.alpha) *
                        std::exp(gp.beta * gp.beta / (4.0 * gp.alpha));
    const SumDiag d = hermite2_diag(n, b + a * gp.beta / (2.0 * gp.alpha),
                                    a * a / (4.0 * gp.alpha));
    return from_diag(FormulaId::MasterGaussian, pref, d);
}

ClosedFormResult laguerre_gaussian(int n, double u, double alpha) {
    check_alpha(alpha);
    const SumDiag d = q_poly_diag(n, 0.0, u, 1.0 / (4.0 * alpha));
    return from_diag(FormulaId::LaguerreGaussian, gauss_norm(alpha), d);
}

ClosedFormResult laguerre_assoc_gaussian(int n, double nu, double u,
                                         double alpha) {
    check_alpha(alpha);
    const SumDiag d = q_poly_diag(n, nu, u, 1.0 / (4.0 * alpha));
    const double pref = gauss_norm(alpha) * gamma_ratio_over_factorial(n, nu);
    return from_diag(FormulaId::LaguerreAssocGaussian, pref, d);
}

ClosedFormResult laguerre_shifted_gaussian(int n, double nu, double shift,
                                           double u, double alpha) {
    check_alpha(alpha);
    const double q_second = 1.0 / (4.0 * alpha);
    SumDiag d;
    KahanSum s;
    for (int k = 0; k <= n; ++k) {
        const double binom = factorial(n) / (factorial(n - k) * factorial(k));
        const double term =
            binom * ipow(-shift, k) * q_poly(n - k, k + nu, u, q_second);
        s.add(term);
        d.max_abs_term = std::max(d.max_abs_term, std::abs(term));
        ++d.term_count;
    }
    d.value = s.value();
    const double pref = gauss_norm(alpha) * gamma_ratio_over_factorial(n, nu);
    return from_diag(FormulaId::LaguerreShiftedGaussian, pref, d);
}

ClosedFormResult laguerre_product_gaussian(int m, int n, double mu, double nu,
                                           double u, double v, double alpha) {
    check_alpha(alpha);
    const double q_second = 1.0 / (4.0 * alpha);
    const SumDiag d = q_2index_diag(m, n, mu, nu, u, q_second, v, q_second,
                                    1.0 / (2.0 * alpha));
    // Grouped so the (m,mu,u) <-> (n,nu,v) swap yields bit-identical results.
    const double pref =
        gauss_norm(alpha) *
        (gamma_ratio_over_factorial(m, mu) * gamma_ratio_over_factorial(n, nu));
    return from_diag(FormulaId::LaguerreProductGaussian, pref, d);
}

ClosedFormResult laguerre_hermite_gaussian(int m, int n, double nu, double y,
                                           double f, double g, double z,
                                           double alpha,
                                           PrefactorConvention conv) {
    check_alpha(alpha);
    const SumDiag d =
        t_poly_diag(m, n, nu, y, 1.0 / (4.0 * alpha), g,
                    z + f * f / (4.0 * alpha), -f / (2.0 * alpha));
    const int pref_index = conv == PrefactorConvention::MIndex ? m : n;
    const double pref =
        gauss_norm(alpha) * gamma_ratio_over_factorial(pref_index, nu);
    return from_diag(FormulaId::LaguerreHermiteGaussian, pref, d);
}

ClosedFormResult laguerre_bessel_gaussian(int n, double y, double alpha) {
    check_alpha(alpha);
    if (n < 0 || n > kMaxPolyDegree) {
        throw std::domain_error("laguerre_bessel_gaussian: index out of range");
    }
    const double inv4a = 1.0 / (4.0 * alpha);
    const double inv2a = 1.0 / (2.0 * alpha);
    std::vector<double> wright(static_cast<size_t>(n) + 1);
    for (int p = 0; p <= n; ++p) {
        wright[static_cast<size_t>(p)] = wright2(static_cast<double>(p), inv4a);
    }
    SumDiag d;
    KahanSum s;
    for (int k = 0; k <= n / 2; ++k) {
        for (int p = 0; p <= n - 2 * k; ++p) {
            const double term = factorial(n) * ipow(y, n - 2 * k - p) *
                                ipow(inv4a, k) * ipow(inv2a, p) /
                                (factorial(n - 2 * k - p) * factorial(p) *
                                 factorial(k) * factorial(2 * k + p)) *
                                wright[static_cast<size_t>(p)];
            s.add(term);
            d.max_abs_term = std::max(d.max_abs_term, std::abs(term));
            ++d.term_count;
        }
    }
    d.value = s.value();
    return from_diag(FormulaId::LaguerreBesselGaussian, gauss_norm(alpha), d);
}

void IntegralParams::validate() const {
    check_alpha(gauss.alpha);
    auto check_idx = [](int i, const char* who) {
        if (i < 0 || i > kMaxPolyDegree) {
            throw std::domain_error(std::string(who) + " out of [0, " +
                                    std::to_string(kMaxPolyDegree) + "]");
        }
    };
    auto check_order = [](double o, const char* who) {
        if (!(o > -1.0)) {
            throw std::domain_error(std::string(who) + " must be > -1");
        }
    };
    check_idx(n, "index n");
    switch (family) {
        case FormulaId::MasterGaussian:
        case FormulaId::LaguerreGaussian:
        case FormulaId::LaguerreBesselGaussian:
            break;
        case FormulaId::LaguerreAssocGaussian:
        case FormulaId::LaguerreShiftedGaussian:
            check_order(nu, "order nu");
            break;
        case FormulaId::LaguerreProductGaussian:
            check_idx(m, "index m");
            check_order(mu, "order mu");
            check_order(nu, "order nu");
            break;
        case FormulaId::LaguerreHermiteGaussian:
            check_idx(m, "index m");
            check_order(nu, "order nu");
            break;
    }
}

ClosedFormResult evaluate_closed_form(const IntegralParams& p,
                                      PrefactorConvention conv) {
    p.validate();
    switch (p.family) {
        case FormulaId::MasterGaussian:
            return master_gaussian(p.n, p.a, p.b, p.gauss);
        case FormulaId::LaguerreGaussian:
            return laguerre_gaussian(p.n, p.u, p.gauss.alpha);
        case FormulaId::LaguerreAssocGaussian:
            return laguerre_assoc_gaussian(p.n, p.nu, p.u, p.gauss.alpha);
        case FormulaId::LaguerreShiftedGaussian:
            return laguerre_shifted_gaussian(p.n, p.nu, p.shift, p.u,
                                             p.gauss.alpha);
        case FormulaId::LaguerreProductGaussian:
            return laguerre_product_gaussian(p.m, p.n, p.mu, p.nu, p.u, p.v,
                                             p.gauss.alpha);
        case FormulaId::LaguerreHermiteGaussian:
            return laguerre_hermite_gaussian(p.m, p.n, p.nu, p.y, p.f, p.g,
                                             p.z, p.gauss.alpha, conv);
        case FormulaId::LaguerreBesselGaussian:
            return laguerre_bessel_gaussian(p.n, p.y, p.gauss.alpha);
    }
    throw std::invalid_argument("unknown formula id");
}

} // namespace lagint

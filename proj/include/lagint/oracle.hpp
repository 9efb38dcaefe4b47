#pragma once

// Independent numerical evaluation of the Gaussian-weighted integrals. The
// oracle never touches the closed forms: integrands are composed from the
// bare polynomial / special-function evaluators and integrated by
// Gauss-Hermite quadrature of doubling order (or by adaptive Simpson on a
// truncated interval, as a second opinion on the quadrature itself).

#include "lagint/integrals.hpp"

#include <functional>
#include <vector>

namespace lagint {

enum class QuadratureRule { GaussHermite, AdaptiveTruncated };

struct QuadratureSpec {
    QuadratureRule rule = QuadratureRule::GaussHermite;
    int initial_order = 32;
    int max_order = 256;
    double rel_tol = 1e-12;
    // Half-width of the adaptive rule's interval, in units of 1/sqrt(alpha).
    double truncation_radius = 12.0;
};

struct OracleResult {
    double value = 0.0;
    // Difference between the two highest orders used -- an estimate, not a
    // bound.
    double est_error = 0.0;
    // Weighted L1 magnitude of the integrand as sampled by the rule:
    // int |f| e^{-alpha x^2}. Always >= |value| and the natural yardstick
    // for absolute comparisons when the signed value cancels to ~0.
    double scale = 0.0;
    int orders_used = 0;
    // est_error <= rel_tol * (1 + max(|value|, scale)); for integrands that
    // cancel, agreement is judged against the scale, since the signed value
    // sits at the quadrature's roundoff floor.
    bool converged = false;
};

struct GaussHermiteRule {
    std::vector<double> nodes;   // ascending, exactly antisymmetric
    std::vector<double> weights; // exactly symmetric, sum ~ sqrt(pi)
};

// Nodes/weights for int f(t) e^{-t^2} dt of the given order, computed once
// by Golub-Welsch and cached for the life of the process.
const GaussHermiteRule& gauss_hermite_rule(int order);

// int_{-inf}^{inf} f(x) e^{-alpha x^2} dx. f must be entire with
// sub-Gaussian growth; every integrand produced by integrand_builder
// qualifies.
OracleResult integrate_gaussian_weighted(const std::function<double(double)>& f,
                                         double alpha,
                                         const QuadratureSpec& spec = {});

// The bare integrand for a formula family, WITHOUT the Gaussian weight
// (that lives in the quadrature rule). A beta tilt is absorbed here as
// exp(beta*x).
std::function<double(double)> integrand_builder(FormulaId family,
                                                const IntegralParams& params);

// Convenience: oracle value of the integral described by params.
OracleResult oracle_integral(const IntegralParams& params,
                             const QuadratureSpec& spec = {});

} // namespace lagint

#pragma once

// Closed forms for every Gaussian-weighted integral the library covers.
// All integrals run over the whole real line against exp(-alpha*x^2), with
// an optional exp(beta*x) tilt in the master formula:
//
//   master_gaussian            int (a x + b)^n e^{-a x^2 + b x}
//   laguerre_gaussian          int L_n(x,u)                     e^{-alpha x^2}
//   laguerre_assoc_gaussian    int L_n^(nu)(x,u)                e^{-alpha x^2}
//   laguerre_shifted_gaussian  int L_n^(nu)(x+shift,u)          e^{-alpha x^2}
//   laguerre_product_gaussian  int L_m^(mu)(x,u) L_n^(nu)(x,v)  e^{-alpha x^2}
//   laguerre_hermite_gaussian  int L_m^(nu)(x,y) H_n(f x+g, z)  e^{-alpha x^2}
//   laguerre_bessel_gaussian   int L_n(x,y) J0(2 sqrt x)        e^{-alpha x^2}
//
// Each evaluator reports the largest term magnitude seen relative to the
// result so callers can flag catastrophic cancellation instead of silently
// returning a hollow value.

#include <string>

namespace lagint {

enum class FormulaId {
    MasterGaussian,
    LaguerreGaussian,
    LaguerreAssocGaussian,
    LaguerreShiftedGaussian,
    LaguerreProductGaussian,
    LaguerreHermiteGaussian,
    LaguerreBesselGaussian,
};

const char* formula_name(FormulaId id);

// Which index the Gamma(.+nu+1)/.! prefactor of the Laguerre x Hermite
// closed form attaches to. The order nu belongs to the Laguerre factor of
// index m; MIndex is the reading the verification suite confirms.
enum class PrefactorConvention { MIndex, NIndex };

struct GaussianParams {
    double alpha = 1.0; // strictly positive
    double beta = 0.0;
};

struct ClosedFormResult {
    double value = 0.0;
    FormulaId formula = FormulaId::MasterGaussian;
    int term_count = 0;
    // max |term| / |value| over the outermost sum; >= 1 for nonzero results,
    // +inf when cancellation is total.
    double cancellation = 1.0;
};

ClosedFormResult master_gaussian(int n, double a, double b, GaussianParams gp);
ClosedFormResult laguerre_gaussian(int n, double u, double alpha);
ClosedFormResult laguerre_assoc_gaussian(int n, double nu, double u, double alpha);
ClosedFormResult laguerre_shifted_gaussian(int n, double nu, double shift,
                                           double u, double alpha);
ClosedFormResult laguerre_product_gaussian(int m, int n, double mu, double nu,
                                           double u, double v, double alpha);
ClosedFormResult laguerre_hermite_gaussian(
    int m, int n, double nu, double y, double f, double g, double z,
    double alpha, PrefactorConvention conv = PrefactorConvention::MIndex);
ClosedFormResult laguerre_bessel_gaussian(int n, double y, double alpha);

// Uniform parameter block covering every family; the CLI and the oracle
// builder consume this.
struct IntegralParams {
    FormulaId family = FormulaId::MasterGaussian;
    int m = 0;
    int n = 0;
    double mu = 0.0;
    double nu = 0.0;
    double shift = 0.0;
    double a = 1.0; // linear coefficients of the master / Hermite arguments
    double b = 0.0;
    double f = 1.0;
    double g = 0.0;
    double u = 0.0; // polynomial second arguments
    double v = 0.0;
    double y = 0.0;
    double z = 0.0;
    GaussianParams gauss;

    // Throws std::domain_error / std::invalid_argument on violations.
    void validate() const;
};

ClosedFormResult evaluate_closed_form(
    const IntegralParams& p,
    PrefactorConvention conv = PrefactorConvention::MIndex);

} // namespace lagint

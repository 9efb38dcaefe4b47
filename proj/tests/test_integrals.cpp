#include "lagint/integrals.hpp"

#include "lagint/oracle.hpp"
#include "lagint/poly.hpp"
#include "lagint/special.hpp"
#include "lagint/verify.hpp"
#include "test_support.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <numbers>
#include <random>

using namespace lagint;
using Catch::Matchers::WithinAbs;
using Catch::Matchers::WithinRel;

namespace {
const double kSqrtPi = std::sqrt(std::numbers::pi);

double rel_gap(double a, double b) {
    return std::abs(a - b) / (1.0 + std::abs(b));
}
} // namespace

TEST_CASE("master_gaussian hand cases") {
    CHECK_THAT(master_gaussian(0, 1.0, 0.0, {2.0, 0.0}).value,
               WithinRel(std::sqrt(std::numbers::pi / 2.0), 1e-15));
    // odd integrand
    CHECK(master_gaussian(1, 1.0, 0.0, {1.0, 0.0}).value == 0.0);
    // int x^2 e^{-x^2} = sqrt(pi)/2
    CHECK_THAT(master_gaussian(2, 1.0, 0.0, {1.0, 0.0}).value,
               WithinRel(kSqrtPi / 2.0, 1e-15));
    CHECK_THROWS_AS(master_gaussian(2, 1.0, 0.0, {0.0, 0.0}), std::domain_error);
    CHECK_THROWS_AS(master_gaussian(2, 1.0, 0.0, {-1.0, 0.0}), std::domain_error);
}

TEST_CASE("master_gaussian with tilt equals the moment route") {
    // beta absorbed by completing the square: shift x -> x + beta/2alpha
    for (int n : {0, 1, 2, 5, 9}) {
        for (double beta : {0.0, 1.0, -2.0}) {
            const double alpha = 1.5, a = 0.8, b = -0.4;
            const ClosedFormResult r = master_gaussian(n, a, b, {alpha, beta});
            // reduce to an untilted integral of (a x + b') with
            // b' = b + a beta / (2 alpha), scaled by exp(beta^2/4alpha)
            std::vector<long double> coeffs(static_cast<size_t>(n) + 1, 0.0L);
            const long double bp = b + a * beta / (2.0L * alpha);
            for (int i = 0; i <= n; ++i) {
                coeffs[static_cast<size_t>(i)] =
                    testsup::ref_factorial(n) /
                    (testsup::ref_factorial(i) * testsup::ref_factorial(n - i)) *
                    powl(a, i) * powl(bp, n - i);
            }
            const long double want = expl(beta * beta / (4.0L * alpha)) *
                                     testsup::integrate_coeffs(coeffs, alpha);
            CHECK_THAT(r.value,
                       WithinAbs(static_cast<double>(want),
                                 1e-12 * (1 + std::abs(static_cast<double>(want)))));
        }
    }
}

TEST_CASE("laguerre_gaussian trivial and derived cases") {
    for (double alpha : {0.5, 1.0, 2.0}) {
        const double norm = std::sqrt(std::numbers::pi / alpha);
        CHECK_THAT(laguerre_gaussian(0, 0.7, alpha).value, WithinRel(norm, 1e-15));
        // odd part of L_1 integrates away, leaving u
        CHECK_THAT(laguerre_gaussian(1, 0.7, alpha).value,
                   WithinRel(0.7 * norm, 1e-15));
    }
    // n=2, u=1, alpha=1: sqrt(pi) (1 + 1/4)
    CHECK_THAT(laguerre_gaussian(2, 1.0, 1.0).value,
               WithinRel(1.25 * kSqrtPi, 1e-15));
}

TEST_CASE("laguerre_gaussian equals the moment route (linearity check)") {
    for (int n = 0; n <= 8; ++n) {
        for (double u : {-2.0, 0.0, 1.0, 3.0}) {
            for (double alpha : {0.5, 1.0, 2.0}) {
                const double got = laguerre_gaussian(n, u, alpha).value;
                const double want = static_cast<double>(testsup::integrate_coeffs(
                    testsup::laguerre_coeffs(n, 0.0L, u), alpha));
                CHECK(rel_gap(got, want) < 1e-11);
            }
        }
    }
}

TEST_CASE("laguerre_assoc_gaussian reductions and values") {
    // nu = 0 collapses to the plain form
    for (int n = 0; n <= 8; ++n) {
        CHECK(laguerre_assoc_gaussian(n, 0.0, 1.3, 0.8).value ==
              laguerre_gaussian(n, 1.3, 0.8).value);
    }
    // n=0, nu=1: L_0^(1) = 1
    CHECK_THAT(laguerre_assoc_gaussian(0, 1.0, 0.5, 2.0).value,
               WithinRel(std::sqrt(std::numbers::pi / 2.0), 1e-15));
    // n=1, nu=1, u=1: int (2 - x) e^{-x^2} = 2 sqrt(pi)
    CHECK_THAT(laguerre_assoc_gaussian(1, 1.0, 1.0, 1.0).value,
               WithinRel(2.0 * kSqrtPi, 1e-15));
    // moment route with non-integer order
    for (int n = 0; n <= 8; ++n) {
        for (double nu : {0.5, 2.5}) {
            const double got = laguerre_assoc_gaussian(n, nu, 1.0, 0.5).value;
            const double want = static_cast<double>(testsup::integrate_coeffs(
                testsup::laguerre_coeffs(n, nu, 1.0), 0.5L));
            CHECK(rel_gap(got, want) < 1e-11);
        }
    }
}

TEST_CASE("laguerre_shifted_gaussian") {
    // shift = 0 leaves only the k=0 term
    for (int n = 0; n <= 8; ++n) {
        CHECK_THAT(laguerre_shifted_gaussian(n, 0.5, 0.0, 1.2, 1.5).value,
                   WithinRel(laguerre_assoc_gaussian(n, 0.5, 1.2, 1.5).value,
                             1e-15));
    }
    // n=0: the plain Gaussian regardless of shift
    CHECK_THAT(laguerre_shifted_gaussian(0, 1.5, 0.7, 1.0, 1.0).value,
               WithinRel(kSqrtPi, 1e-15));
    // n=1, nu=0, shift=1, u=1: integrand is -x, exactly zero
    const ClosedFormResult zero = laguerre_shifted_gaussian(1, 0.0, 1.0, 1.0, 1.0);
    CHECK(zero.value == 0.0);
    CHECK(std::isinf(zero.cancellation)); // 1 - 1: total cancellation, flagged
    // moment route: coefficients of L_n^(nu)(x + s, u) via x -> x + s
    for (int n = 0; n <= 6; ++n) {
        for (double s : {-1.0, 1.0}) {
            const double nu = 0.5, u = 3.0, alpha = 2.0;
            const std::vector<long double> base = testsup::laguerre_coeffs(n, nu, u);
            std::vector<long double> shifted(base.size(), 0.0L);
            for (size_t k = 0; k < base.size(); ++k) {
                for (size_t i = 0; i <= k; ++i) { // (x+s)^k -> C(k,i) s^(k-i) x^i
                    shifted[i] += base[k] * testsup::ref_factorial(static_cast<int>(k)) /
                                  (testsup::ref_factorial(static_cast<int>(i)) *
                                   testsup::ref_factorial(static_cast<int>(k - i))) *
                                  powl(s, static_cast<int>(k - i));
                }
            }
            const double got = laguerre_shifted_gaussian(n, nu, s, u, alpha).value;
            const double want =
                static_cast<double>(testsup::integrate_coeffs(shifted, alpha));
            CHECK(rel_gap(got, want) < 1e-11);
        }
    }
}

TEST_CASE("laguerre_product_gaussian") {
    // m = 0, mu = 0 reduces to the single associated integral
    for (int n = 0; n <= 6; ++n) {
        CHECK(rel_gap(laguerre_product_gaussian(0, n, 0.0, 1.5, 0.9, 1.1, 2.0).value,
                      laguerre_assoc_gaussian(n, 1.5, 1.1, 2.0).value) < 1e-13);
    }
    CHECK_THAT(laguerre_product_gaussian(0, 0, 0.0, 0.0, 1.0, 1.0, 1.0).value,
               WithinRel(kSqrtPi, 1e-15));
    // m=n=1, u=v=1: int (1-x)^2 e^{-x^2} = 3 sqrt(pi) / 2
    CHECK_THAT(laguerre_product_gaussian(1, 1, 0.0, 0.0, 1.0, 1.0, 1.0).value,
               WithinRel(1.5 * kSqrtPi, 1e-15));
    // swap symmetry is exact, not approximate
    std::mt19937_64 rng = testsup::seeded_rng();
    std::uniform_real_distribution<double> real(-2.0, 3.0);
    std::uniform_int_distribution<int> idx(0, 6);
    std::uniform_real_distribution<double> order(-0.5, 2.5);
    for (int trial = 0; trial < 100; ++trial) {
        const int m = idx(rng), n = idx(rng);
        const double mu = order(rng), nu = order(rng);
        const double u = real(rng), v = real(rng);
        const double alpha = 0.5 + std::abs(real(rng));
        CHECK(laguerre_product_gaussian(m, n, mu, nu, u, v, alpha).value ==
              laguerre_product_gaussian(n, m, nu, mu, v, u, alpha).value);
    }
    // moment route on the product polynomial
    for (int m : {1, 3, 5}) {
        for (int n : {0, 2, 4}) {
            const double mu = 0.5, nu = 2.5, u = -2.0, v = 1.0, alpha = 1.0;
            const double got =
                laguerre_product_gaussian(m, n, mu, nu, u, v, alpha).value;
            const double want = static_cast<double>(testsup::integrate_coeffs(
                testsup::poly_mul(testsup::laguerre_coeffs(m, mu, u),
                                  testsup::laguerre_coeffs(n, nu, v)),
                alpha));
            CHECK(rel_gap(got, want) < 1e-11);
        }
    }
}

TEST_CASE("laguerre_hermite_gaussian") {
    // n = 0: Hermite factor is 1, reduces to the associated Laguerre integral
    for (int m = 0; m <= 6; ++m) {
        CHECK(rel_gap(
                  laguerre_hermite_gaussian(m, 0, 0.0, 1.2, 0.7, -0.3, 0.5, 1.0).value,
                  laguerre_gaussian(m, 1.2, 1.0).value) < 1e-13);
    }
    // m = 0, nu = 0, z = 0: Hermite collapses to (f x + g)^n, the master case
    for (int n = 0; n <= 6; ++n) {
        CHECK(rel_gap(
                  laguerre_hermite_gaussian(0, n, 0.0, 0.0, 0.8, 0.3, 0.0, 1.5).value,
                  master_gaussian(n, 0.8, 0.3, {1.5, 0.0}).value) < 1e-13);
    }
    // m = 0, nu = 0, z != 0 against the direct Hermite reduction
    for (int n = 0; n <= 6; ++n) {
        const double f = 0.8, g = 0.3, z = 0.6, alpha = 1.5;
        const double direct = std::sqrt(std::numbers::pi / alpha) *
                              hermite2(n, g, z + f * f / (4.0 * alpha));
        CHECK(rel_gap(
                  laguerre_hermite_gaussian(0, n, 0.0, 0.0, f, g, z, alpha).value,
                  direct) < 1e-13);
    }
    // m=n=1, nu=0, y=1, f=1, g=0, z=0: int (1-x) x e^{-x^2} = -sqrt(pi)/2
    CHECK_THAT(laguerre_hermite_gaussian(1, 1, 0.0, 1.0, 1.0, 0.0, 0.0, 1.0).value,
               WithinRel(-kSqrtPi / 2.0, 1e-14));
    // moment route including the Hermite factor, asymmetric m != n
    for (int m : {1, 2, 4}) {
        for (int n : {0, 3}) {
            const double nu = 1.5, y = 1.0, f = 0.5, g = -1.0, z = 0.25,
                         alpha = 1.0;
            const double got =
                laguerre_hermite_gaussian(m, n, nu, y, f, g, z, alpha).value;
            const double want = static_cast<double>(testsup::integrate_coeffs(
                testsup::poly_mul(testsup::laguerre_coeffs(m, nu, y),
                                  testsup::hermite_coeffs(n, f, g, z)),
                alpha));
            CHECK(rel_gap(got, want) < 1e-11);
        }
    }
}

TEST_CASE("laguerre_hermite_gaussian convention flag") {
    // symmetric cases (m == n) cannot separate the conventions...
    const double same_m =
        laguerre_hermite_gaussian(2, 2, 1.5, 1.0, 1.0, 0.5, 0.25, 1.0,
                                  PrefactorConvention::MIndex)
            .value;
    const double same_n =
        laguerre_hermite_gaussian(2, 2, 1.5, 1.0, 1.0, 0.5, 0.25, 1.0,
                                  PrefactorConvention::NIndex)
            .value;
    CHECK(same_m == same_n);
    // ...asymmetric ones do, and the oracle sides with the m-reading
    IntegralParams p;
    p.family = FormulaId::LaguerreHermiteGaussian;
    p.m = 3;
    p.n = 1;
    p.nu = 1.5;
    p.y = 1.0;
    p.f = 1.0;
    p.g = 0.5;
    p.z = 0.25;
    p.gauss.alpha = 1.0;
    const double oracle = oracle_integral(p).value;
    const double with_m = evaluate_closed_form(p, PrefactorConvention::MIndex).value;
    const double with_n = evaluate_closed_form(p, PrefactorConvention::NIndex).value;
    CHECK(rel_gap(with_m, oracle) < 1e-11);
    CHECK(rel_gap(with_n, oracle) > 1e-3);
}

TEST_CASE("laguerre_bessel_gaussian") {
    // n = 0: sqrt(pi/alpha) W_0(1/4alpha | 2)
    for (double alpha : {0.5, 1.0, 2.0}) {
        CHECK_THAT(laguerre_bessel_gaussian(0, 0.3, alpha).value,
                   WithinRel(std::sqrt(std::numbers::pi / alpha) *
                                 wright2(0.0, 1.0 / (4.0 * alpha)),
                             1e-15));
    }
    // n=1, y=0: the single surviving fused term (sqrt(pi)/2) W_1(1/4 | 2)
    CHECK_THAT(laguerre_bessel_gaussian(1, 0.0, 1.0).value,
               WithinRel(0.5 * kSqrtPi * wright2(1.0, 0.25), 1e-15));
    // frozen 40-digit anchors
    CHECK_THAT(laguerre_bessel_gaussian(1, 0.0, 1.0).value,
               WithinRel(0.92338429391935236, 1e-14));
    CHECK_THAT(laguerre_bessel_gaussian(2, 1.0, 1.0).value,
               WithinRel(4.4552705701747134, 1e-14));
    // the y=0 rows stay finite for every n (the fused sum has no 1/y)
    for (int n = 0; n <= 10; ++n) {
        CHECK(std::isfinite(laguerre_bessel_gaussian(n, 0.0, 0.5).value));
    }
    // oracle agreement incl. negative-x continuation of the Bessel factor
    for (int n = 0; n <= 5; ++n) {
        for (double y : {0.0, 1.0, 2.0}) {
            IntegralParams p;
            p.family = FormulaId::LaguerreBesselGaussian;
            p.n = n;
            p.y = y;
            p.gauss.alpha = 1.0;
            const OracleResult o = oracle_integral(p);
            REQUIRE(o.converged);
            CHECK(rel_gap(laguerre_bessel_gaussian(n, y, 1.0).value, o.value) <
                  1e-9);
        }
    }
}

TEST_CASE("closed-form diagnostics") {
    const ClosedFormResult r = laguerre_gaussian(4, 1.5, 0.7);
    CHECK(r.formula == FormulaId::LaguerreGaussian);
    CHECK(r.term_count == 3); // floor(4/2) + 1
    CHECK(r.cancellation >= 1.0);
    // benign same-sign sum: no cancellation to report
    CHECK(laguerre_gaussian(6, 2.0, 1.0).cancellation == 1.0);
}

TEST_CASE("evaluate_closed_form dispatch and validation") {
    IntegralParams p;
    p.family = FormulaId::LaguerreAssocGaussian;
    p.n = 3;
    p.nu = 0.5;
    p.u = 1.0;
    p.gauss.alpha = 2.0;
    CHECK(evaluate_closed_form(p).value ==
          laguerre_assoc_gaussian(3, 0.5, 1.0, 2.0).value);

    p.gauss.alpha = 0.0;
    CHECK_THROWS_AS(p.validate(), std::domain_error);
    p.gauss.alpha = 1.0;
    p.nu = -1.0;
    CHECK_THROWS_AS(p.validate(), std::domain_error);
    p.nu = 0.5;
    p.n = kMaxPolyDegree + 1;
    CHECK_THROWS_AS(p.validate(), std::domain_error);
    p.n = -2;
    CHECK_THROWS_AS(p.validate(), std::domain_error);
}

TEST_CASE("exact zero with a large-magnitude integrand verifies cleanly") {
    // (2x-1)^9 e^x e^{-x^2} is odd about x=1/2 after completing the square:
    // the true value is 0, but the quadrature cancels O(1e3) contributions
    // down to roundoff noise well above any fixed absolute cut. The
    // verification must recognize this from the oracle's reported scale.
    IntegralParams p;
    p.family = FormulaId::MasterGaussian;
    p.n = 9;
    p.a = 2.0;
    p.b = -1.0;
    p.gauss = {1.0, 1.0};
    CHECK(evaluate_closed_form(p).value == 0.0);
    const VerificationReport r = verify_point(p);
    CHECK(r.oracle.scale > 1e3);
    CHECK(std::abs(r.oracle.value) < 1e-12 * (1.0 + r.oracle.scale));
    CHECK(r.near_zero_branch);
    CHECK(r.pass);
}

TEST_CASE("oracle equivalence spot grid across all families") {
    auto pass = [&](IntegralParams p) {
        const ClosedFormResult cf = evaluate_closed_form(p);
        const OracleResult o = oracle_integral(p);
        REQUIRE(o.converged);
        if (std::abs(o.value) < 1e-12) return std::abs(cf.value - o.value) < 1e-11;
        return std::abs(cf.value - o.value) / std::abs(o.value) < 1e-9;
    };
    IntegralParams p;
    p.family = FormulaId::MasterGaussian;
    p.n = 7;
    p.a = -1.0;
    p.b = 2.0;
    p.gauss = {0.5, 1.0};
    CHECK(pass(p));
    p = {};
    p.family = FormulaId::LaguerreShiftedGaussian;
    p.n = 6;
    p.nu = 2.5;
    p.shift = -1.0;
    p.u = 3.0;
    p.gauss.alpha = 0.5;
    CHECK(pass(p));
    p = {};
    p.family = FormulaId::LaguerreProductGaussian;
    p.m = 5;
    p.n = 4;
    p.mu = 0.5;
    p.nu = 2.5;
    p.u = -2.0;
    p.v = 3.0;
    p.gauss.alpha = 2.0;
    CHECK(pass(p));
    p = {};
    p.family = FormulaId::LaguerreHermiteGaussian;
    p.m = 4;
    p.n = 5;
    p.nu = 0.5;
    p.y = -2.0;
    p.f = 1.0;
    p.g = -0.5;
    p.z = 1.0;
    p.gauss.alpha = 0.5;
    CHECK(pass(p));
}

#include "lagint/oracle.hpp"

#include "lagint/poly.hpp"
#include "lagint/special.hpp"

#include <Eigen/Dense>

#include <cmath>
#include <map>
#include <mutex>
#include <numbers>
#include <stdexcept>

namespace lagint {

namespace {

// Orthonormal (w.r.t. e^{-t^2}) Hermite evaluation in long double:
// p_{k+1} = x sqrt(2/(k+1)) p_k - sqrt(k/(k+1)) p_{k-1}, p_0 = pi^{-1/4}.
struct OrthoHermite {
    long double p_n;    // p_order(x)
    long double p_nm1;  // p_{order-1}(x)
    long double sumsq;  // sum_{k<order} p_k(x)^2
};

OrthoHermite ortho_hermite(int order, long double x) {
    static const long double p0 = 1.0L / sqrtl(sqrtl(acosl(-1.0L)));
    long double prev = 0.0L;
    long double cur = p0;
    long double sumsq = cur * cur;
    for (int k = 0; k < order; ++k) {
        const long double next = x * sqrtl(2.0L / (k + 1)) * cur -
                                 sqrtl(static_cast<long double>(k) / (k + 1)) * prev;
        prev = cur;
        cur = next;
        if (k + 1 < order) sumsq += cur * cur;
    }
    return {cur, prev, sumsq};
}

GaussHermiteRule build_rule(int order) {
    // Golub-Welsch for the physicists' Hermite weight e^{-t^2}: the Jacobi
    // matrix has zero diagonal and off-diagonal sqrt(k/2); its eigenvalues
    // seed Newton polishing on the orthonormal recurrence (long double),
    // and the weights follow as 1 / sum_k p_k(x_i)^2. Only the positive
    // half is computed; mirroring keeps the +/- symmetry exact.
    Eigen::VectorXd diag = Eigen::VectorXd::Zero(order);
    Eigen::VectorXd sub(order - 1);
    for (int k = 1; k < order; ++k) {
        sub[k - 1] = std::sqrt(k / 2.0);
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es;
    es.computeFromTridiagonal(diag, sub, Eigen::EigenvaluesOnly);
    if (es.info() != Eigen::Success) {
        throw std::runtime_error("Gauss-Hermite eigen-decomposition failed");
    }

    GaussHermiteRule r;
    r.nodes.resize(static_cast<size_t>(order));
    r.weights.resize(static_cast<size_t>(order));
    const long double dp_scale = sqrtl(2.0L * order); // p_N' = sqrt(2N) p_{N-1}
    for (int j = (order + 1) / 2; j < order; ++j) {
        long double x = es.eigenvalues()[j];
        for (int it = 0; it < 3; ++it) {
            const OrthoHermite oh = ortho_hermite(order, x);
            x -= oh.p_n / (dp_scale * oh.p_nm1);
        }
        const OrthoHermite oh = ortho_hermite(order, x);
        const double node = static_cast<double>(x);
        const double weight = static_cast<double>(1.0L / oh.sumsq);
        r.nodes[static_cast<size_t>(j)] = node;
        r.weights[static_cast<size_t>(j)] = weight;
        r.nodes[static_cast<size_t>(order - 1 - j)] = -node;
        r.weights[static_cast<size_t>(order - 1 - j)] = weight;
    }
    if (order % 2 == 1) {
        r.nodes[static_cast<size_t>(order / 2)] = 0.0;
        r.weights[static_cast<size_t>(order / 2)] =
            static_cast<double>(1.0L / ortho_hermite(order, 0.0L).sumsq);
    }
    return r;
}

std::mutex rule_mutex;
std::map<int, GaussHermiteRule> rule_cache;

void check_spec(const QuadratureSpec& spec) {
    if (spec.initial_order < 1 || spec.max_order < spec.initial_order) {
        throw std::invalid_argument(
            "quadrature orders must satisfy 1 <= initial <= max");
    }
    if (!(spec.rel_tol >= 1e-14)) {
        throw std::invalid_argument("quadrature rel_tol must be >= 1e-14");
    }
    if (!(spec.truncation_radius > 0.0)) {
        throw std::invalid_argument("truncation radius must be > 0");
    }
}

// Adaptive Simpson on [a,b] for the full weighted integrand.
struct Simpson {
    const std::function<double(double)>& g;
    double tol_floor;
    int evals = 0;
    double err = 0.0;
    bool ok = true;

    double eval(double x) {
        ++evals;
        return g(x);
    }

    double run(double a, double m, double b, double fa, double fm, double fb,
               double whole, double tol, int depth) {
        const double lm = 0.5 * (a + m);
        const double rm = 0.5 * (m + b);
        const double flm = eval(lm);
        const double frm = eval(rm);
        const double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
        const double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
        const double delta = left + right - whole;
        if (depth <= 0 || std::abs(delta) <= 15.0 * tol) {
            if (depth <= 0 && std::abs(delta) > 15.0 * tol) ok = false;
            err += std::abs(delta) / 15.0;
            return left + right + delta / 15.0;
        }
        const double half_tol = std::max(0.5 * tol, tol_floor);
        return run(a, lm, m, fa, flm, fm, left, half_tol, depth - 1) +
               run(m, rm, b, fm, frm, fb, right, half_tol, depth - 1);
    }
};

OracleResult integrate_adaptive(const std::function<double(double)>& f,
                                double alpha, const QuadratureSpec& spec) {
    const double radius = spec.truncation_radius / std::sqrt(alpha);
    const auto g = [&](double x) { return f(x) * std::exp(-alpha * x * x); };
    const std::function<double(double)> gf = g;

    Simpson s{gf, 1e-17, 0, 0.0, true};
    const double a = -radius;
    const double b = radius;
    const double m = 0.0;
    const double fa = s.eval(a);
    const double fm = s.eval(m);
    const double fb = s.eval(b);
    const double whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
    const double tol = spec.rel_tol * (1.0 + std::abs(whole));
    const double value = s.run(a, m, b, fa, fm, fb, whole, tol, 48);

    OracleResult r;
    r.value = value;
    r.est_error = s.err;
    r.scale = std::abs(value); // no cheap L1 estimate on this path
    r.orders_used = s.evals;
    r.converged = s.ok && s.err <= spec.rel_tol * (1.0 + std::abs(value));
    return r;
}

} // namespace

const GaussHermiteRule& gauss_hermite_rule(int order) {
    if (order < 1) {
        throw std::invalid_argument("Gauss-Hermite order must be >= 1");
    }
    std::lock_guard<std::mutex> lock(rule_mutex);
    auto it = rule_cache.find(order);
    if (it == rule_cache.end()) {
        it = rule_cache.emplace(order, build_rule(order)).first;
    }
    return it->second;
}

OracleResult integrate_gaussian_weighted(const std::function<double(double)>& f,
                                         double alpha,
                                         const QuadratureSpec& spec) {
    if (!(alpha > 0.0)) {
        throw std::domain_error("gaussian decay alpha must be > 0");
    }
    check_spec(spec);
    if (spec.rule == QuadratureRule::AdaptiveTruncated) {
        return integrate_adaptive(f, alpha, spec);
    }

    const double root = std::sqrt(alpha);
    OracleResult r;
    bool have_prev = false;
    double prev = 0.0;
    for (int order = spec.initial_order; order <= spec.max_order;
         order *= 2) {
        const GaussHermiteRule& rule = gauss_hermite_rule(order);
        KahanSum s;
        KahanSum magnitude;
        for (size_t i = 0; i < rule.nodes.size(); ++i) {
            const double term = rule.weights[i] * f(rule.nodes[i] / root);
            s.add(term);
            magnitude.add(std::abs(term));
        }
        const double value = s.value() / root;
        r.value = value;
        r.scale = magnitude.value() / root;
        r.orders_used = order;
        if (have_prev) {
            r.est_error = std::abs(value - prev);
            // Cancellation-heavy integrands bottom out at roundoff noise of
            // size ~eps * scale; judge agreement against that yardstick.
            const double yard = std::max(std::abs(value), r.scale);
            if (r.est_error <= spec.rel_tol * (1.0 + yard)) {
                r.converged = true;
                return r;
            }
        }
        prev = value;
        have_prev = true;
    }
    r.converged = false;
    return r;
}

std::function<double(double)> integrand_builder(FormulaId family,
                                                const IntegralParams& p) {
    p.validate();
    switch (family) {
        case FormulaId::MasterGaussian: {
            const int n = p.n;
            const double a = p.a, b = p.b, beta = p.gauss.beta;
            return [=](double x) {
                return ipow(a * x + b, n) * std::exp(beta * x);
            };
        }
        case FormulaId::LaguerreGaussian: {
            const int n = p.n;
            const double u = p.u;
            return [=](double x) { return laguerre2(n, x, u); };
        }
        case FormulaId::LaguerreAssocGaussian: {
            const int n = p.n;
            const double nu = p.nu, u = p.u;
            return [=](double x) { return laguerre_assoc(n, nu, x, u); };
        }
        case FormulaId::LaguerreShiftedGaussian: {
            const int n = p.n;
            const double nu = p.nu, shift = p.shift, u = p.u;
            return [=](double x) {
                return laguerre_assoc(n, nu, x + shift, u);
            };
        }
        case FormulaId::LaguerreProductGaussian: {
            const int m = p.m, n = p.n;
            const double mu = p.mu, nu = p.nu, u = p.u, v = p.v;
            return [=](double x) {
                return laguerre_assoc(m, mu, x, u) * laguerre_assoc(n, nu, x, v);
            };
        }
        case FormulaId::LaguerreHermiteGaussian: {
            const int m = p.m, n = p.n;
            const double nu = p.nu, y = p.y, f = p.f, g = p.g, z = p.z;
            return [=](double x) {
                return laguerre_assoc(m, nu, x, y) * hermite2(n, f * x + g, z);
            };
        }
        case FormulaId::LaguerreBesselGaussian: {
            const int n = p.n;
            const double y = p.y;
            return [=](double x) {
                return laguerre2(n, x, y) * bessel_tricomi0(x);
            };
        }
    }
    throw std::invalid_argument("unknown formula id");
}

OracleResult oracle_integral(const IntegralParams& params,
                             const QuadratureSpec& spec) {
    return integrate_gaussian_weighted(integrand_builder(params.family, params),
                                       params.gauss.alpha, spec);
}

} // namespace lagint

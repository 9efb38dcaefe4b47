#include "lagint/verify.hpp"

#include <json.hpp>

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <sstream>
#include <vector>

namespace lagint {

namespace {

// The parameters each family consumes, in echo order. Indices render as
// integers, everything else as round-trip doubles.
std::vector<std::pair<std::string, double>> param_list(const IntegralParams& p) {
    switch (p.family) {
        case FormulaId::MasterGaussian:
            return {{"n", double(p.n)}, {"a", p.a},     {"b", p.b},
                    {"alpha", p.gauss.alpha}, {"beta", p.gauss.beta}};
        case FormulaId::LaguerreGaussian:
            return {{"n", double(p.n)}, {"u", p.u}, {"alpha", p.gauss.alpha}};
        case FormulaId::LaguerreAssocGaussian:
            return {{"n", double(p.n)},
                    {"nu", p.nu},
                    {"u", p.u},
                    {"alpha", p.gauss.alpha}};
        case FormulaId::LaguerreShiftedGaussian:
            return {{"n", double(p.n)},
                    {"nu", p.nu},
                    {"shift", p.shift},
                    {"u", p.u},
                    {"alpha", p.gauss.alpha}};
        case FormulaId::LaguerreProductGaussian:
            return {{"m", double(p.m)}, {"n", double(p.n)}, {"mu", p.mu},
                    {"nu", p.nu},       {"u", p.u},         {"v", p.v},
                    {"alpha", p.gauss.alpha}};
        case FormulaId::LaguerreHermiteGaussian:
            return {{"m", double(p.m)}, {"n", double(p.n)}, {"nu", p.nu},
                    {"y", p.y},         {"f", p.f},         {"g", p.g},
                    {"z", p.z},         {"alpha", p.gauss.alpha}};
        case FormulaId::LaguerreBesselGaussian:
            return {{"n", double(p.n)}, {"y", p.y}, {"alpha", p.gauss.alpha}};
    }
    throw std::invalid_argument("unknown formula id");
}

bool is_index_key(const std::string& k) {
    return k == "n" || k == "m";
}

std::string compact_number(double v) {
    // Shortest round-trip via nlohmann's own serializer.
    return nlohmann::json(v).dump();
}

} // namespace

VerificationReport verify_point(const IntegralParams& params,
                                const VerifySettings& settings) {
    VerificationReport r;
    r.params = params;
    r.closed = evaluate_closed_form(params, settings.convention);
    r.oracle = oracle_integral(params, settings.quad);
    r.abs_err = std::abs(r.closed.value - r.oracle.value);
    // Scale-relative near-zero cut: an oracle value below its own roundoff
    // floor (~near_zero in units of the integrand magnitude) carries no
    // sign information, so the comparison must be absolute.
    const double magnitude = 1.0 + r.oracle.scale;
    r.near_zero_branch =
        std::abs(r.oracle.value) < settings.near_zero * magnitude;
    r.rel_err = r.near_zero_branch ? r.abs_err
                                   : r.abs_err / std::abs(r.oracle.value);
    r.catastrophic_cancellation = !(r.closed.cancellation <= 1e12);
    const double threshold = r.near_zero_branch
                                 ? settings.abs_tol * magnitude
                                 : settings.rel_tol;
    r.pass = r.oracle.converged && std::isfinite(r.rel_err) &&
             r.rel_err <= threshold;
    return r;
}

std::string format_sci17(double v) {
    if (std::isnan(v)) return "nan";
    if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
    char buf[48];
    std::snprintf(buf, sizeof buf, "%.16e", v);
    const std::string s(buf);
    const size_t epos = s.find('e');
    const int exponent = std::atoi(s.c_str() + epos + 1);
    return s.substr(0, epos) + "e" + std::to_string(exponent);
}

std::string params_echo(const IntegralParams& p) {
    std::ostringstream out;
    bool first = true;
    for (const auto& [key, value] : param_list(p)) {
        if (!first) out << ';';
        first = false;
        out << key << '=';
        if (is_index_key(key)) {
            out << static_cast<long long>(value);
        } else {
            out << compact_number(value);
        }
    }
    return out.str();
}

std::string report_json_line(const VerificationReport& r) {
    nlohmann::ordered_json j;
    j["formula_id"] = formula_name(r.params.family);
    nlohmann::ordered_json params;
    for (const auto& [key, value] : param_list(r.params)) {
        if (is_index_key(key)) {
            params[key] = static_cast<long long>(value);
        } else {
            params[key] = value;
        }
    }
    j["params"] = params;
    j["closed_form"] = r.closed.value;
    j["oracle"] = r.oracle.value;
    j["abs_err"] = r.abs_err;
    j["rel_err"] = r.rel_err;
    j["near_zero_branch"] = r.near_zero_branch;
    j["cancellation_magnitude"] = r.closed.cancellation;
    j["catastrophic_cancellation"] = r.catastrophic_cancellation;
    j["oracle_meta"] = nlohmann::ordered_json{
        {"est_error", r.oracle.est_error},
        {"orders_used", r.oracle.orders_used},
        {"converged", r.oracle.converged},
    };
    j["pass"] = r.pass;
    return j.dump();
}

std::string report_csv_header() {
    return "formula_id,params,closed_form,oracle,abs_err,rel_err,"
           "near_zero_branch,cancellation_magnitude,catastrophic_cancellation,"
           "oracle_est_error,oracle_orders_used,oracle_converged,pass";
}

std::string report_csv_row(const VerificationReport& r) {
    std::ostringstream out;
    out << formula_name(r.params.family) << ',' << params_echo(r.params) << ','
        << format_sci17(r.closed.value) << ',' << format_sci17(r.oracle.value)
        << ',' << format_sci17(r.abs_err) << ',' << format_sci17(r.rel_err)
        << ',' << (r.near_zero_branch ? "true" : "false") << ','
        << format_sci17(r.closed.cancellation) << ','
        << (r.catastrophic_cancellation ? "true" : "false") << ','
        << format_sci17(r.oracle.est_error) << ',' << r.oracle.orders_used
        << ',' << (r.oracle.converged ? "true" : "false") << ','
        << (r.pass ? "true" : "false");
    return out.str();
}

} // namespace lagint

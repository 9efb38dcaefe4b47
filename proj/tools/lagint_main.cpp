// lagint: evaluate the polynomial families and special functions, verify the
// Gaussian-integral closed forms against the quadrature oracle, check
// generating functions, and dump exact umbral reductions.
//
// Exit codes: 0 success / all points pass; 1 any verification failure;
// 2 usage or domain error.

#include "lagint/integrals.hpp"
#include "lagint/oracle.hpp"
#include "lagint/poly.hpp"
#include "lagint/special.hpp"
#include "lagint/umbral.hpp"
#include "lagint/verify.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <cstdio>
#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace {

using namespace lagint;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

double parse_real(const std::string& key, const std::string& text) {
    try {
        size_t used = 0;
        const double v = std::stod(text, &used);
        if (used != text.size()) throw std::invalid_argument(text);
        if (std::isnan(v)) throw std::invalid_argument(text);
        return v;
    } catch (const std::exception&) {
        throw UsageError("bad numeric value for '" + key + "': " + text);
    }
}

int parse_int(const std::string& key, const std::string& text) {
    const double v = parse_real(key, text);
    if (v != std::floor(v) || std::abs(v) > 1e9) {
        throw UsageError("'" + key + "' must be an integer, got " + text);
    }
    return static_cast<int>(v);
}

int as_int(const std::string& key, double v) {
    if (v != std::floor(v) || std::abs(v) > 1e9) {
        throw UsageError("'" + key + "' must be an integer");
    }
    return static_cast<int>(v);
}

// Grid syntax: "lo..hi:count" (count linearly spaced values),
// "lo..hi" (step-1 enumeration, integer bounds), "v1,v2,v3", or a scalar.
std::vector<double> parse_grid(const std::string& key, const std::string& text) {
    std::vector<double> out;
    const size_t dots = text.find("..");
    if (dots != std::string::npos) {
        const std::string lo_s = text.substr(0, dots);
        std::string hi_s = text.substr(dots + 2);
        std::optional<int> count;
        if (const size_t colon = hi_s.find(':'); colon != std::string::npos) {
            count = parse_int(key, hi_s.substr(colon + 1));
            hi_s = hi_s.substr(0, colon);
        }
        const double lo = parse_real(key, lo_s);
        const double hi = parse_real(key, hi_s);
        if (hi < lo) throw UsageError("empty range for '" + key + "': " + text);
        if (count) {
            if (*count < 1) throw UsageError("count must be >= 1 for '" + key + "'");
            if (*count == 1) {
                out.push_back(0.5 * (lo + hi));
            } else {
                for (int i = 0; i < *count; ++i) {
                    out.push_back(lo + (hi - lo) * i / (*count - 1));
                }
            }
        } else {
            if (lo != std::floor(lo) || hi != std::floor(hi)) {
                throw UsageError("range without :count needs integer bounds ('" +
                                 key + "=" + text + "')");
            }
            for (double v = lo; v <= hi; v += 1.0) out.push_back(v);
        }
        return out;
    }
    size_t pos = 0;
    while (pos <= text.size()) {
        const size_t comma = text.find(',', pos);
        const std::string piece =
            text.substr(pos, comma == std::string::npos ? std::string::npos
                                                        : comma - pos);
        out.push_back(parse_real(key, piece));
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    if (out.empty()) throw UsageError("no values for '" + key + "'");
    return out;
}

using KvList = std::vector<std::pair<std::string, std::string>>;

KvList split_kvs(const std::vector<std::string>& args) {
    KvList kvs;
    for (const std::string& a : args) {
        const size_t eq = a.find('=');
        if (eq == std::string::npos || eq == 0) {
            throw UsageError("expected key=value, got '" + a + "'");
        }
        kvs.emplace_back(a.substr(0, eq), a.substr(eq + 1));
    }
    return kvs;
}

// ---------------------------------------------------------------- eval ----

int run_eval(const std::string& family, const std::vector<std::string>& args) {
    static const std::map<std::string, PolyFamily> poly_families = {
        {"hermite2", PolyFamily::Hermite2},
        {"laguerre2", PolyFamily::Laguerre2},
        {"laguerre-assoc", PolyFamily::LaguerreAssoc},
        {"q", PolyFamily::Q},
        {"hermite-2index", PolyFamily::Hermite2Index},
        {"q-2index", PolyFamily::Q2Index},
        {"t", PolyFamily::T},
    };

    std::map<std::string, double> vals;
    for (const auto& [key, text] : split_kvs(args)) {
        if (!vals.emplace(key, parse_real(key, text)).second) {
            throw UsageError("duplicate key '" + key + "'");
        }
    }
    auto take = [&](const char* key) -> std::optional<double> {
        auto it = vals.find(key);
        if (it == vals.end()) return std::nullopt;
        const double v = it->second;
        vals.erase(it);
        return v;
    };
    auto take_int = [&](const char* key) -> std::optional<int> {
        auto v = take(key);
        if (!v) return std::nullopt;
        return as_int(key, *v);
    };
    auto require = [&](std::optional<double> v, const char* key) {
        if (!v) throw UsageError(std::string("missing '") + key + "'");
        return *v;
    };
    auto finish = [&](double value) {
        if (!vals.empty()) {
            throw UsageError("unexpected key '" + vals.begin()->first + "'");
        }
        std::printf("%s\n", format_sci17(value).c_str());
        return 0;
    };

    if (family == "wright2") {
        const double nu = require(take("nu"), "nu");
        const double x = require(take("x"), "x");
        return finish(wright2(nu, x));
    }
    if (family == "tricomi0") {
        const double x = require(take("x"), "x");
        return finish(bessel_tricomi0(x));
    }
    const auto fam = poly_families.find(family);
    if (fam == poly_families.end()) {
        throw UsageError("unknown eval family '" + family + "'");
    }
    PolyEval ev;
    ev.family = fam->second;
    ev.n = take_int("n");
    ev.m = take_int("m");
    ev.mu = take("mu");
    ev.nu = take("nu");
    ev.x = take("x");
    ev.y = take("y");
    ev.w = take("w");
    ev.z = take("z");
    ev.tau = take("tau");
    if (!ev.n) throw UsageError("missing 'n'");
    return finish(ev.evaluate());
}

// -------------------------------------------------------------- verify ----

struct VerifyOptions {
    std::string format = "json";
    double rel_tol = 1e-9;
    int quad_order = 32;
    std::string convention = "m";
};

FormulaId parse_family(const std::string& name) {
    static const std::map<std::string, FormulaId> families = {
        {"master-gaussian", FormulaId::MasterGaussian},
        {"laguerre-gaussian", FormulaId::LaguerreGaussian},
        {"laguerre-assoc", FormulaId::LaguerreAssocGaussian},
        {"laguerre-shifted", FormulaId::LaguerreShiftedGaussian},
        {"laguerre-product", FormulaId::LaguerreProductGaussian},
        {"laguerre-hermite", FormulaId::LaguerreHermiteGaussian},
        {"laguerre-bessel", FormulaId::LaguerreBesselGaussian},
    };
    const auto it = families.find(name);
    if (it == families.end()) {
        throw UsageError("unknown integral family '" + name + "'");
    }
    return it->second;
}

// Keys each family accepts, in deterministic sweep order (last varies
// fastest).
std::vector<std::string> family_keys(FormulaId f) {
    switch (f) {
        case FormulaId::MasterGaussian: return {"n", "a", "b", "alpha", "beta"};
        case FormulaId::LaguerreGaussian: return {"n", "u", "alpha"};
        case FormulaId::LaguerreAssocGaussian: return {"n", "nu", "u", "alpha"};
        case FormulaId::LaguerreShiftedGaussian:
            return {"n", "nu", "shift", "u", "alpha"};
        case FormulaId::LaguerreProductGaussian:
            return {"m", "n", "mu", "nu", "u", "v", "alpha"};
        case FormulaId::LaguerreHermiteGaussian:
            return {"m", "n", "nu", "y", "f", "g", "z", "alpha"};
        case FormulaId::LaguerreBesselGaussian: return {"n", "y", "alpha"};
    }
    throw UsageError("unknown integral family");
}

void assign_param(IntegralParams& p, const std::string& key, double v) {
    if (key == "n") p.n = as_int(key, v);
    else if (key == "m") p.m = as_int(key, v);
    else if (key == "mu") p.mu = v;
    else if (key == "nu") p.nu = v;
    else if (key == "shift") p.shift = v;
    else if (key == "a") p.a = v;
    else if (key == "b") p.b = v;
    else if (key == "f") p.f = v;
    else if (key == "g") p.g = v;
    else if (key == "u") p.u = v;
    else if (key == "v") p.v = v;
    else if (key == "y") p.y = v;
    else if (key == "z") p.z = v;
    else if (key == "alpha") p.gauss.alpha = v;
    else if (key == "beta") p.gauss.beta = v;
    else throw UsageError("unknown key '" + key + "'");
}

int run_verify(const std::string& family_name,
               const std::vector<std::string>& args, const VerifyOptions& opt) {
    const FormulaId family = parse_family(family_name);
    const std::vector<std::string> keys = family_keys(family);

    std::map<std::string, std::vector<double>> grids;
    for (const auto& [key, text] : split_kvs(args)) {
        if (std::find(keys.begin(), keys.end(), key) == keys.end()) {
            throw UsageError("family '" + family_name + "' does not take '" +
                             key + "'");
        }
        if (!grids.emplace(key, parse_grid(key, text)).second) {
            throw UsageError("duplicate key '" + key + "'");
        }
    }

    VerifySettings settings;
    if (!(opt.rel_tol >= 1e-14)) {
        // below the quadrature rule's own certification floor the comparison
        // is meaningless
        throw UsageError("--rel-tol must be >= 1e-14");
    }
    settings.rel_tol = opt.rel_tol;
    settings.quad.initial_order = opt.quad_order;
    settings.quad.max_order = std::max(256, 4 * opt.quad_order);
    if (opt.convention == "m") {
        settings.convention = PrefactorConvention::MIndex;
    } else if (opt.convention == "n") {
        settings.convention = PrefactorConvention::NIndex;
    } else {
        throw UsageError("--prefactor-convention must be 'm' or 'n'");
    }

    // Cartesian sweep, last key fastest; absent keys keep their defaults.
    std::vector<std::vector<double>> axes;
    for (const std::string& key : keys) {
        const auto it = grids.find(key);
        axes.push_back(it == grids.end() ? std::vector<double>{} : it->second);
    }

    long total = 0;
    long failed = 0;
    const bool csv = opt.format == "csv";
    if (csv) std::printf("%s\n", report_csv_header().c_str());

    std::vector<size_t> odo(keys.size(), 0);
    for (;;) {
        IntegralParams p;
        p.family = family;
        for (size_t i = 0; i < keys.size(); ++i) {
            if (!axes[i].empty()) assign_param(p, keys[i], axes[i][odo[i]]);
        }
        const VerificationReport r = verify_point(p, settings);
        ++total;
        if (!r.pass) ++failed;
        std::printf("%s\n",
                    csv ? report_csv_row(r).c_str() : report_json_line(r).c_str());

        size_t i = keys.size();
        while (i > 0) {
            --i;
            if (axes[i].empty()) continue;
            if (++odo[i] < axes[i].size()) break;
            odo[i] = 0;
        }
        bool done = true;
        for (size_t j = 0; j < keys.size(); ++j) {
            if (odo[j] != 0) { done = false; break; }
        }
        if (done) break;
    }
    std::fprintf(stderr, "verified %ld point(s): %ld passed, %ld failed\n",
                 total, total - failed, failed);
    return failed == 0 ? 0 : 1;
}

// ------------------------------------------------------- umbral-expand ----

int run_umbral_expand(const std::string& target,
                      const std::vector<std::string>& args) {
    std::map<std::string, int> vals;
    for (const auto& [key, text] : split_kvs(args)) {
        if (key != "n" && key != "nu") {
            throw UsageError("umbral-expand takes only n= and nu=");
        }
        if (!vals.emplace(key, parse_int(key, text)).second) {
            throw UsageError("duplicate key '" + key + "'");
        }
    }
    auto get = [&](const char* key, std::optional<int> fallback) {
        const auto it = vals.find(key);
        if (it != vals.end()) return it->second;
        if (!fallback) throw UsageError(std::string("missing '") + key + "'");
        return *fallback;
    };
    auto check_range = [](const char* key, int v, int hi) {
        if (v < 0 || v > hi) {
            throw UsageError(std::string("'") + key + "' must be in [0, " +
                             std::to_string(hi) + "]");
        }
    };

    ReducedSum reduced;
    bool certified = false;
    if (target == "laguerre") {
        const int n = get("n", std::nullopt);
        check_range("n", n, 20);
        if (vals.count("nu")) throw UsageError("laguerre does not take 'nu'");
        reduced = vacuum_reduce(expand_binomial_power("y", "x", n));
        certified = certify_laguerre(n);
    } else if (target == "q") {
        const int n = get("n", std::nullopt);
        const int nu = get("nu", 0);
        check_range("n", n, 20);
        check_range("nu", nu, 20);
        reduced = vacuum_reduce(q_umbral_form("x", "y", n, nu));
        certified = certify_q_from_hermite(n, nu);
    } else if (target == "wright") {
        const int n = get("n", std::nullopt);
        const int nu = get("nu", 0);
        check_range("n", n, 20);
        check_range("nu", nu, 20);
        reduced = vacuum_reduce(wright_umbral_form("x", nu, n));
        certified = certify_wright_reduction(nu, n);
    } else {
        throw UsageError("unknown umbral-expand target '" + target + "'");
    }
    std::printf("%s  [%s]\n", reduced.to_string().c_str(),
                certified ? "CERTIFIED" : "MISMATCH");
    return certified ? 0 : 1;
}

// ------------------------------------------------------------ gf-check ----

int run_gf_check(const std::string& family, const std::vector<std::string>& args) {
    if (family != "hermite" && family != "q") {
        throw UsageError("unknown gf-check family '" + family + "'");
    }
    std::map<std::string, std::vector<double>> grids;
    std::optional<int> n_max;
    for (const auto& [key, text] : split_kvs(args)) {
        if (key == "N") {
            n_max = parse_int(key, text);
            continue;
        }
        if (key != "t" && key != "x" && key != "y" &&
            !(family == "q" && key == "nu")) {
            throw UsageError("gf-check " + family + " does not take '" + key + "'");
        }
        if (!grids.emplace(key, parse_grid(key, text)).second) {
            throw UsageError("duplicate key '" + key + "'");
        }
    }
    if (!n_max) throw UsageError("missing 'N'");
    if (*n_max < 0 || *n_max > 40) throw UsageError("'N' must be in [0, 40]");

    // Default |t| shrinks with N so the truncation remainder stays under the
    // tolerance; at N >= 30 it is the full 0.5.
    const double t_max = 0.5 * std::min(1.0, *n_max / 30.0);
    auto axis = [&](const char* key, double lo, double hi,
                    int count) -> std::vector<double> {
        const auto it = grids.find(key);
        if (it != grids.end()) return it->second;
        std::vector<double> v;
        for (int i = 0; i < count; ++i) {
            v.push_back(count == 1 ? lo : lo + (hi - lo) * i / (count - 1));
        }
        return v;
    };
    const std::vector<double> ts = axis("t", -t_max, t_max, 5);
    const std::vector<double> xs = axis("x", -2.0, 2.0, 5);
    const std::vector<double> ys = axis("y", -2.0, 2.0, 5);
    const std::vector<double> nus =
        family == "q" ? axis("nu", 0.0, 0.0, 1) : std::vector<double>{0.0};

    const double tol = 1e-10;
    double max_dev = 0.0;
    long points = 0;
    for (const double nu : nus) {
        if (family == "q" && !(nu > -1.0)) {
            throw UsageError("'nu' must be > -1");
        }
        for (const double x : xs) {
            for (const double y : ys) {
                for (const double t : ts) {
                    KahanSum series;
                    for (int k = 0; k <= *n_max; ++k) {
                        const double poly = family == "q" ? q_poly(k, nu, x, y)
                                                          : hermite2(k, x, y);
                        series.add(ipow(t, k) / factorial(k) * poly);
                    }
                    const double closed =
                        family == "q"
                            ? std::exp(x * t) * wright2(nu, y * t * t)
                            : std::exp(x * t + y * t * t);
                    const double dev = std::abs(series.value() - closed) /
                                       (1.0 + std::abs(closed));
                    max_dev = std::max(max_dev, dev);
                    ++points;
                }
            }
        }
    }
    const bool pass = max_dev < tol;
    std::printf("family=%s N=%d points=%ld max_dev=%s %s\n", family.c_str(),
                *n_max, points, format_sci17(max_dev).c_str(),
                pass ? "pass" : "fail");
    return pass ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "Closed forms for Gaussian-weighted Laguerre / Hermite / Bessel "
        "integrals, with quadrature verification and exact umbral expansion"};
    app.require_subcommand(1);

    std::string eval_family;
    std::vector<std::string> eval_args;
    CLI::App* eval = app.add_subcommand(
        "eval", "Evaluate a polynomial family or special function at a point");
    eval->add_option("family", eval_family,
                     "hermite2|laguerre2|laguerre-assoc|q|hermite-2index|"
                     "q-2index|t|wright2|tricomi0")
        ->required();
    eval->add_option("params", eval_args, "key=value arguments");

    std::string verify_family;
    std::vector<std::string> verify_args;
    VerifyOptions vopt;
    CLI::App* verify = app.add_subcommand(
        "verify", "Sweep closed form vs quadrature oracle over a grid");
    verify->add_option("family", verify_family,
                       "master-gaussian|laguerre-gaussian|laguerre-assoc|"
                       "laguerre-shifted|laguerre-product|laguerre-hermite|"
                       "laguerre-bessel")
        ->required();
    verify->add_option("params", verify_args,
                       "key=value | key=lo..hi[:count] | key=v1,v2,...");
    verify->add_option("--format", vopt.format, "json (lines) or csv")
        ->check(CLI::IsMember({"json", "csv"}))
        ->capture_default_str();
    verify->add_option("--rel-tol", vopt.rel_tol, "pass threshold")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    verify->add_option("--quad-order", vopt.quad_order,
                       "initial Gauss-Hermite order")
        ->check(CLI::Range(4, 2048))
        ->capture_default_str();
    verify
        ->add_option("--prefactor-convention", vopt.convention,
                     "Gamma prefactor index for laguerre-hermite: m or n")
        ->check(CLI::IsMember({"m", "n"}))
        ->capture_default_str();

    std::string umbral_target;
    std::vector<std::string> umbral_args;
    CLI::App* umbral = app.add_subcommand(
        "umbral-expand", "Print the exact vacuum reduction of an umbral form");
    umbral->add_option("target", umbral_target, "laguerre|q|wright")->required();
    umbral->add_option("params", umbral_args, "n=<int> [nu=<int>]");

    std::string gf_family;
    std::vector<std::string> gf_args;
    CLI::App* gf = app.add_subcommand(
        "gf-check", "Compare a truncated generating function with its closed form");
    gf->add_option("family", gf_family, "hermite|q")->required();
    gf->add_option("params", gf_args, "N=<int> plus optional t/x/y/nu grids");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }

    try {
        if (eval->parsed()) return run_eval(eval_family, eval_args);
        if (verify->parsed()) return run_verify(verify_family, verify_args, vopt);
        if (umbral->parsed()) return run_umbral_expand(umbral_target, umbral_args);
        if (gf->parsed()) return run_gf_check(gf_family, gf_args);
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}

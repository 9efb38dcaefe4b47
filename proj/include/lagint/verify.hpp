#pragma once

// Closed-form-vs-oracle comparison for a single parameter point, plus the
// machine-readable report emitters used by the CLI (JSON-lines and CSV).

#include "lagint/integrals.hpp"
#include "lagint/oracle.hpp"

#include <string>

namespace lagint {

struct VerifySettings {
    double rel_tol = 1e-9;
    // Used instead of rel_tol on the near-zero branch (odd integrands are
    // exactly zero; relative error is undefined there).
    double abs_tol = 1e-11;
    double near_zero = 1e-12;
    // Both near_zero and abs_tol are scale-relative: they are multiplied by
    // (1 + oracle.scale), the integrand's weighted-L1 magnitude. For O(1)
    // integrands this reduces to the plain constants; for large cancelling
    // integrands it tracks the oracle's own roundoff floor.
    QuadratureSpec quad;
    PrefactorConvention convention = PrefactorConvention::MIndex;
};

struct VerificationReport {
    IntegralParams params;
    ClosedFormResult closed;
    OracleResult oracle;
    double abs_err = 0.0;
    // |closed - oracle| / |oracle|, or the plain absolute error on the
    // near-zero branch.
    double rel_err = 0.0;
    bool near_zero_branch = false;
    // closed.cancellation > 1e12: the closed-form digits are untrustworthy.
    bool catastrophic_cancellation = false;
    bool pass = false;
};

VerificationReport verify_point(const IntegralParams& params,
                                const VerifySettings& settings = {});

// Fixed 17-significant-digit scientific form with a bare exponent
// ("-5.0000000000000000e-1", "1.0000000000000000e0").
std::string format_sci17(double v);

// One JSON object, no trailing newline; keys in a fixed documented order.
std::string report_json_line(const VerificationReport& r);

// Stable CSV header and one row per report. Params are packed into a single
// "params" column as semicolon-joined key=value pairs.
std::string report_csv_header();
std::string report_csv_row(const VerificationReport& r);

// "key=value;key=value" echo of exactly the parameters the family consumes,
// in a fixed per-family order.
std::string params_echo(const IntegralParams& p);

} // namespace lagint

#pragma once

// Exact umbral-reduction engine.
//
// Expressions are finite sums of monomials
//
//     coeff * c^(c_power) * d^(d_power) * prod_v v^(e_v)
//
// in two commuting umbral symbols c and d and ordinary named variables.
// Exponent bookkeeping is done with exact rationals. Vacuum evaluation
// replaces c^g (against its vacuum) by 1/Gamma(g+1) -- an exact rational
// 1/g! when g is a nonnegative integer, a symbolic Gamma factor otherwise --
// and d^g independently by the same rule against its own vacuum. Reduction
// is applied once, at the end; everything before it treats the symbols as
// ordinary constants.
//
// The certify_* entry points expand both sides of the identities relating
// the umbral forms to the explicit polynomial/series sums and compare the
// reduced canonical term lists for exact equality.

#include "lagint/rational.hpp"

#include <map>
#include <string>
#include <vector>

namespace lagint {

using VarPowers = std::map<std::string, int>; // exponent 0 entries are never stored

struct UmbralMonomial {
    Rational coeff;
    Rational c_power; // exponent of the c symbol, >= 0
    Rational d_power; // exponent of the d symbol, >= 0
    VarPowers vars;
};

class UmbralExpr {
public:
    UmbralExpr() = default;
    explicit UmbralExpr(std::vector<UmbralMonomial> monomials);

    static UmbralExpr constant(Rational c);
    static UmbralExpr monomial(UmbralMonomial m);

    const std::vector<UmbralMonomial>& monomials() const { return monomials_; }
    bool operator==(const UmbralExpr& other) const;

    UmbralExpr operator+(const UmbralExpr& other) const;
    UmbralExpr operator*(const UmbralExpr& other) const;

private:
    void canonicalize();
    std::vector<UmbralMonomial> monomials_; // canonical: merged, sorted, no zeros
};

struct ReducedTerm {
    Rational coeff;
    VarPowers vars;
    std::vector<Rational> gamma_args; // sorted; each entry g stands for 1/Gamma(g+1)
};

class ReducedSum {
public:
    ReducedSum() = default;
    explicit ReducedSum(std::vector<ReducedTerm> terms);

    const std::vector<ReducedTerm>& terms() const { return terms_; }
    bool operator==(const ReducedSum& other) const;
    ReducedSum operator+(const ReducedSum& other) const;

    // Canonical textual dump, e.g. "y^2 - 2*x*y + (1/2)*x^2". Non-integer
    // Gamma factors render as "/Gamma(<g+1>)".
    std::string to_string() const;

private:
    void canonicalize();
    std::vector<ReducedTerm> terms_;
};

// (y_sym - c * x_sym)^n, pre-vacuum.
UmbralExpr expand_binomial_power(const std::string& y_sym,
                                 const std::string& x_sym, int n);

// c^nu * H_n(x_sym, y_sym * c^2), pre-vacuum: the umbral Q-polynomial form.
UmbralExpr q_umbral_form(const std::string& x_sym, const std::string& y_sym,
                         int n, const Rational& nu);

// d^nu * sum_{k<=n_terms} (d^2 x_sym)^k / k!, pre-vacuum: the truncated
// umbral Wright form.
UmbralExpr wright_umbral_form(const std::string& x_sym, int nu, int n_terms);

// Vacuum evaluation of every monomial. Throws std::domain_error on a
// negative umbral exponent.
ReducedSum vacuum_reduce(const UmbralExpr& e);

// Explicit reference sums (the right-hand sides the umbral forms must
// reduce to).
ReducedSum laguerre_explicit_sum(int n);
ReducedSum q_explicit_sum(int n, int nu);
ReducedSum wright_explicit_sum(int nu, int n_terms);

bool certify_laguerre(int n);
bool certify_q_from_hermite(int n, int nu);
bool certify_wright_reduction(int nu, int n_terms);

} // namespace lagint

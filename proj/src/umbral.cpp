#include "lagint/umbral.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace lagint {

namespace {

// Total order on variable-power maps: ascending lexicographic on the
// exponent vector over the union of names in alphabetical order. This is
// what makes "y^2 - 2*x*y + (1/2)*x^2" come out in that order.
int compare_vars(const VarPowers& a, const VarPowers& b) {
    auto ia = a.begin();
    auto ib = b.begin();
    while (ia != a.end() && ib != b.end()) {
        if (ia->first < ib->first) return 1;  // a has a positive power where b has zero
        if (ib->first < ia->first) return -1;
        if (ia->second != ib->second) return ia->second < ib->second ? -1 : 1;
        ++ia;
        ++ib;
    }
    if (ia != a.end()) return 1;
    if (ib != b.end()) return -1;
    return 0;
}

int compare_rational_lists(const std::vector<Rational>& a,
                           const std::vector<Rational>& b) {
    const std::size_t n = std::min(a.size(), b.size());
    for (std::size_t i = 0; i < n; ++i) {
        if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
    }
    if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
    return 0;
}

bool monomial_before(const UmbralMonomial& a, const UmbralMonomial& b) {
    if (const int c = compare_vars(a.vars, b.vars); c != 0) return c < 0;
    if (a.c_power != b.c_power) return a.c_power < b.c_power;
    return a.d_power < b.d_power;
}

bool same_key(const UmbralMonomial& a, const UmbralMonomial& b) {
    return a.c_power == b.c_power && a.d_power == b.d_power && a.vars == b.vars;
}

bool term_before(const ReducedTerm& a, const ReducedTerm& b) {
    if (const int c = compare_vars(a.vars, b.vars); c != 0) return c < 0;
    return compare_rational_lists(a.gamma_args, b.gamma_args) < 0;
}

bool same_key(const ReducedTerm& a, const ReducedTerm& b) {
    return a.vars == b.vars && a.gamma_args == b.gamma_args;
}

void drop_zero_powers(VarPowers& vars) {
    for (auto it = vars.begin(); it != vars.end();) {
        if (it->second == 0) {
            it = vars.erase(it);
        } else {
            ++it;
        }
    }
}

std::string rational_str(const Rational& r) {
    const BigInt num = boost::multiprecision::numerator(r);
    const BigInt den = boost::multiprecision::denominator(r);
    if (den == 1) return num.str();
    return num.str() + "/" + den.str();
}

} // namespace

UmbralExpr::UmbralExpr(std::vector<UmbralMonomial> monomials)
    : monomials_(std::move(monomials)) {
    canonicalize();
}

UmbralExpr UmbralExpr::constant(Rational c) {
    return monomial({std::move(c), 0, 0, {}});
}

UmbralExpr UmbralExpr::monomial(UmbralMonomial m) {
    return UmbralExpr(std::vector<UmbralMonomial>{std::move(m)});
}

void UmbralExpr::canonicalize() {
    for (auto& m : monomials_) drop_zero_powers(m.vars);
    std::sort(monomials_.begin(), monomials_.end(), monomial_before);
    std::vector<UmbralMonomial> merged;
    for (auto& m : monomials_) {
        if (!merged.empty() && same_key(merged.back(), m)) {
            merged.back().coeff += m.coeff;
        } else {
            merged.push_back(std::move(m));
        }
    }
    std::erase_if(merged, [](const UmbralMonomial& m) { return m.coeff == 0; });
    monomials_ = std::move(merged);
}

bool UmbralExpr::operator==(const UmbralExpr& other) const {
    if (monomials_.size() != other.monomials_.size()) return false;
    for (std::size_t i = 0; i < monomials_.size(); ++i) {
        const auto& a = monomials_[i];
        const auto& b = other.monomials_[i];
        if (!(same_key(a, b) && a.coeff == b.coeff)) return false;
    }
    return true;
}

UmbralExpr UmbralExpr::operator+(const UmbralExpr& other) const {
    std::vector<UmbralMonomial> all = monomials_;
    all.insert(all.end(), other.monomials_.begin(), other.monomials_.end());
    return UmbralExpr(std::move(all));
}

UmbralExpr UmbralExpr::operator*(const UmbralExpr& other) const {
    std::vector<UmbralMonomial> prod;
    prod.reserve(monomials_.size() * other.monomials_.size());
    for (const auto& a : monomials_) {
        for (const auto& b : other.monomials_) {
            UmbralMonomial m;
            m.coeff = a.coeff * b.coeff;
            m.c_power = a.c_power + b.c_power;
            m.d_power = a.d_power + b.d_power;
            m.vars = a.vars;
            for (const auto& [name, pow] : b.vars) m.vars[name] += pow;
            prod.push_back(std::move(m));
        }
    }
    return UmbralExpr(std::move(prod));
}

ReducedSum::ReducedSum(std::vector<ReducedTerm> terms) : terms_(std::move(terms)) {
    canonicalize();
}

void ReducedSum::canonicalize() {
    for (auto& t : terms_) {
        drop_zero_powers(t.vars);
        std::sort(t.gamma_args.begin(), t.gamma_args.end());
    }
    std::sort(terms_.begin(), terms_.end(), term_before);
    std::vector<ReducedTerm> merged;
    for (auto& t : terms_) {
        if (!merged.empty() && same_key(merged.back(), t)) {
            merged.back().coeff += t.coeff;
        } else {
            merged.push_back(std::move(t));
        }
    }
    std::erase_if(merged, [](const ReducedTerm& t) { return t.coeff == 0; });
    terms_ = std::move(merged);
}

bool ReducedSum::operator==(const ReducedSum& other) const {
    if (terms_.size() != other.terms_.size()) return false;
    for (std::size_t i = 0; i < terms_.size(); ++i) {
        const auto& a = terms_[i];
        const auto& b = other.terms_[i];
        if (!(same_key(a, b) && a.coeff == b.coeff)) return false;
    }
    return true;
}

ReducedSum ReducedSum::operator+(const ReducedSum& other) const {
    std::vector<ReducedTerm> all = terms_;
    all.insert(all.end(), other.terms_.begin(), other.terms_.end());
    return ReducedSum(std::move(all));
}

std::string ReducedSum::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& t : terms_) {
        const bool negative = t.coeff < 0;
        const Rational mag = negative ? Rational(-t.coeff) : t.coeff;
        if (first) {
            if (negative) out << "-";
            first = false;
        } else {
            out << (negative ? " - " : " + ");
        }

        const BigInt num = boost::multiprecision::numerator(mag);
        const BigInt den = boost::multiprecision::denominator(mag);
        std::string coeff_str =
            den == 1 ? num.str() : "(" + num.str() + "/" + den.str() + ")";

        std::string var_str;
        for (const auto& [name, pow] : t.vars) {
            if (!var_str.empty()) var_str += "*";
            var_str += name;
            if (pow != 1) var_str += "^" + std::to_string(pow);
        }

        if (var_str.empty()) {
            out << coeff_str;
        } else if (mag == 1) {
            out << var_str;
        } else {
            out << coeff_str << "*" << var_str;
        }
        for (const auto& g : t.gamma_args) {
            out << "/Gamma(" << rational_str(g + 1) << ")";
        }
    }
    return out.str();
}

namespace {

UmbralExpr expr_pow(const UmbralExpr& base, int e) {
    UmbralExpr r = UmbralExpr::constant(1);
    for (int i = 0; i < e; ++i) r = r * base;
    return r;
}

UmbralExpr var_monomial(const std::string& name, int pow) {
    UmbralMonomial m{1, 0, 0, {}};
    if (pow > 0) m.vars[name] = pow;
    return UmbralExpr::monomial(std::move(m));
}

} // namespace

UmbralExpr expand_binomial_power(const std::string& y_sym,
                                 const std::string& x_sym, int n) {
    if (n < 0) throw std::domain_error("expand_binomial_power: n must be >= 0");
    // (y - c*x)^n by repeated engine multiplication; canonicalization is
    // what produces the binomial coefficients.
    const UmbralExpr base =
        UmbralExpr::monomial({1, 0, 0, {{y_sym, 1}}}) +
        UmbralExpr::monomial({-1, 1, 0, {{x_sym, 1}}});
    return expr_pow(base, n);
}

UmbralExpr q_umbral_form(const std::string& x_sym, const std::string& y_sym,
                         int n, const Rational& nu) {
    if (n < 0) throw std::domain_error("q_umbral_form: n must be >= 0");
    // c^nu * H_n(x, y*c^2): substitute the monomial y*c^2 for the second
    // Hermite argument and let the engine collect powers.
    const UmbralExpr y_c2 = UmbralExpr::monomial({1, 2, 0, {{y_sym, 1}}});
    UmbralExpr sum;
    for (int k = 0; k <= n / 2; ++k) {
        const Rational coeff = Rational(big_factorial(n)) /
                               (big_factorial(n - 2 * k) * big_factorial(k));
        sum = sum + UmbralExpr::constant(coeff) * var_monomial(x_sym, n - 2 * k) *
                        expr_pow(y_c2, k);
    }
    return UmbralExpr::monomial({1, nu, 0, {}}) * sum;
}

UmbralExpr wright_umbral_form(const std::string& x_sym, int nu, int n_terms) {
    if (nu < 0) throw std::domain_error("wright_umbral_form: nu must be >= 0");
    if (n_terms < 0) throw std::domain_error("wright_umbral_form: n_terms must be >= 0");
    // d^nu * sum_k (d^2 x)^k / k!
    const UmbralExpr d2x = UmbralExpr::monomial({1, 0, 2, {{x_sym, 1}}});
    UmbralExpr sum;
    for (int k = 0; k <= n_terms; ++k) {
        sum = sum + UmbralExpr::constant(Rational(1) / big_factorial(k)) *
                        expr_pow(d2x, k);
    }
    return UmbralExpr::monomial({1, 0, Rational(nu), {}}) * sum;
}

ReducedSum vacuum_reduce(const UmbralExpr& e) {
    std::vector<ReducedTerm> terms;
    terms.reserve(e.monomials().size());
    for (const auto& m : e.monomials()) {
        if (m.c_power < 0 || m.d_power < 0) {
            throw std::domain_error("vacuum_reduce: negative umbral exponent");
        }
        ReducedTerm t;
        t.coeff = m.coeff;
        t.vars = m.vars;
        for (const Rational& g : {m.c_power, m.d_power}) {
            if (g == 0) continue; // 1/Gamma(1) = 1
            if (is_nonneg_integer(g)) {
                t.coeff /= big_factorial(
                    boost::multiprecision::numerator(g).convert_to<unsigned>());
            } else {
                t.gamma_args.push_back(g);
            }
        }
        terms.push_back(std::move(t));
    }
    return ReducedSum(std::move(terms));
}

ReducedSum laguerre_explicit_sum(int n) {
    std::vector<ReducedTerm> terms;
    for (int k = 0; k <= n; ++k) {
        ReducedTerm t;
        t.coeff = Rational(big_factorial(n)) /
                  (big_factorial(n - k) * big_factorial(k) * big_factorial(k));
        if (k % 2 != 0) t.coeff = -t.coeff;
        if (k > 0) t.vars["x"] = k;
        if (n - k > 0) t.vars["y"] = n - k;
        terms.push_back(std::move(t));
    }
    return ReducedSum(std::move(terms));
}

ReducedSum q_explicit_sum(int n, int nu) {
    std::vector<ReducedTerm> terms;
    for (int k = 0; k <= n / 2; ++k) {
        ReducedTerm t;
        t.coeff = Rational(big_factorial(n)) /
                  (big_factorial(n - 2 * k) * big_factorial(k) *
                   big_factorial(2 * k + nu));
        if (n - 2 * k > 0) t.vars["x"] = n - 2 * k;
        if (k > 0) t.vars["y"] = k;
        terms.push_back(std::move(t));
    }
    return ReducedSum(std::move(terms));
}

ReducedSum wright_explicit_sum(int nu, int n_terms) {
    std::vector<ReducedTerm> terms;
    for (int k = 0; k <= n_terms; ++k) {
        ReducedTerm t;
        t.coeff = Rational(1) / (big_factorial(k) * big_factorial(2 * k + nu));
        if (k > 0) t.vars["x"] = k;
        terms.push_back(std::move(t));
    }
    return ReducedSum(std::move(terms));
}

bool certify_laguerre(int n) {
    return vacuum_reduce(expand_binomial_power("y", "x", n)) ==
           laguerre_explicit_sum(n);
}

bool certify_q_from_hermite(int n, int nu) {
    if (nu < 0) throw std::domain_error("certify_q_from_hermite: nu must be >= 0");
    return vacuum_reduce(q_umbral_form("x", "y", n, Rational(nu))) ==
           q_explicit_sum(n, nu);
}

bool certify_wright_reduction(int nu, int n_terms) {
    return vacuum_reduce(wright_umbral_form("x", nu, n_terms)) ==
           wright_explicit_sum(nu, n_terms);
}

} // namespace lagint

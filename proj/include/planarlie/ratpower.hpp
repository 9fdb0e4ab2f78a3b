#pragma once

#include <cstdlib>
#include <map>
#include <numeric>
#include <utility>
#include <vector>

#include "planarlie/errors.hpp"
#include "planarlie/factor.hpp"
#include "planarlie/ratfunc.hpp"

namespace planarlie {

/// Output of the power decomposition: phi = c1 * theta^s, psi = c2 * theta^t
/// with gcd(|s|, |t|) = 1, s > 0 and mu = t/s.
struct DecomposeResult {
    RatFunc theta;
    long s = 0;
    long t = 0;
    Rat c1, c2;
    Rat mu;
};

namespace detail {

inline void require_univariate_nonconstant(const RatFunc& f, Var& v, const char* who) {
    if (!f.is_univariate(v)) throw MultivariateInput(std::string(who) + " requires one variable");
    if (f.is_constant()) throw ConstantInput(std::string(who) + " requires a nonconstant input");
}

/// Signed irreducible-factor exponents of a nonzero rational function,
/// plus the scalar unit: f = unit * prod p_i^{e_i}, p_i monic irreducible.
inline std::pair<Rat, std::map<std::vector<Rat>, std::pair<Poly, long>>>
signed_factor_map(const RatFunc& f, Var v, int cap) {
    std::map<std::vector<Rat>, std::pair<Poly, long>> m;
    Rat unit = 1;
    auto absorb = [&](const Poly& p, long sign) {
        Factorization fac = factor_univariate(p, cap);
        if (sign > 0) unit *= fac.unit;
        else unit /= fac.unit;
        for (const auto& [q, e] : fac.factors) {
            auto key = q.univariate_coeffs(v);
            auto it = m.find(key);
            if (it == m.end()) m[key] = {q, sign * e};
            else {
                it->second.second += sign * e;
                if (it->second.second == 0) m.erase(it);
            }
        }
    };
    absorb(f.num(), +1);
    absorb(f.den(), -1);
    return {unit, m};
}

} // namespace detail

/// The unique constant mu with mu * phi' * psi = phi * psi', when it exists.
inline Rat proportionality_ratio(const RatFunc& phi, const RatFunc& psi) {
    Var v1 = Var::X, v2 = Var::X;
    detail::require_univariate_nonconstant(phi, v1, "proportionality_ratio");
    detail::require_univariate_nonconstant(psi, v2, "proportionality_ratio");
    if (v1 != v2) throw MultivariateInput("inputs use different variables");
    RatFunc lhs = phi.partial(v1) * psi;   // nonzero: phi nonconstant
    RatFunc rhs = phi * psi.partial(v1);   // nonzero: psi nonconstant
    RatFunc ratio = rhs / lhs;
    if (!ratio.is_constant())
        throw NotProportional("phi' psi and phi psi' are not proportional by a constant");
    return ratio.constant_value();
}

/// Power decomposition from the proportionality identity: build theta as the
/// product of the shared irreducible factors to exponents r_i = k_i/s = l_i/t.
inline DecomposeResult power_decompose(const RatFunc& phi, const RatFunc& psi, int degree_cap = 24) {
    DecomposeResult out;
    out.mu = proportionality_ratio(phi, psi);
    Var v = Var::X;
    phi.is_univariate(v);

    auto [u1, f1] = detail::signed_factor_map(phi, v, degree_cap);
    auto [u2, f2] = detail::signed_factor_map(psi, v, degree_cap);
    if (f1.size() != f2.size()) throw FactorMismatch("irreducible supports differ");
    for (const auto& [key, pe] : f1)
        if (f2.find(key) == f2.end()) throw FactorMismatch("irreducible supports differ");

    // mu = t/s in lowest terms with s > 0
    Rat mu = out.mu;
    long s = static_cast<long>(mpz_get_si(mu.get_den().get_mpz_t()));
    long t = static_cast<long>(mpz_get_si(mu.get_num().get_mpz_t()));
    out.s = s;
    out.t = t;

    RatFunc theta(Rat(1));
    for (const auto& [key, pe] : f1) {
        const auto& [p, k] = pe;
        long l = f2.at(key).second;
        if (k % s != 0 || l % t != 0 || k / s != l / t)
            throw FactorMismatch("factor exponents do not follow the common power pattern");
        theta = theta * RatFunc(p).pow(k / s);
    }
    out.theta = theta;
    out.c1 = u1;
    out.c2 = u2;

    if (!(RatFunc(out.c1) * theta.pow(s) == phi) || !(RatFunc(out.c2) * theta.pow(t) == psi))
        throw FactorMismatch("reconstruction failed"); // arithmetic bug guard
    return out;
}

/// Witness irreducible p with ord_p(phi) != 0 and ord_p(phi'/phi) = -1,
/// certifying that phi'/phi has no rational antiderivative.
inline std::pair<Poly, int> log_derivative_obstruction(const RatFunc& phi, int degree_cap = 24) {
    Var v = Var::X;
    detail::require_univariate_nonconstant(phi, v, "log_derivative_obstruction");
    auto [unit, fm] = detail::signed_factor_map(phi, v, degree_cap);
    if (fm.empty()) throw NoWitness("no irreducible factor with nonzero order"); // unreachable: phi nonconstant
    const Poly& p = fm.begin()->second.first; // canonical: first by (degree, coefficients)
    RatFunc logd = phi.partial(v) / phi;
    int o = ord_p(logd, p, degree_cap);
    if (o != -1) throw NoWitness("internal: ord of the logarithmic derivative is not -1");
    return {p, o};
}

} // namespace planarlie

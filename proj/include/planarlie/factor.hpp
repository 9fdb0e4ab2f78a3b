#pragma once

#include <algorithm>
#include <map>
#include <utility>
#include <vector>

#include "planarlie/errors.hpp"
#include "planarlie/poly.hpp"
#include "planarlie/ratfunc.hpp"

namespace planarlie {

struct Factorization {
    Rat unit = 1;
    std::vector<std::pair<Poly, int>> factors; // monic irreducible, exponent > 0
};

namespace detail {

/// Integer content-free copy of a univariate rational polynomial.
inline std::vector<mpz_class> to_primitive_int(const std::vector<Rat>& cs) {
    mpz_class l = 1;
    for (const auto& c : cs) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den().get_mpz_t());
    std::vector<mpz_class> zs;
    zs.reserve(cs.size());
    for (const auto& c : cs) zs.push_back(c.get_num() * (l / c.get_den()));
    mpz_class g = 0;
    for (const auto& z : zs) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), z.get_mpz_t());
    if (g != 0)
        for (auto& z : zs) z /= g;
    return zs;
}

inline std::vector<mpz_class> divisors_abs(const mpz_class& n) {
    std::vector<mpz_class> ds;
    mpz_class a = abs(n);
    for (mpz_class d = 1; d * d <= a; ++d) {
        if (a % d == 0) {
            ds.push_back(d);
            if (d * d != a) ds.push_back(a / d);
        }
    }
    std::sort(ds.begin(), ds.end());
    return ds;
}

/// All rational roots with multiplicity divided out of `p` (monic, univariate in v).
inline std::vector<Rat> extract_rational_roots(Poly& p, Var v) {
    std::vector<Rat> roots;
    // roots at 0
    while (!p.is_zero() && p.coeff_poly(v, 0).is_zero()) {
        p = *Poly::divexact(p, Poly::var(v));
        roots.push_back(0);
    }
    if (p.degree(v) <= 0) return roots;
    bool again = true;
    while (again && p.degree(v) > 0) {
        again = false;
        auto zs = to_primitive_int(p.univariate_coeffs(v));
        auto ps = divisors_abs(zs.front());
        auto qs = divisors_abs(zs.back());
        for (const auto& pn : ps) {
            for (const auto& qd : qs) {
                for (int sgn : {1, -1}) {
                    Rat r(sgn * pn, qd);
                    r.canonicalize();
                    if (p.eval_univariate(v, r) == 0) {
                        Poly lin = Poly::var(v) - Poly(r);
                        p = *Poly::divexact(p, lin);
                        roots.push_back(r);
                        again = true;
                        goto next_round;
                    }
                }
            }
        }
    next_round:;
    }
    return roots;
}

inline Poly newton_interpolate(const std::vector<Rat>& xs, const std::vector<Rat>& ys, Var v) {
    std::size_t n = xs.size();
    std::vector<Rat> dd = ys;
    for (std::size_t k = 1; k < n; ++k)
        for (std::size_t i = n - 1; i >= k; --i)
            dd[i] = (dd[i] - dd[i - 1]) / (xs[i] - xs[i - k]);
    Poly p(dd[n - 1]);
    for (std::size_t i = n - 1; i-- > 0;)
        p = p * (Poly::var(v) - Poly(xs[i])) + Poly(dd[i]);
    return p;
}

/// Kronecker splitting of a squarefree p (no rational roots, deg >= 4).
/// Returns a nontrivial monic factor, or nullopt when p is irreducible.
/// Any factor of the integer-primitive model has integer values dividing its
/// values at integer points; candidates are interpolated from divisor tuples.
inline std::optional<Poly> kronecker_factor(const Poly& p, Var v) {
    int n = p.degree(v);
    auto zs = to_primitive_int(p.univariate_coeffs(v));
    Poly pz;
    for (std::size_t k = 0; k < zs.size(); ++k)
        pz.add_term(v == Var::X ? Mono{static_cast<int>(k), 0} : Mono{0, static_cast<int>(k)},
                    Rat(zs[k]));
    auto point = [](int i) { return Rat(i % 2 ? (i + 1) / 2 : -i / 2); }; // 0, 1, -1, 2, -2, ...
    for (int d = 2; d <= n / 2; ++d) {
        std::vector<Rat> xs;
        std::vector<std::vector<mpz_class>> divs;
        for (int i = 0; i <= d; ++i) {
            xs.push_back(point(i));
            Rat val = pz.eval_univariate(v, xs.back()); // nonzero: no rational roots remain
            divs.push_back(divisors_abs(val.get_num()));
        }
        std::vector<std::size_t> idx(static_cast<std::size_t>(d + 1), 0);
        std::vector<int> sgn(static_cast<std::size_t>(d + 1), 1); // position 0 stays positive
        while (true) {
            std::vector<Rat> ys(static_cast<std::size_t>(d + 1));
            for (int i = 0; i <= d; ++i) {
                auto ii = static_cast<std::size_t>(i);
                ys[ii] = Rat(sgn[ii] * divs[ii][idx[ii]]);
            }
            Poly cand = newton_interpolate(xs, ys, v);
            if (!cand.is_zero() && cand.degree(v) == d && cand.divides(pz))
                return cand.normalized();
            int i = 0;
            for (; i <= d; ++i) {
                auto ii = static_cast<std::size_t>(i);
                if (i > 0 && sgn[ii] == 1) { sgn[ii] = -1; break; }
                sgn[ii] = 1;
                if (++idx[ii] < divs[ii].size()) break;
                idx[ii] = 0;
            }
            if (i > d) break;
        }
    }
    return std::nullopt;
}

inline void factor_squarefree_monic(const Poly& in, Var v, int mult, Factorization& out) {
    Poly p = in;
    auto roots = extract_rational_roots(p, v);
    for (const auto& r : roots)
        out.factors.emplace_back(Poly::var(v) - Poly(r), mult);
    p = p.normalized();
    if (p.degree(v) <= 0) return;
    if (p.degree(v) <= 3) { // no rational root and degree <= 3: irreducible over Q
        out.factors.emplace_back(p, mult);
        return;
    }
    auto f = kronecker_factor(p, v);
    if (!f) {
        out.factors.emplace_back(p, mult);
        return;
    }
    factor_squarefree_monic(*f, v, mult, out);
    factor_squarefree_monic((*Poly::divexact(p, *f)).normalized(), v, mult, out);
}

} // namespace detail

/// Complete factorization over Q of a univariate polynomial: unit times a
/// product of monic irreducibles with positive exponents (Yun squarefree
/// split, rational-root extraction, Kronecker trial splits up to the cap).
inline Factorization factor_univariate(const Poly& p, int degree_cap = 12) {
    if (p.is_zero()) throw ZeroInput("factor_univariate of zero polynomial");
    Var v = Var::X;
    if (!p.is_univariate(v)) throw MultivariateInput("factor_univariate requires one variable");
    if (p.total_degree() > degree_cap)
        throw DegreeCapExceeded("degree " + std::to_string(p.total_degree()) + " exceeds cap " +
                                std::to_string(degree_cap));
    Factorization out;
    out.unit = p.leading_coeff();
    Poly f = p.normalized();
    if (f.is_constant()) return out;

    // Yun's squarefree decomposition (characteristic zero)
    Poly fp = f.derivative(v);
    Poly a = poly_gcd(f, fp);
    Poly b = *Poly::divexact(f, a);
    Poly c = *Poly::divexact(fp, a);
    Poly d = c - b.derivative(v);
    int i = 1;
    while (!(b.is_constant())) {
        Poly g = poly_gcd(b, d);
        if (!g.is_constant()) detail::factor_squarefree_monic(g.normalized(), v, i, out);
        b = *Poly::divexact(b, g);
        c = *Poly::divexact(d, g);
        d = c - b.derivative(v);
        ++i;
    }

    // canonical order and merged multiplicities
    std::map<std::vector<Rat>, int> merged;
    std::map<std::vector<Rat>, Poly> keyed;
    for (auto& [q, e] : out.factors) {
        auto key = q.univariate_coeffs(v);
        merged[key] += e;
        keyed.emplace(key, q);
    }
    out.factors.clear();
    for (auto& [key, e] : merged) out.factors.emplace_back(keyed.at(key), e);
    std::stable_sort(out.factors.begin(), out.factors.end(),
                     [&](const auto& l, const auto& r) {
                         if (l.first.degree(v) != r.first.degree(v))
                             return l.first.degree(v) < r.first.degree(v);
                         return l.first.univariate_coeffs(v) < r.first.univariate_coeffs(v);
                     });
    return out;
}

inline bool is_irreducible_univariate(const Poly& p, int degree_cap = 12) {
    Var v = Var::X;
    if (p.is_zero() || !p.is_univariate(v) || p.is_constant()) return false;
    auto f = factor_univariate(p, degree_cap);
    return f.factors.size() == 1 && f.factors[0].second == 1;
}

/// Multiplicity of the irreducible p in a nonzero polynomial.
inline int poly_ord(const Poly& f, const Poly& p) {
    int k = 0;
    Poly r = f;
    while (true) {
        auto q = Poly::divexact(r, p);
        if (!q) return k;
        r = *q;
        ++k;
    }
}

/// The exponent of irreducible p in f = p^a * (u/v) with p dividing neither u nor v.
inline int ord_p(const RatFunc& f, const Poly& p, int degree_cap = 12) {
    if (f.is_zero()) throw ZeroInput("ord_p of zero");
    if (!is_irreducible_univariate(p, degree_cap))
        throw ReducibleModulus("ord_p modulus must be an irreducible univariate polynomial");
    return poly_ord(f.num(), p.normalized()) - poly_ord(f.den(), p.normalized());
}

} // namespace planarlie

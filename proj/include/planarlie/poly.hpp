#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "planarlie/errors.hpp"
#include "planarlie/rational.hpp"

namespace planarlie {

enum class Var { X, Y };

/// Monomial x^dx * y^dy. Ordered graded-lexicographically with x > y.
struct Mono {
    int dx = 0;
    int dy = 0;
    int total() const { return dx + dy; }
    friend bool operator==(const Mono& a, const Mono& b) = default;
};

/// grlex, larger first: map iteration starts at the leading term.
struct MonoGrlexGreater {
    bool operator()(const Mono& a, const Mono& b) const {
        if (a.total() != b.total()) return a.total() > b.total();
        return a.dx > b.dx;
    }
};

/// Exact bivariate polynomial over Q, sparse canonical representation:
/// no stored coefficient is zero.
class Poly {
public:
    using Terms = std::map<Mono, Rat, MonoGrlexGreater>;

    Poly() = default;
    Poly(const Rat& c) { // NOLINT(google-explicit-constructor)
        if (c != 0) t_[Mono{0, 0}] = c;
    }
    Poly(long c) : Poly(Rat(c)) {} // NOLINT(google-explicit-constructor)

    static Poly var(Var v) { return monomial(1, v == Var::X ? 1 : 0, v == Var::X ? 0 : 1); }
    static Poly x() { return var(Var::X); }
    static Poly y() { return var(Var::Y); }

    static Poly monomial(const Rat& c, int dx, int dy) {
        Poly p;
        if (c != 0) p.t_[Mono{dx, dy}] = c;
        return p;
    }

    const Terms& terms() const { return t_; }
    bool is_zero() const { return t_.empty(); }
    bool is_constant() const {
        return t_.empty() || (t_.size() == 1 && t_.begin()->first == Mono{0, 0});
    }
    Rat constant_value() const {
        if (t_.empty()) return 0;
        auto it = t_.find(Mono{0, 0});
        return it == t_.end() ? Rat(0) : it->second;
    }

    int total_degree() const { return t_.empty() ? -1 : t_.begin()->first.total(); }
    int degree(Var v) const {
        int d = -1;
        for (const auto& [m, c] : t_) d = std::max(d, v == Var::X ? m.dx : m.dy);
        return d;
    }
    bool uses(Var v) const {
        for (const auto& [m, c] : t_)
            if ((v == Var::X ? m.dx : m.dy) > 0) return true;
        return false;
    }
    /// True when at most one variable occurs; reports it in `v` (X for constants).
    bool is_univariate(Var& v) const {
        bool ux = uses(Var::X), uy = uses(Var::Y);
        if (ux && uy) return false;
        v = uy ? Var::Y : Var::X;
        return true;
    }

    Mono leading_mono() const { return t_.begin()->first; }
    Rat leading_coeff() const { return t_.empty() ? Rat(0) : t_.begin()->second; }

    Rat coeff(int dx, int dy) const {
        auto it = t_.find(Mono{dx, dy});
        return it == t_.end() ? Rat(0) : it->second;
    }

    friend Poly operator+(const Poly& a, const Poly& b) {
        Poly r = a;
        for (const auto& [m, c] : b.t_) r.add_term(m, c);
        return r;
    }
    friend Poly operator-(const Poly& a, const Poly& b) {
        Poly r = a;
        for (const auto& [m, c] : b.t_) r.add_term(m, -c);
        return r;
    }
    Poly operator-() const {
        Poly r = *this;
        for (auto& [m, c] : r.t_) c = -c;
        return r;
    }
    friend Poly operator*(const Poly& a, const Poly& b) {
        Poly r;
        for (const auto& [ma, ca] : a.t_)
            for (const auto& [mb, cb] : b.t_)
                r.add_term(Mono{ma.dx + mb.dx, ma.dy + mb.dy}, ca * cb);
        return r;
    }
    friend Poly operator*(const Rat& c, const Poly& p) {
        Poly r;
        if (c == 0) return r;
        for (const auto& [m, pc] : p.t_) r.t_[m] = c * pc;
        return r;
    }
    friend bool operator==(const Poly& a, const Poly& b) { return a.t_ == b.t_; }

    Poly pow(unsigned e) const {
        Poly r(Rat(1)), b = *this;
        while (e) {
            if (e & 1u) r = r * b;
            b = b * b;
            e >>= 1u;
        }
        return r;
    }

    Poly derivative(Var v) const {
        Poly r;
        for (const auto& [m, c] : t_) {
            if (v == Var::X && m.dx > 0) r.add_term(Mono{m.dx - 1, m.dy}, c * m.dx);
            if (v == Var::Y && m.dy > 0) r.add_term(Mono{m.dx, m.dy - 1}, c * m.dy);
        }
        return r;
    }

    /// Leading-coefficient-1 scaling (grlex).
    Poly normalized() const {
        if (is_zero()) return *this;
        return Rat(1 / leading_coeff()) * *this;
    }

    /// Exact quotient, or nullopt when the division has a remainder.
    static std::optional<Poly> divexact(const Poly& a, const Poly& b) {
        if (b.is_zero()) return std::nullopt;
        Poly r = a, q;
        Mono lb = b.leading_mono();
        Rat cb = b.leading_coeff();
        while (!r.is_zero()) {
            Mono lr = r.leading_mono();
            if (lr.dx < lb.dx || lr.dy < lb.dy) return std::nullopt;
            Mono qm{lr.dx - lb.dx, lr.dy - lb.dy};
            Rat qc = r.leading_coeff() / cb;
            q.add_term(qm, qc);
            r = r - Poly::monomial(qc, qm.dx, qm.dy) * b;
        }
        return q;
    }

    bool divides(const Poly& a) const { return divexact(a, *this).has_value(); }

    /// Coefficient of v^k, a polynomial in the other variable.
    Poly coeff_poly(Var v, int k) const {
        Poly r;
        for (const auto& [m, c] : t_) {
            int dv = v == Var::X ? m.dx : m.dy;
            if (dv == k) r.add_term(v == Var::X ? Mono{0, m.dy} : Mono{m.dx, 0}, c);
        }
        return r;
    }

    /// Dense univariate coefficient list (degree-ascending). Requires is_univariate.
    std::vector<Rat> univariate_coeffs(Var v) const {
        std::vector<Rat> cs(static_cast<std::size_t>(std::max(0, degree(v)) + 1), Rat(0));
        for (const auto& [m, c] : t_) cs[static_cast<std::size_t>(v == Var::X ? m.dx : m.dy)] = c;
        return cs;
    }
    static Poly from_univariate(const std::vector<Rat>& cs, Var v) {
        Poly p;
        for (std::size_t k = 0; k < cs.size(); ++k)
            if (cs[k] != 0)
                p.add_term(v == Var::X ? Mono{static_cast<int>(k), 0} : Mono{0, static_cast<int>(k)},
                           cs[k]);
        return p;
    }

    Rat eval_univariate(Var v, const Rat& at) const {
        Rat acc = 0, pw = 1;
        auto cs = univariate_coeffs(v);
        for (const auto& c : cs) {
            acc += c * pw;
            pw *= at;
        }
        return acc;
    }

    void add_term(Mono m, const Rat& c) {
        auto it = t_.find(m);
        if (it == t_.end()) {
            if (c != 0) t_[m] = c;
        } else {
            it->second += c;
            if (it->second == 0) t_.erase(it);
        }
    }

private:
    Terms t_;
};

// ---------------------------------------------------------------------------
// gcd

namespace detail {

/// Monic Euclid for polynomials in one variable (or constants).
inline Poly gcd_univariate(Poly a, Poly b) {
    while (!b.is_zero()) {
        Var v = Var::X;
        b.is_univariate(v);
        // long division a mod b in variable v
        Poly r = a;
        int db = b.degree(v);
        if (db <= 0) { r = Poly(); } // nonzero constant divides everything
        else {
            while (!r.is_zero() && r.degree(v) >= db) {
                int k = r.degree(v);
                Rat c = r.coeff_poly(v, k).constant_value() / b.coeff_poly(v, db).constant_value();
                Poly t = Poly::monomial(c, v == Var::X ? k - db : 0, v == Var::Y ? k - db : 0);
                r = r - t * b;
            }
        }
        a = b;
        b = r;
    }
    return a.normalized();
}

/// Pseudo-remainder of a by b in variable v (coefficients in the other variable).
inline Poly pseudo_rem(Poly a, const Poly& b, Var v) {
    int db = b.degree(v);
    Poly lb = b.coeff_poly(v, db);
    while (!a.is_zero() && a.degree(v) >= db) {
        int da = a.degree(v);
        Poly la = a.coeff_poly(v, da);
        Poly shift = Poly::monomial(1, v == Var::X ? da - db : 0, v == Var::Y ? da - db : 0);
        a = lb * a - la * shift * b;
    }
    return a;
}

inline Poly content_wrt(const Poly& p, Var main) {
    Poly c;
    for (int k = 0; k <= p.degree(main); ++k) {
        Poly ck = p.coeff_poly(main, k);
        if (!ck.is_zero()) c = gcd_univariate(c, ck);
    }
    return c;
}

} // namespace detail

/// gcd over Q[x,y], leading coefficient 1 (grlex); poly_gcd(0, p) = normalized p.
inline Poly poly_gcd(const Poly& p, const Poly& q) {
    if (p.is_zero()) return q.normalized();
    if (q.is_zero()) return p.normalized();
    bool px = p.uses(Var::X), py = p.uses(Var::Y);
    bool qx = q.uses(Var::X), qy = q.uses(Var::Y);
    if (!(px && py) && !(qx && qy)) {
        // both involve at most one variable
        if ((px && qy) || (py && qx)) return Poly(Rat(1)); // distinct variables: coprime
        return detail::gcd_univariate(p, q);
    }
    // Reduce along x: gcd = gcd(contents) * gcd of primitive parts (primitive PRS).
    Var main = Var::X;
    if (!px || !qx) main = Var::Y; // one input free of x: use y as the main variable
    Poly cp = detail::content_wrt(p, main), cq = detail::content_wrt(q, main);
    Poly cont_gcd = detail::gcd_univariate(cp, cq);
    Poly a = *Poly::divexact(p, cp), b = *Poly::divexact(q, cq);
    if (a.degree(main) < b.degree(main)) std::swap(a, b);
    while (true) {
        if (b.is_zero()) break;
        if (b.degree(main) == 0) { a = Poly(Rat(1)); break; } // coprime in main var
        Poly r = detail::pseudo_rem(a, b, main);
        a = b;
        if (r.is_zero()) { b = Poly(); }
        else b = *Poly::divexact(r, detail::content_wrt(r, main));
    }
    Poly g = a;
    if (!g.is_constant()) g = *Poly::divexact(g, detail::content_wrt(g, main));
    else g = Poly(Rat(1));
    return (cont_gcd * g).normalized();
}

inline Poly poly_lcm(const Poly& p, const Poly& q) {
    if (p.is_zero() || q.is_zero()) return Poly();
    return (*Poly::divexact(p * q, poly_gcd(p, q))).normalized();
}

} // namespace planarlie

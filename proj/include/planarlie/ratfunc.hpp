#pragma once

#include <optional>
#include <string>
#include <utility>

#include "planarlie/errors.hpp"
#include "planarlie/poly.hpp"

namespace planarlie {

/// Rational function over Q(x, y) in canonical form: gcd(num, den) = 1 and
/// den has leading coefficient 1 under grlex, so value equality is
/// representation equality.
class RatFunc {
public:
    RatFunc() : num_(), den_(Rat(1)) {}
    RatFunc(const Rat& c) : num_(c), den_(Rat(1)) {} // NOLINT(google-explicit-constructor)
    RatFunc(long c) : num_(Rat(c)), den_(Rat(1)) {}  // NOLINT(google-explicit-constructor)
    RatFunc(Poly p) : num_(std::move(p)), den_(Rat(1)) {} // NOLINT(google-explicit-constructor)
    RatFunc(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) { normalize(); }

    static RatFunc x() { return RatFunc(Poly::x()); }
    static RatFunc y() { return RatFunc(Poly::y()); }

    const Poly& num() const { return num_; }
    const Poly& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_constant() const { return num_.is_constant() && den_.is_constant(); }
    Rat constant_value() const { return num_.constant_value() / den_.constant_value(); }
    bool is_polynomial() const { return den_ == Poly(Rat(1)); }

    bool uses(Var v) const { return num_.uses(v) || den_.uses(v); }
    bool is_univariate(Var& v) const {
        bool ux = uses(Var::X), uy = uses(Var::Y);
        if (ux && uy) return false;
        v = uy ? Var::Y : Var::X;
        return true;
    }

    friend RatFunc operator+(const RatFunc& a, const RatFunc& b) {
        return RatFunc(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    friend RatFunc operator-(const RatFunc& a, const RatFunc& b) {
        return RatFunc(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
    }
    friend RatFunc operator*(const RatFunc& a, const RatFunc& b) {
        return RatFunc(a.num_ * b.num_, a.den_ * b.den_);
    }
    friend RatFunc operator/(const RatFunc& a, const RatFunc& b) {
        if (b.is_zero()) throw DivisionByZero("rational function division by zero");
        return RatFunc(a.num_ * b.den_, a.den_ * b.num_);
    }
    RatFunc operator-() const {
        RatFunc r = *this;
        r.num_ = -r.num_;
        return r;
    }
    friend RatFunc operator*(const Rat& c, const RatFunc& f) { return RatFunc(c * f.num_, f.den_); }
    friend bool operator==(const RatFunc& a, const RatFunc& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }

    RatFunc pow(long e) const {
        if (e == 0) return RatFunc(Rat(1));
        if (e < 0) {
            if (is_zero()) throw DivisionByZero("zero to a negative power");
            return RatFunc(den_, num_).pow(-e);
        }
        return RatFunc(num_.pow(static_cast<unsigned>(e)), den_.pow(static_cast<unsigned>(e)));
    }

    /// Exact partial derivative (quotient rule, renormalized).
    RatFunc partial(Var v) const {
        return RatFunc(num_.derivative(v) * den_ - num_ * den_.derivative(v), den_ * den_);
    }

private:
    void normalize() {
        if (den_.is_zero()) throw DivisionByZero("zero denominator");
        if (num_.is_zero()) {
            den_ = Poly(Rat(1));
            return;
        }
        Poly g = poly_gcd(num_, den_);
        num_ = *Poly::divexact(num_, g);
        den_ = *Poly::divexact(den_, g);
        Rat lc = den_.leading_coeff();
        num_ = Rat(1 / lc) * num_;
        den_ = Rat(1 / lc) * den_;
    }

    Poly num_, den_;
};

inline RatFunc partial(const RatFunc& f, Var v) { return f.partial(v); }

} // namespace planarlie

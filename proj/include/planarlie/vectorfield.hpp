#pragma once

#include <vector>

#include "planarlie/ratfunc.hpp"

namespace planarlie {

/// A derivation of Q(x, y): the planar vector field cx*d/dx + cy*d/dy.
struct Derivation {
    RatFunc cx, cy;

    Derivation() = default;
    Derivation(RatFunc a, RatFunc b) : cx(std::move(a)), cy(std::move(b)) {}

    static Derivation dx() { return {RatFunc(Rat(1)), RatFunc()}; }
    static Derivation dy() { return {RatFunc(), RatFunc(Rat(1))}; }

    bool is_zero() const { return cx.is_zero() && cy.is_zero(); }

    friend Derivation operator+(const Derivation& a, const Derivation& b) {
        return {a.cx + b.cx, a.cy + b.cy};
    }
    friend Derivation operator-(const Derivation& a, const Derivation& b) {
        return {a.cx - b.cx, a.cy - b.cy};
    }
    Derivation operator-() const { return {-cx, -cy}; }
    friend bool operator==(const Derivation& a, const Derivation& b) {
        return a.cx == b.cx && a.cy == b.cy;
    }
};

inline RatFunc apply(const Derivation& d, const RatFunc& f) {
    return d.cx * f.partial(Var::X) + d.cy * f.partial(Var::Y);
}

/// Commutator, componentwise in the standard basis:
/// [D, E] = (D(E.cx) - E(D.cx)) d/dx + (D(E.cy) - E(D.cy)) d/dy.
inline Derivation bracket(const Derivation& d, const Derivation& e) {
    return {apply(d, e.cx) - apply(e, d.cx), apply(d, e.cy) - apply(e, d.cy)};
}

inline Derivation scale(const RatFunc& f, const Derivation& d) {
    return {f * d.cx, f * d.cy};
}

/// Dimension of the span over the rational-function field: 0, 1 or 2.
inline int rank_over_R(const std::vector<Derivation>& ds) {
    bool any = false;
    for (const auto& d : ds) any = any || !d.is_zero();
    if (!any) return 0;
    for (std::size_t i = 0; i < ds.size(); ++i)
        for (std::size_t j = i + 1; j < ds.size(); ++j)
            if (!(ds[i].cx * ds[j].cy - ds[i].cy * ds[j].cx).is_zero()) return 2;
    return 1;
}

} // namespace planarlie

#pragma once

#include <random>

#include "planarlie/ratfunc.hpp"
#include "planarlie/vectorfield.hpp"

namespace testutil {

using planarlie::Derivation;
using planarlie::Mono;
using planarlie::Poly;
using planarlie::Rat;
using planarlie::RatFunc;
using planarlie::Var;

using Rng = std::mt19937_64;

inline Rat random_rat(Rng& rng, long num_max = 9, long den_max = 4) {
    std::uniform_int_distribution<long> num(-num_max, num_max);
    std::uniform_int_distribution<long> den(1, den_max);
    Rat r(num(rng), den(rng));
    r.canonicalize();
    return r;
}

inline Poly random_poly(Rng& rng, int max_deg = 3, int terms = 3) {
    Poly p;
    std::uniform_int_distribution<int> d(0, max_deg);
    for (int t = 0; t < terms; ++t) {
        int dx = d(rng), dy = d(rng);
        if (dx + dy > max_deg) continue;
        p.add_term(Mono{dx, dy}, random_rat(rng));
    }
    return p;
}

inline Poly random_poly_nonzero(Rng& rng, int max_deg = 3, int terms = 3) {
    while (true) {
        Poly p = random_poly(rng, max_deg, terms);
        if (!p.is_zero()) return p;
    }
}

inline RatFunc random_ratfunc(Rng& rng, int max_deg = 3, bool allow_den = true) {
    Poly num = random_poly(rng, max_deg);
    std::uniform_int_distribution<int> coin(0, 3);
    Poly den = (allow_den && coin(rng) == 0) ? random_poly_nonzero(rng, 1, 2) : Poly(Rat(1));
    return RatFunc(num, den);
}

inline Poly random_upoly(Rng& rng, int max_deg = 4) {
    std::uniform_int_distribution<int> d(0, max_deg);
    Poly p;
    for (int t = 0; t < 3; ++t) p.add_term(Mono{d(rng), 0}, random_rat(rng));
    return p;
}

inline Poly random_upoly_nonzero(Rng& rng, int max_deg = 4) {
    while (true) {
        Poly p = random_upoly(rng, max_deg);
        if (!p.is_zero()) return p;
    }
}

inline RatFunc random_uratfunc_nonconstant(Rng& rng, int max_deg = 4) {
    while (true) {
        RatFunc f(random_upoly(rng, max_deg), random_upoly_nonzero(rng, 2));
        if (!f.is_constant()) return f;
    }
}

inline Derivation random_derivation(Rng& rng, int max_deg = 3, bool allow_den = true) {
    return Derivation(random_ratfunc(rng, max_deg, allow_den),
                      random_ratfunc(rng, max_deg, allow_den));
}

} // namespace testutil

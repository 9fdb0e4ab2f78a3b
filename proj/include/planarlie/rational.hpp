#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

namespace planarlie {

using Rat = mpq_class;

inline Rat rat(long num, long den = 1) {
    Rat r(num, den);
    r.canonicalize();
    return r;
}

inline bool is_integer(const Rat& r) { return r.get_den() == 1; }

inline long to_long(const Rat& r) { return mpz_get_si(r.get_num().get_mpz_t()); }

/// "p/q" in lowest terms, integers without the "/1".
inline std::string rat_str(const Rat& r) {
    if (is_integer(r)) return r.get_num().get_str();
    return r.get_num().get_str() + "/" + r.get_den().get_str();
}

/// Positive generator of the group generated by two rationals:
/// gcd(a/b, c/d) = gcd(ad, cb) / bd.
inline Rat rat_gcd(const Rat& a, const Rat& b) {
    if (a == 0) return abs(b);
    if (b == 0) return abs(a);
    mpz_class n1 = a.get_num() * b.get_den();
    mpz_class n2 = b.get_num() * a.get_den();
    mpz_class g;
    mpz_gcd(g.get_mpz_t(), n1.get_mpz_t(), n2.get_mpz_t());
    Rat r(g, a.get_den() * b.get_den());
    r.canonicalize();
    return abs(r);
}

inline Rat rat_gcd(const std::vector<Rat>& xs) {
    Rat g = 0;
    for (const auto& x : xs) g = rat_gcd(g, x);
    return g;
}

inline Rat factorial(long n) {
    Rat r = 1;
    for (long k = 2; k <= n; ++k) r *= k;
    return r;
}

} // namespace planarlie

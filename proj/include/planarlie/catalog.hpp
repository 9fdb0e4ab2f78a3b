#pragma once

#include <array>
#include <cstdlib>
#include <functional>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "planarlie/errors.hpp"
#include "planarlie/structure.hpp"

namespace planarlie {

// Parameter payloads of the twelve catalog types.
struct T1 { int n = 1; };                                            // abelian, dim n
struct T2 { int n = 1; };                                            // [f,e_i]=e_i, dim n+1
struct T3 { int n = 0; int lambda = 0; };                            // single Jordan block, dim n+2
struct T4 { int n = 1; Rat beta = 1; std::vector<long> m; };         // diagonal 1+beta*m_i, dim n+2
struct T5 { int n = 0; Rat beta = 0; Rat gamma = 0; };               // chain + diagonal, dim n+3
struct T6 { int n = 0; };                                            // dim n+3
struct T7 { int n = 1; Rat beta = 1; std::vector<long> m; };         // dim n+3
struct T8 { int n = 0; Rat alpha = 0; Rat beta = 0; };               // dim n+4, gamma = alpha(beta+n+1)
struct T9 { bool two_copies = false; };                              // sl2 or sl2+sl2
struct T10 {};                                                       // sl3
struct T11 { int m = 0; };                                           // sl2 acting on V_m, dim m+4
struct T12 { int m = 0; };                                           // gl2 acting on V_m, dim m+5

using CatalogType = std::variant<T1, T2, T3, T4, T5, T6, T7, T8, T9, T10, T11, T12>;

inline bool operator==(const T1& a, const T1& b) { return a.n == b.n; }
inline bool operator==(const T2& a, const T2& b) { return a.n == b.n; }
inline bool operator==(const T3& a, const T3& b) { return a.n == b.n && a.lambda == b.lambda; }
inline bool operator==(const T4& a, const T4& b) { return a.n == b.n && a.beta == b.beta && a.m == b.m; }
inline bool operator==(const T5& a, const T5& b) { return a.n == b.n && a.beta == b.beta && a.gamma == b.gamma; }
inline bool operator==(const T6& a, const T6& b) { return a.n == b.n; }
inline bool operator==(const T7& a, const T7& b) { return a.n == b.n && a.beta == b.beta && a.m == b.m; }
inline bool operator==(const T8& a, const T8& b) { return a.n == b.n && a.alpha == b.alpha && a.beta == b.beta; }
inline bool operator==(const T9& a, const T9& b) { return a.two_copies == b.two_copies; }
inline bool operator==(const T10&, const T10&) { return true; }
inline bool operator==(const T11& a, const T11& b) { return a.m == b.m; }
inline bool operator==(const T12& a, const T12& b) { return a.m == b.m; }

inline int type_index(const CatalogType& t) { return static_cast<int>(t.index()) + 1; }
inline std::string type_name(const CatalogType& t) { return "T" + std::to_string(type_index(t)); }

inline void validate(const CatalogType& t) {
    auto distinct = [](const std::vector<long>& m) {
        for (std::size_t i = 0; i < m.size(); ++i)
            for (std::size_t j = i + 1; j < m.size(); ++j)
                if (m[i] == m[j]) return false;
        return true;
    };
    std::visit(
        [&](const auto& p) {
            using P = std::decay_t<decltype(p)>;
            if constexpr (std::is_same_v<P, T1> || std::is_same_v<P, T2>) {
                if (p.n < 1) throw BadParameters("n must be >= 1");
            } else if constexpr (std::is_same_v<P, T3>) {
                if (p.n < 0) throw BadParameters("n must be >= 0");
                if (p.lambda != 0 && p.lambda != 1) throw BadParameters("lambda must be 0 or 1");
            } else if constexpr (std::is_same_v<P, T4> || std::is_same_v<P, T7>) {
                if (p.n < 1) throw BadParameters("n must be >= 1");
                if (p.beta == 0) throw BadParameters("beta must be nonzero");
                if (static_cast<int>(p.m.size()) != p.n + 1)
                    throw BadParameters("m must list n+1 integers");
                if (!distinct(p.m)) throw BadParameters("m_i must be pairwise distinct");
            } else if constexpr (std::is_same_v<P, T5> || std::is_same_v<P, T6> ||
                                 std::is_same_v<P, T8>) {
                if (p.n < 0) throw BadParameters("n must be >= 0");
            } else if constexpr (std::is_same_v<P, T11> || std::is_same_v<P, T12>) {
                if (p.m < 0) throw BadParameters("m must be >= 0");
            }
        },
        t);
}

/// Structure constants over a named abstract basis.
struct SCTable {
    int dim = 0;
    std::vector<std::string> names;
    std::vector<QVec> c; // dim*dim coordinate vectors, antisymmetric

    explicit SCTable(std::vector<std::string> ns = {})
        : dim(static_cast<int>(ns.size())), names(std::move(ns)),
          c(static_cast<std::size_t>(dim) * dim, QVec(static_cast<std::size_t>(dim), Rat(0))) {}

    const QVec& at(int i, int j) const { return c[static_cast<std::size_t>(i) * dim + j]; }

    void set(int i, int j, const std::vector<std::pair<int, Rat>>& terms) {
        QVec v(static_cast<std::size_t>(dim), Rat(0));
        for (const auto& [k, coeff] : terms) v[static_cast<std::size_t>(k)] += coeff;
        c[static_cast<std::size_t>(i) * dim + j] = v;
        for (auto& x : v) x = -x;
        c[static_cast<std::size_t>(j) * dim + i] = std::move(v);
    }

    QVec bracket_of(const QVec& u, const QVec& v) const {
        QVec w(static_cast<std::size_t>(dim), Rat(0));
        for (int i = 0; i < dim; ++i) {
            if (u[static_cast<std::size_t>(i)] == 0) continue;
            for (int j = 0; j < dim; ++j) {
                if (v[static_cast<std::size_t>(j)] == 0) continue;
                Rat f = u[static_cast<std::size_t>(i)] * v[static_cast<std::size_t>(j)];
                const QVec& cc = at(i, j);
                for (int k = 0; k < dim; ++k)
                    if (cc[static_cast<std::size_t>(k)] != 0) w[static_cast<std::size_t>(k)] += f * cc[static_cast<std::size_t>(k)];
            }
        }
        return w;
    }

    bool jacobi_ok() const {
        auto unit = [&](int i) {
            QVec v(static_cast<std::size_t>(dim), Rat(0));
            v[static_cast<std::size_t>(i)] = 1;
            return v;
        };
        for (int i = 0; i < dim; ++i)
            for (int j = i + 1; j < dim; ++j)
                for (int k = j + 1; k < dim; ++k) {
                    QVec s = bracket_of(bracket_of(unit(i), unit(j)), unit(k));
                    QVec t = bracket_of(bracket_of(unit(j), unit(k)), unit(i));
                    QVec u = bracket_of(bracket_of(unit(k), unit(i)), unit(j));
                    for (int a = 0; a < dim; ++a)
                        if (s[static_cast<std::size_t>(a)] + t[static_cast<std::size_t>(a)] + u[static_cast<std::size_t>(a)] != 0)
                            return false;
                }
        return true;
    }
};

namespace detail {

/// Monomial c * prod g_k^{e_k} in gauge symbols, used by the adjustment solver.
struct GaugeTerm {
    Rat c;
    std::map<int, long> e;

    GaugeTerm mul(const GaugeTerm& o) const {
        GaugeTerm r = *this;
        r.c *= o.c;
        for (const auto& [sym, ex] : o.e) {
            r.e[sym] += ex;
            if (r.e[sym] == 0) r.e.erase(sym);
        }
        return r;
    }
    GaugeTerm div(const GaugeTerm& o) const {
        GaugeTerm r = *this;
        r.c /= o.c;
        for (const auto& [sym, ex] : o.e) {
            r.e[sym] -= ex;
            if (r.e[sym] == 0) r.e.erase(sym);
        }
        return r;
    }
    void substitute(int sym, const Rat& value) {
        auto it = e.find(sym);
        if (it == e.end()) return;
        long ex = it->second;
        e.erase(it);
        Rat p = 1;
        Rat base = ex > 0 ? value : 1 / value;
        for (long k = 0; k < std::abs(ex); ++k) p *= base;
        c *= p;
    }
};

inline Rat rat_pow(const Rat& v, long e) {
    Rat p = 1;
    Rat base = e >= 0 ? v : 1 / v;
    for (long k = 0; k < std::abs(e); ++k) p *= base;
    return p;
}

/// Exact rational d-th root, when it exists.
inline std::optional<Rat> rat_root(const Rat& v, long d) {
    if (d <= 1) return v;
    if (v == 0) return Rat(0);
    if (v < 0 && d % 2 == 0) return std::nullopt;
    mpz_class num = abs(v.get_num()), den = v.get_den(), rn, rd;
    int exact_n = mpz_root(rn.get_mpz_t(), num.get_mpz_t(), static_cast<unsigned long>(d));
    int exact_d = mpz_root(rd.get_mpz_t(), den.get_mpz_t(), static_cast<unsigned long>(d));
    if (!exact_n || !exact_d) return std::nullopt;
    Rat r(rn, rd);
    r.canonicalize();
    return v < 0 ? Rat(-r) : r;
}

/// Integer coefficients x with sum e_t/d * x_t = 1 (the e/d are coprime).
inline std::vector<long> bezout_combination(const std::vector<std::pair<int, long>>& es, long d) {
    std::function<std::array<long, 3>(long, long)> ext = [&](long a, long b) -> std::array<long, 3> {
        if (b == 0) return {a >= 0 ? a : -a, a >= 0 ? 1L : -1L, 0L};
        auto [g, x, y] = ext(b, a % b);
        return {g, y, x - (a / b) * y};
    };
    std::vector<long> xs(es.size(), 0);
    long g = es[0].second / d;
    xs[0] = 1;
    for (std::size_t t = 1; t < es.size(); ++t) {
        auto [g2, x, y] = ext(g, es[t].second / d);
        for (std::size_t u = 0; u < t; ++u) xs[u] *= x;
        xs[t] = y;
        g = g2;
    }
    return xs;
}

inline std::vector<std::string> enumerated(const std::string& stem, int from, int to,
                                           std::vector<std::string> tail = {}) {
    std::vector<std::string> out;
    for (int i = from; i <= to; ++i) out.push_back(stem + std::to_string(i));
    for (auto& t : tail) out.push_back(std::move(t));
    return out;
}

inline void sl2_block(SCTable& t, int e, int f, int h) {
    t.set(h, e, {{e, 2}});
    t.set(h, f, {{f, -2}});
    t.set(e, f, {{h, 1}});
}

inline void vm_block(SCTable& t, int E, int F, int H, int v0, int m) {
    for (int j = 0; j <= m; ++j) {
        int vj = v0 + j;
        if (m - 2 * j != 0) t.set(H, vj, {{vj, m - 2 * j}});
        if (j > 0) t.set(E, vj, {{vj - 1, j}});
        if (j < m) t.set(F, vj, {{vj + 1, m - j}});
    }
}

} // namespace detail

/// Exact structure constants implementing the catalog relations; every
/// unlisted bracket is zero. All returned tables satisfy the Jacobi identity
/// (the table orientations for types 5 and 8 are the closure-consistent ones;
/// for type 8 the span is closed only with gamma = alpha*(beta+n+1)).
inline SCTable abstract_table(const CatalogType& t) {
    validate(t);
    using detail::enumerated;
    return std::visit(
        [&](const auto& p) -> SCTable {
            using P = std::decay_t<decltype(p)>;
            if constexpr (std::is_same_v<P, T1>) {
                return SCTable(enumerated("e", 1, p.n));
            } else if constexpr (std::is_same_v<P, T2>) {
                SCTable t2(enumerated("e", 1, p.n, {"f"}));
                int f = p.n;
                for (int i = 0; i < p.n; ++i) t2.set(f, i, {{i, 1}});
                return t2;
            } else if constexpr (std::is_same_v<P, T3>) {
                SCTable t3(enumerated("e", 0, p.n, {"f"}));
                int f = p.n + 1;
                for (int i = 0; i <= p.n; ++i) {
                    std::vector<std::pair<int, Rat>> rhs;
                    if (p.lambda != 0) rhs.push_back({i, p.lambda});
                    if (i > 0) rhs.push_back({i - 1, 1});
                    if (!rhs.empty()) t3.set(f, i, rhs);
                }
                return t3;
            } else if constexpr (std::is_same_v<P, T4>) {
                SCTable t4(enumerated("e", 0, p.n, {"f"}));
                int f = p.n + 1;
                for (int i = 0; i <= p.n; ++i) {
                    Rat ev = 1 + p.beta * p.m[static_cast<std::size_t>(i)];
                    if (ev != 0) t4.set(f, i, {{i, ev}});
                }
                return t4;
            } else if constexpr (std::is_same_v<P, T5>) {
                SCTable t5(enumerated("e", 0, p.n, {"f", "g"}));
                int f = p.n + 1, g = p.n + 2;
                for (int i = 1; i <= p.n; ++i) t5.set(f, i, {{i - 1, 1}});
                for (int i = 0; i <= p.n; ++i)
                    if (Rat(i) != p.beta) t5.set(g, i, {{i, i - p.beta}});
                // [f,g] = f - gamma e_n: with f on the left the cyclic Jacobi
                // sum vanishes; the opposite orientation fails it for n >= 1.
                t5.set(f, g, {{f, 1}, {p.n, -p.gamma}});
                return t5;
            } else if constexpr (std::is_same_v<P, T6>) {
                SCTable t6(enumerated("e", 0, p.n, {"f", "g"}));
                int f = p.n + 1, g = p.n + 2;
                for (int i = 0; i <= p.n; ++i) t6.set(f, i, {{i, 1}});
                for (int i = 1; i <= p.n; ++i) t6.set(g, i, {{i - 1, 1}});
                return t6;
            } else if constexpr (std::is_same_v<P, T7>) {
                SCTable t7(enumerated("e", 0, p.n, {"f", "g"}));
                int f = p.n + 1, g = p.n + 2;
                for (int i = 0; i <= p.n; ++i) {
                    t7.set(f, i, {{i, 1}});
                    Rat ev = 1 + p.beta * p.m[static_cast<std::size_t>(i)];
                    if (ev != 0) t7.set(g, i, {{i, ev}});
                }
                return t7;
            } else if constexpr (std::is_same_v<P, T8>) {
                SCTable t8(enumerated("e", 0, p.n, {"f", "g", "h"}));
                int f = p.n + 1, g = p.n + 2, h = p.n + 3;
                Rat gamma = p.alpha * (p.beta + p.n + 1); // forced by closure / Jacobi
                for (int i = 1; i <= p.n; ++i) t8.set(f, i, {{i - 1, 1}});
                for (int i = 0; i <= p.n; ++i) t8.set(g, i, {{i, 1}});
                if (p.alpha != 0) t8.set(g, f, {{p.n, p.alpha}});
                for (int i = 0; i <= p.n; ++i)
                    if (p.beta + i != 0) t8.set(h, i, {{i, -(p.beta + i)}});
                t8.set(h, f, {{f, 1}, {p.n, -gamma}});
                return t8;
            } else if constexpr (std::is_same_v<P, T9>) {
                if (!p.two_copies) {
                    SCTable t9({"e", "f", "h"});
                    detail::sl2_block(t9, 0, 1, 2);
                    return t9;
                }
                SCTable t9({"e1", "f1", "h1", "e2", "f2", "h2"});
                detail::sl2_block(t9, 0, 1, 2);
                detail::sl2_block(t9, 3, 4, 5);
                return t9;
            } else if constexpr (std::is_same_v<P, T10>) {
                SCTable s({"ea", "eb", "eab", "fa", "fb", "fab", "ha", "hb"});
                enum { EA, EB, EAB, FA, FB, FAB, HA, HB };
                s.set(HA, EA, {{EA, 2}});
                s.set(HA, EB, {{EB, -1}});
                s.set(HA, EAB, {{EAB, 1}});
                s.set(HA, FA, {{FA, -2}});
                s.set(HA, FB, {{FB, 1}});
                s.set(HA, FAB, {{FAB, -1}});
                s.set(HB, EA, {{EA, -1}});
                s.set(HB, EB, {{EB, 2}});
                s.set(HB, EAB, {{EAB, 1}});
                s.set(HB, FA, {{FA, 1}});
                s.set(HB, FB, {{FB, -2}});
                s.set(HB, FAB, {{FAB, -1}});
                s.set(EA, FA, {{HA, 1}});
                s.set(EB, FB, {{HB, 1}});
                s.set(EAB, FAB, {{HA, 1}, {HB, 1}});
                s.set(EA, EB, {{EAB, 1}});
                s.set(FA, FB, {{FAB, -1}});
                s.set(EA, FAB, {{FB, -1}});
                s.set(EB, FAB, {{FA, 1}});
                s.set(EAB, FA, {{EB, -1}});
                s.set(EAB, FB, {{EA, 1}});
                return s;
            } else if constexpr (std::is_same_v<P, T11>) {
                std::vector<std::string> ns{"E", "F", "H"};
                for (int j = 0; j <= p.m; ++j) ns.push_back("v" + std::to_string(j));
                SCTable s(ns);
                detail::sl2_block(s, 0, 1, 2);
                detail::vm_block(s, 0, 1, 2, 3, p.m);
                return s;
            } else {
                std::vector<std::string> ns{"E", "F", "H", "Z"};
                for (int j = 0; j <= p.m; ++j) ns.push_back("v" + std::to_string(j));
                SCTable s(ns);
                detail::sl2_block(s, 0, 1, 2);
                detail::vm_block(s, 0, 1, 2, 4, p.m);
                for (int j = 0; j <= p.m; ++j) s.set(3, 4 + j, {{4 + j, 1}});
                return s;
            }
        },
        t);
}

inline int expected_dim(const CatalogType& t) { return abstract_table(t).dim; }

/// Explicit derivations realizing the type, listed in abstract-basis order.
inline std::vector<Derivation> realize(const CatalogType& t) {
    validate(t);
    using D = Derivation;
    auto X = RatFunc::x;
    auto Y = RatFunc::y;
    auto ypow = [&](long e) { return Y().pow(e); };
    auto euler = [&]() { return D(X(), Y()); }; // x d/dx + y d/dy
    return std::visit(
        [&](const auto& p) -> std::vector<D> {
            using P = std::decay_t<decltype(p)>;
            std::vector<D> out;
            if constexpr (std::is_same_v<P, T1>) {
                for (int i = 0; i < p.n; ++i) out.push_back(D(ypow(i), RatFunc()));
            } else if constexpr (std::is_same_v<P, T2>) {
                for (int i = 0; i < p.n; ++i) out.push_back(D(ypow(i), RatFunc()));
                out.push_back(D(-X(), RatFunc()));
            } else if constexpr (std::is_same_v<P, T3>) {
                for (int i = 0; i <= p.n; ++i)
                    out.push_back(D((1 / factorial(i)) * ypow(i), RatFunc()));
                out.push_back(D(Rat(-p.lambda) * X(), RatFunc(Rat(1))));
            } else if constexpr (std::is_same_v<P, T4>) {
                for (long mi : p.m) out.push_back(D(ypow(mi), RatFunc()));
                out.push_back(D(-X(), p.beta * Y()));
            } else if constexpr (std::is_same_v<P, T5>) {
                for (int i = 0; i <= p.n; ++i)
                    out.push_back(D((1 / factorial(i)) * ypow(i), RatFunc()));
                out.push_back(D(RatFunc(), RatFunc(Rat(1))));
                out.push_back(D(p.beta * X() + p.gamma * ypow(p.n + 1), Y()));
            } else if constexpr (std::is_same_v<P, T6>) {
                for (int i = 0; i <= p.n; ++i)
                    out.push_back(D((1 / factorial(i)) * ypow(i), RatFunc()));
                out.push_back(D(-X(), RatFunc()));
                out.push_back(D(RatFunc(), RatFunc(Rat(1))));
            } else if constexpr (std::is_same_v<P, T7>) {
                for (long mi : p.m) out.push_back(D(ypow(mi), RatFunc()));
                out.push_back(D(-X(), RatFunc()));
                out.push_back(D(-X(), p.beta * Y()));
            } else if constexpr (std::is_same_v<P, T8>) {
                Rat gamma = p.alpha * (p.beta + p.n + 1);
                Rat nf = factorial(p.n + 1);
                for (int i = 0; i <= p.n; ++i)
                    out.push_back(D((1 / factorial(i)) * ypow(i), RatFunc()));
                out.push_back(D(RatFunc(), RatFunc(Rat(1))));                      // f
                out.push_back(D(-X() - (p.alpha / nf) * ypow(p.n + 1), RatFunc())); // g
                out.push_back(D(p.beta * X() + (gamma / nf) * ypow(p.n + 1), -Y())); // h
            } else if constexpr (std::is_same_v<P, T9>) {
                out.push_back(D(RatFunc(Rat(1)), RatFunc()));
                out.push_back(D(-X() * X(), RatFunc()));
                out.push_back(D(Rat(-2) * X(), RatFunc()));
                if (p.two_copies) {
                    out.push_back(D(RatFunc(), RatFunc(Rat(1))));
                    out.push_back(D(RatFunc(), -Y() * Y()));
                    out.push_back(D(RatFunc(), Rat(-2) * Y()));
                }
            } else if constexpr (std::is_same_v<P, T10>) {
                out.push_back(D(-Y(), RatFunc()));          // ea
                out.push_back(D(RatFunc(), RatFunc(Rat(-1)))); // eb
                out.push_back(D(RatFunc(Rat(-1)), RatFunc())); // eab
                out.push_back(D(RatFunc(), -X()));          // fa
                out.push_back(scale(Y(), euler()));         // fb
                out.push_back(scale(X(), euler()));         // fab
                out.push_back(D(-X(), Y()));                // ha
                out.push_back(D(-X(), Rat(-2) * Y()));      // hb
            } else if constexpr (std::is_same_v<P, T11>) {
                out.push_back(D(RatFunc(), X()));  // E
                out.push_back(D(Y(), RatFunc()));  // F
                out.push_back(D(X(), -Y()));       // H
                for (int j = 0; j <= p.m; ++j)
                    out.push_back(scale(X().pow(p.m - j) * Y().pow(j), euler()));
            } else {
                if (p.m == 0) {
                    out.push_back(D(RatFunc(Rat(1)), RatFunc()));  // E
                    out.push_back(D(-X() * X(), RatFunc()));       // F
                    out.push_back(D(Rat(-2) * X(), RatFunc()));    // H
                    out.push_back(D(RatFunc(), -Y()));             // Z
                    out.push_back(D(RatFunc(), RatFunc(Rat(1)))); // v0
                } else {
                    out.push_back(D(RatFunc(), X()));
                    out.push_back(D(Y(), RatFunc()));
                    out.push_back(D(X(), -Y()));
                    out.push_back(scale(RatFunc(Rat(1, p.m)), euler()));
                    for (int j = 0; j <= p.m; ++j)
                        out.push_back(scale(X().pow(p.m - j) * Y().pow(j), euler()));
                }
            }
            return out;
        },
        t);
}

struct VerifyReport {
    bool matched = false;
    std::vector<Rat> scaling;  // abstract basis element i = scaling[i] * realized field i
    std::string note;
    SCTable abstract_sc{std::vector<std::string>{}};
    SCTable realized_sc{std::vector<std::string>{}};
};

/// Check that the realization matches the abstract table within the declared
/// adjustment family (per-basis-vector rational rescaling; sign flips are
/// negative scalings). The scaling is solved by constraint propagation over
/// c_abs = c_real * s_i s_j / s_k and reported, never guessed in advance.
inline VerifyReport verify_realization(const CatalogType& t) {
    VerifyReport rep;
    rep.abstract_sc = abstract_table(t);
    const int n = rep.abstract_sc.dim;

    std::vector<Derivation> fields = realize(t);
    LieAlgebra L = LieAlgebra::close(fields, n); // throws DimensionCapExceeded if not closed
    if (L.dim() != n) {
        rep.note = "realization is not linearly independent";
        return rep;
    }
    rep.realized_sc = SCTable(rep.abstract_sc.names);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            rep.realized_sc.c[static_cast<std::size_t>(i) * n + j] = L.sc(i, j);

    // support match
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            for (int k = 0; k < n; ++k) {
                bool za = rep.abstract_sc.at(i, j)[static_cast<std::size_t>(k)] == 0;
                bool zr = rep.realized_sc.at(i, j)[static_cast<std::size_t>(k)] == 0;
                if (za != zr) {
                    rep.note = "structure-constant supports differ at [" +
                               rep.abstract_sc.names[static_cast<std::size_t>(i)] + "," +
                               rep.abstract_sc.names[static_cast<std::size_t>(j)] + "] -> " +
                               rep.abstract_sc.names[static_cast<std::size_t>(k)];
                    return rep;
                }
            }

    struct Constraint { int i, j, k; Rat rho; };
    std::vector<Constraint> cons;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            for (int k = 0; k < n; ++k) {
                const Rat& ca = rep.abstract_sc.at(i, j)[static_cast<std::size_t>(k)];
                const Rat& cr = rep.realized_sc.at(i, j)[static_cast<std::size_t>(k)];
                if (ca != 0) cons.push_back({i, j, k, ca / cr});
            }

    // Solve s_i s_j / s_k = rho multiplicatively. Free directions get gauge
    // symbols; residual monomial equations are resolved by rational roots and
    // a Bezout split of the exponents.
    std::vector<std::optional<detail::GaugeTerm>> s(static_cast<std::size_t>(n));
    int gauges = 0;
    while (true) {
        bool progress = false;
        for (const auto& c : cons) {
            auto &si = s[static_cast<std::size_t>(c.i)], &sj = s[static_cast<std::size_t>(c.j)], &sk = s[static_cast<std::size_t>(c.k)];
            if (c.k == c.i) { // s_j = rho
                if (!sj) { sj = detail::GaugeTerm{c.rho, {}}; progress = true; }
            } else if (c.k == c.j) { // s_i = rho
                if (!si) { si = detail::GaugeTerm{c.rho, {}}; progress = true; }
            } else {
                int known = si.has_value() + sj.has_value() + sk.has_value();
                if (known != 2) continue;
                if (!sk) sk = si->mul(*sj).div(detail::GaugeTerm{c.rho, {}});
                else if (!sj) sj = detail::GaugeTerm{c.rho, {}}.mul(*sk).div(*si);
                else si = detail::GaugeTerm{c.rho, {}}.mul(*sk).div(*sj);
                progress = true;
            }
        }
        if (progress) continue;
        int unknown = -1;
        for (int i = 0; i < n && unknown < 0; ++i)
            if (!s[static_cast<std::size_t>(i)]) unknown = i;
        if (unknown < 0) break;
        s[static_cast<std::size_t>(unknown)] = detail::GaugeTerm{Rat(1), {{gauges++, 1}}};
    }
    auto substitute_all = [&](int sym, const Rat& value) {
        for (auto& term : s)
            if (term) term->substitute(sym, value);
    };
    bool changed = true;
    while (changed) {
        changed = false;
        for (const auto& c : cons) {
            detail::GaugeTerm r = s[static_cast<std::size_t>(c.i)]->mul(*s[static_cast<std::size_t>(c.j)])
                                      .div(*s[static_cast<std::size_t>(c.k)])
                                      .div(detail::GaugeTerm{c.rho, {}});
            if (r.e.empty()) {
                if (r.c != 1) {
                    rep.note = "no diagonal rescaling matches the abstract table";
                    return rep;
                }
                continue;
            }
            // prod g^e = 1/c: take the gcd-th root and split it by Bezout
            Rat target = 1 / r.c;
            long d = 0;
            for (const auto& [sym, ex] : r.e) d = std::gcd(d, std::abs(ex));
            auto root = detail::rat_root(target, d);
            if (!root) {
                rep.note = "no diagonal rescaling matches the abstract table";
                return rep;
            }
            std::vector<std::pair<int, long>> es(r.e.begin(), r.e.end());
            std::vector<long> xs = detail::bezout_combination(es, d);
            for (std::size_t t = 0; t < es.size(); ++t)
                substitute_all(es[t].first, detail::rat_pow(*root, xs[t]));
            changed = true;
            break;
        }
    }
    { // leftover gauge freedom: pin to 1
        std::set<int> leftover;
        for (auto& term : s)
            for (const auto& [sym, ex] : term->e) leftover.insert(sym);
        for (int sym : leftover) substitute_all(sym, Rat(1));
    }
    rep.scaling.clear();
    for (auto& term : s) rep.scaling.push_back(term->c);
    for (const auto& c : cons) {
        if (rep.scaling[static_cast<std::size_t>(c.i)] * rep.scaling[static_cast<std::size_t>(c.j)] /
                rep.scaling[static_cast<std::size_t>(c.k)] != c.rho) {
            rep.note = "no diagonal rescaling matches the abstract table";
            rep.scaling.clear();
            return rep;
        }
    }
    rep.matched = true;
    return rep;
}

} // namespace planarlie

#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "planarlie/errors.hpp"
#include "planarlie/rational.hpp"

namespace planarlie {

using QVec = std::vector<Rat>;

/// Dense matrix over Q.
class QMatrix {
public:
    QMatrix() = default;
    QMatrix(int rows, int cols) : r_(rows), c_(cols), a_(static_cast<std::size_t>(rows) * cols, Rat(0)) {}

    static QMatrix identity(int n) {
        QMatrix m(n, n);
        for (int i = 0; i < n; ++i) m.at(i, i) = 1;
        return m;
    }
    static QMatrix from_rows(const std::vector<QVec>& rows) {
        QMatrix m(static_cast<int>(rows.size()), rows.empty() ? 0 : static_cast<int>(rows[0].size()));
        for (int i = 0; i < m.rows(); ++i)
            for (int j = 0; j < m.cols(); ++j) m.at(i, j) = rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
        return m;
    }

    int rows() const { return r_; }
    int cols() const { return c_; }
    Rat& at(int i, int j) { return a_[static_cast<std::size_t>(i) * c_ + j]; }
    const Rat& at(int i, int j) const { return a_[static_cast<std::size_t>(i) * c_ + j]; }

    QVec row(int i) const {
        QVec v(static_cast<std::size_t>(c_));
        for (int j = 0; j < c_; ++j) v[static_cast<std::size_t>(j)] = at(i, j);
        return v;
    }

    friend QMatrix operator*(const QMatrix& a, const QMatrix& b) {
        QMatrix m(a.r_, b.c_);
        for (int i = 0; i < a.r_; ++i)
            for (int k = 0; k < a.c_; ++k) {
                const Rat& aik = a.at(i, k);
                if (aik == 0) continue;
                for (int j = 0; j < b.c_; ++j) m.at(i, j) += aik * b.at(k, j);
            }
        return m;
    }
    friend QMatrix operator+(const QMatrix& a, const QMatrix& b) {
        QMatrix m = a;
        for (std::size_t i = 0; i < m.a_.size(); ++i) m.a_[i] += b.a_[i];
        return m;
    }
    friend QMatrix operator-(const QMatrix& a, const QMatrix& b) {
        QMatrix m = a;
        for (std::size_t i = 0; i < m.a_.size(); ++i) m.a_[i] -= b.a_[i];
        return m;
    }
    friend QMatrix operator*(const Rat& c, const QMatrix& a) {
        QMatrix m = a;
        for (auto& x : m.a_) x *= c;
        return m;
    }
    friend bool operator==(const QMatrix& a, const QMatrix& b) {
        return a.r_ == b.r_ && a.c_ == b.c_ && a.a_ == b.a_;
    }

    QVec apply(const QVec& v) const {
        QVec w(static_cast<std::size_t>(r_), Rat(0));
        for (int i = 0; i < r_; ++i)
            for (int j = 0; j < c_; ++j)
                if (at(i, j) != 0) w[static_cast<std::size_t>(i)] += at(i, j) * v[static_cast<std::size_t>(j)];
        return w;
    }

    bool is_zero() const {
        for (const auto& x : a_)
            if (x != 0) return false;
        return true;
    }

    Rat trace() const {
        Rat t = 0;
        for (int i = 0; i < std::min(r_, c_); ++i) t += at(i, i);
        return t;
    }

private:
    int r_ = 0, c_ = 0;
    std::vector<Rat> a_;
};

/// Reduced row echelon form with the strictly increasing pivot column list.
inline std::pair<QMatrix, std::vector<int>> rref(QMatrix m) {
    std::vector<int> pivots;
    int row = 0;
    for (int col = 0; col < m.cols() && row < m.rows(); ++col) {
        int sel = -1;
        for (int i = row; i < m.rows(); ++i)
            if (m.at(i, col) != 0) { sel = i; break; }
        if (sel < 0) continue;
        if (sel != row)
            for (int j = 0; j < m.cols(); ++j) std::swap(m.at(sel, j), m.at(row, j));
        Rat inv = 1 / m.at(row, col);
        for (int j = 0; j < m.cols(); ++j) m.at(row, j) *= inv;
        for (int i = 0; i < m.rows(); ++i) {
            if (i == row || m.at(i, col) == 0) continue;
            Rat f = m.at(i, col);
            for (int j = 0; j < m.cols(); ++j) m.at(i, j) -= f * m.at(row, j);
        }
        pivots.push_back(col);
        ++row;
    }
    return {m, pivots};
}

inline int rank(const QMatrix& m) { return static_cast<int>(rref(m).second.size()); }

/// Basis of the null space {v : m v = 0}.
inline std::vector<QVec> kernel(const QMatrix& m) {
    auto [r, piv] = rref(m);
    std::vector<bool> is_pivot(static_cast<std::size_t>(m.cols()), false);
    for (int p : piv) is_pivot[static_cast<std::size_t>(p)] = true;
    std::vector<QVec> basis;
    for (int free = 0; free < m.cols(); ++free) {
        if (is_pivot[static_cast<std::size_t>(free)]) continue;
        QVec v(static_cast<std::size_t>(m.cols()), Rat(0));
        v[static_cast<std::size_t>(free)] = 1;
        for (std::size_t k = 0; k < piv.size(); ++k)
            v[static_cast<std::size_t>(piv[k])] = -r.at(static_cast<int>(k), free);
        basis.push_back(std::move(v));
    }
    return basis;
}

/// One solution of m x = b, or nullopt.
inline std::optional<QVec> solve(const QMatrix& m, const QVec& b) {
    QMatrix aug(m.rows(), m.cols() + 1);
    for (int i = 0; i < m.rows(); ++i) {
        for (int j = 0; j < m.cols(); ++j) aug.at(i, j) = m.at(i, j);
        aug.at(i, m.cols()) = b[static_cast<std::size_t>(i)];
    }
    auto [r, piv] = rref(std::move(aug));
    for (int p : piv)
        if (p == m.cols()) return std::nullopt; // inconsistent
    QVec x(static_cast<std::size_t>(m.cols()), Rat(0));
    for (std::size_t k = 0; k < piv.size(); ++k)
        x[static_cast<std::size_t>(piv[k])] = r.at(static_cast<int>(k), m.cols());
    return x;
}

inline Rat det(QMatrix m) {
    if (m.rows() != m.cols()) throw NonSquare("det");
    Rat d = 1;
    int n = m.rows();
    for (int col = 0; col < n; ++col) {
        int sel = -1;
        for (int i = col; i < n; ++i)
            if (m.at(i, col) != 0) { sel = i; break; }
        if (sel < 0) return 0;
        if (sel != col) {
            for (int j = 0; j < n; ++j) std::swap(m.at(sel, j), m.at(col, j));
            d = -d;
        }
        d *= m.at(col, col);
        Rat inv = 1 / m.at(col, col);
        for (int i = col + 1; i < n; ++i) {
            if (m.at(i, col) == 0) continue;
            Rat f = m.at(i, col) * inv;
            for (int j = col; j < n; ++j) m.at(i, j) -= f * m.at(col, j);
        }
    }
    return d;
}

/// Characteristic polynomial det(tI - m), coefficients ascending in t,
/// monic of degree n (Faddeev–LeVerrier).
inline QVec charpoly(const QMatrix& m) {
    if (m.rows() != m.cols()) throw NonSquare("charpoly");
    int n = m.rows();
    QVec c(static_cast<std::size_t>(n + 1), Rat(0));
    c[static_cast<std::size_t>(n)] = 1;
    QMatrix mk(n, n); // M_0 = 0
    for (int k = 1; k <= n; ++k) {
        QMatrix t = mk;
        for (int i = 0; i < n; ++i) t.at(i, i) += c[static_cast<std::size_t>(n - k + 1)];
        mk = m * t;
        c[static_cast<std::size_t>(n - k)] = -mk.trace() / k;
    }
    return c;
}

/// Rational roots of a rational-coefficient polynomial (ascending coeffs),
/// with multiplicities; `split` is true when the polynomial factors completely
/// into the returned linear factors.
struct RootList {
    std::vector<std::pair<Rat, int>> roots;
    bool split = true;
};

inline RootList rational_roots(QVec cs) {
    RootList out;
    while (!cs.empty() && cs.back() == 0) cs.pop_back();
    if (cs.size() <= 1) return out; // constant: no roots
    // roots at zero
    int zero_mult = 0;
    std::size_t shift = 0;
    while (shift < cs.size() - 1 && cs[shift] == 0) { ++zero_mult; ++shift; }
    if (zero_mult) {
        cs.erase(cs.begin(), cs.begin() + shift);
        out.roots.emplace_back(Rat(0), zero_mult);
    }
    auto eval = [&](const Rat& x) {
        Rat acc = 0, pw = 1;
        for (const auto& co : cs) { acc += co * pw; pw *= x; }
        return acc;
    };
    auto deflate = [&](const Rat& r) { // divide by (t - r), exact
        QVec q(cs.size() - 1);
        Rat carry = cs.back();
        for (std::size_t i = cs.size() - 1; i-- > 0;) {
            q[i] = carry;
            carry = cs[i] + carry * r;
        }
        cs = std::move(q);
    };
    while (cs.size() > 1) {
        // integer-primitive model for candidate roots
        mpz_class l = 1;
        for (const auto& co : cs) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), co.get_den().get_mpz_t());
        std::vector<mpz_class> zs;
        for (const auto& co : cs) zs.push_back(co.get_num() * (l / co.get_den()));
        auto divisors = [](const mpz_class& v) {
            std::vector<mpz_class> ds;
            mpz_class a = abs(v);
            for (mpz_class d = 1; d * d <= a; ++d)
                if (a % d == 0) {
                    ds.push_back(d);
                    if (d * d != a) ds.push_back(a / d);
                }
            return ds;
        };
        bool found = false;
        for (const auto& pn : divisors(zs.front())) {
            for (const auto& qd : divisors(zs.back())) {
                for (int sgn : {1, -1}) {
                    Rat r(sgn * pn, qd);
                    r.canonicalize();
                    if (eval(r) == 0) {
                        int mult = 0;
                        while (cs.size() > 1 && eval(r) == 0) { deflate(r); ++mult; }
                        out.roots.emplace_back(r, mult);
                        found = true;
                        goto next;
                    }
                }
            }
        }
    next:
        if (!found) break;
    }
    out.split = cs.size() <= 1;
    return out;
}

struct EigenSpace {
    Rat lambda;
    int multiplicity = 0;            // algebraic
    std::vector<QVec> generalized;   // basis of ker (m - lambda)^multiplicity
    std::vector<QVec> eigenvectors;  // basis of ker (m - lambda)
};

struct EigenResult {
    std::vector<EigenSpace> spaces;
    bool split = false; // characteristic polynomial splits over Q
};

/// Rational eigenvalues with algebraic multiplicities and generalized
/// eigenspace bases.
inline EigenResult rational_eigen(const QMatrix& m) {
    if (m.rows() != m.cols()) throw NonSquare("rational_eigen");
    int n = m.rows();
    auto roots = rational_roots(charpoly(m));
    EigenResult out;
    int total = 0;
    for (const auto& [lambda, mult] : roots.roots) {
        EigenSpace es;
        es.lambda = lambda;
        es.multiplicity = mult;
        QMatrix shifted = m;
        for (int i = 0; i < n; ++i) shifted.at(i, i) -= lambda;
        es.eigenvectors = kernel(shifted);
        QMatrix powm = QMatrix::identity(n);
        for (int k = 0; k < mult; ++k) powm = powm * shifted;
        es.generalized = kernel(powm);
        total += mult;
        out.spaces.push_back(std::move(es));
    }
    out.split = (total == n);
    return out;
}

inline bool is_nilpotent(const QMatrix& m) {
    if (m.rows() != m.cols()) throw NonSquare("is_nilpotent");
    QMatrix p = m;
    for (int i = 1; i < m.rows(); ++i) p = p * m;
    return p.is_zero();
}

} // namespace planarlie

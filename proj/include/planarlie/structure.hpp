#pragma once

#include <algorithm>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "planarlie/errors.hpp"
#include "planarlie/linalg.hpp"
#include "planarlie/vectorfield.hpp"

namespace planarlie {

/// Row-space of coordinate vectors relative to some LieAlgebra basis,
/// kept in rref so equal subspaces compare equal.
class Subspace {
public:
    Subspace() = default;
    explicit Subspace(const std::vector<QVec>& vectors, int ambient) : ambient_(ambient) {
        if (vectors.empty()) return;
        auto [r, piv] = rref(QMatrix::from_rows(vectors));
        for (std::size_t k = 0; k < piv.size(); ++k) rows_.push_back(r.row(static_cast<int>(k)));
    }

    int dim() const { return static_cast<int>(rows_.size()); }
    int ambient() const { return ambient_; }
    const std::vector<QVec>& basis() const { return rows_; }

    bool contains(const QVec& v) const {
        if (rows_.empty()) {
            for (const auto& x : v)
                if (x != 0) return false;
            return true;
        }
        QMatrix m(ambient_, dim());
        for (int j = 0; j < dim(); ++j)
            for (int i = 0; i < ambient_; ++i)
                m.at(i, j) = rows_[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)];
        return solve(m, v).has_value();
    }
    bool contains(const Subspace& other) const {
        for (const auto& r : other.rows_)
            if (!contains(r)) return false;
        return true;
    }

    friend bool operator==(const Subspace& a, const Subspace& b) {
        return a.ambient_ == b.ambient_ && a.rows_ == b.rows_;
    }

    static Subspace intersect(const Subspace& a, const Subspace& b) {
        if (a.dim() == 0 || b.dim() == 0) return Subspace({}, a.ambient_);
        // x = sum u_i a_i = sum v_j b_j: kernel of [A^T | -B^T]
        QMatrix m(a.ambient_, a.dim() + b.dim());
        for (int i = 0; i < a.ambient_; ++i) {
            for (int j = 0; j < a.dim(); ++j) m.at(i, j) = a.rows_[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)];
            for (int j = 0; j < b.dim(); ++j) m.at(i, a.dim() + j) = -b.rows_[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)];
        }
        std::vector<QVec> vecs;
        for (const auto& k : kernel(m)) {
            QVec x(static_cast<std::size_t>(a.ambient_), Rat(0));
            for (int j = 0; j < a.dim(); ++j)
                for (int i = 0; i < a.ambient_; ++i)
                    x[static_cast<std::size_t>(i)] += k[static_cast<std::size_t>(j)] * a.rows_[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)];
            vecs.push_back(std::move(x));
        }
        return Subspace(vecs, a.ambient_);
    }

private:
    int ambient_ = 0;
    std::vector<QVec> rows_;
};

struct Predicates {
    bool abelian = false;
    bool solvable = false;
    bool nilpotent = false;
    bool perfect = false;
    int center_dim = 0;
};

struct IdealLines {
    std::vector<Subspace> lines; // one-dimensional ideals found
    bool all_lines = false;      // abelian: every line is an ideal
    bool any_nonsplit = false;   // some adjoint characteristic polynomial fails to split over Q
};

/// Finite-dimensional Lie algebra of derivations: a rationally independent
/// basis plus exact structure constants [b_i, b_j] = sum_k c_{ij}^k b_k.
class LieAlgebra {
public:
    static constexpr int kDefaultCap = 16;

    /// Smallest bracket-closed rational span containing the generators.
    static LieAlgebra close(const std::vector<Derivation>& gens, int dim_cap = kDefaultCap) {
        LieAlgebra L;
        for (const auto& g : gens) {
            if (g.is_zero() || L.try_coordinates(g)) continue;
            L.basis_.push_back(g);
            if (static_cast<int>(L.basis_.size()) > dim_cap)
                throw DimensionCapExceeded("closure exceeds dimension cap " + std::to_string(dim_cap));
        }
        std::size_t processed_until = 0; // pairs (i, j) with j < processed_until are done
        while (processed_until < L.basis_.size()) {
            std::size_t j = processed_until++;
            for (std::size_t i = 0; i < L.basis_.size(); ++i) {
                if (i == j) continue;
                Derivation b = bracket(L.basis_[i], L.basis_[j]);
                if (b.is_zero() || L.try_coordinates(b)) continue;
                L.basis_.push_back(b);
                if (static_cast<int>(L.basis_.size()) > dim_cap)
                    throw DimensionCapExceeded("closure exceeds dimension cap " +
                                               std::to_string(dim_cap));
            }
        }
        L.build_sc();
        return L;
    }

    int dim() const { return static_cast<int>(basis_.size()); }
    const std::vector<Derivation>& basis() const { return basis_; }

    /// c_{ij} as a coordinate vector (valid after close()).
    const QVec& sc(int i, int j) const { return sc_[static_cast<std::size_t>(i) * basis_.size() + static_cast<std::size_t>(j)]; }

    Derivation element(const QVec& coords) const {
        Derivation d;
        for (int i = 0; i < dim(); ++i) {
            const Rat& c = coords[static_cast<std::size_t>(i)];
            if (c != 0) d = d + scale(RatFunc(c), basis_[static_cast<std::size_t>(i)]);
        }
        return d;
    }

    /// Exact coordinates of d in the basis; NotInSpan when d is outside.
    QVec coordinates(const Derivation& d) const {
        auto c = try_coordinates(d);
        if (!c) throw NotInSpan("derivation is not in the rational span of the basis");
        return *c;
    }

    std::optional<QVec> try_coordinates(const Derivation& d) const {
        if (basis_.empty()) return d.is_zero() ? std::optional<QVec>(QVec{}) : std::nullopt;
        // clear denominators componentwise and match polynomial coefficients
        Poly qx(Rat(1)), qy(Rat(1));
        for (const auto& b : basis_) {
            qx = poly_lcm(qx, b.cx.den());
            qy = poly_lcm(qy, b.cy.den());
        }
        qx = poly_lcm(qx, d.cx.den());
        qy = poly_lcm(qy, d.cy.den());
        std::vector<Poly> nx, ny;
        for (const auto& b : basis_) {
            nx.push_back(b.cx.num() * *Poly::divexact(qx, b.cx.den()));
            ny.push_back(b.cy.num() * *Poly::divexact(qy, b.cy.den()));
        }
        Poly dx = d.cx.num() * *Poly::divexact(qx, d.cx.den());
        Poly dy = d.cy.num() * *Poly::divexact(qy, d.cy.den());

        std::set<std::pair<std::pair<int, int>, int>> monos; // ((dx,dy), component)
        auto collect = [&monos](const Poly& p, int comp) {
            for (const auto& [m, c] : p.terms()) monos.insert({{m.dx, m.dy}, comp});
        };
        for (const auto& p : nx) collect(p, 0);
        for (const auto& p : ny) collect(p, 1);
        collect(dx, 0);
        collect(dy, 1);

        QMatrix m(static_cast<int>(monos.size()), dim());
        QVec rhs(monos.size(), Rat(0));
        int row = 0;
        for (const auto& [mono, comp] : monos) {
            for (int i = 0; i < dim(); ++i) {
                const Poly& p = comp == 0 ? nx[static_cast<std::size_t>(i)] : ny[static_cast<std::size_t>(i)];
                m.at(row, i) = p.coeff(mono.first, mono.second);
            }
            const Poly& pd = comp == 0 ? dx : dy;
            rhs[static_cast<std::size_t>(row)] = pd.coeff(mono.first, mono.second);
            ++row;
        }
        return solve(m, rhs);
    }

    /// [u, v] in coordinates, via the structure constants.
    QVec bracket_coords(const QVec& u, const QVec& v) const {
        QVec w(static_cast<std::size_t>(dim()), Rat(0));
        for (int i = 0; i < dim(); ++i) {
            if (u[static_cast<std::size_t>(i)] == 0) continue;
            for (int j = 0; j < dim(); ++j) {
                if (v[static_cast<std::size_t>(j)] == 0) continue;
                const QVec& c = sc(i, j);
                Rat f = u[static_cast<std::size_t>(i)] * v[static_cast<std::size_t>(j)];
                for (int k = 0; k < dim(); ++k)
                    if (c[static_cast<std::size_t>(k)] != 0) w[static_cast<std::size_t>(k)] += f * c[static_cast<std::size_t>(k)];
            }
        }
        return w;
    }

    /// Matrix of w -> [v, w] in the basis.
    QMatrix ad_matrix(const QVec& v) const {
        QMatrix m(dim(), dim());
        for (int j = 0; j < dim(); ++j) {
            QVec ej(static_cast<std::size_t>(dim()), Rat(0));
            ej[static_cast<std::size_t>(j)] = 1;
            QVec w = bracket_coords(v, ej);
            for (int i = 0; i < dim(); ++i) m.at(i, j) = w[static_cast<std::size_t>(i)];
        }
        return m;
    }

    QVec basis_coords(int i) const {
        QVec v(static_cast<std::size_t>(dim()), Rat(0));
        v[static_cast<std::size_t>(i)] = 1;
        return v;
    }

    Subspace full() const {
        std::vector<QVec> rows;
        for (int i = 0; i < dim(); ++i) rows.push_back(basis_coords(i));
        return Subspace(rows, dim());
    }

    /// Span of all brackets [a, b], a in A, b in B.
    Subspace bracket_span(const Subspace& a, const Subspace& b) const {
        std::vector<QVec> vecs;
        for (const auto& u : a.basis())
            for (const auto& v : b.basis()) vecs.push_back(bracket_coords(u, v));
        return Subspace(vecs, dim());
    }

    enum class SeriesKind { Derived, LowerCentral };

    /// Strictly descending until stabilization; the stabilized term appears once.
    std::vector<Subspace> series(SeriesKind kind) const {
        std::vector<Subspace> out{full()};
        while (true) {
            const Subspace& last = out.back();
            Subspace next = kind == SeriesKind::Derived ? bracket_span(last, last)
                                                        : bracket_span(full(), last);
            if (next == last) break;
            out.push_back(next);
        }
        return out;
    }

    Subspace derived_subalgebra() const { return bracket_span(full(), full()); }

    Subspace center() const {
        if (dim() == 0) return Subspace({}, 0);
        QMatrix stacked(dim() * dim(), dim());
        for (int j = 0; j < dim(); ++j) {
            QMatrix adj = ad_matrix(basis_coords(j));
            for (int r = 0; r < dim(); ++r)
                for (int c = 0; c < dim(); ++c) stacked.at(j * dim() + r, c) = -adj.at(r, c);
            // rows express [x, b_j] = -[b_j, x] = 0
        }
        return Subspace(kernel(stacked), dim());
    }

    Predicates predicates() const {
        Predicates p;
        p.abelian = true;
        for (int i = 0; i < dim() && p.abelian; ++i)
            for (int j = 0; j < dim() && p.abelian; ++j)
                for (const auto& c : sc(i, j))
                    if (c != 0) { p.abelian = false; break; }
        auto der = series(SeriesKind::Derived);
        auto low = series(SeriesKind::LowerCentral);
        p.solvable = der.back().dim() == 0;
        p.nilpotent = low.back().dim() == 0;
        p.perfect = der.size() == 1 && dim() > 0;
        p.center_dim = center().dim();
        return p;
    }

    /// kappa(b_i, b_j) = trace(ad b_i ad b_j), symmetric.
    QMatrix killing_form() const {
        std::vector<QMatrix> ads;
        for (int i = 0; i < dim(); ++i) ads.push_back(ad_matrix(basis_coords(i)));
        QMatrix k(dim(), dim());
        for (int i = 0; i < dim(); ++i)
            for (int j = i; j < dim(); ++j) {
                Rat t = (ads[static_cast<std::size_t>(i)] * ads[static_cast<std::size_t>(j)]).trace();
                k.at(i, j) = t;
                k.at(j, i) = t;
            }
        return k;
    }

    /// Solvable radical via the Killing criterion: {x : kappa(x, [L,L]) = 0}.
    Subspace radical() const {
        if (dim() == 0) return Subspace({}, 0);
        QMatrix k = killing_form();
        Subspace der = derived_subalgebra();
        if (der.dim() == 0) return full();
        QMatrix rowsm(der.dim(), dim());
        for (int r = 0; r < der.dim(); ++r) {
            QVec kw = k.apply(der.basis()[static_cast<std::size_t>(r)]);
            for (int c = 0; c < dim(); ++c) rowsm.at(r, c) = kw[static_cast<std::size_t>(c)];
        }
        return Subspace(kernel(rowsm), dim());
    }

    /// Lines <v> with [L, v] in <v>: exactly the joint rational eigenlines of
    /// the adjoint representation. A joint eigenvector over Q has rational
    /// eigenvalues under every ad b_i, so the enumeration is complete over Q.
    IdealLines one_dim_ideals() const {
        IdealLines out;
        Predicates p = predicates();
        if (p.abelian) {
            out.all_lines = true;
            for (int i = 0; i < dim(); ++i)
                out.lines.push_back(Subspace({basis_coords(i)}, dim()));
            return out;
        }
        std::vector<Subspace> spaces{full()};
        for (int j = 0; j < dim(); ++j) {
            QMatrix adj = ad_matrix(basis_coords(j));
            auto roots = rational_roots(charpoly(adj));
            if (!roots.split) out.any_nonsplit = true;
            std::vector<Subspace> next;
            for (const auto& w : spaces) {
                for (const auto& [lambda, mult] : roots.roots) {
                    QMatrix shifted = adj;
                    for (int i = 0; i < dim(); ++i) shifted.at(i, i) -= lambda;
                    Subspace eig(kernel(shifted), dim());
                    Subspace inter = Subspace::intersect(w, eig);
                    if (inter.dim() > 0) next.push_back(inter);
                }
            }
            spaces = std::move(next);
            if (spaces.empty()) break;
        }
        std::set<std::vector<std::string>> seen;
        for (const auto& w : spaces)
            for (const auto& v : w.basis()) {
                Subspace line({v}, dim());
                std::vector<std::string> key;
                for (const auto& c : line.basis()[0]) key.push_back(rat_str(c));
                if (seen.insert(key).second) out.lines.push_back(line);
            }
        return out;
    }

    /// I = R D1 ^ L: all elements of L that are rational-function multiples
    /// of D1 (the coefficient cross-determinant with D1 vanishes). For a
    /// solvable L with <D1> an ideal this is always an ideal; otherwise the
    /// ideal check may fail, reported as NotIdeal.
    Subspace r_multiple_ideal(const Derivation& d1) const {
        if (d1.is_zero()) throw NotMember("D1 must be nonzero");
        if (!try_coordinates(d1)) throw NotMember("D1 is not a member of the algebra");
        std::vector<RatFunc> cross;
        cross.reserve(basis_.size());
        for (const auto& b : basis_) cross.push_back(b.cx * d1.cy - b.cy * d1.cx);
        Poly q(Rat(1));
        for (const auto& w : cross) q = poly_lcm(q, w.den());
        std::vector<Poly> nums;
        for (const auto& w : cross) nums.push_back(w.num() * *Poly::divexact(q, w.den()));
        std::set<std::pair<int, int>> monos;
        for (const auto& p : nums)
            for (const auto& [m, c] : p.terms()) monos.insert({m.dx, m.dy});
        QMatrix m(static_cast<int>(monos.size()), dim());
        int row = 0;
        for (const auto& mono : monos) {
            for (int i = 0; i < dim(); ++i)
                m.at(row, i) = nums[static_cast<std::size_t>(i)].coeff(mono.first, mono.second);
            ++row;
        }
        Subspace I(kernel(m), dim());
        for (int j = 0; j < dim(); ++j)
            for (const auto& v : I.basis())
                if (!I.contains(bracket_coords(basis_coords(j), v)))
                    throw NotIdeal("R-multiple subspace is not an ideal of the input");
        return I;
    }

private:
    void build_sc() {
        std::size_t n = basis_.size();
        sc_.assign(n * n, QVec(n, Rat(0)));
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j) {
                QVec c = coordinates(bracket(basis_[i], basis_[j]));
                sc_[i * n + j] = c;
                for (auto& x : c) x = -x;
                sc_[j * n + i] = std::move(c);
            }
    }

    std::vector<Derivation> basis_;
    std::vector<QVec> sc_;
};

/// Killing form of L/I in some complement coordinates; used to check that
/// the quotient by the radical is semisimple.
inline QMatrix quotient_killing(const LieAlgebra& L, const Subspace& I) {
    // complement basis: standard basis vectors in the non-pivot columns of I
    std::vector<QVec> rows = I.basis();
    std::vector<int> comp;
    for (int i = 0; i < L.dim(); ++i) {
        auto test = rows;
        test.push_back(L.basis_coords(i));
        if (Subspace(test, L.dim()).dim() > static_cast<int>(rows.size())) {
            rows.push_back(L.basis_coords(i));
            comp.push_back(i);
        }
    }
    int q = static_cast<int>(comp.size());
    // projection of a vector onto complement coordinates modulo I
    QMatrix all(L.dim(), L.dim());
    {
        int c = 0;
        for (const auto& r : I.basis()) {
            for (int i = 0; i < L.dim(); ++i) all.at(i, c) = r[static_cast<std::size_t>(i)];
            ++c;
        }
        for (int j : comp) {
            all.at(j, c) = 1;
            ++c;
        }
    }
    auto project = [&](const QVec& v) {
        QVec sol = *solve(all, v);
        QVec out(static_cast<std::size_t>(q));
        for (int t = 0; t < q; ++t) out[static_cast<std::size_t>(t)] = sol[static_cast<std::size_t>(I.dim() + t)];
        return out;
    };
    // quotient structure constants
    std::vector<std::vector<QVec>> c(static_cast<std::size_t>(q), std::vector<QVec>(static_cast<std::size_t>(q)));
    for (int a = 0; a < q; ++a)
        for (int b = 0; b < q; ++b)
            c[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] =
                project(L.bracket_coords(L.basis_coords(comp[static_cast<std::size_t>(a)]),
                                         L.basis_coords(comp[static_cast<std::size_t>(b)])));
    auto ad_of = [&](int a) {
        QMatrix m(q, q);
        for (int b = 0; b < q; ++b)
            for (int k = 0; k < q; ++k)
                m.at(k, b) = c[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)][static_cast<std::size_t>(k)];
        return m;
    };
    QMatrix kf(q, q);
    for (int a = 0; a < q; ++a)
        for (int b = a; b < q; ++b) {
            Rat t = (ad_of(a) * ad_of(b)).trace();
            kf.at(a, b) = t;
            kf.at(b, a) = t;
        }
    return kf;
}

} // namespace planarlie

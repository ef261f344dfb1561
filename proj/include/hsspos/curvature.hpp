#ifndef HSSPOS_CURVATURE_HPP
#define HSSPOS_CURVATURE_HPP

#include <algorithm>
#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "hsspos/chevalley.hpp"
#include "hsspos/error.hpp"
#include "hsspos/exact_linalg.hpp"
#include "hsspos/hss_catalog.hpp"
#include "hsspos/rational.hpp"

namespace hsspos {

/*
  Curvature of a compact hermitian symmetric space G/K at the base point.

  Tangent vectors are written X = sum_a a_a X_a over a in Psi, where
  X_a = e_a - e_-a and JX_a = i (e_a + e_-a) for the Chevalley vectors e_a.
  All coefficients are real rationals.

  The curvature tensor in this basis is

      R^g_{b d' a} = coefficient of e_g in [[e_a, e_-d], e_b]
                   = 0                                   if b + a != g + d
                   = <b, a^vee> = 2(b,a)/(a,a)            if b = g, a = d
                   = N(a,-d) N(b,-g) (g,g)/(a-d,a-d)      if b + a = g + d, b != g

  and the holomorphic bisectional curvature <R(X,JX)W,JW> is, up to one
  positive constant per space, the quadratic form W -> b^T M b with

      M[g][d] = sum_{a,b} a_a a_b R^d_{g b' a} * 2/(d,d).

  The factors (g,g)/(a-d,a-d) and 2/(d,d) are the Killing norms of the
  Chevalley vectors; for simply-laced algebras (long roots only) they are all
  1 and the expressions reduce to the plain (b,d) and N N terms of Borel's
  formula.
*/

struct TangentVector {
    SpaceId space;
    std::vector<Rational> coeffs; // indexed by position in Psi

    static TangentVector zero(const HermitianSpace& s) {
        return {s.id(), std::vector<Rational>(std::size_t(s.dimension()), Rational(0))};
    }
    static TangentVector basis(const HermitianSpace& s, RootSystem::Index a, const Rational& c = 1) {
        TangentVector x = zero(s);
        x.coeffs[std::size_t(s.psi_position(s.require_psi(a, "basis")))] = c;
        return x;
    }

    bool is_zero() const {
        return std::all_of(coeffs.begin(), coeffs.end(), [](const Rational& c) { return c == 0; });
    }

    /// Coefficient of X_a for a root index a in Psi.
    Rational at(const HermitianSpace& s, RootSystem::Index a) const {
        return coeffs.at(std::size_t(s.psi_position(s.require_psi(a, "coefficient"))));
    }
};

struct HermitianForm {
    SpaceId space;
    RationalMatrix matrix; // v x v, rows/cols indexed by Psi
};

struct ConeLine {
    SpaceId space;
    TangentVector base_vector;
    int ell_line = 0;
};

namespace detail {

inline void check_vector(const HermitianSpace& s, const TangentVector& x, const char* op, bool nonzero = true) {
    if (!(x.space == s.id()) || x.coeffs.size() != std::size_t(s.dimension()))
        throw ArgumentError(std::string(op) + ": tangent vector belongs to " + x.space.str() + ", not " + s.id().str());
    if (nonzero && x.is_zero()) throw ArgumentError(std::string(op) + ": tangent vector is zero");
}

// Component with indices already known to lie in Psi.
inline Rational component(const HermitianSpace& s, RootSystem::Index b, RootSystem::Index d,
                          RootSystem::Index a, RootSystem::Index g) {
    const RootSystem& rs = s.roots();
    const StructureTable& t = s.table();
    if (rs.root(b) + rs.root(a) != rs.root(g) + rs.root(d)) return 0;
    if (b == g) return rs.cartan(b, a);
    const auto rho = t.sum(a, rs.negative(d));
    if (rho < 0) return 0;
    return frac(long(t.n(a, rs.negative(d))) * t.n(b, rs.negative(g)) * rs.inner2(g, g), rs.inner2(rho, rho));
}

inline Rational chevalley_norm(const RootSystem& rs, RootSystem::Index d) { return frac(4, rs.inner2(d, d)); }

// X = sum a (e_a - e_-a) when sign = -1, Y = sum a (e_a + e_-a) when sign = +1.
inline AlgebraElement realize(const HermitianSpace& s, const TangentVector& x, int sign) {
    AlgebraElement out(std::size_t(s.table().cartan_dim()));
    for (std::size_t i = 0; i < x.coeffs.size(); ++i) {
        if (x.coeffs[i] == 0) continue;
        const auto a = s.psi()[i];
        out.add_e(a, x.coeffs[i]);
        out.add_e(s.roots().negative(a), sign * x.coeffs[i]);
    }
    return out;
}

} // namespace detail

/// R^gamma_{beta delta-bar alpha}; all four roots must lie in Psi.
inline Rational curvature_component(const HermitianSpace& s, RootSystem::Index beta, RootSystem::Index delta,
                                    RootSystem::Index alpha, RootSystem::Index gamma) {
    for (auto r : {beta, delta, alpha, gamma}) s.require_psi(r, "curvature_component");
    return detail::component(s, beta, delta, alpha, gamma);
}

inline Rational curvature_component(const HermitianSpace& s, const Root& beta, const Root& delta,
                                    const Root& alpha, const Root& gamma) {
    const char* op = "curvature_component";
    return detail::component(s, s.require_psi(beta, op), s.require_psi(delta, op), s.require_psi(alpha, op),
                             s.require_psi(gamma, op));
}

/// Matrix of W -> <R(X,JX)W,JW> on real coefficient vectors over Psi.
inline HermitianForm hermitian_form(const HermitianSpace& s, const TangentVector& x) {
    detail::check_vector(s, x, "hermitian_form");
    const RootSystem& rs = s.roots();
    const StructureTable& t = s.table();
    const auto& psi = s.psi();
    const std::size_t v = psi.size();
    RationalMatrix m(v, v);

    std::vector<std::size_t> support;
    for (std::size_t i = 0; i < v; ++i)
        if (x.coeffs[i] != 0) support.push_back(i);

    for (std::size_t ia : support) {
        const Rational a2 = x.coeffs[ia] * x.coeffs[ia];
        for (std::size_t ig = 0; ig < v; ++ig) {
            const auto g = psi[ig];
            m(ig, ig) += a2 * detail::component(s, g, psi[ia], psi[ia], g) * detail::chevalley_norm(rs, g);
        }
    }
    for (std::size_t ia : support)
        for (std::size_t ib : support) {
            if (ia == ib) continue;
            const auto a = psi[ia], b = psi[ib];
            const auto rho = t.sum(a, rs.negative(b));
            if (rho < 0) continue;
            const Rational ab = x.coeffs[ia] * x.coeffs[ib];
            for (std::size_t ig = 0; ig < v; ++ig) {
                const auto d = t.sum(psi[ig], rho);
                if (d < 0 || !s.in_psi(d)) continue;
                const auto id = std::size_t(s.psi_position(d));
                m(ig, id) += ab * detail::component(s, psi[ig], b, a, d) * detail::chevalley_norm(rs, d);
            }
        }
    return {s.id(), std::move(m)};
}

inline Rational evaluate(const HermitianForm& h, const TangentVector& w) {
    Rational q = 0;
    const auto& m = h.matrix;
    for (std::size_t i = 0; i < m.rows(); ++i) {
        if (w.coeffs[i] == 0) continue;
        for (std::size_t j = 0; j < m.cols(); ++j)
            if (w.coeffs[j] != 0 && m(i, j) != 0) q += w.coeffs[i] * m(i, j) * w.coeffs[j];
    }
    return q;
}

/// <R(X,JX)W,JW> straight from brackets and the Killing form of the compact
/// real form: kappa([[X, Y_X], W], Y_W) with JX = i Y_X, JW = i Y_W.
inline Rational bracket_curvature_oracle(const HermitianSpace& s, const TangentVector& x, const TangentVector& w) {
    detail::check_vector(s, x, "bracket_curvature_oracle", false);
    detail::check_vector(s, w, "bracket_curvature_oracle", false);
    const StructureTable& t = s.table();
    const auto X = detail::realize(s, x, -1);
    const auto YX = detail::realize(s, x, +1);
    const auto W = detail::realize(s, w, -1);
    const auto YW = detail::realize(s, w, +1);
    return killing_form(t, bracket(t, bracket(t, X, YX), W), YW);
}

/// The oracle as a matrix on the real tangent space p = span{X_g, JX_g}.
struct OracleTangentForm {
    RationalMatrix real;          // 2v x 2v, X-block first
    bool imaginary_part_vanishes; // entries that would be imaginary are all 0
};

inline OracleTangentForm bracket_oracle_tangent_form(const HermitianSpace& s, const TangentVector& x) {
    detail::check_vector(s, x, "bracket_oracle_tangent_form");
    const StructureTable& t = s.table();
    const RootSystem& rs = s.roots();
    const std::size_t v = std::size_t(s.dimension());
    const auto H = bracket(t, detail::realize(s, x, -1), detail::realize(s, x, +1));
    auto basis = [&](std::size_t i, int sign) {
        AlgebraElement e(std::size_t(t.cartan_dim()));
        e.add_e(s.psi()[i], 1);
        e.add_e(rs.negative(s.psi()[i]), sign);
        return e;
    };
    OracleTangentForm out{RationalMatrix(2 * v, 2 * v), true};
    // H(U,V) = -kappa([[X,JX],U], JV) with JX_g = i Y_g, J(JX_g) = -X_g.
    for (std::size_t g = 0; g < v; ++g) {
        const auto hx = bracket(t, H, basis(g, -1));
        const auto hy = bracket(t, H, basis(g, +1));
        for (std::size_t d = 0; d < v; ++d) {
            const auto Xd = basis(d, -1), Yd = basis(d, +1);
            out.real(g, d) = killing_form(t, hx, Yd);
            out.real(v + g, v + d) = -killing_form(t, hy, Xd);
            if (killing_form(t, hx, Xd) != 0 || killing_form(t, hy, Yd) != 0) out.imaginary_part_vanishes = false;
        }
    }
    return out;
}

/// Upper-left block of bracket_oracle_tangent_form: the oracle on X-span vectors.
inline RationalMatrix bracket_oracle_matrix(const HermitianSpace& s, const TangentVector& x) {
    detail::check_vector(s, x, "bracket_oracle_matrix");
    const StructureTable& t = s.table();
    const RootSystem& rs = s.roots();
    const std::size_t v = std::size_t(s.dimension());
    const auto H = bracket(t, detail::realize(s, x, -1), detail::realize(s, x, +1));
    RationalMatrix m(v, v);
    for (std::size_t g = 0; g < v; ++g) {
        AlgebraElement xg(std::size_t(t.cartan_dim()));
        xg.add_e(s.psi()[g], 1);
        xg.add_e(rs.negative(s.psi()[g]), -1);
        const auto hx = bracket(t, H, xg);
        for (std::size_t d = 0; d < v; ++d) {
            // kappa(hx, Y_d) = hx_{-d} k(e_d,e_-d) + hx_{d} k(e_-d,e_d)
            const auto dd = s.psi()[d];
            m(g, d) = hx.e_coeff(rs.negative(dd)) * t.killing_ee(dd) + hx.e_coeff(dd) * t.killing_ee(rs.negative(dd));
        }
    }
    return m;
}

inline int nullity(const HermitianSpace& s, const TangentVector& x) {
    return static_cast<int>(hsspos::nullity(hermitian_form(s, x).matrix));
}

inline ConeLine ell_of_line(const HermitianSpace& s, const TangentVector& x) {
    return {s.id(), x, s.dimension() - nullity(s, x)};
}

/// Rank of the p x q matrix of coefficients of e_i - e_{p+j} on gr:p,q.
inline int grassmann_rank(const HermitianSpace& s, const TangentVector& x) {
    if (s.id().kind != SpaceKind::Grassmannian)
        throw ArgumentError("grassmann_rank: " + s.id().str() + " is not a Grassmannian");
    detail::check_vector(s, x, "grassmann_rank", false);
    const int p = s.id().p, q = s.id().q;
    const std::size_t dim = s.roots().ambient_dim();
    RationalMatrix m{std::size_t(p), std::size_t(q)};
    for (int i = 0; i < p; ++i)
        for (int j = 0; j < q; ++j)
            m(std::size_t(i), std::size_t(j)) =
                x.at(s, s.roots().require_root(Root::unit(dim, std::size_t(i)) - Root::unit(dim, std::size_t(p + j))));
    return static_cast<int>(rank(m));
}

inline int grassmann_rank(int p, int q, const HermitianSpace& s, const TangentVector& x) {
    if (s.id().kind != SpaceKind::Grassmannian || s.id().p != p || s.id().q != q)
        throw ArgumentError("grassmann_rank: space " + s.id().str() + " is not gr:" + std::to_string(p) + "," +
                            std::to_string(q));
    return grassmann_rank(s, x);
}

/// Psi'_a = { g in Psi : (a,g) != 0 }, in Psi order.
inline std::vector<RootSystem::Index> psi_prime(const HermitianSpace& s, RootSystem::Index a) {
    s.require_psi(a, "psi_prime");
    std::vector<RootSystem::Index> out;
    for (auto g : s.psi())
        if (s.roots().inner2(a, g) != 0) out.push_back(g);
    return out;
}

/// Index set of the span {X_g, JX_g : g in Psi'_a}, a maximal complex
/// subspace of the positivity cone of X_a.
inline std::vector<RootSystem::Index> maximal_cone_subspace(const HermitianSpace& s, RootSystem::Index a) {
    return psi_prime(s, a);
}

struct PositivityProfile {
    int v = 0;
    int ell = 0;
    RootSystem::Index minimizer = -1;
    std::vector<int> sizes;               // |Psi'_a| per Psi position
    std::map<int, int> orbit_values;      // |Psi'_a| value -> number of a attaining it
};

/// min over a in Psi of |Psi'_a|, cross-checked against the kernel of the
/// hermitian form of X_a at the minimizer.
inline PositivityProfile positivity_profile(const HermitianSpace& s) {
    PositivityProfile prof;
    prof.v = s.dimension();
    prof.ell = prof.v + 1;
    for (auto a : s.psi()) {
        const int size = static_cast<int>(psi_prime(s, a).size());
        prof.sizes.push_back(size);
        ++prof.orbit_values[size];
        if (size < prof.ell) {
            prof.ell = size;
            prof.minimizer = a;
        }
    }
    const int line = ell_of_line(s, TangentVector::basis(s, prof.minimizer)).ell_line;
    if (line != prof.ell)
        throw ConsistencyError(s.id().str() + ": |Psi'| = " + std::to_string(prof.ell) + " but the kernel gives " +
                               std::to_string(line));
    return prof;
}

inline int complex_positivity(const HermitianSpace& s) { return positivity_profile(s).ell; }

} // namespace hsspos

#endif

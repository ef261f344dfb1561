#ifndef HSSPOS_CHEVALLEY_HPP
#define HSSPOS_CHEVALLEY_HPP

#include <cstddef>
#include <map>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "hsspos/error.hpp"
#include "hsspos/rational.hpp"
#include "hsspos/root_system.hpp"

namespace hsspos {

/*
  Chevalley basis {e_a : a root} u {h_1..h_r} of the complex simple Lie
  algebra, with

      [e_a, e_-a] = h_a          (the coroot, expanded in simple coroots)
      [h, e_a]    = a(h) e_a
      [e_a, e_b]  = N(a,b) e_{a+b}   when a+b is a root.

  Signs are fixed by declaring N(a1,b1) = +(p+1) on every extraspecial pair
  (a1 = the first positive root, in the height-then-lexicographic order, such
  that xi - a1 is a positive root).  All remaining constants follow from the
  three- and four-root relations of a Chevalley basis:

      a+b+c = 0:      N(a,b)/(c,c) = N(b,c)/(a,a) = N(c,a)/(b,b)
      a+b+c+d = 0:    N(a,b)N(c,d)/(a+b,a+b) + N(b,c)N(a,d)/(b+c,b+c)
                        + N(c,a)N(b,d)/(c+a,c+a) = 0
      N(-a,-b) = -N(a,b).
*/

class StructureTable {
public:
    using Index = RootSystem::Index;

    explicit StructureTable(std::shared_ptr<const RootSystem> rs) : rs_(std::move(rs)) {
        const RootSystem& R = *rs_;
        const std::size_t n = R.size();
        const std::size_t r = static_cast<std::size_t>(R.rank());
        sum_.assign(n * n, -1);
        n_.assign(n * n, 0);
        for (std::size_t a = 0; a < n; ++a)
            for (std::size_t b = 0; b < n; ++b)
                if (R.negative(Index(a)) != Index(b))
                    sum_[a * n + b] = R.index_of(R.root(Index(a)) + R.root(Index(b)));

        pairing_.assign(n, std::vector<int>(r));
        coroot_.assign(n, std::vector<int>(r));
        for (std::size_t a = 0; a < n; ++a) {
            const auto& k = R.simple_coefficients(Index(a));
            for (std::size_t i = 0; i < r; ++i) {
                const Index s = R.simple_indices()[i];
                pairing_[a][i] = R.cartan(Index(a), s);
                const int num = k[i] * R.inner2(s, s);
                if (num % R.inner2(Index(a), Index(a)) != 0)
                    throw ConsistencyError(R.name() + ": non-integral coroot expansion");
                coroot_[a][i] = num / R.inner2(Index(a), Index(a));
            }
        }

        compute_constants();
        compute_killing_gram();
    }

    const RootSystem& roots() const { return *rs_; }
    const std::shared_ptr<const RootSystem>& root_system_ptr() const { return rs_; }
    int cartan_dim() const { return rs_->rank(); }
    std::size_t dimension() const { return rs_->size() + std::size_t(rs_->rank()); }

    /// Index of a+b, or -1 when a+b is not a root (including a+b = 0).
    Index sum(Index a, Index b) const { return sum_[std::size_t(a) * rs_->size() + b]; }
    bool defined(Index a, Index b) const { return sum(a, b) >= 0; }

    /// N(a,b); zero when a+b is not a root.
    int n(Index a, Index b) const { return n_[std::size_t(a) * rs_->size() + b]; }
    int n(const Root& a, const Root& b) const { return n(rs_->require_root(a), rs_->require_root(b)); }

    /// Coefficients of h_a on the simple coroots h_1..h_r.
    const std::vector<int>& coroot(Index a) const { return coroot_[a]; }
    /// a(h_i) = <a, alpha_i^vee>.
    int pairing(Index a, std::size_t i) const { return pairing_[a][i]; }

    /// Gram entries of the Killing form, obtained from exact traces.
    const Rational& killing_ee(Index a) const { return kill_e_[a]; }
    const Rational& killing_hh(std::size_t i, std::size_t j) const { return kill_h_[i][j]; }

    /// Copy with a single constant overwritten (its partners untouched).
    /// Used to exercise the integrity checks.
    StructureTable with_constant(Index a, Index b, int value) const {
        StructureTable t(*this);
        t.n_[std::size_t(a) * rs_->size() + b] = value;
        return t;
    }

private:
    void set(Index a, Index b, int v) { n_[std::size_t(a) * rs_->size() + b] = v; }

    Rational norm(Index a) const { return rs_->inner(a, a); }

    int resolve(Index a, Index b) const {
        const RootSystem& R = *rs_;
        const Index s = sum(a, b);
        if (s < 0) return 0;
        const bool pa = R.is_positive(a), pb = R.is_positive(b);
        if (pa && pb) {
            const int v = n(a, b);
            if (v == 0) throw ConsistencyError(R.name() + ": structure constant requested before it was fixed");
            return v;
        }
        if (!pa && !pb) return -resolve(R.negative(a), R.negative(b));
        if (!pa) return -resolve(b, a);
        // a > 0 > b; c = -(a+b) closes the triangle a+b+c = 0.
        const Index c = R.negative(s);
        Rational v;
        if (R.is_positive(s)) {
            v = norm(c) / norm(a) * -resolve(R.negative(b), R.negative(c));
        } else {
            v = norm(c) / norm(b) * resolve(c, a);
        }
        if (!is_integer(v)) throw ConsistencyError(R.name() + ": non-integral structure constant");
        return static_cast<int>(v.get_num().get_si());
    }

    void compute_constants() {
        const RootSystem& R = *rs_;
        const Index pcount = static_cast<Index>(R.positive_count());
        for (Index xi = 0; xi < pcount; ++xi) {
            Index a1 = -1, b1 = -1;
            for (Index a = 0; a < xi && a1 < 0; ++a) {
                const Index b = R.index_of(R.root(xi) - R.root(a));
                if (b >= 0 && R.is_positive(b)) {
                    a1 = a;
                    b1 = b;
                }
            }
            if (a1 < 0) continue; // simple root
            const int top = root_string(R, a1, b1).down + 1;
            set(a1, b1, top);
            set(b1, a1, -top);
            for (Index a = 0; a < xi; ++a) {
                if (a == a1 || a == b1) continue;
                const Index b = R.index_of(R.root(xi) - R.root(a));
                if (b < 0 || !R.is_positive(b) || n(a, b) != 0) continue;
                Rational acc = 0;
                const Index na1 = R.negative(a1), nb1 = R.negative(b1);
                if (const Index bm = sum(b, na1); bm >= 0)
                    acc += Rational(resolve(b, na1) * resolve(a, nb1)) / norm(bm);
                if (const Index am = sum(a, na1); am >= 0)
                    acc += Rational(resolve(na1, a) * resolve(b, nb1)) / norm(am);
                Rational v = norm(xi) * acc / top;
                if (!is_integer(v) || v == 0)
                    throw ConsistencyError(R.name() + ": four-root relation gave " + to_string(v));
                set(a, b, static_cast<int>(v.get_num().get_si()));
                set(b, a, -static_cast<int>(v.get_num().get_si()));
            }
        }
        const Index total = static_cast<Index>(R.size());
        for (Index a = 0; a < total; ++a)
            for (Index b = 0; b < total; ++b)
                if (!R.is_positive(a) || !R.is_positive(b)) set(a, b, 0);
        for (Index a = 0; a < total; ++a)
            for (Index b = 0; b < total; ++b)
                if (defined(a, b) && !(R.is_positive(a) && R.is_positive(b))) set(a, b, resolve(a, b));
    }

    void compute_killing_gram();

    std::shared_ptr<const RootSystem> rs_;
    std::vector<Index> sum_;
    std::vector<int> n_;
    std::vector<std::vector<int>> pairing_;
    std::vector<std::vector<int>> coroot_;
    std::vector<Rational> kill_e_;
    std::vector<std::vector<Rational>> kill_h_;
};

/// Element of g_C: sparse root-vector part plus Cartan part on simple coroots.
/// The sparse part never stores a zero coefficient.
class AlgebraElement {
public:
    using Index = RootSystem::Index;

    AlgebraElement() = default;
    explicit AlgebraElement(std::size_t rank) : h_(rank, Rational(0)) {}

    static AlgebraElement root_vector(const StructureTable& t, Index a, const Rational& c = 1) {
        AlgebraElement x(std::size_t(t.cartan_dim()));
        x.add_e(a, c);
        return x;
    }
    static AlgebraElement coroot_vector(const StructureTable& t, Index a, const Rational& c = 1) {
        AlgebraElement x(std::size_t(t.cartan_dim()));
        for (std::size_t i = 0; i < x.h_.size(); ++i) x.h_[i] = c * t.coroot(a)[i];
        return x;
    }
    static AlgebraElement cartan_basis(const StructureTable& t, std::size_t i) {
        AlgebraElement x(std::size_t(t.cartan_dim()));
        x.h_.at(i) = 1;
        return x;
    }

    const std::map<Index, Rational>& e() const { return e_; }
    const std::vector<Rational>& h() const { return h_; }
    std::vector<Rational>& h() { return h_; }

    Rational e_coeff(Index a) const {
        auto it = e_.find(a);
        return it == e_.end() ? Rational(0) : it->second;
    }

    void add_e(Index a, const Rational& c) {
        if (c == 0) return;
        auto [it, inserted] = e_.try_emplace(a, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) e_.erase(it);
        }
    }

    bool is_zero() const {
        if (!e_.empty()) return false;
        for (const auto& c : h_)
            if (c != 0) return false;
        return true;
    }

    AlgebraElement& axpy(const Rational& s, const AlgebraElement& o) {
        if (h_.size() < o.h_.size()) h_.resize(o.h_.size(), Rational(0));
        for (const auto& [a, c] : o.e_) add_e(a, s * c);
        for (std::size_t i = 0; i < o.h_.size(); ++i) h_[i] += s * o.h_[i];
        return *this;
    }
    AlgebraElement& operator+=(const AlgebraElement& o) { return axpy(1, o); }
    AlgebraElement& operator-=(const AlgebraElement& o) { return axpy(-1, o); }
    friend AlgebraElement operator+(AlgebraElement a, const AlgebraElement& b) { return a += b; }
    friend AlgebraElement operator-(AlgebraElement a, const AlgebraElement& b) { return a -= b; }
    friend AlgebraElement operator*(const Rational& s, const AlgebraElement& a) {
        AlgebraElement out(a.h_.size());
        return out.axpy(s, a);
    }

    friend bool operator==(const AlgebraElement& a, const AlgebraElement& b) {
        return (a - b).is_zero();
    }

private:
    std::map<Index, Rational> e_;
    std::vector<Rational> h_;
};

inline StructureTable structure_constants(std::shared_ptr<const RootSystem> rs) {
    return StructureTable(std::move(rs));
}

/// Lie bracket [x, y] in the Chevalley basis.
inline AlgebraElement bracket(const StructureTable& t, const AlgebraElement& x, const AlgebraElement& y) {
    const RootSystem& R = t.roots();
    const std::size_t r = std::size_t(t.cartan_dim());
    AlgebraElement out(r);
    auto weight = [&](const std::vector<Rational>& h, AlgebraElement::Index a) {
        Rational w = 0;
        for (std::size_t i = 0; i < h.size(); ++i)
            if (h[i] != 0) w += h[i] * t.pairing(a, i);
        return w;
    };
    for (const auto& [a, ca] : x.e()) {
        for (const auto& [b, cb] : y.e()) {
            if (b == R.negative(a)) {
                for (std::size_t i = 0; i < r; ++i) out.h()[i] += ca * cb * t.coroot(a)[i];
            } else if (const auto s = t.sum(a, b); s >= 0) {
                out.add_e(s, ca * cb * t.n(a, b));
            }
        }
        if (!y.h().empty()) out.add_e(a, -ca * weight(y.h(), a));
    }
    if (!x.h().empty())
        for (const auto& [b, cb] : y.e()) out.add_e(b, cb * weight(x.h(), b));
    return out;
}

/// Killing form as the exact trace of ad(x) ad(y) over the full Chevalley basis.
inline Rational killing_trace(const StructureTable& t, const AlgebraElement& x, const AlgebraElement& y) {
    const RootSystem& R = t.roots();
    Rational tr = 0;
    for (RootSystem::Index k = 0; k < static_cast<RootSystem::Index>(R.size()); ++k) {
        const auto z = bracket(t, x, bracket(t, y, AlgebraElement::root_vector(t, k)));
        tr += z.e_coeff(k);
    }
    for (std::size_t i = 0; i < std::size_t(t.cartan_dim()); ++i) {
        const auto z = bracket(t, x, bracket(t, y, AlgebraElement::cartan_basis(t, i)));
        tr += z.h()[i];
    }
    return tr;
}

inline void StructureTable::compute_killing_gram() {
    const std::size_t n = rs_->size();
    const std::size_t r = std::size_t(rs_->rank());
    kill_e_.assign(n, Rational(0));
    kill_h_.assign(r, std::vector<Rational>(r, Rational(0)));
    for (std::size_t a = 0; a < n; ++a)
        kill_e_[a] = killing_trace(*this, AlgebraElement::root_vector(*this, Index(a)),
                                   AlgebraElement::root_vector(*this, rs_->negative(Index(a))));
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = i; j < r; ++j)
            kill_h_[i][j] = kill_h_[j][i] = killing_trace(*this, AlgebraElement::cartan_basis(*this, i),
                                                          AlgebraElement::cartan_basis(*this, j));
}

/// Killing form through the traced Gram entries.  Root vectors pair only with
/// their negatives because ad(e_a)ad(e_b) shifts weights by a+b.
inline Rational killing_form(const StructureTable& t, const AlgebraElement& x, const AlgebraElement& y) {
    const RootSystem& R = t.roots();
    Rational k = 0;
    for (const auto& [a, ca] : x.e()) {
        const Rational cb = y.e_coeff(R.negative(a));
        if (cb != 0) k += ca * cb * t.killing_ee(a);
    }
    for (std::size_t i = 0; i < x.h().size(); ++i) {
        if (x.h()[i] == 0) continue;
        for (std::size_t j = 0; j < y.h().size(); ++j)
            if (y.h()[j] != 0) k += x.h()[i] * y.h()[j] * t.killing_hh(i, j);
    }
    return k;
}

} // namespace hsspos

#endif

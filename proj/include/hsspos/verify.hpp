#ifndef HSSPOS_VERIFY_HPP
#define HSSPOS_VERIFY_HPP

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "hsspos/barth_lefschetz.hpp"
#include "hsspos/chevalley.hpp"
#include "hsspos/curvature.hpp"
#include "hsspos/exact_linalg.hpp"
#include "hsspos/hss_catalog.hpp"
#include "hsspos/root_system.hpp"
#include "hsspos/sampling.hpp"

namespace hsspos {

struct Check {
    std::string name;
    bool pass = false;
    std::string detail;
};

struct VerifyOptions {
    std::uint64_t seed = 42;
    int samples = 500;           // random vectors per space for the semidefiniteness sweep
    int oracle_samples = 12;     // random vectors per space compared against the bracket oracle
    int tangent_samples = 3;     // of those, how many also get the full 2v x 2v oracle
    int jacobi_triples = 1000;   // sampled basis triples when the rank exceeds 4
    int grassmann_samples = 50;  // random vectors per rank class on gr:p,q
    bool corrupt_table = false;  // flip one structure constant before checking
    std::vector<SpaceId> spaces; // empty: verification_catalog()
};

struct SpaceSummary {
    std::string id;
    std::string algebra;
    int node = 0;
    int v = 0;
    int ell = -1;
    std::map<int, int> orbit_values;
    std::optional<Rational> oracle_ratio;
};

struct VerifyReport {
    std::vector<Check> checks;
    std::vector<SpaceSummary> spaces;

    bool ok() const {
        return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.pass; });
    }
    std::vector<std::string> failures() const {
        std::vector<std::string> out;
        for (const auto& c : checks)
            if (!c.pass) out.push_back(c.name);
        return out;
    }
};

/// Overwrites the first positive-pair constant with its negative, leaving the
/// partner N(b,a) alone.  Test fixture for the integrity checks.
inline StructureTable corrupt_structure_table(const StructureTable& t) {
    const RootSystem& rs = t.roots();
    const auto pc = static_cast<RootSystem::Index>(rs.positive_count());
    for (RootSystem::Index a = 0; a < pc; ++a)
        for (RootSystem::Index b = a + 1; b < pc; ++b)
            if (t.defined(a, b)) return t.with_constant(a, b, -t.n(a, b));
    throw ArgumentError("corrupt_structure_table: " + rs.name() + " has no positive root pair");
}

namespace detail {

using Idx = RootSystem::Index;

class CheckSink {
public:
    explicit CheckSink(std::vector<Check>& out) : out_(out) {}

    // Runs `body`; it returns an empty string on success or a failure message.
    // Exceptions count as failures.
    void run(const std::string& name, const std::function<std::string(std::string&)>& body) {
        std::string detail;
        std::string failure;
        try {
            failure = body(detail);
        } catch (const std::exception& e) {
            failure = std::string("exception: ") + e.what();
        }
        if (failure.empty()) out_.push_back({name, true, detail});
        else out_.push_back({name, false, failure});
    }

private:
    std::vector<Check>& out_;
};

inline std::string count_str(std::size_t n, const char* what) { return std::to_string(n) + " " + what; }

inline void root_system_checks(const RootSystem& rs, CheckSink& sink) {
    const std::string scope = rs.name() + "/";
    const auto n = static_cast<Idx>(rs.size());
    const auto pc = static_cast<Idx>(rs.positive_count());

    sink.run(scope + "root_count", [&](std::string& d) -> std::string {
        const auto want = expected_root_count(rs.family(), rs.rank());
        d = count_str(rs.size(), "roots");
        return rs.size() == want ? "" : d + ", expected " + std::to_string(want);
    });

    sink.run(scope + "positive_decomposition", [&](std::string& d) -> std::string {
        for (Idx i = 0; i < n; ++i) {
            const Idx neg = rs.negative(i);
            if (rs.root(neg) != -rs.root(i) || rs.is_positive(i) == rs.is_positive(neg))
                return "negation pairing broken at " + rs.root(i).name();
            const auto& k = rs.simple_coefficients(i);
            const bool nonneg = std::all_of(k.begin(), k.end(), [](int c) { return c >= 0; });
            const bool nonpos = std::all_of(k.begin(), k.end(), [](int c) { return c <= 0; });
            if (rs.is_positive(i) ? !nonneg : !nonpos) return "mixed-sign expansion of " + rs.root(i).name();
            Root sum(std::vector<int>(rs.ambient_dim(), 0));
            for (std::size_t j = 0; j < k.size(); ++j) sum = sum + k[j] * rs.simple_root(j);
            if (sum != rs.root(i)) return "simple expansion of " + rs.root(i).name() + " does not sum back";
        }
        d = count_str(std::size_t(pc), "positive roots");
        return "";
    });

    sink.run(scope + "normalization", [&](std::string& d) -> std::string {
        int longest = 0;
        for (Idx i = 0; i < n; ++i) {
            const int l = rs.inner2(i, i);
            if (l != 2 && l != 4) return "squared length of " + rs.root(i).name() + " is " + to_string(rs.inner(i, i));
            longest = std::max(longest, l);
        }
        d = "(a,a) in {1,2}, long roots 2";
        return longest == 4 ? "" : "no root of squared length 2";
    });

    sink.run(scope + "weyl_closure", [&](std::string& d) -> std::string {
        for (Idx a = 0; a < n; ++a)
            for (Idx b = 0; b < n; ++b)
                if (!rs.is_root(rs.reflect(a, b)))
                    return "s_" + rs.root(a).name() + "(" + rs.root(b).name() + ") is not a root";
        d = count_str(rs.size() * rs.size(), "reflections");
        return "";
    });

    sink.run(scope + "cartan_bound", [&](std::string& d) -> std::string {
        std::size_t pairs = 0;
        for (Idx a = 0; a < n; ++a)
            for (Idx b = 0; b < n; ++b) {
                if (!rs.is_root(rs.root(a) + rs.root(b))) continue;
                ++pairs;
                if (std::abs(rs.cartan(b, a)) > 3) return "Cartan integer out of range for " + rs.root(a).name();
            }
        d = count_str(pairs, "root sums");
        return "";
    });

    sink.run(scope + "root_strings", [&](std::string& d) -> std::string {
        std::size_t pairs = 0;
        for (Idx a = 0; a < n; ++a)
            for (Idx b = 0; b < n; ++b) {
                if (a == b || a == rs.negative(b)) continue;
                const auto st = root_string(rs, a, b);
                ++pairs;
                if (st.down - st.up != rs.cartan(b, a))
                    return "p - q != 2(a,b)/(a,a) for a=" + rs.root(a).name() + ", b=" + rs.root(b).name();
            }
        d = count_str(pairs, "strings");
        return "";
    });
}

inline AlgebraElement basis_element(const StructureTable& t, std::size_t k) {
    const std::size_t n = t.roots().size();
    return k < n ? AlgebraElement::root_vector(t, Idx(k)) : AlgebraElement::cartan_basis(t, k - n);
}

inline AlgebraElement random_element(const StructureTable& t, Sampler& rng) {
    AlgebraElement x(std::size_t(t.cartan_dim()));
    for (int k = 0; k < 3; ++k) x.add_e(Idx(rng.below(t.roots().size())), rng.nonzero_rational());
    for (auto& h : x.h()) h = rng.small_rational();
    return x;
}

inline void chevalley_checks(const StructureTable& t, const VerifyOptions& opt, CheckSink& sink) {
    const RootSystem& rs = t.roots();
    const std::string scope = rs.name() + "/";
    const auto n = static_cast<Idx>(rs.size());

    sink.run(scope + "antisymmetry", [&](std::string& d) -> std::string {
        std::size_t pairs = 0;
        for (Idx a = 0; a < n; ++a)
            for (Idx b = 0; b < n; ++b) {
                if (t.defined(a, b) != (t.n(a, b) != 0))
                    return "N(" + rs.root(a).name() + "," + rs.root(b).name() + ") defined-ness mismatch";
                if (!t.defined(a, b)) continue;
                ++pairs;
                if (t.n(a, b) != -t.n(b, a))
                    return "N(a,b) != -N(b,a) for a=" + rs.root(a).name() + ", b=" + rs.root(b).name();
            }
        d = count_str(pairs, "pairs");
        return "";
    });

    sink.run(scope + "negation_symmetry", [&](std::string& d) -> std::string {
        std::size_t pairs = 0;
        for (Idx a = 0; a < n; ++a)
            for (Idx b = 0; b < n; ++b) {
                if (!t.defined(a, b)) continue;
                ++pairs;
                if (t.n(a, b) != -t.n(rs.negative(a), rs.negative(b)))
                    return "N(a,b) != -N(-a,-b) for a=" + rs.root(a).name() + ", b=" + rs.root(b).name();
            }
        d = count_str(pairs, "pairs");
        return "";
    });

    sink.run(scope + "string_magnitude", [&](std::string& d) -> std::string {
        std::size_t pairs = 0;
        for (Idx a = 0; a < n; ++a)
            for (Idx b = 0; b < n; ++b) {
                if (!t.defined(a, b)) continue;
                ++pairs;
                if (std::abs(t.n(a, b)) != root_string(rs, a, b).down + 1)
                    return "|N| != p+1 for a=" + rs.root(a).name() + ", b=" + rs.root(b).name();
            }
        d = count_str(pairs, "pairs");
        return "";
    });

    sink.run(scope + "jacobi", [&](std::string& d) -> std::string {
        const std::size_t dim = t.dimension();
        auto jacobi = [&](const AlgebraElement& x, const AlgebraElement& y, const AlgebraElement& z) {
            return (bracket(t, bracket(t, x, y), z) + bracket(t, bracket(t, y, z), x) +
                    bracket(t, bracket(t, z, x), y))
                .is_zero();
        };
        if (rs.rank() <= 4) {
            std::vector<AlgebraElement> basis;
            for (std::size_t k = 0; k < dim; ++k) basis.push_back(basis_element(t, k));
            for (std::size_t i = 0; i < dim; ++i)
                for (std::size_t j = i + 1; j < dim; ++j)
                    for (std::size_t k = j + 1; k < dim; ++k)
                        if (!jacobi(basis[i], basis[j], basis[k]))
                            return "fails on basis triple (" + std::to_string(i) + "," + std::to_string(j) + "," +
                                   std::to_string(k) + ")";
            d = "exhaustive over " + count_str(dim * (dim - 1) * (dim - 2) / 6, "basis triples");
            return "";
        }
        Sampler rng(opt.seed, scope + "jacobi");
        for (int s = 0; s < opt.jacobi_triples; ++s) {
            const auto i = rng.below(dim), j = rng.below(dim), k = rng.below(dim);
            if (!jacobi(basis_element(t, i), basis_element(t, j), basis_element(t, k)))
                return "fails on basis triple (" + std::to_string(i) + "," + std::to_string(j) + "," +
                       std::to_string(k) + ")";
        }
        d = count_str(std::size_t(opt.jacobi_triples), "sampled basis triples");
        return "";
    });

    sink.run(scope + "killing_invariance", [&](std::string& d) -> std::string {
        Sampler rng(opt.seed, scope + "killing");
        const int trials = 50;
        for (int s = 0; s < trials; ++s) {
            const auto x = random_element(t, rng), y = random_element(t, rng), z = random_element(t, rng);
            if (killing_form(t, bracket(t, x, y), z) != killing_form(t, x, bracket(t, y, z)))
                return "kappa([x,y],z) != kappa(x,[y,z]) on trial " + std::to_string(s);
        }
        for (int s = 0; s < 4; ++s) {
            const auto x = random_element(t, rng), y = random_element(t, rng);
            if (killing_form(t, x, y) != killing_trace(t, x, y)) return "Gram evaluation disagrees with the trace";
        }
        d = count_str(std::size_t(trials), "random triples");
        return "";
    });

    sink.run(scope + "killing_root_grading", [&](std::string& d) -> std::string {
        Sampler rng(opt.seed, scope + "grading");
        const int trials = rs.rank() <= 4 ? int(n) * int(n) : 40;
        for (int s = 0; s < trials; ++s) {
            const Idx a = rs.rank() <= 4 ? Idx(s / int(n)) : Idx(rng.below(std::size_t(n)));
            const Idx b = rs.rank() <= 4 ? Idx(s % int(n)) : Idx(rng.below(std::size_t(n)));
            const auto k =
                killing_trace(t, AlgebraElement::root_vector(t, a), AlgebraElement::root_vector(t, b));
            if ((k != 0) != (b == rs.negative(a)))
                return "kappa(e_a,e_b) = " + to_string(k) + " for a=" + rs.root(a).name() + ", b=" +
                       rs.root(b).name();
        }
        d = count_str(std::size_t(trials), "traced pairs");
        return "";
    });

    sink.run(scope + "killing_cartan_proportional", [&](std::string& d) -> std::string {
        // t_a = ((a,a)/2) h_a is Killing-dual to a; kappa(t_a, t_b) = c (a,b).
        auto dual = [&](Idx a) { return AlgebraElement::coroot_vector(t, a, frac(rs.inner2(a, a), 4)); };
        std::optional<Rational> c;
        for (Idx a = 0; a < n; ++a) {
            const auto ta = dual(a);
            if (killing_form(t, AlgebraElement::coroot_vector(t, a), AlgebraElement::coroot_vector(t, a)) <= 0)
                return "kappa(h_a,h_a) <= 0 for a=" + rs.root(a).name();
            for (Idx b = 0; b < n; ++b) {
                const Rational k = killing_form(t, ta, dual(b));
                const Rational ip = rs.inner(a, b);
                if (ip == 0) {
                    if (k != 0) return "nonzero kappa on orthogonal pair " + rs.root(a).name() + ", " + rs.root(b).name();
                    continue;
                }
                const Rational r = k / ip;
                if (!c) c = r;
                else if (r != *c)
                    return "ratio " + to_string(r) + " != " + to_string(*c) + " at " + rs.root(a).name() + ", " +
                           rs.root(b).name();
            }
        }
        if (!c || *c <= 0) return "constant is not positive";
        d = "c = " + to_string(*c);
        return "";
    });
}

inline std::vector<Idx> subset(const std::vector<Idx>& all, unsigned mask) {
    std::vector<Idx> out;
    for (std::size_t i = 0; i < all.size(); ++i)
        if (mask & (1u << i)) out.push_back(all[i]);
    return out;
}

inline void space_checks(const HermitianSpace& s, const VerifyOptions& opt, CheckSink& sink, SpaceSummary& sum) {
    const RootSystem& rs = s.roots();
    const StructureTable& t = s.table();
    const std::string id = s.id().str();
    const std::string scope = id + "/";
    const int v = s.dimension();

    sink.run(scope + "psi_closure", [&](std::string& d) -> std::string {
        const auto rep = check_psi_closure(s);
        d = count_str(rep.pairs_checked, "pairs") + ", 0 violations, " +
            count_str(rep.orthogonal_pairs, "orthogonal");
        return "";
    });

    sink.run(scope + "cominuscule_coefficient", [&](std::string& d) -> std::string {
        std::size_t with_one = 0;
        for (Idx a = 0; a < Idx(rs.positive_count()); ++a)
            if (rs.simple_coefficients(a)[std::size_t(s.cominuscule_node() - 1)] == 1) ++with_one;
        for (auto a : s.psi())
            if (!rs.is_positive(a) || rs.simple_coefficients(a)[std::size_t(s.cominuscule_node() - 1)] != 1)
                return rs.root(a).name() + " does not have coefficient 1";
        if (with_one != s.psi().size()) return "Psi misses positive roots with coefficient 1";
        d = "node " + std::to_string(s.cominuscule_node());
        return "";
    });

    sink.run(scope + "dimension", [&](std::string& d) -> std::string {
        d = "v = " + std::to_string(v);
        return v == closed_form_dimension(s.id()) ? ""
                                                  : d + ", closed form " + std::to_string(closed_form_dimension(s.id()));
    });

    const auto cascade = strongly_orthogonal_cascade(s);
    sink.run(scope + "cascade", [&](std::string& d) -> std::string {
        const int want = closed_form_symmetric_rank(s.id());
        if (int(cascade.size()) != want)
            return "cascade has " + std::to_string(cascade.size()) + " roots, rank is " + std::to_string(want);
        for (std::size_t i = 0; i < cascade.size(); ++i)
            for (std::size_t j = 0; j < cascade.size(); ++j) {
                if (i == j) continue;
                if (!strongly_orthogonal(rs, cascade[i], cascade[j]))
                    return rs.root(cascade[i]).name() + ", " + rs.root(cascade[j]).name() + " not strongly orthogonal";
                if (t.n(cascade[i], rs.negative(cascade[j])) != 0)
                    return "N(a_i,-a_j) != 0 for " + rs.root(cascade[i]).name() + ", " + rs.root(cascade[j]).name();
            }
        for (auto g : s.psi())
            if (std::all_of(cascade.begin(), cascade.end(), [&](Idx c) { return strongly_orthogonal(rs, c, g); }))
                return "cascade is not maximal: " + rs.root(g).name() + " could be added";
        d = count_str(cascade.size(), "roots");
        return "";
    });

    sink.run(scope + "psd_sweep", [&](std::string& d) -> std::string {
        Sampler rng(opt.seed, scope + "psd");
        std::size_t kernel_total = 0;
        for (int k = 0; k < opt.samples; ++k) {
            const auto x = random_vector(s, rng, std::size_t(k));
            const auto m = hermitian_form(s, x).matrix;
            if (!m.is_symmetric()) return "form not symmetric on sample " + std::to_string(k);
            for (std::size_t i = 0; i < m.rows(); ++i)
                if (m(i, i) < 0) return "negative diagonal on sample " + std::to_string(k);
            const auto cert = certify_psd(m);
            if (!cert.positive_semidefinite)
                return "sample " + std::to_string(k) + " has a negative direction: " + cert.failure;
            kernel_total += m.rows() - cert.rank;
        }
        d = count_str(std::size_t(opt.samples), "vectors, 0 indefinite") + ", total kernel dimension " +
            std::to_string(kernel_total);
        return "";
    });

    sink.run(scope + "oracle_agreement", [&](std::string& d) -> std::string {
        Sampler rng(opt.seed, scope + "oracle");
        std::optional<Rational> ratio;
        for (int k = 0; k < opt.oracle_samples; ++k) {
            const auto x = random_vector(s, rng, std::size_t(k));
            const auto m = hermitian_form(s, x).matrix;
            const auto o = bracket_oracle_matrix(s, x);
            if (nullity(o) != nullity(m)) return "kernel dimensions differ on sample " + std::to_string(k);
            for (std::size_t i = 0; i < m.rows(); ++i)
                for (std::size_t j = 0; j < m.cols(); ++j) {
                    if (m(i, j) == 0) {
                        if (o(i, j) != 0) return "oracle nonzero where the form vanishes, sample " + std::to_string(k);
                        continue;
                    }
                    const Rational r = o(i, j) / m(i, j);
                    if (!ratio) ratio = r;
                    else if (r != *ratio)
                        return "ratio " + to_string(r) + " differs from " + to_string(*ratio) + " on sample " +
                               std::to_string(k);
                }
            const auto w = random_dense_vector(s, rng);
            const Rational direct = bracket_curvature_oracle(s, x, w);
            if (direct != evaluate(HermitianForm{s.id(), o}, w))
                return "oracle value disagrees with its matrix on sample " + std::to_string(k);
            if (ratio && direct != *ratio * evaluate(hermitian_form(s, x), w))
                return "oracle value is not a constant multiple on sample " + std::to_string(k);
        }
        if (!ratio || *ratio <= 0) return "no positive ratio found";
        sum.oracle_ratio = *ratio;
        d = "ratio " + to_string(*ratio) + " on " + count_str(std::size_t(opt.oracle_samples), "vectors");
        return "";
    });

    sink.run(scope + "oracle_real_tangent", [&](std::string& d) -> std::string {
        Sampler rng(opt.seed, scope + "tangent");
        for (int k = 0; k < opt.tangent_samples; ++k) {
            const auto x = random_vector(s, rng, std::size_t(k + 1));
            const auto full = bracket_oracle_tangent_form(s, x);
            if (!full.imaginary_part_vanishes) return "imaginary part on sample " + std::to_string(k);
            if (hsspos::nullity(full.real) != 2 * std::size_t(nullity(s, x)))
                return "real kernel is not twice the complex nullity on sample " + std::to_string(k);
            if (!certify_psd(full.real).positive_semidefinite) return "real form indefinite on sample " + std::to_string(k);
        }
        d = count_str(std::size_t(opt.tangent_samples), "vectors on the 2v-dimensional tangent space");
        return "";
    });

    sink.run(scope + "cascade_monotonicity", [&](std::string& d) -> std::string {
        Sampler rng(opt.seed, scope + "monotone");
        std::map<Idx, int> single;
        for (auto a : cascade) single[a] = ell_of_line(s, TangentVector::basis(s, a)).ell_line;
        const unsigned subsets = 1u << cascade.size();
        for (unsigned mask = 1; mask < subsets; ++mask) {
            TangentVector x = TangentVector::zero(s);
            int floor = 0;
            for (auto a : subset(cascade, mask)) {
                x.coeffs[std::size_t(s.psi_position(a))] = rng.nonzero_rational();
                floor = std::max(floor, single[a]);
            }
            if (ell_of_line(s, x).ell_line < floor) return "subset mask " + std::to_string(mask) + " drops below its terms";
        }
        d = count_str(subsets - 1, "cascade subsets");
        return "";
    });

    PositivityProfile prof;
    sink.run(scope + "basis_consistency", [&](std::string& d) -> std::string {
        for (auto a : s.psi()) {
            const int line = ell_of_line(s, TangentVector::basis(s, a)).ell_line;
            if (line != int(psi_prime(s, a).size()))
                return "ell(X_a) = " + std::to_string(line) + " but |Psi'_a| = " +
                       std::to_string(psi_prime(s, a).size()) + " for a=" + rs.root(a).name();
        }
        d = count_str(s.psi().size(), "basis vectors");
        return "";
    });

    sink.run(scope + "maximal_cone_subspace", [&](std::string& d) -> std::string {
        for (auto a : s.psi()) {
            const auto cone = maximal_cone_subspace(s, a);
            const auto form = hermitian_form(s, TangentVector::basis(s, a));
            std::set<Idx> inside(cone.begin(), cone.end());
            for (auto g : s.psi()) {
                const Rational val = evaluate(form, TangentVector::basis(s, g));
                if (inside.count(g) ? val <= 0 : val != 0)
                    return "H_{X_a}(X_g,X_g) = " + to_string(val) + " for a=" + rs.root(a).name() +
                           ", g=" + rs.root(g).name();
            }
            RationalMatrix block(cone.size(), cone.size());
            for (std::size_t i = 0; i < cone.size(); ++i)
                for (std::size_t j = 0; j < cone.size(); ++j)
                    block(i, j) = form.matrix(std::size_t(s.psi_position(cone[i])), std::size_t(s.psi_position(cone[j])));
            if (rank(block) != cone.size()) return "form degenerate on the cone subspace of " + rs.root(a).name();
        }
        d = count_str(s.psi().size(), "roots");
        return "";
    });

    sink.run(scope + "positivity", [&](std::string& d) -> std::string {
        prof = positivity_profile(s);
        sum.ell = prof.ell;
        sum.orbit_values = prof.orbit_values;
        d = "ell = " + std::to_string(prof.ell);
        const int want = tabulated_positivity(s.id());
        return prof.ell == want ? "" : d + ", table says " + std::to_string(want);
    });

    sink.run(scope + "orbit_pattern", [&](std::string& d) -> std::string {
        const bool two = s.id().kind == SpaceKind::Lagrangian ||
                         (s.id().kind == SpaceKind::Quadric && s.id().p % 2 == 1);
        const std::size_t want = two ? 2 : 1;
        d = "";
        for (const auto& [size, count] : prof.orbit_values)
            d += (d.empty() ? "" : ", ") + std::to_string(size) + " x" + std::to_string(count);
        if (prof.orbit_values.size() != want)
            return "expected " + std::to_string(want) + " distinct |Psi'| values, got " + d;
        if (prof.orbit_values.begin()->first != prof.ell) return "minimum differs from ell";
        return "";
    });

    if (s.id().kind == SpaceKind::Grassmannian) {
        sink.run(scope + "grassmann_null_space", [&](std::string& d) -> std::string {
            const int p = s.id().p, q = s.id().q;
            Sampler rng(opt.seed, scope + "grassmann");
            for (int r = 1; r <= std::min(p, q); ++r)
                for (int k = 0; k < opt.grassmann_samples; ++k) {
                    const auto x = random_grassmann_vector(s, r, rng);
                    if (grassmann_rank(p, q, s, x) != r) return "rank certification failed";
                    if (nullity(s, x) != (p - r) * (q - r))
                        return "rank " + std::to_string(r) + " vector has nullity " + std::to_string(nullity(s, x));
                }
            d = count_str(std::size_t(opt.grassmann_samples), "vectors per rank class");
            return "";
        });
        sink.run(scope + "rank_refinement", [&](std::string& d) -> std::string {
            const int p = s.id().p, q = s.id().q;
            int prev = 0;
            for (int r = 1; r <= std::min(p, q); ++r) {
                const auto ref = grassmann_rank_refinement(p, q, r);
                if (ref.ell0 <= prev) return "not strictly increasing at r = " + std::to_string(r);
                if (r == 1 && ref.ell0 != prof.ell) return "r = 1 does not reproduce ell";
                if (ref.increase < ref.stated_increase) return "increase below r-1 at r = " + std::to_string(r);
                prev = ref.ell0;
            }
            if (p == q && prev != p * q) return "r = p = q does not reach pq";
            d = "r = 1.." + std::to_string(std::min(p, q));
            return "";
        });
    }

    sink.run(scope + "connectivity_grid", [&](std::string& d) -> std::string {
        for (int m = 0; m <= v; ++m)
            for (int n = 0; n <= v; ++n) {
                if (!closed_form_check(s.id(), v, prof.ell, m, n))
                    return "closed form differs at m=" + std::to_string(m) + ", n=" + std::to_string(n);
                const auto r = connectivity(s.id(), v, prof.ell, m, n);
                if (!(r == connectivity(s.id(), v, prof.ell, m, n, prof.ell))) return "override by ell changes the report";
                if (r.pair_vanish_max != std::min(r.pi_vanish_max, r.lambda0) || r.vacuous != (r.lambda0 < 0) ||
                    r.surj_at != r.iso_max + 1)
                    return "report invariants broken at m=" + std::to_string(m) + ", n=" + std::to_string(n);
                if (index_bound(m, n, v, prof.ell, CurvatureMode::Nonnegative) + (v - prof.ell) !=
                    index_bound(m, n, v, prof.ell, CurvatureMode::Positive))
                    return "index bounds inconsistent";
            }
        d = count_str(std::size_t((v + 1) * (v + 1)), "(m,n) pairs");
        return "";
    });
}

} // namespace detail

inline VerifyReport run_verification(const VerifyOptions& opt) {
    VerifyReport rep;
    detail::CheckSink sink(rep.checks);
    const auto ids = opt.spaces.empty() ? verification_catalog() : opt.spaces;
    std::set<std::string> algebras_done;
    for (const auto& id : ids) {
        SpaceSummary sum;
        sum.id = id.str();
        std::optional<HermitianSpace> space;
        sink.run(sum.id + "/resolve", [&](std::string& d) -> std::string {
            space = resolve(id);
            if (opt.corrupt_table) space = space->with_table(corrupt_structure_table(space->table()));
            d = space->roots().name() + " node " + std::to_string(space->cominuscule_node());
            return "";
        });
        if (!space) {
            rep.spaces.push_back(sum);
            continue;
        }
        sum.algebra = space->roots().name();
        sum.node = space->cominuscule_node();
        sum.v = space->dimension();
        if (algebras_done.insert(sum.algebra).second) {
            detail::root_system_checks(space->roots(), sink);
            detail::chevalley_checks(space->table(), opt, sink);
        }
        detail::space_checks(*space, opt, sink, sum);
        rep.spaces.push_back(sum);
    }
    return rep;
}

} // namespace hsspos

#endif

#ifndef HSSPOS_BARTH_LEFSCHETZ_HPP
#define HSSPOS_BARTH_LEFSCHETZ_HPP

#include <algorithm>
#include <optional>
#include <string>

#include "hsspos/curvature.hpp"
#include "hsspos/error.hpp"
#include "hsspos/hss_catalog.hpp"

namespace hsspos {

// Index and connectivity ranges for complex submanifolds M, N (complex
// dimensions m, n) of a space of complex dimension v and complex positivity
// ell.  Ranges are reported as computed, negative values included.

enum class CurvatureMode { Positive, Nonnegative };

namespace detail {
inline void check_dims(int m, int n, int v, int ell) {
    if (v < 1) throw ArgumentError("v must be positive");
    if (m < 0 || m > v) throw ArgumentError("m = " + std::to_string(m) + " outside [0, " + std::to_string(v) + "]");
    if (n < 0 || n > v) throw ArgumentError("n = " + std::to_string(n) + " outside [0, " + std::to_string(v) + "]");
    if (ell < 0 || ell > v) throw ArgumentError("ell = " + std::to_string(ell) + " outside [0, " + std::to_string(v) + "]");
}
} // namespace detail

/// Lower bound on the index of a nontrivial critical path.
inline int index_bound(int m, int n, int v, int ell, CurvatureMode mode) {
    detail::check_dims(m, n, v, ell);
    const int base = m + n - (v - 1);
    return mode == CurvatureMode::Positive ? base : base - (v - ell);
}

struct ConnectivityReport {
    std::string space_id;
    int v = 0;
    int ell = 0;           // the value actually used (override when given)
    int ell_space = 0;     // complex positivity of the space
    int m = 0;
    int n = 0;
    int lambda0 = 0;          // n + m - v - (v - ell)
    int iso_max = 0;          // pi_j(N, N cap M) -> pi_j(V, M) iso for j <= iso_max
    int surj_at = 0;          // ... and onto for j = surj_at
    int pi_vanish_max = 0;    // pi_j(V, M) = 0 for j <= this
    int pair_vanish_max = 0;  // pi_j(N, N cap M) = 0 for j <= this
    bool vacuous = false;     // lambda0 < 0

    friend bool operator==(const ConnectivityReport&, const ConnectivityReport&) = default;
};

inline ConnectivityReport connectivity(const SpaceId& id, int v, int ell, int m, int n,
                                       std::optional<int> ell_override = std::nullopt) {
    detail::check_dims(m, n, v, ell);
    ConnectivityReport r;
    r.space_id = id.str();
    r.v = v;
    r.ell_space = ell;
    r.ell = ell;
    if (ell_override) {
        if (*ell_override < ell || *ell_override > v)
            throw ArgumentError("ell0 = " + std::to_string(*ell_override) + " must lie in [" + std::to_string(ell) +
                                ", " + std::to_string(v) + "]");
        r.ell = *ell_override;
    }
    r.m = m;
    r.n = n;
    const int defect = v - r.ell;
    r.lambda0 = n + m - v - defect;
    r.iso_max = r.lambda0;
    r.surj_at = r.lambda0 + 1;
    r.pi_vanish_max = 2 * m - v - defect + 1;
    r.pair_vanish_max = std::min(r.pi_vanish_max, r.lambda0);
    r.vacuous = r.lambda0 < 0;
    return r;
}

inline ConnectivityReport connectivity(const HermitianSpace& s, int m, int n,
                                       std::optional<int> ell_override = std::nullopt) {
    return connectivity(s.id(), s.dimension(), complex_positivity(s), m, n, ell_override);
}

/// Per-family closed form of the isomorphism range, as published.
inline int closed_form_iso_max(const SpaceId& id, int m, int n) {
    const int p = id.p, q = id.q;
    switch (id.kind) {
    case SpaceKind::Grassmannian: return n + m - 2 * p * q + p + q - 1;
    case SpaceKind::Quadric: return n + m - p - 1;
    case SpaceKind::Lagrangian: return n + m - p * p;
    case SpaceKind::Spinor: return n + m - p * p + 3 * p - 3;
    case SpaceKind::E6: return n + m - 21;
    case SpaceKind::E7: return n + m - 37;
    }
    return 0;
}

/// Surjectivity degree of the published closed form.
inline int closed_form_surj_at(const SpaceId& id, int m, int n) {
    const int p = id.p, q = id.q;
    switch (id.kind) {
    case SpaceKind::Grassmannian: return n + m - 2 * p * q + p + q;
    case SpaceKind::Quadric: return n + m - p;
    case SpaceKind::Lagrangian: return n + m - p * p + 1;
    case SpaceKind::Spinor: return n + m - p * p + 3 * p - 2;
    case SpaceKind::E6: return n + m - 20;
    case SpaceKind::E7: return n + m - 36;
    }
    return 0;
}

inline std::string closed_form_iso_formula(SpaceKind kind) {
    switch (kind) {
    case SpaceKind::Grassmannian: return "n+m-2pq+p+q-1";
    case SpaceKind::Quadric: return "n+m-p-1";
    case SpaceKind::Lagrangian: return "n+m-r^2";
    case SpaceKind::Spinor: return "n+m-r^2+3r-3";
    case SpaceKind::E6: return "n+m-21";
    case SpaceKind::E7: return "n+m-37";
    }
    return "";
}

inline std::string closed_form_surj_formula(SpaceKind kind) {
    switch (kind) {
    case SpaceKind::Grassmannian: return "n+m-2pq+p+q";
    case SpaceKind::Quadric: return "n+m-p";
    case SpaceKind::Lagrangian: return "n+m-r^2+1";
    case SpaceKind::Spinor: return "n+m-r^2+3r-2";
    case SpaceKind::E6: return "n+m-20";
    case SpaceKind::E7: return "n+m-36";
    }
    return "";
}

/// Compares first-principles ranges (v, ell from the root data) with the
/// closed form for one (m, n).
inline bool closed_form_check(const SpaceId& id, int v, int ell, int m, int n) {
    const auto r = connectivity(id, v, ell, m, n);
    return r.iso_max == closed_form_iso_max(id, m, n) && r.surj_at == closed_form_surj_at(id, m, n);
}

inline bool closed_form_check(const SpaceId& id, int m, int n) {
    const auto s = resolve(id);
    return closed_form_check(id, s.dimension(), complex_positivity(s), m, n);
}

struct RankRefinement {
    int ell0 = 0;            // pq - (p-r)(q-r)
    int increase = 0;        // ell0 - (p+q-1)
    int stated_increase = 0; // r - 1
};

/// Guaranteed cone dimension on gr:p,q when every normal vector has rank >= r.
inline RankRefinement grassmann_rank_refinement(int p, int q, int r) {
    if (p < 1 || q < 1) throw ArgumentError("grassmann_rank_refinement: p and q must be positive");
    if (r < 1 || r > std::min(p, q))
        throw ArgumentError("grassmann_rank_refinement: r = " + std::to_string(r) + " outside [1, " +
                            std::to_string(std::min(p, q)) + "]");
    RankRefinement out;
    out.ell0 = p * q - (p - r) * (q - r);
    out.increase = out.ell0 - (p + q - 1);
    out.stated_increase = r - 1;
    return out;
}

} // namespace hsspos

#endif

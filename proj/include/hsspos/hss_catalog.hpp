#ifndef HSSPOS_HSS_CATALOG_HPP
#define HSSPOS_HSS_CATALOG_HPP

#include <algorithm>
#include <charconv>
#include <cstddef>
#include <memory>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "hsspos/chevalley.hpp"
#include "hsspos/error.hpp"
#include "hsspos/root_system.hpp"

namespace hsspos {

enum class SpaceKind { Grassmannian, Quadric, Lagrangian, Spinor, E6, E7 };

/// Public identifier of a compact irreducible hermitian symmetric space:
///   gr:p,q | quadric:p | lagr:r | spinor:r | e6 | e7
struct SpaceId {
    SpaceKind kind = SpaceKind::Grassmannian;
    int p = 0; // gr: p; quadric: p; lagr/spinor: r
    int q = 0; // gr only

    static SpaceId grassmannian(int p, int q) { return checked({SpaceKind::Grassmannian, p, q}); }
    static SpaceId quadric(int p) { return checked({SpaceKind::Quadric, p, 0}); }
    static SpaceId lagrangian(int r) { return checked({SpaceKind::Lagrangian, r, 0}); }
    static SpaceId spinor(int r) { return checked({SpaceKind::Spinor, r, 0}); }
    static SpaceId e6() { return {SpaceKind::E6, 0, 0}; }
    static SpaceId e7() { return {SpaceKind::E7, 0, 0}; }

    static SpaceId parse(std::string_view text) {
        auto fail = [&](const std::string& why) {
            return ConfigError("space id '" + std::string(text) + "': " + why);
        };
        auto number = [&](std::string_view s) {
            int value = 0;
            auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
            if (s.empty() || ec != std::errc() || ptr != s.data() + s.size())
                throw fail("expected a positive integer, got '" + std::string(s) + "'");
            return value;
        };
        if (text == "e6") return e6();
        if (text == "e7") return e7();
        const auto colon = text.find(':');
        if (colon == std::string_view::npos) throw fail("unknown family");
        const std::string_view family = text.substr(0, colon);
        const std::string_view args = text.substr(colon + 1);
        try {
            if (family == "gr") {
                const auto comma = args.find(',');
                if (comma == std::string_view::npos) throw fail("gr needs two parameters p,q");
                return grassmannian(number(args.substr(0, comma)), number(args.substr(comma + 1)));
            }
            if (family == "quadric") return quadric(number(args));
            if (family == "lagr") return lagrangian(number(args));
            if (family == "spinor") return spinor(number(args));
        } catch (const ConfigError& e) {
            if (std::string_view(e.what()).starts_with("space id")) throw;
            throw fail(e.what());
        }
        throw fail("unknown family '" + std::string(family) + "'");
    }

    std::string str() const {
        switch (kind) {
        case SpaceKind::Grassmannian: return "gr:" + std::to_string(p) + "," + std::to_string(q);
        case SpaceKind::Quadric: return "quadric:" + std::to_string(p);
        case SpaceKind::Lagrangian: return "lagr:" + std::to_string(p);
        case SpaceKind::Spinor: return "spinor:" + std::to_string(p);
        case SpaceKind::E6: return "e6";
        case SpaceKind::E7: return "e7";
        }
        return "?";
    }

    friend bool operator==(const SpaceId&, const SpaceId&) = default;

private:
    static SpaceId checked(SpaceId id) {
        auto bound = [&](bool ok, const char* what) {
            if (!ok) throw ConfigError(std::string("parameter out of range: ") + what);
        };
        switch (id.kind) {
        case SpaceKind::Grassmannian: bound(id.p >= 1 && id.q >= 1, "gr needs p >= 1 and q >= 1"); break;
        case SpaceKind::Quadric:
            bound(id.p != 2, "quadric:2 has non-simple ambient group SO(4)");
            bound(id.p >= 3, "quadric needs p >= 3");
            break;
        case SpaceKind::Lagrangian: bound(id.p >= 2, "lagr needs r >= 2"); break;
        case SpaceKind::Spinor: bound(id.p >= 3, "spinor needs r >= 3"); break;
        default: break;
        }
        bound(id.p <= 24 && id.q <= 24, "parameters above 24 are not supported");
        return id;
    }
};

/// Complex dimension v from the closed forms.
inline int closed_form_dimension(const SpaceId& id) {
    switch (id.kind) {
    case SpaceKind::Grassmannian: return id.p * id.q;
    case SpaceKind::Quadric: return id.p;
    case SpaceKind::Lagrangian: return id.p * (id.p + 1) / 2;
    case SpaceKind::Spinor: return id.p * (id.p - 1) / 2;
    case SpaceKind::E6: return 16;
    case SpaceKind::E7: return 27;
    }
    return 0;
}

/// Rank of the symmetric space (size of a maximal strongly orthogonal set in Psi).
inline int closed_form_symmetric_rank(const SpaceId& id) {
    switch (id.kind) {
    case SpaceKind::Grassmannian: return std::min(id.p, id.q);
    case SpaceKind::Quadric: return 2;
    case SpaceKind::Lagrangian: return id.p;
    case SpaceKind::Spinor: return id.p / 2;
    case SpaceKind::E6: return 2;
    case SpaceKind::E7: return 3;
    }
    return 0;
}

/// The published complex positivity for each family.
inline int tabulated_positivity(const SpaceId& id) {
    switch (id.kind) {
    case SpaceKind::Grassmannian: return id.p + id.q - 1;
    case SpaceKind::Quadric: return id.p - 1;
    case SpaceKind::Lagrangian: return id.p;
    case SpaceKind::Spinor: return (id.p - 1) + (id.p - 2);
    case SpaceKind::E6: return 11;
    case SpaceKind::E7: return 17;
    }
    return 0;
}

class HermitianSpace {
public:
    using Index = RootSystem::Index;

    const SpaceId& id() const { return id_; }
    const RootSystem& roots() const { return *rs_; }
    const StructureTable& table() const { return *table_; }
    const std::shared_ptr<const RootSystem>& root_system_ptr() const { return rs_; }

    /// Bourbaki node number (1-based) of the cominuscule simple root.
    int cominuscule_node() const { return node_; }

    /// Psi as root indices, in height-then-lexicographic order.
    const std::vector<Index>& psi() const { return psi_; }
    int dimension() const { return static_cast<int>(psi_.size()); }

    /// Position of a root in psi(), or -1.
    int psi_position(Index a) const { return psi_pos_.at(a); }
    bool in_psi(Index a) const { return a >= 0 && psi_pos_.at(a) >= 0; }

    Index require_psi(Index a, const char* op) const {
        if (!in_psi(a))
            throw ArgumentError(std::string(op) + ": root " + (a >= 0 ? rs_->root(a).name() : "?") +
                                " is not in Psi of " + id_.str());
        return a;
    }
    Index require_psi(const Root& r, const char* op) const {
        const Index a = rs_->index_of(r);
        if (a < 0) throw ArgumentError(std::string(op) + ": " + r.name() + " is not a root");
        return require_psi(a, op);
    }

    /// Same space over a different structure-constant table.
    HermitianSpace with_table(StructureTable t) const {
        HermitianSpace s(*this);
        s.table_ = std::make_shared<const StructureTable>(std::move(t));
        return s;
    }

    friend HermitianSpace resolve(const SpaceId& id);

private:
    SpaceId id_;
    std::shared_ptr<const RootSystem> rs_;
    std::shared_ptr<const StructureTable> table_;
    int node_ = 0;
    std::vector<Index> psi_;
    std::vector<int> psi_pos_;
};

namespace detail {

inline std::vector<RootSystem::Index> coefficient_one_roots(const RootSystem& rs, int node) {
    std::vector<RootSystem::Index> out;
    for (RootSystem::Index a = 0; a < static_cast<RootSystem::Index>(rs.positive_count()); ++a)
        if (rs.simple_coefficients(a)[std::size_t(node - 1)] == 1) out.push_back(a);
    return out;
}

} // namespace detail

struct PsiClosureReport {
    std::size_t pairs_checked = 0;
    std::size_t orthogonal_pairs = 0; // ordered pairs with (a,b) = 0
    std::size_t violations = 0;
};

/// Closure of Psi: no a+b is a root and (a,b) >= 0 for a,b in Psi.
/// Throws ConsistencyError naming the first offending pair.
inline PsiClosureReport check_psi_closure(const HermitianSpace& s) {
    const RootSystem& rs = s.roots();
    PsiClosureReport rep;
    for (auto a : s.psi())
        for (auto b : s.psi()) {
            ++rep.pairs_checked;
            const bool sum_is_root = rs.is_root(rs.root(a) + rs.root(b));
            const int ip = rs.inner2(a, b);
            if (sum_is_root || ip < 0)
                throw ConsistencyError("Psi closure violated in " + s.id().str() + " by (" +
                                       rs.root(a).name() + ", " + rs.root(b).name() + ")" +
                                       (sum_is_root ? ": sum is a root" : ": negative pairing"));
            if (ip == 0) ++rep.orthogonal_pairs;
        }
    return rep;
}

/// Builds the ambient algebra, picks the cominuscule node, computes Psi and
/// verifies the HermitianSpace invariants.
inline HermitianSpace resolve(const SpaceId& id) {
    HermitianSpace s;
    s.id_ = id;
    Family family = Family::A;
    int rank = 0;
    int node = 0;
    switch (id.kind) {
    case SpaceKind::Grassmannian: family = Family::A; rank = id.p + id.q - 1; node = id.p; break;
    case SpaceKind::Quadric:
        if (id.p % 2) { family = Family::B; rank = (id.p + 1) / 2; }
        else { family = Family::D; rank = (id.p + 2) / 2; }
        node = 1;
        break;
    case SpaceKind::Lagrangian: family = Family::C; rank = id.p; node = id.p; break;
    case SpaceKind::Spinor: family = Family::D; rank = id.p; node = id.p; break;
    case SpaceKind::E6: family = Family::E6; rank = 6; break;
    case SpaceKind::E7: family = Family::E7; rank = 7; break;
    }
    s.rs_ = std::make_shared<const RootSystem>(build_root_system(family, rank));
    const RootSystem& rs = *s.rs_;

    if (node == 0) {
        // Cominuscule nodes carry coefficient 1 in the highest root; take the
        // one with the smallest Psi, lowest node number on ties.
        const auto& top = rs.simple_coefficients(rs.highest_root());
        std::size_t best = 0;
        for (int k = 1; k <= rank; ++k) {
            if (top[std::size_t(k - 1)] != 1) continue;
            const std::size_t size = detail::coefficient_one_roots(rs, k).size();
            if (node == 0 || size < best) {
                node = k;
                best = size;
            }
        }
        if (node == 0) throw ConsistencyError(rs.name() + " has no cominuscule node");
    }
    if (rs.simple_coefficients(rs.highest_root())[std::size_t(node - 1)] != 1)
        throw ConsistencyError(rs.name() + ": node " + std::to_string(node) + " is not cominuscule");
    s.node_ = node;
    s.psi_ = detail::coefficient_one_roots(rs, node);
    s.psi_pos_.assign(rs.size(), -1);
    for (std::size_t i = 0; i < s.psi_.size(); ++i) s.psi_pos_[std::size_t(s.psi_[i])] = static_cast<int>(i);

    if (s.dimension() != closed_form_dimension(id))
        throw ConsistencyError(id.str() + ": |Psi| = " + std::to_string(s.dimension()) +
                               " but the closed form gives " + std::to_string(closed_form_dimension(id)));
    check_psi_closure(s);

    s.table_ = std::make_shared<const StructureTable>(s.rs_);
    return s;
}

inline HermitianSpace resolve(std::string_view text) { return resolve(SpaceId::parse(text)); }

/// Psi as coordinate vectors.
inline std::vector<Root> complementary_roots(const HermitianSpace& s) {
    std::vector<Root> out;
    for (auto a : s.psi()) out.push_back(s.roots().root(a));
    return out;
}

inline bool strongly_orthogonal(const RootSystem& rs, RootSystem::Index a, RootSystem::Index b) {
    return a != b && !rs.is_root(rs.root(a) + rs.root(b)) && !rs.is_root(rs.root(a) - rs.root(b));
}

/// Greedy cascade: take the highest remaining root of Psi, keep only the
/// roots strongly orthogonal to it, repeat.
inline std::vector<RootSystem::Index> strongly_orthogonal_cascade(const HermitianSpace& s) {
    const RootSystem& rs = s.roots();
    std::vector<RootSystem::Index> remaining = s.psi();
    std::vector<RootSystem::Index> cascade;
    while (!remaining.empty()) {
        const auto top = remaining.back();
        cascade.push_back(top);
        std::vector<RootSystem::Index> next;
        for (auto g : remaining)
            if (strongly_orthogonal(rs, top, g)) next.push_back(g);
        remaining = std::move(next);
    }
    return cascade;
}

/// The catalog covered by `verify`'s default sweep.
inline std::vector<SpaceId> verification_catalog() {
    std::vector<SpaceId> out;
    for (int p = 1; p <= 4; ++p)
        for (int q = 1; q <= 4; ++q) out.push_back(SpaceId::grassmannian(p, q));
    for (int p = 3; p <= 8; ++p) out.push_back(SpaceId::quadric(p));
    for (int r = 2; r <= 6; ++r) out.push_back(SpaceId::lagrangian(r));
    for (int r = 3; r <= 6; ++r) out.push_back(SpaceId::spinor(r));
    out.push_back(SpaceId::e6());
    out.push_back(SpaceId::e7());
    return out;
}

} // namespace hsspos

#endif

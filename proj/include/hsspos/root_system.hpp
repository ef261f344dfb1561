#ifndef HSSPOS_ROOT_SYSTEM_HPP
#define HSSPOS_ROOT_SYSTEM_HPP

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdlib>
#include <functional>
#include <memory>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "hsspos/error.hpp"
#include "hsspos/exact_linalg.hpp"
#include "hsspos/rational.hpp"

namespace hsspos {

/*
  Root systems of types A, B, C, D, E6, E7 in the Bourbaki coordinate models.

  Every coordinate that occurs is an integer or a half-odd-integer, so a Root
  stores twice its coordinates as machine integers; this is an exact rational
  representation with fixed denominator 2.

  Within a RootSystem the roots are indexed: indices [0, P) are the positive
  roots ordered by height and then lexicographically by coordinates, and index
  i + P is the negative of root i.  The simple roots are listed in Bourbaki
  order (node 1 first).
*/

class Root {
public:
    Root() = default;
    explicit Root(std::vector<int> twice) : twice_(std::move(twice)) {}

    static Root from_coordinates(const std::vector<Rational>& coords) {
        std::vector<int> t;
        t.reserve(coords.size());
        for (const auto& c : coords) {
            Rational d = 2 * c;
            if (!is_integer(d))
                throw ArgumentError("root coordinate " + to_string(c) + " is not a multiple of 1/2");
            t.push_back(static_cast<int>(d.get_num().get_si()));
        }
        return Root(std::move(t));
    }

    /// Unit vector scaled: `multiple * e_{index}` (index 0-based).
    static Root unit(std::size_t dim, std::size_t index, int multiple = 1) {
        std::vector<int> t(dim, 0);
        t[index] = 2 * multiple;
        return Root(std::move(t));
    }

    std::size_t dim() const { return twice_.size(); }
    Rational coord(std::size_t i) const { return frac(twice_[i], 2); }
    const std::vector<int>& twice() const { return twice_; }

    /// Euclidean dot product of the coordinate vectors, times 4.
    long dot4(const Root& o) const {
        check_dim(o);
        long s = 0;
        for (std::size_t i = 0; i < twice_.size(); ++i) s += long(twice_[i]) * o.twice_[i];
        return s;
    }

    bool is_zero() const {
        return std::all_of(twice_.begin(), twice_.end(), [](int x) { return x == 0; });
    }

    Root operator-() const {
        Root r(*this);
        for (auto& x : r.twice_) x = -x;
        return r;
    }
    Root operator+(const Root& o) const {
        check_dim(o);
        Root r(*this);
        for (std::size_t i = 0; i < twice_.size(); ++i) r.twice_[i] += o.twice_[i];
        return r;
    }
    Root operator-(const Root& o) const { return *this + (-o); }
    friend Root operator*(int k, const Root& r) {
        Root out(r);
        for (auto& x : out.twice_) x *= k;
        return out;
    }

    friend bool operator==(const Root&, const Root&) = default;
    friend auto operator<=>(const Root& a, const Root& b) { return a.twice_ <=> b.twice_; }

    /// `e1-e3`, `2e1`, `-e2` for integral roots; `[1/2,-1/2,...]` otherwise.
    std::string name(bool force_coordinates = false) const {
        bool integral = std::all_of(twice_.begin(), twice_.end(), [](int x) { return x % 2 == 0; });
        if (!integral || force_coordinates) {
            std::string s = "[";
            for (std::size_t i = 0; i < twice_.size(); ++i) {
                if (i) s += ",";
                s += to_string(coord(i));
            }
            return s + "]";
        }
        std::string s;
        for (std::size_t i = 0; i < twice_.size(); ++i) {
            int c = twice_[i] / 2;
            if (c == 0) continue;
            if (c < 0) s += "-";
            else if (!s.empty()) s += "+";
            if (std::abs(c) != 1) s += std::to_string(std::abs(c));
            s += "e" + std::to_string(i + 1);
        }
        return s.empty() ? "0" : s;
    }

private:
    void check_dim(const Root& o) const {
        if (o.twice_.size() != twice_.size())
            throw ArgumentError("root dimension mismatch: " + std::to_string(twice_.size()) +
                                " vs " + std::to_string(o.twice_.size()));
    }

    std::vector<int> twice_;
};

struct RootHash {
    std::size_t operator()(const Root& r) const {
        std::size_t h = 1469598103934665603ull;
        for (int x : r.twice()) h = (h ^ static_cast<std::size_t>(x + 64)) * 1099511628211ull;
        return h;
    }
};

enum class Family { A, B, C, D, E6, E7 };

inline std::string family_name(Family f) {
    switch (f) {
    case Family::A: return "A";
    case Family::B: return "B";
    case Family::C: return "C";
    case Family::D: return "D";
    case Family::E6: return "E6";
    case Family::E7: return "E7";
    }
    return "?";
}

inline Family parse_family(const std::string& s) {
    if (s == "A") return Family::A;
    if (s == "B") return Family::B;
    if (s == "C") return Family::C;
    if (s == "D") return Family::D;
    if (s == "E6") return Family::E6;
    if (s == "E7") return Family::E7;
    throw ConfigError("family: unsupported root system family '" + s + "'");
}

/// Classical root count for a (family, rank) pair.
inline std::size_t expected_root_count(Family f, int n) {
    switch (f) {
    case Family::A: return std::size_t(n) * (n + 1);
    case Family::B:
    case Family::C: return 2 * std::size_t(n) * n;
    case Family::D: return 2 * std::size_t(n) * (n - 1);
    case Family::E6: return 72;
    case Family::E7: return 126;
    }
    return 0;
}

class RootSystem {
public:
    using Index = int;

    Family family() const { return family_; }
    int rank() const { return rank_; }
    std::size_t ambient_dim() const { return dim_; }
    std::string name() const {
        return family_ == Family::E6 || family_ == Family::E7 ? family_name(family_)
                                                              : family_name(family_) + std::to_string(rank_);
    }

    std::size_t size() const { return roots_.size(); }
    std::size_t positive_count() const { return roots_.size() / 2; }
    const Root& root(Index i) const { return roots_.at(i); }
    const std::vector<Root>& roots() const { return roots_; }
    bool is_positive(Index i) const { return std::size_t(i) < positive_count(); }
    Index negative(Index i) const {
        const auto p = static_cast<Index>(positive_count());
        return i < p ? i + p : i - p;
    }

    /// Bourbaki-ordered simple roots as indices (node k is simple_index(k - 1)).
    const std::vector<Index>& simple_indices() const { return simple_; }
    const Root& simple_root(std::size_t node0) const { return roots_.at(simple_.at(node0)); }

    /// Coefficients of root i on the simple roots (all >= 0 or all <= 0).
    const std::vector<int>& simple_coefficients(Index i) const { return coeffs_.at(i); }
    int height(Index i) const {
        int h = 0;
        for (int c : coeffs_.at(i)) h += c;
        return h;
    }
    Index highest_root() const { return static_cast<Index>(positive_count()) - 1; }

    /// Index of v if v is a root, otherwise -1.
    Index index_of(const Root& v) const {
        check_dim(v);
        auto it = lookup_.find(v);
        return it == lookup_.end() ? -1 : it->second;
    }

    bool is_root(const Root& v) const { return index_of(v) >= 0; }

    Index require_root(const Root& v) const {
        Index i = index_of(v);
        if (i < 0) throw ArgumentError(v.name() + " is not a root of " + name());
        return i;
    }

    /// Normalized inner product (long roots have squared length 2), times 2.
    /// Always an integer for the supported families.
    int inner2(Index a, Index b) const { return inner2_[std::size_t(a) * size() + b]; }
    Rational inner(Index a, Index b) const { return frac(inner2(a, b), 2); }

    Rational inner(const Root& a, const Root& b) const {
        check_dim(a);
        return Rational(a.dot4(b)) * dot4_scale_;
    }

    /// Cartan integer <b, a^vee> = 2(a,b)/(a,a).
    int cartan(Index b, Index a) const {
        int num = 2 * inner2(a, b), den = inner2(a, a);
        return num / den;
    }

    bool is_long(Index a) const { return inner2(a, a) == 4; }

    /// Reflection of root b in the hyperplane orthogonal to root a.
    Root reflect(Index a, Index b) const { return roots_[b] - cartan(b, a) * roots_[a]; }

    void check_dim(const Root& v) const {
        if (v.dim() != dim_)
            throw ArgumentError("root has " + std::to_string(v.dim()) + " coordinates; " + name() +
                                " lives in dimension " + std::to_string(dim_));
    }

    friend RootSystem build_root_system(Family family, int rank);

private:
    RootSystem() = default;

    Family family_ = Family::A;
    int rank_ = 0;
    std::size_t dim_ = 0;
    Rational dot4_scale_;
    std::vector<Root> roots_;
    std::vector<Index> simple_;
    std::vector<std::vector<int>> coeffs_;
    std::vector<int> inner2_;
    std::unordered_map<Root, Index, RootHash> lookup_;
};

namespace detail {

inline std::vector<Root> e8_roots() {
    std::vector<Root> out;
    for (std::size_t i = 0; i < 8; ++i)
        for (std::size_t j = i + 1; j < 8; ++j)
            for (int si : {1, -1})
                for (int sj : {1, -1}) out.push_back(si * Root::unit(8, i) + sj * Root::unit(8, j));
    for (unsigned mask = 0; mask < 256; ++mask) {
        if (__builtin_popcount(mask) % 2) continue;
        std::vector<int> t(8);
        for (int i = 0; i < 8; ++i) t[i] = (mask >> i) & 1u ? -1 : 1;
        out.emplace_back(std::move(t));
    }
    return out;
}

inline Root half_vector(std::vector<int> twice) { return Root(std::move(twice)); }

} // namespace detail

/// Builds the root system of the given family and rank in its Bourbaki model.
inline RootSystem build_root_system(Family family, int rank) {
    auto bad_rank = [&](const std::string& bound) {
        return ConfigError("rank: " + family_name(family) + std::to_string(rank) +
                           " is not a supported simple root system (" + bound + ")");
    };
    switch (family) {
    case Family::A: if (rank < 1) throw bad_rank("A needs rank >= 1"); break;
    case Family::B: if (rank < 2) throw bad_rank("B needs rank >= 2"); break;
    case Family::C: if (rank < 2) throw bad_rank("C needs rank >= 2"); break;
    case Family::D: if (rank < 3) throw bad_rank("D needs rank >= 3"); break;
    case Family::E6: if (rank != 6) throw bad_rank("E6 has rank 6"); break;
    case Family::E7: if (rank != 7) throw bad_rank("E7 has rank 7"); break;
    }
    if (rank > 24) throw bad_rank("rank above 24 is not supported");

    RootSystem rs;
    rs.family_ = family;
    rs.rank_ = rank;
    const std::size_t n = static_cast<std::size_t>(rank);
    std::vector<Root> all;
    std::vector<Root> simple;
    auto e = [&](std::size_t dim, std::size_t i, int k = 1) { return Root::unit(dim, i, k); };

    switch (family) {
    case Family::A: {
        rs.dim_ = n + 1;
        for (std::size_t i = 0; i <= n; ++i)
            for (std::size_t j = 0; j <= n; ++j)
                if (i != j) all.push_back(e(n + 1, i) - e(n + 1, j));
        for (std::size_t i = 0; i < n; ++i) simple.push_back(e(n + 1, i) - e(n + 1, i + 1));
        break;
    }
    case Family::B:
    case Family::C:
    case Family::D: {
        rs.dim_ = n;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j)
                for (int si : {1, -1})
                    for (int sj : {1, -1}) all.push_back(si * e(n, i) + sj * e(n, j));
        for (std::size_t i = 0; i < n; ++i)
            for (int s : {1, -1}) {
                if (family == Family::B) all.push_back(s * e(n, i));
                if (family == Family::C) all.push_back(s * e(n, i, 2));
            }
        for (std::size_t i = 0; i + 1 < n; ++i) simple.push_back(e(n, i) - e(n, i + 1));
        if (family == Family::B) simple.push_back(e(n, n - 1));
        if (family == Family::C) simple.push_back(e(n, n - 1, 2));
        if (family == Family::D) simple.push_back(e(n, n - 2) + e(n, n - 1));
        break;
    }
    case Family::E6:
    case Family::E7: {
        // E7 = roots of E8 orthogonal to e7+e8; E6 additionally orthogonal to e7-e6.
        rs.dim_ = 8;
        const Root e78 = e(8, 6) + e(8, 7);
        const Root e76 = e(8, 6) - e(8, 5);
        for (const Root& r : detail::e8_roots()) {
            if (r.dot4(e78) != 0) continue;
            if (family == Family::E6 && r.dot4(e76) != 0) continue;
            all.push_back(r);
        }
        simple.push_back(detail::half_vector({1, -1, -1, -1, -1, -1, -1, 1}));
        simple.push_back(e(8, 0) + e(8, 1));
        for (std::size_t i = 0; i + 2 < n; ++i) simple.push_back(e(8, i + 1) - e(8, i));
        break;
    }
    }

    long max_norm = 0;
    for (const auto& r : all) max_norm = std::max(max_norm, r.dot4(r));
    rs.dot4_scale_ = frac(2, max_norm);

    // Simple-root coordinates via the inverse Gram matrix of the simple roots.
    RationalMatrix gram(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) gram(i, j) = simple[i].dot4(simple[j]);
    const RationalMatrix ginv = inverse(gram);

    struct Entry {
        Root root;
        std::vector<int> coeffs;
        int height;
    };
    std::vector<Entry> positives;
    for (const auto& r : all) {
        std::vector<Rational> pairing(n);
        for (std::size_t j = 0; j < n; ++j) pairing[j] = r.dot4(simple[j]);
        std::vector<int> k(n);
        bool nonneg = true, nonpos = true;
        for (std::size_t i = 0; i < n; ++i) {
            Rational ki = 0;
            for (std::size_t j = 0; j < n; ++j) ki += ginv(i, j) * pairing[j];
            if (!is_integer(ki))
                throw ConsistencyError(rs.name() + ": root " + r.name() + " is not an integral combination of simple roots");
            k[i] = static_cast<int>(ki.get_num().get_si());
            nonneg = nonneg && k[i] >= 0;
            nonpos = nonpos && k[i] <= 0;
        }
        if (!nonneg && !nonpos)
            throw ConsistencyError(rs.name() + ": root " + r.name() + " has mixed-sign simple coefficients");
        if (nonneg) {
            int h = 0;
            for (int c : k) h += c;
            positives.push_back({r, std::move(k), h});
        }
    }
    std::sort(positives.begin(), positives.end(), [](const Entry& a, const Entry& b) {
        return a.height != b.height ? a.height < b.height : a.root < b.root;
    });

    const std::size_t p = positives.size();
    if (2 * p != all.size() || all.size() != expected_root_count(family, rank))
        throw ConsistencyError(rs.name() + ": unexpected root count " + std::to_string(all.size()));

    rs.roots_.resize(2 * p);
    rs.coeffs_.resize(2 * p);
    for (std::size_t i = 0; i < p; ++i) {
        rs.roots_[i] = positives[i].root;
        rs.roots_[i + p] = -positives[i].root;
        rs.coeffs_[i] = positives[i].coeffs;
        rs.coeffs_[i + p] = positives[i].coeffs;
        for (int& c : rs.coeffs_[i + p]) c = -c;
    }
    for (std::size_t i = 0; i < 2 * p; ++i) rs.lookup_.emplace(rs.roots_[i], static_cast<int>(i));
    for (const auto& s : simple) rs.simple_.push_back(rs.require_root(s));

    const std::size_t total = 2 * p;
    rs.inner2_.resize(total * total);
    for (std::size_t a = 0; a < total; ++a)
        for (std::size_t b = 0; b < total; ++b) {
            Rational v = 2 * Rational(rs.roots_[a].dot4(rs.roots_[b])) * rs.dot4_scale_;
            if (!is_integer(v)) throw ConsistencyError(rs.name() + ": non-half-integral inner product");
            rs.inner2_[a * total + b] = static_cast<int>(v.get_num().get_si());
        }
    return rs;
}

struct RootString {
    int down = 0; // p: largest k with b - k a a root
    int up = 0;   // q: largest k with b + k a a root
};

/// The a-string through b.
inline RootString root_string(const RootSystem& rs, RootSystem::Index a, RootSystem::Index b) {
    if (a == b || a == rs.negative(b)) throw ArgumentError("root_string: b must differ from +-a");
    RootString s;
    const Root& ra = rs.root(a);
    Root cur = rs.root(b);
    while (rs.is_root(cur - ra)) {
        cur = cur - ra;
        ++s.down;
    }
    cur = rs.root(b);
    while (rs.is_root(cur + ra)) {
        cur = cur + ra;
        ++s.up;
    }
    return s;
}

inline RootString root_string(const RootSystem& rs, const Root& a, const Root& b) {
    return root_string(rs, rs.require_root(a), rs.require_root(b));
}

/// Inverse of Root::name: `e1-e3`, `e1+e2`, `2e1`, `-e2` or a coordinate list
/// `[1/2,-1/2,...]` with `dim` entries.
inline Root parse_root(std::string_view text, std::size_t dim) {
    auto fail = [&](const std::string& why) { return ArgumentError("root '" + std::string(text) + "': " + why); };
    std::string compact;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) compact += c;
    std::string_view s = compact;
    if (s.empty()) throw fail("empty");
    if (s.front() == '[') {
        if (s.back() != ']') throw fail("missing ']'");
        s = s.substr(1, s.size() - 2);
        std::vector<Rational> coords;
        while (true) {
            const auto comma = s.find(',');
            coords.push_back(parse_rational(s.substr(0, comma)));
            if (comma == std::string_view::npos) break;
            s.remove_prefix(comma + 1);
        }
        if (coords.size() != dim)
            throw fail("expected " + std::to_string(dim) + " coordinates, got " + std::to_string(coords.size()));
        return Root::from_coordinates(coords);
    }
    std::vector<int> twice(dim, 0);
    std::size_t i = 0;
    auto read_int = [&] {
        std::size_t start = i;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
        if (start == i) return -1;
        if (i - start > 6) throw fail("number too long");
        return std::stoi(std::string(s.substr(start, i - start)));
    };
    bool first = true;
    while (i < s.size()) {
        int sign = 1;
        if (s[i] == '+' || s[i] == '-') {
            sign = s[i] == '-' ? -1 : 1;
            ++i;
        } else if (!first) {
            throw fail("expected '+' or '-' at position " + std::to_string(i));
        }
        int mult = read_int();
        if (mult < 0) mult = 1;
        if (i >= s.size() || s[i] != 'e') throw fail("expected 'e' at position " + std::to_string(i));
        ++i;
        const int idx = read_int();
        if (idx < 1 || std::size_t(idx) > dim) throw fail("coordinate index out of range 1.." + std::to_string(dim));
        twice[std::size_t(idx - 1)] += 2 * sign * mult;
        first = false;
    }
    return Root(std::move(twice));
}

} // namespace hsspos

#endif

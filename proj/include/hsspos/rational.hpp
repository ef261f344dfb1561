#ifndef HSSPOS_RATIONAL_HPP
#define HSSPOS_RATIONAL_HPP

#include <gmpxx.h>

#include <cctype>
#include <string>
#include <string_view>

#include "hsspos/error.hpp"

namespace hsspos {

using Rational = mpq_class;
using Integer = mpz_class;

/// n/d in canonical form.
inline Rational frac(long n, long d) {
    Rational r(n, d);
    r.canonicalize();
    return r;
}

inline std::string to_string(const Rational& r) { return r.get_str(); }

inline bool is_integer(const Rational& r) { return r.get_den() == 1; }

/// Accepts `n`, `-n`, `+n`, `n/d` with d != 0.  The result is canonical.
inline Rational parse_rational(std::string_view text) {
    auto fail = [&] {
        return ArgumentError("malformed rational '" + std::string(text) + "'");
    };
    auto digits_ok = [](std::string_view s) {
        if (s.empty()) return false;
        for (char c : s)
            if (!std::isdigit(static_cast<unsigned char>(c))) return false;
        return true;
    };
    std::string_view body = text;
    bool negative = false;
    if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
        negative = body.front() == '-';
        body.remove_prefix(1);
    }
    const auto slash = body.find('/');
    std::string_view num = body.substr(0, slash);
    std::string_view den = slash == std::string_view::npos ? std::string_view{"1"}
                                                           : body.substr(slash + 1);
    if (!digits_ok(num) || !digits_ok(den)) throw fail();
    Integer n(std::string(num), 10);
    Integer d(std::string(den), 10);
    if (d == 0) throw fail();
    Rational r(n, d);
    r.canonicalize();
    if (negative) r = -r;
    return r;
}

} // namespace hsspos

#endif

#ifndef HSSPOS_SAMPLING_HPP
#define HSSPOS_SAMPLING_HPP

#include <cstdint>
#include <random>
#include <string_view>
#include <vector>

#include "hsspos/curvature.hpp"
#include "hsspos/rational.hpp"

namespace hsspos {

// Seeded random rationals and tangent vectors.  Draws use plain modular
// reduction of mt19937_64 output so sequences are identical on every
// platform (std::uniform_int_distribution is implementation-defined).

inline std::uint64_t fnv1a(std::string_view text) {
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : text) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

class Sampler {
public:
    explicit Sampler(std::uint64_t seed) : rng_(seed) {}
    Sampler(std::uint64_t seed, std::string_view stream) : rng_(seed ^ fnv1a(stream)) {}

    std::uint64_t below(std::uint64_t k) { return rng_() % k; }
    long between(long lo, long hi) { return lo + static_cast<long>(below(std::uint64_t(hi - lo + 1))); }

    /// n/d with n in [-3, 3] and d in [1, 3].
    Rational small_rational() { return frac(between(-3, 3), between(1, 3)); }
    Rational nonzero_rational() {
        Rational r;
        do r = small_rational();
        while (r == 0);
        return r;
    }

private:
    std::mt19937_64 rng_;
};

/// Every coefficient drawn independently; retried until nonzero.
inline TangentVector random_dense_vector(const HermitianSpace& s, Sampler& rng) {
    TangentVector x = TangentVector::zero(s);
    do
        for (auto& c : x.coeffs) c = rng.small_rational();
    while (x.is_zero());
    return x;
}

/// Nonzero coefficients on 1..max_support random positions of Psi.
inline TangentVector random_sparse_vector(const HermitianSpace& s, Sampler& rng, int max_support = 3) {
    TangentVector x = TangentVector::zero(s);
    const auto v = std::uint64_t(s.dimension());
    const long k = rng.between(1, std::min<long>(max_support, long(v)));
    for (long i = 0; i < k; ++i) x.coeffs[std::size_t(rng.below(v))] = rng.nonzero_rational();
    return x;
}

/// Alternates dense and sparse draws; sparse vectors have large kernels.
inline TangentVector random_vector(const HermitianSpace& s, Sampler& rng, std::size_t k) {
    return k % 2 == 0 ? random_dense_vector(s, rng) : random_sparse_vector(s, rng);
}

/// Random vector on gr:p,q whose coefficient matrix is A*B with A p x r and
/// B r x q; redrawn until its rank is exactly r.
inline TangentVector random_grassmann_vector(const HermitianSpace& s, int r, Sampler& rng) {
    if (s.id().kind != SpaceKind::Grassmannian)
        throw ArgumentError("random_grassmann_vector: " + s.id().str() + " is not a Grassmannian");
    const int p = s.id().p, q = s.id().q;
    if (r < 1 || r > std::min(p, q)) throw ArgumentError("random_grassmann_vector: rank out of range");
    const std::size_t dim = s.roots().ambient_dim();
    for (;;) {
        std::vector<Rational> a(std::size_t(p * r)), b(std::size_t(r * q));
        for (auto& c : a) c = rng.small_rational();
        for (auto& c : b) c = rng.small_rational();
        TangentVector x = TangentVector::zero(s);
        for (int i = 0; i < p; ++i)
            for (int j = 0; j < q; ++j) {
                Rational c = 0;
                for (int k = 0; k < r; ++k) c += a[std::size_t(i * r + k)] * b[std::size_t(k * q + j)];
                const auto idx =
                    s.roots().require_root(Root::unit(dim, std::size_t(i)) - Root::unit(dim, std::size_t(p + j)));
                x.coeffs[std::size_t(s.psi_position(idx))] = c;
            }
        if (!x.is_zero() && grassmann_rank(s, x) == r) return x;
    }
}

} // namespace hsspos

#endif

#pragma once

/// Small dense linear algebra over F_p for three-dimensional residue algebras.

#include <array>
#include <cstdint>
#include <vector>

namespace cubic::fp {

using Vec3 = std::array<std::uint32_t, 3>;

inline Vec3 add(const Vec3& a, const Vec3& b, std::uint32_t p) {
    return {(a[0] + b[0]) % p, (a[1] + b[1]) % p, (a[2] + b[2]) % p};
}

inline Vec3 scale(const Vec3& a, std::uint32_t c, std::uint32_t p) {
    const std::uint64_t cc = c % p;
    return {static_cast<std::uint32_t>(a[0] * cc % p), static_cast<std::uint32_t>(a[1] * cc % p),
            static_cast<std::uint32_t>(a[2] * cc % p)};
}

inline bool is_zero(const Vec3& a) { return !a[0] && !a[1] && !a[2]; }

/// Row-reduced basis of the span.
std::vector<Vec3> reduced_basis(std::vector<Vec3> vs, std::uint32_t p);

inline int rank(const std::vector<Vec3>& vs, std::uint32_t p) {
    return static_cast<int>(reduced_basis(vs, p).size());
}

inline bool in_span(const std::vector<Vec3>& basis, const Vec3& v, std::uint32_t p) {
    std::vector<Vec3> b = basis;
    const int r = rank(b, p);
    b.push_back(v);
    return rank(b, p) == r;
}

/// Every vector of F_p^3, in lexicographic order.
std::vector<Vec3> all_vectors(std::uint32_t p);

} // namespace cubic::fp

#pragma once

#include <initializer_list>
#include <vector>

#include "cubic/families.hpp"
#include "cubic/overrings.hpp"

namespace testing {

inline cubic::Series ser(const cubic::RingConfig& cfg, std::initializer_list<std::int64_t> c) {
    const std::vector<std::int64_t> v(c);
    return cubic::Series::from_coeffs(cfg, v);
}

inline cubic::AlgebraPtr algebra(cubic::BranchCase c, std::uint32_t p = 5, int prec = 12) {
    return cubic::CubicAlgebra::make(c, cubic::RingConfig::make(p, prec));
}

/// t^m·A + D.
inline cubic::Lattice a_m(const cubic::AlgebraPtr& alg, int m) { return cubic::make_Am(alg, m); }

} // namespace testing

#pragma once

/**
 * @file ideals.hpp
 * @brief Fractional ideals of a cubic order up to multiplication by L^×.
 *
 * Every class has a representative M with C ⊆ M ⊆ A: scale M·A = μA to
 * A, then divide by a unit of A lying in M (one exists once p exceeds the
 * number of branches). The census enumerates these normalized
 * representatives; the full window t^w·A ⊆ M ⊆ A is kept as a cross-check.
 */

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cubic/families.hpp"

namespace cubic {

struct FractionalIdeal {
    Lattice base;
    Lattice module;
};

/// C·M ⊆ M.
bool is_ideal_of(const Lattice& C, const Lattice& M);

/// All C-stable M with t^w·A ⊆ M ⊆ A; refuses outside p ≤ 13, w ≤ 3.
std::vector<Lattice> enumerate_ideal_lattices(const Lattice& C, int w, bool enforce_envelope = true);
/// All C-stable M with C ⊆ M ⊆ A.
std::vector<Lattice> enumerate_normalized_ideals(const Lattice& C);

/// M′ = λ·M for some λ ∈ L^×.
bool is_isomorphic_ideals(const FractionalIdeal& a, const FractionalIdeal& b);

enum class ClassTag { Overring, Dual, Unexpected };
std::string tag_name(ClassTag t);

struct IdealClass {
    Lattice representative;
    /// {x : x·M ⊆ M}, constant on the class.
    Lattice multiplier;
    ClassTag tag = ClassTag::Unexpected;
    int members = 0;
};

struct ClassCensus {
    Lattice base;
    /// Window exponent, or empty for the normalized enumeration.
    std::optional<int> window;
    std::vector<IdealClass> classes;
    int ideals_scanned = 0;

    int unexpected() const;
};

/// Classes of C-ideals, from the window t^w·A (when given) or from the
/// normalized representatives.
ClassCensus iso_classes(const Lattice& C, std::optional<int> window = std::nullopt);

struct ParEstimate {
    std::vector<std::uint32_t> primes;
    std::vector<int> counts;
    /// Degree of the interpolating polynomial through (p, n(p)); empty when
    /// the fit uses every point (no evidence of polynomial growth).
    std::optional<int> degree;
    std::string note;
};

/// Degree of the polynomial interpolating the points, if overdetermined.
std::optional<int> growth_degree(const std::vector<std::uint32_t>& xs, const std::vector<int>& ys);
ParEstimate par_estimate(const FamilyDescriptor& d, const std::vector<std::uint32_t>& primes);

} // namespace cubic

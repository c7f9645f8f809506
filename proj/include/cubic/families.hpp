#pragma once

/**
 * @file families.hpp
 * @brief Named cubic rings: A_m, J_m and the shifted rings t^k·C + D.
 *
 * Every ring of the family list has the shape
 *
 *     C = D + t^s·β·D + t^c·A,       t^k·C + D,
 *
 * where c is the conductor exponent of C and β depends on the case:
 *
 * | case | shape    | s      | β                          | c      | a mod   |
 * |------|----------|--------|----------------------------|--------|---------|
 * | 1r   | C_{2r}   | r      | τ + a·τ²                   | 2r     | t^r     |
 * | 1r   | C_{2r+1} | r      | τ² + a·t·τ                 | 2r+1   | t^r     |
 * | 1u   | C_r      | r      | θ + a·θ²  or  θ² + a·t·θ   | 2r     | t^r, t^{r-1} |
 * | 2r   | C_r      | r      | τ + a·t·e                  | 2r+1   | t^r     |
 * | 2r   | C_{l,q}  | l      | e + t^q·a·τ, a a unit      | 2l+q   | t^l     |
 * | 2u   | C_{l,q}  | l      | e₁ + t^q·a·θ, a a unit, or t·a·e₁ + θ (q = 0) | 2l+q | t^l, t^{l-1} |
 * | 3    | C_{l,q}  | l      | e_i + t^q·a·e_j, a a unit  | 2l+q   | t^l     |
 *
 * The second chart of 1u and 2u covers the directions the first misses.
 */

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cubic/lattice.hpp"

namespace cubic {

enum class FamilyKind { Am, Jm, ShiftedC };
/// C_r (one subscript) or C_{l,q}.
enum class FamilyShape { R, LQ };

struct FamilyDescriptor {
    BranchCase branch_case = BranchCase::OneBranchRamified;
    FamilyKind kind = FamilyKind::ShiftedC;
    int m = 0;
    int k = 0;
    FamilyShape shape = FamilyShape::R;
    /// ρ for 1r, r for 1u and the 2r C_r family.
    int r = 0;
    int l = 0;
    int q = 0;
    /// 0 or 1; see the table above.
    int chart = 0;
    /// Three-branch idempotent indices; -1 when irrelevant.
    int e = -1;
    int e_prime = -1;
    /// Canonical parameter, lowest degree first, reduced mod p.
    std::vector<std::uint32_t> a;

    friend bool operator==(const FamilyDescriptor&, const FamilyDescriptor&) = default;
    friend auto operator<=>(const FamilyDescriptor&, const FamilyDescriptor&) = default;
};

std::string to_string(const FamilyDescriptor& d);

/// The shifted-ring descriptor of the maximal order.
FamilyDescriptor maximal_descriptor(BranchCase c);
/// A_m = t^m·C_0 + D as a shifted-ring descriptor.
FamilyDescriptor am_descriptor(BranchCase c, int m);

/// Conductor exponent of C (without the t^k shift).
int family_conductor(const FamilyDescriptor& d);
/// Exponent s of the middle generator t^s·β.
int family_middle_exponent(const FamilyDescriptor& d);
/// Number of t-adic digits of the canonical parameter.
int residue_length(const FamilyDescriptor& d);
/// True for the descriptors whose ring C is A itself.
bool is_maximal_family(const FamilyDescriptor& d);
/// Descriptor of C itself (k = 0).
FamilyDescriptor unshifted(const FamilyDescriptor& d);
/// Smallest m with t^k·C + D ⊇ A_m, i.e. k plus the conductor of C.
int family_level(const FamilyDescriptor& d);

/// Throws InvalidDescriptorError unless d is canonical for prime p.
void validate(const FamilyDescriptor& d, std::uint32_t p);

Lattice make_Am(const AlgebraPtr& alg, int m);
Lattice make_Jm(const AlgebraPtr& alg, int m);
/// The element β for descriptor d.
Element family_beta(const CubicAlgebra& alg, const FamilyDescriptor& d);
Lattice make_family(const AlgebraPtr& alg, const FamilyDescriptor& d);

/// Reduces the parameter of a raw descriptor (any idempotent pair, any
/// representative of a) to the canonical descriptor of the same ring.
FamilyDescriptor canonical_alpha(const AlgebraPtr& alg, FamilyDescriptor raw);

/// All canonical shifted-ring descriptors with k + conductor ≤ m, sorted.
std::vector<FamilyDescriptor> enumerate_descriptors(BranchCase c, std::uint32_t p, int m);
/// Descriptors with k = 0 and the given conductor exponent.
std::vector<FamilyDescriptor> descriptors_with_conductor(BranchCase c, std::uint32_t p, int conductor);

/// Matches an order to its family descriptor; throws ClassificationError.
FamilyDescriptor recognize(const Lattice& M);

} // namespace cubic

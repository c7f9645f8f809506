#pragma once

/**
 * @file overrings.hpp
 * @brief Over-rings of A_m: the inductive procedure, the closed-form
 * family list and an exhaustive oracle.
 */

#include <vector>

#include "cubic/families.hpp"
#include "cubic/fp.hpp"

namespace cubic {

/// B/tB as an F_p-algebra, in the basis given by the classes of B's columns.
struct QuotientAlgebra {
    Lattice base;
    std::uint32_t p = 0;
    std::array<std::array<fp::Vec3, 3>, 3> mult{};
    fp::Vec3 one{};
    /// Basis of Ā = (A_m + tB)/tB (only filled by quotient_algebra).
    std::vector<fp::Vec3> abar;
    /// Basis of the image of B·J_m (only filled by quotient_algebra).
    std::vector<fp::Vec3> bjm;

    fp::Vec3 product(const fp::Vec3& x, const fp::Vec3& y) const;
    fp::Vec3 power(const fp::Vec3& x, int n) const;
    /// The element of B with the given residue coordinates.
    Element lift(const fp::Vec3& x) const;
    /// Residue coordinates of an element of B.
    fp::Vec3 reduce(const Element& x) const;
};

QuotientAlgebra residue_algebra(const Lattice& B);
/// B/tB together with Ā and the image of B·J_m; requires B ⊇ A_m.
QuotientAlgebra quotient_algebra(const Lattice& B, int m);

struct Subalgebra {
    std::vector<fp::Vec3> basis;
    /// Ā·S = B̄.
    bool product_condition = false;
    /// S → B/B·J_m is onto.
    bool surjective_condition = false;
};

/// Unital subalgebras of a residue algebra (including the whole algebra
/// when `include_improper`).
std::vector<std::vector<fp::Vec3>> unital_subalgebras(const QuotientAlgebra& Q, bool include_improper);
/// Every proper unital subalgebra with both conditions evaluated.
std::vector<Subalgebra> subalgebra_candidates(const QuotientAlgebra& Q);

struct ProcedureStats {
    long candidates = 0;
    long condition_disagreements = 0;
};

/// Preimage of a subspace of B/tB in B.
Lattice subalgebra_preimage(const QuotientAlgebra& Q, const std::vector<fp::Vec3>& S);
/// Over-rings of A_{m+1} that are not over-rings of A_m and whose product
/// with A_m is B. Requires B ⊇ A_m and, for m ≥ 1, B ⊉ A_{m-1}.
std::vector<Lattice> procedure_step(const Lattice& B, int m, ProcedureStats* stats = nullptr);
/// Over-rings of A_1 from the subalgebras of A/tA.
std::vector<Lattice> base_overrings(const AlgebraPtr& alg);
/// All over-rings of A_m by iterating procedure_step from the m = 1 base.
std::vector<Lattice> iterate_procedure(const AlgebraPtr& alg, int m, ProcedureStats* stats = nullptr);

std::vector<FamilyDescriptor> enumerate_overrings_closed(const AlgebraPtr& alg, int m);
std::vector<Lattice> closed_form_lattices(const AlgebraPtr& alg, int m);

/// Exhaustive scan of all lattices between A_m and A; refuses outside
/// p ≤ 7, m ≤ 3 unless `enforce_envelope` is false.
std::vector<Lattice> brute_force_overrings(const AlgebraPtr& alg, int m, bool enforce_envelope = true);

/// Precision used by the library's own enumeration helpers.
inline int default_precision(int m) { return 4 * m + 8; }
/// Throws PrecisionError unless prec ≥ 2m + 2.
void require_enumeration_precision(const CubicAlgebra& alg, int m);

} // namespace cubic

#pragma once

/**
 * @file duality.hpp
 * @brief Dual lattices Hom_D(M, D) realized inside L by the trace form.
 *
 * Duals are only defined up to L^×-scaling. The representative returned
 * here is the unique t-power multiple lying in A but not in t·A.
 */

#include <optional>
#include <string>

#include "cubic/families.hpp"

namespace cubic {

/// {y ∈ L : Tr(y·M) ⊆ D}, scaled by a power of t into A \ tA.
Lattice trace_dual(const Lattice& M);
/// M scaled by a power of t into A \ tA.
Lattice normalize_window(const Lattice& M);

/// {λ ∈ C : λ·B ⊆ C} for a Gorenstein order C ⊆ B.
Lattice dual_via_hom(const Lattice& B, const Lattice& C);

/// The closed-form dual D + t^s·β·D + t^{k+c}·A of t^k·C + D; empty for
/// the rings A_k, where the formula has no β to work with.
std::optional<Lattice> closed_form_dual(const AlgebraPtr& alg, const FamilyDescriptor& d);

/// trace_dual(B) ≅ B.
bool is_gorenstein(const Lattice& B);

struct DualReport {
    Lattice input;
    Lattice trace_dual;
    std::optional<FamilyDescriptor> descriptor;
    std::optional<Lattice> closed_form;
    /// λ with λ·closed_form = t^shift·trace_dual.
    std::optional<ScalingWitness> witness;
    std::string note;
};

/// Trace dual, and for orders the closed form with a scaling witness.
DualReport dual_report(const Lattice& B);

} // namespace cubic

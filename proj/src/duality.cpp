#include "cubic/duality.hpp"

#include "cubic/errors.hpp"

namespace cubic {

Lattice normalize_window(const Lattice& M) { return M.divided_by_t(M.t_content()); }

Lattice trace_dual(const Lattice& M) {
    const auto& alg = M.alg();
    // The inverse different lies in t^{-1}·A (ramified) or is A itself, so
    // t^{c+δ}·M^∨ ⊆ A when t^c·A ⊆ M.
    const int delta = alg.expected_discriminant_valuation() > 0 ? 1 : 0;
    const int s = M.conductor_exponent() + delta;
    if (s + 1 >= alg.prec())
        throw PrecisionError("trace dual needs precision > " + std::to_string(s + 1) + ", have " +
                             std::to_string(alg.prec()));
    return normalize_window(trace_condition_lattice(M, s));
}

bool is_gorenstein(const Lattice& B) {
    if (!is_order(B)) throw PreconditionError("is_gorenstein expects an order");
    return is_isomorphic(B, trace_dual(B));
}

Lattice dual_via_hom(const Lattice& B, const Lattice& C) {
    if (!B.contains(C)) throw PreconditionError("dual_via_hom needs C ⊆ B");
    if (!is_order(B) || !is_order(C)) throw PreconditionError("dual_via_hom expects orders");
    if (!is_gorenstein(C)) throw PreconditionError("dual_via_hom needs a Gorenstein subring C");
    return colon(C, B);
}

std::optional<Lattice> closed_form_dual(const AlgebraPtr& alg, const FamilyDescriptor& d) {
    if (d.kind == FamilyKind::Jm) throw PreconditionError("closed-form duals are stated for rings only");
    if (is_maximal_family(d) || d.kind == FamilyKind::Am) return std::nullopt;
    const int s = family_middle_exponent(d);
    const int top = d.k + family_conductor(d);
    Element beta = family_beta(*alg, d);
    if (d.shape == FamilyShape::LQ && d.l == 0) {
        // C_{0,q} does not depend on α, but its shifted dual does: the term
        // t^q·α survives modulo t^{k+q}·A. Any unit a gives the same class.
        const Series tq = alg->t_power(d.q);
        switch (d.branch_case) {
        case BranchCase::TwoBranchesRamified:
        case BranchCase::TwoBranchesUnramified: beta = alg->basis(0) + tq * alg->basis(1); break;
        case BranchCase::ThreeBranches: beta = alg->basis(d.e) + tq * alg->basis(d.e == 0 ? 1 : 0); break;
        default: break;
        }
    }
    std::vector<Element> g{alg->one(), alg->t_power(s) * beta};
    for (int i = 0; i < 3; ++i) g.push_back(alg->t_power(top) * alg->basis(i));
    return Lattice::from_generators(alg, g);
}

DualReport dual_report(const Lattice& B) {
    DualReport r{B, trace_dual(B), std::nullopt, std::nullopt, std::nullopt, {}};
    if (!is_order(B)) {
        r.note = "input is not an order; only the trace dual is reported";
        return r;
    }
    r.descriptor = recognize(B);
    r.closed_form = closed_form_dual(B.algebra(), *r.descriptor);
    if (!r.closed_form) {
        r.note = "closed form does not apply to A_k (r = 0); trace dual only";
        return r;
    }
    r.witness = find_scaling(*r.closed_form, r.trace_dual);
    r.note = r.witness ? "trace dual matches the closed form" : "trace dual is NOT isomorphic to the closed form";
    return r;
}

} // namespace cubic

#include "cubic/overrings.hpp"

#include <algorithm>
#include <set>

#include "cubic/errors.hpp"

namespace cubic {

fp::Vec3 QuotientAlgebra::product(const fp::Vec3& x, const fp::Vec3& y) const {
    fp::Vec3 r{0, 0, 0};
    for (int i = 0; i < 3; ++i) {
        const auto ui = static_cast<std::size_t>(i);
        if (!x[ui]) continue;
        for (int j = 0; j < 3; ++j) {
            const auto uj = static_cast<std::size_t>(j);
            if (!y[uj]) continue;
            const std::uint32_t c = static_cast<std::uint32_t>(std::uint64_t{x[ui]} * y[uj] % p);
            r = fp::add(r, fp::scale(mult[ui][uj], c, p), p);
        }
    }
    return r;
}

fp::Vec3 QuotientAlgebra::power(const fp::Vec3& x, int n) const {
    fp::Vec3 r = one;
    for (int i = 0; i < n; ++i) r = product(r, x);
    return r;
}

Element QuotientAlgebra::lift(const fp::Vec3& x) const {
    const auto& alg = base.alg();
    Element r = alg.zero();
    for (int i = 0; i < 3; ++i)
        if (x[static_cast<std::size_t>(i)])
            r += alg.series(x[static_cast<std::size_t>(i)]) * base.columns()[static_cast<std::size_t>(i)];
    return r;
}

fp::Vec3 QuotientAlgebra::reduce(const Element& x) const {
    const auto c = base.coordinates(x);
    if (!c) throw PreconditionError("element does not lie in the order");
    return {(*c)[0][0], (*c)[1][0], (*c)[2][0]};
}

QuotientAlgebra residue_algebra(const Lattice& B) {
    QuotientAlgebra Q{B, B.alg().p(), {}, {}, {}, {}};
    const auto& cols = B.columns();
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = i; j < 3; ++j) {
            Q.mult[i][j] = Q.reduce(B.alg().mul(cols[i], cols[j]));
            Q.mult[j][i] = Q.mult[i][j];
        }
    Q.one = Q.reduce(B.alg().one());
    return Q;
}

QuotientAlgebra quotient_algebra(const Lattice& B, int m) {
    if (m < 1) throw PreconditionError("quotient_algebra needs m >= 1");
    const auto& alg = B.algebra();
    const Lattice Am = make_Am(alg, m);
    if (!B.contains(Am)) throw PreconditionError("B does not contain A_" + std::to_string(m));
    QuotientAlgebra Q = residue_algebra(B);
    std::vector<fp::Vec3> a;
    for (const auto& x : Am.columns()) a.push_back(Q.reduce(x));
    Q.abar = fp::reduced_basis(a, Q.p);
    const Lattice BJ = lattice_product(B, make_Jm(alg, m));
    std::vector<fp::Vec3> b;
    for (const auto& x : BJ.columns()) b.push_back(Q.reduce(x));
    Q.bjm = fp::reduced_basis(b, Q.p);
    return Q;
}

std::vector<std::vector<fp::Vec3>> unital_subalgebras(const QuotientAlgebra& Q, bool include_improper) {
    const std::uint32_t p = Q.p;
    std::vector<std::vector<fp::Vec3>> out;
    out.push_back({Q.one});
    // Complete 1 to a basis with two unit vectors.
    const std::array<fp::Vec3, 3> unit{{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}};
    std::vector<fp::Vec3> w;
    for (const auto& u : unit) {
        std::vector<fp::Vec3> trial{Q.one};
        trial.insert(trial.end(), w.begin(), w.end());
        trial.push_back(u);
        if (fp::rank(trial, p) == static_cast<int>(trial.size())) w.push_back(u);
        if (w.size() == 2) break;
    }
    std::vector<fp::Vec3> lines;
    for (std::uint32_t c = 0; c < p; ++c) lines.push_back(fp::add(w[0], fp::scale(w[1], c, p), p));
    lines.push_back(w[1]);
    for (const auto& v : lines) {
        const std::vector<fp::Vec3> S{Q.one, v};
        if (fp::in_span(S, Q.product(v, v), p)) out.push_back(fp::reduced_basis(S, p));
    }
    if (include_improper) out.push_back({unit[0], unit[1], unit[2]});
    return out;
}

std::vector<Subalgebra> subalgebra_candidates(const QuotientAlgebra& Q) {
    std::vector<Subalgebra> out;
    for (auto& S : unital_subalgebras(Q, false)) {
        Subalgebra sub;
        std::vector<fp::Vec3> prod;
        for (const auto& a : Q.abar)
            for (const auto& s : S) prod.push_back(Q.product(a, s));
        sub.product_condition = fp::rank(prod, Q.p) == 3;
        std::vector<fp::Vec3> surj = S;
        surj.insert(surj.end(), Q.bjm.begin(), Q.bjm.end());
        sub.surjective_condition = fp::rank(surj, Q.p) == 3;
        sub.basis = std::move(S);
        out.push_back(std::move(sub));
    }
    return out;
}

Lattice subalgebra_preimage(const QuotientAlgebra& Q, const std::vector<fp::Vec3>& S) {
    std::vector<Element> g;
    for (const auto& s : S) g.push_back(Q.lift(s));
    const Series t = Q.base.alg().t_power(1);
    for (const auto& col : Q.base.columns()) g.push_back(t * col);
    return Lattice::from_generators(Q.base.algebra(), g);
}

std::vector<Lattice> procedure_step(const Lattice& B, int m, ProcedureStats* stats) {
    if (m < 1) throw PreconditionError("procedure_step needs m >= 1");
    const auto& alg = B.algebra();
    if (!is_order(B)) throw PreconditionError("procedure_step expects an order");
    if (B.contains(make_Am(alg, m - 1)))
        throw PreconditionError("B is already an over-ring of A_" + std::to_string(m - 1));
    const QuotientAlgebra Q = quotient_algebra(B, m);
    std::vector<Lattice> out;
    for (const auto& sub : subalgebra_candidates(Q)) {
        if (stats) {
            ++stats->candidates;
            if (sub.product_condition != sub.surjective_condition) ++stats->condition_disagreements;
        }
        if (sub.product_condition) out.push_back(subalgebra_preimage(Q, sub.basis));
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Lattice> base_overrings(const AlgebraPtr& alg) {
    const QuotientAlgebra Q = residue_algebra(Lattice::maximal(alg));
    std::set<Lattice> out;
    for (const auto& S : unital_subalgebras(Q, true)) out.insert(subalgebra_preimage(Q, S));
    return {out.begin(), out.end()};
}

std::vector<Lattice> iterate_procedure(const AlgebraPtr& alg, int m, ProcedureStats* stats) {
    require_enumeration_precision(*alg, m);
    const Lattice A = Lattice::maximal(alg);
    if (m == 0) return {A};
    const auto base = base_overrings(alg);
    std::set<Lattice> all(base.begin(), base.end());
    std::vector<Lattice> frontier;
    for (const auto& B : base)
        if (!(B == A)) frontier.push_back(B);
    for (int j = 1; j < m; ++j) {
        std::set<Lattice> next;
        for (const auto& B : frontier)
            for (auto& C : procedure_step(B, j, stats)) next.insert(std::move(C));
        all.insert(next.begin(), next.end());
        frontier.assign(next.begin(), next.end());
    }
    return {all.begin(), all.end()};
}

std::vector<FamilyDescriptor> enumerate_overrings_closed(const AlgebraPtr& alg, int m) {
    require_enumeration_precision(*alg, m);
    return enumerate_descriptors(alg->branch_case(), alg->p(), m);
}

std::vector<Lattice> closed_form_lattices(const AlgebraPtr& alg, int m) {
    std::vector<Lattice> out;
    for (const auto& d : enumerate_overrings_closed(alg, m)) out.push_back(make_family(alg, d));
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Lattice> brute_force_overrings(const AlgebraPtr& alg, int m, bool enforce_envelope) {
    if (enforce_envelope && (alg->p() > 7 || m > 3))
        throw EnvelopeError("brute-force over-ring scan is limited to p <= 7 and m <= 3 (got p=" +
                            std::to_string(alg->p()) + ", m=" + std::to_string(m) + ")");
    if (m < 0) throw PreconditionError("m must be non-negative");
    require_enumeration_precision(*alg, m);
    // Every order M ⊇ A_m is D·1 ⊕ N with t^m(Db₁ ⊕ Db₂) ⊆ N ⊆ Db₁ ⊕ Db₂,
    // and N has an echelon basis t^{d1}·b₁, c·b₁ + t^{d2}·b₂ with deg c < d1.
    const std::uint32_t p = alg->p();
    const Element b1 = alg->basis(1), b2 = alg->basis(2);
    std::set<Lattice> out;
    for (int d1 = 0; d1 <= m; ++d1) {
        std::size_t count = 1;
        for (int i = 0; i < d1; ++i) count *= p;
        for (int d2 = 0; d2 <= m; ++d2)
            for (std::size_t idx = 0; idx < count; ++idx) {
                std::vector<std::int64_t> coeffs;
                for (std::size_t x = idx; coeffs.size() < static_cast<std::size_t>(d1); x /= p)
                    coeffs.push_back(static_cast<std::int64_t>(x % p));
                const Series c = Series::from_coeffs(alg->config(), coeffs);
                std::vector<Element> g{alg->one(), alg->t_power(d1) * b1, c * b1 + alg->t_power(d2) * b2};
                for (int i = 0; i < 3; ++i) g.push_back(alg->t_power(m) * alg->basis(i));
                Lattice M = Lattice::from_generators(alg, g);
                if (is_order(M)) out.insert(std::move(M));
            }
    }
    return {out.begin(), out.end()};
}

void require_enumeration_precision(const CubicAlgebra& alg, int m) {
    if (alg.prec() < 2 * m + 2)
        throw PrecisionError("enumeration at m=" + std::to_string(m) + " needs precision >= " +
                             std::to_string(2 * m + 2) + ", have " + std::to_string(alg.prec()));
}

} // namespace cubic

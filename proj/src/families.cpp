#include "cubic/families.hpp"

#include <algorithm>
#include <sstream>

#include "cubic/errors.hpp"

namespace cubic {

namespace {

Series poly(const RingConfig& cfg, const std::vector<std::uint32_t>& a) {
    std::vector<std::int64_t> c(a.begin(), a.end());
    return Series::from_coeffs(cfg, c);
}

/// Every vector of `len` residues with the first digit restricted to `first`.
std::vector<std::vector<std::uint32_t>> digit_vectors(std::uint32_t p, int len,
                                                      const std::vector<std::uint32_t>& first) {
    std::vector<std::vector<std::uint32_t>> out;
    if (len <= 0) return {{}};
    std::vector<std::uint32_t> cur(static_cast<std::size_t>(len), 0);
    for (std::uint32_t f : first) {
        cur.assign(static_cast<std::size_t>(len), 0);
        cur[0] = f;
        while (true) {
            out.push_back(cur);
            int i = len - 1;
            while (i >= 1 && cur[static_cast<std::size_t>(i)] == p - 1) cur[static_cast<std::size_t>(i--)] = 0;
            if (i < 1) break;
            ++cur[static_cast<std::size_t>(i)];
        }
    }
    return out;
}

std::vector<std::uint32_t> range_from(std::uint32_t lo, std::uint32_t p) {
    std::vector<std::uint32_t> v;
    for (std::uint32_t x = lo; x < p; ++x) v.push_back(x);
    return v;
}

[[noreturn]] void invalid(const std::string& msg) { throw InvalidDescriptorError(msg); }

/// Structural checks shared by raw and canonical descriptors.
void check_structure(const FamilyDescriptor& d, std::uint32_t p) {
    if (d.kind != FamilyKind::ShiftedC) {
        if (d.m < (d.kind == FamilyKind::Jm ? 1 : 0)) invalid("m out of range");
        return;
    }
    if (d.k < 0 || d.r < 0 || d.l < 0 || d.q < 0) invalid("negative subscript");
    const BranchCase c = d.branch_case;
    const bool has_r = c == BranchCase::OneBranchRamified || c == BranchCase::OneBranchUnramified;
    const bool has_lq = c == BranchCase::TwoBranchesUnramified || c == BranchCase::ThreeBranches;
    if (has_r && d.shape != FamilyShape::R) invalid(case_code(c) + " rings are indexed by a single subscript");
    if (has_lq && d.shape != FamilyShape::LQ) invalid(case_code(c) + " rings are indexed by (l, q)");
    if (d.chart != 0 && d.chart != 1) invalid("chart must be 0 or 1");
    if (d.chart == 1) {
        const bool ok = (c == BranchCase::OneBranchUnramified && d.r >= 1) ||
                        (c == BranchCase::TwoBranchesUnramified && d.l >= 1 && d.q == 0);
        if (!ok) invalid("second chart only exists for 1u with r >= 1 and 2u with l >= 1, q = 0");
    }
    for (auto x : d.a)
        if (x >= p) invalid("parameter digits must be reduced mod p");
    const auto unit_first = [&](const char* what) {
        if (d.a.empty() || d.a[0] == 0) invalid(std::string(what) + ": a must be a unit");
    };
    if (c == BranchCase::TwoBranchesRamified && d.shape == FamilyShape::LQ && d.l >= 1)
        unit_first("C_{l,q} with l >= 1");
    if (c == BranchCase::TwoBranchesUnramified && d.l >= 1 && d.chart == 0) unit_first("C_{l,q} with l >= 1");
    if (c == BranchCase::ThreeBranches && d.l >= 1) {
        unit_first("C_{l,q} with l >= 1");
        if (d.q == 0 && d.a[0] == 1) invalid("three branches with q = 0 require a != 1 (mod t)");
        if (d.e < 0 || d.e > 2 || d.e_prime < 0 || d.e_prime > 2 || d.e == d.e_prime)
            invalid("three branches need two distinct idempotent indices in 0..2");
    }
    if (c == BranchCase::ThreeBranches && d.l == 0 && d.q > 0 && (d.e < 0 || d.e > 2))
        invalid("decomposable three-branch ring needs an idempotent index in 0..2");
}

} // namespace

std::string to_string(const FamilyDescriptor& d) {
    std::ostringstream os;
    os << case_code(d.branch_case) << ' ';
    if (d.kind == FamilyKind::Am) return os.str() + "A_" + std::to_string(d.m);
    if (d.kind == FamilyKind::Jm) return os.str() + "J_" + std::to_string(d.m);
    if (d.k) os << "t^" << d.k << "*";
    if (d.shape == FamilyShape::R)
        os << "C_" << d.r;
    else
        os << "C_{" << d.l << ',' << d.q << '}';
    if (d.chart) os << " chart=1";
    if (d.e >= 0) os << " e=" << d.e;
    if (d.e_prime >= 0) os << " e'=" << d.e_prime;
    os << " a=[";
    for (std::size_t i = 0; i < d.a.size(); ++i) os << (i ? "," : "") << d.a[i];
    os << ']';
    if (d.k) os << "+D";
    return os.str();
}

FamilyDescriptor maximal_descriptor(BranchCase c) {
    FamilyDescriptor d;
    d.branch_case = c;
    d.kind = FamilyKind::ShiftedC;
    d.shape = (c == BranchCase::OneBranchRamified || c == BranchCase::OneBranchUnramified) ? FamilyShape::R
                                                                                         : FamilyShape::LQ;
    return d;
}

FamilyDescriptor am_descriptor(BranchCase c, int m) {
    FamilyDescriptor d = maximal_descriptor(c);
    d.k = m;
    return d;
}

int family_conductor(const FamilyDescriptor& d) {
    switch (d.kind) {
    case FamilyKind::Am: return 0;
    case FamilyKind::Jm: return 0;
    case FamilyKind::ShiftedC: break;
    }
    switch (d.branch_case) {
    case BranchCase::OneBranchRamified: return d.r;
    case BranchCase::OneBranchUnramified: return 2 * d.r;
    case BranchCase::TwoBranchesRamified: return d.shape == FamilyShape::R ? 2 * d.r + 1 : 2 * d.l + d.q;
    case BranchCase::TwoBranchesUnramified:
    case BranchCase::ThreeBranches: return 2 * d.l + d.q;
    }
    return 0;
}

int family_middle_exponent(const FamilyDescriptor& d) {
    switch (d.branch_case) {
    case BranchCase::OneBranchRamified: return d.r / 2;
    case BranchCase::OneBranchUnramified: return d.r;
    case BranchCase::TwoBranchesRamified: return d.shape == FamilyShape::R ? d.r : d.l;
    case BranchCase::TwoBranchesUnramified:
    case BranchCase::ThreeBranches: return d.l;
    }
    return 0;
}

int residue_length(const FamilyDescriptor& d) {
    if (d.kind != FamilyKind::ShiftedC) return 0;
    switch (d.branch_case) {
    case BranchCase::OneBranchRamified: return d.r / 2;
    case BranchCase::OneBranchUnramified: return d.chart ? d.r - 1 : d.r;
    case BranchCase::TwoBranchesRamified: return d.shape == FamilyShape::R ? d.r : d.l;
    case BranchCase::TwoBranchesUnramified: return d.chart ? d.l - 1 : d.l;
    case BranchCase::ThreeBranches: return d.l;
    }
    return 0;
}

bool is_maximal_family(const FamilyDescriptor& d) {
    if (d.kind != FamilyKind::ShiftedC) return d.kind == FamilyKind::Am && d.m == 0;
    if (d.shape == FamilyShape::R) return d.r == 0 && d.branch_case != BranchCase::TwoBranchesRamified;
    return d.l == 0 && d.q == 0;
}

FamilyDescriptor unshifted(const FamilyDescriptor& d) {
    FamilyDescriptor u = d;
    if (u.kind == FamilyKind::Am) u = maximal_descriptor(d.branch_case);
    u.k = 0;
    return u;
}

int family_level(const FamilyDescriptor& d) {
    if (d.kind == FamilyKind::Am) return d.m;
    return d.k + family_conductor(d);
}

void validate(const FamilyDescriptor& d, std::uint32_t p) {
    check_structure(d, p);
    if (d.kind != FamilyKind::ShiftedC) return;
    if (static_cast<int>(d.a.size()) != residue_length(d))
        invalid("parameter must have exactly " + std::to_string(residue_length(d)) + " digits");
    if (d.branch_case == BranchCase::ThreeBranches) {
        if (d.l == 0) {
            if (d.e_prime != -1 || (d.q == 0 && d.e != -1))
                invalid("idempotent indices are not canonical for l = 0");
        } else if (d.q == 0) {
            if (d.e != 0 || d.e_prime != 1) invalid("q = 0 rings are normalized to (e, e') = (0, 1)");
        } else {
            const int expected = d.e == 0 ? 1 : 0;
            if (d.e_prime != expected) invalid("e' must be the smallest index different from e");
        }
    } else if (d.e != -1 || d.e_prime != -1) {
        invalid("idempotent indices only apply to three branches");
    }
}

Lattice make_Am(const AlgebraPtr& alg, int m) {
    if (m < 0) throw PreconditionError("A_m needs m >= 0");
    std::vector<Element> g{alg->one()};
    for (int i = 0; i < 3; ++i) g.push_back(alg->t_power(m) * alg->basis(i));
    return Lattice::from_generators(alg, g);
}

Lattice make_Jm(const AlgebraPtr& alg, int m) {
    if (m < 1) throw PreconditionError("J_m needs m >= 1");
    return make_Am(alg, m - 1).t_scaled(1);
}

Element family_beta(const CubicAlgebra& alg, const FamilyDescriptor& d) {
    const RingConfig& cfg = alg.config();
    const Series a = poly(cfg, d.a);
    const Series t = alg.t_power(1);
    const auto tq = alg.t_power(d.q);
    switch (d.branch_case) {
    case BranchCase::OneBranchRamified: {
        const Element tau = alg.tau(), tau2 = alg.mul(tau, tau);
        return d.r % 2 == 0 ? tau + a * tau2 : tau2 + (a * t) * tau;
    }
    case BranchCase::OneBranchUnramified: {
        const Element th = alg.theta(), th2 = alg.mul(th, th);
        return d.chart == 0 ? th + a * th2 : th2 + (a * t) * th;
    }
    case BranchCase::TwoBranchesRamified: {
        const Element e = alg.basis(0), tau = alg.basis(1);
        return d.shape == FamilyShape::R ? tau + (a * t) * e : e + (tq * a) * tau;
    }
    case BranchCase::TwoBranchesUnramified: {
        const Element e1 = alg.basis(0), th = alg.basis(1);
        return d.chart == 0 ? e1 + (tq * a) * th : (a * t) * e1 + th;
    }
    case BranchCase::ThreeBranches: {
        if (d.l == 0) return d.e < 0 ? alg.one() : alg.basis(d.e);
        return alg.basis(d.e) + (tq * a) * alg.basis(d.e_prime);
    }
    }
    return alg.zero();
}

Lattice make_family(const AlgebraPtr& alg, const FamilyDescriptor& d) {
    if (d.branch_case != alg->branch_case())
        throw ConfigError("descriptor case " + case_code(d.branch_case) + " does not match algebra case " +
                          case_code(alg->branch_case()));
    check_structure(d, alg->p());
    if (d.kind == FamilyKind::Am) return make_Am(alg, d.m);
    if (d.kind == FamilyKind::Jm) return make_Jm(alg, d.m);
    if (static_cast<int>(d.a.size()) > residue_length(d))
        invalid("parameter has more digits than its residue length");

    const int cond = family_conductor(d);
    const int s = family_middle_exponent(d);
    const Element beta = family_beta(*alg, d);
    if (d.branch_case == BranchCase::OneBranchUnramified && d.r > 0) {
        // 1, β, β² must span A/tA.
        const Element b2 = alg->mul(beta, beta);
        Lattice span = Lattice::from_generators(
            alg, {alg->one(), beta, b2, alg->t_power(1) * alg->basis(0), alg->t_power(1) * alg->basis(1),
                  alg->t_power(1) * alg->basis(2)});
        if (span.index_in_maximal() != 0) invalid("α² does not complete 1, α to a basis of A/tA");
    }
    std::vector<Element> g{alg->one(), alg->t_power(d.k + s) * beta};
    for (int i = 0; i < 3; ++i) g.push_back(alg->t_power(d.k + cond) * alg->basis(i));
    return Lattice::from_generators(alg, g);
}

FamilyDescriptor canonical_alpha(const AlgebraPtr& alg, FamilyDescriptor raw) {
    const std::uint32_t p = alg->p();
    if (raw.kind != FamilyKind::ShiftedC) {
        check_structure(raw, p);
        return raw;
    }
    if (raw.branch_case == BranchCase::ThreeBranches && raw.l == 0) {
        raw.e_prime = -1;
        if (raw.q == 0) raw.e = -1;
    }
    for (auto& x : raw.a) x %= p;
    raw.a.resize(static_cast<std::size_t>(std::max(residue_length(raw), 0)), 0);
    if (raw.branch_case == BranchCase::ThreeBranches && raw.l == 0) raw.a.clear();
    check_structure(raw, p);
    if (raw.branch_case != BranchCase::ThreeBranches || raw.l == 0) {
        validate(raw, p);
        return raw;
    }
    // Several idempotent pairs describe the same ring; let recognition pick.
    const int need = raw.k + family_conductor(raw) + 2;
    const AlgebraPtr work = alg->prec() >= need ? alg : alg->with_precision(need);
    return recognize(make_family(work, raw));
}

std::vector<FamilyDescriptor> descriptors_with_conductor(BranchCase c, std::uint32_t p, int cond) {
    std::vector<FamilyDescriptor> out;
    const std::vector<std::uint32_t> all = range_from(0, p), units = range_from(1, p),
                                     units_not_one = range_from(2, p);
    const auto emit = [&](FamilyDescriptor d, const std::vector<std::uint32_t>& first) {
        for (auto& a : digit_vectors(p, residue_length(d), first)) {
            d.a = a;
            out.push_back(d);
        }
    };
    FamilyDescriptor base = maximal_descriptor(c);
    switch (c) {
    case BranchCase::OneBranchRamified:
        base.r = cond;
        emit(base, all);
        break;
    case BranchCase::OneBranchUnramified:
        if (cond % 2) break;
        base.r = cond / 2;
        emit(base, all);
        if (base.r >= 1) {
            base.chart = 1;
            emit(base, all);
        }
        break;
    case BranchCase::TwoBranchesRamified:
        for (int l = 0; 2 * l <= cond; ++l) {
            FamilyDescriptor d = base;
            d.l = l;
            d.q = cond - 2 * l;
            emit(d, l ? units : all);
        }
        if (cond % 2) {
            FamilyDescriptor d = base;
            d.shape = FamilyShape::R;
            d.r = (cond - 1) / 2;
            emit(d, all);
        }
        break;
    case BranchCase::TwoBranchesUnramified:
        for (int l = 0; 2 * l <= cond; ++l) {
            FamilyDescriptor d = base;
            d.l = l;
            d.q = cond - 2 * l;
            emit(d, l ? units : all);
            if (l >= 1 && d.q == 0) {
                d.chart = 1;
                emit(d, all);
            }
        }
        break;
    case BranchCase::ThreeBranches:
        for (int l = 0; 2 * l <= cond; ++l) {
            FamilyDescriptor d = base;
            d.l = l;
            d.q = cond - 2 * l;
            if (l == 0) {
                if (d.q == 0) {
                    out.push_back(d);
                } else {
                    for (int e = 0; e < 3; ++e) {
                        d.e = e;
                        out.push_back(d);
                    }
                }
            } else if (d.q == 0) {
                d.e = 0;
                d.e_prime = 1;
                emit(d, units_not_one);
            } else {
                for (int e = 0; e < 3; ++e) {
                    d.e = e;
                    d.e_prime = e == 0 ? 1 : 0;
                    emit(d, units);
                }
            }
        }
        break;
    }
    return out;
}

std::vector<FamilyDescriptor> enumerate_descriptors(BranchCase c, std::uint32_t p, int m) {
    std::vector<FamilyDescriptor> out;
    for (int cond = 0; cond <= m; ++cond)
        for (auto d : descriptors_with_conductor(c, p, cond))
            for (int k = 0; k + cond <= m; ++k) {
                d.k = k;
                out.push_back(d);
            }
    std::sort(out.begin(), out.end());
    return out;
}

FamilyDescriptor recognize(const Lattice& M) {
    if (!is_order(M)) throw PreconditionError("recognize expects an order");
    const auto& alg = M.algebra();
    const Element one = alg->one();
    const auto& cols = M.columns();
    // Whether M ⊆ D + t^k·A. The first coordinate of 1 is 1 in
    // every basis, so the D-part of x is read off from x[0].
    const auto fits = [&](int k) {
        for (const auto& x : cols) {
            const Element y = x - x[0].truncated(k) * one;
            if (y.t_valuation() < k) return false;
        }
        return true;
    };
    // The same ring may sit inside D + t^k·A for several k (C_ρ ⊆ D + tA
    // for ρ ≥ 2), so every admissible split M = t^k·C + D is tried.
    const int cm = M.conductor_exponent();
    for (int k = 0; k <= cm && fits(k); ++k) {
        std::vector<Element> g{one};
        for (const auto& x : cols) g.push_back((x - x[0].truncated(k) * one).shifted_up(-k));
        for (int i = 0; i < 3; ++i) g.push_back(alg->t_power(cm - k) * alg->basis(i));
        const Lattice C = Lattice::from_generators(alg, g);
        if (C.conductor_exponent() != cm - k) continue;
        for (auto d : descriptors_with_conductor(alg->branch_case(), alg->p(), cm - k)) {
            if (make_family(alg, d) == C) {
                d.k = k;
                return d;
            }
        }
    }
    throw ClassificationError("no family descriptor matches the order " + M.to_string() + " (conductor " +
                              std::to_string(cm) + ")");
}

} // namespace cubic

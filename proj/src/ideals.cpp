#include "cubic/ideals.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <set>

#include "cubic/duality.hpp"
#include "cubic/errors.hpp"
#include "cubic/overrings.hpp"

namespace cubic {

bool is_ideal_of(const Lattice& C, const Lattice& M) {
    for (const auto& c : C.columns())
        for (const auto& m : M.columns())
            if (!M.contains(C.alg().mul(c, m))) return false;
    return true;
}

namespace {

void check_envelope(const Lattice& C, int w) {
    if (C.alg().p() > 13 || w > 3)
        throw EnvelopeError("ideal enumeration is limited to p <= 13 and window <= 3 (got p=" +
                            std::to_string(C.alg().p()) + ", w=" + std::to_string(w) + ")");
}

/// Every C-stable lattice between `start` and A. Each N ⊋ M contains some
/// M + C·x with x ∉ M, t·x ∈ M, so the search reaches all of them.
std::vector<Lattice> stable_lattices_above(const Lattice& C, const Lattice& start) {
    const auto& alg = C.algebra();
    const std::uint32_t p = alg->p();
    const std::vector<Element> t_gen{alg->scalar(alg->t_power(1))};
    std::set<Lattice> seen{start};
    std::deque<Lattice> queue{start};
    while (!queue.empty()) {
        const Lattice M = queue.front();
        queue.pop_front();
        const Lattice P = colon(M, t_gen);
        const auto& pc = P.columns();
        // Projective representatives: first nonzero coefficient equal to 1.
        for (const auto& v : fp::all_vectors(p)) {
            const auto first = std::find_if(v.begin(), v.end(), [](std::uint32_t x) { return x != 0; });
            if (first == v.end() || *first != 1) continue;
            Element x = alg->zero();
            for (std::size_t i = 0; i < 3; ++i)
                if (v[i]) x += alg->series(v[i]) * pc[i];
            if (M.contains(x)) continue;
            std::vector<Element> g(M.columns().begin(), M.columns().end());
            for (const auto& c : C.columns()) g.push_back(alg->mul(c, x));
            Lattice N = Lattice::from_generators(alg, g);
            if (seen.insert(N).second) queue.push_back(std::move(N));
        }
    }
    return {seen.begin(), seen.end()};
}

} // namespace

std::vector<Lattice> enumerate_ideal_lattices(const Lattice& C, int w, bool enforce_envelope) {
    if (enforce_envelope) check_envelope(C, w);
    if (w < 0) throw PreconditionError("window must be non-negative");
    const auto& alg = C.algebra();
    const Lattice bottom = Lattice::maximal(alg).t_scaled(w);
    if (!C.contains(bottom)) throw PreconditionError("window t^" + std::to_string(w) + "A is not inside C");
    if (!is_order(C)) throw PreconditionError("base must be an order");
    return stable_lattices_above(C, bottom);
}

std::vector<Lattice> enumerate_normalized_ideals(const Lattice& C) {
    if (!is_order(C)) throw PreconditionError("base must be an order");
    check_envelope(C, C.conductor_exponent());
    return stable_lattices_above(C, C);
}

bool is_isomorphic_ideals(const FractionalIdeal& a, const FractionalIdeal& b) {
    if (!(a.base == b.base)) throw PreconditionError("ideals of different orders");
    return is_isomorphic(a.module, b.module);
}

std::string tag_name(ClassTag t) {
    switch (t) {
    case ClassTag::Overring: return "over-ring";
    case ClassTag::Dual: return "dual";
    case ClassTag::Unexpected: return "UNEXPECTED";
    }
    return "?";
}

int ClassCensus::unexpected() const {
    return static_cast<int>(std::count_if(classes.begin(), classes.end(),
                                          [](const IdealClass& c) { return c.tag == ClassTag::Unexpected; }));
}

ClassCensus iso_classes(const Lattice& C, std::optional<int> window) {
    const std::vector<Lattice> ideals = window ? enumerate_ideal_lattices(C, *window) : enumerate_normalized_ideals(C);
    ClassCensus census{C, window, {}, static_cast<int>(ideals.size())};
    // The multiplier ring is an exact invariant, so only ideals sharing it
    // need a scaling search.
    std::map<Lattice, std::vector<std::size_t>> by_multiplier;
    for (const auto& M : ideals) {
        Lattice O = multiplier_ring(M);
        auto& bucket = by_multiplier[O];
        bool found = false;
        for (std::size_t idx : bucket) {
            if (is_isomorphic(census.classes[idx].representative, M)) {
                ++census.classes[idx].members;
                found = true;
                break;
            }
        }
        if (!found) {
            bucket.push_back(census.classes.size());
            census.classes.push_back(IdealClass{M, std::move(O), ClassTag::Unexpected, 1});
        }
    }
    for (auto& cls : census.classes) {
        // An over-ring B is its own multiplier ring, and so is B^∨.
        if (is_isomorphic(cls.representative, cls.multiplier))
            cls.tag = ClassTag::Overring;
        else if (is_isomorphic(cls.representative, trace_dual(cls.multiplier)))
            cls.tag = ClassTag::Dual;
    }
    return census;
}

std::optional<int> growth_degree(const std::vector<std::uint32_t>& xs, const std::vector<int>& ys) {
    if (xs.size() != ys.size() || xs.size() < 2) throw PreconditionError("growth fit needs at least two points");
    // Newton divided differences, exact over Q as (num, den) pairs.
    struct Q {
        long long num, den;
    };
    const auto reduce = [](Q q) {
        if (q.den < 0) q = {-q.num, -q.den};
        const long long g = std::gcd(q.num, q.den);
        return g ? Q{q.num / g, q.den / g} : q;
    };
    const std::size_t n = xs.size();
    std::vector<Q> dd;
    for (int y : ys) dd.push_back({y, 1});
    int degree = 0;
    for (std::size_t j = 1; j < n; ++j) {
        for (std::size_t i = n - 1; i >= j; --i) {
            const long long dx = static_cast<long long>(xs[i]) - static_cast<long long>(xs[i - j]);
            if (dx == 0) throw PreconditionError("growth fit needs distinct points");
            dd[i] = reduce({dd[i].num * dd[i - 1].den - dd[i - 1].num * dd[i].den, dd[i].den * dd[i - 1].den * dx});
        }
        if (dd[j].num != 0) degree = static_cast<int>(j);
    }
    if (degree >= static_cast<int>(n) - 1) return std::nullopt;
    return degree;
}

ParEstimate par_estimate(const FamilyDescriptor& d, const std::vector<std::uint32_t>& primes) {
    if (d.branch_case == BranchCase::OneBranchUnramified || d.branch_case == BranchCase::TwoBranchesUnramified)
        throw PreconditionError("par_estimate is stated for the ramified and three-branch cases only");
    ParEstimate est;
    est.primes = primes;
    const int level = family_level(d);
    for (std::uint32_t p : primes) {
        const auto alg = CubicAlgebra::make(d.branch_case, RingConfig::make(p, default_precision(level + 1)));
        FamilyDescriptor dp = d;
        if (d.kind == FamilyKind::ShiftedC) dp = canonical_alpha(alg, d);
        const Lattice C = make_family(alg, dp);
        est.counts.push_back(static_cast<int>(iso_classes(C).classes.size()));
    }
    est.degree = growth_degree(primes, est.counts);
    est.note = est.degree ? "degree of class-count growth in p"
                          : "inconclusive: the interpolating polynomial uses every point";
    return est;
}

} // namespace cubic

#pragma once

/**
 * @file algebra.hpp
 * @brief The five maximal cubic orders A over D with a fixed D-basis.
 *
 * | case | basis        | relations                                  |
 * |------|--------------|--------------------------------------------|
 * | 1r   | 1, τ, τ²     | τ³ = t                                     |
 * | 1u   | 1, θ, θ²     | f(θ) = 0, f cubic irreducible mod t        |
 * | 2r   | e, τ, e′     | e, e′ orthogonal idempotents, τ² = t·e     |
 * | 2u   | e₁, θ, e′    | f(θ) = 0 in e₁A, f quadratic irreducible   |
 * | 3    | e₁, e₂, e₃   | orthogonal idempotents                     |
 *
 * Branches are always reported in the order of the table's basis.
 */

#include <array>
#include <memory>
#include <string>
#include <vector>

#include "cubic/series.hpp"

namespace cubic {

enum class BranchCase {
    OneBranchRamified,
    OneBranchUnramified,
    TwoBranchesRamified,
    TwoBranchesUnramified,
    ThreeBranches,
};

inline constexpr std::array<BranchCase, 5> kAllCases = {
    BranchCase::OneBranchRamified, BranchCase::OneBranchUnramified,
    BranchCase::TwoBranchesRamified, BranchCase::TwoBranchesUnramified,
    BranchCase::ThreeBranches};

/// Short code used by the CLI: 1r, 1u, 2r, 2u, 3.
std::string case_code(BranchCase c);
std::string case_name(BranchCase c);
/// Accepts either the short code or the full name.
BranchCase parse_case(const std::string& s);
int branch_count(BranchCase c);
bool is_ramified(BranchCase c);

/// Coordinates with respect to the fixed basis of A.
struct Element {
    std::array<Series, 3> c;

    explicit Element(const RingConfig& cfg) : c{Series(cfg), Series(cfg), Series(cfg)} {}
    Element(Series a, Series b, Series d) : c{std::move(a), std::move(b), std::move(d)} {}

    const Series& operator[](int i) const { return c[static_cast<std::size_t>(i)]; }
    Series& operator[](int i) { return c[static_cast<std::size_t>(i)]; }
    const RingConfig& config() const { return c[0].config(); }

    bool is_zero() const { return c[0].is_zero() && c[1].is_zero() && c[2].is_zero(); }
    /// Minimum coordinate valuation (the largest j with x ∈ t^j A).
    int t_valuation() const;

    Element& operator+=(const Element& o);
    Element& operator-=(const Element& o);
    friend Element operator+(Element a, const Element& b) { return a += b; }
    friend Element operator-(Element a, const Element& b) { return a -= b; }
    Element operator-() const { return Element(-c[0], -c[1], -c[2]); }
    /// Scalar multiplication by an element of D.
    friend Element operator*(const Series& s, const Element& x) {
        return Element(s * x.c[0], s * x.c[1], s * x.c[2]);
    }
    Element shifted_up(int k) const {
        return Element(c[0].shifted_up(k), c[1].shifted_up(k), c[2].shifted_up(k));
    }

    friend bool operator==(const Element&, const Element&) = default;
    friend bool operator<(const Element& a, const Element& b) { return a.c < b.c; }
};

class CubicAlgebra;
using AlgebraPtr = std::shared_ptr<const CubicAlgebra>;

class CubicAlgebra {
public:
    /// `min_poly` is the monic minimal polynomial of θ, lowest degree
    /// first including the leading 1 (unramified cases only). Empty picks
    /// the default: the lexicographically smallest irreducible polynomial
    /// when its coefficients are read from the highest non-leading degree.
    static AlgebraPtr make(BranchCase c, const RingConfig& cfg,
                           std::vector<std::int64_t> min_poly = {});

    /// The same algebra at another precision.
    AlgebraPtr with_precision(int prec) const;

    const RingConfig& config() const { return cfg_; }
    int prec() const { return cfg_.prec; }
    std::uint32_t p() const { return cfg_.p; }
    BranchCase branch_case() const { return case_; }
    int branches() const { return branch_count(case_); }
    const std::vector<std::uint32_t>& min_poly() const { return f_; }
    std::string basis_name(int i) const;

    Element zero() const { return Element(cfg_); }
    Element one() const { return one_; }
    Element basis(int i) const;
    /// s·1 for s ∈ D.
    Element scalar(const Series& s) const { return s * one_; }
    Series series(std::int64_t c, int deg = 0) const { return Series::monomial(cfg_, c, deg); }
    Series t_power(int k) const { return Series::monomial(cfg_, 1, k); }

    /// Uniformizer τ (ramified cases).
    Element tau() const;
    /// Residue generator θ (unramified cases).
    Element theta() const;
    /// Primitive idempotents in branch order (multi-branch cases; the
    /// single idempotent 1 otherwise).
    std::vector<Element> idempotents() const;

    Element mul(const Element& x, const Element& y) const;
    Element pow(const Element& x, int n) const;
    Series trace(const Element& x) const;
    /// Branch valuations in branch order; kInfinity marks a zero component.
    std::vector<int> multival(const Element& x) const;
    bool is_unit(const Element& x) const;

    /// Gram matrix Tr(b_i b_j) of the trace form on the basis.
    std::array<std::array<Series, 3>, 3> gram() const;
    int discriminant_valuation() const;
    /// 2 for 1r, 1 for 2r, 0 otherwise.
    int expected_discriminant_valuation() const;

    friend bool operator==(const CubicAlgebra& a, const CubicAlgebra& b) {
        return a.case_ == b.case_ && a.cfg_ == b.cfg_ && a.f_ == b.f_;
    }

private:
    struct Term {
        std::uint32_t coef;
        int shift;
    };

    CubicAlgebra(BranchCase c, const RingConfig& cfg, std::vector<std::uint32_t> f);
    void build_tables();

    BranchCase case_;
    RingConfig cfg_;
    std::vector<std::uint32_t> f_;
    Element one_;
    // product b_i b_j = sum_k table_[i][j][k] b_k, each entry a sum of c·t^s.
    std::array<std::array<std::array<std::vector<Term>, 3>, 3>, 3> table_;
    std::array<Series, 3> trace_basis_;
};

/// Smallest monic irreducible polynomial of degree 2 or 3 over F_p.
std::vector<std::uint32_t> default_min_poly(std::uint32_t p, int degree);
bool has_root_mod_p(const std::vector<std::uint32_t>& monic, std::uint32_t p);

} // namespace cubic

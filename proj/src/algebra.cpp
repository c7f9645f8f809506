#include "cubic/algebra.hpp"

#include <algorithm>

#include "cubic/errors.hpp"

namespace cubic {

std::string case_code(BranchCase c) {
    switch (c) {
    case BranchCase::OneBranchRamified: return "1r";
    case BranchCase::OneBranchUnramified: return "1u";
    case BranchCase::TwoBranchesRamified: return "2r";
    case BranchCase::TwoBranchesUnramified: return "2u";
    case BranchCase::ThreeBranches: return "3";
    }
    return "?";
}

std::string case_name(BranchCase c) {
    switch (c) {
    case BranchCase::OneBranchRamified: return "OneBranchRamified";
    case BranchCase::OneBranchUnramified: return "OneBranchUnramified";
    case BranchCase::TwoBranchesRamified: return "TwoBranchesRamified";
    case BranchCase::TwoBranchesUnramified: return "TwoBranchesUnramified";
    case BranchCase::ThreeBranches: return "ThreeBranches";
    }
    return "?";
}

BranchCase parse_case(const std::string& s) {
    for (auto c : kAllCases)
        if (s == case_code(c) || s == case_name(c)) return c;
    throw ConfigError("unknown branch case '" + s + "' (expected 1r, 1u, 2r, 2u or 3)");
}

int branch_count(BranchCase c) {
    switch (c) {
    case BranchCase::OneBranchRamified:
    case BranchCase::OneBranchUnramified: return 1;
    case BranchCase::TwoBranchesRamified:
    case BranchCase::TwoBranchesUnramified: return 2;
    case BranchCase::ThreeBranches: return 3;
    }
    return 0;
}

bool is_ramified(BranchCase c) {
    return c == BranchCase::OneBranchRamified || c == BranchCase::TwoBranchesRamified;
}

int Element::t_valuation() const {
    return std::min({c[0].valuation(), c[1].valuation(), c[2].valuation()});
}

Element& Element::operator+=(const Element& o) {
    for (std::size_t i = 0; i < 3; ++i) c[i] += o.c[i];
    return *this;
}

Element& Element::operator-=(const Element& o) {
    for (std::size_t i = 0; i < 3; ++i) c[i] -= o.c[i];
    return *this;
}

bool has_root_mod_p(const std::vector<std::uint32_t>& f, std::uint32_t p) {
    for (std::uint64_t x = 0; x < p; ++x) {
        std::uint64_t v = 0;
        for (auto it = f.rbegin(); it != f.rend(); ++it) v = (v * x + *it) % p;
        if (v == 0) return true;
    }
    return false;
}

std::vector<std::uint32_t> default_min_poly(std::uint32_t p, int degree) {
    if (degree != 2 && degree != 3) throw ConfigError("minimal polynomial degree must be 2 or 3");
    // Non-leading coefficients read from the highest degree down.
    std::vector<std::uint32_t> digits(static_cast<std::size_t>(degree), 0);
    while (true) {
        std::vector<std::uint32_t> f(static_cast<std::size_t>(degree) + 1);
        for (int i = 0; i < degree; ++i)
            f[static_cast<std::size_t>(i)] = digits[static_cast<std::size_t>(degree - 1 - i)];
        f.back() = 1;
        // Degree <= 3: irreducible iff no root.
        if (!has_root_mod_p(f, p)) return f;
        int pos = degree - 1;
        while (pos >= 0 && ++digits[static_cast<std::size_t>(pos)] == p) {
            digits[static_cast<std::size_t>(pos)] = 0;
            --pos;
        }
        if (pos < 0) throw ConfigError("no irreducible polynomial found");
    }
}

AlgebraPtr CubicAlgebra::make(BranchCase c, const RingConfig& cfg, std::vector<std::int64_t> min_poly) {
    std::vector<std::uint32_t> f;
    const bool unramified =
        c == BranchCase::OneBranchUnramified || c == BranchCase::TwoBranchesUnramified;
    if (unramified) {
        const int degree = c == BranchCase::OneBranchUnramified ? 3 : 2;
        if (min_poly.empty()) {
            f = default_min_poly(cfg.p, degree);
        } else {
            if (static_cast<int>(min_poly.size()) != degree + 1 || mod_p(min_poly.back(), cfg.p) != 1)
                throw ConfigError("minimal polynomial must be monic of degree " + std::to_string(degree));
            for (auto x : min_poly) f.push_back(mod_p(x, cfg.p));
            if (has_root_mod_p(f, cfg.p))
                throw ConfigError("minimal polynomial is reducible modulo p");
        }
    } else if (!min_poly.empty()) {
        throw ConfigError("a minimal polynomial is only meaningful in unramified cases");
    }
    auto alg = std::shared_ptr<CubicAlgebra>(new CubicAlgebra(c, cfg, std::move(f)));
    const int expected = alg->expected_discriminant_valuation();
    if (expected < cfg.prec && alg->discriminant_valuation() != expected)
        throw ConfigError("trace form discriminant has unexpected valuation");
    return alg;
}

AlgebraPtr CubicAlgebra::with_precision(int prec) const {
    std::vector<std::int64_t> f(f_.begin(), f_.end());
    return make(case_, RingConfig::make(cfg_.p, prec), f);
}

CubicAlgebra::CubicAlgebra(BranchCase c, const RingConfig& cfg, std::vector<std::uint32_t> f)
    : case_(c), cfg_(cfg), f_(std::move(f)), one_(cfg),
      trace_basis_{Series(cfg), Series(cfg), Series(cfg)} {
    build_tables();
}

void CubicAlgebra::build_tables() {
    const std::uint32_t p = cfg_.p;
    auto set = [&](int i, int j, int k, std::uint32_t coef, int shift) {
        if (coef % p == 0) return;
        table_[i][j][k].push_back(Term{coef % p, shift});
        if (i != j) table_[j][i][k].push_back(Term{coef % p, shift});
    };
    auto neg = [&](std::uint32_t x) { return (p - x % p) % p; };

    switch (case_) {
    case BranchCase::OneBranchRamified:
        // τ^n for n = i + j; τ³ = t.
        for (int i = 0; i < 3; ++i)
            for (int j = i; j < 3; ++j) set(i, j, (i + j) % 3, 1, (i + j) / 3);
        one_[0] = Series::constant(cfg_, 1);
        break;
    case BranchCase::OneBranchUnramified: {
        // Powers θ^0..θ^4 reduced by f as coefficient vectors over F_p.
        std::array<std::array<std::uint32_t, 3>, 5> pw{};
        pw[0] = {1, 0, 0};
        pw[1] = {0, 1, 0};
        pw[2] = {0, 0, 1};
        for (int n = 3; n < 5; ++n) {
            // θ·(a + bθ + cθ²) = aθ + bθ² + c(−f0 − f1θ − f2θ²)
            const auto& prev = pw[static_cast<std::size_t>(n - 1)];
            std::uint64_t cc = prev[2];
            pw[static_cast<std::size_t>(n)] = {
                static_cast<std::uint32_t>(cc * neg(f_[0]) % p),
                static_cast<std::uint32_t>((prev[0] + cc * neg(f_[1])) % p),
                static_cast<std::uint32_t>((prev[1] + cc * neg(f_[2])) % p)};
        }
        for (int i = 0; i < 3; ++i)
            for (int j = i; j < 3; ++j)
                for (int k = 0; k < 3; ++k)
                    set(i, j, k, pw[static_cast<std::size_t>(i + j)][static_cast<std::size_t>(k)], 0);
        one_[0] = Series::constant(cfg_, 1);
        break;
    }
    case BranchCase::TwoBranchesRamified:
        // basis (e, τ, e′)
        set(0, 0, 0, 1, 0);
        set(0, 1, 1, 1, 0);
        set(1, 1, 0, 1, 1);
        set(2, 2, 2, 1, 0);
        one_[0] = Series::constant(cfg_, 1);
        one_[2] = Series::constant(cfg_, 1);
        break;
    case BranchCase::TwoBranchesUnramified:
        // basis (e₁, θ, e′), θ² = −f0·e₁ − f1·θ
        set(0, 0, 0, 1, 0);
        set(0, 1, 1, 1, 0);
        set(1, 1, 0, neg(f_[0]), 0);
        set(1, 1, 1, neg(f_[1]), 0);
        set(2, 2, 2, 1, 0);
        one_[0] = Series::constant(cfg_, 1);
        one_[2] = Series::constant(cfg_, 1);
        break;
    case BranchCase::ThreeBranches:
        for (int i = 0; i < 3; ++i) {
            set(i, i, i, 1, 0);
            one_[i] = Series::constant(cfg_, 1);
        }
        break;
    }

    for (int k = 0; k < 3; ++k) {
        Series tr(cfg_);
        for (int i = 0; i < 3; ++i)
            for (const auto& term : table_[k][i][i])
                tr += Series::monomial(cfg_, term.coef, term.shift);
        trace_basis_[static_cast<std::size_t>(k)] = tr;
    }
}

std::string CubicAlgebra::basis_name(int i) const {
    static const char* names[5][3] = {{"1", "tau", "tau^2"},
                                      {"1", "theta", "theta^2"},
                                      {"e", "tau", "e'"},
                                      {"e1", "theta", "e'"},
                                      {"e1", "e2", "e3"}};
    return names[static_cast<int>(case_)][i];
}

Element CubicAlgebra::basis(int i) const {
    Element x(cfg_);
    x[i] = Series::constant(cfg_, 1);
    return x;
}

Element CubicAlgebra::tau() const {
    if (!is_ramified(case_)) throw PreconditionError("tau exists only in ramified cases");
    return basis(1);
}

Element CubicAlgebra::theta() const {
    if (case_ != BranchCase::OneBranchUnramified && case_ != BranchCase::TwoBranchesUnramified)
        throw PreconditionError("theta exists only in unramified cases");
    return basis(1);
}

std::vector<Element> CubicAlgebra::idempotents() const {
    switch (case_) {
    case BranchCase::TwoBranchesRamified:
    case BranchCase::TwoBranchesUnramified: return {basis(0), basis(2)};
    case BranchCase::ThreeBranches: return {basis(0), basis(1), basis(2)};
    default: return {one_};
    }
}

Element CubicAlgebra::mul(const Element& x, const Element& y) const {
    if (!(x.config() == cfg_) || !(y.config() == cfg_))
        throw ConfigError("element does not belong to this algebra");
    Element z(cfg_);
    for (int i = 0; i < 3; ++i) {
        if (x[i].is_zero()) continue;
        for (int j = 0; j < 3; ++j) {
            if (y[j].is_zero()) continue;
            bool any = false;
            for (int k = 0; k < 3 && !any; ++k) any = !table_[i][j][k].empty();
            if (!any) continue;
            const Series prod = x[i] * y[j];
            for (int k = 0; k < 3; ++k)
                for (const auto& term : table_[i][j][k])
                    z[k] += prod.shifted_up(term.shift).scaled(term.coef);
        }
    }
    return z;
}

Element CubicAlgebra::pow(const Element& x, int n) const {
    Element r = one_;
    for (int i = 0; i < n; ++i) r = mul(r, x);
    return r;
}

Series CubicAlgebra::trace(const Element& x) const {
    Series s(cfg_);
    for (int k = 0; k < 3; ++k) s += x[k] * trace_basis_[static_cast<std::size_t>(k)];
    return s;
}

namespace {
int scaled_val(int v, int e, int offset) { return v == kInfinity ? kInfinity : e * v + offset; }
} // namespace

std::vector<int> CubicAlgebra::multival(const Element& x) const {
    const int v0 = x[0].valuation(), v1 = x[1].valuation(), v2 = x[2].valuation();
    switch (case_) {
    case BranchCase::OneBranchRamified:
        return {std::min({scaled_val(v0, 3, 0), scaled_val(v1, 3, 1), scaled_val(v2, 3, 2)})};
    case BranchCase::OneBranchUnramified: return {std::min({v0, v1, v2})};
    case BranchCase::TwoBranchesRamified:
        return {std::min(scaled_val(v0, 2, 0), scaled_val(v1, 2, 1)), v2};
    case BranchCase::TwoBranchesUnramified: return {std::min(v0, v1), v2};
    case BranchCase::ThreeBranches: return {v0, v1, v2};
    }
    return {};
}

bool CubicAlgebra::is_unit(const Element& x) const {
    const auto v = multival(x);
    return std::all_of(v.begin(), v.end(), [](int a) { return a == 0; });
}

std::array<std::array<Series, 3>, 3> CubicAlgebra::gram() const {
    std::array<std::array<Series, 3>, 3> g{{{Series(cfg_), Series(cfg_), Series(cfg_)},
                                             {Series(cfg_), Series(cfg_), Series(cfg_)},
                                             {Series(cfg_), Series(cfg_), Series(cfg_)}}};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            g[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = trace(mul(basis(i), basis(j)));
    return g;
}

int CubicAlgebra::discriminant_valuation() const {
    const auto g = gram();
    const Series det = g[0][0] * (g[1][1] * g[2][2] - g[1][2] * g[2][1]) -
                       g[0][1] * (g[1][0] * g[2][2] - g[1][2] * g[2][0]) +
                       g[0][2] * (g[1][0] * g[2][1] - g[1][1] * g[2][0]);
    return det.valuation();
}

int CubicAlgebra::expected_discriminant_valuation() const {
    switch (case_) {
    case BranchCase::OneBranchRamified: return 2;
    case BranchCase::TwoBranchesRamified: return 1;
    default: return 0;
    }
}

} // namespace cubic

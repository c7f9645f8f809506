#include "cubic/lattice.hpp"

#include <sstream>

#include "cubic/errors.hpp"

namespace cubic {

namespace {

bool vec_is_zero(const Vec& v) {
    for (const auto& s : v)
        if (!s.is_zero()) return false;
    return true;
}

void axpy(Vec& y, const Series& a, const Vec& x) {
    for (std::size_t i = 0; i < y.size(); ++i) y[i] -= a * x[i];
}

Vec to_vec(const Element& x) { return Vec{x[0], x[1], x[2]}; }

std::vector<int> residue_degrees(BranchCase c) {
    switch (c) {
    case BranchCase::OneBranchRamified: return {1};
    case BranchCase::OneBranchUnramified: return {3};
    case BranchCase::TwoBranchesRamified: return {1, 1};
    case BranchCase::TwoBranchesUnramified: return {2, 1};
    case BranchCase::ThreeBranches: return {1, 1, 1};
    }
    return {};
}

} // namespace

Echelon howell_echelon(std::vector<Vec> gens, int n, const RingConfig& cfg) {
    const int N = cfg.prec;
    Echelon out;
    out.pivot.assign(static_cast<std::size_t>(n), std::nullopt);
    out.degree.assign(static_cast<std::size_t>(n), N);

    std::vector<Vec> pool;
    pool.reserve(gens.size() + static_cast<std::size_t>(n));
    for (auto& g : gens)
        if (!vec_is_zero(g)) pool.push_back(std::move(g));

    for (int i = n - 1; i >= 0; --i) {
        const auto row = static_cast<std::size_t>(i);
        std::size_t best = pool.size();
        int best_val = kInfinity;
        for (std::size_t j = 0; j < pool.size(); ++j) {
            const int v = pool[j][row].valuation();
            if (v < best_val) {
                best_val = v;
                best = j;
            }
        }
        if (best == pool.size()) continue;

        Vec g = std::move(pool[best]);
        pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(best));
        const int d = best_val;
        const Series unit_inv = g[row].shifted_down(d).inverse();
        for (auto& s : g) s = unit_inv * s;

        for (auto& h : pool) {
            if (h[row].is_zero()) continue;
            const Series q = h[row].shifted_down(d);
            axpy(h, q, g);
        }
        // Howell closure: t^{N-d}·g vanishes in row i but not necessarily above.
        if (d > 0) {
            Vec extra(g.size(), Series(cfg));
            for (std::size_t k = 0; k < g.size(); ++k) extra[k] = g[k].shifted_up(N - d);
            if (!vec_is_zero(extra)) pool.push_back(std::move(extra));
        }
        std::erase_if(pool, vec_is_zero);
        out.pivot[row] = std::move(g);
        out.degree[row] = d;
    }

    // Reduce entries above each pivot modulo that pivot.
    for (int j = 0; j < n; ++j) {
        auto& col = out.pivot[static_cast<std::size_t>(j)];
        if (!col) continue;
        for (int i = j - 1; i >= 0; --i) {
            const auto& piv = out.pivot[static_cast<std::size_t>(i)];
            if (!piv) continue;
            const int d = out.degree[static_cast<std::size_t>(i)];
            const Series q = (*col)[static_cast<std::size_t>(i)].shifted_down(d);
            if (!q.is_zero()) axpy(*col, q, *piv);
        }
    }
    return out;
}

Lattice::Lattice(AlgebraPtr alg, std::array<Element, 3> cols, std::array<int, 3> piv)
    : alg_(std::move(alg)), cols_(std::move(cols)), piv_(piv) {
    key_.reserve(static_cast<std::size_t>(9 * alg_->prec() + 3));
    for (int d : piv_) key_.push_back(static_cast<std::uint32_t>(d));
    for (const auto& c : cols_)
        for (int i = 0; i < 3; ++i) key_.insert(key_.end(), c[i].coeffs().begin(), c[i].coeffs().end());
}

Lattice Lattice::from_generators(const AlgebraPtr& alg, std::span<const Element> gens, int guard) {
    const RingConfig& cfg = alg->config();
    std::vector<Vec> vs;
    vs.reserve(gens.size());
    for (const auto& g : gens) {
        if (!(g.config() == cfg)) throw ConfigError("generator does not belong to the algebra");
        vs.push_back(to_vec(g));
    }
    Echelon e = howell_echelon(std::move(vs), 3, cfg);
    std::array<Element, 3> cols{Element(cfg), Element(cfg), Element(cfg)};
    std::array<int, 3> piv{};
    for (int i = 0; i < 3; ++i) {
        const auto& col = e.pivot[static_cast<std::size_t>(i)];
        if (!col) throw DegenerateLatticeError("generators do not span a rank-3 lattice at precision " +
                                               std::to_string(cfg.prec));
        const int d = e.degree[static_cast<std::size_t>(i)];
        if (d > cfg.prec - guard)
            throw PrecisionError("pivot t^" + std::to_string(d) + " exceeds precision guard (N=" +
                                 std::to_string(cfg.prec) + ", guard=" + std::to_string(guard) + ")");
        cols[static_cast<std::size_t>(i)] = Element((*col)[0], (*col)[1], (*col)[2]);
        piv[static_cast<std::size_t>(i)] = d;
    }
    return Lattice(alg, std::move(cols), piv);
}

Lattice Lattice::maximal(const AlgebraPtr& alg) {
    return from_generators(alg, {alg->basis(0), alg->basis(1), alg->basis(2)});
}

std::optional<std::array<Series, 3>> Lattice::coordinates(const Element& x) const {
    if (!(x.config() == alg_->config())) throw ConfigError("element does not belong to the algebra");
    const RingConfig& cfg = alg_->config();
    Element r = x;
    std::array<Series, 3> coef{Series(cfg), Series(cfg), Series(cfg)};
    for (int i = 2; i >= 0; --i) {
        const int d = piv_[static_cast<std::size_t>(i)];
        if (r[i].valuation() < d) return std::nullopt;
        const Series q = r[i].shifted_down(d);
        r -= q * cols_[static_cast<std::size_t>(i)];
        coef[static_cast<std::size_t>(i)] = q;
    }
    return coef;
}

bool Lattice::contains(const Lattice& other) const {
    for (const auto& c : other.cols_)
        if (!contains(c)) return false;
    return true;
}

int Lattice::conductor_exponent() const {
    for (int w = 0; w < alg_->prec(); ++w) {
        const Series tw = alg_->t_power(w);
        bool ok = true;
        for (int i = 0; i < 3 && ok; ++i) ok = contains(tw * alg_->basis(i));
        if (ok) return w;
    }
    return alg_->prec();
}

int Lattice::t_content() const {
    int j = kInfinity;
    for (const auto& c : cols_) j = std::min(j, c.t_valuation());
    return j;
}

Lattice Lattice::scaled(const Element& lambda) const {
    std::array<Element, 3> g{alg_->mul(lambda, cols_[0]), alg_->mul(lambda, cols_[1]),
                             alg_->mul(lambda, cols_[2])};
    return from_generators(alg_, g);
}

Lattice Lattice::t_scaled(int k) const {
    std::array<Element, 3> g{cols_[0].shifted_up(k), cols_[1].shifted_up(k), cols_[2].shifted_up(k)};
    return from_generators(alg_, g);
}

Lattice Lattice::divided_by_t(int j) const {
    if (j == 0) return *this;
    if (t_content() < j) throw PreconditionError("lattice is not contained in t^" + std::to_string(j) + "A");
    // Shifting down loses the top j coefficients; the conductor generators
    // cover everything that could depend on them.
    const int c = conductor_exponent();
    std::vector<Element> g;
    for (const auto& col : cols_) g.push_back(col.shifted_up(-j));
    for (int i = 0; i < 3; ++i) g.push_back(alg_->t_power(c - j) * alg_->basis(i));
    return from_generators(alg_, g);
}

std::string Lattice::to_string() const {
    std::ostringstream os;
    for (int j = 0; j < 3; ++j) {
        os << (j ? " | " : "[");
        for (int i = 0; i < 3; ++i) os << (i ? ", " : "") << entry(i, j).to_string();
    }
    os << "]";
    return os.str();
}

namespace {
void require_same(const Lattice& a, const Lattice& b) {
    if (!(*a.algebra() == *b.algebra())) throw ConfigError("lattices belong to different algebras");
}
} // namespace

Lattice lattice_sum(const Lattice& a, const Lattice& b) {
    require_same(a, b);
    std::vector<Element> g(a.columns().begin(), a.columns().end());
    g.insert(g.end(), b.columns().begin(), b.columns().end());
    return Lattice::from_generators(a.algebra(), g);
}

Lattice lattice_product(const Lattice& a, const Lattice& b) {
    require_same(a, b);
    std::vector<Element> g;
    g.reserve(9);
    for (const auto& x : a.columns())
        for (const auto& y : b.columns()) g.push_back(a.alg().mul(x, y));
    return Lattice::from_generators(a.algebra(), g);
}

int lattice_index(const Lattice& sub, const Lattice& M) {
    require_same(sub, M);
    if (!M.contains(sub)) throw PreconditionError("lattice_index: first lattice is not contained in the second");
    return sub.index_in_maximal() - M.index_in_maximal();
}

bool is_order(const Lattice& M) {
    if (!M.contains(M.alg().one())) return false;
    const auto& c = M.columns();
    for (int i = 0; i < 3; ++i)
        for (int j = i; j < 3; ++j)
            if (!M.contains(M.alg().mul(c[static_cast<std::size_t>(i)], c[static_cast<std::size_t>(j)])))
                return false;
    return true;
}

bool is_overring(const Lattice& B, const Lattice& C) {
    require_same(B, C);
    return is_order(B) && is_order(C) && B.contains(C);
}

Lattice kernel_lattice(const AlgebraPtr& alg, const std::array<Vec, 3>& images,
                       const std::vector<Vec>& relations) {
    const RingConfig& cfg = alg->config();
    const std::size_t r = images[0].size();
    const int n = 3 + static_cast<int>(r);
    std::vector<Vec> gens;
    gens.reserve(3 + relations.size());
    for (int k = 0; k < 3; ++k) {
        Vec v(static_cast<std::size_t>(n), Series(cfg));
        v[static_cast<std::size_t>(k)] = Series::constant(cfg, 1);
        for (std::size_t i = 0; i < r; ++i) v[3 + i] = images[static_cast<std::size_t>(k)][i];
        gens.push_back(std::move(v));
    }
    for (const auto& rel : relations) {
        Vec v(static_cast<std::size_t>(n), Series(cfg));
        for (std::size_t i = 0; i < r; ++i) v[3 + i] = rel[i];
        gens.push_back(std::move(v));
    }
    Echelon e = howell_echelon(std::move(gens), n, cfg);
    std::vector<Element> cols;
    for (int i = 0; i < 3; ++i) {
        const auto& col = e.pivot[static_cast<std::size_t>(i)];
        if (col) cols.emplace_back((*col)[0], (*col)[1], (*col)[2]);
    }
    return Lattice::from_generators(alg, cols);
}

Lattice colon(const Lattice& target, std::span<const Element> gens) {
    const auto& alg = target.algebra();
    const RingConfig& cfg = alg->config();
    const std::size_t r = 3 * gens.size();
    std::array<Vec, 3> images;
    for (int k = 0; k < 3; ++k) {
        Vec img;
        img.reserve(r);
        for (const auto& g : gens) {
            const Element prod = alg->mul(alg->basis(k), g);
            img.insert(img.end(), {prod[0], prod[1], prod[2]});
        }
        images[static_cast<std::size_t>(k)] = std::move(img);
    }
    std::vector<Vec> rel;
    for (std::size_t b = 0; b < gens.size(); ++b)
        for (const auto& col : target.columns()) {
            Vec v(r, Series(cfg));
            for (int i = 0; i < 3; ++i) v[3 * b + static_cast<std::size_t>(i)] = col[i];
            rel.push_back(std::move(v));
        }
    return kernel_lattice(alg, images, rel);
}

Lattice colon(const Lattice& target, const Lattice& source) {
    require_same(target, source);
    return colon(target, std::span<const Element>(source.columns()));
}

Lattice multiplier_ring(const Lattice& M) { return colon(M, M); }

Lattice trace_condition_lattice(const Lattice& M, int s) {
    const auto& alg = M.algebra();
    const RingConfig& cfg = alg->config();
    if (s >= cfg.prec) throw PrecisionError("trace condition modulus t^" + std::to_string(s) +
                                            " exceeds precision " + std::to_string(cfg.prec));
    std::array<Vec, 3> images;
    for (int k = 0; k < 3; ++k)
        for (const auto& m : M.columns())
            images[static_cast<std::size_t>(k)].push_back(alg->trace(alg->mul(alg->basis(k), m)));
    std::vector<Vec> rel;
    for (int j = 0; j < 3; ++j) {
        Vec v(3, Series(cfg));
        v[static_cast<std::size_t>(j)] = alg->t_power(s);
        rel.push_back(std::move(v));
    }
    return kernel_lattice(alg, images, rel);
}

std::optional<ScalingWitness> find_scaling(const Lattice& from, const Lattice& to) {
    require_same(from, to);
    const auto& alg = from.algebra();
    const int N = alg->prec();
    const int c = from.conductor_exponent();
    const int c2 = to.conductor_exponent();
    if (c + c2 + 2 > N)
        throw PrecisionError("isomorphism test needs precision >= " + std::to_string(c + c2 + 2) +
                             ", have " + std::to_string(N));
    const Lattice target = to.t_scaled(c);
    const Lattice X = colon(target, from);
    // λ·from ⊆ target already holds, so equality is a matter of index:
    // the length of from/λ·from is the t-valuation of the norm of λ.
    const int want = target.index_in_maximal() - from.index_in_maximal();
    const std::vector<int> degree = residue_degrees(alg->branch_case());
    const std::uint32_t p = alg->p();
    const auto& xc = X.columns();
    for (std::uint32_t a = 0; a < p; ++a)
        for (std::uint32_t b = 0; b < p; ++b)
            for (std::uint32_t d = 0; d < p; ++d) {
                if (!a && !b && !d) continue;
                Element lambda = alg->series(a) * xc[0];
                lambda += alg->series(b) * xc[1];
                lambda += alg->series(d) * xc[2];
                const std::vector<int> v = alg->multival(lambda);
                int norm_val = 0;
                for (std::size_t i = 0; i < v.size() && norm_val != kInfinity; ++i)
                    norm_val = v[i] == kInfinity ? kInfinity : norm_val + degree[i] * v[i];
                if (norm_val == want) return ScalingWitness{lambda, c};
            }
    return std::nullopt;
}

} // namespace cubic

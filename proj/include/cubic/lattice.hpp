#pragma once

/**
 * @file lattice.hpp
 * @brief Full rank-3 D-lattices inside A in canonical echelon form.
 *
 * A Lattice is a D-submodule M with t^N·A ⊆ M ⊆ A, stored as the upper
 * triangular matrix whose column j has pivot t^{d_j} in row j, zeros below
 * it, and entries above each pivot row i reduced to degree < d_i. Working
 * modulo t^N is exact for such modules, and the canonical form makes
 * equality a coefficient comparison.
 */

#include <array>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "cubic/algebra.hpp"

namespace cubic {

using Vec = std::vector<Series>;

/// Howell echelon form of a D_N-submodule of D_N^n. Rows are eliminated
/// from the last to the first; `pivot[i]` is the column whose first
/// nonzero row is i, normalized to t^{degree[i]} there, or empty when no
/// generator reaches row i. Columns are reduced against earlier pivots.
struct Echelon {
    std::vector<std::optional<Vec>> pivot;
    std::vector<int> degree;
};

Echelon howell_echelon(std::vector<Vec> gens, int n, const RingConfig& cfg);

class Lattice {
public:
    /// Canonical form of the D-span of `gens` plus t^N·A. Throws
    /// DegenerateLatticeError when some pivot is missing and
    /// PrecisionError when a pivot exceeds N − guard.
    static Lattice from_generators(const AlgebraPtr& alg, std::span<const Element> gens,
                                   int guard = 1);
    static Lattice from_generators(const AlgebraPtr& alg, std::initializer_list<Element> gens,
                                   int guard = 1) {
        return from_generators(alg, std::span<const Element>(gens.begin(), gens.size()), guard);
    }
    /// The maximal order A.
    static Lattice maximal(const AlgebraPtr& alg);

    const AlgebraPtr& algebra() const { return alg_; }
    const CubicAlgebra& alg() const { return *alg_; }
    const std::array<Element, 3>& columns() const { return cols_; }
    const std::array<int, 3>& pivots() const { return piv_; }
    const Series& entry(int row, int col) const { return cols_[static_cast<std::size_t>(col)][row]; }

    /// Coefficients of x with respect to the columns, if x ∈ M.
    std::optional<std::array<Series, 3>> coordinates(const Element& x) const;
    bool contains(const Element& x) const { return coordinates(x).has_value(); }
    /// True iff other ⊆ *this.
    bool contains(const Lattice& other) const;

    /// Length of A/M.
    int index_in_maximal() const { return piv_[0] + piv_[1] + piv_[2]; }
    /// Smallest w with t^w·A ⊆ M.
    int conductor_exponent() const;
    /// Largest j with M ⊆ t^j·A.
    int t_content() const;

    Lattice scaled(const Element& lambda) const;
    Lattice t_scaled(int k) const;
    /// t^{-j}·M; requires M ⊆ t^j·A.
    Lattice divided_by_t(int j) const;

    std::string to_string() const;

    friend bool operator==(const Lattice& a, const Lattice& b) {
        return *a.alg_ == *b.alg_ && a.cols_ == b.cols_;
    }
    friend bool operator<(const Lattice& a, const Lattice& b) { return a.key() < b.key(); }
    /// Byte key of the canonical form; orders lattices deterministically.
    const std::vector<std::uint32_t>& key() const { return key_; }

private:
    Lattice(AlgebraPtr alg, std::array<Element, 3> cols, std::array<int, 3> piv);

    AlgebraPtr alg_;
    std::array<Element, 3> cols_;
    std::array<int, 3> piv_;
    std::vector<std::uint32_t> key_;
};

Lattice lattice_sum(const Lattice& a, const Lattice& b);
/// Span of all pairwise products of columns.
Lattice lattice_product(const Lattice& a, const Lattice& b);
/// Length of M/sub; throws PreconditionError unless sub ⊆ M.
int lattice_index(const Lattice& sub, const Lattice& M);
bool is_order(const Lattice& M);
/// B is an order containing the order C.
bool is_overring(const Lattice& B, const Lattice& C);

/// {x ∈ A : H·x ∈ span(relations)} where column k of the system is
/// images[k] (the image of the k-th basis vector of A).
Lattice kernel_lattice(const AlgebraPtr& alg, const std::array<Vec, 3>& images,
                       const std::vector<Vec>& relations);
/// {x ∈ A : x·g ∈ target for every g}.
Lattice colon(const Lattice& target, std::span<const Element> gens);
Lattice colon(const Lattice& target, const Lattice& source);
/// {x ∈ L : x·M ⊆ M}; always an order inside A.
Lattice multiplier_ring(const Lattice& M);
/// {y ∈ A : Tr(y·m) ∈ t^s·D for all m ∈ M}.
Lattice trace_condition_lattice(const Lattice& M, int s);

/// λ = numerator / t^shift.
struct ScalingWitness {
    Element numerator;
    int shift = 0;
};

/// Searches λ ∈ L^× with λ·from = to. The search runs over the classes of
/// (t^c·to : from) modulo t, which is exhaustive by Nakayama's lemma.
std::optional<ScalingWitness> find_scaling(const Lattice& from, const Lattice& to);
inline bool is_isomorphic(const Lattice& a, const Lattice& b) {
    return find_scaling(a, b).has_value();
}

} // namespace cubic

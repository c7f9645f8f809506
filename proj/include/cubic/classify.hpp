#pragma once

/**
 * @file classify.hpp
 * @brief Locality, embedding dimension and the table of plane curve
 * cubic singularities.
 */

#include <string>
#include <vector>

#include "cubic/families.hpp"

namespace cubic {

/// C contains an idempotent other than 0 and 1. Idempotents of C/tC lift
/// because D is complete, so the scan runs over the p³ residue classes.
bool is_decomposable(const Lattice& C);
inline bool is_local(const Lattice& C) { return !is_decomposable(C); }

/// Preimage in C of the nilradical of C/tC (the Jacobson radical of C).
Lattice jacobson_radical(const Lattice& C);
/// dim over the residue field of C of J/J²; throws LocalityError.
int embedding_dim(const Lattice& C);

struct SingularityType {
    std::string name;
    int branches = 0;
    /// Values listed in the table, branches in the order (e, e', rest).
    std::vector<int> vx, vy;
    /// The same multivaluations computed from x = t, y = t^s·β.
    std::vector<int> computed_vx, computed_vy;
    int param_count = 0;
    bool unramified = false;
    /// param_count − 1, the modality in Arnold's sense.
    int modality() const { return param_count - 1; }
    bool multivaluations_match() const { return vx == computed_vx && vy == computed_vy; }
};

/// Table row of a plane-curve family member (k = 0, local, not A).
SingularityType singularity_type(const AlgebraPtr& alg, const FamilyDescriptor& d);

} // namespace cubic

#pragma once

/**
 * @file json_io.hpp
 * @brief JSON encodings of series, algebras, lattices, descriptors and
 * reports. Keys are emitted in sorted order, so output is byte-stable.
 *
 * Malformed input raises ConfigError.
 */

#include "json.hpp"

#include <string>

#include "cubic/classify.hpp"
#include "cubic/duality.hpp"
#include "cubic/ideals.hpp"

namespace cubic {

using Json = nlohmann::json;

Json series_to_json(const Series& s);
Series series_from_json(const RingConfig& cfg, const Json& j);

Json config_to_json(const RingConfig& cfg);
RingConfig config_from_json(const Json& j);

Json algebra_to_json(const CubicAlgebra& alg);
AlgebraPtr algebra_from_json(const Json& j);

Json element_to_json(const Element& x);
Element element_from_json(const CubicAlgebra& alg, const Json& j);

/// {"algebra": ..., "hnf": columns ordered by pivot row}.
Json lattice_to_json(const Lattice& M);
/// Rebuilds the canonical form from the stored columns.
Lattice lattice_from_json(const Json& j);
/// As above, inside a given algebra (the "algebra" key may be absent).
Lattice lattice_from_json(const AlgebraPtr& alg, const Json& j);

Json descriptor_to_json(const FamilyDescriptor& d);
/// Reads a raw descriptor; `a` is kept as given and reduced later.
FamilyDescriptor descriptor_from_json(const Json& j);

Json dual_report_to_json(const DualReport& r);
Json census_to_json(const ClassCensus& c);
/// One row per class: index, tag, members, multiplier index, pivots.
std::string census_to_csv(const ClassCensus& c);
Json par_estimate_to_json(const FamilyDescriptor& d, const ParEstimate& e);
Json singularity_to_json(const SingularityType& s);

std::string dump(const Json& j);

} // namespace cubic

#pragma once

/**
 * @file verify.hpp
 * @brief End-to-end checks, one per acceptance criterion.
 *
 * | name           | check                                                   |
 * |----------------|---------------------------------------------------------|
 * | thm-overrings  | closed-form over-rings equal the brute-force oracle     |
 * | procedure      | iterated procedure equals the oracle; conditions agree  |
 * | edim           | edim 2 exactly on k = 0 members other than A            |
 * | duality        | trace duals match the closed forms; double duals return |
 * | gorenstein     | Gorenstein iff edim 2 or A                              |
 * | ideal-classes  | no ideal class outside over-rings and their duals       |
 * | par-growth     | growth degree of class counts in p                      |
 * | foundations    | ring axioms, canonical forms, descriptors round trip    |
 */

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cubic/json_io.hpp"

namespace cubic {

/// Restrictions of a run; empty fields select the default grid.
struct VerifyScope {
    std::vector<BranchCase> cases;
    std::vector<std::uint32_t> primes;
    std::vector<int> ms;
    std::uint64_t seed = 20240601;
};

struct VerifyReport {
    std::string name;
    bool passed = true;
    /// One line per grid cell.
    std::vector<std::string> lines;
    /// Mismatches, machine readable.
    Json diff = Json::array();
    std::string summary;

    Json to_json() const;
};

const std::vector<std::string>& verify_names();
/// Throws ConfigError for an unknown name.
VerifyReport run_verify(const std::string& name, const VerifyScope& scope = {});

VerifyReport verify_overrings(const VerifyScope& scope);
VerifyReport verify_procedure(const VerifyScope& scope);
VerifyReport verify_edim(const VerifyScope& scope);
VerifyReport verify_duality(const VerifyScope& scope);
VerifyReport verify_gorenstein(const VerifyScope& scope);
VerifyReport verify_ideal_classes(const VerifyScope& scope);
VerifyReport verify_par_growth(const VerifyScope& scope);
VerifyReport verify_foundations(const VerifyScope& scope);

} // namespace cubic

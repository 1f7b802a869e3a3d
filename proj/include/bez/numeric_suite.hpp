#pragma once

#include <optional>
#include <string>
#include <vector>

#include "bez/numreal.hpp"

namespace bez {

// Outcome of one numerically-verified identity instance. `asserted == false`
// marks probe cases whose agreement is reported but does not gate the run
// (limit cases outside the identity's stated hypotheses).
struct QuadResult {
    std::string id;
    std::string case_label;
    NumReal lhs;
    NumReal rhs;
    Real abs_diff{0};
    Real rel_diff{0};
    bool pass = false;
    unsigned prec = 0;
    Real tol{0};
    bool asserted = true;
    std::string note;  // diagnostics, e.g. quadrature failure text

    // {"id":…, "case":…, "lhs":…, "rhs":…, "abs_diff":…, "rel_diff":…,
    //  "pass":…, "prec":…, "tol":…, "asserted":…} (+ "note" when set)
    std::string to_json() const;
};

// Canonical registry ids, in report order.
const std::vector<std::string>& numeric_check_ids();

// Resolves aliases (the two derivations of the same double integral share one
// entry); throws std::invalid_argument for unknown ids.
std::string canonical_numeric_id(const std::string& id);
bool is_numeric_check(const std::string& id);

// Runs every case of one registry entry at `prec` working digits (minimum 15;
// arithmetic is backed by at least 30). `tol_override` replaces the check's
// default tolerance (1e-8 for single integrals, 1e-6 for iterated doubles).
std::vector<QuadResult> verify_numeric(const std::string& id, unsigned prec,
                                       std::optional<double> tol_override = std::nullopt);

// All registry entries in order.
std::vector<QuadResult> verify_numeric_all(unsigned prec,
                                           std::optional<double> tol_override = std::nullopt);

}  // namespace bez

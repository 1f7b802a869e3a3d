#pragma once

#include <optional>
#include <string>
#include <vector>

#include "bez/poly.hpp"

namespace bez {

// Per-n outcome of one identity check. "vacuous" marks an n where the
// statement degenerates to an empty comparison (e.g. an empty sum against
// itself) and nothing substantive was tested.
enum class Verdict { pass, vacuous, fail };

std::string verdict_to_string(Verdict v);

struct Counterexample {
    unsigned n = 0;
    std::string lhs;
    std::string rhs;
};

struct IdentityReport {
    std::string id;
    unsigned n_min = 0;  // first n evaluated
    unsigned n_max = 0;  // last n evaluated; when skipped, the requested bound
    bool skipped = false;  // requested bound lies below the check's first valid n
    std::vector<Verdict> verdicts;  // one entry per n in [n_min, n_max]
    std::optional<Counterexample> counterexample;  // first failing n

    bool all_ok() const;
    // {"id":…, "n_range":[a,b], "verdicts":[…], "counterexample":null|{…}}
    // plus "skipped":true for empty ranges.
    std::string to_json() const;
};

// Shared polynomial tables every check draws from. q is always derived from p
// by the derivative-sum construction, so a perturbation injected into p
// propagates into q.
struct SuiteContext {
    std::vector<IntPoly> p;  // p_0..p_N
    std::vector<IntPoly> q;  // q_0..q_N
};

SuiteContext make_context(unsigned n_max);
SuiteContext make_context(std::vector<IntPoly> p_table);

// Registered check ids in the fixed report order.
const std::vector<std::string>& registered_check_ids();
bool is_registered_check(const std::string& id);

// Evaluates one identity for every valid n up to n_max (inclusive) against the
// supplied tables; ctx must cover indices 0..n_max. Unknown ids are rejected.
IdentityReport run_check(const SuiteContext& ctx, const std::string& id, unsigned n_max);
IdentityReport run_check(const std::string& id, unsigned n_max);

// Every registered check, in registry order.
std::vector<IdentityReport> run_all(const SuiteContext& ctx, unsigned n_max);
std::vector<IdentityReport> run_all(unsigned n_max);

}  // namespace bez

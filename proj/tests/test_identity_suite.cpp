#include <doctest.h>

#include <bez/identity_suite.hpp>
#include <bez/poly.hpp>
#include <bez/sheffer.hpp>

#include <json.hpp>

#include <algorithm>
#include <stdexcept>
#include <string>
#include <vector>

using namespace bez;

namespace {

unsigned count_failed(const std::vector<IdentityReport>& reports) {
    unsigned failed = 0;
    for (const auto& r : reports)
        if (!r.all_ok()) ++failed;
    return failed;
}

}  // namespace

TEST_CASE("registry enumerates a fixed set of checks") {
    const auto& ids = registered_check_ids();
    CHECK(ids.size() == 26);
    for (const auto& id : ids) CHECK(is_registered_check(id));
    CHECK(!is_registered_check("nosuch"));
    CHECK(std::count(ids.begin(), ids.end(), "thm1") == 1);
    CHECK(std::count(ids.begin(), ids.end(), "eq2_31") == 1);
    CHECK(std::count(ids.begin(), ids.end(), "gf_pdes") == 1);

    // No duplicate ids.
    auto sorted = ids;
    std::sort(sorted.begin(), sorted.end());
    CHECK(std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end());
}

TEST_CASE("the full suite passes and reports in registry order") {
    auto reports = run_all(12);
    const auto& ids = registered_check_ids();
    REQUIRE(reports.size() == ids.size());
    for (std::size_t i = 0; i < reports.size(); ++i) {
        CHECK(reports[i].id == ids[i]);
        CHECK(reports[i].all_ok());
        CHECK(!reports[i].counterexample.has_value());
        CHECK(!reports[i].skipped);
        // Every evaluated n produced a verdict.
        CHECK(reports[i].verdicts.size() ==
              reports[i].n_max - reports[i].n_min + 1);
    }
}

TEST_CASE("single-check runner matches the registry ids") {
    IdentityReport rep = run_check("thm1", 10);
    CHECK(rep.id == "thm1");
    CHECK(rep.all_ok());
    CHECK_THROWS_AS(run_check("nosuch", 10), std::invalid_argument);
}

TEST_CASE("a bound below the first valid index yields a skipped report") {
    // This check's statement needs n >= 4 to be non-empty.
    IdentityReport rep = run_check("eq2_35", 3);
    CHECK(rep.skipped);
    CHECK(rep.verdicts.empty());
    CHECK(rep.n_max == 3);
    CHECK(rep.all_ok());  // skipped is not a failure

    IdentityReport live = run_check("eq2_35", 6);
    CHECK(!live.skipped);
    CHECK(live.n_min == 4);
    CHECK(live.all_ok());
}

TEST_CASE("reports serialize deterministically") {
    auto a = run_all(8);
    auto b = run_all(8);
    REQUIRE(a.size() == b.size());
    for (std::size_t i = 0; i < a.size(); ++i) CHECK(a[i].to_json() == b[i].to_json());
}

TEST_CASE("report serialization carries the full verdict record") {
    IdentityReport rep = run_check("eq2_31", 6);
    auto j = nlohmann::json::parse(rep.to_json());
    CHECK(j["id"] == "eq2_31");
    REQUIRE(j["n_range"].is_array());
    CHECK(j["n_range"][0] == rep.n_min);
    CHECK(j["n_range"][1] == rep.n_max);
    CHECK(j["verdicts"].size() == rep.verdicts.size());
    for (const auto& v : j["verdicts"])
        CHECK((v == "pass" || v == "vacuous" || v == "fail"));
    CHECK(j["counterexample"].is_null());

    IdentityReport skipped = run_check("eq2_38", 2);
    auto js = nlohmann::json::parse(skipped.to_json());
    CHECK(js["skipped"] == true);
}

TEST_CASE("verdict names") {
    CHECK(verdict_to_string(Verdict::pass) == "pass");
    CHECK(verdict_to_string(Verdict::vacuous) == "vacuous");
    CHECK(verdict_to_string(Verdict::fail) == "fail");
}

TEST_CASE("contexts expose the polynomial tables coherently") {
    SuiteContext ctx = make_context(8);
    REQUIRE(ctx.p.size() >= 9);
    REQUIRE(ctx.q.size() >= 9);
    CHECK(ctx.p[4] == gen_p(4));
    CHECK(ctx.q[4] == gen_q(4));
    CHECK(ctx.q == q_table_from_p(ctx.p));

    // Too-short tables are rejected rather than read out of bounds.
    CHECK_THROWS_AS(run_check(ctx, "thm1", 20), std::invalid_argument);
}

TEST_CASE("coefficient mutations are caught, with counterexamples reported") {
    const unsigned n_max = 8;
    CHECK(count_failed(run_all(make_context(n_max), n_max)) == 0);

    // Three distinct single-coefficient corruptions of p_5.
    struct Mutation {
        std::size_t index;
        Int delta;
    };
    const Mutation mutations[] = {{1, Int(-1)}, {3, Int(7)}, {5, Int(2)}};

    for (const Mutation& m : mutations) {
        CAPTURE(m.index);
        std::vector<IntPoly> p = p_table(n_max);
        std::vector<Int> c = p[5].coeffs();
        REQUIRE(m.index < c.size());
        c[m.index] += m.delta;
        p[5] = IntPoly(c);

        SuiteContext ctx = make_context(p);
        auto reports = run_all(ctx, n_max);
        unsigned failed = 0;
        for (const auto& rep : reports) {
            if (rep.all_ok()) continue;
            ++failed;
            REQUIRE(rep.counterexample.has_value());
            CHECK(rep.counterexample->n >= rep.n_min);
            CHECK(rep.counterexample->n <= rep.n_max);
            CHECK(!rep.counterexample->lhs.empty());
            CHECK(!rep.counterexample->rhs.empty());
            CHECK(rep.counterexample->lhs != rep.counterexample->rhs);
            // The first failing n carries a fail verdict.
            CHECK(rep.verdicts[rep.counterexample->n - rep.n_min] == Verdict::fail);
            // The counterexample also lands in the serialized form.
            auto j = nlohmann::json::parse(rep.to_json());
            CHECK(!j["counterexample"].is_null());
            CHECK(j["counterexample"]["n"] == rep.counterexample->n);
        }
        CHECK(failed >= 1);
    }
}

#include <doctest.h>

#include "qbundle/suites.hpp"

using namespace qbundle;

namespace {

SuiteOptions small_symbolic(int degree) {
    SuiteOptions o;
    o.max_degree = degree;
    return o;
}

SuiteOptions small_numeric(int n, int fiber) {
    SuiteOptions o;
    o.grid = {{n, n, n}};
    o.fiber_samples = fiber;
    o.equator_samples = 1024;
    return o;
}

bool has_check(const Report& r, const std::string& fragment) {
    for (const auto& c : r.checks)
        if (c.name.find(fragment) != std::string::npos) return true;
    return false;
}

}  // namespace

TEST_CASE("symbolic suites pass on the default algebra") {
    for (const char* name : {"relations", "hopf-axioms", "confluence", "coaction",
                             "cotensor", "connection"}) {
        Report r = run_suite(name, small_symbolic(2));
        INFO("suite ", name, ":\n", to_text(r));
        CHECK(r.passed());
        CHECK(r.suite == name);
        CHECK(r.environment.algebra == "suq2");
        CHECK(r.environment.q == "formal");
        CHECK(!r.checks.empty());
        for (const auto& c : r.checks) CHECK(!c.name.empty());
    }
}

TEST_CASE("symbolic suites accept the classical and circle presets") {
    Report su2 = run_suite("relations", [] {
        SuiteOptions o;
        o.algebra = "su2";
        o.max_degree = 2;
        return o;
    }());
    INFO(to_text(su2));
    CHECK(su2.passed());
    CHECK(su2.environment.q == "1");

    Report u1 = run_suite("hopf-axioms", [] {
        SuiteOptions o;
        o.algebra = "u1";
        o.max_degree = 3;
        return o;
    }());
    INFO(to_text(u1));
    CHECK(u1.passed());

    Report circle_rel = run_suite("relations", [] {
        SuiteOptions o;
        o.algebra = "u1";
        o.max_degree = 2;
        return o;
    }());
    INFO(to_text(circle_rel));
    CHECK(circle_rel.passed());
    CHECK(has_check(circle_rel, "unitary"));
}

TEST_CASE("numeric suites pass on a coarse grid") {
    Report numeric = run_suite("numeric-identities", small_numeric(8, 16));
    INFO(to_text(numeric));
    CHECK(numeric.passed());
    CHECK(numeric.environment.grid == "8x8x8");
    CHECK(has_check(numeric, "sphere relation"));
    CHECK(has_check(numeric, "projector family"));

    Report cleaving = run_suite("cleaving", small_numeric(8, 16));
    INFO(to_text(cleaving));
    CHECK(cleaving.passed());
    CHECK(has_check(cleaving, "hemisphere A"));
    CHECK(has_check(cleaving, "hemisphere C"));
}

TEST_CASE("prolongation defaults to a numeric deformation parameter") {
    Report r = run_suite("prolongation", small_numeric(6, 16));
    INFO(to_text(r));
    CHECK(r.passed());
    CHECK(r.environment.q == "1/2");
    CHECK(has_check(r, "defining relations"));
    CHECK(has_check(r, "colinear"));
}

TEST_CASE("obstruction suite reports the verdict chain") {
    Report r = run_suite("obstruction", small_numeric(4, 8));
    INFO(to_text(r));
    CHECK(r.passed());
    CHECK(r.environment.q == "formal");
    CHECK(has_check(r, "forcing step 1"));
    CHECK(has_check(r, "winding number"));
    CHECK(has_check(r, "obstruction verdict"));

    SuiteOptions classical = small_numeric(4, 8);
    classical.q = Rational(1);
    Report vac = run_suite("obstruction", classical);
    INFO(to_text(vac));
    CHECK(vac.status == "vacuous");
    CHECK(!vac.passed());
}

TEST_CASE("a tolerance override applies to every residual check") {
    SuiteOptions o = small_numeric(6, 16);
    o.tol = 0.0;
    Report r = run_suite("cleaving", o);
    CHECK(r.status == "fail");
    for (const auto& c : r.checks)
        if (c.residual) CHECK(*c.tolerance == 0.0);
}

TEST_CASE("the aggregate suite flattens every check with a prefix") {
    SuiteOptions o;
    o.max_degree = 2;
    o.grid = {{6, 6, 6}};
    o.fiber_samples = 16;
    o.equator_samples = 1024;
    Report all = run_suite("all", o);
    INFO(to_text(all));
    CHECK(all.passed());
    CHECK(all.suite == "all");
    for (const char* name : {"relations", "hopf-axioms", "confluence", "coaction",
                             "cotensor", "connection", "numeric-identities", "cleaving",
                             "prolongation", "obstruction"}) {
        CHECK(has_check(all, std::string(name) + ": "));
    }
}

TEST_CASE("configuration errors are distinguished from check failures") {
    CHECK_THROWS_AS(run_suite("nope", {}), std::invalid_argument);

    SuiteOptions bad_algebra;
    bad_algebra.algebra = "so3";
    CHECK_THROWS_AS(run_suite("relations", bad_algebra), std::invalid_argument);

    SuiteOptions bad_grid;
    bad_grid.grid = {{0, 4, 4}};
    CHECK_THROWS_AS(run_suite("cleaving", bad_grid), std::invalid_argument);
}

TEST_CASE("suite names are stable and end with the aggregate") {
    const auto& names = suite_names();
    CHECK(names.size() == 11);
    CHECK(names.front() == "relations");
    CHECK(names.back() == "all");
}

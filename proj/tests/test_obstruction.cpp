#include <stdexcept>

#include "doctest.h"
#include "qbundle/obstruction.hpp"
#include "qbundle/presets.hpp"

using namespace qbundle;

namespace {

GridPtr equator_grid() {
    S3Grid::Params params;
    params.n_eta = params.n_xi1 = params.n_xi2 = 4;
    params.fiber_samples = 8;
    params.equator_samples = 1024;
    return S3Grid::make(params);
}

}  // namespace

TEST_CASE("forcing chain holds at formal q") {
    auto report = symbolic_forcing(std::nullopt);
    REQUIRE(report.steps.size() == 3);
    CHECK(report.chain_holds);
    CHECK_FALSE(report.vacuous);
    CHECK(report.commutator == "(1 - q^2) * gamma * gamma^*");
    for (const auto& step : report.steps) {
        INFO(step.name << ": " << step.detail);
        CHECK(step.status == "pass");
    }
    CHECK(report.steps[2].detail.find("= 1") != std::string::npos);
}

TEST_CASE("forcing chain holds at a generic numeric q") {
    auto report = symbolic_forcing(Rational(1, 2));
    CHECK(report.chain_holds);
    CHECK_FALSE(report.vacuous);
    CHECK(report.commutator == "3/4 * gamma * gamma^*");
}

TEST_CASE("forcing chain degenerates exactly at the classical point") {
    for (auto q0 : {Rational(1), Rational(-1)}) {
        auto report = symbolic_forcing(q0);
        CHECK_FALSE(report.chain_holds);
        CHECK(report.vacuous);
        CHECK(report.commutator == "0");
        CHECK(report.steps[1].status == "vacuous");
        CHECK(report.steps[0].status == "pass");
        CHECK(report.steps[2].status == "pass");
    }
}

TEST_CASE("obstruction verdict combines the chain with stable winding counts") {
    auto g = equator_grid();
    auto report = obstruction_verdict(g, {64, 256, 1024}, Rational(1, 2));

    CHECK(report.verdict == "obstructed");
    REQUIRE(report.windings.size() == 3);
    for (const auto& w : report.windings) {
        CHECK(w.degree == 1);
        CHECK(w.min_modulus > 1.0 - 1e-12);
        CHECK(w.max_unit_deviation < 1e-12);
    }
    CHECK(report.windings[0].samples == 64);
    CHECK(report.windings[2].samples == 1024);
    CHECK(report.constant_control_degree == 0);
    CHECK(report.squared_control_degree == 2);
    CHECK(report.classical_control == "not obstructed");
    CHECK_FALSE(report.caveat.empty());
    CHECK(report.caveat.find("sampled") != std::string::npos);
}

TEST_CASE("verdict retreats when the forcing chain is vacuous") {
    auto g = equator_grid();
    auto report = obstruction_verdict(g, {64}, Rational(1));
    CHECK(report.verdict == "not obstructed");
    CHECK(report.forcing.vacuous);
    // clutching data is still reported for the record
    REQUIRE(report.windings.size() == 1);
    CHECK(report.windings[0].degree == 1);
}

TEST_CASE("verdict at formal q is already obstructed") {
    auto g = equator_grid();
    auto report = obstruction_verdict(g, {256}, std::nullopt);
    CHECK(report.verdict == "obstructed");
    CHECK(report.forcing.chain_holds);
}

TEST_CASE("verdict rejects an empty sampling plan") {
    auto g = equator_grid();
    CHECK_THROWS_AS(obstruction_verdict(g, {}, std::nullopt), std::invalid_argument);
}

#include <doctest.h>

#include <sstream>

#include "qbundle/report.hpp"

using namespace qbundle;

namespace {

Report sample_report() {
    Report r;
    r.suite = "demo";
    r.environment = {"suq2", "formal", 4, "8x8x8", 16, 64, "defaults"};

    CheckResult symbolic;
    symbolic.name = "commutator collapses";
    symbolic.status = "pass";
    symbolic.exact = true;
    symbolic.witness = "checked 7 rules";
    symbolic.runtime_ms = 1.25;
    r.checks.push_back(symbolic);

    CheckResult numeric;
    numeric.name = "sphere relation";
    numeric.status = "pass";
    numeric.residual = 1e-13;
    numeric.tolerance = 1e-12;
    numeric.runtime_ms = 40.0;
    r.checks.push_back(numeric);

    r.finalize();
    return r;
}

std::string without_runtime(const std::string& json) {
    std::istringstream in(json);
    std::string line, out;
    while (std::getline(in, line))
        if (line.find("runtime_ms") == std::string::npos) out += line + "\n";
    return out;
}

}  // namespace

TEST_CASE("status aggregation takes the worst check") {
    Report r = sample_report();
    CHECK(r.status == "pass");
    CHECK(r.passed());

    r.checks[0].status = "vacuous";
    r.finalize();
    CHECK(r.status == "vacuous");
    CHECK(!r.passed());

    r.checks[1].status = "fail";
    r.finalize();
    CHECK(r.status == "fail");
}

TEST_CASE("json rendering is byte stable apart from runtimes") {
    Report r = sample_report();
    const std::string a = to_json(r);
    CHECK(a == to_json(r));

    Report slower = sample_report();
    for (auto& c : slower.checks) c.runtime_ms *= 3.0;
    const std::string b = to_json(slower);
    CHECK(a != b);
    CHECK(without_runtime(a) == without_runtime(b));
}

TEST_CASE("json keys come in schema order with formatted numbers") {
    const std::string j = to_json(sample_report());
    const size_t schema = j.find("\"schema_version\": 1");
    const size_t suite = j.find("\"suite\": \"demo\"");
    const size_t status = j.find("\"status\": \"pass\"");
    const size_t env = j.find("\"environment\"");
    const size_t checks = j.find("\"checks\"");
    REQUIRE(schema != std::string::npos);
    REQUIRE(suite != std::string::npos);
    REQUIRE(status != std::string::npos);
    REQUIRE(env != std::string::npos);
    REQUIRE(checks != std::string::npos);
    CHECK(schema < suite);
    CHECK(suite < status);
    CHECK(status < env);
    CHECK(env < checks);

    CHECK(j.find("\"residual\": \"1e-13\"") != std::string::npos);
    CHECK(j.find("\"tolerance\": \"1e-12\"") != std::string::npos);
    CHECK(j.find("\"exact\": true") != std::string::npos);
    CHECK(j.find("\"grid\": \"8x8x8\"") != std::string::npos);
    CHECK(j.back() == '\n');
}

TEST_CASE("optional fields are omitted when unset") {
    Report r = sample_report();
    const std::string j = to_json(r);
    const size_t first = j.find("\"commutator collapses\"");
    const size_t second = j.find("\"sphere relation\"");
    REQUIRE(first < second);
    CHECK(j.substr(first, second - first).find("residual") == std::string::npos);
    CHECK(j.substr(second).find("\"exact\"") == std::string::npos);
    CHECK(j.substr(second).find("witness") == std::string::npos);
}

TEST_CASE("text rendering lists one line per check") {
    const std::string t = to_text(sample_report());
    CHECK(t.find("suite demo: pass") != std::string::npos);
    CHECK(t.find("algebra suq2, q formal, degree <= 4") != std::string::npos);
    CHECK(t.find("grid 8x8x8, K 16, equator 64") != std::string::npos);
    CHECK(t.find("[pass] commutator collapses -- checked 7 rules") != std::string::npos);
    CHECK(t.find("[pass] sphere relation (residual 1e-13, tolerance 1e-12)") !=
          std::string::npos);
}

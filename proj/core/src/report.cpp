#include "qbundle/report.hpp"

#include <cstdio>

#include <nlohmann/json.hpp>

namespace qbundle {

namespace {

/// Shortest round-trip decimal form, locale-independent.
std::string format_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    double back = 0.0;
    std::sscanf(buf, "%lf", &back);
    if (back == v) {
        for (int prec = 1; prec < 17; ++prec) {
            char shorter[64];
            std::snprintf(shorter, sizeof(shorter), "%.*g", prec, v);
            std::sscanf(shorter, "%lf", &back);
            if (back == v) return shorter;
        }
    }
    return buf;
}

}  // namespace

void Report::finalize() {
    status = "pass";
    for (const auto& c : checks) {
        if (c.status == "fail") {
            status = "fail";
            return;
        }
        if (c.status == "vacuous") status = "vacuous";
    }
}

std::string to_json(const Report& report) {
    nlohmann::ordered_json j;
    j["schema_version"] = report.schema_version;
    j["suite"] = report.suite;
    j["status"] = report.status;
    nlohmann::ordered_json env;
    env["algebra"] = report.environment.algebra;
    env["q"] = report.environment.q;
    env["max_degree"] = report.environment.max_degree;
    env["grid"] = report.environment.grid;
    env["fiber_samples"] = report.environment.fiber_samples;
    env["equator_samples"] = report.environment.equator_samples;
    env["tolerance"] = report.environment.tolerance;
    j["environment"] = std::move(env);
    j["checks"] = nlohmann::ordered_json::array();
    for (const auto& c : report.checks) {
        nlohmann::ordered_json jc;
        jc["name"] = c.name;
        jc["status"] = c.status;
        if (c.exact) jc["exact"] = *c.exact;
        if (c.residual) jc["residual"] = format_double(*c.residual);
        if (c.tolerance) jc["tolerance"] = format_double(*c.tolerance);
        if (!c.witness.empty()) jc["witness"] = c.witness;
        jc["runtime_ms"] = format_double(c.runtime_ms);
        j["checks"].push_back(std::move(jc));
    }
    return j.dump(2) + "\n";
}

std::string to_text(const Report& report) {
    std::string out;
    out += "suite " + report.suite + ": " + report.status + "\n";
    out += "  algebra " + report.environment.algebra + ", q " + report.environment.q;
    if (report.environment.max_degree > 0)
        out += ", degree <= " + std::to_string(report.environment.max_degree);
    if (report.environment.grid != "-") {
        out += ", grid " + report.environment.grid + ", K " +
               std::to_string(report.environment.fiber_samples) + ", equator " +
               std::to_string(report.environment.equator_samples);
    }
    out += ", tolerance " + report.environment.tolerance + "\n";
    for (const auto& c : report.checks) {
        out += "  [" + c.status + "] " + c.name;
        if (c.residual) {
            out += " (residual " + format_double(*c.residual);
            if (c.tolerance) out += ", tolerance " + format_double(*c.tolerance);
            out += ")";
        }
        if (!c.witness.empty()) out += " -- " + c.witness;
        out += "\n";
    }
    return out;
}

}  // namespace qbundle

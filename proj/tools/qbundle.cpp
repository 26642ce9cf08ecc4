#include <CLI11.hpp>

#include <cstdio>
#include <functional>
#include <iostream>
#include <optional>
#include <string>

#include <nlohmann/json.hpp>

#include "qbundle/dsl.hpp"
#include "qbundle/expr_parser.hpp"
#include "qbundle/pwfun.hpp"
#include "qbundle/suites.hpp"

namespace {

using namespace qbundle;

/// Every subcommand shares the flag surface; unset values fall back to the
/// per-suite defaults inside the library.
struct CommonFlags {
    std::string algebra;
    std::string q;
    int max_degree = 0;
    std::string grid;
    int fiber_samples = 0;
    int equator_samples = 0;
    std::optional<double> tol;
    std::string format = "text";
    bool skip_confluence = false;
};

void add_common(CLI::App* cmd, CommonFlags& f) {
    cmd->add_option("--algebra", f.algebra,
                    "preset name (suq2, su2, u1) or path to a presentation file");
    cmd->add_option("--q", f.q, "rational deformation parameter, e.g. 1/2");
    cmd->add_option("--max-degree", f.max_degree, "symbolic degree cutoff");
    cmd->add_option("--grid", f.grid, "spatial grid as NxNxN, e.g. 48x48x48");
    cmd->add_option("--fiber-samples", f.fiber_samples, "fiber circle samples per node");
    cmd->add_option("--equator-samples", f.equator_samples, "equator circle samples");
    cmd->add_option("--tol", f.tol, "override every residual tolerance");
    cmd->add_option("--format", f.format, "report format")
        ->check(CLI::IsMember({"json", "text"}));
    cmd->add_flag("--skip-confluence", f.skip_confluence,
                  "skip the completion check when loading presentations");
}

std::array<int, 3> parse_grid(const std::string& text) {
    std::array<int, 3> g{};
    char tail = 0;
    if (std::sscanf(text.c_str(), "%dx%dx%d%c", &g[0], &g[1], &g[2], &tail) != 3)
        throw std::invalid_argument("grid must look like NxNxN, got '" + text + "'");
    return g;
}

SuiteOptions make_options(const CommonFlags& f) {
    SuiteOptions o;
    o.algebra = f.algebra;
    if (!f.q.empty()) o.q = parse_rational(f.q);
    o.max_degree = f.max_degree;
    if (!f.grid.empty()) o.grid = parse_grid(f.grid);
    o.fiber_samples = f.fiber_samples;
    o.equator_samples = f.equator_samples;
    o.tol = f.tol;
    o.skip_confluence = f.skip_confluence;
    return o;
}

std::optional<Rational> parse_q(const CommonFlags& f) {
    if (f.q.empty()) return std::nullopt;
    return parse_rational(f.q);
}

int emit_report(const Report& report, const CommonFlags& f) {
    std::cout << (f.format == "json" ? to_json(report) : to_text(report));
    return report.passed() ? 0 : 1;
}

int cmd_run_suite(const std::string& name, const CommonFlags& f) {
    return emit_report(run_suite(name, make_options(f)), f);
}

int cmd_normal_form(const std::string& expr, const CommonFlags& f) {
    PresPtr p = load_presentation(f.algebra.empty() ? "suq2" : f.algebra, parse_q(f),
                                  !f.skip_confluence);
    const Element x = parse_element(p, expr);
    if (f.format == "json") {
        nlohmann::ordered_json j;
        j["schema_version"] = 1;
        j["algebra"] = p->name();
        j["input"] = expr;
        j["normal_form"] = x.to_string();
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << x.to_string() << "\n";
    }
    return 0;
}

int cmd_print_preset(const std::string& name, const CommonFlags& f) {
    std::cout << serialize(render_presentation(load_presentation(name, parse_q(f),
                                                                 !f.skip_confluence)));
    return 0;
}

int cmd_cotensor_basis(const CommonFlags& f) {
    PresPtr p = load_presentation(f.algebra.empty() ? "suq2" : f.algebra, parse_q(f),
                                  !f.skip_confluence);
    if (!p->coaction(CoactionSide::right) || !p->coaction(CoactionSide::left))
        throw std::invalid_argument(p->name() + " has no two-sided coaction");
    const int degree = f.max_degree > 0 ? f.max_degree : 2;
    const auto words = p->normal_words_up_to(degree);

    nlohmann::ordered_json pairs = nlohmann::ordered_json::array();
    int count = 0;
    for (const auto& w1 : words) {
        for (const auto& w2 : words) {
            const int weight = p->word_weight(w1, CoactionSide::right);
            if (weight != p->word_weight(w2, CoactionSide::left)) continue;
            ++count;
            if (f.format == "json") {
                nlohmann::ordered_json row;
                row["left"] = p->word_to_string(w1);
                row["right"] = p->word_to_string(w2);
                row["weight"] = weight;
                pairs.push_back(std::move(row));
            } else {
                std::cout << p->word_to_string(w1) << " (x) " << p->word_to_string(w2)
                          << "  [weight " << weight << "]\n";
            }
        }
    }
    if (f.format == "json") {
        nlohmann::ordered_json j;
        j["schema_version"] = 1;
        j["algebra"] = p->name();
        j["max_degree"] = degree;
        j["count"] = count;
        j["pairs"] = std::move(pairs);
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << count << " weight-matched pairs up to degree " << degree << "\n";
    }
    return 0;
}

int cmd_dump_function(const std::string& name, int weight, const std::string& hemisphere,
                      const CommonFlags& f) {
    S3Grid::Params params;
    if (!f.grid.empty()) {
        auto g = parse_grid(f.grid);
        params.n_eta = g[0];
        params.n_xi1 = g[1];
        params.n_xi2 = g[2];
    } else {
        params.n_eta = params.n_xi1 = params.n_xi2 = 16;
    }
    if (f.fiber_samples > 0) params.fiber_samples = f.fiber_samples;
    if (f.equator_samples > 0) params.equator_samples = f.equator_samples;
    GridPtr grid = S3Grid::make(params);

    SampledFunction fn = [&] {
        if (name == "a") return coordinate_a(grid);
        if (name == "c") return coordinate_c(grid);
        if (name == "omega") return omega(grid);
        if (name == "cleave") {
            auto kind = hemisphere == "C" ? HemisphereMask::Kind::C : HemisphereMask::Kind::A;
            return cleave(weight, HemisphereMask::hemisphere(grid, kind));
        }
        throw std::invalid_argument("unknown function '" + name +
                                    "' (choose a, c, omega or cleave)");
    }();

    std::cout << "eta,xi1,xi2,re,im\n";
    char row[128];
    for (int r = 0; r < grid->ring_count(); ++r) {
        for (int i = 0; i < params.n_xi1; ++i) {
            for (int j = 0; j < params.n_xi2; ++j) {
                const int node = grid->node_index(r, i, j);
                if (!fn.defined(node)) continue;
                const Complex v = fn.at(node, 0);
                std::snprintf(row, sizeof(row), "%.17g,%.17g,%.17g,%.17g,%.17g\n",
                              grid->eta(r), grid->xi1(i), grid->xi2(j), v.real(), v.imag());
                std::cout << row;
            }
        }
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"symbolic and numerical toolkit for U(1) bundles over quantum spheres"};
    app.require_subcommand(1);
    CommonFlags flags;
    std::function<int()> action;

    auto* suite_cmd = app.add_subcommand("run-suite", "run one verification suite or 'all'");
    std::string suite_name;
    suite_cmd->add_option("suite", suite_name, "suite name")
        ->required()
        ->check(CLI::IsMember(qbundle::suite_names()));
    add_common(suite_cmd, flags);
    suite_cmd->callback([&] { action = [&] { return cmd_run_suite(suite_name, flags); }; });

    auto* obstruction_cmd =
        app.add_subcommand("obstruction", "shorthand for 'run-suite obstruction'");
    add_common(obstruction_cmd, flags);
    obstruction_cmd->callback(
        [&] { action = [&] { return cmd_run_suite("obstruction", flags); }; });

    auto* nf_cmd = app.add_subcommand("normal-form", "reduce an expression to normal form");
    std::string expr;
    nf_cmd->add_option("expression", expr, "expression, e.g. 'alpha * alpha^*'")->required();
    add_common(nf_cmd, flags);
    nf_cmd->callback([&] { action = [&] { return cmd_normal_form(expr, flags); }; });

    auto* preset_cmd =
        app.add_subcommand("print-preset", "print a presentation in the file format");
    std::string preset_name;
    preset_cmd->add_option("name", preset_name, "preset name or file path")->required();
    add_common(preset_cmd, flags);
    preset_cmd->callback([&] { action = [&] { return cmd_print_preset(preset_name, flags); }; });

    auto* basis_cmd = app.add_subcommand(
        "cotensor-basis", "list weight-matched word pairs up to --max-degree");
    add_common(basis_cmd, flags);
    basis_cmd->callback([&] { action = [&] { return cmd_cotensor_basis(flags); }; });

    auto* dump_cmd =
        app.add_subcommand("dump-function", "sample a function and write CSV to stdout");
    std::string fn_name;
    int fn_weight = 1;
    std::string fn_hemisphere = "A";
    dump_cmd->add_option("name", fn_name, "a, c, omega or cleave")->required();
    dump_cmd->add_option("--weight", fn_weight, "fiber weight for 'cleave'");
    dump_cmd->add_option("--hemisphere", fn_hemisphere, "hemisphere for 'cleave'")
        ->check(CLI::IsMember({"A", "C"}));
    add_common(dump_cmd, flags);
    dump_cmd->callback([&] {
        action = [&] { return cmd_dump_function(fn_name, fn_weight, fn_hemisphere, flags); };
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        return action();
    } catch (const qbundle::DslError& ex) {
        std::cerr << "error: " << ex.what() << "\n";
        return 2;
    } catch (const qbundle::ParseError& ex) {
        std::cerr << "error: " << ex.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& ex) {
        std::cerr << "error: " << ex.what() << "\n";
        return 2;
    } catch (const std::exception& ex) {
        std::cerr << "error: " << ex.what() << "\n";
        return 1;
    }
}

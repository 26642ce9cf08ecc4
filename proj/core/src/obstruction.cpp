#include "qbundle/obstruction.hpp"

#include <cmath>
#include <stdexcept>

#include "qbundle/element.hpp"
#include "qbundle/presets.hpp"

namespace qbundle {

ForcingReport symbolic_forcing(const std::optional<Rational>& q0) {
    ForcingReport report;
    const PresPtr p = q0 ? presets::suq2_at(*q0) : presets::suq2();
    const auto g = presets::matrix_generators(*p);
    auto gen = [&](GenId id) { return Element::generator(p, id); };
    const Element a = gen(g.a), as = gen(g.a_star), c = gen(g.c), cs = gen(g.c_star);

    const Element commutator = a * as - as * a;
    const QLaurent scalar = QLaurent(1) - presets::structure_q(*p, 2);
    const Element expected = scalar * (c * cs);
    report.commutator = commutator.to_string();
    {
        ForcingStep step;
        step.name = "commutator normal form";
        const bool ok = commutator == expected;
        step.status = ok ? "pass" : "fail";
        step.detail = "[" + p->generator(g.a).name + ", " + p->generator(g.a_star).name +
                      "] = " + report.commutator;
        report.steps.push_back(std::move(step));
    }
    {
        ForcingStep step;
        step.name = "commutator scalar nonzero";
        const bool degenerate = scalar.is_zero();
        report.vacuous = degenerate;
        step.status = degenerate ? "vacuous" : "pass";
        step.detail = degenerate
                          ? "1 - q^2 vanishes (q^2 = 1), the chain does not bite"
                          : "1 - q^2 = " + scalar.to_string() + " is nonzero";
        report.steps.push_back(std::move(step));
    }
    {
        ForcingStep step;
        step.name = "circle projection of the unit relation";
        const Morphism pi = presets::circle_projection(p);
        const Element image = pi.apply(as * a + cs * c);
        const bool ok = image == Element::unit(pi.target());
        step.status = ok ? "pass" : "fail";
        step.detail = "pi(" + p->generator(g.a_star).name + " " + p->generator(g.a).name + " + " +
                      p->generator(g.c_star).name + " " + p->generator(g.c).name +
                      ") = " + image.to_string();
        report.steps.push_back(std::move(step));
    }
    report.chain_holds = true;
    for (const auto& step : report.steps)
        if (step.status != "pass") report.chain_holds = false;
    return report;
}

namespace {

WindingResult measure(const CircleFunction& f, int samples) {
    WindingResult r;
    r.samples = samples;
    r.degree = winding_number(f);
    double min_mod = 1e300, max_dev = 0.0;
    for (const auto& v : f.values) {
        min_mod = std::min(min_mod, std::abs(v));
        max_dev = std::max(max_dev, std::abs(std::abs(v) - 1.0));
    }
    r.min_modulus = min_mod;
    r.max_unit_deviation = max_dev;
    return r;
}

}  // namespace

ObstructionReport obstruction_verdict(const GridPtr& grid, const std::vector<int>& sample_counts,
                                      const std::optional<Rational>& q0) {
    if (sample_counts.empty())
        throw std::invalid_argument("obstruction_verdict: need at least one sample count");
    ObstructionReport report;
    report.forcing = symbolic_forcing(q0);

    bool degrees_agree = true;
    for (int M : sample_counts) {
        const CircleFunction t = transition_function(grid, M);
        report.windings.push_back(measure(t, M));
        if (report.windings.back().degree != report.windings.front().degree) degrees_agree = false;
    }
    const int degree = report.windings.front().degree;

    const int M0 = sample_counts.front();
    CircleFunction constant;
    constant.values.assign(M0, Complex(1.0, 0.0));
    report.constant_control_degree = winding_number(constant);

    const CircleFunction t0 = transition_function(grid, M0);
    CircleFunction squared;
    squared.values.reserve(M0);
    for (const auto& v : t0.values) squared.values.push_back(v * v);
    report.squared_control_degree = winding_number(squared);

    const bool obstructed = report.forcing.chain_holds && degrees_agree && degree != 0;
    report.verdict = obstructed ? "obstructed" : "not obstructed";
    report.classical_control =
        (report.constant_control_degree == 0) ? "not obstructed" : "unexpected";
    report.caveat =
        "The verdict is about the sampled polynomial model: the symbolic chain rules out "
        "algebraic trivializations at the chosen deformation parameter, and the clutching "
        "degree certifies that the sampled equator transition is homotopically nontrivial. "
        "Trivializations outside the generated classes, and continuum limits, are beyond "
        "what the sampled model can decide.";
    return report;
}

}  // namespace qbundle

// Acceptance gate: nine end-to-end criteria, one line each, nonzero exit on
// any failure. Parameters that a criterion pins (grids, fiber samples,
// tolerances, degrees) are hardcoded here rather than routed through flags.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "qbundle/coaction.hpp"
#include "qbundle/hopf.hpp"
#include "qbundle/hybrid.hpp"
#include "qbundle/obstruction.hpp"
#include "qbundle/presets.hpp"
#include "qbundle/pwfun.hpp"
#include "qbundle/suites.hpp"

using namespace qbundle;

namespace {

using Outcome = std::pair<bool, std::string>;

Outcome criterion_rewriting() {
    const PresPtr p = presets::suq2();
    const Element a = Element::generator(p, "alpha");
    const Element g = Element::generator(p, "gamma");
    const Element commutator = a * a.star() - a.star() * a;
    const Element expected = (QLaurent(1) - QLaurent::q(2)) * (g * g.star());
    if (commutator != expected)
        return {false, "commutator reduced to " + commutator.to_string()};

    const auto overlaps = p->check_local_confluence();
    int resolved = 0;
    for (const auto& c : overlaps.cases) {
        if (!c.resolved) return {false, "unresolved overlap " + p->word_to_string(c.ambiguity)};
        ++resolved;
    }
    std::ostringstream os;
    os << "commutator = " << expected.to_string() << ", " << resolved
       << " overlaps resolved";
    return {true, os.str()};
}

Outcome criterion_hopf() {
    const PresPtr p = presets::suq2();
    const PresPtr circle = presets::u1();
    if (auto bad = verify_hopf_axioms(p, 4); !bad.empty()) return {false, bad.front()};
    if (auto bad = verify_relation_compat(p); !bad.empty()) return {false, bad.front()};
    if (auto bad = verify_hopf_axioms(circle, 6); !bad.empty()) return {false, bad.front()};
    if (auto bad = verify_relation_compat(circle); !bad.empty()) return {false, bad.front()};
    return {true, "degree <= 4 quantum, |n| <= 6 circle, all relations annihilated"};
}

Outcome criterion_connection() {
    const PresPtr p = presets::suq2();
    const PresPtr circle = presets::u1();
    for (int n = -4; n <= 4; ++n) {
        const TensorElement lift = strong_connection(p, n);
        TensorElement expected(std::vector<PresPtr>{p, circle});
        expected.add({Word{}, circle_word(circle, n)}, QLaurent(1));
        if (canonical_map(lift, circle) != expected)
            return {false, "canonical image of the lift of power " + std::to_string(n)};
    }
    return {true, "can(lift(u^n)) = 1 (x) u^n for |n| <= 4"};
}

Outcome criterion_cotensor() {
    const PresPtr p = presets::suq2();
    const PresPtr circle = presets::u1();
    const auto words = p->normal_words_up_to(3);
    int accepted = 0;
    for (const auto& w1 : words) {
        for (const auto& w2 : words) {
            TensorElement t({p, p});
            t.add({w1, w2}, QLaurent(1));
            const bool in = cotensor_check(t, circle, nullptr);
            const bool expected = p->word_weight(w1, CoactionSide::right) ==
                                  p->word_weight(w2, CoactionSide::left);
            if (in != expected)
                return {false, p->word_to_string(w1) + " (x) " + p->word_to_string(w2) +
                                   (in ? " wrongly accepted" : " wrongly rejected")};
            accepted += in;
        }
    }
    std::ostringstream os;
    os << accepted << " accepted of " << words.size() * words.size()
       << " basis tensors up to bidegree (3,3)";
    return {true, os.str()};
}

Outcome criterion_numeric_identities() {
    const GridPtr g = S3Grid::make({});  // 48x48x48, K=32
    const auto a = coordinate_a(g);
    const auto c = coordinate_c(g);
    const auto one = SampledFunction::constant(g, 1.0);
    const auto w2 = omega(g) * omega(g);

    const double sphere = (a * a.conjugated() + c * c.conjugated() - one).max_abs();
    if (sphere >= 1e-14) return {false, "sphere relation residual " + std::to_string(sphere)};

    const double cover =
        ((one - w2 * (a * a.conjugated())) * (one - w2 * (c * c.conjugated()))).max_abs();
    if (cover >= 1e-12) return {false, "hemisphere product residual " + std::to_string(cover)};

    const auto mask_a = HemisphereMask::hemisphere(g, HemisphereMask::Kind::A);
    const double unimod =
        (w2 * (a * a.conjugated()) - one).restricted(mask_a).max_abs();
    if (unimod >= 1e-12) return {false, "w^2|a|^2 - 1 on A residual " + std::to_string(unimod)};

    char buf[128];
    std::snprintf(buf, sizeof(buf), "48^3 grid residuals %.2e, %.2e, %.2e", sphere, cover,
                  unimod);
    return {true, buf};
}

Outcome criterion_projectors() {
    const GridPtr g = S3Grid::make({});  // K=32 as pinned
    const auto a = coordinate_a(g);

    const double fix = (fourier_weight_project(a, 1) - a).max_abs();
    if (fix >= 1e-12) return {false, "P_1(a) - a residual " + std::to_string(fix)};
    for (int m : {-2, -1, 0, 2}) {
        const double kill = fourier_weight_project(a, m).max_abs();
        if (kill >= 1e-12)
            return {false, "P_" + std::to_string(m) + "(a) residual " + std::to_string(kill)};
    }

    S3Grid::Params family_params;
    family_params.n_eta = family_params.n_xi1 = family_params.n_xi2 = 16;
    const GridPtr fg = S3Grid::make(family_params);  // K=32 kept
    const auto fa = coordinate_a(fg);
    const auto fcbar = coordinate_c(fg).conjugated();
    double worst = 0.0;
    for (int i = 0; i <= 3; ++i) {
        for (int j = 0; j <= 3; ++j) {
            SampledFunction f = SampledFunction::constant(fg, 1.0);
            for (int k = 0; k < i; ++k) f *= fa;
            for (int k = 0; k < j; ++k) f *= fcbar;
            for (int m = -4; m <= 4; ++m) {
                const SampledFunction pm = fourier_weight_project(f, m);
                for (int n = -4; n <= 4; ++n) {
                    const SampledFunction pn = fourier_weight_project(pm, n);
                    worst = std::max(worst, n == m ? (pn - pm).max_abs() : pn.max_abs());
                }
            }
        }
    }
    if (worst >= 1e-10) return {false, "projector family residual " + std::to_string(worst)};
    char buf[128];
    std::snprintf(buf, sizeof(buf),
                  "K=32: P_1 fixes a (%.2e), off-weights vanish, family residual %.2e", fix,
                  worst);
    return {true, buf};
}

Outcome criterion_cleaving() {
    S3Grid::Params params;
    params.n_eta = params.n_xi1 = params.n_xi2 = 24;
    const GridPtr g = S3Grid::make(params);
    const auto mask = HemisphereMask::hemisphere(g, HemisphereMask::Kind::A);

    std::vector<SampledFunction> j;
    for (int n = -6; n <= 6; ++n) j.push_back(cleave(n, mask));
    auto at = [&](int n) -> const SampledFunction& { return j[n + 6]; };

    double mult = 0.0;
    for (int m = -3; m <= 3; ++m)
        for (int n = -3; n <= 3; ++n)
            mult = std::max(mult, (at(m) * at(n) - at(m + n)).max_abs());
    if (mult >= 1e-10) return {false, "multiplicativity residual " + std::to_string(mult)};

    const double unit = std::max(std::abs(at(1).max_abs() - 1.0),
                                 std::abs(at(1).min_abs() - 1.0));
    if (unit >= 1e-12) return {false, "|j(u)| deviates by " + std::to_string(unit)};

    const auto a = coordinate_a(g);
    const auto cbar = coordinate_c(g).conjugated();
    double round_trip = 0.0;
    for (const SampledFunction& x : {a, cbar, a * a * cbar}) {
        const auto split = trivialization_iso(x, mask);
        round_trip = std::max(
            round_trip,
            (split.disk * cleave(split.weight, mask) - x.restricted(mask)).max_abs());
    }
    if (round_trip >= 1e-10)
        return {false, "round-trip residual " + std::to_string(round_trip)};

    char buf[160];
    std::snprintf(buf, sizeof(buf),
                  "multiplicativity %.2e, unit modulus %.2e, round trip %.2e on a, conj(c), "
                  "a^2 conj(c)",
                  mult, unit, round_trip);
    return {true, buf};
}

Outcome criterion_prolongation() {
    S3Grid::Params params;
    params.n_eta = params.n_xi1 = params.n_xi2 = 24;
    const GridPtr g = S3Grid::make(params);
    const PresPtr p = presets::specialized_presentation(presets::suq2(), Rational(1, 2));

    double worst = 0.0;
    std::string worst_name;
    for (auto kind : {HemisphereMask::Kind::A, HemisphereMask::Kind::C}) {
        const auto mask = HemisphereMask::hemisphere(g, kind);
        for (const auto& check : check_hybrid_relations(p, mask)) {
            if (check.residual >= worst) {
                worst = check.residual;
                worst_name = check.relation + " on " + mask->name();
            }
        }
    }
    if (worst >= 1e-10) return {false, worst_name + " residual " + std::to_string(worst)};
    char buf[160];
    std::snprintf(buf, sizeof(buf), "five relations at q=1/2 on both hemispheres, worst %.2e (%s)",
                  worst, worst_name.c_str());
    return {true, buf};
}

Outcome criterion_obstruction() {
    S3Grid::Params params;
    params.n_eta = params.n_xi1 = params.n_xi2 = 4;
    const GridPtr g = S3Grid::make(params);  // equator_samples=1024
    const ObstructionReport report = obstruction_verdict(g, {64, 256, 1024}, std::nullopt);

    if (!report.forcing.chain_holds) return {false, "symbolic forcing chain failed"};
    for (const auto& w : report.windings) {
        if (w.max_unit_deviation >= 1e-12)
            return {false, "unit modulus residual " + std::to_string(w.max_unit_deviation) +
                               " at M=" + std::to_string(w.samples)};
        if (w.degree != 1)
            return {false, "winding " + std::to_string(w.degree) +
                               " at M=" + std::to_string(w.samples)};
    }
    if (report.constant_control_degree != 0)
        return {false, "constant control wound " +
                           std::to_string(report.constant_control_degree)};
    if (report.squared_control_degree != 2)
        return {false, "squared control wound " +
                           std::to_string(report.squared_control_degree)};
    if (report.verdict != "obstructed") return {false, "verdict was " + report.verdict};
    if (report.classical_control != "not obstructed")
        return {false, "classical control was " + report.classical_control};
    if (report.caveat.empty()) return {false, "missing scope caveat"};
    return {true,
            "winding +1 at M=64,256,1024, controls 0 and 2, verdict obstructed, classical "
            "control not obstructed, caveat stated"};
}

}  // namespace

int main() {
    struct Criterion {
        const char* title;
        std::function<Outcome()> body;
    };
    const std::vector<Criterion> criteria = {
        {"exact rewriting and confluence", criterion_rewriting},
        {"Hopf axioms and relation compatibility", criterion_hopf},
        {"principality witness", criterion_connection},
        {"cotensor structure", criterion_cotensor},
        {"numeric identities on the 48^3 grid", criterion_numeric_identities},
        {"fiber weight projectors", criterion_projectors},
        {"cleaving maps", criterion_cleaving},
        {"prolonged cleaving", criterion_prolongation},
        {"obstruction at desk scale", criterion_obstruction},
    };

    bool all_ok = true;
    for (size_t i = 0; i < criteria.size(); ++i) {
        const auto t0 = std::chrono::steady_clock::now();
        Outcome outcome;
        try {
            outcome = criteria[i].body();
        } catch (const std::exception& ex) {
            outcome = {false, std::string("exception: ") + ex.what()};
        }
        const double secs =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        std::printf("[%s] %zu. %s -- %s (%.1fs)\n", outcome.first ? "PASS" : "FAIL", i + 1,
                    criteria[i].title, outcome.second.c_str(), secs);
        std::fflush(stdout);
        all_ok = all_ok && outcome.first;
    }
    return all_ok ? 0 : 1;
}

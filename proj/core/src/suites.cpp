#include "qbundle/suites.hpp"

#include <chrono>
#include <cmath>
#include <functional>
#include <sstream>
#include <stdexcept>

#include "qbundle/coaction.hpp"
#include "qbundle/dsl.hpp"
#include "qbundle/hopf.hpp"
#include "qbundle/hybrid.hpp"
#include "qbundle/obstruction.hpp"
#include "qbundle/presets.hpp"
#include "qbundle/pwfun.hpp"

namespace qbundle {

namespace {

/// Collects timed check results; exceptions inside a check become failures
/// with the message as witness.
class SuiteRun {
public:
    SuiteRun(std::string suite, ReportEnvironment env, std::optional<double> tol_override) {
        report_.suite = std::move(suite);
        report_.environment = std::move(env);
        tol_ = tol_override;
    }

    void exact(const std::string& name,
               const std::function<std::pair<bool, std::string>()>& fn) {
        run(name, [&](CheckResult& c) {
            auto [ok, witness] = fn();
            c.exact = ok;
            c.status = ok ? "pass" : "fail";
            c.witness = witness;
        });
    }

    void residual(const std::string& name, double default_tol,
                  const std::function<std::pair<double, std::string>()>& fn) {
        run(name, [&](CheckResult& c) {
            auto [value, witness] = fn();
            const double tol = tol_ ? *tol_ : default_tol;
            c.residual = value;
            c.tolerance = tol;
            c.status = value < tol ? "pass" : "fail";
            c.witness = witness;
        });
    }

    void custom(const std::string& name, const std::function<CheckResult()>& fn) {
        run(name, [&](CheckResult& c) {
            std::string keep = c.name;
            c = fn();
            c.name = keep;
        });
    }

    Report finish() {
        report_.finalize();
        return std::move(report_);
    }

    std::optional<double> tolerance_override() const { return tol_; }

private:
    void run(const std::string& name, const std::function<void(CheckResult&)>& body) {
        CheckResult c;
        c.name = name;
        const auto t0 = std::chrono::steady_clock::now();
        try {
            body(c);
        } catch (const std::exception& ex) {
            c.status = "fail";
            c.witness = ex.what();
        }
        const auto t1 = std::chrono::steady_clock::now();
        c.runtime_ms = std::chrono::duration<double, std::milli>(t1 - t0).count();
        report_.checks.push_back(std::move(c));
    }

    Report report_;
    std::optional<double> tol_;
};

struct NumericSetup {
    S3Grid::Params params;
    GridPtr grid;
    std::string describe;
};

NumericSetup make_grid(const SuiteOptions& o, int default_n) {
    S3Grid::Params p;
    if (o.grid) {
        p.n_eta = (*o.grid)[0];
        p.n_xi1 = (*o.grid)[1];
        p.n_xi2 = (*o.grid)[2];
    } else {
        p.n_eta = p.n_xi1 = p.n_xi2 = default_n;
    }
    p.fiber_samples = o.fiber_samples > 0 ? o.fiber_samples : 32;
    p.equator_samples = o.equator_samples > 0 ? o.equator_samples : 1024;
    NumericSetup s;
    s.params = p;
    s.grid = S3Grid::make(p);
    std::ostringstream os;
    os << p.n_eta << "x" << p.n_xi1 << "x" << p.n_xi2;
    s.describe = os.str();
    return s;
}

ReportEnvironment make_env(const std::string& algebra, const std::string& q, int degree,
                           const std::string& grid, int K, int E,
                           const std::optional<double>& tol) {
    ReportEnvironment env;
    env.algebra = algebra;
    env.q = q;
    env.max_degree = degree;
    env.grid = grid;
    env.fiber_samples = K;
    env.equator_samples = E;
    env.tolerance = tol ? std::to_string(*tol) : "defaults";
    return env;
}

std::string q_label(const PresPtr& p) {
    return p->q_value() ? rational_to_string(*p->q_value()) : "formal";
}

PresPtr resolve_algebra(const SuiteOptions& o, const std::string& fallback) {
    const std::string name = o.algebra.empty() ? fallback : o.algebra;
    return load_presentation(name, o.q, !o.skip_confluence);
}

int resolve_degree(const SuiteOptions& o, int fallback) {
    return o.max_degree > 0 ? o.max_degree : fallback;
}

std::optional<presets::MatrixGens> try_matrix_gens(const Presentation& p) {
    try {
        return presets::matrix_generators(p);
    } catch (const std::logic_error&) {
        return std::nullopt;
    }
}

struct Lcg {
    uint64_t state;
    uint32_t next() {
        state = state * 6364136223846793005ull + 1442695040888963407ull;
        return static_cast<uint32_t>(state >> 33);
    }
};

Element random_element(const PresPtr& p, Lcg& rng, int max_len) {
    TermList terms;
    const int nterms = 1 + rng.next() % 2;
    for (int t = 0; t < nterms; ++t) {
        Word w;
        const int len = rng.next() % (max_len + 1);
        for (int i = 0; i < len; ++i) w.push_back(rng.next() % p->generator_count());
        terms.emplace_back(w, QLaurent(1 + rng.next() % 3));
    }
    return Element::from_terms(p, terms);
}

// ---------------------------------------------------------------- suites

void suite_relations(SuiteRun& run, const PresPtr& p, int degree) {
    run.exact("rewriting ideal is closed under the adjoint", [&] {
        for (const auto& rule : p->rules()) {
            Element lhs = Element::from_word(p, p->star_word(rule.lhs));
            Element rhs = Element::from_terms(p, rule.rhs).star();
            if (lhs != rhs)
                return std::make_pair(false, "rule " + p->word_to_string(rule.lhs) +
                                                 " breaks star closure");
        }
        return std::make_pair(true,
                              std::to_string(p->rules().size()) + " rules adjoint-checked");
    });

    if (auto g = try_matrix_gens(*p)) {
        run.exact("normal form of the basic commutator", [&] {
            const Element a = Element::generator(p, g->a);
            const Element as = Element::generator(p, g->a_star);
            const Element ccs =
                Element::generator(p, g->c) * Element::generator(p, g->c_star);
            const Element commutator = a * as - as * a;
            const Element expected = (QLaurent(1) - presets::structure_q(*p, 2)) * ccs;
            return std::make_pair(commutator == expected, commutator.to_string());
        });
        run.exact("sphere relation reduces to the unit", [&] {
            const Element s = Element::generator(p, g->a_star) * Element::generator(p, g->a) +
                              Element::generator(p, g->c_star) * Element::generator(p, g->c);
            return std::make_pair(s == Element::unit(p), s.to_string());
        });
    }
    if (p->find_generator("u") >= 0 && p->generator_count() == 2) {
        run.exact("circle generator is unitary", [&] {
            const Element u = Element::generator(p, "u");
            const Element prod = u * u.star();
            const Element prod2 = u.star() * u;
            const bool ok = prod == Element::unit(p) && prod2 == Element::unit(p);
            return std::make_pair(ok, prod.to_string());
        });
    }

    run.exact("products of random elements stay associative and normal", [&] {
        Lcg rng{0x9e3779b97f4a7c15ull};
        for (int trial = 0; trial < 20; ++trial) {
            Element x = random_element(p, rng, degree);
            Element y = random_element(p, rng, degree);
            Element z = random_element(p, rng, degree);
            if ((x * y) * z != x * (y * z))
                return std::make_pair(false, "associativity broke at trial " +
                                                 std::to_string(trial));
            const Element xy = x * y;
            for (const auto& [w, c] : xy.terms())
                if (!p->is_normal_word(w))
                    return std::make_pair(false,
                                          "reducible word " + p->word_to_string(w) +
                                              " escaped normalization");
        }
        return std::make_pair(true, std::string("20 random triples checked"));
    });
}

void suite_hopf(SuiteRun& run, const PresPtr& p, int degree) {
    run.exact("coalgebra and antipode axioms on normal words", [&] {
        auto bad = verify_hopf_axioms(p, degree);
        if (!bad.empty()) return std::make_pair(false, bad.front());
        return std::make_pair(true, "all normal words of degree <= " + std::to_string(degree));
    });
    run.exact("structure maps descend to the quotient", [&] {
        auto bad = verify_relation_compat(p);
        if (!bad.empty()) return std::make_pair(false, bad.front());
        return std::make_pair(true,
                              std::to_string(p->rules().size()) + " rules annihilated");
    });
    const PresPtr circle = presets::u1();
    if (p != circle) {
        const int circle_degree = std::max(degree, 6);
        run.exact("circle algebra axioms on Laurent words", [&] {
            auto bad = verify_hopf_axioms(circle, circle_degree);
            if (!bad.empty()) return std::make_pair(false, bad.front());
            return std::make_pair(true, "powers up to |n| <= " + std::to_string(circle_degree));
        });
        run.exact("circle structure maps descend to the quotient", [&] {
            auto bad = verify_relation_compat(circle);
            if (!bad.empty()) return std::make_pair(false, bad.front());
            return std::make_pair(true, std::string("2 rules annihilated"));
        });
    }
}

void suite_confluence(SuiteRun& run, const PresPtr& p, int degree) {
    run.exact("every rule decreases the termination order", [&] {
        p->check_termination();
        return std::make_pair(true, std::to_string(p->rules().size()) + " rules oriented");
    });
    run.exact("all overlap ambiguities resolve", [&] {
        auto report = p->check_local_confluence();
        for (const auto& c : report.cases) {
            if (!c.resolved)
                return std::make_pair(false, "ambiguity " + p->word_to_string(c.ambiguity) +
                                                 ": " + c.route_a + " vs " + c.route_b);
        }
        return std::make_pair(true, std::to_string(report.cases.size()) + " cases joined");
    });
    run.exact("normal words grow like the expected basis", [&] {
        auto words = p->normal_words_up_to(degree);
        std::vector<int> per_degree(degree + 1, 0);
        for (const auto& w : words) ++per_degree[qbundle::degree(w)];
        std::ostringstream counts;
        for (int d = 0; d <= degree; ++d) counts << (d ? ", " : "") << per_degree[d];
        const bool su2_like = try_matrix_gens(*p).has_value() && p->generator_count() == 4;
        const bool circle_like = p->generator_count() == 2;
        for (int d = 0; d <= degree; ++d) {
            int expected = -1;
            if (su2_like) expected = (d + 1) * (d + 1);
            if (circle_like) expected = d == 0 ? 1 : 2;
            if (expected >= 0 && per_degree[d] != expected)
                return std::make_pair(false, "degree " + std::to_string(d) + " has " +
                                                 std::to_string(per_degree[d]) +
                                                 " words, expected " +
                                                 std::to_string(expected));
        }
        return std::make_pair(true, "per-degree counts: " + counts.str());
    });
}

void suite_coaction(SuiteRun& run, const PresPtr& p, int degree) {
    run.exact("rules are weight homogeneous", [&] {
        for (CoactionSide side : {CoactionSide::left, CoactionSide::right}) {
            if (!p->coaction(side)) continue;
            auto bad = p->check_coaction_homogeneity(side);
            if (!bad.empty()) return std::make_pair(false, bad.front());
        }
        return std::make_pair(true, std::string("both declared sides checked"));
    });
    run.exact("the adjoint flips coaction weights", [&] {
        for (CoactionSide side : {CoactionSide::left, CoactionSide::right}) {
            if (!p->coaction(side)) continue;
            for (const auto& w : p->normal_words_up_to(degree)) {
                if (p->word_weight(p->star_word(w), side) != -p->word_weight(w, side))
                    return std::make_pair(false, "word " + p->word_to_string(w));
            }
        }
        return std::make_pair(true, "words up to degree " + std::to_string(degree));
    });
    run.exact("weights add under multiplication", [&] {
        if (!p->coaction(CoactionSide::right))
            return std::make_pair(true, std::string("no right coaction declared"));
        Lcg rng{0x2545f4914f6cdd1dull};
        for (int trial = 0; trial < 30; ++trial) {
            Word u, v;
            for (uint32_t i = rng.next() % 3; i > 0; --i)
                u.push_back(rng.next() % p->generator_count());
            for (uint32_t i = rng.next() % 3; i > 0; --i)
                v.push_back(rng.next() % p->generator_count());
            const int expected = p->word_weight(u, CoactionSide::right) +
                                 p->word_weight(v, CoactionSide::right);
            const Element prod = Element::from_word(p, concat(u, v));
            for (const auto& [w, c] : prod.terms())
                if (p->word_weight(w, CoactionSide::right) != expected)
                    return std::make_pair(false, "product " + p->word_to_string(concat(u, v)));
        }
        return std::make_pair(true, std::string("30 random products checked"));
    });
    run.exact("coinvariants match the weight-zero basis and multiply closed", [&] {
        if (!p->coaction(CoactionSide::right))
            return std::make_pair(true, std::string("no right coaction declared"));
        auto basis = coinvariant_basis(p, CoactionSide::right, degree);
        for (const auto& w : basis)
            if (p->word_weight(w, CoactionSide::right) != 0)
                return std::make_pair(false, "nonzero weight in basis: " + p->word_to_string(w));
        int expected = 0;
        for (const auto& w : p->normal_words_up_to(degree))
            if (p->word_weight(w, CoactionSide::right) == 0) ++expected;
        if (static_cast<int>(basis.size()) != expected)
            return std::make_pair(false, "basis size " + std::to_string(basis.size()) +
                                             " vs weight scan " + std::to_string(expected));
        for (size_t i = 0; i < basis.size(); ++i) {
            for (size_t j = 0; j < basis.size(); ++j) {
                if (qbundle::degree(basis[i]) + qbundle::degree(basis[j]) > degree) continue;
                const Element prod = Element::from_word(p, concat(basis[i], basis[j]));
                for (const auto& [w, c] : prod.terms())
                    if (p->word_weight(w, CoactionSide::right) != 0)
                        return std::make_pair(false, std::string("product of coinvariants left the coinvariant span"));
            }
        }
        return std::make_pair(true, std::to_string(basis.size()) + " basis words");
    });
}

void suite_cotensor(SuiteRun& run, const PresPtr& p, int degree) {
    const PresPtr circle = presets::u1();
    run.exact("membership is exactly the weight pairing on basis tensors", [&] {
        if (!p->coaction(CoactionSide::right) || !p->coaction(CoactionSide::left))
            return std::make_pair(false, std::string("algebra lacks a two-sided coaction"));
        auto words = p->normal_words_up_to(degree);
        int accepted = 0, rejected = 0;
        for (const auto& w1 : words) {
            for (const auto& w2 : words) {
                TensorElement t({p, p});
                t.add({w1, w2}, QLaurent(1));
                std::string witness;
                const bool in = cotensor_check(t, circle, &witness);
                const bool expected = p->word_weight(w1, CoactionSide::right) ==
                                      p->word_weight(w2, CoactionSide::left);
                if (in != expected)
                    return std::make_pair(false, p->word_to_string(w1) + " (x) " +
                                                     p->word_to_string(w2) +
                                                     (in ? " wrongly accepted"
                                                         : " wrongly rejected: " + witness));
                (in ? accepted : rejected)++;
            }
        }
        return std::make_pair(true, std::to_string(accepted) + " accepted, " +
                                        std::to_string(rejected) + " rejected of " +
                                        std::to_string(words.size() * words.size()) +
                                        " bidegree pairs");
    });
    run.exact("mismatched tensors carry a weight witness", [&] {
        if (!p->coaction(CoactionSide::right))
            return std::make_pair(false, std::string("no right coaction"));
        auto words = p->normal_words_up_to(degree);
        for (const auto& w1 : words) {
            for (const auto& w2 : words) {
                if (p->word_weight(w1, CoactionSide::right) ==
                    p->word_weight(w2, CoactionSide::left))
                    continue;
                TensorElement t({p, p});
                t.add({w1, w2}, QLaurent(1));
                std::string witness;
                cotensor_check(t, circle, &witness);
                if (witness.empty())
                    return std::make_pair(false, std::string("missing witness"));
                return std::make_pair(true, "first mismatch: " + witness);
            }
        }
        return std::make_pair(true, std::string("no mismatched pair exists"));
    });
}

void suite_connection(SuiteRun& run, const PresPtr& p, int degree) {
    const PresPtr circle = presets::u1();
    run.exact("canonical map sends each lift to its group like", [&] {
        for (int n = -degree; n <= degree; ++n) {
            TensorElement lift = strong_connection(p, n);
            TensorElement expected(std::vector<PresPtr>{p, circle});
            expected.add({Word{}, circle_word(circle, n)}, QLaurent(1));
            if (canonical_map(lift, circle) != expected)
                return std::make_pair(false, "lift of power " + std::to_string(n));
        }
        return std::make_pair(true, "powers |n| <= " + std::to_string(degree));
    });
    run.exact("lift contractions collapse to the unit", [&] {
        for (int n = -degree; n <= degree; ++n) {
            if (contract(strong_connection(p, n)) != Element::unit(p))
                return std::make_pair(false, "contraction of lift " + std::to_string(n));
        }
        return std::make_pair(true, std::string("multiplication after lift is unital"));
    });
    run.exact("lifts are counit normalized", [&] {
        for (int n = -degree; n <= degree; ++n) {
            QLaurent acc;
            const TensorElement lift = strong_connection(p, n);
            for (const auto& [key, c] : lift.terms())
                acc += c * counit_word(p, key[0]) * counit_word(p, key[1]);
            if (!acc.is_one())
                return std::make_pair(false, "counit pairing of lift " + std::to_string(n) +
                                                 " is " + acc.to_string());
        }
        return std::make_pair(true, std::string("counit pairing equals one"));
    });
}

void suite_numeric(SuiteRun& run, const NumericSetup& s) {
    const GridPtr& g = s.grid;
    run.residual("grid nodes satisfy the sphere relation", 1e-14, [&] {
        auto a = coordinate_a(g);
        auto c = coordinate_c(g);
        auto r = a * a.conjugated() + c * c.conjugated() - SampledFunction::constant(g, 1.0);
        return std::make_pair(r.max_abs(), std::to_string(g->node_count()) + " nodes");
    });
    run.residual("hemisphere normalizer covers the sphere", 1e-12, [&] {
        auto a = coordinate_a(g);
        auto c = coordinate_c(g);
        auto w2 = omega(g) * omega(g);
        auto one = SampledFunction::constant(g, 1.0);
        auto product = (one - w2 * (a * a.conjugated())) * (one - w2 * (c * c.conjugated()));
        return std::make_pair(product.max_abs(),
                              std::string("(1-w^2|a|^2)(1-w^2|c|^2) vanishes pointwise"));
    });
    run.residual("normalized coordinate is unimodular on its hemisphere", 1e-12, [&] {
        auto mask_a = HemisphereMask::hemisphere(g, HemisphereMask::Kind::A);
        auto mask_c = HemisphereMask::hemisphere(g, HemisphereMask::Kind::C);
        auto w2 = omega(g) * omega(g);
        auto da = (w2 * (coordinate_a(g) * coordinate_a(g).conjugated()) -
                   SampledFunction::constant(g, 1.0)).restricted(mask_a);
        auto dc = (w2 * (coordinate_c(g) * coordinate_c(g).conjugated()) -
                   SampledFunction::constant(g, 1.0)).restricted(mask_c);
        return std::make_pair(std::max(da.max_abs(), dc.max_abs()),
                              std::string("both hemispheres"));
    });
    run.residual("quadrature reproduces the sphere volume", 1e-12, [&] {
        const double vol = SampledFunction::constant(g, 1.0).integrate().real();
        const double expected = 2.0 * 3.14159265358979323846 * 3.14159265358979323846;
        return std::make_pair(std::abs(vol - expected), "volume " + std::to_string(vol));
    });
    run.residual("fiber projector fixes the matching weight", 1e-12, [&] {
        auto a = coordinate_a(g);
        return std::make_pair((fourier_weight_project(a, 1) - a).max_abs(),
                              std::string("P_1(a) = a"));
    });
    run.residual("fiber projector annihilates other weights", 1e-12, [&] {
        auto a = coordinate_a(g);
        double worst = 0.0;
        for (int m : {-2, -1, 0, 2})
            worst = std::max(worst, fourier_weight_project(a, m).max_abs());
        return std::make_pair(worst, std::string("m in {-2,-1,0,2}"));
    });
    run.residual("projector family is orthogonal and idempotent", 1e-10, [&] {
        S3Grid::Params fp = s.params;
        fp.n_eta = std::min(fp.n_eta, 16);
        fp.n_xi1 = std::min(fp.n_xi1, 16);
        fp.n_xi2 = std::min(fp.n_xi2, 16);
        GridPtr fg = S3Grid::make(fp);
        auto a = coordinate_a(fg);
        auto cbar = coordinate_c(fg).conjugated();
        double worst = 0.0;
        for (int i = 0; i <= 3; ++i) {
            for (int j = 0; j <= 3; ++j) {
                SampledFunction f = SampledFunction::constant(fg, 1.0);
                for (int k = 0; k < i; ++k) f *= a;
                for (int k = 0; k < j; ++k) f *= cbar;
                for (int m = -4; m <= 4; ++m) {
                    SampledFunction pm = fourier_weight_project(f, m);
                    for (int n = -4; n <= 4; ++n) {
                        SampledFunction pn = fourier_weight_project(pm, n);
                        const double r =
                            (n == m) ? (pn - pm).max_abs() : pn.max_abs();
                        worst = std::max(worst, r);
                    }
                }
            }
        }
        std::ostringstream os;
        os << "family a^i conj(c)^j, i,j <= 3, weights |n| <= 4, grid " << fp.n_eta << "x"
           << fp.n_xi1 << "x" << fp.n_xi2;
        return std::make_pair(worst, os.str());
    });
}

void suite_cleaving(SuiteRun& run, const NumericSetup& s) {
    const GridPtr& g = s.grid;
    for (auto kind : {HemisphereMask::Kind::A, HemisphereMask::Kind::C}) {
        auto mask = HemisphereMask::hemisphere(g, kind);
        const std::string tag = " (hemisphere " + mask->name() + ")";
        run.residual("cleaving sections are multiplicative" + tag, 1e-10, [&] {
            double worst = 0.0;
            for (int m = -3; m <= 3; ++m)
                for (int n = -3; n <= 3; ++n)
                    worst = std::max(worst, (cleave(m, mask) * cleave(n, mask) -
                                             cleave(m + n, mask)).max_abs());
            return std::make_pair(worst, std::string("|m|,|n| <= 3"));
        });
        run.residual("generator section has unit modulus" + tag, 1e-12, [&] {
            auto j1 = cleave(1, mask);
            const double dev = std::max(std::abs(j1.max_abs() - 1.0),
                                        std::abs(j1.min_abs() - 1.0));
            return std::make_pair(dev, std::string("|j(u)| over the hemisphere"));
        });
        run.residual("sections pair to the unit" + tag, 1e-12, [&] {
            double worst = 0.0;
            auto one = SampledFunction::constant(g, 1.0).restricted(mask);
            for (int n = 1; n <= 3; ++n)
                worst = std::max(worst, (cleave(n, mask) * cleave(-n, mask) - one).max_abs());
            return std::make_pair(worst, std::string("n <= 3"));
        });
        run.residual("trivialization round trip" + tag, 1e-10, [&] {
            auto a = coordinate_a(g);
            auto cbar = coordinate_c(g).conjugated();
            struct Probe {
                const char* label;
                SampledFunction f;
            };
            const Probe probes[] = {{"a", a}, {"conj(c)", cbar}, {"a^2 conj(c)", a * a * cbar}};
            double worst = 0.0;
            for (const auto& probe : probes) {
                auto split = trivialization_iso(probe.f, mask);
                auto back = split.disk * cleave(split.weight, mask) - probe.f.restricted(mask);
                worst = std::max(worst, back.max_abs());
            }
            return std::make_pair(worst, std::string("probes a, conj(c), a^2 conj(c)"));
        });
    }
}

void suite_prolongation(SuiteRun& run, const PresPtr& p, const NumericSetup& s) {
    const GridPtr& g = s.grid;
    for (auto kind : {HemisphereMask::Kind::A, HemisphereMask::Kind::C}) {
        auto mask = HemisphereMask::hemisphere(g, kind);
        const std::string tag = " (hemisphere " + mask->name() + ")";
        run.residual("defining relations under the prolonged cleaving" + tag, 1e-10, [&] {
            double worst = 0.0;
            std::string worst_name;
            for (const auto& c : check_hybrid_relations(p, mask)) {
                if (c.residual >= worst) {
                    worst = c.residual;
                    worst_name = c.relation;
                }
            }
            return std::make_pair(worst, "worst relation: " + worst_name);
        });
        run.residual("prolonged cleaving is unital" + tag, 1e-12, [&] {
            auto one = prolonged_cleave(Element::unit(p), mask) -
                       HybridElement::unit(p, g, mask);
            return std::make_pair(one.max_abs(), std::string());
        });
        run.exact("prolonged images are colinear" + tag, [&] {
            for (GenId gen = 0; gen < p->generator_count(); ++gen) {
                auto bad = check_colinearity(
                    prolonged_cleave(Element::generator(p, gen), mask));
                if (!bad.empty()) return std::make_pair(false, bad.front());
            }
            Lcg rng{0x853c49e68282b29bull};
            for (int trial = 0; trial < 5; ++trial) {
                Word w;
                for (uint32_t i = rng.next() % 3; i > 0; --i)
                    w.push_back(rng.next() % p->generator_count());
                auto bad = check_colinearity(prolonged_cleave(Element::from_word(p, w), mask));
                if (!bad.empty()) return std::make_pair(false, bad.front());
            }
            return std::make_pair(true, std::string("generators and 5 random words"));
        });
        run.residual("prolonged cleaving is multiplicative on generator pairs" + tag, 1e-10,
                     [&] {
                         double worst = 0.0;
                         for (GenId x = 0; x < p->generator_count(); ++x) {
                             for (GenId y = 0; y < p->generator_count(); ++y) {
                                 Element ex = Element::generator(p, x);
                                 Element ey = Element::generator(p, y);
                                 auto d = prolonged_cleave(ex * ey, mask) -
                                          prolonged_cleave(ex, mask) * prolonged_cleave(ey, mask);
                                 worst = std::max(worst, d.max_abs());
                             }
                         }
                         return std::make_pair(worst, std::string("all generator pairs"));
                     });
    }
}

void suite_obstruction(SuiteRun& run, const SuiteOptions& options, const NumericSetup& s) {
    const std::vector<int> sample_counts = {64, 256, 1024};
    ObstructionReport report = obstruction_verdict(s.grid, sample_counts, options.q);

    for (size_t i = 0; i < report.forcing.steps.size(); ++i) {
        const auto& step = report.forcing.steps[i];
        run.custom("forcing step " + std::to_string(i + 1) + ": " + step.name, [&] {
            CheckResult c;
            c.status = step.status;
            c.exact = step.status == "pass";
            c.witness = step.detail;
            return c;
        });
    }
    run.residual("transition function has unit modulus", 1e-12, [&] {
        double worst = 0.0;
        for (const auto& w : report.windings) worst = std::max(worst, w.max_unit_deviation);
        return std::make_pair(worst, std::string("all sample counts"));
    });
    run.exact("winding number is one at every sampling", [&] {
        std::ostringstream os;
        bool ok = true;
        for (const auto& w : report.windings) {
            os << "M=" << w.samples << ": " << (w.degree >= 0 ? "+" : "") << w.degree << "  ";
            ok = ok && w.degree == 1;
        }
        return std::make_pair(ok, os.str());
    });
    run.exact("control loops wind as expected", [&] {
        const bool ok =
            report.constant_control_degree == 0 && report.squared_control_degree == 2;
        return std::make_pair(ok, "constant: " + std::to_string(report.constant_control_degree) +
                                      ", squared transition: " +
                                      std::to_string(report.squared_control_degree));
    });
    run.exact("classical trivial bundle is unobstructed", [&] {
        return std::make_pair(report.classical_control == "not obstructed",
                              report.classical_control);
    });
    run.custom("obstruction verdict", [&] {
        CheckResult c;
        if (report.verdict == "obstructed") {
            c.status = "pass";
        } else if (report.forcing.vacuous) {
            c.status = "vacuous";
        } else {
            c.status = "fail";
        }
        c.witness = report.verdict + ". " + report.caveat;
        return c;
    });
}

Report run_single(const std::string& name, const SuiteOptions& options);

Report run_all(const SuiteOptions& options) {
    ReportEnvironment env = make_env(options.algebra.empty() ? "per-suite" : options.algebra,
                                     options.q ? rational_to_string(*options.q) : "per-suite",
                                     options.max_degree, "per-suite",
                                     options.fiber_samples, options.equator_samples,
                                     options.tol);
    Report all;
    all.suite = "all";
    all.environment = env;
    for (const auto& sub : suite_names()) {
        if (sub == "all") continue;
        Report r = run_single(sub, options);
        for (auto& c : r.checks) {
            c.name = sub + ": " + c.name;
            all.checks.push_back(std::move(c));
        }
    }
    all.finalize();
    return all;
}

Report run_single(const std::string& name, const SuiteOptions& options) {
    if (name == "relations" || name == "hopf-axioms" || name == "confluence" ||
        name == "coaction" || name == "cotensor" || name == "connection") {
        PresPtr p = resolve_algebra(options, "suq2");
        const int fallback = (name == "hopf-axioms" || name == "confluence" ||
                              name == "connection") ? 4 : 3;
        const int degree = resolve_degree(options, fallback);
        SuiteRun run(name, make_env(p->name(), q_label(p), degree, "-", 0, 0, options.tol),
                     options.tol);
        if (name == "relations") suite_relations(run, p, degree);
        if (name == "hopf-axioms") suite_hopf(run, p, degree);
        if (name == "confluence") suite_confluence(run, p, degree);
        if (name == "coaction") suite_coaction(run, p, degree);
        if (name == "cotensor") suite_cotensor(run, p, degree);
        if (name == "connection") suite_connection(run, p, degree);
        return run.finish();
    }

    if (name == "numeric-identities" || name == "cleaving") {
        NumericSetup s = make_grid(options, name == "numeric-identities" ? 48 : 24);
        SuiteRun run(name,
                     make_env("-", "-", 0, s.describe, s.params.fiber_samples,
                              s.params.equator_samples, options.tol),
                     options.tol);
        if (name == "numeric-identities") suite_numeric(run, s);
        if (name == "cleaving") suite_cleaving(run, s);
        return run.finish();
    }

    if (name == "prolongation") {
        SuiteOptions o = options;
        if (!o.q && (o.algebra.empty() || o.algebra == "suq2")) o.q = Rational(1, 2);
        PresPtr p = resolve_algebra(o, "suq2");
        if (!p->q_value())
            throw std::invalid_argument(
                "prolongation requires a numeric q (pass --q or use a fixed-q algebra)");
        NumericSetup s = make_grid(options, 24);
        SuiteRun run(name,
                     make_env(p->name(), q_label(p), 0, s.describe, s.params.fiber_samples,
                              s.params.equator_samples, options.tol),
                     options.tol);
        suite_prolongation(run, p, s);
        return run.finish();
    }

    if (name == "obstruction") {
        NumericSetup s = make_grid(options, 8);
        SuiteRun run(name,
                     make_env("suq2", options.q ? rational_to_string(*options.q) : "formal", 0,
                              s.describe, s.params.fiber_samples, s.params.equator_samples,
                              options.tol),
                     options.tol);
        suite_obstruction(run, options, s);
        return run.finish();
    }

    throw std::invalid_argument("unknown suite '" + name + "'");
}

}  // namespace

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names = {
        "relations", "hopf-axioms", "confluence",         "coaction",
        "cotensor",  "connection",  "numeric-identities", "cleaving",
        "prolongation", "obstruction", "all"};
    return names;
}

Report run_suite(const std::string& name, const SuiteOptions& options) {
    if (name == "all") return run_all(options);
    return run_single(name, options);
}

}  // namespace qbundle

#include <doctest.h>

#include <functional>

#include "qbundle/hopf.hpp"
#include "qbundle/presets.hpp"

using namespace qbundle;

namespace {

/// Rebuild a presentation through the public API, letting the caller edit
/// the Hopf data before it is frozen.
PresPtr clone_with_hopf(const PresPtr& src, const std::function<void(HopfData&)>& edit) {
    PresentationBuilder b(src->name() + "-edited");
    for (GenId g = 0; g < src->generator_count(); ++g)
        b.add_generator(src->generator(g).name);
    for (GenId g = 0; g < src->generator_count(); ++g)
        if (src->star_of(g) >= g)
            b.set_star_pair(g, src->star_of(g));
    for (const auto& rule : src->rules())
        b.add_rule(rule.lhs, rule.rhs);
    HopfData h = *src->hopf();
    edit(h);
    b.set_hopf(std::move(h));
    return b.build();
}

}  // namespace

TEST_CASE("generator coproducts") {
    PresPtr p = presets::suq2();
    GenId c = p->find_generator("gamma");
    GenId cs = p->find_generator("gamma^*");
    GenId a = p->find_generator("alpha");
    GenId as = p->find_generator("alpha^*");

    TensorElement da({p, p});
    da.add({{a}, {a}}, QLaurent(1));
    da.add({{cs}, {c}}, -QLaurent::q(1));
    CHECK(comultiply(Element::generator(p, a)) == da);

    TensorElement dc({p, p});
    dc.add({{c}, {a}}, QLaurent(1));
    dc.add({{as}, {c}}, QLaurent(1));
    CHECK(comultiply(Element::generator(p, c)) == dc);
}

TEST_CASE("coproduct of a product expands with four terms") {
    PresPtr p = presets::suq2();
    GenId c = p->find_generator("gamma");
    GenId cs = p->find_generator("gamma^*");
    GenId a = p->find_generator("alpha");
    GenId as = p->find_generator("alpha^*");
    Element ac = Element::generator(p, a) * Element::generator(p, c);

    TensorElement expect({p, p});
    expect.add({{c, a}, {a, a}}, QLaurent::q(1));
    expect.add({{}, {c, a}}, QLaurent::q(1));
    expect.add({{c, cs}, {c, a}}, -(QLaurent::q(3) + QLaurent::q(1)));
    expect.add({{cs, as}, {c, c}}, -QLaurent::q(1));
    CHECK(comultiply(ac) == expect);

    Element ca = Element::generator(p, c) * Element::generator(p, a);
    CHECK(comultiply(ac) == QLaurent::q(1) * comultiply(ca));
}

TEST_CASE("counit on a relation combination") {
    PresPtr p = presets::suq2();
    Element a = Element::generator(p, "alpha");
    Element c = Element::generator(p, "gamma");
    CHECK(counit(a * a.star() + QLaurent::q(2) * (c * c.star())) == QLaurent(1));
    CHECK(counit(c).is_zero());
}

TEST_CASE("antipode values") {
    PresPtr p = presets::suq2();
    Element a = Element::generator(p, "alpha");
    Element c = Element::generator(p, "gamma");
    CHECK(antipode(a) == a.star());
    CHECK(antipode(c) == -QLaurent::q(1) * c);
    CHECK(antipode(c.star()) == -QLaurent::q(-1) * c.star());
    CHECK(antipode(a * c) == -QLaurent::q(1) * (c * a.star()));
}

TEST_CASE("axiom suite passes on the presets") {
    CHECK(verify_hopf_axioms(presets::suq2(), 3).empty());
    CHECK(verify_hopf_axioms(presets::u1(), 6).empty());
    CHECK(verify_hopf_axioms(presets::su2(), 3).empty());
}

TEST_CASE("structure maps descend through every rule") {
    CHECK(verify_relation_compat(presets::suq2()).empty());
    CHECK(verify_relation_compat(presets::u1()).empty());
    CHECK(verify_relation_compat(presets::su2()).empty());
    CHECK(verify_relation_compat(presets::suq2_at(Rational(1, 2))).empty());
}

TEST_CASE("a wrong antipode is caught with a witness") {
    PresPtr broken = clone_with_hopf(presets::suq2(), [](HopfData& h) {
        h.gens[2].antipode = {{{GenId(2)}, QLaurent(1)}};
    });
    auto bad = verify_hopf_axioms(broken, 1);
    REQUIRE(!bad.empty());
    bool saw_alpha = false;
    for (const auto& msg : bad)
        saw_alpha = saw_alpha || msg.find("alpha") != std::string::npos;
    CHECK(saw_alpha);
}

TEST_CASE("a wrong coproduct breaks relation compatibility") {
    PresPtr broken = clone_with_hopf(presets::suq2(), [](HopfData& h) {
        h.gens[0].coproduct.pop_back();
    });
    CHECK(!verify_relation_compat(broken).empty());
}

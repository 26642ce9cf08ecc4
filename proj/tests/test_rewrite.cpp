#include <doctest.h>

#include <stdexcept>

#include "qbundle/element.hpp"
#include "qbundle/presets.hpp"

using namespace qbundle;

namespace {

struct Suq2 {
    PresPtr p = presets::suq2();
    Element c = Element::generator(p, "gamma");
    Element cs = Element::generator(p, "gamma^*");
    Element a = Element::generator(p, "alpha");
    Element as = Element::generator(p, "alpha^*");
};

}  // namespace

TEST_CASE("defining relations reduce to normal form") {
    Suq2 s;
    CHECK(s.a * s.c == QLaurent::q(1) * (s.c * s.a));
    CHECK(s.cs * s.c == s.c * s.cs);
    CHECK(s.as * s.a == Element::unit(s.p) - s.c * s.cs);
    CHECK(s.a * s.as == Element::unit(s.p) - QLaurent::q(2) * (s.c * s.cs));
}

TEST_CASE("commutator of alpha with its adjoint") {
    Suq2 s;
    Element commutator = s.a * s.as - s.as * s.a;
    Element expected = (QLaurent(1) - QLaurent::q(2)) * (s.c * s.cs);
    CHECK(commutator == expected);
    CHECK(commutator.to_string() == "(1 - q^2) * gamma * gamma^*");
}

TEST_CASE("mixed product expands to normal form") {
    Suq2 s;
    Element lhs = (s.a + s.c) * s.as;
    Element expected =
        Element::unit(s.p) - QLaurent::q(2) * (s.c * s.cs) + s.c * s.as;
    CHECK(lhs == expected);
}

TEST_CASE("adjoint is an anti-homomorphism") {
    Suq2 s;
    CHECK((s.a * s.c).star() == s.cs * s.as);
    Element x = s.a * s.c + QLaurent::q(3) * (s.cs * s.cs);
    Element y = s.as * s.c - Element::unit(s.p);
    CHECK((x * y).star() == y.star() * x.star());
    CHECK(x.star().star() == x);
}

TEST_CASE("rewriting ideal is adjoint-closed") {
    for (PresPtr p : {presets::suq2(), presets::u1(), presets::su2()}) {
        for (const auto& rule : p->rules()) {
            Element lhs_star = Element::from_word(p, p->star_word(rule.lhs));
            Element rhs = Element::from_terms(p, rule.rhs);
            CHECK(lhs_star == rhs.star());
        }
    }
}

TEST_CASE("normal word counts match the monomial basis") {
    auto words = presets::suq2()->normal_words_up_to(3);
    // Degree-n component has dimension (n+1)^2: words c^i c*^j a^k and
    // c^i c*^j a*^l with l >= 1.
    CHECK(words.size() == 1 + 4 + 9 + 16);
    for (const auto& w : words)
        CHECK(presets::suq2()->is_normal_word(w));

    auto circle = presets::u1()->normal_words_up_to(3);
    CHECK(circle.size() == 7);
}

TEST_CASE("local confluence of the preset systems") {
    auto rep = presets::suq2()->check_local_confluence();
    CHECK(rep.cases.size() == 8);
    CHECK(rep.all_resolved());

    auto circle = presets::u1()->check_local_confluence();
    CHECK(circle.cases.size() == 2);
    CHECK(circle.all_resolved());
}

TEST_CASE("non-confluent systems are rejected at build time") {
    PresentationBuilder b("broken");
    GenId x = b.add_generator("x");
    GenId y = b.add_generator("y");
    b.set_self_adjoint(x);
    b.set_self_adjoint(y);
    b.add_rule({x, y}, {{{x}, QLaurent(1)}});
    b.add_rule({y, x}, {{{y}, QLaurent(1)}});
    CHECK_THROWS_AS(b.build(), std::logic_error);
}

TEST_CASE("deg-lex violations are rejected at build time") {
    PresentationBuilder b("growing");
    GenId x = b.add_generator("x");
    b.set_self_adjoint(x);
    b.add_rule({x}, {{{x, x}, QLaurent(1)}});
    CHECK_THROWS_AS(b.build(), std::logic_error);
}

TEST_CASE("specialization is a ring map onto the numeric-q algebra") {
    Suq2 s;
    PresPtr ph = presets::suq2_at(Rational(1, 2));
    Element x = s.a * s.as - s.as * s.a;
    Element sx = x.specialized(ph);
    Element expected = QLaurent(Rational(3, 4)) *
                       (Element::generator(ph, "gamma") * Element::generator(ph, "gamma^*"));
    CHECK(sx == expected);

    // Specializing commutes with multiplication.
    Element y = s.c * s.as + s.cs;
    CHECK((x * y).specialized(ph) == x.specialized(ph) * y.specialized(ph));

    // Caching keeps a single shared instance per q0.
    CHECK(presets::suq2_at(Rational(1, 2)) == ph);
}

TEST_CASE("classical limit is commutative") {
    PresPtr p = presets::su2();
    Element a = Element::generator(p, "a");
    Element c = Element::generator(p, "c");
    CHECK(a * c == c * a);
    CHECK(a * c.star() == c.star() * a);
    CHECK(a * a.star() == Element::unit(p) - c * c.star());
}

TEST_CASE("circle projection is a star algebra map") {
    Morphism pi = presets::circle_projection(presets::suq2());
    CHECK(pi.check_relations().empty());
    CHECK(pi.is_star_map());

    Suq2 s;
    PresPtr h = presets::u1();
    Element u = Element::generator(h, "u");
    CHECK(pi.apply(s.a * s.a) == u * u);
    CHECK(pi.apply(s.a * s.a * s.cs).is_zero());
    CHECK(pi.apply(s.as * s.a + s.cs * s.c) == Element::unit(h));
}

TEST_CASE("coaction weights") {
    PresPtr p = presets::suq2();
    GenId c = p->find_generator("gamma");
    GenId as = p->find_generator("alpha^*");
    CHECK(p->word_weight({c, as}, CoactionSide::right) == 0);
    CHECK(p->word_weight({c, as}, CoactionSide::left) == -2);
    CHECK(p->check_coaction_homogeneity(CoactionSide::right).empty());
    CHECK(p->check_coaction_homogeneity(CoactionSide::left).empty());
    CHECK(presets::u1()->check_coaction_homogeneity(CoactionSide::right).empty());
}

TEST_CASE("mixing algebras is an error") {
    Element a = Element::generator(presets::suq2(), "alpha");
    Element u = Element::generator(presets::u1(), "u");
    CHECK_THROWS_AS(a * u, std::logic_error);
    CHECK_THROWS_AS(Element::generator(presets::suq2(), "z"), std::out_of_range);
}

TEST_CASE("product is associative on sampled elements") {
    // Deterministic pseudo-random sparse elements.
    Suq2 s;
    std::vector<Element> gens{s.c, s.cs, s.a, s.as};
    unsigned long state = 12345;
    auto next = [&]() {
        state = state * 6364136223846793005ULL + 1442695040888963407ULL;
        return static_cast<unsigned>(state >> 33);
    };
    auto random_element = [&]() {
        Element e = Element::zero(s.p);
        int terms = 1 + next() % 3;
        for (int t = 0; t < terms; ++t) {
            Element w = Element::unit(s.p);
            int len = next() % 4;
            for (int i = 0; i < len; ++i)
                w *= gens[next() % 4];
            long shift = static_cast<long>(next() % 5) - 2;
            Element scaled = w;
            scaled *= QLaurent::monomial(Rational(1 + next() % 3), shift);
            e += scaled;
        }
        return e;
    };
    for (int trial = 0; trial < 50; ++trial) {
        Element x = random_element(), y = random_element(), z = random_element();
        CHECK((x * y) * z == x * (y * z));
        CHECK((x * y).star() == y.star() * x.star());
        CHECK((x + y) * z == x * z + y * z);
    }
}

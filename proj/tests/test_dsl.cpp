#include <doctest.h>

#include <cstdio>
#include <fstream>

#include "qbundle/dsl.hpp"
#include "qbundle/hopf.hpp"
#include "qbundle/presets.hpp"

using namespace qbundle;

namespace {

const char* kCircleFile = R"(# a rank-one torus written out by hand
algebra circ {
  generator d
  generator e
  star d e
  rule d * e -> 1
  rule e * d -> 1
  delta d = d (x) d
  counit d = 1
  antipode d = e
  delta e = e (x) e
  counit e = 1
  antipode e = d
}

morphism wrap : circ -> u1 {
  d -> u
  e -> u^*
}
)";

DslError capture(const std::string& text) {
    try {
        build_presentations(parse_presentation_file(text));
    } catch (const DslError& e) {
        return e;
    }
    FAIL("expected a DslError");
    return DslError("unreachable", 0, 0);
}

}  // namespace

TEST_CASE("a handwritten file builds a working algebra and morphism") {
    LoadedFile loaded = build_presentations(parse_presentation_file(kCircleFile));
    REQUIRE(loaded.algebras.size() == 1);
    REQUIRE(loaded.morphisms.size() == 1);

    PresPtr circ = loaded.algebra("circ");
    REQUIRE(circ);
    CHECK(circ->generator_count() == 2);
    CHECK(circ->rules().size() == 2);
    CHECK(verify_hopf_axioms(circ, 4).empty());
    CHECK(verify_relation_compat(circ).empty());

    const Element d = Element::generator(circ, "d");
    CHECK(d * d.star() == Element::unit(circ));
    CHECK(d.star() == Element::generator(circ, "e"));

    const Morphism& wrap = loaded.morphisms.front();
    const PresPtr u1 = presets::u1();
    CHECK(wrap.apply(d) == Element::generator(u1, "u"));
    CHECK(wrap.check_relations().empty());
}

TEST_CASE("serialization is a fixed point after one pass") {
    const std::string once = serialize(parse_presentation_file(kCircleFile));
    const std::string twice = serialize(parse_presentation_file(once));
    CHECK(once == twice);
    CHECK(once.find("rule d * e -> 1") != std::string::npos);
    CHECK(once.find("morphism wrap : circ -> u1 {") != std::string::npos);
    CHECK(once.find('#') == std::string::npos);
}

TEST_CASE("rendered presets rebuild to equivalent algebras") {
    for (const PresPtr& p : {presets::suq2(), presets::su2(), presets::u1()}) {
        const std::string text = serialize(render_presentation(p));
        CHECK(serialize(parse_presentation_file(text)) == text);

        LoadedFile loaded = build_presentations(parse_presentation_file(text));
        PresPtr rebuilt = loaded.algebra(p->name());
        REQUIRE(rebuilt);
        CHECK(rebuilt->generator_count() == p->generator_count());
        CHECK(rebuilt->rules().size() == p->rules().size());
        CHECK(rebuilt->q_value() == p->q_value());
        CHECK(verify_hopf_axioms(rebuilt, 3).empty());
        for (const auto& w : p->normal_words_up_to(3)) {
            Word copy = w;
            CHECK(rebuilt->is_normal_word(copy));
            CHECK(rebuilt->word_weight(copy, CoactionSide::right) ==
                  p->word_weight(w, CoactionSide::right));
        }
    }
}

TEST_CASE("rendered suq2 keeps the quantum commutator") {
    LoadedFile loaded = build_presentations(
        parse_presentation_file(serialize(render_presentation(presets::suq2()))));
    PresPtr p = loaded.algebra("suq2");
    const Element a = Element::generator(p, "alpha");
    const Element g = Element::generator(p, "gamma");
    CHECK((a * a.star() - a.star() * a).to_string() == "(1 - q^2) * gamma * gamma^*");
    CHECK((a * g).to_string() == "q * gamma * alpha");
}

TEST_CASE("parse errors carry the offending line and column") {
    SUBCASE("unknown declaration") {
        DslError e = capture("algebra a {\n  generator g\n  star g g\n  frobnicate\n}\n");
        CHECK(e.line == 4);
        CHECK(e.column == 3);
        CHECK(std::string(e.what()).find("frobnicate") != std::string::npos);
    }
    SUBCASE("unterminated block") {
        DslError e = capture("algebra a {\n  generator g\n");
        CHECK(e.line == 1);
        CHECK(std::string(e.what()).find("unterminated") != std::string::npos);
    }
    SUBCASE("top level noise") {
        DslError e = capture("generator g\n");
        CHECK(e.line == 1);
        CHECK(e.column == 1);
    }
    SUBCASE("reserved generator name q") {
        DslError e = capture("algebra a {\n  generator q\n}\n");
        CHECK(e.line == 2);
        CHECK(e.column == 13);
        CHECK(std::string(e.what()).find("deformation parameter") != std::string::npos);
    }
    SUBCASE("generator x conflicts with the tensor separator") {
        DslError e = capture(
            "algebra a {\n  generator x\n  star x x\n  delta x = x (x) x\n"
            "  counit x = 1\n  antipode x = x\n}\n");
        CHECK(e.line == 2);
        CHECK(std::string(e.what()).find("tensor separator") != std::string::npos);
    }
    SUBCASE("star of an undeclared generator") {
        DslError e = capture("algebra a {\n  generator g\n  star g h\n}\n");
        CHECK(e.line == 3);
        CHECK(e.column == 10);
        CHECK(std::string(e.what()).find("'h'") != std::string::npos);
    }
    SUBCASE("generator without a star declaration") {
        DslError e = capture("algebra a {\n  generator g\n}\n");
        CHECK(e.line == 2);
        CHECK(std::string(e.what()).find("no star declaration") != std::string::npos);
    }
    SUBCASE("rule with a non monic left side") {
        DslError e = capture(
            "algebra a {\n  generator g\n  star g g\n  rule 2 * g -> g\n}\n");
        CHECK(e.line == 4);
        CHECK(std::string(e.what()).find("single monic word") != std::string::npos);
    }
    SUBCASE("expression error positions are offset into the entry") {
        DslError e = capture(
            "algebra a {\n  generator g\n  star g g\n  rule g * g -> g + zz\n}\n");
        CHECK(e.line == 4);
        CHECK(e.column >= 17);
        CHECK(e.column <= 23);
    }
    SUBCASE("counit must be scalar") {
        DslError e = capture(
            "algebra a {\n  generator g\n  star g g\n  delta g = g (x) g\n"
            "  counit g = g\n  antipode g = g\n}\n");
        CHECK(e.line == 5);
        CHECK(std::string(e.what()).find("scalar") != std::string::npos);
    }
    SUBCASE("incomplete Hopf coverage") {
        DslError e = capture(
            "algebra a {\n  generator g\n  generator h\n  star g h\n"
            "  delta g = g (x) g\n  counit g = 1\n  antipode g = h\n}\n");
        CHECK(std::string(e.what()).find("missing delta for generator 'h'") !=
              std::string::npos);
    }
    SUBCASE("coaction weight arity") {
        DslError e = capture(
            "algebra a {\n  generator g\n  generator h\n  star g h\n"
            "  coaction right 1\n}\n");
        CHECK(e.line == 5);
        CHECK(std::string(e.what()).find("one weight per generator") != std::string::npos);
    }
    SUBCASE("coaction weight must be an integer") {
        DslError e = capture(
            "algebra a {\n  generator g\n  star g g\n  coaction right one\n}\n");
        CHECK(e.line == 4);
        CHECK(e.column == 18);
    }
    SUBCASE("rules must be weight homogeneous under a declared coaction") {
        DslError e = capture(
            "algebra a {\n  generator d\n  generator e\n  star d e\n"
            "  rule e * d -> 1\n  coaction right 1 1\n}\n");
        CHECK(std::string(e.what()).find("inhomogeneous") != std::string::npos);
    }
    SUBCASE("duplicate algebra names") {
        DslError e = capture(
            "algebra a {\n  generator g\n  star g g\n}\n"
            "algebra a {\n  generator g\n  star g g\n}\n");
        CHECK(e.line == 5);
        CHECK(std::string(e.what()).find("duplicate algebra") != std::string::npos);
    }
}

TEST_CASE("morphism blocks are validated against both algebras") {
    SUBCASE("missing image") {
        DslError e = capture(std::string(kCircleFile) +
                             "\nmorphism p : circ -> u1 {\n  d -> u\n}\n");
        CHECK(std::string(e.what()).find("missing image for generator 'e'") !=
              std::string::npos);
    }
    SUBCASE("image built from unknown target generators") {
        DslError e = capture(std::string(kCircleFile) +
                             "\nmorphism p : circ -> u1 {\n  d -> v\n  e -> u\n}\n");
        CHECK(e.line == 22);
    }
    SUBCASE("images must respect the relations") {
        DslError e = capture(std::string(kCircleFile) +
                             "\nmorphism p : circ -> u1 {\n  d -> u\n  e -> u\n}\n");
        CHECK(std::string(e.what()).find("does not respect the relations") !=
              std::string::npos);
    }
    SUBCASE("unknown source algebra") {
        DslError e = capture("morphism p : nope -> u1 {\n  d -> u\n}\n");
        CHECK(std::string(e.what()).find("unknown source algebra") != std::string::npos);
    }
    SUBCASE("preset targets resolve by name") {
        LoadedFile loaded = build_presentations(parse_presentation_file(
            "morphism id : u1 -> u1 {\n  u -> u\n  u^* -> u^*\n}\n"));
        CHECK(loaded.morphisms.size() == 1);
        CHECK(loaded.morphisms.front().check_relations().empty());
    }
}

TEST_CASE("load_presentation resolves presets, files and specializations") {
    CHECK(load_presentation("suq2") == presets::suq2());
    CHECK(load_presentation("su2") == presets::su2());
    CHECK(load_presentation("u1") == presets::u1());

    PresPtr half = load_presentation("suq2", Rational(1, 2));
    REQUIRE(half->q_value());
    CHECK(*half->q_value() == Rational(1, 2));

    CHECK_THROWS_AS(load_presentation("nope"), std::invalid_argument);

    const std::string path = "qbundle_dsl_test.alg";
    {
        std::ofstream out(path);
        out << "algebra circ {\n  generator d\n  generator e\n  star d e\n"
               "  rule d * e -> 1\n  rule e * d -> 1\n}\n";
    }
    PresPtr circ = load_presentation(path);
    CHECK(circ->name() == "circ");
    CHECK(circ->rules().size() == 2);

    {
        std::ofstream out(path);
        out << "algebra a1 {\n  generator g\n  star g g\n}\n"
               "algebra a2 {\n  generator g\n  star g g\n}\n";
    }
    try {
        load_presentation(path);
        FAIL("expected rejection of a two-algebra file");
    } catch (const std::invalid_argument& ex) {
        CHECK(std::string(ex.what()).find("exactly one algebra") != std::string::npos);
    }
    std::remove(path.c_str());
}

#include "qbundle/presets.hpp"

#include <map>
#include <mutex>
#include <stdexcept>
#include <utility>

namespace qbundle::presets {

namespace {

/// Shared builder for the quantum and classical SU(2) coordinate algebras.
/// Symbol order c < c^* < a < a^* makes every rule deg-lex decreasing.
PresPtr build_su2_family(const std::string& name, const std::string& c_name,
                         const std::string& a_name, const std::optional<Rational>& q0) {
    auto qp = [&](long k) {
        return q0 ? QLaurent(rational_pow(*q0, k)) : QLaurent::q(k);
    };
    const QLaurent one(1);

    PresentationBuilder b(name);
    GenId c = b.add_generator(c_name);
    GenId cs = b.add_generator(c_name + "^*");
    GenId a = b.add_generator(a_name);
    GenId as = b.add_generator(a_name + "^*");
    b.set_star_pair(c, cs);
    b.set_star_pair(a, as);
    if (q0)
        b.set_q_value(*q0);

    b.add_rule({a, c}, {{{c, a}, qp(1)}});
    b.add_rule({a, cs}, {{{cs, a}, qp(1)}});
    b.add_rule({as, c}, {{{c, as}, qp(-1)}});
    b.add_rule({as, cs}, {{{cs, as}, qp(-1)}});
    b.add_rule({cs, c}, {{{c, cs}, one}});
    b.add_rule({as, a}, {{{}, one}, {{c, cs}, -one}});
    b.add_rule({a, as}, {{{}, one}, {{c, cs}, -qp(2)}});

    HopfData h;
    h.gens.resize(4);
    h.gens[c] = {{{{c}, {a}, one}, {{as}, {c}, one}}, QLaurent(), {{{c}, -qp(1)}}};
    h.gens[cs] = {{{{cs}, {as}, one}, {{a}, {cs}, one}}, QLaurent(), {{{cs}, -qp(-1)}}};
    h.gens[a] = {{{{a}, {a}, one}, {{cs}, {c}, -qp(1)}}, one, {{{as}, one}}};
    h.gens[as] = {{{{as}, {as}, one}, {{c}, {cs}, -qp(1)}}, one, {{{a}, one}}};
    b.set_hopf(std::move(h));

    b.set_coaction(CoactionSide::right, {+1, -1, +1, -1});
    b.set_coaction(CoactionSide::left, {-1, +1, +1, -1});
    return b.build();
}

}  // namespace

PresPtr suq2() {
    static PresPtr p = build_su2_family("suq2", "gamma", "alpha", std::nullopt);
    return p;
}

PresPtr su2() {
    static PresPtr p = build_su2_family("su2", "c", "a", Rational(1));
    return p;
}

PresPtr u1() {
    static PresPtr p = [] {
        PresentationBuilder b("u1");
        GenId u = b.add_generator("u");
        GenId us = b.add_generator("u^*");
        b.set_star_pair(u, us);
        const QLaurent one(1);
        b.add_rule({u, us}, {{{}, one}});
        b.add_rule({us, u}, {{{}, one}});
        HopfData h;
        h.gens.resize(2);
        h.gens[u] = {{{{u}, {u}, one}}, one, {{{us}, one}}};
        h.gens[us] = {{{{us}, {us}, one}}, one, {{{u}, one}}};
        b.set_hopf(std::move(h));
        b.set_coaction(CoactionSide::right, {+1, -1});
        b.set_coaction(CoactionSide::left, {+1, -1});
        return b.build();
    }();
    return p;
}

PresPtr specialized_presentation(const PresPtr& src, const Rational& q0) {
    if (src->q_value() && *src->q_value() == q0)
        return src;

    static std::map<std::pair<const Presentation*, Rational>, PresPtr> cache;
    static std::vector<PresPtr> anchors;
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);

    auto key = std::make_pair(src.get(), q0);
    if (auto it = cache.find(key); it != cache.end())
        return it->second;

    PresentationBuilder b(src->name() + "@q=" + rational_to_string(q0));
    for (GenId g = 0; g < src->generator_count(); ++g)
        b.add_generator(src->generator(g).name);
    for (GenId g = 0; g < src->generator_count(); ++g)
        if (src->star_of(g) >= g)
            b.set_star_pair(g, src->star_of(g));
    b.set_q_value(q0);

    for (const auto& rule : src->rules()) {
        TermList rhs;
        for (const auto& [w, c] : rule.rhs)
            rhs.emplace_back(w, QLaurent(c.evaluate(q0)));
        b.add_rule(rule.lhs, std::move(rhs));
    }
    if (src->hopf()) {
        HopfData h;
        for (const auto& g : src->hopf()->gens) {
            HopfGenData out;
            for (const auto& t : g.coproduct)
                out.coproduct.push_back({t.left, t.right, QLaurent(t.coeff.evaluate(q0))});
            out.counit = QLaurent(g.counit.evaluate(q0));
            for (const auto& [w, c] : g.antipode)
                out.antipode.emplace_back(w, QLaurent(c.evaluate(q0)));
            h.gens.push_back(std::move(out));
        }
        b.set_hopf(std::move(h));
    }
    for (CoactionSide side : {CoactionSide::left, CoactionSide::right})
        if (src->coaction(side))
            b.set_coaction(side, src->coaction(side)->weights);

    PresPtr out = b.build();
    cache.emplace(key, out);
    anchors.push_back(src);
    return out;
}

PresPtr suq2_at(const Rational& q0) {
    return specialized_presentation(suq2(), q0);
}

QLaurent structure_q(const Presentation& p, long power) {
    if (p.q_value())
        return QLaurent(rational_pow(*p.q_value(), power));
    return QLaurent::q(power);
}

MatrixGens matrix_generators(const Presentation& p) {
    MatrixGens m;
    m.a = p.find_generator("alpha");
    if (m.a < 0)
        m.a = p.find_generator("a");
    m.c = p.find_generator("gamma");
    if (m.c < 0)
        m.c = p.find_generator("c");
    if (m.a < 0 || m.c < 0)
        throw std::logic_error(p.name() + ": not an SU(2)-type presentation");
    m.a_star = p.star_of(m.a);
    m.c_star = p.star_of(m.c);
    return m;
}

Morphism circle_projection(const PresPtr& src) {
    if (src->generator_count() != 4)
        throw std::logic_error(src->name() + ": circle projection expects four generators");
    MatrixGens m = matrix_generators(*src);
    PresPtr h = u1();
    std::vector<Element> img(4, Element::zero(h));
    img[m.a] = Element::generator(h, "u");
    img[m.a_star] = Element::generator(h, "u^*");
    return Morphism("pi", src, h, std::move(img));
}

}  // namespace qbundle::presets

#include "qbundle/hopf.hpp"

#include <stdexcept>

namespace qbundle {

namespace {

const HopfData& hopf_of(const PresPtr& p) {
    if (!p->hopf())
        throw std::logic_error(p->name() + ": no Hopf structure declared");
    return *p->hopf();
}

}  // namespace

TensorElement comultiply_word(const PresPtr& p, const Word& w) {
    const HopfData& h = hopf_of(p);
    TensorElement out = TensorElement::unit({p, p});
    for (GenId g : w) {
        TensorElement dg({p, p});
        for (const auto& t : h.gens.at(g).coproduct)
            dg.add({t.left, t.right}, t.coeff);
        out = out * dg;
    }
    return out;
}

QLaurent counit_word(const PresPtr& p, const Word& w) {
    const HopfData& h = hopf_of(p);
    QLaurent out(1);
    for (GenId g : w)
        out *= h.gens.at(g).counit;
    return out;
}

Element antipode_word(const PresPtr& p, const Word& w) {
    const HopfData& h = hopf_of(p);
    Element out = Element::unit(p);
    for (auto it = w.rbegin(); it != w.rend(); ++it)
        out *= Element::from_terms(p, h.gens.at(*it).antipode);
    return out;
}

TensorElement comultiply(const Element& x) {
    const PresPtr& p = x.presentation();
    TensorElement out({p, p});
    for (const auto& [w, c] : x.terms())
        out += c * comultiply_word(p, w);
    return out;
}

QLaurent counit(const Element& x) {
    QLaurent out;
    for (const auto& [w, c] : x.terms())
        out += c * counit_word(x.presentation(), w);
    return out;
}

Element antipode(const Element& x) {
    const PresPtr& p = x.presentation();
    Element out = Element::zero(p);
    for (const auto& [w, c] : x.terms())
        out += antipode_word(p, w) * c;
    return out;
}

std::vector<std::string> verify_hopf_axioms(const PresPtr& p, int max_degree) {
    hopf_of(p);
    std::vector<std::string> bad;

    auto cmw = [&](const Word& v) { return comultiply_word(p, v); };
    auto epsw = [&](const Word& v) {
        TensorElement scalar(std::vector<PresPtr>{});
        scalar.add({}, counit_word(p, v));
        return scalar;
    };
    auto antw = [&](const Word& v) { return tensor_of(antipode_word(p, v)); };
    auto starw = [&](const TensorElement& t) {
        TensorElement out({p, p});
        for (const auto& [k, c] : t.terms())
            out.add({p->star_word(k[0]), p->star_word(k[1])}, c.conjugated());
        return out;
    };

    for (const Word& w : p->normal_words_up_to(max_degree)) {
        const std::string name = p->word_to_string(w);
        TensorElement dw = comultiply_word(p, w);

        if (map_leg(dw, 0, cmw) != map_leg(dw, 1, cmw))
            bad.push_back("coassociativity fails on " + name);

        TensorElement idw = tensor_of(Element::from_word(p, w));
        if (map_leg(dw, 0, epsw) != idw || map_leg(dw, 1, epsw) != idw)
            bad.push_back("counit law fails on " + name);

        Element eps_unit = Element::unit(p) * counit_word(p, w);
        if (contract(map_leg(dw, 0, antw)) != eps_unit ||
            contract(map_leg(dw, 1, antw)) != eps_unit)
            bad.push_back("antipode law fails on " + name);

        if (comultiply_word(p, p->star_word(w)) != starw(dw))
            bad.push_back("coproduct does not intertwine the adjoint on " + name);
        if (counit_word(p, p->star_word(w)) != counit_word(p, w).conjugated())
            bad.push_back("counit does not intertwine the adjoint on " + name);

        if (w.size() <= 3) {
            Element x = Element::from_word(p, w);
            if (antipode(antipode(x.star()).star()) != x)
                bad.push_back("S-star involution fails on " + name);
        }
    }
    return bad;
}

std::vector<std::string> verify_relation_compat(const PresPtr& p) {
    hopf_of(p);
    std::vector<std::string> bad;
    for (size_t r = 0; r < p->rules().size(); ++r) {
        const RewriteRule& rule = p->rules()[r];
        const std::string name = "rule " + p->word_to_string(rule.lhs);

        TensorElement d_lhs = comultiply_word(p, rule.lhs);
        TensorElement d_rhs({p, p});
        QLaurent e_rhs;
        Element s_rhs = Element::zero(p);
        for (const auto& [w, c] : rule.rhs) {
            d_rhs += c * comultiply_word(p, w);
            e_rhs += c * counit_word(p, w);
            s_rhs += antipode_word(p, w) * c;
        }
        if (d_lhs != d_rhs)
            bad.push_back("coproduct does not descend through " + name);
        if (counit_word(p, rule.lhs) != e_rhs)
            bad.push_back("counit does not descend through " + name);
        if (antipode_word(p, rule.lhs) != s_rhs)
            bad.push_back("antipode does not descend through " + name);
    }
    return bad;
}

}  // namespace qbundle

#include "qbundle/smash.hpp"

#include <stdexcept>

#include "qbundle/hopf.hpp"

namespace qbundle {

Element ModuleAlgebraAction::act(const Element& h, const Element& b) const {
    Element out = Element::zero(base);
    for (const auto& [w, c] : h.terms())
        out += act_word(w, b) * c;
    return out;
}

ModuleAlgebraAction trivial_action(PresPtr group, PresPtr base) {
    ModuleAlgebraAction a{std::move(group), std::move(base), nullptr};
    PresPtr g = a.group;
    a.act_word = [g](const Word& hw, const Element& b) { return b * counit_word(g, hw); };
    return a;
}

ModuleAlgebraAction weight_character_action(PresPtr group, PresPtr base,
                                            const Rational& lambda) {
    if (lambda == 0)
        throw std::logic_error("weight character must be invertible");
    ModuleAlgebraAction a{std::move(group), std::move(base), nullptr};
    PresPtr g = a.group;
    PresPtr bs = a.base;
    a.act_word = [g, bs, lambda](const Word& hw, const Element& b) {
        long n = g->word_weight(hw, CoactionSide::right);
        TermList scaled;
        for (const auto& [w, c] : b.terms()) {
            long m = bs->word_weight(w, CoactionSide::right);
            scaled.emplace_back(w, c * QLaurent(rational_pow(lambda, n * m)));
        }
        return Element::from_terms(bs, scaled);
    };
    return a;
}

TensorElement smash_unit(const ModuleAlgebraAction& act) {
    return TensorElement::unit({act.base, act.group});
}

TensorElement smash_multiply(const TensorElement& x, const TensorElement& y,
                             const ModuleAlgebraAction& act) {
    const std::vector<PresPtr> expected{act.base, act.group};
    if (x.legs() != expected || y.legs() != expected)
        throw std::logic_error("smash product needs base (x) group legs");

    TensorElement out({act.base, act.group});
    for (const auto& [kx, cx] : x.terms()) {
        for (const auto& [ky, cy] : y.terms()) {
            TensorElement dh = comultiply_word(act.group, kx[1]);
            Element b = Element::from_word(act.base, ky[0]);
            for (const auto& [kd, cd] : dh.terms()) {
                Element acted = act.act_word(kd[0], b);
                for (const auto& [wb, cb] : acted.terms())
                    out.add({concat(kx[0], wb), concat(kd[1], ky[1])}, cx * cy * cd * cb);
            }
        }
    }
    return out;
}

TensorElement smash_coaction(const TensorElement& t) {
    if (t.leg_count() != 2)
        throw std::logic_error("smash coaction expects two legs");
    PresPtr h = t.legs()[1];
    return map_leg(t, 1, [&](const Word& w) { return comultiply_word(h, w); });
}

std::vector<std::string> verify_module_algebra(const ModuleAlgebraAction& act, int max_degree) {
    std::vector<std::string> bad;
    auto wordsH = act.group->normal_words_up_to(max_degree);
    auto wordsB = act.base->normal_words_up_to(max_degree);

    auto describe = [&](const Word& hw, const std::string& law) {
        return law + " fails for " + act.group->word_to_string(hw);
    };

    for (const Word& wb : wordsB) {
        Element b = Element::from_word(act.base, wb);
        if (act.act_word({}, b) != b) {
            bad.push_back("unit of the group must act as identity on " +
                          act.base->word_to_string(wb));
            break;
        }
    }

    for (const Word& wh : wordsH) {
        Element eps_unit = Element::unit(act.base) * counit_word(act.group, wh);
        if (act.act_word(wh, Element::unit(act.base)) != eps_unit)
            bad.push_back(describe(wh, "action on the base unit"));
    }

    for (const Word& wh : wordsH) {
        Element h = Element::from_word(act.group, wh);
        for (const Word& wk : wordsH) {
            Element k = Element::from_word(act.group, wk);
            for (const Word& wb : wordsB) {
                if (degree(wb) * 2 > max_degree)
                    continue;
                Element b = Element::from_word(act.base, wb);
                if (act.act(h * k, b) != act.act(h, act.act(k, b))) {
                    bad.push_back(describe(wh, "associativity of the action"));
                    goto next_pair;
                }
            }
        next_pair:;
        }
    }

    for (const Word& wh : wordsH) {
        TensorElement dh = comultiply_word(act.group, wh);
        for (const Word& wb : wordsB) {
            Element b = Element::from_word(act.base, wb);
            for (const Word& wb2 : wordsB) {
                if (degree(wb) + degree(wb2) > max_degree)
                    continue;
                Element b2 = Element::from_word(act.base, wb2);
                Element lhs = act.act_word(wh, b * b2);
                Element rhs = Element::zero(act.base);
                for (const auto& [kd, cd] : dh.terms())
                    rhs += (act.act_word(kd[0], b) * act.act_word(kd[1], b2)) * cd;
                if (lhs != rhs) {
                    bad.push_back(describe(wh, "module-algebra law"));
                    goto next_word;
                }
            }
        }
    next_word:;
    }
    return bad;
}

TensorElement CleavingMap::image(const Element& h) const {
    TensorElement out({target.base, target.group});
    for (const auto& [w, c] : h.terms()) {
        auto it = images.find(w);
        if (it == images.end())
            throw std::out_of_range("cleaving map not tabulated on " +
                                    group->word_to_string(w));
        out += c * it->second;
    }
    return out;
}

CleavingMap unit_cleaving(const ModuleAlgebraAction& act, int max_degree) {
    CleavingMap j{act.group, act, {}};
    for (const Word& w : act.group->normal_words_up_to(max_degree)) {
        TensorElement t({act.base, act.group});
        t.add({Word{}, w}, QLaurent(1));
        j.images.emplace(w, std::move(t));
    }
    return j;
}

std::vector<std::string> check_cleaving(const CleavingMap& j, int max_degree) {
    std::vector<std::string> bad;
    const PresPtr& h = j.group;
    auto words = h->normal_words_up_to(max_degree);

    try {
        if (j.image(Element::unit(h)) != smash_unit(j.target))
            bad.push_back("not unital");
    } catch (const std::out_of_range& e) {
        bad.push_back(e.what());
        return bad;
    }

    for (const Word& wa : words) {
        for (const Word& wb : words) {
            if (degree(wa) + degree(wb) > max_degree)
                continue;
            try {
                Element prod = Element::from_word(h, wa) * Element::from_word(h, wb);
                TensorElement lhs =
                    smash_multiply(j.image(Element::from_word(h, wa)),
                                   j.image(Element::from_word(h, wb)), j.target);
                if (lhs != j.image(prod))
                    bad.push_back("not multiplicative on " + h->word_to_string(wa) + ", " +
                                  h->word_to_string(wb));
            } catch (const std::out_of_range& e) {
                bad.push_back(e.what());
            }
        }
    }

    for (const Word& w : words) {
        try {
            TensorElement jh = j.image(Element::from_word(h, w));
            TensorElement lhs = smash_coaction(jh);
            TensorElement rhs({j.target.base, h, h});
            TensorElement dh = comultiply_word(h, w);
            for (const auto& [kd, cd] : dh.terms()) {
                auto it = j.images.find(kd[0]);
                if (it == j.images.end())
                    throw std::out_of_range("cleaving map not tabulated on " +
                                            h->word_to_string(kd[0]));
                for (const auto& [kj, cj] : it->second.terms())
                    rhs.add({kj[0], kj[1], kd[1]}, cd * cj);
            }
            if (lhs != rhs)
                bad.push_back("not colinear on " + h->word_to_string(w));
        } catch (const std::out_of_range& e) {
            bad.push_back(e.what());
        }
    }

    for (const Word& w : words) {
        try {
            Element eps = Element::unit(h) * counit_word(h, w);
            TensorElement expect = j.image(eps);
            TensorElement left({j.target.base, h});
            TensorElement right({j.target.base, h});
            TensorElement dh = comultiply_word(h, w);
            for (const auto& [kd, cd] : dh.terms()) {
                Element s1 = antipode_word(h, kd[1]);
                left += cd * smash_multiply(j.image(Element::from_word(h, kd[0])),
                                            j.image(s1), j.target);
                Element s0 = antipode_word(h, kd[0]);
                right += cd * smash_multiply(j.image(s0),
                                             j.image(Element::from_word(h, kd[1])), j.target);
            }
            if (left != expect || right != expect)
                bad.push_back("antipode image is not a convolution inverse at " +
                              h->word_to_string(w));
        } catch (const std::out_of_range& e) {
            bad.push_back(e.what());
        }
    }
    return bad;
}

}  // namespace qbundle

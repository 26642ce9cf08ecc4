#include "qbundle/coaction.hpp"

#include <stdexcept>

#include "qbundle/presets.hpp"

namespace qbundle {

Word circle_word(const PresPtr& u1, int n) {
    GenId u = u1->find_generator("u");
    if (u < 0)
        throw std::logic_error(u1->name() + ": expected a generator named u");
    GenId g = n >= 0 ? u : u1->star_of(u);
    return Word(static_cast<size_t>(n >= 0 ? n : -n), g);
}

TensorElement coact(const Element& x, CoactionSide side, const PresPtr& u1) {
    const PresPtr& p = x.presentation();
    std::vector<PresPtr> legs = side == CoactionSide::right
                                    ? std::vector<PresPtr>{p, u1}
                                    : std::vector<PresPtr>{u1, p};
    TensorElement out(legs);
    for (const auto& [w, c] : x.terms()) {
        Word uw = circle_word(u1, p->word_weight(w, side));
        if (side == CoactionSide::right)
            out.add({w, uw}, c);
        else
            out.add({uw, w}, c);
    }
    return out;
}

std::vector<Word> coinvariant_basis(const PresPtr& p, CoactionSide side, int max_degree) {
    std::vector<Word> out;
    for (const Word& w : p->normal_words_up_to(max_degree))
        if (p->word_weight(w, side) == 0)
            out.push_back(w);
    return out;
}

bool cotensor_check(const TensorElement& t, const PresPtr& u1, std::string* witness) {
    if (t.leg_count() != 2)
        throw std::logic_error("cotensor membership needs a two-leg tensor");
    const PresPtr& m = t.legs()[0];
    const PresPtr& n = t.legs()[1];

    TensorElement via_right({m, u1, n});
    TensorElement via_left({m, u1, n});
    for (const auto& [k, c] : t.terms()) {
        via_right.add({k[0], circle_word(u1, m->word_weight(k[0], CoactionSide::right)), k[1]},
                      c);
        via_left.add({k[0], circle_word(u1, n->word_weight(k[1], CoactionSide::left)), k[1]},
                     c);
    }
    if (via_right == via_left)
        return true;

    if (witness) {
        for (const auto& [k, c] : t.terms()) {
            int rw = m->word_weight(k[0], CoactionSide::right);
            int lw = n->word_weight(k[1], CoactionSide::left);
            if (rw != lw) {
                *witness = m->word_to_string(k[0]) + " (x) " + n->word_to_string(k[1]) +
                           " has right weight " + std::to_string(rw) + " but left weight " +
                           std::to_string(lw);
                break;
            }
        }
    }
    return false;
}

TensorElement canonical_map(const TensorElement& t, const PresPtr& u1) {
    if (t.leg_count() != 2 || t.legs()[0] != t.legs()[1])
        throw std::logic_error("canonical map expects P (x) P input");
    const PresPtr& p = t.legs()[0];

    TensorElement out({p, u1});
    for (const auto& [k, c] : t.terms()) {
        Word uw = circle_word(u1, p->word_weight(k[1], CoactionSide::right));
        out.add({concat(k[0], k[1]), uw}, c);
    }
    return out;
}

namespace {

TensorElement splice(const TensorElement& step, const TensorElement& inner) {
    TensorElement out(inner.legs());
    for (const auto& [ks, cs] : step.terms())
        for (const auto& [ki, ci] : inner.terms())
            out.add({concat(ks[0], ki[0]), concat(ki[1], ks[1])}, cs * ci);
    return out;
}

}  // namespace

TensorElement strong_connection(const PresPtr& p, int n) {
    presets::MatrixGens g = presets::matrix_generators(*p);

    TensorElement up({p, p});
    up.add({{g.a_star}, {g.a}}, QLaurent(1));
    up.add({{g.c_star}, {g.c}}, QLaurent(1));

    TensorElement down({p, p});
    down.add({{g.a}, {g.a_star}}, QLaurent(1));
    down.add({{g.c}, {g.c_star}}, presets::structure_q(*p, 2));

    TensorElement out = TensorElement::unit({p, p});
    for (int i = 0; i < (n >= 0 ? n : -n); ++i)
        out = splice(n >= 0 ? up : down, out);
    return out;
}

}  // namespace qbundle

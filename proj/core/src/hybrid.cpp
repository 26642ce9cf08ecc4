#include "qbundle/hybrid.hpp"

#include <sstream>
#include <stdexcept>

#include "qbundle/hopf.hpp"
#include "qbundle/presets.hpp"

namespace qbundle {

namespace {

Complex eval_coeff(const Presentation& p, const QLaurent& c) {
    if (!p.q_value())
        throw std::invalid_argument("hybrid elements need a presentation with fixed numeric q");
    return Complex(rational_to_double(c.evaluate(*p.q_value())), 0.0);
}

}  // namespace

HybridElement::HybridElement(PresPtr pres, GridPtr grid, MaskPtr mask)
    : pres_(std::move(pres)), grid_(std::move(grid)), mask_(std::move(mask)) {
    if (!pres_ || !grid_) throw std::invalid_argument("hybrid element needs an algebra and a grid");
    if (!pres_->q_value())
        throw std::invalid_argument("hybrid elements need a presentation with fixed numeric q");
}

HybridElement HybridElement::zero(PresPtr pres, GridPtr grid, MaskPtr mask) {
    return HybridElement(std::move(pres), std::move(grid), std::move(mask));
}

HybridElement HybridElement::scalar(PresPtr pres, SampledFunction f) {
    HybridElement out(std::move(pres), f.grid(), f.mask());
    out.terms_.try_emplace(Word{}, std::move(f));
    return out;
}

HybridElement HybridElement::unit(PresPtr pres, GridPtr grid, MaskPtr mask) {
    SampledFunction one = SampledFunction::constant(grid, 1.0).restricted(mask);
    return scalar(std::move(pres), std::move(one));
}

void HybridElement::add_term(const Word& w, const SampledFunction& f) {
    NormalTerms nf = pres_->reduce({{w, QLaurent(1)}});
    for (const auto& [v, coeff] : nf) {
        SampledFunction scaled = f;
        scaled *= eval_coeff(*pres_, coeff);
        auto [it, inserted] = terms_.try_emplace(v, scaled);
        if (!inserted) it->second += scaled;
        mask_ = HemisphereMask::intersect(mask_, it->second.mask());
    }
}

void HybridElement::require_compatible(const HybridElement& rhs) const {
    if (pres_ != rhs.pres_ || grid_ != rhs.grid_)
        throw std::logic_error("hybrid elements live over different algebras or grids");
}

HybridElement& HybridElement::operator+=(const HybridElement& rhs) {
    require_compatible(rhs);
    mask_ = HemisphereMask::intersect(mask_, rhs.mask_);
    for (const auto& [w, f] : rhs.terms_) {
        auto [it, inserted] = terms_.try_emplace(w, f);
        if (!inserted) it->second += f;
    }
    return *this;
}

HybridElement& HybridElement::operator-=(const HybridElement& rhs) {
    require_compatible(rhs);
    mask_ = HemisphereMask::intersect(mask_, rhs.mask_);
    for (const auto& [w, f] : rhs.terms_) {
        auto [it, inserted] = terms_.try_emplace(w, Complex(-1.0, 0.0) * f);
        if (!inserted) it->second -= f;
    }
    return *this;
}

HybridElement& HybridElement::operator*=(Complex scalar) {
    for (auto& [w, f] : terms_) f *= scalar;
    return *this;
}

HybridElement operator*(const HybridElement& a, const HybridElement& b) {
    a.require_compatible(b);
    HybridElement out(a.pres_, a.grid_, HemisphereMask::intersect(a.mask_, b.mask_));
    for (const auto& [w, f] : a.terms_)
        for (const auto& [v, g] : b.terms_) out.add_term(concat(w, v), f * g);
    return out;
}

double HybridElement::max_abs() const {
    double m = 0.0;
    for (const auto& [w, f] : terms_) m = std::max(m, f.max_abs());
    return m;
}

std::string HybridElement::describe() const {
    std::ostringstream os;
    os << terms_.size() << " terms, max |coeff| = " << max_abs();
    return os.str();
}

HybridElement prolonged_cleave(const Element& x, const MaskPtr& mask) {
    if (!mask) throw std::invalid_argument("prolonged_cleave: mask required");
    const PresPtr& p = x.presentation();
    const GridPtr& grid = mask->grid();
    HybridElement out(p, grid, mask);
    Morphism pi = presets::circle_projection(p);
    const PresPtr& circle = pi.target();
    std::map<int, SampledFunction> sections;
    TensorElement dx = comultiply(x);
    for (const auto& [key, coeff] : dx.terms()) {
        Element projected = pi.apply_word(key[0]);
        for (const auto& [uword, ucoeff] : projected.terms()) {
            const int n = circle->word_weight(uword, CoactionSide::right);
            auto it = sections.find(n);
            if (it == sections.end()) it = sections.emplace(n, cleave(n, mask)).first;
            SampledFunction f = it->second;
            f *= eval_coeff(*p, coeff * ucoeff);
            out.add_term(key[1], f);
        }
    }
    return out;
}

std::vector<std::string> check_colinearity(const HybridElement& h) {
    std::vector<std::string> out;
    const PresPtr& p = h.presentation();
    for (const auto& [w, f] : h.terms()) {
        const int expected = p->word_weight(w, CoactionSide::left);
        if (!f.weight()) {
            out.push_back("function of " + p->word_to_string(w) + " has mixed fiber weight");
            continue;
        }
        if (*f.weight() != expected)
            out.push_back("function of " + p->word_to_string(w) + " has fiber weight " +
                          std::to_string(*f.weight()) + ", expected " + std::to_string(expected));
    }
    return out;
}

std::vector<HybridRelationCheck> check_hybrid_relations(const PresPtr& p, const MaskPtr& mask) {
    const auto g = presets::matrix_generators(*p);
    const GridPtr& grid = mask->grid();

    auto im = [&](GenId id) { return prolonged_cleave(Element::generator(p, id), mask); };
    const HybridElement C = im(g.c), Cs = im(g.c_star), A = im(g.a), As = im(g.a_star);
    const HybridElement I = HybridElement::unit(p, grid, mask);
    const double q0 = rational_to_double(p->q_value().value());

    auto nm = [&](GenId id) { return p->generator(id).name; };
    std::vector<HybridRelationCheck> out;
    auto push = [&](std::string relation, const HybridElement& residual) {
        out.push_back({std::move(relation), residual.max_abs()});
    };
    push(nm(g.a) + " " + nm(g.c) + " = q " + nm(g.c) + " " + nm(g.a),
         A * C - Complex(q0) * (C * A));
    push(nm(g.a) + " " + nm(g.c_star) + " = q " + nm(g.c_star) + " " + nm(g.a),
         A * Cs - Complex(q0) * (Cs * A));
    push(nm(g.c_star) + " " + nm(g.c) + " = " + nm(g.c) + " " + nm(g.c_star),
         Cs * C - C * Cs);
    push(nm(g.a_star) + " " + nm(g.a) + " + " + nm(g.c_star) + " " + nm(g.c) + " = 1",
         As * A + Cs * C - I);
    push(nm(g.a) + " " + nm(g.a_star) + " + q^2 " + nm(g.c) + " " + nm(g.c_star) + " = 1",
         A * As + Complex(q0 * q0) * (C * Cs) - I);
    return out;
}

}  // namespace qbundle

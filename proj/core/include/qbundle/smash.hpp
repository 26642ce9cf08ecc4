#pragma once

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "qbundle/tensor.hpp"

namespace qbundle {

/// Left action of a Hopf algebra H on a base algebra B making B a left
/// H-module algebra. act_word takes a free word of H; linear extension and
/// quotient-independence are verified by verify_module_algebra.
struct ModuleAlgebraAction {
    PresPtr group;
    PresPtr base;
    std::function<Element(const Word&, const Element&)> act_word;

    Element act(const Element& h, const Element& b) const;
};

/// h applied as its counit scalar: the action giving the plain tensor algebra.
ModuleAlgebraAction trivial_action(PresPtr group, PresPtr base);

/// Group-like h = u^n scales a weight-m homogeneous element by lambda^{n m}.
/// Weights are read from the base's right coaction.
ModuleAlgebraAction weight_character_action(PresPtr group, PresPtr base, const Rational& lambda);

/// Smash product B # H on two-leg tensors: (a(x)h)(b(x)k) = a(h1▷b)(x)h2 k.
TensorElement smash_multiply(const TensorElement& x, const TensorElement& y,
                             const ModuleAlgebraAction& act);
TensorElement smash_unit(const ModuleAlgebraAction& act);

/// H-coaction of the smash product: b(x)h -> b(x)h1(x)h2.
TensorElement smash_coaction(const TensorElement& t);

/// Module-algebra laws on normal words up to max_degree: associativity of
/// the action, unit laws, and the twisted Leibniz rule h▷(bb') = (h1▷b)(h2▷b').
std::vector<std::string> verify_module_algebra(const ModuleAlgebraAction& act, int max_degree);

/// Candidate cleaving map H -> B # H, tabulated on normal words of H.
struct CleavingMap {
    PresPtr group;
    ModuleAlgebraAction target;
    std::map<Word, TensorElement, DegLexLess> images;

    TensorElement image(const Element& h) const;  ///< linear extension
};

/// j(1)=1(x)1 into the smash product of the action.
CleavingMap unit_cleaving(const ModuleAlgebraAction& act, int max_degree);

/// Algebra-homomorphism cleaving check: unitality, multiplicativity
/// j(h)j(k)=j(hk), colinearity with smash_coaction, and j∘S as a two-sided
/// convolution inverse, all on normal words up to max_degree.
std::vector<std::string> check_cleaving(const CleavingMap& j, int max_degree);

}  // namespace qbundle

#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "qbundle/element.hpp"
#include "qbundle/pwfun.hpp"

namespace qbundle {

/// Element of C(D) (x) A for a presented algebra A at a fixed numeric q:
/// a sum of sampled-function coefficients against symbolic normal words.
/// Products reduce the word part and fold the resulting scalars, evaluated
/// at the presentation's q, into the function leg.
class HybridElement {
public:
    HybridElement(PresPtr pres, GridPtr grid, MaskPtr mask);

    static HybridElement zero(PresPtr pres, GridPtr grid, MaskPtr mask);
    /// f (x) 1.
    static HybridElement scalar(PresPtr pres, SampledFunction f);
    /// 1 (x) 1 restricted to the mask.
    static HybridElement unit(PresPtr pres, GridPtr grid, MaskPtr mask);

    const PresPtr& presentation() const { return pres_; }
    const GridPtr& grid() const { return grid_; }
    const MaskPtr& mask() const { return mask_; }
    const std::map<Word, SampledFunction, DegLexLess>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    /// Accumulate f (x) w, rewriting w to normal form and folding the
    /// resulting coefficients, evaluated at q, into copies of f.
    void add_term(const Word& w, const SampledFunction& f);

    HybridElement& operator+=(const HybridElement& rhs);
    HybridElement& operator-=(const HybridElement& rhs);
    HybridElement& operator*=(Complex scalar);
    friend HybridElement operator+(HybridElement a, const HybridElement& b) { return a += b; }
    friend HybridElement operator-(HybridElement a, const HybridElement& b) { return a -= b; }
    friend HybridElement operator*(Complex scalar, HybridElement h) { return h *= scalar; }
    friend HybridElement operator*(const HybridElement& a, const HybridElement& b);

    /// Max modulus over all terms' functions; the distance from zero.
    double max_abs() const;

    std::string describe() const;

private:
    void require_compatible(const HybridElement& rhs) const;

    PresPtr pres_;
    GridPtr grid_;
    MaskPtr mask_;
    std::map<Word, SampledFunction, DegLexLess> terms_;
};

/// Prolonged cleaving map j^ (x) = sum j(pi(x_1)) (x) x_2 over the
/// coproduct of x, where pi projects onto the circle and j is the
/// hemisphere cleaving section of the mask. Unital and colinear; turns a
/// symbolic element into a hybrid one over the hemisphere.
HybridElement prolonged_cleave(const Element& x, const MaskPtr& mask);

/// Every term's function must carry the fiber weight matching the left
/// circle weight of its symbolic word. Returns violations; empty means
/// colinear.
std::vector<std::string> check_colinearity(const HybridElement& h);

struct HybridRelationCheck {
    std::string relation;
    double residual;
};

/// Images of the defining relations under the prolonged cleaving map of
/// the mask: each relation, with generators replaced by their hybrid
/// images, should vanish up to quadrature accuracy. The presentation must
/// fix a numeric q.
std::vector<HybridRelationCheck> check_hybrid_relations(const PresPtr& p, const MaskPtr& mask);

}  // namespace qbundle

#pragma once

#include "qbundle/morphism.hpp"
#include "qbundle/presentation.hpp"

namespace qbundle::presets {

/// Quantum SU(2) coordinate algebra at formal q. Generators in symbol order
/// gamma < gamma^* < alpha < alpha^*, with Hopf maps and the circle
/// coactions induced by projecting alpha onto the circle generator.
PresPtr suq2();

/// Same presentation with every structure coefficient evaluated at q0.
/// Cached per q0, so repeated calls share one instance.
PresPtr suq2_at(const Rational& q0);

/// Classical SU(2) coordinate algebra: q = 1, generators named c, a.
PresPtr su2();

/// Circle group algebra: unitary generator u, normal words u^n and u^*^n.
PresPtr u1();

/// Copy of src with all rule, Hopf and coaction coefficients evaluated at
/// q0. Cached per (source, q0).
PresPtr specialized_presentation(const PresPtr& src, const Rational& q0);

/// q as a coefficient of the given algebra: a constant when the
/// presentation fixes q, the formal variable otherwise.
QLaurent structure_q(const Presentation& p, long power);

/// Generator ids of an SU(2)-type presentation, located by name
/// (gamma/alpha or c/a families).
struct MatrixGens {
    GenId c = -1, c_star = -1, a = -1, a_star = -1;
};
MatrixGens matrix_generators(const Presentation& p);

/// alpha -> u, gamma -> 0: restriction of functions to the diagonal circle.
Morphism circle_projection(const PresPtr& src);

}  // namespace qbundle::presets

#pragma once

#include <string>
#include <vector>

#include "ifix/qpoly.hpp"

namespace ifix {

// Catalogue of generic order polynomials of the finite groups of Lie type,
// kept in factored shape.  Recognized names:
//   SL2..SL9, SU2..SU9, GL2..GL9, GU2..GU9,
//   Sp4, Sp6, ..., Sp16,
//   SO5, SO7, ... (odd orthogonal), SO8+, SO8-, ... (even orthogonal),
//   Omega<2n><sign> as an alias for SO<2n><sign>,
//   G2, F4, E6, E7, E8, 2E6, 3D4, 2B2, 2G2, 2F4,
// plus sign forms SL<n>+ = SL<n>, SL<n>- = SU<n>, GL<n>-, E6+ / E6-.
// The generic order is shared by all isogeny types of the group; quotients
// by the centre are applied only by eval_group_expr via quotient names.
FactoredOrder group_order(const std::string& name);
bool has_group_order(const std::string& name);

// Order of the centre of the simply connected form over F_q (equivalently
// the index of the simple group in the universal one).  For GL/GU the
// centre of the full linear group (q -+ 1) is returned.
Int center_order(const std::string& name, const Int& q);

// Parse a product expression into a factored order.  Grammar:
//   expr   := factor (('*' | '.' | ':') factor)*
//   factor := atom ('^' uint)?
//   atom   := uint | 'q' | '(' poly ')' | NAME | NAME '(' uint ')'
//           | NAME '(' 'q' '^' uint ')'
// A parenthesized poly has integer coefficients, e.g. (q^4+q^2+1).
// NAME(k) multiplies in the named order evaluated at q = k as a scalar;
// NAME(q^k) substitutes q -> q^k into the named order.
FactoredOrder parse_order_expr(const std::string& expr);

// Evaluate an expression at a concrete prime power q.  Accepts everything
// parse_order_expr does, plus:
//   - quotient names PSL*, PSU*, PGL*, PGU*, PSp*, POmega*, and the
//     shorthand simple-group names L<n>, U<n>, Sz, Ree, which divide by the
//     appropriate centre order;
//   - '/' between factors (exact division, checked);
//   - the terms r2q and r3q inside parenthesized sums, standing for
//     sqrt(2q) and sqrt(3q) (Suzuki and Ree torus orders); they require
//     2q resp. 3q to be a perfect square.
Int eval_group_expr(const std::string& expr, const Int& q);

// One involution class of an adjoint exceptional group: the order of the
// centralizer of a representative, taken in the full diagonal-automorphism
// group (so the E7 classes whose centralizer order is twice a monic
// polynomial carry scalar 2 in `centralizer`).  q_mod/q_res restrict the
// class (or the centralizer formula) to a residue class of q; 0 = none.
struct InvolutionClassRecord {
  std::string family;  // order-catalogue name: G2, F4, E6, 2E6, E7, E8, ...
  char parity = 'o';   // 'o': q odd, 'e': q even
  std::string label;
  FactoredOrder centralizer;
  unsigned q_mod = 0, q_res = 0;
};

// |T| / |centralizer| as an exact polynomial quotient.  Half-integral
// coefficients are allowed (the scalar-2 centralizers); values at admissible
// q are integers, which callers should check where it matters.  Throws if
// the polynomial division is not exact.
QPoly class_size(const InvolutionClassRecord& rec);

// Class size of a long root element in characteristic 2 for the classical
// groups appearing as point stabilizers: base is 'L' (linear/unitary, any
// n >= 2), 'S' (symplectic, even n >= 4) or 'O' (even orthogonal, n >= 8,
// sign required).  eps is the type sign (+1/-1), ignored for 'S'.
Int long_root_class_size(char base, unsigned n, int eps, const Int& q);

// Closed-form involution counts: keys "2B2", "2G2", "G2:odd", "3D4:odd",
// "PGL3+:odd", "PGL3-:odd", "PGL3+:even", "PGL3-:even".
QPoly i2_closed_form(const std::string& key);

// Upper bound for a centralizer order in a central product modulo a joint
// centre Y: the product of the factor centralizer orders divided by the odd
// part |Y|_2' of |Y|, rounded up.
Int central_product_centralizer_bound(const Int& y2prime,
                                      const std::vector<Int>& factor_cents);

}  // namespace ifix

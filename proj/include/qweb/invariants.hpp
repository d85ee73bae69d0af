// Link invariants from braid closures cut open into 1-1 tangles, framing
// factors, and the circle values of the kappa-specialized category.
#pragma once

#include <string>
#include <vector>

#include "qweb/evaluator.hpp"

namespace qweb {

struct LinkPresentation {
  BraidWord braid;         // labels are the strand colours at the bottom
  std::vector<int> kinks;  // positive/negative curls per strand; empty means none

  static LinkPresentation parse(const std::string& braid_text);
  static LinkPresentation unknot(int k, int kinks = 0);
  int strands() const { return static_cast<int>(braid.labels.size()); }
};

// Closes every strand but the rightmost one around the left side, giving an
// endomorphism of u_k with k the label of the rightmost strand.
WebDiagram cut_closure(const LinkPresentation& link);

// Curl on u_k: the positive one is q^{k(k-1)} Id.
WebDiagram kink_diagram(int k, bool positive);
ScalarQ framing_factor(int k, int kinks);

// Writhe of the component through each strand (crossings of that component
// with itself) plus its kinks, indexed by bottom strand position.
std::vector<int> component_framing(const LinkPresentation& link);

// The scalar c with Psi_n(T_K) = c Id; throws Math "not scalar" otherwise.
ScalarQ tangle_scalar(const LinkPresentation& link, const EvalContext& ctx);
// tangle_scalar divided by the framing factor of each component, so the
// unknot of any colour and any number of kinks gives 1.
ScalarQ invariant(const LinkPresentation& link, const EvalContext& ctx);

// ---- kappa mode ----

ScalarQ kappa();  // 2 / q~
// The two displayed forms of the recursion coefficient for the clockwise
// k-circle; they agree for every k >= 1.
ScalarQ kappa_coefficient(int k);
ScalarQ kappa_coefficient_closed(int k);
ScalarQ kappa_circle(int k);            // closed product
ScalarQ kappa_circle_recursive(int k);  // product of recursion coefficients
bool kappa_recursion_check(int k);

}  // namespace qweb

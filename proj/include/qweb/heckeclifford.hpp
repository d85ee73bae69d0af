// The Hecke-Clifford superalgebra HC_k(q) in the normal form c^eps T_sigma,
// its action on V_n^{(x)k} through thin webs, clasp idempotents, and the
// walled Brauer-Clifford generator webs on u1^r d1^s.
#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "qweb/aqhowe.hpp"
#include "qweb/evaluator.hpp"

namespace qweb {

// ---- permutations ----

// One-line notation, 0-based: p[x] is the image of x.
using Perm = std::vector<int>;

Perm perm_identity(int k);
Perm perm_simple(int k, int i);  // s_i swaps i-1 and i (i is 1-based)
Perm perm_mul(const Perm& a, const Perm& b);  // (a b)(x) = a(b(x))
Perm perm_inverse(const Perm& p);
int perm_length(const Perm& p);
// A reduced word (1-based letters) with p = s_{w1} ... s_{wt}.
std::vector<int> perm_reduced_word(const Perm& p);
std::vector<Perm> all_perms(int k);

// ---- HC_k(q) ----

struct HCKey {
  std::vector<int> eps;  // 0/1 per strand
  Perm sigma;
  friend bool operator<(const HCKey& a, const HCKey& b) {
    return a.eps != b.eps ? a.eps < b.eps : a.sigma < b.sigma;
  }
  friend bool operator==(const HCKey& a, const HCKey& b) { return a.eps == b.eps && a.sigma == b.sigma; }
};

// sum over terms of coeff * c_1^{eps_1} ... c_k^{eps_k} T_sigma
class HCElement {
 public:
  explicit HCElement(int k = 1) : k_(k) {}

  static HCElement one(int k);
  static HCElement basis(int k, const std::vector<int>& eps, const Perm& sigma);
  static HCElement T(int k, int i);  // 1 <= i < k
  static HCElement c(int k, int i);  // 1 <= i <= k
  static HCElement T_perm(int k, const Perm& sigma);
  // Product of T generators along an arbitrary word (1-based letters).
  static HCElement T_word(int k, const std::vector<int>& word);

  int k() const { return k_; }
  const std::map<HCKey, ScalarQ>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  // -1 when terms of both parities are present.
  int parity() const;

  void add(const HCKey& key, const ScalarQ& v);
  HCElement& operator+=(const HCElement& o);
  HCElement& operator-=(const HCElement& o);
  friend HCElement operator+(HCElement a, const HCElement& b) { return a += b; }
  friend HCElement operator-(HCElement a, const HCElement& b) { return a -= b; }
  friend HCElement operator*(const ScalarQ& s, const HCElement& x);
  friend HCElement operator*(const HCElement& x, const HCElement& y);
  friend bool operator==(const HCElement& a, const HCElement& b) { return a.k_ == b.k_ && a.terms_ == b.terms_; }
  friend bool operator!=(const HCElement& a, const HCElement& b) { return !(a == b); }

  std::string to_string() const;

 private:
  int k_;
  std::map<HCKey, ScalarQ> terms_;
};

HCElement hc_multiply(const HCElement& x, const HCElement& y);
std::vector<HCElement> hc_basis(int k);  // k! 2^k elements

// ---- the Schur-Weyl map ----

// Thin webs for the generators: c_i is a dot on strand i, T_i the upward
// over-crossing of strands i and i+1.
WebDiagram hc_web_c(int k, int i);
WebDiagram hc_web_T(int k, int i);
LinearWeb hc_to_web(const HCElement& x);

// Algebra map: psi(x y) = psi(x) o psi(y).
SuperMap psi(const HCElement& x, const EvalContext& ctx);
SuperMap psi(const HCElement& x, int n);
// Dimension of psi(HC_k) at q0.
int psi_rank(int k, int n, const GaussRat& q0);

HCElement clasp(int k);
HCElement clasp_recursive(int k);

// ---- walled Brauer-Clifford webs ----

// Keys "T1".., "T*1".., "C1".., "C*1".., and "E" (when r, s >= 1); all are
// endomorphisms of u1^r d1^s.
std::map<std::string, WebDiagram> bc_generators(int r, int s);

struct BCResult {
  std::string relation;  // "a" .. "p"
  std::string label;
  bool pass = false;
  std::string mode;
  std::optional<Witness> witness;
  std::string error;
};

// Relations (a)-(p) that make sense for the given r, s, as RelationCases
// labelled "<letter>: <description>".
std::vector<RelationCase> bc_relation_cases(int r, int s);
// Symbolic when the ambient dimension is at most 256, otherwise checked at
// two specializations; opt overrides that choice.
std::vector<BCResult> verify_bc_relations(int r, int s, const EvalContext& ctx,
                                          const std::optional<VerifyOptions>& opt = std::nullopt);

// Dimension of the super-commutant of the U_q(q_n) action on the tensor
// product of the given factors, at q0.
int commutant_dimension(const std::vector<ModuleFactor>& factors, int n, const GaussRat& q0);
// Dimension at q0 of the span of all products of the BC generator images.
int bc_span_dimension(int r, int s, int n, const GaussRat& q0);

}  // namespace qweb

// The natural module V_n, the operator T on V_n (x) V_n, and the quantum
// symmetric superalgebra S_q(V_n) with its ordered monomial basis.
#pragma once

#include <map>
#include <mutex>
#include <utility>
#include <vector>

#include "qweb/superlinear.hpp"

namespace qweb {

using Word = std::vector<int>;
using Combo = std::map<Word, ScalarQ>;  // linear combination of words

void combo_add(Combo& c, const Word& w, const ScalarQ& v);
Combo combo_scaled(const Combo& c, const ScalarQ& v);

// Index set I_{n|n} = {-n,...,-1,1,...,n}; p(i) is odd exactly when i < 0.
inline int index_parity(int i) { return i < 0 ? 1 : 0; }
std::vector<int> index_set(int n);
int phi(int a, int b);

// Quadratic algebra presented by degree-2 relations, normalized by rewriting
// the leftmost out-of-order (or repeated odd) adjacent pair. Generators are
// 0..N-1 in their basis order; normal words are non-decreasing with no
// repeated odd generator.
class RewriteSystem {
 public:
  RewriteSystem(std::vector<int> parity, const std::vector<Combo>& relations);

  int generators() const { return static_cast<int>(parity_.size()); }
  int parity(int g) const { return parity_[static_cast<std::size_t>(g)]; }
  bool bad_pair(int x, int y) const { return x > y || (x == y && parity(x) == 1); }
  bool is_normal(const Word& w) const;
  const Combo& rule(int x, int y) const;
  // fuel < 0 selects the default bound 10 * d * N^d.
  Combo normalize(const Word& w, long fuel = -1) const;

 private:
  Combo nf(const Word& w, long& fuel) const;

  std::vector<int> parity_;
  std::map<std::pair<int, int>, Combo> rules_;
  mutable std::map<Word, Combo> memo_;
  mutable std::recursive_mutex mu_;
};

// Ordered monomial v_{b1} ... v_{bd} with b1 <= ... <= bd and odd indices
// appearing at most once.
struct SymMonomial {
  std::vector<int> idx;
  int degree() const { return static_cast<int>(idx.size()); }
  int exponent(int b) const;
  int parity() const;
  friend bool operator<(const SymMonomial& a, const SymMonomial& b) { return a.idx < b.idx; }
  friend bool operator==(const SymMonomial& a, const SymMonomial& b) { return a.idx == b.idx; }
};

// Label factor used for S^d(V_n) basis vectors: [0, b1, ..., bd]. The dual
// basis vector uses [1, b1, ..., bd].
std::vector<int> sym_factor(const SymMonomial& m, bool dual = false);

SuperSpace vn_space(int n);
SuperSpace sym_space(int d, int n, bool dual = false);

// T(v_a (x) v_b) on V_n (x) V_n.
SuperMap t_matrix(int n);

const RewriteSystem& sym_system(int n);
// Words and results are in terms of indices b in I_{n|n}.
Combo sym_normalize(const std::vector<int>& word, int n, long fuel = -1);

std::vector<SymMonomial> sym_basis(int d, int n);
long sym_dim(int d, int n);

}  // namespace qweb

// The Howe-duality algebra A_q(V_m * V_n): ordered basis, the two commuting
// U_q actions extended through the coproduct, divided powers, weight spaces
// and the dual action through the antipode.
#pragma once

#include <string>
#include <utility>
#include <vector>

#include "qweb/error.hpp"
#include "qweb/qsym.hpp"

namespace qweb {

// (a, b) stands for t_{a,b}; stored words always have a > 0.
using AqFactor = std::pair<int, int>;
using AqWord = std::vector<AqFactor>;
using AqElement = std::map<AqWord, ScalarQ>;

void aq_add(AqElement& x, const AqWord& w, const ScalarQ& c);
AqElement aq_scaled(const AqElement& x, const ScalarQ& c);
AqElement aq_sum(const AqElement& x, const AqElement& y);
std::string aq_to_string(const AqElement& x);

enum class Side { M, N };
enum class GenKind { E, F, K, Kinv, Kbar, Ebar, Fbar };

struct GeneratorSymbol {
  Side side = Side::N;
  GenKind kind = GenKind::E;
  int index = 1;
  int parity() const { return kind == GenKind::Kbar || kind == GenKind::Ebar || kind == GenKind::Fbar; }
  std::string to_string() const;
  friend bool operator==(const GeneratorSymbol&, const GeneratorSymbol&) = default;
};

// The generating set {E_i, F_i, K_j, K_j^-1, Kbar_1} of one side, for rank r.
std::vector<GeneratorSymbol> generating_set(Side side, int rank);

class AqAlgebra {
 public:
  AqAlgebra(int m, int n);
  static const AqAlgebra& get(int m, int n);

  int m() const { return m_; }
  int n() const { return n_; }
  int gid(const AqFactor& f) const;
  AqFactor factor(int g) const;
  bool is_normal(const AqWord& w) const;
  // Folds negative first indices, then rewrites into the ordered basis.
  AqElement normalize(const AqWord& w, long fuel = -1) const;
  AqElement normalize(const AqElement& x) const;

 private:
  int m_, n_;
  std::unique_ptr<RewriteSystem> sys_;
};

AqElement aq_normalize(int m, int n, const AqWord& word, long fuel = -1);

// Action on one generator t_{a,b}; every generator kind is available here.
std::vector<std::pair<AqFactor, ScalarQ>> act_factor(const GeneratorSymbol& g, const AqFactor& f);
// Action on normalized elements. Products only support the generating set.
AqElement act(const GeneratorSymbol& g, const AqElement& x, int m, int n);
AqElement divided_power_E(int r, int a, const AqElement& x, int m, int n);
AqElement divided_power_F(int r, int a, const AqElement& x, int m, int n);

// Basis of A_{q,lambda}: ordered monomials with lambda_i factors in row i. The
// labels are those of the tensor product of S^{lambda_i}(V_n) over the
// nonzero rows, so the space is literally that tensor product.
struct WeightSpace {
  std::vector<int> lambda;
  SuperSpace space;
  std::vector<AqWord> words;
  int index_of(const AqWord& w) const;

 private:
  friend const WeightSpace& weight_space(int, int, const std::vector<int>&);
  std::map<AqWord, int> index_;
};

const WeightSpace& weight_space(int m, int n, const std::vector<int>& lambda);
std::vector<SymMonomial> as_tensor_of_sym(const AqWord& w, int m);
AqWord from_rows(const std::vector<SymMonomial>& rows);
std::vector<int> weight_of(const AqWord& w, int m);

// Matrix of an element-level operator from A_{q,lambda} to A_{q,mu}.
template <class Op>
SuperMap operator_matrix(const WeightSpace& from, const WeightSpace& to, int parity, Op op) {
  SuperMap out(from.space, to.space, parity);
  for (int j = 0; j < from.space.dim(); ++j) {
    AqElement x{{from.words[static_cast<std::size_t>(j)], ScalarQ(1)}};
    for (const auto& [w, c] : op(x)) {
      int i = to.index_of(w);
      if (i < 0) throw Error(ErrorKind::Math, "action left the weight space");
      out.add(i, j, c);
    }
  }
  return out;
}

// Target weight of g applied on weight lambda (n-side generators fix it).
std::vector<int> shifted_weight(const GeneratorSymbol& g, std::vector<int> lambda);
SuperMap action_matrix(const GeneratorSymbol& g, int m, int n, const std::vector<int>& lambda);

// n-side action on S^k(V_n) and on its dual.
SuperMap sym_action(const GeneratorSymbol& g, int k, int n);
SuperMap dual_action(const GeneratorSymbol& g, int k, int n);

// Action on a tensor product of symmetric powers and their duals, through the
// iterated coproduct. Only the n-side generating set is supported.
struct ModuleFactor {
  int k;
  bool dual;
};
SuperMap factor_action(const GeneratorSymbol& g, const ModuleFactor& f, int n);
SuperSpace module_space(const std::vector<ModuleFactor>& fs, int n);
SuperMap tensor_action(const GeneratorSymbol& g, const std::vector<ModuleFactor>& fs, int n);

}  // namespace qweb

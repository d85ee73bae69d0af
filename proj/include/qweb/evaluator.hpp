// Evaluation of web diagrams as module maps over U_q(q_n), and the semantic
// relation-verification catalog.
#pragma once

#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "qweb/superlinear.hpp"
#include "qweb/webir.hpp"

namespace qweb {

struct EvalCache {
  std::mutex mu;
  std::map<std::string, SuperMap> maps;
};

struct EvalContext {
  int n = 1;
  long cap = 4096;
  // When set, every generator matrix is specialized at q0 before composing.
  std::optional<GaussRat> q0;
  std::shared_ptr<EvalCache> cache = std::make_shared<EvalCache>();

  EvalContext() = default;
  explicit EvalContext(int n_, long cap_ = 4096, std::optional<GaussRat> q0_ = std::nullopt)
      : n(n_), cap(cap_), q0(std::move(q0_)) {}
  EvalContext specialized(const GaussRat& at) const { return EvalContext(n, cap, at); }
};

long object_dim(const WebObject& obj, int n);
SuperSpace eval_object(const WebObject& obj, const EvalContext& ctx);
SuperMap eval_generator(const WebGenerator& g, const EvalContext& ctx);
SuperMap eval_diagram(const WebDiagram& d, const EvalContext& ctx);
SuperMap eval_linear(const LinearWeb& w, const EvalContext& ctx);
// Rightward crossing as the matrix inverse of the matching leftward crossing.
SuperMap rightward_by_inverse(bool over, int k, int l, const EvalContext& ctx);

// ---- linear combinations of diagrams ----

LinearWeb lin(const WebDiagram& d, const ScalarQ& c = ScalarQ(1));
LinearWeb operator+(LinearWeb a, const LinearWeb& b);
LinearWeb operator-(LinearWeb a, const LinearWeb& b);
LinearWeb operator*(const ScalarQ& c, LinearWeb a);
LinearWeb zero_web(const WebObject& src, const WebObject& tgt, int parity = 0);

// ---- relation catalog ----

struct RelationCase {
  std::string label;
  LinearWeb lhs, rhs;
};

struct RelationEntry {
  std::string id;
  std::string suite;
  std::string source;  // where the identity comes from, in words
  std::string params;  // parameter ranges, in words
  std::function<std::vector<RelationCase>(int n)> cases;
};

const std::vector<RelationEntry>& relation_catalog();
const RelationEntry& find_relation(const std::string& id);
std::vector<std::string> suite_names();

struct VerifyOptions {
  bool symbolic = true;  // false: specialized checks only
  std::vector<GaussRat> screens{GaussRat::frac(7, 5)};
};

struct RelationResult {
  std::string id, label;
  bool pass = false;
  std::string mode;  // "symbolic" or "screen q0=..."
  std::optional<Witness> witness;
  std::string error;
};

RelationResult check_case(const std::string& id, const RelationCase& c, const EvalContext& ctx,
                          const VerifyOptions& opt = {});
std::vector<RelationResult> verify_relation(const std::string& id, const EvalContext& ctx,
                                            const VerifyOptions& opt = {});
std::vector<RelationResult> verify_suite(const std::string& suite, const EvalContext& ctx,
                                         const VerifyOptions& opt = {});

// ---- equivariance ----

struct EquivarianceResult {
  bool pass = true;
  std::string generator;
  std::optional<Witness> witness;
};

// f must be the image of a map src -> tgt of the given parity.
EquivarianceResult check_equivariance(const SuperMap& f, const WebObject& src, const WebObject& tgt, int n);
EquivarianceResult verify_equivariance(const WebDiagram& d, const EvalContext& ctx);

}  // namespace qweb

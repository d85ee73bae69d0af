#include "qweb/evaluator.hpp"

#include "qweb/aqhowe.hpp"
#include "qweb/error.hpp"
#include "qweb/qsym.hpp"

namespace qweb {

namespace {

std::vector<ModuleFactor> factors_of(const WebObject& obj) {
  std::vector<ModuleFactor> fs;
  for (const auto& it : obj)
    if (it.k > 0) fs.push_back({it.k, it.o == Orient::Down});
  return fs;
}

std::string ctx_key(const EvalContext& ctx) {
  std::string s = "@" + std::to_string(ctx.n);
  if (ctx.q0) s += "@" + ctx.q0->to_pair();
  return s;
}

void check_cap(const WebObject& obj, const EvalContext& ctx) {
  if (object_dim(obj, ctx.n) > ctx.cap) throw Error(ErrorKind::Cap, "dimension cap exceeded");
}

// Re-expresses f between spaces carrying the same labels in another order.
SuperMap conform(const SuperMap& f, const SuperSpace& src, const SuperSpace& tgt) {
  if (f.source() == src && f.target() == tgt) {
    SuperMap r(src, tgt, f.parity());
    for (int j = 0; j < src.dim(); ++j) r.set_col(j, f.col(j));
    return r;
  }
  if (f.source().dim() != src.dim() || f.target().dim() != tgt.dim())
    throw Error(ErrorKind::Mismatch, "object mismatch");
  SuperMap r(src, tgt, f.parity());
  for (int j = 0; j < f.source().dim(); ++j) {
    int jj = src.index_of(f.source().label(j));
    if (jj < 0) throw Error(ErrorKind::Mismatch, "object mismatch");
    for (const auto& e : f.col(j)) {
      int ii = tgt.index_of(f.target().label(e.row));
      if (ii < 0) throw Error(ErrorKind::Mismatch, "object mismatch");
      r.add(ii, jj, e.val);
    }
  }
  return r;
}

SuperMap lcup_matrix(int k, const EvalContext& ctx) {
  const SuperSpace v = sym_space(k, ctx.n), vd = sym_space(k, ctx.n, true);
  SuperSpace tgt = eval_object({{Orient::Up, k}, {Orient::Down, k}}, ctx);
  SuperMap r(SuperSpace::unit(), tgt, 0);
  for (int i = 0; i < v.dim(); ++i) r.add(i * vd.dim() + i, 0, ScalarQ(1));
  return r;
}

SuperMap lcap_matrix(int k, const EvalContext& ctx) {
  const SuperSpace v = sym_space(k, ctx.n);
  SuperSpace src = eval_object({{Orient::Down, k}, {Orient::Up, k}}, ctx);
  SuperMap r(src, SuperSpace::unit(), 0);
  for (int i = 0; i < v.dim(); ++i) r.add(0, i * v.dim() + i, ScalarQ(1));
  return r;
}

SuperMap primitive_matrix(const WebGenerator& g, const EvalContext& ctx) {
  const int n = ctx.n;
  const SuperSpace src = eval_object(g.src, ctx), tgt = eval_object(g.tgt, ctx);
  switch (g.kind) {
    case WebKind::Id:
      return identity(src);
    case WebKind::Dot:
      return conform(action_matrix({Side::M, GenKind::Kbar, 1}, 1, n, {g.k}), src, tgt);
    case WebKind::Merge: {
      const int k = g.k, l = g.l;
      SuperMap m = operator_matrix(weight_space(2, n, {k, l}), weight_space(2, n, {k + l, 0}), 0,
                                   [&](const AqElement& x) { return divided_power_E(1, l, x, 2, n); });
      return conform(m, src, tgt);
    }
    case WebKind::Split: {
      const int k = g.k, l = g.l;
      SuperMap m = operator_matrix(weight_space(2, n, {0, k + l}), weight_space(2, n, {k, l}), 0,
                                   [&](const AqElement& x) { return divided_power_E(1, k, x, 2, n); });
      return conform(m, src, tgt);
    }
    case WebKind::LCup:
      return lcup_matrix(g.k, ctx);
    case WebKind::LCap:
      return lcap_matrix(g.k, ctx);
    default:
      throw Error(ErrorKind::Unsupported, "no primitive matrix for " + g.to_string());
  }
}

}  // namespace

long object_dim(const WebObject& obj, int n) {
  long d = 1;
  for (const auto& it : obj) {
    d *= sym_dim(it.k, n);
    if (d > (1L << 40)) return d;
  }
  return d;
}

SuperSpace eval_object(const WebObject& obj, const EvalContext& ctx) {
  check_cap(obj, ctx);
  return module_space(factors_of(obj), ctx.n);
}

SuperMap rightward_by_inverse(bool over, int k, int l, const EvalContext& ctx) {
  // the rightward over-crossing inverts the leftward under-crossing
  WebDiagram left = diagram_of(gen_cross(!over, {Orient::Down, l}, {Orient::Up, k}));
  return invert(eval_diagram(expand_macros(left), ctx));
}

SuperMap eval_generator(const WebGenerator& g, const EvalContext& ctx) {
  check_cap(g.src, ctx);
  check_cap(g.tgt, ctx);
  if (g.kind == WebKind::Id) return identity(eval_object(g.src, ctx));
  const std::string key = g.to_string() + (g.kind == WebKind::Block ? ":" + object_to_string(g.src) : "") +
                          ctx_key(ctx);
  {
    std::lock_guard<std::mutex> lock(ctx.cache->mu);
    auto it = ctx.cache->maps.find(key);
    if (it != ctx.cache->maps.end()) return it->second;
  }
  SuperMap out;
  switch (g.kind) {
    case WebKind::Dot:
    case WebKind::Merge:
    case WebKind::Split:
    case WebKind::LCup:
    case WebKind::LCap:
      out = primitive_matrix(g, ctx);
      if (ctx.q0) out = specialize(out, *ctx.q0);
      break;
    case WebKind::Over:
    case WebKind::Under:
      if (g.is_primitive()) {
        out = rightward_by_inverse(g.kind == WebKind::Over, 1, 1, ctx);
        break;
      }
      out = eval_linear(expand_generator(g), ctx);
      break;
    case WebKind::Block:
      out = eval_linear(*g.body, ctx);
      break;
    default:
      out = eval_linear(expand_generator(g), ctx);
      break;
  }
  std::lock_guard<std::mutex> lock(ctx.cache->mu);
  return ctx.cache->maps.emplace(key, std::move(out)).first->second;
}

SuperMap eval_diagram(const WebDiagram& d, const EvalContext& ctx) {
  check_cap(d.src, ctx);
  check_cap(d.tgt, ctx);
  std::optional<SuperMap> acc;
  for (const auto& s : d.slices) {
    check_cap(slice_target(s), ctx);
    SuperMap m = identity(SuperSpace::unit());
    for (const auto& g : s) m = tensor_map(m, eval_generator(g, ctx));
    acc = acc ? compose(m, *acc) : m;
  }
  SuperSpace src = eval_object(d.src, ctx), tgt = eval_object(d.tgt, ctx);
  if (!acc) return identity(src);
  return conform(*acc, src, tgt);
}

SuperMap eval_linear(const LinearWeb& w, const EvalContext& ctx) {
  SuperMap out(eval_object(w.src, ctx), eval_object(w.tgt, ctx), w.parity);
  for (const auto& [c, d] : w.terms) {
    if (c.is_zero()) continue;
    ScalarQ cc = ctx.q0 ? ScalarQ(specialize(c, *ctx.q0)) : c;
    out += eval_diagram(d, ctx).scaled(cc);
  }
  return out;
}

// ---- linear combinations ----

LinearWeb lin(const WebDiagram& d, const ScalarQ& c) {
  LinearWeb w{d.src, d.tgt, d.parity(), {}};
  if (!c.is_zero()) w.terms.emplace_back(c, d);
  return w;
}

LinearWeb zero_web(const WebObject& src, const WebObject& tgt, int parity) {
  return LinearWeb{normalize_object(src), normalize_object(tgt), parity, {}};
}

LinearWeb operator+(LinearWeb a, const LinearWeb& b) {
  if (a.src != b.src || a.tgt != b.tgt)
    throw Error(ErrorKind::Mismatch, "object mismatch: '" + object_to_string(a.src) + " -> " + object_to_string(a.tgt) +
                                         "' vs '" + object_to_string(b.src) + " -> " + object_to_string(b.tgt) + "'");
  if (a.terms.empty()) a.parity = b.parity;
  a.terms.insert(a.terms.end(), b.terms.begin(), b.terms.end());
  return a;
}

LinearWeb operator*(const ScalarQ& c, LinearWeb a) {
  for (auto& t : a.terms) t.first *= c;
  return a;
}

LinearWeb operator-(LinearWeb a, const LinearWeb& b) { return std::move(a) + ScalarQ(-1) * b; }

// ---- equivariance ----

EquivarianceResult check_equivariance(const SuperMap& f, const WebObject& src, const WebObject& tgt, int n) {
  const auto fs = factors_of(src), ft = factors_of(tgt);
  for (const auto& g : generating_set(Side::N, n)) {
    SuperMap rs = tensor_action(g, fs, n), rt = tensor_action(g, ft, n);
    SuperMap lhs = compose(f, rs);
    SuperMap rhs = compose(rt, f);
    if (f.parity() & g.parity()) rhs = rhs.scaled(-1);
    if (auto w = first_difference(lhs, rhs)) return {false, g.to_string(), w};
  }
  return {};
}

EquivarianceResult verify_equivariance(const WebDiagram& d, const EvalContext& ctx) {
  EvalContext sym(ctx.n, ctx.cap);
  sym.cache = ctx.cache;
  return check_equivariance(eval_diagram(expand_macros(d), sym), d.src, d.tgt, ctx.n);
}

}  // namespace qweb

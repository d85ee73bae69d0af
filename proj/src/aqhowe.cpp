#include "qweb/aqhowe.hpp"

#include <algorithm>
#include <mutex>
#include <sstream>

#include "qweb/error.hpp"

namespace qweb {

void aq_add(AqElement& x, const AqWord& w, const ScalarQ& c) {
  if (c.is_zero()) return;
  auto it = x.find(w);
  if (it == x.end()) {
    x.emplace(w, c);
  } else {
    it->second += c;
    if (it->second.is_zero()) x.erase(it);
  }
}

AqElement aq_scaled(const AqElement& x, const ScalarQ& c) {
  AqElement r;
  if (c.is_zero()) return r;
  for (const auto& [w, v] : x) r.emplace(w, v * c);
  return r;
}

AqElement aq_sum(const AqElement& x, const AqElement& y) {
  AqElement r = x;
  for (const auto& [w, v] : y) aq_add(r, w, v);
  return r;
}

std::string aq_to_string(const AqElement& x) {
  if (x.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [w, c] : x) {
    if (!first) os << " + ";
    first = false;
    os << "(" << c.pretty() << ")";
    for (const auto& [a, b] : w) os << "*t(" << a << "," << b << ")";
  }
  return os.str();
}

std::string GeneratorSymbol::to_string() const {
  static const char* names[] = {"E", "F", "K", "Kinv", "Kbar", "Ebar", "Fbar"};
  std::string s = names[static_cast<int>(kind)];
  if (side == Side::N) s += "'";
  return s + "_" + std::to_string(index);
}

std::vector<GeneratorSymbol> generating_set(Side side, int rank) {
  std::vector<GeneratorSymbol> out;
  for (int i = 1; i < rank; ++i) {
    out.push_back({side, GenKind::E, i});
    out.push_back({side, GenKind::F, i});
  }
  for (int j = 1; j <= rank; ++j) {
    out.push_back({side, GenKind::K, j});
    out.push_back({side, GenKind::Kinv, j});
  }
  out.push_back({side, GenKind::Kbar, 1});
  return out;
}

// ---- the algebra ----

namespace {

AqFactor fold(const AqFactor& f) { return f.first < 0 ? AqFactor{-f.first, -f.second} : f; }

}  // namespace

AqAlgebra::AqAlgebra(int m, int n) : m_(m), n_(n) {
  const int N = 2 * m * n;
  std::vector<int> par(static_cast<std::size_t>(N));
  for (int g = 0; g < N; ++g) par[static_cast<std::size_t>(g)] = index_parity(factor(g).second);
  // The four alternate relations for a,b,c,d > 0, a <= c, plus odd squares.
  const ScalarQ qt = ScalarQ::qtilde();
  std::vector<Combo> rels;
  auto add = [&](Combo& r, int a, int b, int c, int d, const ScalarQ& v) {
    combo_add(r, {gid({a, b}), gid({c, d})}, v);
  };
  for (int a = 1; a <= m; ++a)
    for (int c = a; c <= m; ++c)
      for (int b = 1; b <= n; ++b)
        for (int d = 1; d <= n; ++d) {
          const int ac = a == c, bd = b == d;
          Combo r1, r2, r3, r4;
          add(r1, a, b, c, d, ScalarQ::q(ac));
          add(r1, c, d, a, b, -ScalarQ::q(bd));
          if (b < d) add(r1, c, b, a, d, -qt);
          add(r1, c, -b, a, -d, -qt);

          add(r2, a, b, c, -d, ScalarQ::q(ac));
          add(r2, c, -d, a, b, -ScalarQ::q(-bd));
          if (d < b) add(r2, c, -b, a, d, qt);

          add(r3, a, -b, c, d, ScalarQ::q(ac));
          add(r3, c, d, a, -b, -ScalarQ::q(bd));
          add(r3, c, -b, a, d, -qt);
          if (b < d) add(r3, c, b, a, -d, -qt);

          add(r4, a, -b, c, -d, ScalarQ::q(ac));
          add(r4, c, -d, a, -b, ScalarQ::q(-bd));
          if (d < b) add(r4, c, -b, a, -d, -qt);
          for (auto* r : {&r1, &r2, &r3, &r4})
            if (!r->empty()) rels.push_back(std::move(*r));
        }
  for (int a = 1; a <= m; ++a)
    for (int b = 1; b <= n; ++b) {
      Combo r;
      add(r, a, -b, a, -b, ScalarQ(1));
      rels.push_back(std::move(r));
    }
  sys_ = std::make_unique<RewriteSystem>(par, rels);
}

const AqAlgebra& AqAlgebra::get(int m, int n) {
  static std::mutex mu;
  static std::map<std::pair<int, int>, std::unique_ptr<AqAlgebra>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto& slot = cache[{m, n}];
  if (!slot) slot = std::make_unique<AqAlgebra>(m, n);
  return *slot;
}

int AqAlgebra::gid(const AqFactor& f0) const {
  AqFactor f = fold(f0);
  auto [a, b] = f;
  if (a < 1 || a > m_ || b == 0 || b < -n_ || b > n_) throw Error(ErrorKind::Math, "index out of range");
  return (a - 1) * 2 * n_ + (b < 0 ? b + n_ : b + n_ - 1);
}

AqFactor AqAlgebra::factor(int g) const {
  int a = g / (2 * n_) + 1, p = g % (2 * n_);
  return {a, p < n_ ? p - n_ : p - n_ + 1};
}

bool AqAlgebra::is_normal(const AqWord& w) const {
  Word u;
  for (const auto& f : w) u.push_back(gid(f));
  return sys_->is_normal(u);
}

AqElement AqAlgebra::normalize(const AqWord& w, long fuel) const {
  Word u;
  u.reserve(w.size());
  for (const auto& f : w) u.push_back(gid(f));
  AqElement out;
  for (const auto& [v, c] : sys_->normalize(u, fuel)) {
    AqWord x;
    x.reserve(v.size());
    for (int g : v) x.push_back(factor(g));
    out.emplace(std::move(x), c);
  }
  return out;
}

AqElement AqAlgebra::normalize(const AqElement& x) const {
  AqElement out;
  for (const auto& [w, c] : x)
    for (const auto& [v, d] : normalize(w)) aq_add(out, v, c * d);
  return out;
}

AqElement aq_normalize(int m, int n, const AqWord& word, long fuel) {
  return AqAlgebra::get(m, n).normalize(word, fuel);
}

// ---- actions ----

std::vector<std::pair<AqFactor, ScalarQ>> act_factor(const GeneratorSymbol& g, const AqFactor& f0) {
  const auto [a, b] = fold(f0);
  const int r = g.index;
  const ScalarQ isign = ScalarQ::i() * ScalarQ(index_parity(b) ? -1 : 1);
  std::vector<std::pair<AqFactor, ScalarQ>> out;
  if (g.side == Side::M) {
    switch (g.kind) {
      case GenKind::E:
        if (a == r + 1) out.push_back({{r, b}, ScalarQ(1)});
        break;
      case GenKind::F:
        if (a == r) out.push_back({{r + 1, b}, ScalarQ(1)});
        break;
      case GenKind::K:
        out.push_back({{a, b}, ScalarQ::q(a == r ? 1 : 0)});
        break;
      case GenKind::Kinv:
        out.push_back({{a, b}, ScalarQ::q(a == r ? -1 : 0)});
        break;
      case GenKind::Kbar:
        if (a == r) out.push_back({{r, -b}, isign});
        break;
      case GenKind::Ebar:
        if (a == r + 1) out.push_back({{r, -b}, isign});
        break;
      case GenKind::Fbar:
        if (a == r) out.push_back({{r + 1, -b}, isign});
        break;
    }
    return out;
  }
  const int s = b < 0 ? -1 : 1, ab = std::abs(b);
  switch (g.kind) {
    case GenKind::E:
      if (ab == r + 1) out.push_back({{a, s * r}, ScalarQ(1)});
      break;
    case GenKind::F:
      if (ab == r) out.push_back({{a, s * (r + 1)}, ScalarQ(1)});
      break;
    case GenKind::K:
      out.push_back({{a, b}, ScalarQ::q(ab == r ? 1 : 0)});
      break;
    case GenKind::Kinv:
      out.push_back({{a, b}, ScalarQ::q(ab == r ? -1 : 0)});
      break;
    case GenKind::Kbar:
      if (ab == r) out.push_back({{a, -b}, ScalarQ(1)});
      break;
    case GenKind::Ebar:
      if (ab == r + 1) out.push_back({{a, -s * r}, ScalarQ(1)});
      break;
    case GenKind::Fbar:
      if (ab == r) out.push_back({{a, -s * (r + 1)}, ScalarQ(1)});
      break;
  }
  return out;
}

namespace {

// Exponent of K_s on one factor.
int weight_at(Side side, int s, const AqFactor& f) {
  return side == Side::M ? (f.first == s) : (std::abs(f.second) == s);
}

int count_weight(Side side, int s, const AqWord& w, std::size_t from, std::size_t to) {
  int c = 0;
  for (std::size_t k = from; k < to; ++k) c += weight_at(side, s, w[k]);
  return c;
}

}  // namespace

AqElement act(const GeneratorSymbol& g, const AqElement& x, int m, int n) {
  const AqAlgebra& alg = AqAlgebra::get(m, n);
  const int r = g.index;
  const int rank = g.side == Side::M ? m : n;
  const bool is_ef = g.kind == GenKind::E || g.kind == GenKind::F || g.kind == GenKind::Ebar || g.kind == GenKind::Fbar;
  if (r < 1 || r > rank || (is_ef && r >= rank)) throw Error(ErrorKind::Unsupported, "unsupported generator");
  AqElement out;
  for (const auto& [w, c] : x) {
    const std::size_t d = w.size();
    switch (g.kind) {
      case GenKind::K:
      case GenKind::Kinv: {
        int e = count_weight(g.side, r, w, 0, d);
        aq_add(out, w, c * ScalarQ::q(g.kind == GenKind::K ? e : -e));
        break;
      }
      case GenKind::E:
      case GenKind::F:
      case GenKind::Kbar: {
        if (g.kind == GenKind::Kbar && r != 1 && d > 1) throw Error(ErrorKind::Unsupported, "unsupported generator");
        int parity_before = 0;
        for (std::size_t j = 0; j < d; ++j) {
          for (const auto& [f, v] : act_factor(g, w[j])) {
            ScalarQ coef = c * v;
            if (g.kind == GenKind::E) {
              // E (x) K_r^-1 K_{r+1} on the factors to the right
              coef *= ScalarQ::q(count_weight(g.side, r + 1, w, j + 1, d) - count_weight(g.side, r, w, j + 1, d));
            } else if (g.kind == GenKind::F) {
              // K_r K_{r+1}^-1 (x) F on the factors to the left
              coef *= ScalarQ::q(count_weight(g.side, r, w, 0, j) - count_weight(g.side, r + 1, w, 0, j));
            } else {
              // K^-1 (x) Kbar (x) K with the sign of the factors passed over
              coef *= ScalarQ::q(count_weight(g.side, r, w, j + 1, d) - count_weight(g.side, r, w, 0, j));
              if (parity_before) coef = -coef;
            }
            AqWord v2 = w;
            v2[j] = f;
            for (const auto& [u, e] : alg.normalize(v2)) aq_add(out, u, coef * e);
          }
          parity_before ^= index_parity(w[j].second);
        }
        break;
      }
      case GenKind::Ebar:
      case GenKind::Fbar: {
        if (d > 1) throw Error(ErrorKind::Unsupported, "unsupported generator");
        for (std::size_t j = 0; j < d; ++j)
          for (const auto& [f, v] : act_factor(g, w[j])) aq_add(out, AqWord{f}, c * v);
        break;
      }
    }
  }
  return out;
}

namespace {

AqElement divided_power(GenKind kind, int r, int a, const AqElement& x, int m, int n) {
  if (a < 1) throw Error(ErrorKind::Math, "divided power needs a >= 1");
  AqElement y = x;
  for (int k = 0; k < a; ++k) y = act({Side::M, kind, r}, y, m, n);
  bool integral = true;
  for (const auto& [w, c] : x) integral = integral && c.is_laurent();
  const ScalarQ f = qfact(a);
  AqElement out;
  for (const auto& [w, c] : y) {
    ScalarQ v = c / f;
    if (integral && !v.is_laurent()) throw Error(ErrorKind::Math, "divisibility violated");
    out.emplace(w, v);
  }
  return out;
}

}  // namespace

AqElement divided_power_E(int r, int a, const AqElement& x, int m, int n) {
  return divided_power(GenKind::E, r, a, x, m, n);
}

AqElement divided_power_F(int r, int a, const AqElement& x, int m, int n) {
  return divided_power(GenKind::F, r, a, x, m, n);
}

// ---- weight spaces ----

int WeightSpace::index_of(const AqWord& w) const {
  auto it = index_.find(w);
  return it == index_.end() ? -1 : it->second;
}

std::vector<SymMonomial> as_tensor_of_sym(const AqWord& w, int m) {
  std::vector<SymMonomial> rows(static_cast<std::size_t>(m));
  for (const auto& [a, b] : w) rows[static_cast<std::size_t>(a - 1)].idx.push_back(b);
  return rows;
}

AqWord from_rows(const std::vector<SymMonomial>& rows) {
  AqWord w;
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (int b : rows[i].idx) w.push_back({static_cast<int>(i) + 1, b});
  return w;
}

std::vector<int> weight_of(const AqWord& w, int m) {
  std::vector<int> lam(static_cast<std::size_t>(m), 0);
  for (const auto& f : w) ++lam[static_cast<std::size_t>(f.first - 1)];
  return lam;
}

const WeightSpace& weight_space(int m, int n, const std::vector<int>& lambda) {
  static std::mutex mu;
  static std::map<std::tuple<int, int, std::vector<int>>, std::unique_ptr<WeightSpace>> cache;
  if (static_cast<int>(lambda.size()) != m) throw Error(ErrorKind::Math, "weight has the wrong length");
  for (int l : lambda)
    if (l < 0) throw Error(ErrorKind::Math, "negative weight");
  std::lock_guard<std::mutex> lock(mu);
  auto& slot = cache[{m, n, lambda}];
  if (slot) return *slot;
  auto ws = std::make_unique<WeightSpace>();
  ws->lambda = lambda;
  std::vector<AqWord> words{AqWord{}};
  SuperSpace space = SuperSpace::unit();
  for (int i = 0; i < m; ++i) {
    int li = lambda[static_cast<std::size_t>(i)];
    if (li == 0) continue;
    auto basis = sym_basis(li, n);
    std::vector<AqWord> next;
    for (const auto& w : words)
      for (const auto& mono : basis) {
        AqWord v = w;
        for (int b : mono.idx) v.push_back({i + 1, b});
        next.push_back(std::move(v));
      }
    words = std::move(next);
    space = tensor_space(space, sym_space(li, n));
  }
  ws->words = std::move(words);
  ws->space = space;
  for (std::size_t k = 0; k < ws->words.size(); ++k) ws->index_[ws->words[k]] = static_cast<int>(k);
  slot = std::move(ws);
  return *slot;
}

std::vector<int> shifted_weight(const GeneratorSymbol& g, std::vector<int> lambda) {
  if (g.side == Side::N) return lambda;
  auto r = static_cast<std::size_t>(g.index);
  if (g.kind == GenKind::E || g.kind == GenKind::Ebar) {
    ++lambda[r - 1];
    --lambda[r];
  } else if (g.kind == GenKind::F || g.kind == GenKind::Fbar) {
    --lambda[r - 1];
    ++lambda[r];
  }
  return lambda;
}

SuperMap action_matrix(const GeneratorSymbol& g, int m, int n, const std::vector<int>& lambda) {
  const WeightSpace& from = weight_space(m, n, lambda);
  std::vector<int> mu = shifted_weight(g, lambda);
  for (int x : mu)
    if (x < 0) return SuperMap(from.space, SuperSpace(), g.parity());
  const WeightSpace& to = weight_space(m, n, mu);
  return operator_matrix(from, to, g.parity(), [&](const AqElement& x) { return act(g, x, m, n); });
}

SuperMap sym_action(const GeneratorSymbol& g, int k, int n) {
  if (g.side != Side::N) throw Error(ErrorKind::Unsupported, "unsupported generator");
  return action_matrix(g, 1, n, {k});
}

SuperMap dual_action(const GeneratorSymbol& g, int k, int n) {
  if (g.side != Side::N) throw Error(ErrorKind::Unsupported, "unsupported generator");
  auto mat = [&](GenKind kind, int idx) { return sym_action({Side::N, kind, idx}, k, n); };
  const int i = g.index;
  SuperMap s;  // matrix of S(g)
  switch (g.kind) {
    case GenKind::E:
      s = compose(mat(GenKind::E, i), compose(mat(GenKind::K, i), mat(GenKind::Kinv, i + 1))).scaled(ScalarQ(-1));
      break;
    case GenKind::F:
      s = compose(mat(GenKind::Kinv, i), compose(mat(GenKind::K, i + 1), mat(GenKind::F, i))).scaled(ScalarQ(-1));
      break;
    case GenKind::K:
      s = mat(GenKind::Kinv, i);
      break;
    case GenKind::Kinv:
      s = mat(GenKind::K, i);
      break;
    case GenKind::Kbar:
      if (i != 1) throw Error(ErrorKind::Unsupported, "unsupported generator");
      s = mat(GenKind::Kbar, 1).scaled(ScalarQ(-1));
      break;
    default:
      throw Error(ErrorKind::Unsupported, "unsupported generator");
  }
  SuperSpace dual = sym_space(k, n, true);
  SuperMap out(dual, dual, g.parity());
  // x . w_i^* = sum_j (-1)^{p(x) p_i} S(x)_{ij} w_j^*
  for (int j = 0; j < s.source().dim(); ++j)
    for (const auto& e : s.col(j)) {
      const int i2 = e.row;
      ScalarQ v = (g.parity() && dual.parity(i2)) ? -e.val : e.val;
      out.add(j, i2, v);
    }
  return out;
}

}  // namespace qweb

namespace qweb {

SuperMap factor_action(const GeneratorSymbol& g, const ModuleFactor& f, int n) {
  return f.dual ? dual_action(g, f.k, n) : sym_action(g, f.k, n);
}

SuperSpace module_space(const std::vector<ModuleFactor>& fs, int n) {
  SuperSpace s = SuperSpace::unit();
  for (const auto& f : fs) s = tensor_space(s, sym_space(f.k, n, f.dual));
  return s;
}

SuperMap tensor_action(const GeneratorSymbol& g, const std::vector<ModuleFactor>& fs, int n) {
  if (g.side != Side::N) throw Error(ErrorKind::Unsupported, "unsupported generator");
  const SuperSpace total = module_space(fs, n);
  const int i = g.index;
  auto fa = [&](GenKind kind, int idx, const ModuleFactor& f) { return factor_action({Side::N, kind, idx}, f, n); };
  auto id = [&](const ModuleFactor& f) { return identity(sym_space(f.k, n, f.dual)); };
  // product over factors of per-factor maps chosen by position relative to j
  auto chain = [&](std::size_t j, auto left, auto mid, auto right) {
    SuperMap out = identity(SuperSpace::unit());
    for (std::size_t p = 0; p < fs.size(); ++p)
      out = tensor_map(out, p < j ? left(fs[p]) : p == j ? mid(fs[p]) : right(fs[p]));
    return out;
  };
  switch (g.kind) {
    case GenKind::K:
    case GenKind::Kinv: {
      SuperMap out = identity(SuperSpace::unit());
      for (const auto& f : fs) out = tensor_map(out, fa(g.kind, i, f));
      return out;
    }
    case GenKind::E:
    case GenKind::F:
    case GenKind::Kbar: {
      if (g.kind == GenKind::Kbar && i != 1) throw Error(ErrorKind::Unsupported, "unsupported generator");
      SuperMap out(total, total, g.parity());
      for (std::size_t j = 0; j < fs.size(); ++j) {
        if (g.kind == GenKind::E) {
          out += chain(j, id, [&](const ModuleFactor& f) { return fa(GenKind::E, i, f); },
                       [&](const ModuleFactor& f) { return compose(fa(GenKind::Kinv, i, f), fa(GenKind::K, i + 1, f)); });
        } else if (g.kind == GenKind::F) {
          out += chain(j, [&](const ModuleFactor& f) { return compose(fa(GenKind::K, i, f), fa(GenKind::Kinv, i + 1, f)); },
                       [&](const ModuleFactor& f) { return fa(GenKind::F, i, f); }, id);
        } else {
          out += chain(j, [&](const ModuleFactor& f) { return fa(GenKind::Kinv, 1, f); },
                       [&](const ModuleFactor& f) { return fa(GenKind::Kbar, 1, f); },
                       [&](const ModuleFactor& f) { return fa(GenKind::K, 1, f); });
        }
      }
      return out;
    }
    default:
      throw Error(ErrorKind::Unsupported, "unsupported generator");
  }
}

}  // namespace qweb

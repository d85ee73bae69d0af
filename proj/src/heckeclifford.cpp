#include "qweb/heckeclifford.hpp"

#include <algorithm>
#include <numeric>

#include "qweb/error.hpp"

namespace qweb {

// ---- permutations ----

Perm perm_identity(int k) {
  Perm p(static_cast<std::size_t>(k));
  std::iota(p.begin(), p.end(), 0);
  return p;
}

Perm perm_simple(int k, int i) {
  if (i < 1 || i >= k) throw Error(ErrorKind::Math, "simple transposition out of range");
  Perm p = perm_identity(k);
  std::swap(p[static_cast<std::size_t>(i - 1)], p[static_cast<std::size_t>(i)]);
  return p;
}

Perm perm_mul(const Perm& a, const Perm& b) {
  Perm r(b.size());
  for (std::size_t x = 0; x < b.size(); ++x) r[x] = a[static_cast<std::size_t>(b[x])];
  return r;
}

Perm perm_inverse(const Perm& p) {
  Perm r(p.size());
  for (std::size_t x = 0; x < p.size(); ++x) r[static_cast<std::size_t>(p[x])] = static_cast<int>(x);
  return r;
}

int perm_length(const Perm& p) {
  int n = 0;
  for (std::size_t a = 0; a < p.size(); ++a)
    for (std::size_t b = a + 1; b < p.size(); ++b)
      if (p[a] > p[b]) ++n;
  return n;
}

std::vector<int> perm_reduced_word(const Perm& p) {
  // peel off left descents: p = s_i (s_i p) with l(s_i p) < l(p)
  std::vector<int> word;
  Perm cur = p;
  const int k = static_cast<int>(p.size());
  while (perm_length(cur) > 0) {
    Perm inv = perm_inverse(cur);
    for (int i = 1; i < k; ++i) {
      if (inv[static_cast<std::size_t>(i - 1)] > inv[static_cast<std::size_t>(i)]) {
        word.push_back(i);
        cur = perm_mul(perm_simple(k, i), cur);
        break;
      }
    }
  }
  return word;
}

std::vector<Perm> all_perms(int k) {
  std::vector<Perm> out;
  Perm p = perm_identity(k);
  do out.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  return out;
}

// ---- HC_k(q) ----

namespace {

using Terms = std::map<HCKey, ScalarQ>;

void add_term(Terms& t, const HCKey& key, const ScalarQ& v) {
  if (v.is_zero()) return;
  auto it = t.find(key);
  if (it == t.end()) {
    t.emplace(key, v);
  } else {
    it->second += v;
    if (it->second.is_zero()) t.erase(it);
  }
}

// c_j * (c^eps): returns the sign and updates eps.
int clifford_left(std::vector<int>& eps, int j) {
  int sign = 1;
  for (int m = 0; m < j; ++m)
    if (eps[static_cast<std::size_t>(m)]) sign = -sign;
  eps[static_cast<std::size_t>(j)] ^= 1;
  return sign;
}

Terms left_c(int j, const Terms& y) {
  Terms out;
  for (const auto& [key, v] : y) {
    HCKey nk = key;
    int s = clifford_left(nk.eps, j);
    add_term(out, nk, s > 0 ? v : -v);
  }
  return out;
}

// T_i (0-based: swaps strands i, i+1) times y.
Terms left_T(int i, const Terms& y, int k) {
  const ScalarQ qt = ScalarQ::qtilde();
  const Perm si = perm_simple(k, i + 1);
  struct State {
    ScalarQ coef;
    std::vector<int> word;  // Clifford letters, left to right
    bool has_t;
  };
  Terms out;
  for (const auto& [key, v] : y) {
    std::vector<State> states{{v, {}, true}};
    for (int j = 0; j < k; ++j) {
      if (!key.eps[static_cast<std::size_t>(j)]) continue;
      std::vector<State> next;
      for (auto& st : states) {
        if (!st.has_t || (j != i && j != i + 1)) {
          st.word.push_back(j);
          next.push_back(std::move(st));
        } else if (j == i) {
          st.word.push_back(i + 1);
          next.push_back(std::move(st));
        } else {
          // T_i c_{i+1} = c_i T_i - qt c_i + qt c_{i+1}
          State a = st, b = st, c = st;
          a.word.push_back(i);
          b.word.push_back(i);
          b.coef = -(b.coef * qt);
          b.has_t = false;
          c.word.push_back(i + 1);
          c.coef = c.coef * qt;
          c.has_t = false;
          next.push_back(std::move(a));
          next.push_back(std::move(b));
          next.push_back(std::move(c));
        }
      }
      states = std::move(next);
    }
    for (const auto& st : states) {
      HCKey nk{std::vector<int>(static_cast<std::size_t>(k), 0), key.sigma};
      int sign = 1;
      for (auto it = st.word.rbegin(); it != st.word.rend(); ++it) sign *= clifford_left(nk.eps, *it);
      ScalarQ c = sign > 0 ? st.coef : -st.coef;
      if (!st.has_t) {
        add_term(out, nk, c);
        continue;
      }
      Perm up = perm_mul(si, key.sigma);
      if (perm_length(up) > perm_length(key.sigma)) {
        add_term(out, HCKey{nk.eps, up}, c);
      } else {
        // T_i T_i T_{up} = (qt T_i + 1) T_{up}
        add_term(out, nk, c * qt);
        add_term(out, HCKey{nk.eps, up}, c);
      }
    }
  }
  return out;
}

}  // namespace

HCElement HCElement::one(int k) { return basis(k, std::vector<int>(static_cast<std::size_t>(k), 0), perm_identity(k)); }

HCElement HCElement::basis(int k, const std::vector<int>& eps, const Perm& sigma) {
  if (static_cast<int>(eps.size()) != k || static_cast<int>(sigma.size()) != k)
    throw Error(ErrorKind::Mismatch, "basis element of the wrong size");
  HCElement x(k);
  x.terms_.emplace(HCKey{eps, sigma}, ScalarQ(1));
  return x;
}

HCElement HCElement::T(int k, int i) {
  return basis(k, std::vector<int>(static_cast<std::size_t>(k), 0), perm_simple(k, i));
}

HCElement HCElement::c(int k, int i) {
  if (i < 1 || i > k) throw Error(ErrorKind::Math, "Clifford generator out of range");
  std::vector<int> eps(static_cast<std::size_t>(k), 0);
  eps[static_cast<std::size_t>(i - 1)] = 1;
  return basis(k, eps, perm_identity(k));
}

HCElement HCElement::T_perm(int k, const Perm& sigma) {
  return basis(k, std::vector<int>(static_cast<std::size_t>(k), 0), sigma);
}

HCElement HCElement::T_word(int k, const std::vector<int>& word) {
  HCElement x = one(k);
  for (auto it = word.rbegin(); it != word.rend(); ++it) {
    if (*it < 1 || *it >= k) throw Error(ErrorKind::Math, "simple transposition out of range");
    x.terms_ = left_T(*it - 1, x.terms_, k);
  }
  return x;
}

int HCElement::parity() const {
  int seen = 0;  // bit 0: even present, bit 1: odd present
  for (const auto& [key, v] : terms_) {
    int p = std::accumulate(key.eps.begin(), key.eps.end(), 0) % 2;
    seen |= 1 << p;
  }
  if (seen == 3) return -1;
  return seen == 2 ? 1 : 0;
}

void HCElement::add(const HCKey& key, const ScalarQ& v) { add_term(terms_, key, v); }

HCElement& HCElement::operator+=(const HCElement& o) {
  if (o.k_ != k_) throw Error(ErrorKind::Mismatch, "HC elements of different rank");
  for (const auto& [key, v] : o.terms_) add_term(terms_, key, v);
  return *this;
}

HCElement& HCElement::operator-=(const HCElement& o) {
  if (o.k_ != k_) throw Error(ErrorKind::Mismatch, "HC elements of different rank");
  for (const auto& [key, v] : o.terms_) add_term(terms_, key, -v);
  return *this;
}

HCElement operator*(const ScalarQ& s, const HCElement& x) {
  HCElement r(x.k_);
  if (s.is_zero()) return r;
  for (const auto& [key, v] : x.terms_) r.terms_.emplace(key, s * v);
  return r;
}

HCElement operator*(const HCElement& x, const HCElement& y) {
  if (x.k_ != y.k_) throw Error(ErrorKind::Mismatch, "HC elements of different rank");
  const int k = x.k_;
  HCElement r(k);
  // group x by sigma so T_sigma * y is computed once
  std::map<Perm, std::vector<std::pair<std::vector<int>, ScalarQ>>> by_sigma;
  for (const auto& [key, v] : x.terms_) by_sigma[key.sigma].emplace_back(key.eps, v);
  for (const auto& [sigma, parts] : by_sigma) {
    Terms ty = y.terms_;
    auto word = perm_reduced_word(sigma);
    for (auto it = word.rbegin(); it != word.rend(); ++it) ty = left_T(*it - 1, ty, k);
    for (const auto& [eps, v] : parts) {
      Terms t = ty;
      for (int j = k - 1; j >= 0; --j)
        if (eps[static_cast<std::size_t>(j)]) t = left_c(j, t);
      for (const auto& [key, w] : t) add_term(r.terms_, key, v * w);
    }
  }
  return r;
}

HCElement hc_multiply(const HCElement& x, const HCElement& y) { return x * y; }

std::string HCElement::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [key, v] : terms_) {
    if (!out.empty()) out += " + ";
    out += "(" + v.pretty() + ")";
    for (std::size_t j = 0; j < key.eps.size(); ++j)
      if (key.eps[j]) out += " c" + std::to_string(j + 1);
    for (int i : perm_reduced_word(key.sigma)) out += " T" + std::to_string(i);
  }
  return out;
}

std::vector<HCElement> hc_basis(int k) {
  std::vector<HCElement> out;
  for (int mask = 0; mask < (1 << k); ++mask) {
    std::vector<int> eps(static_cast<std::size_t>(k));
    for (int j = 0; j < k; ++j) eps[static_cast<std::size_t>(j)] = (mask >> j) & 1;
    for (const auto& p : all_perms(k)) out.push_back(HCElement::basis(k, eps, p));
  }
  return out;
}

// ---- webs and psi ----

namespace {

WebDiagram pad(const WebDiagram& d, const WebObject& left, const WebObject& right) {
  WebDiagram r = d;
  if (!left.empty()) r = tensor(identity_diagram(left), r);
  if (!right.empty()) r = tensor(r, identity_diagram(right));
  return r;
}

WebDiagram on_ups(int k, int at, int width, const WebGenerator& g) {
  return pad(diagram_of(g), ups(at - 1), ups(k - at - width + 1));
}

ScalarQ coef_at(const ScalarQ& c, const EvalContext& ctx) {
  return ctx.q0 ? ScalarQ(specialize(c, *ctx.q0)) : c;
}

}  // namespace

WebDiagram hc_web_c(int k, int i) {
  if (i < 1 || i > k) throw Error(ErrorKind::Math, "Clifford generator out of range");
  return on_ups(k, i, 1, gen_dot(1));
}

WebDiagram hc_web_T(int k, int i) {
  if (i < 1 || i >= k) throw Error(ErrorKind::Math, "simple transposition out of range");
  return on_ups(k, i, 2, gen_cross(true, {Orient::Up, 1}, {Orient::Up, 1}));
}

LinearWeb hc_to_web(const HCElement& x) {
  const int k = x.k();
  LinearWeb out = zero_web(ups(k), ups(k), std::max(x.parity(), 0));
  for (const auto& [key, v] : x.terms()) {
    // bottom to top: T letters (rightmost first), then Clifford letters
    std::vector<WebDiagram> parts;
    auto word = perm_reduced_word(key.sigma);
    for (auto it = word.rbegin(); it != word.rend(); ++it) parts.push_back(hc_web_T(k, *it));
    for (int j = k; j >= 1; --j)
      if (key.eps[static_cast<std::size_t>(j - 1)]) parts.push_back(hc_web_c(k, j));
    WebDiagram d = parts.empty() ? identity_diagram(ups(k)) : stack(parts);
    out = out + lin(d, v);
  }
  return out;
}

SuperMap psi(const HCElement& x, const EvalContext& ctx) {
  const int k = x.k();
  const int par = x.parity();
  if (par < 0) throw Error(ErrorKind::Math, "element is not homogeneous");
  SuperSpace v = eval_object(ups(k), ctx);
  SuperMap out(v, v, par);
  std::vector<SuperMap> cs, ts;
  for (int j = 1; j <= k; ++j) cs.push_back(eval_diagram(hc_web_c(k, j), ctx));
  for (int i = 1; i < k; ++i) ts.push_back(eval_diagram(hc_web_T(k, i), ctx));
  std::map<Perm, SuperMap> tmemo;
  for (const auto& [key, c] : x.terms()) {
    auto it = tmemo.find(key.sigma);
    if (it == tmemo.end()) {
      SuperMap m = identity(v);
      for (int i : perm_reduced_word(key.sigma)) m = compose(m, ts[static_cast<std::size_t>(i - 1)]);
      it = tmemo.emplace(key.sigma, std::move(m)).first;
    }
    SuperMap m = it->second;
    for (int j = k; j >= 1; --j)
      if (key.eps[static_cast<std::size_t>(j - 1)]) m = compose(cs[static_cast<std::size_t>(j - 1)], m);
    out += m.scaled(coef_at(c, ctx));
  }
  return out;
}

SuperMap psi(const HCElement& x, int n) { return psi(x, EvalContext(n)); }

int psi_rank(int k, int n, const GaussRat& q0) {
  EvalContext ctx = EvalContext(n).specialized(q0);
  std::vector<SuperMap> even, odd;
  for (const auto& b : hc_basis(k)) (b.parity() ? odd : even).push_back(psi(b, ctx));
  // even and odd maps have disjoint supports
  return span_rank_at(even, q0) + span_rank_at(odd, q0);
}

// ---- clasps ----

namespace {

// Embed x in HC_k acting on strands offset+1 .. offset+x.k().
HCElement embed(const HCElement& x, int k, int offset) {
  HCElement r(k);
  for (const auto& [key, v] : x.terms()) {
    HCKey nk{std::vector<int>(static_cast<std::size_t>(k), 0), perm_identity(k)};
    for (int j = 0; j < x.k(); ++j) {
      nk.eps[static_cast<std::size_t>(offset + j)] = key.eps[static_cast<std::size_t>(j)];
      nk.sigma[static_cast<std::size_t>(offset + j)] = offset + key.sigma[static_cast<std::size_t>(j)];
    }
    r.add(nk, v);
  }
  return r;
}

}  // namespace

HCElement clasp(int k) {
  if (k < 1) throw Error(ErrorKind::Math, "clasp needs k >= 1");
  HCElement sum(k);
  for (const auto& p : all_perms(k)) sum += ScalarQ::q(perm_length(p)) * HCElement::T_perm(k, p);
  return (ScalarQ::q(-k * (k - 1) / 2) / qfact(k)) * sum;
}

HCElement clasp_recursive(int k) {
  if (k < 1) throw Error(ErrorKind::Math, "clasp needs k >= 1");
  if (k == 1) return HCElement::one(1);
  HCElement prev = embed(clasp_recursive(k - 1), k, 0);
  HCElement two = embed(clasp(2), k, k - 2);
  return (qint(2) * qint(k - 1) / qint(k)) * (prev * two * prev) - (qint(k - 2) / qint(k)) * prev;
}

// ---- walled Brauer-Clifford ----

namespace {

WebObject mixed(int r, int s) { return concat(ups(r), downs(s)); }

WebDiagram at_mixed(int r, int s, int pos, int width, const WebDiagram& d) {
  // pos is the 1-based position of the first strand touched
  WebObject obj = mixed(r, s);
  WebObject left(obj.begin(), obj.begin() + (pos - 1));
  WebObject right(obj.begin() + (pos - 1 + width), obj.end());
  return pad(d, left, right);
}

WebDiagram turn_back(int r, int s) {
  WebDiagram d = stack({diagram_of(gen_rcap(1)), diagram_of(gen_lcup(1))});
  return pad(d, ups(r - 1), downs(s - 1));
}

}  // namespace

std::map<std::string, WebDiagram> bc_generators(int r, int s) {
  if (r < 0 || s < 0 || r + s == 0) throw Error(ErrorKind::Math, "need r, s >= 0 with r + s >= 1");
  std::map<std::string, WebDiagram> g;
  const ObjItem u{Orient::Up, 1}, d{Orient::Down, 1};
  for (int i = 1; i < r; ++i) g["T" + std::to_string(i)] = at_mixed(r, s, i, 2, diagram_of(gen_cross(true, u, u)));
  for (int j = 1; j < s; ++j)
    g["T*" + std::to_string(j)] = at_mixed(r, s, r + j, 2, diagram_of(gen_cross(true, d, d)));
  for (int i = 1; i <= r; ++i) g["C" + std::to_string(i)] = at_mixed(r, s, i, 1, diagram_of(gen_dot(1)));
  for (int j = 1; j <= s; ++j) g["C*" + std::to_string(j)] = at_mixed(r, s, r + j, 1, diagram_of(gen_ddot(1)));
  if (r >= 1 && s >= 1) g["E"] = turn_back(r, s);
  return g;
}

namespace {

// Products in the algebra: x y is x after y.
LinearWeb mul(const LinearWeb& x, const LinearWeb& y) {
  LinearWeb out = zero_web(y.src, x.tgt, (x.parity + y.parity) % 2);
  for (const auto& [a, dx] : x.terms)
    for (const auto& [b, dy] : y.terms) out = out + lin(compose(dx, dy), a * b);
  return out;
}

LinearWeb mul(std::initializer_list<LinearWeb> xs) {
  auto it = xs.begin();
  LinearWeb r = *it;
  for (++it; it != xs.end(); ++it) r = mul(r, *it);
  return r;
}

}  // namespace

std::vector<RelationCase> bc_relation_cases(int r, int s) {
  const auto g = bc_generators(r, s);
  const WebObject obj = mixed(r, s);
  const ScalarQ qt = ScalarQ::qtilde();
  const LinearWeb one = lin(identity_diagram(obj));
  const LinearWeb zero = zero_web(obj, obj);
  auto G = [&](const std::string& name) { return lin(g.at(name)); };
  auto S = [](int i) { return std::to_string(i); };
  auto t = [&](int i) { return G("T" + S(i)); };
  auto ts = [&](int i) { return G("T*" + S(i)); };
  auto tinv = [&](int i) { return t(i) - qt * one; };
  auto c = [&](int i) { return G("C" + S(i)); };
  auto cs = [&](int i) { return G("C*" + S(i)); };
  const bool has_e = r >= 1 && s >= 1;

  std::vector<RelationCase> out;
  auto add = [&](const std::string& letter, const std::string& what, LinearWeb lhs, LinearWeb rhs) {
    out.push_back({letter + ": " + what, std::move(lhs), std::move(rhs)});
  };
  // (a)-(c): Hecke relations on each side of the wall
  for (int i = 1; i < r; ++i) add("a", "t" + S(i) + "^2", mul(t(i), t(i)), qt * t(i) + one);
  for (int i = 1; i < s; ++i) add("a", "t*" + S(i) + "^2", mul(ts(i), ts(i)), qt * ts(i) + one);
  for (int i = 1; i + 1 < r; ++i)
    add("b", "braid t" + S(i), mul({t(i), t(i + 1), t(i)}), mul({t(i + 1), t(i), t(i + 1)}));
  for (int i = 1; i + 1 < s; ++i)
    add("b", "braid t*" + S(i), mul({ts(i), ts(i + 1), ts(i)}), mul({ts(i + 1), ts(i), ts(i + 1)}));
  for (int i = 1; i < r; ++i)
    for (int j = i + 2; j < r; ++j) add("c", "t" + S(i) + " t" + S(j), mul(t(i), t(j)), mul(t(j), t(i)));
  for (int i = 1; i < s; ++i)
    for (int j = i + 2; j < s; ++j) add("c", "t*" + S(i) + " t*" + S(j), mul(ts(i), ts(j)), mul(ts(j), ts(i)));
  if (has_e) {
    const LinearWeb e = G("E");
    if (r >= 2) add("d", "e t" + S(r - 1) + " e", mul({e, t(r - 1), e}), e);
    if (s >= 2) add("d", "e t*1 e", mul({e, ts(1), e}), e);
    for (int j = 1; j < r - 1; ++j) add("e", "e t" + S(j), mul(e, t(j)), mul(t(j), e));
    for (int j = 2; j < s; ++j) add("e", "e t*" + S(j), mul(e, ts(j)), mul(ts(j), e));
    add("f", "e^2", mul(e, e), zero);
    if (r >= 2 && s >= 2) {
      const int m = r - 1;
      // e commutes with x = t^-1 t* e t* t^-1
      const LinearWeb x = mul({tinv(m), ts(1), e, ts(1), tinv(m)});
      add("g", "e x = x e, x = t^-1 t* e t* t^-1", mul(e, x), mul(x, e));
    }
  }
  // (h)-(j): Clifford relations
  for (int i = 1; i <= r; ++i) add("h", "c" + S(i) + "^2", mul(c(i), c(i)), one);
  for (int i = 1; i <= s; ++i) add("h", "c*" + S(i) + "^2", mul(cs(i), cs(i)), ScalarQ(-1) * one);
  for (int i = 1; i <= r; ++i)
    for (int j = i + 1; j <= r; ++j) add("i", "c" + S(i) + " c" + S(j), mul(c(i), c(j)), ScalarQ(-1) * mul(c(j), c(i)));
  for (int i = 1; i <= s; ++i)
    for (int j = i + 1; j <= s; ++j)
      add("i", "c*" + S(i) + " c*" + S(j), mul(cs(i), cs(j)), ScalarQ(-1) * mul(cs(j), cs(i)));
  for (int i = 1; i <= r; ++i)
    for (int j = 1; j <= s; ++j)
      add("j", "c" + S(i) + " c*" + S(j), mul(c(i), cs(j)), ScalarQ(-1) * mul(cs(j), c(i)));
  // (k)-(m): Hecke-Clifford mixing
  for (int i = 1; i < r; ++i)
    add("k", "c" + S(i) + " t" + S(i), mul(c(i), t(i)), mul(t(i), c(i + 1)) + qt * (c(i) - c(i + 1)));
  for (int i = 1; i < s; ++i)
    add("k", "c*" + S(i) + " t*" + S(i), mul(cs(i), ts(i)), mul(ts(i), cs(i + 1)) + qt * (cs(i) - cs(i + 1)));
  for (int i = 1; i < r; ++i)
    for (int j = 1; j <= r; ++j)
      if (j != i && j != i + 1) add("l", "t" + S(i) + " c" + S(j), mul(t(i), c(j)), mul(c(j), t(i)));
  for (int i = 1; i < s; ++i)
    for (int j = 1; j <= s; ++j)
      if (j != i && j != i + 1) add("l", "t*" + S(i) + " c*" + S(j), mul(ts(i), cs(j)), mul(cs(j), ts(i)));
  for (int i = 1; i < r; ++i)
    for (int j = 1; j <= s; ++j) add("m", "t" + S(i) + " c*" + S(j), mul(t(i), cs(j)), mul(cs(j), t(i)));
  for (int i = 1; i < s; ++i)
    for (int j = 1; j <= r; ++j) add("m", "t*" + S(i) + " c" + S(j), mul(ts(i), c(j)), mul(c(j), ts(i)));
  // (n)-(p): Clifford generators against the turn-back
  if (has_e) {
    const LinearWeb e = G("E");
    add("n", "c" + S(r) + " e", mul(c(r), e), mul(cs(1), e));
    add("n", "e c" + S(r), mul(e, c(r)), mul(e, cs(1)));
    for (int i = 1; i < r; ++i) add("o", "c" + S(i) + " e", mul(c(i), e), mul(e, c(i)));
    for (int i = 2; i <= s; ++i) add("o", "c*" + S(i) + " e", mul(cs(i), e), mul(e, cs(i)));
    add("p", "e c" + S(r) + " e", mul({e, c(r), e}), zero_web(obj, obj, 1));
  }
  return out;
}

std::vector<BCResult> verify_bc_relations(int r, int s, const EvalContext& ctx, const std::optional<VerifyOptions>& opt) {
  VerifyOptions o;
  if (opt) {
    o = *opt;
  } else if (object_dim(mixed(r, s), ctx.n) <= 256) {
    o.symbolic = true;
  } else {
    o.symbolic = false;
    o.screens = {GaussRat::frac(7, 5), GaussRat::frac(-2, 3)};
  }
  std::vector<BCResult> out;
  for (const auto& c : bc_relation_cases(r, s)) {
    RelationResult rr = check_case("bc", c, ctx, o);
    BCResult b;
    b.relation = c.label.substr(0, c.label.find(':'));
    b.label = c.label;
    b.pass = rr.pass;
    b.mode = rr.mode;
    b.witness = rr.witness;
    b.error = rr.error;
    out.push_back(std::move(b));
  }
  return out;
}

// ---- dimensions ----

int commutant_dimension(const std::vector<ModuleFactor>& factors, int n, const GaussRat& q0) {
  std::vector<SuperMap> gens;
  std::vector<int> gpar;
  for (const auto& g : generating_set(Side::N, n)) {
    gens.push_back(specialize(tensor_action(g, factors, n), q0));
    gpar.push_back(g.parity());
  }
  if (gens.empty()) return 0;
  const SuperSpace& w = gens[0].source();
  const int d = w.dim();
  int total = 0;
  for (int p = 0; p < 2; ++p) {
    // unknowns x_{ab} with parity(a) + parity(b) = p
    std::map<std::pair<int, int>, int> var;
    for (int a = 0; a < d; ++a)
      for (int b = 0; b < d; ++b)
        if ((w.parity(a) + w.parity(b)) % 2 == p) var.emplace(std::make_pair(a, b), static_cast<int>(var.size()));
    const std::size_t nv = var.size();
    std::vector<std::vector<GaussRat>> rows;
    for (std::size_t gi = 0; gi < gens.size(); ++gi) {
      const SuperMap& g = gens[gi];
      const long sign = (p & gpar[gi]) ? -1 : 1;
      // dense copy of g
      std::vector<std::vector<GaussRat>> m(static_cast<std::size_t>(d), std::vector<GaussRat>(static_cast<std::size_t>(d)));
      for (int j = 0; j < d; ++j)
        for (const auto& e : g.col(j)) m[static_cast<std::size_t>(e.row)][static_cast<std::size_t>(j)] = e.val.num().coef[0];
      // (X g - sign g X)_{ij} = sum_b x_ib g_bj - sign sum_a g_ia x_aj
      for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) {
          std::vector<GaussRat> row(nv);
          bool any = false;
          for (int b = 0; b < d; ++b) {
            const GaussRat& v = m[static_cast<std::size_t>(b)][static_cast<std::size_t>(j)];
            if (v.is_zero()) continue;
            auto it = var.find({i, b});
            if (it == var.end()) continue;
            row[static_cast<std::size_t>(it->second)] += v;
            any = true;
          }
          for (int a = 0; a < d; ++a) {
            const GaussRat& v = m[static_cast<std::size_t>(i)][static_cast<std::size_t>(a)];
            if (v.is_zero()) continue;
            auto it = var.find({a, j});
            if (it == var.end()) continue;
            row[static_cast<std::size_t>(it->second)] -= v * GaussRat(sign);
            any = true;
          }
          if (any) rows.push_back(std::move(row));
        }
    }
    total += static_cast<int>(nv) - gauss_rank(rows);
  }
  return total;
}

int bc_span_dimension(int r, int s, int n, const GaussRat& q0) {
  EvalContext ctx = EvalContext(n).specialized(q0);
  std::vector<SuperMap> gens;
  for (const auto& [name, d] : bc_generators(r, s)) gens.push_back(eval_diagram(d, ctx));
  // breadth-first closure of the spanned algebra, keeping a basis per parity
  SuperSpace w = eval_object(mixed(r, s), ctx);
  std::vector<SuperMap> basis[2];
  std::vector<SuperMap> frontier{identity(w)};
  basis[0].push_back(identity(w));
  while (!frontier.empty()) {
    std::vector<SuperMap> next;
    for (const auto& f : frontier)
      for (const auto& g : gens) {
        SuperMap h = compose(g, f);
        auto& b = basis[h.parity()];
        const int before = static_cast<int>(b.size());
        b.push_back(h);
        if (span_rank_at(b, q0) == before) {
          b.pop_back();
        } else {
          next.push_back(h);
        }
      }
    frontier = std::move(next);
  }
  return static_cast<int>(basis[0].size() + basis[1].size());
}

}  // namespace qweb

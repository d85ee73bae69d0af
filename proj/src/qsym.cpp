#include "qweb/qsym.hpp"

#include <algorithm>
#include <climits>
#include <memory>

#include "qweb/error.hpp"

namespace qweb {

void combo_add(Combo& c, const Word& w, const ScalarQ& v) {
  if (v.is_zero()) return;
  auto it = c.find(w);
  if (it == c.end()) {
    c.emplace(w, v);
  } else {
    it->second += v;
    if (it->second.is_zero()) c.erase(it);
  }
}

Combo combo_scaled(const Combo& c, const ScalarQ& v) {
  Combo r;
  if (v.is_zero()) return r;
  for (const auto& [w, x] : c) r.emplace(w, x * v);
  return r;
}

std::vector<int> index_set(int n) {
  std::vector<int> out;
  for (int b = -n; b <= n; ++b)
    if (b != 0) out.push_back(b);
  return out;
}

int phi(int a, int b) {
  if (a != b && a != -b) return 0;
  return index_parity(b) ? -1 : 1;
}

// ---- RewriteSystem ----

namespace {

// Reduced row echelon form over Q(i)(q); returns pivot column per row.
std::vector<int> rref(std::vector<std::vector<ScalarQ>>& rows, std::size_t ncol) {
  std::vector<int> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < ncol && r < rows.size(); ++c) {
    std::size_t piv = rows.size();
    for (std::size_t k = r; k < rows.size(); ++k) {
      if (rows[k][c].is_zero()) continue;
      if (piv == rows.size() || rows[k][c].terms() < rows[piv][c].terms()) piv = k;
    }
    if (piv == rows.size()) continue;
    std::swap(rows[r], rows[piv]);
    ScalarQ inv = rows[r][c].inverse();
    for (auto& v : rows[r])
      if (!v.is_zero()) v *= inv;
    for (std::size_t k = 0; k < rows.size(); ++k) {
      if (k == r || rows[k][c].is_zero()) continue;
      ScalarQ m = rows[k][c];
      for (std::size_t j = 0; j < ncol; ++j)
        if (!rows[r][j].is_zero()) rows[k][j] -= m * rows[r][j];
    }
    pivots.push_back(static_cast<int>(c));
    ++r;
  }
  rows.resize(r);
  return pivots;
}

}  // namespace

RewriteSystem::RewriteSystem(std::vector<int> parity, const std::vector<Combo>& relations)
    : parity_(std::move(parity)) {
  const int n = generators();
  // Column order: non-normal pairs first so they become pivots.
  std::vector<std::pair<int, int>> cols;
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      if (bad_pair(x, y)) cols.emplace_back(x, y);
  const std::size_t nbad = cols.size();
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      if (!bad_pair(x, y)) cols.emplace_back(x, y);
  std::map<std::pair<int, int>, std::size_t> colix;
  for (std::size_t k = 0; k < cols.size(); ++k) colix[cols[k]] = k;

  std::vector<std::vector<ScalarQ>> rows;
  for (const auto& rel : relations) {
    std::vector<ScalarQ> row(cols.size());
    for (const auto& [w, v] : rel) {
      if (w.size() != 2) throw Error(ErrorKind::Math, "relations must be quadratic");
      row[colix.at({w[0], w[1]})] += v;
    }
    rows.push_back(std::move(row));
  }
  std::vector<int> piv = rref(rows, cols.size());
  std::size_t found = 0;
  for (std::size_t r = 0; r < rows.size(); ++r) {
    auto c = static_cast<std::size_t>(piv[r]);
    if (c >= nbad) throw Error(ErrorKind::Math, "relations impose a condition on normal words");
    for (std::size_t j = 0; j < nbad; ++j)
      if (j != c && !rows[r][j].is_zero()) throw Error(ErrorKind::Math, "rewrite table is not solvable");
    Combo rhs;
    for (std::size_t j = nbad; j < cols.size(); ++j)
      if (!rows[r][j].is_zero()) rhs[{cols[j].first, cols[j].second}] = -rows[r][j];
    rules_[cols[c]] = std::move(rhs);
    ++found;
  }
  if (found != nbad) throw Error(ErrorKind::Math, "rewrite table is incomplete");
}

bool RewriteSystem::is_normal(const Word& w) const {
  for (std::size_t i = 0; i + 1 < w.size(); ++i)
    if (bad_pair(w[i], w[i + 1])) return false;
  return true;
}

const Combo& RewriteSystem::rule(int x, int y) const { return rules_.at({x, y}); }

Combo RewriteSystem::normalize(const Word& w, long fuel) const {
  if (fuel < 0) {
    // 10 * d * N^d, saturating
    long bound = 10L * static_cast<long>(std::max<std::size_t>(w.size(), 1));
    for (std::size_t k = 0; k < w.size() && bound < LONG_MAX / 64; ++k) bound *= generators();
    fuel = bound;
  }
  std::lock_guard<std::recursive_mutex> lock(mu_);
  return nf(w, fuel);
}

Combo RewriteSystem::nf(const Word& w, long& fuel) const {
  auto it = memo_.find(w);
  if (it != memo_.end()) return it->second;
  std::size_t i = 0;
  while (i + 1 < w.size() && !bad_pair(w[i], w[i + 1])) ++i;
  Combo out;
  if (i + 1 >= w.size()) {
    out[w] = ScalarQ(1);
  } else {
    if (--fuel < 0) throw Error(ErrorKind::Fuel, "fuel exhausted");
    for (const auto& [pair, c] : rules_.at({w[i], w[i + 1]})) {
      Word v = w;
      v[i] = pair[0];
      v[i + 1] = pair[1];
      for (const auto& [u, d] : nf(v, fuel)) combo_add(out, u, c * d);
    }
  }
  memo_.emplace(w, out);
  return out;
}

// ---- S_q(V_n) ----

int SymMonomial::exponent(int b) const {
  return static_cast<int>(std::count(idx.begin(), idx.end(), b));
}

int SymMonomial::parity() const {
  int p = 0;
  for (int b : idx) p ^= index_parity(b);
  return p;
}

std::vector<int> sym_factor(const SymMonomial& m, bool dual) {
  std::vector<int> f;
  f.reserve(m.idx.size() + 1);
  f.push_back(dual ? 1 : 0);
  f.insert(f.end(), m.idx.begin(), m.idx.end());
  return f;
}

SuperSpace vn_space(int n) { return sym_space(1, n); }

SuperSpace sym_space(int d, int n, bool dual) {
  static std::mutex mu;
  static std::map<std::tuple<int, int, bool>, SuperSpace> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto key = std::make_tuple(d, n, dual);
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;
  std::vector<Label> labels;
  std::vector<std::uint8_t> par;
  for (const auto& m : sym_basis(d, n)) {
    labels.emplace_back(sym_factor(m, dual));
    par.push_back(static_cast<std::uint8_t>(m.parity()));
  }
  SuperSpace s(std::move(labels), std::move(par));
  cache.emplace(key, s);
  return s;
}

SuperMap t_matrix(int n) {
  SuperSpace v = vn_space(n);
  SuperSpace vv = tensor_space(v, v);
  SuperMap t(vv, vv, 0);
  const ScalarQ qt = ScalarQ::qtilde();
  auto ix = [&](int a, int b) {
    Label l(std::vector<int>{0, a});
    l.push_factor({0, b});
    return vv.index_of(l);
  };
  for (int a : index_set(n))
    for (int b : index_set(n)) {
      int col = ix(a, b);
      int sign = (index_parity(a) & index_parity(b)) ? -1 : 1;
      t.add(ix(b, a), col, ScalarQ::q(phi(a, b)) * ScalarQ(sign));
      if (a < b) t.add(ix(a, b), col, qt);
      if (-a < b) t.add(ix(-a, -b), col, index_parity(b) ? -qt : qt);
    }
  return t;
}

const RewriteSystem& sym_system(int n) {
  static std::mutex mu;
  static std::map<int, std::unique_ptr<RewriteSystem>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(n);
  if (it != cache.end()) return *it->second;
  // generator id = position of b in I_{n|n}
  std::vector<int> idx = index_set(n);
  auto gid = [&](int b) { return b < 0 ? b + n : b + n - 1; };
  std::vector<int> par;
  for (int b : idx) par.push_back(index_parity(b));
  // q v_a v_b = q^{phi(a,b)} (-1)^{p(a)p(b)} v_b v_a + [a<b] qt v_a v_b
  //             + [-a<b] qt (-1)^{p(b)} v_{-a} v_{-b}
  const ScalarQ qt = ScalarQ::qtilde();
  std::vector<Combo> rels;
  for (int a : idx)
    for (int b : idx) {
      Combo r;
      combo_add(r, {gid(a), gid(b)}, ScalarQ::q(1));
      int sign = (index_parity(a) & index_parity(b)) ? -1 : 1;
      combo_add(r, {gid(b), gid(a)}, -(ScalarQ::q(phi(a, b)) * ScalarQ(sign)));
      if (a < b) combo_add(r, {gid(a), gid(b)}, -qt);
      if (-a < b) combo_add(r, {gid(-a), gid(-b)}, index_parity(b) ? qt : -qt);
      rels.push_back(std::move(r));
    }
  auto sys = std::make_unique<RewriteSystem>(par, rels);
  const RewriteSystem& ref = *sys;
  cache.emplace(n, std::move(sys));
  return ref;
}

Combo sym_normalize(const std::vector<int>& word, int n, long fuel) {
  const RewriteSystem& sys = sym_system(n);
  Word w;
  for (int b : word) {
    if (b == 0 || b < -n || b > n) throw Error(ErrorKind::Math, "index out of range");
    w.push_back(b < 0 ? b + n : b + n - 1);
  }
  Combo out;
  for (const auto& [u, c] : sys.normalize(w, fuel)) {
    Word v;
    for (int g : u) v.push_back(g < n ? g - n : g - n + 1);
    out.emplace(std::move(v), c);
  }
  return out;
}

namespace {

void enum_sym(int d, const std::vector<int>& idx, std::size_t from, std::vector<int>& cur,
              std::vector<SymMonomial>& out) {
  if (static_cast<int>(cur.size()) == d) {
    out.push_back(SymMonomial{cur});
    return;
  }
  for (std::size_t k = from; k < idx.size(); ++k) {
    int b = idx[k];
    // odd indices at most once
    std::size_t next = index_parity(b) ? k + 1 : k;
    cur.push_back(b);
    enum_sym(d, idx, next, cur, out);
    cur.pop_back();
  }
}

long choose(long n, long k) {
  if (k < 0 || n < 0 || k > n) return 0;
  long r = 1;
  for (long j = 1; j <= k; ++j) r = r * (n - k + j) / j;
  return r;
}

}  // namespace

std::vector<SymMonomial> sym_basis(int d, int n) {
  std::vector<SymMonomial> out;
  std::vector<int> cur;
  enum_sym(d, index_set(n), 0, cur, out);
  return out;
}

long sym_dim(int d, int n) {
  if (d == 0) return 1;
  long total = 0;
  for (long k = 0; k <= std::min<long>(n, d); ++k) total += choose(n, k) * choose(n + d - k - 1, d - k);
  return total;
}

}  // namespace qweb

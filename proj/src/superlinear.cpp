#include "qweb/superlinear.hpp"

#include <algorithm>
#include <mutex>

#include "qweb/error.hpp"

namespace qweb {

// ---- Label ----

void Label::push_factor(const std::vector<int>& factor) {
  enc_.push_back(static_cast<int>(factor.size()));
  enc_.insert(enc_.end(), factor.begin(), factor.end());
}

std::vector<std::vector<int>> Label::factors() const {
  std::vector<std::vector<int>> out;
  std::size_t k = 0;
  while (k < enc_.size()) {
    auto len = static_cast<std::size_t>(enc_[k]);
    out.emplace_back(enc_.begin() + static_cast<long>(k + 1),
                     enc_.begin() + static_cast<long>(k + 1 + len));
    k += len + 1;
  }
  return out;
}

std::size_t Label::factor_count() const {
  std::size_t n = 0;
  for (std::size_t k = 0; k < enc_.size(); k += static_cast<std::size_t>(enc_[k]) + 1) ++n;
  return n;
}

std::string Label::to_string() const {
  std::string s;
  for (const auto& f : factors()) {
    if (!s.empty()) s += "x";
    s += "(";
    for (std::size_t i = 0; i < f.size(); ++i) {
      if (i) s += ",";
      s += std::to_string(f[i]);
    }
    s += ")";
  }
  return s.empty() ? "()" : s;
}

Label operator*(const Label& a, const Label& b) {
  Label r = a;
  r.enc_.insert(r.enc_.end(), b.enc_.begin(), b.enc_.end());
  return r;
}

// ---- SuperSpace ----

namespace {
std::mutex index_mutex;
}

SuperSpace::SuperSpace() : d_(std::make_shared<Data>()) {}

SuperSpace::SuperSpace(std::vector<Label> labels, std::vector<std::uint8_t> parity) {
  if (labels.size() != parity.size()) throw Error(ErrorKind::Math, "parity must be total on basis");
  auto d = std::make_shared<Data>();
  d->labels = std::move(labels);
  d->parity = std::move(parity);
  d_ = std::move(d);
}

SuperSpace SuperSpace::unit() {
  static const SuperSpace u({Label()}, {0});
  return u;
}

int SuperSpace::index_of(const Label& l) const {
  std::lock_guard<std::mutex> lock(index_mutex);
  if (!d_->indexed) {
    for (std::size_t i = 0; i < d_->labels.size(); ++i) d_->index.emplace(d_->labels[i], static_cast<int>(i));
    d_->indexed = true;
  }
  auto it = d_->index.find(l);
  return it == d_->index.end() ? -1 : it->second;
}

bool operator==(const SuperSpace& a, const SuperSpace& b) {
  if (a.d_ == b.d_) return true;
  return a.d_->parity == b.d_->parity && a.d_->labels == b.d_->labels;
}

SuperSpace tensor_space(const SuperSpace& a, const SuperSpace& b) {
  if (a.dim() == 1 && a.label(0) == Label() && a.parity(0) == 0) return b;
  if (b.dim() == 1 && b.label(0) == Label() && b.parity(0) == 0) return a;
  std::vector<Label> labels;
  std::vector<std::uint8_t> parity;
  labels.reserve(static_cast<std::size_t>(a.dim() * b.dim()));
  parity.reserve(labels.capacity());
  for (int i = 0; i < a.dim(); ++i)
    for (int j = 0; j < b.dim(); ++j) {
      labels.push_back(a.label(i) * b.label(j));
      parity.push_back(static_cast<std::uint8_t>((a.parity(i) + b.parity(j)) & 1));
    }
  return SuperSpace(std::move(labels), std::move(parity));
}

// ---- SuperMap ----

std::string Witness::to_string() const {
  return "entry [" + row + ", " + col + "]: " + lhs.pretty() + " != " + rhs.pretty();
}

SuperMap::SuperMap(SuperSpace source, SuperSpace target, int parity)
    : src_(std::move(source)), tgt_(std::move(target)), parity_(parity & 1) {
  cols_.resize(static_cast<std::size_t>(src_.dim()));
}

std::size_t SuperMap::nnz() const {
  std::size_t n = 0;
  for (const auto& c : cols_) n += c.size();
  return n;
}

ScalarQ SuperMap::entry(int row, int col) const {
  const auto& c = cols_[static_cast<std::size_t>(col)];
  auto it = std::lower_bound(c.begin(), c.end(), row, [](const Entry& e, int r) { return e.row < r; });
  if (it != c.end() && it->row == row) return it->val;
  return ScalarQ();
}

void SuperMap::add(int row, int col, const ScalarQ& v) {
  if (v.is_zero()) return;
  auto& c = cols_[static_cast<std::size_t>(col)];
  auto it = std::lower_bound(c.begin(), c.end(), row, [](const Entry& e, int r) { return e.row < r; });
  if (it != c.end() && it->row == row) {
    it->val += v;
    if (it->val.is_zero()) c.erase(it);
  } else {
    c.insert(it, Entry{row, v});
  }
}

SuperMap SuperMap::scaled(const ScalarQ& c) const {
  SuperMap r(src_, tgt_, parity_);
  if (c.is_zero()) return r;
  for (std::size_t j = 0; j < cols_.size(); ++j) {
    auto& out = r.cols_[j];
    out.reserve(cols_[j].size());
    for (const auto& e : cols_[j]) out.push_back(Entry{e.row, e.val * c});
  }
  return r;
}

namespace {

void check_same_type(const SuperMap& a, const SuperMap& b) {
  if (a.source() != b.source() || a.target() != b.target()) throw Error(ErrorKind::Mismatch, "object mismatch");
}

std::vector<Entry> merge_cols(const std::vector<Entry>& a, const std::vector<Entry>& b, bool negate) {
  std::vector<Entry> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].row < b[j].row)) {
      out.push_back(a[i++]);
    } else if (i == a.size() || b[j].row < a[i].row) {
      out.push_back(Entry{b[j].row, negate ? -b[j].val : b[j].val});
      ++j;
    } else {
      ScalarQ v = negate ? a[i].val - b[j].val : a[i].val + b[j].val;
      if (!v.is_zero()) out.push_back(Entry{a[i].row, std::move(v)});
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace

SuperMap& SuperMap::operator+=(const SuperMap& o) {
  check_same_type(*this, o);
  if (o.is_zero()) return *this;
  if (is_zero()) parity_ = o.parity_;
  if (parity_ != o.parity_) throw Error(ErrorKind::Math, "parity mismatch in sum");
  for (std::size_t j = 0; j < cols_.size(); ++j) cols_[j] = merge_cols(cols_[j], o.cols_[j], false);
  return *this;
}

SuperMap& SuperMap::operator-=(const SuperMap& o) {
  check_same_type(*this, o);
  if (o.is_zero()) return *this;
  if (is_zero()) parity_ = o.parity_;
  if (parity_ != o.parity_) throw Error(ErrorKind::Math, "parity mismatch in sum");
  for (std::size_t j = 0; j < cols_.size(); ++j) cols_[j] = merge_cols(cols_[j], o.cols_[j], true);
  return *this;
}

bool operator==(const SuperMap& a, const SuperMap& b) {
  if (a.source() != b.source() || a.target() != b.target()) return false;
  if (!a.is_zero() && !b.is_zero() && a.parity() != b.parity()) return false;
  for (int j = 0; j < a.source().dim(); ++j) {
    const auto& x = a.col(j);
    const auto& y = b.col(j);
    if (x.size() != y.size()) return false;
    for (std::size_t k = 0; k < x.size(); ++k)
      if (x[k].row != y[k].row || x[k].val != y[k].val) return false;
  }
  return true;
}

bool SuperMap::parity_ok() const {
  for (std::size_t j = 0; j < cols_.size(); ++j)
    for (const auto& e : cols_[j])
      if (((src_.parity(static_cast<int>(j)) + parity_ + tgt_.parity(e.row)) & 1) != 0) return false;
  return true;
}

nlohmann::json SuperMap::to_json() const {
  nlohmann::json a = nlohmann::json::array();
  for (std::size_t j = 0; j < cols_.size(); ++j)
    for (const auto& e : cols_[j])
      a.push_back({tgt_.label(e.row).to_string(), src_.label(static_cast<int>(j)).to_string(), e.val.to_json()});
  return a;
}

SuperMap identity(const SuperSpace& a) {
  SuperMap r(a, a, 0);
  for (int j = 0; j < a.dim(); ++j) r.set_col(j, {Entry{j, ScalarQ(1)}});
  return r;
}

SuperMap tensor_map(const SuperMap& f, const SuperMap& g) {
  SuperSpace src = tensor_space(f.source(), g.source());
  SuperSpace tgt = tensor_space(f.target(), g.target());
  SuperMap r(src, tgt, f.parity() + g.parity());
  const int db = g.source().dim();
  const int dbt = g.target().dim();
  for (int i = 0; i < f.source().dim(); ++i) {
    const auto& fc = f.col(i);
    const bool neg = (g.parity() & f.source().parity(i)) != 0;
    for (int j = 0; j < db; ++j) {
      const auto& gc = g.col(j);
      if (fc.empty() || gc.empty()) continue;
      std::vector<Entry> out;
      out.reserve(fc.size() * gc.size());
      for (const auto& ef : fc)
        for (const auto& eg : gc) {
          ScalarQ v = ef.val.is_one() ? eg.val : (eg.val.is_one() ? ef.val : ef.val * eg.val);
          if (neg) v = -v;
          out.push_back(Entry{ef.row * dbt + eg.row, std::move(v)});
        }
      r.set_col(i * db + j, std::move(out));
    }
  }
  return r;
}

SuperMap compose(const SuperMap& f, const SuperMap& g) {
  if (f.source() != g.target()) throw Error(ErrorKind::Mismatch, "object mismatch");
  SuperMap r(g.source(), f.target(), f.parity() + g.parity());
  const int dt = f.target().dim();
  std::vector<ScalarQ> acc(static_cast<std::size_t>(dt));
  std::vector<char> hit(static_cast<std::size_t>(dt), 0);
  std::vector<int> touched;
  for (int j = 0; j < g.source().dim(); ++j) {
    touched.clear();
    for (const auto& eg : g.col(j)) {
      for (const auto& ef : f.col(eg.row)) {
        auto idx = static_cast<std::size_t>(ef.row);
        if (!hit[idx]) {
          hit[idx] = 1;
          touched.push_back(ef.row);
        }
        if (eg.val.is_one()) acc[idx] += ef.val;
        else if (ef.val.is_one()) acc[idx] += eg.val;
        else acc[idx].add_product(ef.val, eg.val);
      }
    }
    std::sort(touched.begin(), touched.end());
    std::vector<Entry> out;
    for (int row : touched) {
      auto idx = static_cast<std::size_t>(row);
      if (!acc[idx].is_zero()) out.push_back(Entry{row, std::move(acc[idx])});
      acc[idx] = ScalarQ();
      hit[idx] = 0;
    }
    r.set_col(j, std::move(out));
  }
  return r;
}

SuperMap flip(const SuperSpace& a, const SuperSpace& b) {
  SuperMap r(tensor_space(a, b), tensor_space(b, a), 0);
  for (int i = 0; i < a.dim(); ++i)
    for (int j = 0; j < b.dim(); ++j) {
      int s = (a.parity(i) & b.parity(j)) ? -1 : 1;
      r.set_col(i * b.dim() + j, {Entry{j * a.dim() + i, ScalarQ(s)}});
    }
  return r;
}

ScalarQ scalar_of(const SuperMap& f) {
  if (f.source() != f.target()) throw Error(ErrorKind::Math, "not scalar");
  if (f.is_zero()) return ScalarQ();
  ScalarQ c;
  for (int j = 0; j < f.source().dim(); ++j) {
    const auto& col = f.col(j);
    if (col.size() != 1 || col[0].row != j) throw Error(ErrorKind::Math, "not scalar");
    if (j == 0) c = col[0].val;
    else if (col[0].val != c) throw Error(ErrorKind::Math, "not scalar");
  }
  return c;
}

std::optional<Witness> first_difference(const SuperMap& a, const SuperMap& b) {
  if (a.source() != b.source() || a.target() != b.target()) {
    return Witness{"object mismatch", "", ScalarQ(), ScalarQ()};
  }
  for (int j = 0; j < a.source().dim(); ++j) {
    const auto& x = a.col(j);
    const auto& y = b.col(j);
    std::size_t p = 0, k = 0;
    while (p < x.size() || k < y.size()) {
      int r;
      ScalarQ u, v;
      if (k == y.size() || (p < x.size() && x[p].row < y[k].row)) {
        r = x[p].row;
        u = x[p++].val;
      } else if (p == x.size() || y[k].row < x[p].row) {
        r = y[k].row;
        v = y[k++].val;
      } else {
        r = x[p].row;
        u = x[p++].val;
        v = y[k++].val;
      }
      if (u != v) return Witness{a.target().label(r).to_string(), a.source().label(j).to_string(), u, v};
    }
  }
  if (!a.is_zero() && !b.is_zero() && a.parity() != b.parity())
    return Witness{"parity", "", ScalarQ(a.parity()), ScalarQ(b.parity())};
  return std::nullopt;
}

SuperMap specialize(const SuperMap& f, const GaussRat& q0) {
  SuperMap r(f.source(), f.target(), f.parity());
  for (int j = 0; j < f.source().dim(); ++j) {
    std::vector<Entry> out;
    for (const auto& e : f.col(j)) {
      GaussRat v = specialize(e.val, q0);
      if (!v.is_zero()) out.push_back(Entry{e.row, ScalarQ(v)});
    }
    r.set_col(j, std::move(out));
  }
  return r;
}

int gauss_rank(std::vector<std::vector<GaussRat>>& rows) {
  if (rows.empty()) return 0;
  const std::size_t ncol = rows[0].size();
  std::size_t rank = 0;
  for (std::size_t c = 0; c < ncol && rank < rows.size(); ++c) {
    std::size_t piv = rank;
    while (piv < rows.size() && rows[piv][c].is_zero()) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[rank], rows[piv]);
    GaussRat inv = rows[rank][c].inverse();
    for (std::size_t k = c; k < ncol; ++k)
      if (!rows[rank][k].is_zero()) rows[rank][k] *= inv;
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == rank || rows[r][c].is_zero()) continue;
      GaussRat m = rows[r][c];
      for (std::size_t k = c; k < ncol; ++k)
        if (!rows[rank][k].is_zero()) rows[r][k] -= m * rows[rank][k];
    }
    ++rank;
  }
  return static_cast<int>(rank);
}

int rank_at(const SuperMap& f, const GaussRat& q0) {
  SuperMap s = specialize(f, q0);
  std::vector<std::vector<GaussRat>> rows(static_cast<std::size_t>(s.source().dim()),
                                          std::vector<GaussRat>(static_cast<std::size_t>(s.target().dim())));
  for (int j = 0; j < s.source().dim(); ++j)
    for (const auto& e : s.col(j)) rows[static_cast<std::size_t>(j)][static_cast<std::size_t>(e.row)] = e.val.num().coef[0];
  return gauss_rank(rows);
}

int span_rank_at(const std::vector<SuperMap>& maps, const GaussRat& q0) {
  if (maps.empty()) return 0;
  const int m = maps[0].target().dim();
  const int n = maps[0].source().dim();
  std::vector<std::vector<GaussRat>> rows;
  for (const auto& f : maps) {
    check_same_type(maps[0], f);
    std::vector<GaussRat> v(static_cast<std::size_t>(m * n));
    for (int j = 0; j < n; ++j)
      for (const auto& e : f.col(j)) v[static_cast<std::size_t>(j * m + e.row)] = specialize(e.val, q0);
    rows.push_back(std::move(v));
  }
  return gauss_rank(rows);
}

SuperMap invert(const SuperMap& f) {
  const int n = f.source().dim();
  if (f.target().dim() != n) throw Error(ErrorKind::Math, "singular");
  // rows of [A | I]
  std::vector<std::vector<ScalarQ>> a(static_cast<std::size_t>(n), std::vector<ScalarQ>(static_cast<std::size_t>(2 * n)));
  for (int j = 0; j < n; ++j)
    for (const auto& e : f.col(j)) a[static_cast<std::size_t>(e.row)][static_cast<std::size_t>(j)] = e.val;
  for (int i = 0; i < n; ++i) a[static_cast<std::size_t>(i)][static_cast<std::size_t>(n + i)] = ScalarQ(1);
  for (int c = 0; c < n; ++c) {
    int piv = -1;
    std::size_t best = 0;
    for (int r = c; r < n; ++r) {
      const ScalarQ& v = a[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)];
      if (v.is_zero()) continue;
      if (piv < 0 || v.terms() < best) {
        piv = r;
        best = v.terms();
      }
    }
    if (piv < 0) throw Error(ErrorKind::Math, "singular");
    std::swap(a[static_cast<std::size_t>(c)], a[static_cast<std::size_t>(piv)]);
    auto& prow = a[static_cast<std::size_t>(c)];
    ScalarQ inv = prow[static_cast<std::size_t>(c)].inverse();
    for (auto& v : prow)
      if (!v.is_zero()) v *= inv;
    for (int r = 0; r < n; ++r) {
      if (r == c) continue;
      auto& row = a[static_cast<std::size_t>(r)];
      if (row[static_cast<std::size_t>(c)].is_zero()) continue;
      ScalarQ m = row[static_cast<std::size_t>(c)];
      for (std::size_t k = 0; k < row.size(); ++k)
        if (!prow[k].is_zero()) row[k] -= m * prow[k];
    }
  }
  SuperMap r(f.target(), f.source(), f.parity());
  for (int j = 0; j < n; ++j) {
    std::vector<Entry> col;
    for (int i = 0; i < n; ++i) {
      const ScalarQ& v = a[static_cast<std::size_t>(i)][static_cast<std::size_t>(n + j)];
      if (!v.is_zero()) col.push_back(Entry{i, v});
    }
    r.set_col(j, std::move(col));
  }
  return r;
}

}  // namespace qweb

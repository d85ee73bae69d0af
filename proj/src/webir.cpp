#include "qweb/webir.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>

#include "qweb/error.hpp"

namespace qweb {

// ---- objects ----

WebObject normalize_object(const WebObject& w) {
  WebObject out;
  for (const auto& it : w) {
    if (it.k < 0) throw Error(ErrorKind::Parse, "negative label");
    if (it.k > 0) out.push_back(it);
  }
  return out;
}

std::string object_to_string(const WebObject& w) {
  std::string s;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) s += ' ';
    s += w[i].to_string();
  }
  return s;
}

WebObject concat(const WebObject& a, const WebObject& b) {
  WebObject out = a;
  out.insert(out.end(), b.begin(), b.end());
  return out;
}

WebObject dual_object(const WebObject& w) {
  WebObject out;
  for (auto it = w.rbegin(); it != w.rend(); ++it)
    out.push_back({it->o == Orient::Up ? Orient::Down : Orient::Up, it->k});
  return out;
}

WebObject ups(int count, int k) { return WebObject(static_cast<std::size_t>(count), {Orient::Up, k}); }
WebObject downs(int count, int k) { return WebObject(static_cast<std::size_t>(count), {Orient::Down, k}); }

// ---- generators ----

namespace {

ObjItem U(int k) { return {Orient::Up, k}; }
ObjItem D(int k) { return {Orient::Down, k}; }

WebGenerator make(WebKind kind, int k, int l, WebObject src, WebObject tgt, int parity = 0) {
  WebGenerator g;
  g.kind = kind;
  g.k = k;
  g.l = l;
  g.src = normalize_object(src);
  g.tgt = normalize_object(tgt);
  g.parity = parity;
  return g;
}

void need_positive(int k) {
  if (k < 0) throw Error(ErrorKind::Parse, "negative label");
}

}  // namespace

WebGenerator gen_id(const WebObject& obj) { return make(WebKind::Id, 0, 0, obj, obj); }

WebGenerator gen_dot(int k) {
  need_positive(k);
  return make(WebKind::Dot, k, 0, {U(k)}, {U(k)}, k > 0 ? 1 : 0);
}

WebGenerator gen_ddot(int k) {
  need_positive(k);
  return make(WebKind::DDot, k, 0, {D(k)}, {D(k)}, k > 0 ? 1 : 0);
}

WebGenerator gen_merge(int k, int l) {
  need_positive(k);
  need_positive(l);
  return make(WebKind::Merge, k, l, {U(k), U(l)}, {U(k + l)});
}

WebGenerator gen_split(int k, int l) {
  need_positive(k);
  need_positive(l);
  return make(WebKind::Split, k, l, {U(k + l)}, {U(k), U(l)});
}

WebGenerator gen_dmerge(int k, int l) {
  need_positive(k);
  need_positive(l);
  return make(WebKind::DMerge, k, l, {D(k), D(l)}, {D(k + l)});
}

WebGenerator gen_dsplit(int k, int l) {
  need_positive(k);
  need_positive(l);
  return make(WebKind::DSplit, k, l, {D(k + l)}, {D(k), D(l)});
}

WebGenerator gen_lcup(int k) {
  need_positive(k);
  return make(WebKind::LCup, k, 0, {}, {U(k), D(k)});
}

WebGenerator gen_lcap(int k) {
  need_positive(k);
  return make(WebKind::LCap, k, 0, {D(k), U(k)}, {});
}

WebGenerator gen_rcup(int k) {
  need_positive(k);
  return make(WebKind::RCup, k, 0, {}, {D(k), U(k)});
}

WebGenerator gen_rcap(int k) {
  need_positive(k);
  return make(WebKind::RCap, k, 0, {U(k), D(k)}, {});
}

WebGenerator gen_cross(bool over, const ObjItem& a, const ObjItem& b) {
  need_positive(a.k);
  need_positive(b.k);
  WebGenerator g = make(over ? WebKind::Over : WebKind::Under, a.k, b.k, {a, b}, {b, a});
  g.a = a;
  g.b = b;
  return g;
}

WebGenerator gen_clasp(int k) {
  need_positive(k);
  return make(WebKind::Clasp, k, 0, ups(k), ups(k));
}

WebGenerator gen_block(const std::string& name, std::shared_ptr<const LinearWeb> body) {
  WebGenerator g = make(WebKind::Block, 0, 0, body->src, body->tgt, body->parity);
  g.name = name;
  g.body = std::move(body);
  return g;
}

std::string WebGenerator::to_string() const {
  auto one = [](const char* f, int x) { return std::string(f) + "(" + std::to_string(x) + ")"; };
  auto two = [](const char* f, int x, int y) {
    return std::string(f) + "(" + std::to_string(x) + "," + std::to_string(y) + ")";
  };
  switch (kind) {
    case WebKind::Id: return "id(" + object_to_string(src) + ")";
    case WebKind::Dot: return one("dot", k);
    case WebKind::DDot: return one("ddot", k);
    case WebKind::Merge: return two("merge", k, l);
    case WebKind::Split: return two("split", k, l);
    case WebKind::DMerge: return two("dmerge", k, l);
    case WebKind::DSplit: return two("dsplit", k, l);
    case WebKind::LCup: return one("lcup", k);
    case WebKind::LCap: return one("lcap", k);
    case WebKind::RCup: return one("rcup", k);
    case WebKind::RCap: return one("rcap", k);
    case WebKind::Over: return "xo(" + a.to_string() + "," + b.to_string() + ")";
    case WebKind::Under: return "xu(" + a.to_string() + "," + b.to_string() + ")";
    case WebKind::Clasp: return one("clasp", k);
    case WebKind::Block: return name;
  }
  return "?";
}

bool WebGenerator::is_primitive() const {
  switch (kind) {
    case WebKind::Id:
    case WebKind::Dot:
    case WebKind::Merge:
    case WebKind::Split:
    case WebKind::LCup:
    case WebKind::LCap:
    case WebKind::Block:
      return true;
    case WebKind::Over:
    case WebKind::Under:
      return a == U(1) && b == D(1);
    default:
      return false;
  }
}

bool operator==(const WebGenerator& x, const WebGenerator& y) {
  if (x.kind != y.kind) return false;
  if (x.kind == WebKind::Block) return x.name == y.name && x.src == y.src && x.tgt == y.tgt;
  return x.k == y.k && x.l == y.l && x.a == y.a && x.b == y.b && x.src == y.src && x.tgt == y.tgt;
}

// ---- diagrams ----

WebObject slice_source(const Slice& s) {
  WebObject out;
  for (const auto& g : s) out.insert(out.end(), g.src.begin(), g.src.end());
  return out;
}

WebObject slice_target(const Slice& s) {
  WebObject out;
  for (const auto& g : s) out.insert(out.end(), g.tgt.begin(), g.tgt.end());
  return out;
}

int WebDiagram::parity() const {
  int p = 0;
  for (const auto& s : slices)
    for (const auto& g : s) p ^= g.parity;
  return p;
}

std::string WebDiagram::to_string() const {
  if (slices.empty()) return "id(" + object_to_string(src) + ")";
  std::string out;
  for (std::size_t i = 0; i < slices.size(); ++i) {
    if (i) out += " ; ";
    for (std::size_t j = 0; j < slices[i].size(); ++j) {
      if (j) out += " * ";
      out += slices[i][j].to_string();
    }
  }
  return out;
}

bool operator==(const WebDiagram& x, const WebDiagram& y) {
  return x.src == y.src && x.tgt == y.tgt && x.slices == y.slices;
}

WebDiagram identity_diagram(const WebObject& obj) {
  WebDiagram d;
  d.src = d.tgt = normalize_object(obj);
  return d;
}

WebDiagram diagram_of(const WebGenerator& g) { return from_slices({Slice{g}}); }

WebDiagram from_slices(std::vector<Slice> slices) {
  if (slices.empty()) throw Error(ErrorKind::Mismatch, "object mismatch: empty diagram has no boundary");
  WebDiagram d;
  d.src = slice_source(slices.front());
  for (std::size_t i = 0; i + 1 < slices.size(); ++i)
    if (slice_target(slices[i]) != slice_source(slices[i + 1]))
      throw Error(ErrorKind::Mismatch, "object mismatch: slice " + std::to_string(i + 1) + " ends at '" +
                                           object_to_string(slice_target(slices[i])) + "' but slice " +
                                           std::to_string(i + 2) + " starts at '" +
                                           object_to_string(slice_source(slices[i + 1])) + "'");
  d.tgt = slice_target(slices.back());
  d.slices = std::move(slices);
  return d;
}

namespace {

bool all_identity(const Slice& s) {
  return std::all_of(s.begin(), s.end(), [](const WebGenerator& g) { return g.is_identity(); });
}

}  // namespace

WebDiagram compose(const WebDiagram& top, const WebDiagram& bottom) {
  if (top.src != bottom.tgt)
    throw Error(ErrorKind::Mismatch, "object mismatch: '" + object_to_string(bottom.tgt) + "' vs '" +
                                         object_to_string(top.src) + "'");
  WebDiagram d;
  d.src = bottom.src;
  d.tgt = top.tgt;
  for (const auto& s : bottom.slices)
    if (!all_identity(s)) d.slices.push_back(s);
  for (const auto& s : top.slices)
    if (!all_identity(s)) d.slices.push_back(s);
  return d;
}

WebDiagram stack(const std::vector<WebDiagram>& ds) {
  if (ds.empty()) return identity_diagram({});
  WebDiagram acc = ds.front();
  for (std::size_t i = 1; i < ds.size(); ++i) acc = compose(ds[i], acc);
  return acc;
}

namespace {

Slice pad(const WebObject& left, const Slice& s, const WebObject& right) {
  Slice out;
  if (!left.empty()) out.push_back(gen_id(left));
  out.insert(out.end(), s.begin(), s.end());
  if (!right.empty()) out.push_back(gen_id(right));
  return out;
}

}  // namespace

// Right factor's slices first, then the left factor's: f (x) g = (f (x) 1)(1 (x) g).
// When neither side has odd generators the layers are merged pairwise.
WebDiagram tensor(const WebDiagram& left, const WebDiagram& right) {
  WebDiagram d;
  d.src = concat(left.src, right.src);
  d.tgt = concat(left.tgt, right.tgt);
  const bool even = left.parity() == 0 && right.parity() == 0;
  if (even) {
    const std::size_t h = std::max(left.slices.size(), right.slices.size());
    for (std::size_t i = 0; i < h; ++i) {
      Slice s;
      if (i < left.slices.size()) {
        s = left.slices[i];
      } else if (!left.tgt.empty()) {
        s.push_back(gen_id(left.tgt));
      }
      if (i < right.slices.size()) {
        s.insert(s.end(), right.slices[i].begin(), right.slices[i].end());
      } else if (!right.tgt.empty()) {
        s.push_back(gen_id(right.tgt));
      }
      if (!s.empty() && !all_identity(s)) d.slices.push_back(std::move(s));
    }
    return d;
  }
  for (const auto& s : right.slices) d.slices.push_back(pad(left.src, s, {}));
  for (const auto& s : left.slices) d.slices.push_back(pad({}, s, right.tgt));
  return d;
}

// ---- parser ----

namespace {

class Parser {
 public:
  explicit Parser(const std::string& t) : s_(t) {}

  [[noreturn]] void fail(const std::string& msg) const {
    throw Error(ErrorKind::Parse, "parse error at position " + std::to_string(pos_) + ": " + msg);
  }

  void ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool at_end() {
    ws();
    return pos_ >= s_.size();
  }

  bool peek(char c) {
    ws();
    return pos_ < s_.size() && s_[pos_] == c;
  }

  bool accept(char c) {
    if (!peek(c)) return false;
    ++pos_;
    return true;
  }

  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }

  std::string ident() {
    ws();
    std::size_t b = pos_;
    while (pos_ < s_.size() && std::isalpha(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    return s_.substr(b, pos_ - b);
  }

  long signed_int() {
    ws();
    std::size_t b = pos_;
    if (pos_ < s_.size() && (s_[pos_] == '-' || s_[pos_] == '+')) ++pos_;
    std::size_t digits = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (pos_ == digits) {
      pos_ = b;
      fail("expected integer");
    }
    if (pos_ - digits > 9) {
      pos_ = b;
      fail("integer too large");
    }
    return std::stol(s_.substr(b, pos_ - b));
  }

  int label() {
    std::size_t b = (ws(), pos_);
    long v = signed_int();
    if (v < 0) {
      pos_ = b;
      throw Error(ErrorKind::Parse, "negative label at position " + std::to_string(b));
    }
    return static_cast<int>(v);
  }

  ObjItem item() {
    ws();
    if (pos_ >= s_.size()) fail("expected 'u' or 'd'");
    char c = s_[pos_];
    if (c != 'u' && c != 'd') fail("expected 'u' or 'd'");
    ++pos_;
    return {c == 'u' ? Orient::Up : Orient::Down, label()};
  }

  WebObject object() {
    WebObject w;
    while (peek('u') || peek('d')) w.push_back(item());
    return w;
  }

  WebGenerator atom() {
    std::size_t b = (ws(), pos_);
    std::string f = ident();
    if (f.empty()) fail("expected generator name");
    expect('(');
    WebGenerator g;
    auto k1 = [&](WebGenerator (*mk)(int)) {
      int k = label();
      return mk(k);
    };
    auto k2 = [&](WebGenerator (*mk)(int, int)) {
      int k = label();
      expect(',');
      int l = label();
      return mk(k, l);
    };
    if (f == "id") {
      g = gen_id(object());
    } else if (f == "dot") {
      g = k1(gen_dot);
    } else if (f == "ddot") {
      g = k1(gen_ddot);
    } else if (f == "lcup") {
      g = k1(gen_lcup);
    } else if (f == "lcap") {
      g = k1(gen_lcap);
    } else if (f == "rcup") {
      g = k1(gen_rcup);
    } else if (f == "rcap") {
      g = k1(gen_rcap);
    } else if (f == "clasp") {
      g = k1(gen_clasp);
    } else if (f == "merge") {
      g = k2(gen_merge);
    } else if (f == "split") {
      g = k2(gen_split);
    } else if (f == "dmerge") {
      g = k2(gen_dmerge);
    } else if (f == "dsplit") {
      g = k2(gen_dsplit);
    } else if (f == "xo" || f == "xu") {
      ObjItem a = item();
      expect(',');
      ObjItem c = item();
      g = gen_cross(f == "xo", a, c);
    } else {
      pos_ = b;
      fail("unknown generator '" + f + "'");
    }
    expect(')');
    return degenerate(g);
  }

  // Generators touching a label-0 edge reduce to identities (or vanish).
  static WebGenerator degenerate(const WebGenerator& g) {
    bool zero = false;
    switch (g.kind) {
      case WebKind::Id: return g;
      case WebKind::Merge:
      case WebKind::Split:
      case WebKind::DMerge:
      case WebKind::DSplit:
      case WebKind::Over:
      case WebKind::Under:
        zero = g.k == 0 || g.l == 0;
        break;
      default:
        zero = g.k == 0;
    }
    return zero ? gen_id(g.src) : g;
  }

  WebDiagram diagram() {
    std::vector<Slice> slices;
    do {
      Slice s;
      do {
        s.push_back(atom());
      } while (accept('*'));
      slices.push_back(std::move(s));
    } while (accept(';'));
    if (!at_end()) fail("unexpected trailing input");
    return from_slices(std::move(slices));
  }

  BraidWord braid() {
    if (ident() != "braid") fail("expected 'braid'");
    std::size_t at = (ws(), pos_);
    long strands = signed_int();
    if (strands < 1) {
      pos_ = at;
      fail("strand count must be positive");
    }
    BraidWord w;
    expect('[');
    do {
      int k = label();
      w.labels.push_back(k);
    } while (accept(','));
    expect(']');
    if (static_cast<long>(w.labels.size()) != strands) {
      pos_ = at;
      fail("strand count " + std::to_string(strands) + " does not match " + std::to_string(w.labels.size()) +
           " labels");
    }
    expect(':');
    do {
      ws();
      if (!peek('s')) fail("expected crossing letter 's'");
      ++pos_;
      std::size_t b = pos_;
      long i = signed_int();
      if (i == 0 || std::labs(i) >= strands) {
        pos_ = b;
        fail("crossing index out of range");
      }
      w.letters.push_back(static_cast<int>(i));
    } while (!at_end());
    return w;
  }

 private:
  const std::string& s_;
  std::size_t pos_ = 0;
};

}  // namespace

WebDiagram parse_web(const std::string& text) {
  Parser p(text);
  return p.diagram();
}

BraidWord parse_braid(const std::string& text) {
  Parser p(text);
  return p.braid();
}

std::string BraidWord::to_string() const {
  std::ostringstream os;
  os << "braid " << labels.size() << " [";
  for (std::size_t i = 0; i < labels.size(); ++i) os << (i ? "," : "") << labels[i];
  os << "] :";
  for (int x : letters) os << " s" << x;
  return os.str();
}

// ---- building blocks ----

namespace {

WebDiagram G(const WebGenerator& g) { return diagram_of(g); }
WebDiagram I(const WebObject& w) { return identity_diagram(w); }

// The crossing at position p (1-based) of a word.
WebDiagram at_position(const WebObject& w, std::size_t p, const WebGenerator& x) {
  WebObject left(w.begin(), w.begin() + static_cast<long>(p - 1));
  WebObject right(w.begin() + static_cast<long>(p + 1), w.end());
  return from_slices({pad(left, Slice{x}, right)});
}

// Moves the first k strands (item a) across the last l strands (item b) with
// thin crossings: for j = k..1, crossings at positions j, ..., j+l-1.
WebDiagram grid(int k, int l, bool over, const ObjItem& a, const ObjItem& b) {
  WebObject w = concat(WebObject(static_cast<std::size_t>(k), a), WebObject(static_cast<std::size_t>(l), b));
  std::vector<WebDiagram> steps{I(w)};
  for (int j = k; j >= 1; --j)
    for (int p = j; p <= j + l - 1; ++p) {
      steps.push_back(at_position(w, static_cast<std::size_t>(p), gen_cross(over, a, b)));
      std::swap(w[static_cast<std::size_t>(p - 1)], w[static_cast<std::size_t>(p)]);
    }
  return stack(steps);
}

ScalarQ inv_fact(int k, int l) { return (qfact(k) * qfact(l)).inverse(); }

LinearWeb single(const ScalarQ& c, const WebDiagram& d) {
  LinearWeb lw;
  lw.src = d.src;
  lw.tgt = d.tgt;
  lw.parity = d.parity();
  lw.terms.emplace_back(c, d);
  return lw;
}

}  // namespace

WebDiagram merge_ones(int k) {
  if (k <= 1) return I(ups(k));
  return compose(G(gen_merge(k - 1, 1)), tensor(merge_ones(k - 1), I({U(1)})));
}

WebDiagram split_ones(int k) {
  if (k <= 1) return I(ups(k));
  return compose(tensor(split_ones(k - 1), I({U(1)})), G(gen_split(k - 1, 1)));
}

WebDiagram dmerge_ones(int k) {
  if (k <= 1) return I(downs(k));
  return compose(G(gen_dmerge(k - 1, 1)), tensor(dmerge_ones(k - 1), I({D(1)})));
}

WebDiagram dsplit_ones(int k) {
  if (k <= 1) return I(downs(k));
  return compose(tensor(dsplit_ones(k - 1), I({D(1)})), G(gen_dsplit(k - 1, 1)));
}

WebDiagram lcup_of(const WebObject& a) {
  if (a.empty()) return I({});
  WebObject rest(a.begin() + 1, a.end());
  const ObjItem& x = a.front();
  WebDiagram inner = tensor(I({x}), tensor(lcup_of(rest), I({D(x.k)})));
  if (x.o != Orient::Up) throw Error(ErrorKind::Unsupported, "lcup_of expects an upward word");
  return compose(inner, G(gen_lcup(x.k)));
}

WebDiagram lcap_of(const WebObject& b) {
  if (b.empty()) return I({});
  WebObject rest(b.begin(), b.end() - 1);
  const ObjItem& x = b.back();
  if (x.o != Orient::Up) throw Error(ErrorKind::Unsupported, "lcap_of expects an upward word");
  WebDiagram inner = tensor(I({D(x.k)}), tensor(lcap_of(rest), I({x})));
  return compose(G(gen_lcap(x.k)), inner);
}

WebDiagram mate(const WebDiagram& f) {
  const WebObject as = dual_object(f.src), bs = dual_object(f.tgt);
  WebDiagram bottom = tensor(I(bs), lcup_of(f.src));
  WebDiagram middle = tensor(I(bs), tensor(f, I(as)));
  WebDiagram top = tensor(lcap_of(f.tgt), I(as));
  return stack({bottom, middle, top});
}

int inversions(const std::vector<int>& perm) {
  int c = 0;
  for (std::size_t i = 0; i < perm.size(); ++i)
    for (std::size_t j = i + 1; j < perm.size(); ++j)
      if (perm[i] > perm[j]) ++c;
  return c;
}

// Bubble sort of the one-line notation; the swaps, reversed, build perm from
// the identity as a product of adjacent transpositions.
std::vector<int> reduced_word(const std::vector<int>& perm) {
  std::vector<int> p = perm, word;
  for (std::size_t pass = 0; pass < p.size(); ++pass)
    for (std::size_t i = 0; i + 1 < p.size(); ++i)
      if (p[i] > p[i + 1]) {
        std::swap(p[i], p[i + 1]);
        word.push_back(static_cast<int>(i) + 1);
      }
  std::reverse(word.begin(), word.end());
  return word;
}

WebDiagram crossing_word(int k, const std::vector<int>& positions, bool over) {
  std::vector<WebDiagram> steps{I(ups(k))};
  for (int p : positions) steps.push_back(at_position(ups(k), static_cast<std::size_t>(p), gen_cross(over, U(1), U(1))));
  return stack(steps);
}

// ---- macro expansion ----

LinearWeb expand_generator(const WebGenerator& g) {
  const int k = g.k, l = g.l;
  switch (g.kind) {
    case WebKind::DDot:
      return single(ScalarQ(1), mate(G(gen_dot(k))));
    case WebKind::DMerge:
      return single(ScalarQ(1), mate(G(gen_split(l, k))));
    case WebKind::DSplit:
      return single(ScalarQ(1), mate(G(gen_merge(l, k))));
    case WebKind::RCap:
      return single(ScalarQ::q(k * (k - 1)), compose(G(gen_lcap(k)), G(gen_cross(true, U(k), D(k)))));
    case WebKind::RCup:
      return single(ScalarQ::q(-k * (k - 1)), compose(G(gen_cross(false, U(k), D(k))), G(gen_lcup(k))));
    case WebKind::Clasp: {
      LinearWeb lw;
      lw.src = lw.tgt = ups(k);
      const ScalarQ pre = ScalarQ::q(-k * (k - 1) / 2) * qfact(k).inverse();
      std::vector<int> perm(static_cast<std::size_t>(k));
      std::iota(perm.begin(), perm.end(), 1);
      do {
        lw.terms.emplace_back(pre * ScalarQ::q(inversions(perm)), crossing_word(k, reduced_word(perm)));
      } while (std::next_permutation(perm.begin(), perm.end()));
      return lw;
    }
    case WebKind::Over:
    case WebKind::Under: {
      const bool over = g.kind == WebKind::Over;
      const ObjItem a = g.a, b = g.b;
      if (a.o == Orient::Up && b.o == Orient::Up) {
        if (k == 1 && l == 1) {
          LinearWeb lw;
          lw.src = lw.tgt = ups(2);
          lw.terms.emplace_back(ScalarQ(1), compose(G(gen_split(1, 1)), G(gen_merge(1, 1))));
          lw.terms.emplace_back(-ScalarQ::q(over ? -1 : 1), I(ups(2)));
          return lw;
        }
        WebDiagram d = stack({tensor(split_ones(k), split_ones(l)), grid(k, l, over, U(1), U(1)),
                              tensor(merge_ones(l), merge_ones(k))});
        return single(inv_fact(k, l), d);
      }
      if (a.o == Orient::Up && b.o == Orient::Down) {
        WebDiagram d = stack({tensor(split_ones(k), dsplit_ones(l)), grid(k, l, over, U(1), D(1)),
                              tensor(dmerge_ones(l), merge_ones(k))});
        return single(inv_fact(k, l), d);
      }
      if (a.o == Orient::Down && b.o == Orient::Up) {
        // leftward: the down strand is bent into an upward one crossing b
        WebDiagram inner = G(gen_cross(!over, U(l), U(k)));
        WebDiagram d = stack({tensor(I({D(k), U(l)}), G(gen_lcup(k))), tensor(I({D(k)}), tensor(inner, I({D(k)}))),
                              tensor(G(gen_lcap(k)), I({U(l), D(k)}))});
        return single(ScalarQ(1), d);
      }
      // both down. This equals the mate of the upward crossing, but never
      // passes through the much larger bent object.
      if (k == 1 && l == 1) {
        LinearWeb lw;
        lw.src = lw.tgt = downs(2);
        lw.terms.emplace_back(ScalarQ(1), compose(G(gen_dsplit(1, 1)), G(gen_dmerge(1, 1))));
        lw.terms.emplace_back(-ScalarQ::q(over ? -1 : 1), I(downs(2)));
        return lw;
      }
      WebDiagram d = stack({tensor(dsplit_ones(k), dsplit_ones(l)), grid(k, l, over, D(1), D(1)),
                            tensor(dmerge_ones(l), dmerge_ones(k))});
      return single(inv_fact(k, l), d);
    }
    default:
      return single(ScalarQ(1), diagram_of(g));
  }
}

WebDiagram expand_macros(const WebDiagram& d) {
  WebDiagram out;
  out.src = d.src;
  out.tgt = d.tgt;
  for (const auto& s : d.slices) {
    Slice ns;
    for (const auto& g : s) {
      if (g.is_primitive()) {
        ns.push_back(g);
        continue;
      }
      auto body = std::make_shared<LinearWeb>(expand_generator(g));
      for (auto& [c, t] : body->terms) t = expand_macros(t);
      ns.push_back(gen_block(g.to_string(), body));
    }
    out.slices.push_back(std::move(ns));
  }
  return out;
}

bool is_primitive_diagram(const WebDiagram& d) {
  for (const auto& s : d.slices)
    for (const auto& g : s) {
      if (!g.is_primitive()) return false;
      if (g.kind == WebKind::Block)
        for (const auto& [c, t] : g.body->terms)
          if (!is_primitive_diagram(t)) return false;
    }
  return true;
}

}  // namespace qweb

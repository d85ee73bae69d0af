// The relation catalog: every family is a generator of (lhs, rhs) pairs of
// linear webs, instantiated for a given n with labels kept small enough that
// all boundary spaces stay under the default cap.
#include <algorithm>
#include <numeric>

#include "qweb/error.hpp"
#include "qweb/evaluator.hpp"

namespace qweb {

namespace {

using Cases = std::vector<RelationCase>;

std::string S(int k) { return std::to_string(k); }
std::string u(int k) { return "u" + S(k); }
std::string d(int k) { return "d" + S(k); }
std::string id(const std::string& obj) { return "id(" + obj + ")"; }

LinearWeb W(const std::string& text, const ScalarQ& c = ScalarQ(1)) { return lin(parse_web(text), c); }
LinearWeb Z(const std::string& src, const std::string& tgt, int parity = 0) {
  WebObject s = src.empty() ? WebObject{} : parse_web(id(src)).src;
  WebObject t = tgt.empty() ? WebObject{} : parse_web(id(tgt)).src;
  return zero_web(s, t, parity);
}

const ScalarQ qt = ScalarQ::qtilde();

// largest thick label used by the families at this n
int kmax(int n) { return n == 1 ? 3 : 2; }

std::string join(const std::vector<std::string>& parts, const std::string& sep) {
  std::string s;
  for (const auto& p : parts) {
    if (p.empty()) continue;
    if (!s.empty()) s += sep;
    s += p;
  }
  return s;
}

std::string ups_text(const std::vector<int>& labels) {
  std::vector<std::string> v;
  for (int k : labels) v.push_back(u(k));
  return join(v, " ");
}

// id on the labels before and after position i (0-based, covering width w)
std::string pad(const std::vector<int>& labels, std::size_t i, std::size_t w, const std::string& gen) {
  std::vector<int> left(labels.begin(), labels.begin() + static_cast<long>(i));
  std::vector<int> right(labels.begin() + static_cast<long>(i + w), labels.end());
  std::vector<std::string> parts;
  if (!left.empty()) parts.push_back(id(ups_text(left)));
  parts.push_back(gen);
  if (!right.empty()) parts.push_back(id(ups_text(right)));
  return join(parts, " * ");
}

// Ladder rungs on an upward ladder. E moves r from strand i+1 to strand i,
// F moves r from strand i to strand i+1 (i is 1-based). A dotted rung
// carries a dot on the r-labelled edge. Returns "" when the rung does not fit.
struct Ladder {
  std::vector<int> labels;
  std::vector<std::string> steps;
  bool ok = true;

  Ladder& rung(bool e, int i, int r, bool dotted = false) {
    if (!ok) return *this;
    const std::size_t p = static_cast<std::size_t>(i - 1);
    const int a = labels[p], b = labels[p + 1];
    if (e ? b < r : a < r) {
      ok = false;
      return *this;
    }
    std::vector<int> mid = labels;
    if (e) {
      // split b into (r, b-r), merge a with r
      steps.push_back(pad(labels, p + 1, 1, "split(" + S(r) + "," + S(b - r) + ")"));
      std::vector<int> m3 = labels;
      m3[p + 1] = b - r;
      m3.insert(m3.begin() + static_cast<long>(p + 1), r);
      if (dotted) steps.push_back(pad(m3, p + 1, 1, "dot(" + S(r) + ")"));
      steps.push_back(pad(m3, p, 2, "merge(" + S(a) + "," + S(r) + ")"));
      labels[p] = a + r;
      labels[p + 1] = b - r;
    } else {
      steps.push_back(pad(labels, p, 1, "split(" + S(a - r) + "," + S(r) + ")"));
      std::vector<int> m3 = labels;
      m3[p] = a - r;
      m3.insert(m3.begin() + static_cast<long>(p + 1), r);
      if (dotted) steps.push_back(pad(m3, p + 1, 1, "dot(" + S(r) + ")"));
      steps.push_back(pad(m3, p + 1, 2, "merge(" + S(r) + "," + S(b) + ")"));
      labels[p] = a - r;
      labels[p + 1] = b + r;
    }
    return *this;
  }
};

Ladder ladder(std::vector<int> labels) { return Ladder{std::move(labels), {}, true}; }

// Evaluates to the zero web of the right type when the ladder does not fit.
LinearWeb L(const Ladder& l, const std::vector<int>& src, const std::vector<int>& tgt, int parity,
            const ScalarQ& c = ScalarQ(1)) {
  if (!l.ok) return Z(ups_text(src), ups_text(tgt), parity);
  if (l.steps.empty()) return W(id(ups_text(src)), c);
  return W(join(l.steps, " ; "), c);
}

std::string dot_at(int strands, int pos, const std::string& gen = "dot(1)") {
  std::vector<std::string> parts;
  if (pos > 1) parts.push_back(id(ups_text(std::vector<int>(static_cast<std::size_t>(pos - 1), 1))));
  parts.push_back(gen);
  if (pos < strands) parts.push_back(id(ups_text(std::vector<int>(static_cast<std::size_t>(strands - pos), 1))));
  return join(parts, " * ");
}

std::string cross_at(int strands, int pos, bool over = true) {
  std::vector<std::string> parts;
  if (pos > 1) parts.push_back(id(ups_text(std::vector<int>(static_cast<std::size_t>(pos - 1), 1))));
  parts.push_back(std::string(over ? "xo" : "xu") + "(u1,u1)");
  if (pos + 1 < strands) parts.push_back(id(ups_text(std::vector<int>(static_cast<std::size_t>(strands - pos - 1), 1))));
  return join(parts, " * ");
}

std::string seq(const std::vector<std::string>& steps) { return join(steps, " ; "); }

// ---- thin oriented relations ----

Cases thin_crossing_differences(int) {
  return {
      {"leftward", W("xo(d1,u1)"), W("xu(d1,u1)") - W("lcap(1) ; lcup(1)", qt)},
      {"rightward", W("xo(u1,d1)"), W("xu(u1,d1)") - W("rcap(1) ; rcup(1)", qt)},
      {"downward", W("xu(d1,d1)"), W("xo(d1,d1)") - W(id("d1 d1"), qt)},
  };
}

Cases thin_turns(int) {
  return {
      {"cap", W("rcap(1)"), W("xu(u1,d1) ; lcap(1)")},
      {"cup", W("rcup(1)"), W("lcup(1) ; xo(u1,d1)")},
  };
}

Cases thin_bubbles(int) {
  return {
      {"counterclockwise", W("rcup(1) ; lcap(1)"), Z("", "")},
      {"clockwise", W("lcup(1) ; rcap(1)"), Z("", "")},
      {"counterclockwise dotted", W("rcup(1) ; id(d1) * dot(1) ; lcap(1)"), Z("", "", 1)},
      {"counterclockwise down-dotted", W("rcup(1) ; ddot(1) * id(u1) ; lcap(1)"), Z("", "", 1)},
      {"clockwise dotted", W("lcup(1) ; dot(1) * id(d1) ; rcap(1)"), Z("", "", 1)},
      {"clockwise down-dotted", W("lcup(1) ; id(u1) * ddot(1) ; rcap(1)"), Z("", "", 1)},
  };
}

Cases thin_dot_slides(int) {
  const LinearWeb up_diff = W("dot(1) * id(u1)") - W("id(u1) * dot(1)");
  const LinearWeb down_diff = W("ddot(1) * id(d1)") - W("id(d1) * ddot(1)");
  const LinearWeb left_corr = W("ddot(1) * id(u1) ; lcap(1) ; lcup(1)") - W("lcap(1) ; lcup(1) ; id(u1) * ddot(1)");
  const LinearWeb right_corr = W("dot(1) * id(d1) ; rcap(1) ; rcup(1)") - W("rcap(1) ; rcup(1) ; id(d1) * dot(1)");
  return {
      {"upward under", W("xu(u1,u1) ; id(u1) * dot(1)"), W("dot(1) * id(u1) ; xu(u1,u1)") + qt * up_diff},
      {"upward over", W("xo(u1,u1) ; dot(1) * id(u1)"), W("id(u1) * dot(1) ; xo(u1,u1)") + qt * up_diff},
      {"leftward over", W("id(d1) * dot(1) ; xo(d1,u1)"), W("xo(d1,u1) ; dot(1) * id(d1)") - qt * left_corr},
      {"leftward under", W("xu(d1,u1) ; id(u1) * ddot(1)"), W("ddot(1) * id(u1) ; xu(d1,u1)") - qt * left_corr},
      {"rightward under", W("xu(u1,d1) ; id(d1) * dot(1)"), W("dot(1) * id(d1) ; xu(u1,d1)") - qt * right_corr},
      {"rightward over", W("id(u1) * ddot(1) ; xo(u1,d1)"), W("xo(u1,d1) ; ddot(1) * id(u1)") - qt * right_corr},
      {"downward under", W("xu(d1,d1) ; id(d1) * ddot(1)"), W("ddot(1) * id(d1) ; xu(d1,d1)") + qt * down_diff},
      {"downward over", W("xo(d1,d1) ; ddot(1) * id(d1)"), W("id(d1) * ddot(1) ; xo(d1,d1)") + qt * down_diff},
  };
}

// ---- twists and rightward turns ----

Cases twist_kinks(int n) {
  Cases out;
  for (int k = 1; k <= std::min(2, kmax(n)); ++k) {
    const ScalarQ pos = ScalarQ::q(k * (k - 1)), neg = ScalarQ::q(-k * (k - 1));
    const std::string K = S(k);
    for (bool over : {true, false}) {
      const std::string x = std::string(over ? "xo" : "xu") + "(" + u(k) + "," + u(k) + ")";
      const ScalarQ c = over ? pos : neg;
      out.push_back({"left curl " + x, W(seq({"rcup(" + K + ") * " + id(u(k)), id(d(k)) + " * " + x,
                                              "lcap(" + K + ") * " + id(u(k))})),
                     W(id(u(k)), c)});
      out.push_back({"right curl " + x, W(seq({id(u(k)) + " * lcup(" + K + ")", x + " * " + id(d(k)),
                                               id(u(k)) + " * rcap(" + K + ")"})),
                     W(id(u(k)), c)});
    }
  }
  return out;
}

Cases twist_right_zigzags(int n) {
  Cases out;
  for (int k = 1; k <= std::min(2, kmax(n)); ++k) {
    const std::string K = S(k);
    out.push_back({"up k=" + K, W(seq({id(u(k)) + " * rcup(" + K + ")", "rcap(" + K + ") * " + id(u(k))})),
                   W(id(u(k)))});
    out.push_back({"down k=" + K, W(seq({"rcup(" + K + ") * " + id(d(k)), id(d(k)) + " * rcap(" + K + ")"})),
                   W(id(d(k)))});
  }
  return out;
}

Cases twist_dot_turns(int n) {
  Cases out;
  for (int k = 1; k <= std::min(2, kmax(n)); ++k) {
    const std::string K = S(k);
    out.push_back({"cap k=" + K, W("dot(" + K + ") * " + id(d(k)) + " ; rcap(" + K + ")"),
                   W(id(u(k)) + " * ddot(" + K + ") ; rcap(" + K + ")")});
    out.push_back({"cup k=" + K, W("rcup(" + K + ") ; ddot(" + K + ") * " + id(u(k))),
                   W("rcup(" + K + ") ; " + id(d(k)) + " * dot(" + K + ")")});
    out.push_back({"left cap k=" + K, W("ddot(" + K + ") * " + id(u(k)) + " ; lcap(" + K + ")"),
                   W(id(d(k)) + " * dot(" + K + ") ; lcap(" + K + ")")});
    out.push_back({"left cup k=" + K, W("lcup(" + K + ") ; dot(" + K + ") * " + id(d(k))),
                   W("lcup(" + K + ") ; " + id(u(k)) + " * ddot(" + K + ")")});
  }
  return out;
}

Cases twist_pitchforks(int n) {
  Cases out;
  for (int k = 1; k <= 2; ++k)
    for (int l = 1; l <= 2; ++l) {
      if (k + l > (n == 1 ? 4 : 3)) continue;
      const std::string K = S(k), Lb = S(l);
      for (bool over : {true, false}) {
        const std::string x1 = over ? "xo" : "xu", x2 = over ? "xu" : "xo";
        out.push_back({x1 + " cap k=" + K + " l=" + Lb,
                       W(seq({x1 + "(" + d(k) + "," + u(l) + ") * " + id(u(k)), id(u(l)) + " * lcap(" + K + ")"})),
                       W(seq({id(d(k)) + " * " + x2 + "(" + u(l) + "," + u(k) + ")", "lcap(" + K + ") * " + id(u(l))}))});
        // the cup side passes through five strands
        if (n > 1 && k + l > 2) continue;
        out.push_back({x2 + " cup k=" + K + " l=" + Lb,
                       W(seq({id(d(l)) + " * lcup(" + K + ")", x2 + "(" + d(l) + "," + u(k) + ") * " + id(d(k))})),
                       W(seq({"lcup(" + K + ") * " + id(d(l)), id(u(k)) + " * " + x1 + "(" + d(k) + "," + d(l) + ")"}))});
      }
    }
  return out;
}

// ---- bubbles and straightening ----

Cases left_zigzags(int n) {
  Cases out;
  for (int k = 1; k <= std::min(2, kmax(n)); ++k) {
    const std::string K = S(k);
    out.push_back({"up k=" + K, W(seq({"lcup(" + K + ") * " + id(u(k)), id(u(k)) + " * lcap(" + K + ")"})),
                   W(id(u(k)))});
    out.push_back({"down k=" + K, W(seq({id(d(k)) + " * lcup(" + K + ")", "lcap(" + K + ") * " + id(d(k))})),
                   W(id(d(k)))});
  }
  return out;
}

// ---- upward relations ----

Cases upward_assoc(int n) {
  Cases out;
  const int top = kmax(n) + (n == 1 ? 1 : 1);
  for (int a = 1; a <= top; ++a)
    for (int b = 1; a + b <= top; ++b)
      for (int c = 1; a + b + c <= top; ++c) {
        const std::string A = S(a), B = S(b), C = S(c);
        out.push_back({"merge " + A + B + C,
                       W("merge(" + A + "," + B + ") * " + id(u(c)) + " ; merge(" + S(a + b) + "," + C + ")"),
                       W(id(u(a)) + " * merge(" + B + "," + C + ") ; merge(" + A + "," + S(b + c) + ")")});
        out.push_back({"split " + A + B + C,
                       W("split(" + S(a + b) + "," + C + ") ; split(" + A + "," + B + ") * " + id(u(c))),
                       W("split(" + A + "," + S(b + c) + ") ; " + id(u(a)) + " * split(" + B + "," + C + ")")});
      }
  return out;
}

Cases upward_digon(int n) {
  Cases out;
  for (int k = 1; k <= 3; ++k)
    for (int l = 1; k + l <= (n == 1 ? 5 : 4); ++l)
      out.push_back({"k=" + S(k) + " l=" + S(l), W("split(" + S(k) + "," + S(l) + ") ; merge(" + S(k) + "," + S(l) + ")"),
                     W(id(u(k + l)), qbinom(k + l, l))});
  return out;
}

Cases upward_dot_collision(int n) {
  Cases out;
  for (int k = 1; k <= kmax(n) + 1; ++k) {
    const std::string K = S(k);
    out.push_back({"up k=" + K, W("dot(" + K + ") ; dot(" + K + ")"), W(id(u(k)), qint(k, 2))});
    if (k <= kmax(n))
      out.push_back({"down k=" + K, W("ddot(" + K + ") ; ddot(" + K + ")"), W(id(d(k)), -qint(k, 2))});
  }
  return out;
}

Cases upward_dot_migration(int n) {
  Cases out;
  for (int k = 1; k <= kmax(n); ++k)
    for (int l = 1; k + l <= kmax(n) + 1; ++l) {
      const std::string K = S(k), Lb = S(l), KL = S(k + l);
      const std::string m = "merge(" + K + "," + Lb + ")", s = "split(" + K + "," + Lb + ")";
      out.push_back({"merge k=" + K + " l=" + Lb, W(m + " ; dot(" + KL + ")"),
                     W("dot(" + K + ") * " + id(u(l)) + " ; " + m, ScalarQ::q(l)) +
                         W(id(u(k)) + " * dot(" + Lb + ") ; " + m, ScalarQ::q(-k))});
      out.push_back({"split k=" + K + " l=" + Lb, W("dot(" + KL + ") ; " + s),
                     W(s + " ; dot(" + K + ") * " + id(u(l)), ScalarQ::q(-l)) +
                         W(s + " ; " + id(u(k)) + " * dot(" + Lb + ")", ScalarQ::q(k))});
    }
  return out;
}

Cases upward_additional(int n) {
  Cases out;
  out.push_back({"double dot digon", W("split(1,1) ; dot(1) * dot(1) ; merge(1,1)"), W(id("u2"), qt)});
  for (int k = 2; k <= kmax(n) + 1; ++k) {
    const std::string K = S(k), K1 = S(k - 1);
    out.push_back({"left dot k=" + K, W("split(1," + K1 + ") ; dot(1) * " + id(u(k - 1)) + " ; merge(1," + K1 + ")"),
                   W("dot(" + K + ")")});
    out.push_back({"right dot k=" + K, W("split(" + K1 + ",1) ; " + id(u(k - 1)) + " * dot(1) ; merge(" + K1 + ",1)"),
                   W("dot(" + K + ")")});
  }
  return out;
}

// ---- ladder relations ----

std::vector<std::vector<int>> two_label_sets(int n) {
  std::vector<std::vector<int>> out;
  const int top = n == 1 ? 4 : 3;
  for (int a = 0; a <= top; ++a)
    for (int b = 0; a + b <= top; ++b)
      if (a + b > 0) out.push_back({a, b});
  return out;
}

std::vector<std::vector<int>> three_label_sets(int n) {
  std::vector<std::vector<int>> out;
  const int top = n == 1 ? 3 : 3;
  for (int a = 0; a <= top; ++a)
    for (int b = 0; a + b <= top; ++b)
      for (int c = 0; a + b + c <= top; ++c)
        if (a + b + c >= 2) out.push_back({a, b, c});
  return out;
}

std::string lbl(const std::vector<int>& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + S(v[i]);
  return s + ")";
}

std::vector<int> after(std::vector<int> v, bool e, int i, int r) {
  const std::size_t p = static_cast<std::size_t>(i - 1);
  v[p] += e ? r : -r;
  v[p + 1] += e ? -r : r;
  return v;
}

bool valid(const std::vector<int>& v) {
  return std::all_of(v.begin(), v.end(), [](int x) { return x >= 0; });
}

Cases ladder_collision(int n) {
  Cases out;
  for (const auto& lab : two_label_sets(n))
    for (bool e : {true, false}) {
      const int avail = e ? lab[1] : lab[0];
      for (int r = 1; r <= avail; ++r)
        for (int s = 1; r + s <= avail; ++s) {
          auto tgt = after(lab, e, 1, r + s);
          out.push_back({std::string(e ? "E" : "F") + " r=" + S(r) + " s=" + S(s) + " on " + lbl(lab),
                         L(ladder(lab).rung(e, 1, r).rung(e, 1, s), lab, tgt, 0),
                         L(ladder(lab).rung(e, 1, r + s), lab, tgt, 0, qbinom(r + s, s))});
        }
    }
  return out;
}

Cases ladder_square_switch(int n) {
  Cases out;
  for (const auto& lab : two_label_sets(n)) {
    const int k = lab[0], l = lab[1];
    for (int r = 1; r <= k; ++r) {
      auto tgt = after(after(lab, false, 1, r), true, 1, 1);
      if (!valid(tgt)) continue;
      LinearWeb lhs = L(ladder(lab).rung(false, 1, r).rung(true, 1, 1), lab, tgt, 0) -
                      L(ladder(lab).rung(true, 1, 1).rung(false, 1, r), lab, tgt, 0);
      LinearWeb rhs = L(ladder(lab).rung(false, 1, r - 1), lab, tgt, 0, qint(k - l + 1 - r));
      out.push_back({"r=" + S(r) + " on " + lbl(lab), lhs, rhs});
    }
  }
  return out;
}

Cases ladder_dotted_square(int n) {
  Cases out;
  for (const auto& lab : two_label_sets(n)) {
    const int k = lab[0], l = lab[1];
    if (k == 0 || l == 0) continue;
    LinearWeb lhs = L(ladder(lab).rung(false, 1, 1, true).rung(true, 1, 1, true), lab, lab, 0) +
                    L(ladder(lab).rung(true, 1, 1, true).rung(false, 1, 1, true), lab, lab, 0);
    LinearWeb rhs = W(id(ups_text(lab)), qint(k + l)) +
                    W("dot(" + S(k) + ") * dot(" + S(l) + ")", qt);
    out.push_back({"on " + lbl(lab), lhs, rhs});
  }
  return out;
}

Cases ladder_two_rung(int n) {
  Cases out;
  for (const auto& lab : three_label_sets(n)) {
    for (bool dotted : {false, true}) {
      // E on strands (1,2) and F on strands (2,3) commute
      auto tgt = after(after(lab, true, 1, 1), false, 2, 1);
      if (!valid(tgt)) continue;
      LinearWeb lhs = L(ladder(lab).rung(false, 2, 1, dotted).rung(true, 1, 1), lab, tgt, dotted);
      LinearWeb rhs = L(ladder(lab).rung(true, 1, 1).rung(false, 2, 1, dotted), lab, tgt, dotted);
      if (lhs.terms.empty() && rhs.terms.empty()) continue;
      out.push_back({std::string(dotted ? "dotted " : "") + "on " + lbl(lab), lhs, rhs});
    }
  }
  return out;
}

Cases ladder_serre(int n) {
  Cases out;
  struct Pair {
    bool e;
    int x, y;
    const char* name;
  };
  const Pair pairs[] = {{true, 1, 2, "E1,E2"}, {true, 2, 1, "E2,E1"}, {false, 1, 2, "F1,F2"}, {false, 2, 1, "F2,F1"}};
  for (const auto& lab : three_label_sets(n))
    for (const auto& p : pairs)
      for (bool dotted : {false, true}) {
        auto tgt = after(after(lab, p.e, p.x, 2), p.e, p.y, 1);
        if (!valid(tgt)) continue;
        LinearWeb a = L(ladder(lab).rung(p.e, p.y, 1, dotted).rung(p.e, p.x, 2), lab, tgt, dotted);
        LinearWeb b = L(ladder(lab).rung(p.e, p.x, 1).rung(p.e, p.y, 1, dotted).rung(p.e, p.x, 1), lab, tgt, dotted);
        LinearWeb c = L(ladder(lab).rung(p.e, p.x, 2).rung(p.e, p.y, 1, dotted), lab, tgt, dotted);
        LinearWeb lhs = a - b + c;
        if (lhs.terms.empty()) continue;
        out.push_back({std::string(p.name) + (dotted ? " dotted" : "") + " on " + lbl(lab), lhs,
                       Z(ups_text(lab), ups_text(tgt), dotted)});
      }
  return out;
}

// ---- Hecke-Clifford relations on thin upward strands ----

Cases hecke_relations(int n) {
  Cases out;
  const int kk = 3;
  const std::string all = ups_text({1, 1, 1});
  auto T = [&](int i) { return cross_at(kk, i); };
  auto C = [&](int i) { return dot_at(kk, i); };
  for (int i = 1; i < kk; ++i) {
    const std::string I = S(i);
    out.push_back({"quadratic T" + I, W(seq({T(i), T(i)})), W(T(i), qt) + W(id(all))});
    out.push_back({"twisted commutation c" + I + " T" + I, W(seq({T(i), C(i)})),
                   W(seq({C(i + 1), T(i)})) + W(C(i), qt) - W(C(i + 1), qt)});
    out.push_back({"transfer T" + I + " c" + I, W(seq({C(i), T(i)})), W(seq({T(i), C(i + 1)}))});
  }
  out.push_back({"braid", W(seq({T(1), T(2), T(1)})), W(seq({T(2), T(1), T(2)}))});
  for (int i = 1; i <= kk; ++i) {
    out.push_back({"clifford square c" + S(i), W(seq({C(i), C(i)})), W(id(all))});
    for (int j = i + 1; j <= kk; ++j)
      out.push_back({"clifford anticommute c" + S(i) + " c" + S(j), W(seq({C(j), C(i)})),
                     W(seq({C(i), C(j)}), ScalarQ(-1))});
  }
  for (int i = 1; i < kk; ++i)
    for (int j = 1; j <= kk; ++j)
      if (j != i && j != i + 1)
        out.push_back({"far commutation T" + S(i) + " c" + S(j), W(seq({C(j), T(i)})), W(seq({T(i), C(j)}))});
  if (n <= 2) {
    // far-apart crossings need four strands
    out.push_back({"far crossings", W(seq({cross_at(4, 1), cross_at(4, 3)})), W(seq({cross_at(4, 3), cross_at(4, 1)}))});
  }
  return out;
}

// ---- untwisting and clasps ----

Cases untwist(int n) {
  Cases out;
  for (int k = 2; k <= kmax(n) + 1; ++k) {
    std::vector<int> perm(static_cast<std::size_t>(k));
    std::iota(perm.begin(), perm.end(), 1);
    do {
      const int len = inversions(perm);
      if (len == 0) continue;
      auto word = reduced_word(perm);
      std::string pw;
      for (int x : perm) pw += S(x);
      for (bool over : {true, false}) {
        const ScalarQ c = ScalarQ::q(over ? len : -len);
        WebDiagram tw = crossing_word(k, word, over);
        out.push_back({std::string(over ? "over " : "under ") + pw + " below merge",
                       lin(compose(merge_ones(k), tw)), lin(merge_ones(k), c)});
        out.push_back({std::string(over ? "over " : "under ") + pw + " above split",
                       lin(compose(tw, split_ones(k))), lin(split_ones(k), c)});
      }
    } while (std::next_permutation(perm.begin(), perm.end()));
  }
  return out;
}

Cases clasps(int n) {
  Cases out;
  for (int k = 2; k <= (n == 1 ? 4 : 3); ++k) {
    const std::string K = S(k), cl = "clasp(" + K + ")";
    out.push_back({"idempotent k=" + K, W(cl + " ; " + cl), W(cl)});
    out.push_back({"through a thick strand k=" + K, W(cl), lin(compose(split_ones(k), merge_ones(k)), qfact(k).inverse())});
    if (k >= 3) {
      const std::string prev = "clasp(" + S(k - 1) + ") * id(u1)";
      const std::string mid = id(ups_text(std::vector<int>(static_cast<std::size_t>(k - 2), 1))) + " * clasp(2)";
      out.push_back({"recursion k=" + K, W(cl),
                     W(seq({prev, mid, prev}), qint(2) * qint(k - 1) / qint(k)) - W(prev, qint(k - 2) / qint(k))});
    }
  }
  return out;
}

// ---- braiding ----

std::vector<ObjItem> braid_items(int n) {
  std::vector<ObjItem> items;
  for (int k = 1; k <= (n == 1 ? 2 : 2); ++k) {
    items.push_back({Orient::Up, k});
    items.push_back({Orient::Down, k});
  }
  return items;
}

Cases braiding_inverses(int n) {
  Cases out;
  for (const auto& a : braid_items(n))
    for (const auto& b : braid_items(n)) {
      if (a.k + b.k > (n == 1 ? 4 : 3)) continue;
      if (n > 1 && a.o == Orient::Down && b.o == Orient::Down && a.k + b.k > 2) continue;
      const std::string A = a.to_string(), B = b.to_string();
      out.push_back({"xo then xu " + A + " " + B, W("xo(" + A + "," + B + ") ; xu(" + B + "," + A + ")"),
                     W(id(A + " " + B))});
      out.push_back({"xu then xo " + A + " " + B, W("xu(" + A + "," + B + ") ; xo(" + B + "," + A + ")"),
                     W(id(A + " " + B))});
    }
  return out;
}

Cases braiding_r3(int n) {
  Cases out;
  std::vector<std::vector<ObjItem>> triples;
  const ObjItem u1{Orient::Up, 1}, u2{Orient::Up, 2}, d1{Orient::Down, 1};
  triples.push_back({u1, u1, u1});
  triples.push_back({u1, u2, u1});
  triples.push_back({u2, u1, u1});
  triples.push_back({u1, d1, u1});
  triples.push_back({d1, u1, u1});
  if (n == 1) triples.push_back({u2, u1, u2});
  for (const auto& t : triples)
    for (bool over : {true, false}) {
      const std::string x = over ? "xo" : "xu";
      const std::string A = t[0].to_string(), B = t[1].to_string(), C = t[2].to_string();
      auto X = [&](const std::string& p, const std::string& q) { return x + "(" + p + "," + q + ")"; };
      std::string lhs = seq({X(A, B) + " * " + id(C), id(B) + " * " + X(A, C), X(B, C) + " * " + id(A)});
      std::string rhs = seq({id(A) + " * " + X(B, C), X(A, C) + " * " + id(B), id(C) + " * " + X(A, B)});
      out.push_back({x + " " + A + B + C, W(lhs), W(rhs)});
    }
  return out;
}

Cases braiding_naturality(int n) {
  Cases out;
  for (int h = 1; h <= 2; ++h)
    for (int k = 1; h + k <= (n == 1 ? 3 : 2); ++k)
      for (int l = 1; l <= (n == 1 ? 2 : 1); ++l)
        for (bool over : {true, false}) {
          const std::string x = over ? "xo" : "xu";
          const std::string H = S(h), K = S(k), Lb = S(l), HK = S(h + k);
          auto X = [&](int p, int q) { return x + "(" + u(p) + "," + u(q) + ")"; };
          const std::string m = "merge(" + H + "," + K + ")", s = "split(" + H + "," + K + ")";
          const std::string tag = x + " h=" + H + " k=" + K + " l=" + Lb;
          out.push_back({"merge left " + tag, W(seq({m + " * " + id(u(l)), X(h + k, l)})),
                         W(seq({id(u(h)) + " * " + X(k, l), X(h, l) + " * " + id(u(k)), id(u(l)) + " * " + m}))});
          out.push_back({"merge right " + tag, W(seq({id(u(l)) + " * " + m, X(l, h + k)})),
                         W(seq({X(l, h) + " * " + id(u(k)), id(u(h)) + " * " + X(l, k), m + " * " + id(u(l))}))});
          out.push_back({"split left " + tag, W(seq({X(l, h + k), s + " * " + id(u(l))})),
                         W(seq({id(u(l)) + " * " + s, X(l, h) + " * " + id(u(k)), id(u(h)) + " * " + X(l, k)}))});
          out.push_back({"split right " + tag, W(seq({X(h + k, l), id(u(l)) + " * " + s})),
                         W(seq({s + " * " + id(u(l)), id(u(h)) + " * " + X(k, l), X(h, l) + " * " + id(u(k))}))});
          (void)HK;
        }
  return out;
}

Cases braiding_dots(int n) {
  Cases out;
  for (int k = 1; k <= 2; ++k)
    for (int l = 1; k + l <= (n == 1 ? 4 : 3); ++l) {
      const std::string K = S(k), Lb = S(l);
      const std::string xo = "xo(" + u(k) + "," + u(l) + ")", xu = "xu(" + u(k) + "," + u(l) + ")";
      out.push_back({"over k=" + K + " l=" + Lb, W("dot(" + K + ") * " + id(u(l)) + " ; " + xo),
                     W(xo + " ; " + id(u(l)) + " * dot(" + K + ")")});
      out.push_back({"under k=" + K + " l=" + Lb, W(id(u(k)) + " * dot(" + Lb + ") ; " + xu),
                     W(xu + " ; dot(" + Lb + ") * " + id(u(k)))});
    }
  return out;
}

// ---- closed webs ----

Cases closed_webs(int n) {
  Cases out;
  auto add = [&](const std::string& name, const std::string& text, int parity = 0) {
    out.push_back({name, W(text), Z("", "", parity)});
  };
  for (int k = 1; k <= kmax(n); ++k) {
    const std::string K = S(k);
    add("clockwise circle k=" + K, "lcup(" + K + ") ; rcap(" + K + ")");
    add("counterclockwise circle k=" + K, "rcup(" + K + ") ; lcap(" + K + ")");
    add("dotted clockwise circle k=" + K, "lcup(" + K + ") ; dot(" + K + ") * " + id(d(k)) + " ; rcap(" + K + ")", 1);
    add("twice dotted circle k=" + K,
        "lcup(" + K + ") ; dot(" + K + ") * " + id(d(k)) + " ; dot(" + K + ") * " + id(d(k)) + " ; rcap(" + K + ")");
  }
  add("theta", "lcup(2) ; split(1,1) * id(d2) ; merge(1,1) * id(d2) ; rcap(2)");
  add("nested circles", "lcup(1) ; id(u1) * rcup(1) * id(d1) ; id(u1) * lcap(1) * id(d1) ; rcap(1)");
  add("side by side circles", "lcup(1) * rcup(1) ; rcap(1) * lcap(1)");
  add("hopf link",
      "lcup(1) ; id(u1) * rcup(1) * id(d1) ; id(u1 d1) * xo(u1,d1) ; id(u1) * xo(d1,d1) * id(u1) ; "
      "rcap(1) * lcap(1)");
  add("crossed digon circle", "lcup(2) ; split(1,1) * id(d2) ; xo(u1,u1) * id(d2) ; merge(1,1) * id(d2) ; rcap(2)");
  return out;
}

std::vector<RelationEntry> build_catalog() {
  std::vector<RelationEntry> c;
  auto add = [&](std::string id, std::string suite, std::string src, std::string params,
                 std::function<Cases(int)> f) {
    c.push_back({std::move(id), std::move(suite), std::move(src), std::move(params), std::move(f)});
  };
  const std::string thinsrc = "thin oriented relations (all edges labelled 1)";
  add("thin.crossing-differences", "thin", thinsrc, "labels 1", thin_crossing_differences);
  add("thin.turns", "thin", thinsrc, "labels 1", thin_turns);
  add("thin.bubbles", "thin", thinsrc, "labels 1", thin_bubbles);
  add("thin.dot-slides", "thin", thinsrc, "labels 1", thin_dot_slides);
  const std::string twsrc = "twist and rightward cup/cap formulas";
  add("twist.kinks", "twist", twsrc, "k <= 2", twist_kinks);
  add("twist.right-zigzags", "twist", twsrc, "k <= 2", twist_right_zigzags);
  add("twist.dot-turns", "twist", twsrc, "k <= 2", twist_dot_turns);
  add("twist.pitchforks", "twist", twsrc, "k, l <= 2, k + l <= 3 (4 at n = 1)", twist_pitchforks);
  add("bubble.circles", "bubble", "deleting thin bubbles", "labels 1", thin_bubbles);
  add("bubble.left-zigzags", "bubble", "straightening cups and caps", "k <= 2", left_zigzags);
  add("bubble.right-zigzags", "bubble", "straightening cups and caps", "k <= 2", twist_right_zigzags);
  const std::string upsrc = "upward web relations";
  add("upward.associativity", "upward", upsrc, "a + b + c <= 3 (4 at n = 1)", upward_assoc);
  add("upward.digon", "upward", upsrc, "k + l <= 4 (5 at n = 1)", upward_digon);
  add("upward.dot-collision", "upward", upsrc, "k <= 3 (4 at n = 1)", upward_dot_collision);
  add("upward.dot-migration", "upward", upsrc + ", dots past merges and splits", "k + l <= 3 (4 at n = 1)",
      upward_dot_migration);
  add("upward.additional", "upward", "additional upward relations", "k <= 3 (4 at n = 1)", upward_additional);
  const std::string ladsrc = "ladder relations";
  add("ladder.rung-collision", "ladder", ladsrc, "two strands, total label <= 3 (4 at n = 1)", ladder_collision);
  add("ladder.square-switch", "ladder", ladsrc, "two strands, total label <= 3 (4 at n = 1)", ladder_square_switch);
  add("ladder.dotted-square", "ladder", ladsrc, "two strands, total label <= 3 (4 at n = 1)", ladder_dotted_square);
  add("ladder.two-rung-switch", "ladder", ladsrc, "three strands, total label <= 3", ladder_two_rung);
  add("ladder.serre", "ladder", ladsrc, "three strands, total label <= 3", ladder_serre);
  add("hecke.relations", "hecke", "Hecke-Clifford relations on thin strands", "three thin strands", hecke_relations);
  add("untwist.merge-split", "untwist", "untwisting crossings into merges and splits", "k <= 3 (4 at n = 1)", untwist);
  add("clasp.properties", "clasp", "clasp idempotents", "k <= 3 (4 at n = 1)", clasps);
  const std::string brsrc = "braiding relations";
  add("braiding.inverses", "braiding", brsrc, "labels <= 2, k + l <= 3 (4 at n = 1)", braiding_inverses);
  add("braiding.r3", "braiding", brsrc, "small triples", braiding_r3);
  add("braiding.naturality", "braiding", brsrc, "h + k <= 2 (3 at n = 1)", braiding_naturality);
  add("braiding.dots", "braiding", brsrc, "k + l <= 3 (4 at n = 1)", braiding_dots);
  add("closed.zero", "closed", "nonempty closed webs vanish", "corpus", closed_webs);
  return c;
}

}  // namespace

const std::vector<RelationEntry>& relation_catalog() {
  static const std::vector<RelationEntry> cat = build_catalog();
  return cat;
}

const RelationEntry& find_relation(const std::string& id) {
  for (const auto& e : relation_catalog())
    if (e.id == id) return e;
  throw Error(ErrorKind::Unsupported, "unknown relation '" + id + "'");
}

std::vector<std::string> suite_names() {
  std::vector<std::string> out;
  for (const auto& e : relation_catalog())
    if (std::find(out.begin(), out.end(), e.suite) == out.end()) out.push_back(e.suite);
  return out;
}

RelationResult check_case(const std::string& id, const RelationCase& c, const EvalContext& ctx,
                          const VerifyOptions& opt) {
  RelationResult r{id, c.label, false, "", std::nullopt, ""};
  try {
    for (const auto& q0 : opt.screens) {
      EvalContext sc = ctx.specialized(q0);
      sc.cache = std::make_shared<EvalCache>();
      r.mode = "screen q0=" + q0.to_string();
      auto w = first_difference(eval_linear(c.lhs, sc), eval_linear(c.rhs, sc));
      if (w) {
        r.witness = w;
        return r;
      }
    }
    if (opt.symbolic) {
      r.mode = "symbolic";
      auto w = first_difference(eval_linear(c.lhs, ctx), eval_linear(c.rhs, ctx));
      if (w) {
        r.witness = w;
        return r;
      }
    }
    r.pass = true;
  } catch (const Error& e) {
    r.error = e.what();
  }
  return r;
}

std::vector<RelationResult> verify_relation(const std::string& id, const EvalContext& ctx, const VerifyOptions& opt) {
  std::vector<RelationResult> out;
  const auto& e = find_relation(id);
  for (const auto& c : e.cases(ctx.n)) out.push_back(check_case(id, c, ctx, opt));
  return out;
}

std::vector<RelationResult> verify_suite(const std::string& suite, const EvalContext& ctx, const VerifyOptions& opt) {
  std::vector<RelationResult> out;
  bool found = false;
  for (const auto& e : relation_catalog()) {
    if (e.suite != suite && suite != "all") continue;
    found = true;
    auto rs = verify_relation(e.id, ctx, opt);
    out.insert(out.end(), rs.begin(), rs.end());
  }
  if (!found) throw Error(ErrorKind::Unsupported, "unknown suite '" + suite + "'");
  return out;
}

}  // namespace qweb

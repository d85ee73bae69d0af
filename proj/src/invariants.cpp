#include "qweb/invariants.hpp"

#include <numeric>

#include "qweb/error.hpp"

namespace qweb {

LinkPresentation LinkPresentation::parse(const std::string& braid_text) {
  LinkPresentation l;
  l.braid = parse_braid(braid_text);
  return l;
}

LinkPresentation LinkPresentation::unknot(int k, int kinks) {
  if (k < 1) throw Error(ErrorKind::Math, "labels must be positive");
  LinkPresentation l;
  l.braid.labels = {k};
  l.kinks = {kinks};
  return l;
}

namespace {

WebDiagram I(const WebObject& w) { return identity_diagram(w); }
WebDiagram G(const WebGenerator& g) { return diagram_of(g); }

WebDiagram padded(const WebObject& left, const WebDiagram& d, const WebObject& right) {
  WebDiagram r = d;
  if (!left.empty()) r = tensor(I(left), r);
  if (!right.empty()) r = tensor(r, I(right));
  return r;
}

void check_link(const LinkPresentation& link) {
  const int m = link.strands();
  if (m < 1) throw Error(ErrorKind::Parse, "malformed braid: no strands");
  for (int k : link.braid.labels)
    if (k < 1) throw Error(ErrorKind::Parse, "malformed braid: labels must be positive");
  if (!link.kinks.empty() && static_cast<int>(link.kinks.size()) != m)
    throw Error(ErrorKind::Parse, "malformed braid: one kink count per strand");
  for (int x : link.braid.letters)
    if (x == 0 || std::abs(x) >= m) throw Error(ErrorKind::Parse, "malformed braid: crossing index out of range");
}

// Bottom strand index occupying each position after each letter.
std::vector<int> final_positions(const LinkPresentation& link) {
  std::vector<int> at(static_cast<std::size_t>(link.strands()));
  std::iota(at.begin(), at.end(), 0);
  for (int x : link.braid.letters) {
    auto i = static_cast<std::size_t>(std::abs(x) - 1);
    std::swap(at[i], at[i + 1]);
  }
  return at;
}

}  // namespace

WebDiagram kink_diagram(int k, bool positive) {
  const ObjItem u{Orient::Up, k}, d{Orient::Down, k};
  return stack({tensor(G(gen_rcup(k)), I({u})), tensor(I({d}), G(gen_cross(positive, u, u))),
                tensor(G(gen_lcap(k)), I({u}))});
}

ScalarQ framing_factor(int k, int kinks) {
  if (k < 1) throw Error(ErrorKind::Math, "labels must be positive");
  return ScalarQ::q(k * (k - 1) * kinks);
}

std::vector<int> component_framing(const LinkPresentation& link) {
  check_link(link);
  const int m = link.strands();
  const std::vector<int> top = final_positions(link);
  // component id per bottom strand: follow top position p back to bottom p
  std::vector<int> comp(static_cast<std::size_t>(m), -1);
  int nc = 0;
  for (int s = 0; s < m; ++s) {
    if (comp[static_cast<std::size_t>(s)] >= 0) continue;
    int cur = s;
    while (comp[static_cast<std::size_t>(cur)] < 0) {
      comp[static_cast<std::size_t>(cur)] = nc;
      // strand cur ends at the top position p with top[p] == cur, and
      // continues from the bottom of position p
      int p = 0;
      while (top[static_cast<std::size_t>(p)] != cur) ++p;
      cur = p;
    }
    ++nc;
  }
  std::vector<int> w(static_cast<std::size_t>(nc), 0);
  std::vector<int> at(static_cast<std::size_t>(m));
  std::iota(at.begin(), at.end(), 0);
  for (int x : link.braid.letters) {
    auto i = static_cast<std::size_t>(std::abs(x) - 1);
    int a = comp[static_cast<std::size_t>(at[i])], b = comp[static_cast<std::size_t>(at[i + 1])];
    if (a == b) w[static_cast<std::size_t>(a)] += x > 0 ? 1 : -1;
    std::swap(at[i], at[i + 1]);
  }
  if (!link.kinks.empty())
    for (int s = 0; s < m; ++s) w[static_cast<std::size_t>(comp[static_cast<std::size_t>(s)])] += link.kinks[static_cast<std::size_t>(s)];
  std::vector<int> out(static_cast<std::size_t>(m));
  for (int s = 0; s < m; ++s) out[static_cast<std::size_t>(s)] = w[static_cast<std::size_t>(comp[static_cast<std::size_t>(s)])];
  return out;
}

WebDiagram cut_closure(const LinkPresentation& link) {
  check_link(link);
  const int m = link.strands();
  const auto& lab = link.braid.labels;
  WebObject bottom;
  for (int k : lab) bottom.push_back({Orient::Up, k});

  // kinks, then the braid, bottom to top
  std::vector<WebDiagram> mid{I(bottom)};
  if (!link.kinks.empty())
    for (int s = 0; s < m; ++s) {
      const int c = link.kinks[static_cast<std::size_t>(s)];
      WebObject left(bottom.begin(), bottom.begin() + s), right(bottom.begin() + s + 1, bottom.end());
      for (int t = 0; t < std::abs(c); ++t) mid.push_back(padded(left, kink_diagram(lab[static_cast<std::size_t>(s)], c > 0), right));
    }
  WebObject cur = bottom;
  for (int x : link.braid.letters) {
    auto i = static_cast<std::size_t>(std::abs(x) - 1);
    WebObject left(cur.begin(), cur.begin() + static_cast<long>(i)), right(cur.begin() + static_cast<long>(i) + 2, cur.end());
    mid.push_back(padded(left, G(gen_cross(x > 0, cur[i], cur[i + 1])), right));
    std::swap(cur[i], cur[i + 1]);
  }
  if (cur != bottom) throw Error(ErrorKind::Parse, "malformed braid: closure joins strands of different labels");
  WebDiagram braid = stack(mid);
  if (m == 1) return braid;

  // nested rightward cups and leftward caps for strands 1 .. m-1
  WebDiagram cups = G(gen_rcup(lab[0])), caps = G(gen_lcap(lab[0]));
  for (int j = 1; j + 1 < m; ++j) {
    const int k = lab[static_cast<std::size_t>(j)];
    cups = compose(padded({{Orient::Down, k}}, cups, {{Orient::Up, k}}), G(gen_rcup(k)));
    caps = compose(G(gen_lcap(k)), padded({{Orient::Down, k}}, caps, {{Orient::Up, k}}));
  }
  const WebObject last{bottom.back()};
  WebObject returns;
  for (int j = m - 2; j >= 0; --j) returns.push_back({Orient::Down, lab[static_cast<std::size_t>(j)]});
  return stack({tensor(cups, I(last)), padded(returns, braid, {}), tensor(caps, I(last))});
}

ScalarQ tangle_scalar(const LinkPresentation& link, const EvalContext& ctx) {
  return scalar_of(eval_diagram(expand_macros(cut_closure(link)), ctx));
}

ScalarQ invariant(const LinkPresentation& link, const EvalContext& ctx) {
  ScalarQ c = tangle_scalar(link, ctx);
  // one factor per component: take the first strand of each
  const auto fr = component_framing(link);
  const std::vector<int> top = final_positions(link);
  std::vector<bool> done(static_cast<std::size_t>(link.strands()), false);
  for (int s = 0; s < link.strands(); ++s) {
    if (done[static_cast<std::size_t>(s)]) continue;
    int cur = s;
    while (!done[static_cast<std::size_t>(cur)]) {
      done[static_cast<std::size_t>(cur)] = true;
      int p = 0;
      while (top[static_cast<std::size_t>(p)] != cur) ++p;
      cur = p;
    }
    c = c / framing_factor(link.braid.labels[static_cast<std::size_t>(s)], fr[static_cast<std::size_t>(s)]);
  }
  return c;
}

// ---- kappa mode ----

ScalarQ kappa() { return ScalarQ(2) / ScalarQ::qtilde(); }

ScalarQ kappa_coefficient(int k) {
  if (k < 1) throw Error(ErrorKind::Math, "k must be positive");
  const ScalarQ kp = kappa();
  return qint(k - 1) * ScalarQ::q(-1) * (kp + ScalarQ::q(1)) / qint(k) - kp * qint(k - 2) / qint(k);
}

ScalarQ kappa_coefficient_closed(int k) {
  if (k < 1) throw Error(ErrorKind::Math, "k must be positive");
  return (ScalarQ::q(k - 1) + ScalarQ::q(1 - k)) / (qint(k) * ScalarQ::qtilde());
}

ScalarQ kappa_circle(int k) {
  if (k < 1) throw Error(ErrorKind::Math, "k must be positive");
  ScalarQ num(1);
  for (int t = 0; t < k; ++t) num *= ScalarQ::q(t) + ScalarQ::q(-t);
  ScalarQ den = qfact(k);
  for (int t = 0; t < k; ++t) den *= ScalarQ::qtilde();
  return num / den;
}

ScalarQ kappa_circle_recursive(int k) {
  if (k < 1) throw Error(ErrorKind::Math, "k must be positive");
  ScalarQ v(1);
  for (int j = 1; j <= k; ++j) v *= kappa_coefficient(j);
  return v;
}

bool kappa_recursion_check(int k) {
  if (k < 1) throw Error(ErrorKind::Math, "k must be positive");
  for (int j = 1; j <= k; ++j)
    if (kappa_coefficient(j) != kappa_coefficient_closed(j)) return false;
  // the alternate numerator: prod ([t] - [t-2]) over t = 1..k
  ScalarQ alt(1);
  for (int t = 1; t <= k; ++t) alt *= qint(t) - qint(t - 2);
  ScalarQ den = qfact(k);
  for (int t = 0; t < k; ++t) den *= ScalarQ::qtilde();
  return kappa_circle_recursive(k) == kappa_circle(k) && alt / den == kappa_circle(k) &&
         kappa_circle(1) == kappa();
}

}  // namespace qweb

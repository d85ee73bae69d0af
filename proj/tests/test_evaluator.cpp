#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <thread>

#include "qweb/aqhowe.hpp"
#include "qweb/error.hpp"
#include "qweb/evaluator.hpp"
#include "qweb/qsym.hpp"

using namespace qweb;

namespace {

const ScalarQ qt = ScalarQ::qtilde();
const GaussRat q0 = GaussRat::frac(7, 5);

SuperMap ev(const std::string& text, int n) { return eval_diagram(parse_web(text), EvalContext(n)); }

Label vec(int a) { return Label(std::vector<int>{0, a}); }
Label covec(int a) { return Label(std::vector<int>{1, a}); }
Label pair_label(const Label& x, const Label& y) { return x * y; }
ScalarQ sgn(int e) { return ScalarQ((e & 1) ? -1 : 1); }
int par(int a) { return index_parity(a); }

ScalarQ at(const SuperMap& f, const Label& row, const Label& col) {
  int i = f.target().index_of(row), j = f.source().index_of(col);
  REQUIRE(i >= 0);
  REQUIRE(j >= 0);
  return f.entry(i, j);
}

// The thin leftward crossing images written out entry by entry; `extra` is
// the coefficient of the sum attached to a = -b in the first formula.
SuperMap leftward_formula(int n, bool first, const ScalarQ& extra) {
  SuperSpace src = eval_object(parse_web("id(d1 u1)").src, EvalContext(n));
  SuperSpace tgt = eval_object(parse_web("id(u1 d1)").src, EvalContext(n));
  SuperMap f(src, tgt, 0);
  const auto I = index_set(n);
  for (int a : I)
    for (int b : I) {
      const int col = src.index_of(pair_label(covec(a), vec(b)));
      auto put = [&](int x, int y, const ScalarQ& c) { f.add(tgt.index_of(pair_label(vec(x), covec(y))), col, c); };
      put(b, a, sgn(par(a) * par(b)) * ScalarQ::q(phi(b, a)));
      for (int k : I) {
        if (a == b && first && b < k) put(k, k, qt);
        if (a == b && !first && k <= b) put(k, k, -qt);
        if (a == -b && -b < k) put(-k, k, sgn(par(k)) * (first ? extra : qt));
      }
    }
  return f;
}

// Random well-typed diagram on thin strands of both orientations.
WebDiagram random_thin(std::mt19937& rng, const WebObject& start, int height) {
  std::uniform_int_distribution<int> pick(0, 9);
  WebDiagram d = identity_diagram(start);
  for (int h = 0; h < height; ++h) {
    const WebObject cur = d.tgt;
    Slice s;
    std::size_t p = 0;
    while (p < cur.size()) {
      const ObjItem x = cur[p];
      const bool two = p + 1 < cur.size();
      const int c = pick(rng);
      if (c < 3 && two && cur.size() <= 3) {
        s.push_back(gen_cross(c == 0, x, cur[p + 1]));
        p += 2;
      } else if (c < 5) {
        s.push_back(x.o == Orient::Up ? gen_dot(x.k) : gen_ddot(x.k));
        ++p;
      } else if (c < 6 && two && x.o == Orient::Up && cur[p + 1].o == Orient::Up) {
        s.push_back(gen_merge(x.k, cur[p + 1].k));
        p += 2;
      } else if (c < 7 && x.o == Orient::Up && x.k == 2) {
        s.push_back(gen_split(1, 1));
        ++p;
      } else if (c < 8 && two && x.o == Orient::Down && cur[p + 1].o == Orient::Up && x.k == cur[p + 1].k) {
        s.push_back(gen_lcap(x.k));
        p += 2;
      } else if (c < 9 && two && x.o == Orient::Up && cur[p + 1].o == Orient::Down && x.k == cur[p + 1].k) {
        s.push_back(gen_rcap(x.k));
        p += 2;
      } else {
        s.push_back(gen_id({x}));
        ++p;
      }
    }
    d = compose(from_slices({s}), d);
  }
  return d;
}

}  // namespace

TEST_CASE("object spaces") {
  EvalContext c1(1), c2(2);
  CHECK(eval_object(parse_web("id(u1)").src, c1).dim() == 2);
  CHECK(eval_object(parse_web("id(d2)").src, c1).dim() == 2);  // v_1^2 and v_1 v_-1
  CHECK(eval_object(parse_web("id(d2)").src, c2).dim() == 8);
  CHECK(eval_object(parse_web("id(u1 d1)").src, c2).dim() == 16);
  CHECK(eval_object({}, c2).dim() == 1);
  EvalContext small(2, 10);
  try {
    eval_object(parse_web("id(u1 d1)").src, small);
    FAIL("no cap error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::Cap);
    CHECK(std::string(e.what()) == "dimension cap exceeded");
  }
  CHECK(ev("lcup(2) ; rcap(2)", 1).is_zero());
}

TEST_CASE("cap applies to intermediate objects") {
  EvalContext small(2, 20);
  CHECK_NOTHROW(eval_diagram(parse_web("dot(1)"), small));
  CHECK_THROWS_AS(eval_diagram(parse_web("lcup(1) ; rcap(1)"), small), Error);
}

TEST_CASE("dot on a thin strand") {
  SuperMap d = ev("dot(1)", 1);
  CHECK(d.parity() == 1);
  CHECK(at(d, vec(-1), vec(1)) == ScalarQ::i());
  CHECK(at(d, vec(1), vec(-1)) == -ScalarQ::i());
  CHECK(d.nnz() == 2);
  SuperMap d2 = ev("dot(1)", 2);
  for (int b : index_set(2)) CHECK(at(d2, vec(-b), vec(b)) == ScalarQ::i() * sgn(par(b)));
}

TEST_CASE("merge is multiplication and split matches its closed formula") {
  for (int n = 1; n <= 2; ++n) {
    SuperMap m = ev("merge(1,1)", n), s = ev("split(1,1)", n);
    SuperMap t = t_matrix(n);
    for (int a : index_set(n))
      for (int b : index_set(n)) {
        const int col = m.source().index_of(pair_label(vec(a), vec(b)));
        Combo prod = sym_normalize({a, b}, n);
        for (int row = 0; row < m.target().dim(); ++row) {
          auto f = m.target().label(row).factors()[0];
          Word w(f.begin() + 1, f.end());
          auto it = prod.find(w);
          CHECK(m.entry(row, col) == (it == prod.end() ? ScalarQ() : it->second));
        }
      }
    // v_a v_b with a < b (or a = b even) splits as q^-1 v_a (x) v_b + T(v_a (x) v_b)
    for (const auto& mono : sym_basis(2, n)) {
      const int a = mono.idx[0], b = mono.idx[1];
      const int col = s.source().index_of(Label(sym_factor(mono)));
      const int tc = t.source().index_of(pair_label(vec(a), vec(b)));
      for (int row = 0; row < s.target().dim(); ++row) {
        ScalarQ want = t.entry(row, tc);
        if (row == tc) want += ScalarQ::q(-1);
        CHECK(s.entry(row, col) == want);
      }
    }
  }
}

TEST_CASE("rightward cap of label one") {
  for (int n = 1; n <= 2; ++n) {
    SuperMap r = ev("rcap(1)", n);
    for (int a : index_set(n))
      for (int b : index_set(n)) {
        ScalarQ want;
        if (a == b) want = sgn(par(a)) * ScalarQ::q((par(a) ? -2 * a : 2 * a) - (2 * n + 1));
        CHECK(at(r, Label(), pair_label(vec(a), covec(b))) == want);
      }
  }
}

TEST_CASE("thin leftward crossings against their closed formulas") {
  for (int n = 1; n <= 2; ++n) {
    SuperMap under = ev("xu(d1,u1)", n), over = ev("xo(d1,u1)", n);
    CHECK(under == leftward_formula(n, true, qt));
    CHECK(over == leftward_formula(n, false, qt));
    // the first formula read with a bare sum on a = -b is not the image
    CHECK_FALSE(under == leftward_formula(n, true, ScalarQ(1)));
    // the rightward crossings invert them
    CHECK(compose(ev("xo(u1,d1)", n), under) == identity(under.source()));
    CHECK(compose(ev("xu(u1,d1)", n), over) == identity(over.source()));
    CHECK(compose(under, ev("xo(u1,d1)", n)) == identity(under.target()));
  }
}

TEST_CASE("bubbles vanish") {
  for (int n = 1; n <= 2; ++n)
    for (const char* text : {"lcup(1) ; rcap(1)", "rcup(1) ; lcap(1)", "lcup(1) ; dot(1) * id(d1) ; rcap(1)",
                             "rcup(1) ; id(d1) * dot(1) ; lcap(1)", "rcup(1) ; ddot(1) * id(u1) ; lcap(1)"}) {
      INFO(n << " " << text);
      CHECK(ev(text, n).is_zero());
    }
}

TEST_CASE("zigzags straighten") {
  for (int n = 1; n <= 2; ++n)
    for (int k = 1; k <= 2; ++k) {
      const std::string K = std::to_string(k), u = "u" + K, d = "d" + K;
      const std::string texts[] = {
          "lcup(" + K + ") * id(" + u + ") ; id(" + u + ") * lcap(" + K + ")",
          "id(" + d + ") * lcup(" + K + ") ; lcap(" + K + ") * id(" + d + ")",
          "id(" + u + ") * rcup(" + K + ") ; rcap(" + K + ") * id(" + u + ")",
          "rcup(" + K + ") * id(" + d + ") ; id(" + d + ") * rcap(" + K + ")",
      };
      for (const auto& t : texts) {
        INFO(n << " " << t);
        SuperMap f = ev(t, n);
        CHECK(f == identity(f.source()));
      }
    }
}

TEST_CASE("dot squares and digons") {
  for (int k = 1; k <= 2; ++k) {
    const std::string K = std::to_string(k);
    CHECK(scalar_of(ev("dot(" + K + ") ; dot(" + K + ")", 2)) == qint(k, 2));
    CHECK(scalar_of(ev("ddot(" + K + ") ; ddot(" + K + ")", 2)) == -qint(k, 2));
  }
  CHECK(scalar_of(ev("split(1,2) ; merge(1,2)", 2)) == qint(3));
  CHECK(scalar_of(ev("split(1,2) ; merge(1,2)", 2)) == ScalarQ::q(2) + ScalarQ(1) + ScalarQ::q(-2));
}

TEST_CASE("twists") {
  CHECK(scalar_of(ev("rcup(2) * id(u2) ; id(d2) * xo(u2,u2) ; lcap(2) * id(u2)", 2)) == ScalarQ::q(2));
  CHECK(scalar_of(ev("rcup(2) * id(u2) ; id(d2) * xu(u2,u2) ; lcap(2) * id(u2)", 2)) == ScalarQ::q(-2));
  CHECK(scalar_of(ev("rcup(1) * id(u1) ; id(d1) * xo(u1,u1) ; lcap(1) * id(u1)", 2)) == ScalarQ(1));
}

TEST_CASE("thick rightward crossings agree with inverses of leftward ones") {
  for (int n = 1; n <= 2; ++n)
    for (auto [k, l] : std::vector<std::pair<int, int>>{{1, 1}, {2, 1}, {1, 2}})
      for (bool over : {true, false}) {
        EvalContext ctx(n);
        const std::string text = std::string(over ? "xo" : "xu") + "(u" + std::to_string(k) + ",d" + std::to_string(l) + ")";
        INFO(n << " " << text);
        CHECK(eval_diagram(parse_web(text), ctx) == rightward_by_inverse(over, k, l, ctx));
      }
}

TEST_CASE("merge through E agrees with merge through F") {
  const int n = 2;
  for (auto [k, l] : std::vector<std::pair<int, int>>{{1, 1}, {1, 2}, {2, 1}}) {
    SuperMap viaE = ev("merge(" + std::to_string(k) + "," + std::to_string(l) + ")", n);
    const WeightSpace& from = weight_space(2, n, {k, l});
    const WeightSpace& to = weight_space(2, n, {0, k + l});
    SuperMap viaF = operator_matrix(from, to, 0, [&](const AqElement& x) { return divided_power_F(1, k, x, 2, n); });
    // same source and target labels, so compare column by column through labels
    for (int j = 0; j < viaF.source().dim(); ++j) {
      const int jj = viaE.source().index_of(viaF.source().label(j));
      for (const auto& e : viaF.col(j))
        CHECK(at(viaE, viaF.target().label(e.row), viaE.source().label(jj)) == e.val);
    }
    CHECK(viaE.nnz() == viaF.nnz());
  }
}

TEST_CASE("functoriality on random thin diagrams") {
  std::mt19937 rng(3);
  EvalContext ctx(1);
  const std::vector<WebObject> starts{parse_web("id(u1 u1)").src, parse_web("id(u1 d1)").src,
                                      parse_web("id(d1 u1)").src, parse_web("id(u2 u1)").src,
                                      parse_web("id(u1)").src};
  for (int t = 0; t < 30; ++t) {
    const WebObject& s = starts[static_cast<std::size_t>(t) % starts.size()];
    WebDiagram a = random_thin(rng, s, 2);
    WebDiagram b = random_thin(rng, a.tgt, 2);
    INFO(a.to_string() << "  then  " << b.to_string());
    CHECK(eval_diagram(compose(b, a), ctx) == compose(eval_diagram(b, ctx), eval_diagram(a, ctx)));
    WebDiagram c = random_thin(rng, parse_web("id(u1)").src, 1);
    CHECK(eval_diagram(tensor(a, c), ctx) == tensor_map(eval_diagram(a, ctx), eval_diagram(c, ctx)));
    CHECK(eval_diagram(tensor(c, a), ctx) == tensor_map(eval_diagram(c, ctx), eval_diagram(a, ctx)));
  }
}

TEST_CASE("specialization commutes with evaluation") {
  for (int n = 1; n <= 2; ++n) {
    EvalContext sym(n), at_q0 = EvalContext(n).specialized(q0);
    int count = 0;
    for (const auto& e : relation_catalog()) {
      auto cases = e.cases(n);
      for (std::size_t i = 0; i < cases.size() && i < 3; ++i) {
        INFO(e.id << " " << cases[i].label);
        CHECK(specialize(eval_linear(cases[i].lhs, sym), q0) == eval_linear(cases[i].lhs, at_q0));
        ++count;
      }
    }
    CHECK(count > 50);
  }
}

TEST_CASE("every catalog relation holds for n = 1 and n = 2") {
  for (int n = 1; n <= 2; ++n) {
    EvalContext ctx(n);
    for (const auto& e : relation_catalog()) {
      auto rs = verify_relation(e.id, ctx);
      CHECK(!rs.empty());
      for (const auto& r : rs) {
        INFO("n=" << n << " " << r.id << " [" << r.label << "] " << r.mode << " "
                  << (r.witness ? r.witness->to_string() : r.error));
        CHECK(r.pass);
      }
    }
  }
}

TEST_CASE("closed webs evaluate to zero") {
  for (int n = 1; n <= 2; ++n) {
    auto cases = find_relation("closed.zero").cases(n);
    CHECK(cases.size() >= 10);
    for (const auto& c : cases) {
      INFO(c.label);
      CHECK(eval_linear(c.lhs, EvalContext(n)).is_zero());
    }
  }
}

TEST_CASE("a wrong relation fails with a witness") {
  RelationCase bad{"digon with the wrong scalar", lin(parse_web("split(1,1) ; merge(1,1)")),
                   lin(parse_web("id(u2)"), qint(3))};
  RelationResult r = check_case("negative", bad, EvalContext(2));
  CHECK_FALSE(r.pass);
  REQUIRE(r.witness);
  CHECK(r.mode.rfind("screen", 0) == 0);
  VerifyOptions symbolic_only;
  symbolic_only.screens.clear();
  RelationResult s = check_case("negative", bad, EvalContext(2), symbolic_only);
  CHECK_FALSE(s.pass);
  REQUIRE(s.witness);
  CHECK(s.witness->lhs == qint(2));
  CHECK(s.witness->rhs == qint(3));
  CHECK_THROWS_AS(find_relation("no.such.entry"), Error);
  CHECK_THROWS_AS(verify_suite("no-such-suite", EvalContext(1)), Error);
}

TEST_CASE("catalog table") {
  std::set<std::string> ids;
  for (const auto& e : relation_catalog()) {
    CHECK(ids.insert(e.id).second);
    CHECK(!e.source.empty());
    CHECK(!e.params.empty());
  }
  auto suites = suite_names();
  for (const char* s : {"thin", "twist", "bubble", "upward", "ladder", "hecke", "untwist", "clasp", "braiding", "closed"})
    CHECK(std::find(suites.begin(), suites.end(), s) != suites.end());
}

TEST_CASE("images are module maps") {
  const int n = 2;
  EvalContext ctx(n);
  std::vector<std::string> gens{"dot(1)", "dot(2)", "ddot(1)", "ddot(2)", "merge(1,1)", "split(1,1)",
                                "lcup(1)", "lcap(1)", "lcup(2)", "lcap(2)", "rcup(1)", "rcap(1)",
                                "rcup(2)", "rcap(2)", "xo(u1,u1)", "xu(u1,u1)", "xo(u1,d1)", "xu(u1,d1)",
                                "xo(d1,u1)", "xu(d1,u1)", "xo(u2,u1)", "xo(u1,u2)", "xo(d1,d1)",
                                "dmerge(1,1)", "dsplit(1,1)", "clasp(2)", "merge(1,2)", "split(2,1)"};
  for (const auto& g : gens) {
    INFO(g);
    EquivarianceResult r = verify_equivariance(parse_web(g), ctx);
    CHECK(r.pass);
  }
  // odd dot against the odd generator at n = 1
  EquivarianceResult d1 = verify_equivariance(parse_web("dot(1)"), EvalContext(1));
  CHECK(d1.pass);
}

TEST_CASE("a corrupted dot is not a module map") {
  SuperMap d = ev("dot(1)", 2);
  const WebObject obj = parse_web("id(u1)").src;
  CHECK(check_equivariance(d, obj, obj, 2).pass);
  SuperMap bad = d;
  bad.set_col(0, {Entry{d.col(0)[0].row, -d.col(0)[0].val}});
  EquivarianceResult r = check_equivariance(bad, obj, obj, 2);
  CHECK_FALSE(r.pass);
  CHECK(!r.generator.empty());
  CHECK(r.witness.has_value());
}

TEST_CASE("shared cache under concurrent verification") {
  EvalContext ctx(2);
  std::vector<std::vector<RelationResult>> out(4);
  std::vector<std::thread> ts;
  const char* suites[] = {"hecke", "thin", "braiding", "ladder"};
  for (int i = 0; i < 4; ++i) ts.emplace_back([&, i] { out[static_cast<std::size_t>(i)] = verify_suite(suites[i], ctx); });
  for (auto& t : ts) t.join();
  for (const auto& rs : out)
    for (const auto& r : rs) CHECK(r.pass);
  // a second run reuses the cache and agrees
  for (int i = 0; i < 4; ++i) CHECK(verify_suite(suites[i], ctx).size() == out[static_cast<std::size_t>(i)].size());
}

TEST_CASE("downward crossings agree with the mate of the upward ones") {
  for (int n : {1, 2})
    for (int k : {1, 2})
      for (int l : {1, 2})
        for (bool over : {true, false}) {
          if (n == 2 && k + l > 3) continue;  // the bent object is too large
          INFO("n=" << n << " k=" << k << " l=" << l << " over=" << over);
          EvalContext ctx(n, 1 << 20);
          const ObjItem uk{Orient::Up, k}, ul{Orient::Up, l}, dk{Orient::Down, k}, dl{Orient::Down, l};
          CHECK(eval_diagram(expand_macros(mate(diagram_of(gen_cross(over, uk, ul)))), ctx) ==
                eval_diagram(expand_macros(diagram_of(gen_cross(over, dk, dl))), ctx));
        }
  // the 2,2 case at n = 2 stays under the default cap
  CHECK(verify_equivariance(parse_web("xo(d2,d2)"), EvalContext(2)).pass);
}

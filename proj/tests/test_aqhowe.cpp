#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <functional>

#include "ideal_oracle.hpp"
#include "qweb/aqhowe.hpp"
#include "qweb/error.hpp"

using namespace qweb;

namespace {

const ScalarQ qt = ScalarQ::qtilde();
ScalarQ qq(int e) { return ScalarQ::q(e); }
int par(int i) { return index_parity(i); }
ScalarQ sgn(int e) { return ScalarQ((e & 1) ? -1 : 1); }

AqElement mono(const AqWord& w, int m, int n) { return aq_normalize(m, n, w); }

// Every instance of the defining relation with a, c in I_{m|m} and b, d in I_{n|n}.
std::vector<Combo> defining_relations(const AqAlgebra& alg) {
  const int m = alg.m(), n = alg.n();
  std::vector<Combo> rels;
  auto t = [&](int a, int b, int c, int d) { return Word{alg.gid({a, b}), alg.gid({c, d})}; };
  for (int a : index_set(m))
    for (int c : index_set(m))
      for (int b : index_set(n))
        for (int d : index_set(n)) {
          Combo r;
          combo_add(r, t(a, b, c, d), qq(phi(a, c)) * sgn((par(a) + par(b)) * (par(c) + par(d))));
          if (c < a) combo_add(r, t(c, b, a, d), qt * sgn(par(c) + (par(b) + par(c)) * (par(c) + par(d))));
          if (c < -a)
            combo_add(r, t(-c, b, -a, d), qt * sgn(par(c) + (par(b) + par(c) + 1) * (par(c) + par(d))));
          combo_add(r, t(c, d, a, b), -qq(phi(b, d)));
          if (b < d) combo_add(r, t(c, b, a, d), -qt * sgn(par(b) + (par(b) + par(d)) * (par(c) + par(b))));
          if (-b < d)
            combo_add(r, t(c, -b, a, -d), qt * sgn(par(b) + (par(b) + par(c) + 1) * (par(b) + par(d) + 1)));
          if (!r.empty()) rels.push_back(r);
        }
  return rels;
}

// Each word of length d over N generators, in order.
void for_words(int N, int d, const std::function<void(const Word&)>& f) {
  Word w(static_cast<std::size_t>(d), 0);
  while (true) {
    f(w);
    int k = d - 1;
    while (k >= 0 && w[static_cast<std::size_t>(k)] == N - 1) w[static_cast<std::size_t>(k--)] = 0;
    if (k < 0) return;
    ++w[static_cast<std::size_t>(k)];
  }
}

}  // namespace

TEST_CASE("normalization examples") {
  AqElement x = mono({{1, 1}, {2, 1}}, 2, 2);
  CHECK(x.size() == 1);
  CHECK(x.at({{1, 1}, {2, 1}}).is_one());
  CHECK(mono({{1, -1}, {1, -1}}, 2, 2).empty());
  AqElement y = mono({{2, 1}, {1, 1}}, 2, 2);
  CHECK(y.size() == 2);
  CHECK(y.at({{1, 1}, {2, 1}}) == qq(-1));
  CHECK(y.at({{1, -1}, {2, -1}}) == qt);
  // folding
  AqElement z = mono({{-1, 1}}, 2, 2);
  CHECK(z.at({{1, -1}}).is_one());
}

TEST_CASE("normalization agrees with the ideal-quotient oracle, m = n = 2, degree <= 3") {
  const AqAlgebra& alg = AqAlgebra::get(2, 2);
  const int N = 8;
  auto normal = [&](const Word& w) {
    AqWord v;
    for (int g : w) v.push_back(alg.factor(g));
    return alg.is_normal(v);
  };
  auto grade = [&](int g) {
    auto f = alg.factor(g);
    return std::make_pair(f.first, std::abs(f.second));
  };
  oracle::IdealQuotient oq(N, normal, defining_relations(alg), grade);
  int checked = 0;
  for (int d = 1; d <= 3; ++d)
    for_words(N, d, [&](const Word& w) {
      AqWord v;
      for (int g : w) v.push_back(alg.factor(g));
      AqElement got = alg.normalize(v);
      AqElement want;
      for (const auto& [u, c] : oq.coords(w)) {
        AqWord x;
        for (int g : u) x.push_back(alg.factor(g));
        want[x] = c;
      }
      CHECK(got == want);
      ++checked;
    });
  CHECK(checked == 8 + 64 + 512);
}

TEST_CASE("single-factor action tables") {
  for (int b : index_set(2)) {
    AqElement x = act({Side::M, GenKind::E, 1}, AqElement{{{{2, b}}, ScalarQ(1)}}, 2, 2);
    CHECK(x == AqElement{{{{1, b}}, ScalarQ(1)}});
  }
  for (int a = 1; a <= 2; ++a) {
    AqElement x = act({Side::N, GenKind::Kbar, 1}, AqElement{{{{a, 1}}, ScalarQ(1)}}, 2, 2);
    CHECK(x == AqElement{{{{a, -1}}, ScalarQ(1)}});
  }
  AqElement w = mono({{1, 1}, {1, 2}}, 2, 2);
  CHECK(act({Side::M, GenKind::K, 1}, w, 2, 2) == aq_scaled(w, qq(2)));
  // m-side Kbar_1 on a single factor carries sqrt(-1)
  auto kb = act_factor({Side::M, GenKind::Kbar, 1}, {1, -2});
  REQUIRE(kb.size() == 1);
  CHECK(kb[0].first == AqFactor{1, 2});
  CHECK(kb[0].second == -ScalarQ::i());
  CHECK_THROWS_WITH(act({Side::M, GenKind::Ebar, 1}, mono({{2, 1}, {2, 2}}, 2, 2), 2, 2), "unsupported generator");
  CHECK_THROWS_WITH(act({Side::M, GenKind::Kbar, 2}, mono({{2, 1}, {2, 2}}, 2, 2), 2, 2), "unsupported generator");
}

TEST_CASE("divided powers") {
  const int m = 2, n = 2;
  for (int x : index_set(n))
    for (int y : index_set(n)) {
      AqElement src = mono({{2, x}, {2, y}}, m, n);
      if (src.empty()) continue;
      // act on the unnormalized product so the closed form applies verbatim
      AqElement raw{{{{2, x}, {2, y}}, ScalarQ(1)}};
      AqElement e2 = divided_power_E(1, 2, AqAlgebra::get(m, n).normalize(raw), m, n);
      CHECK(e2 == mono({{1, x}, {1, y}}, m, n));
      AqElement e1 = divided_power_E(1, 1, AqAlgebra::get(m, n).normalize(raw), m, n);
      CHECK(e1 == aq_sum(aq_scaled(mono({{1, x}, {2, y}}, m, n), qq(1)), mono({{2, x}, {1, y}}, m, n)));
    }
  CHECK(divided_power_E(1, 3, mono({{1, 1}}, 2, 1), 2, 1).empty());
  // closed q^gamma sums for pure monomials of length 3
  const int b = 3;
  for (int a = 1; a <= b; ++a)
    for_words(2, b, [&](const Word& xs0) {
      std::vector<int> xs;
      for (int g : xs0) xs.push_back(g == 0 ? 1 : -2);  // mix even and odd entries
      AqWord w;
      for (int x : xs) w.push_back({2, x});
      AqElement src = AqAlgebra::get(m, n).normalize(AqElement{{w, ScalarQ(1)}});
      AqElement want;
      for_words(2, b, [&](const Word& pick) {
        int ones = 0;
        for (int p : pick) ones += p == 0;
        if (ones != a) return;
        int gamma = 0;
        for (int p = 0; p < b; ++p)
          for (int q2 = p + 1; q2 < b; ++q2) gamma += pick[static_cast<std::size_t>(p)] == 0 && pick[static_cast<std::size_t>(q2)] == 1;
        AqWord u;
        for (int p = 0; p < b; ++p) u.push_back({pick[static_cast<std::size_t>(p)] == 0 ? 1 : 2, xs[static_cast<std::size_t>(p)]});
        for (const auto& [v, c] : mono(u, m, n)) aq_add(want, v, c * qq(gamma));
      });
      CHECK(divided_power_E(1, a, src, m, n) == want);
    });
}

TEST_CASE("the two actions supercommute on degree <= 2, m = n = 2") {
  const int m = 2, n = 2;
  const AqAlgebra& alg = AqAlgebra::get(m, n);
  std::vector<AqWord> monos;
  for (int d = 0; d <= 2; ++d)
    for_words(8, d, [&](const Word& w) {
      AqWord v;
      for (int g : w) v.push_back(alg.factor(g));
      if (alg.is_normal(v)) monos.push_back(v);
    });
  for (const auto& g : generating_set(Side::M, m))
    for (const auto& h : generating_set(Side::N, n))
      for (const auto& w : monos) {
        AqElement x{{w, ScalarQ(1)}};
        AqElement lhs = act(g, act(h, x, m, n), m, n);
        AqElement rhs = act(h, act(g, x, m, n), m, n);
        if (g.parity() && h.parity()) rhs = aq_scaled(rhs, ScalarQ(-1));
        CHECK_MESSAGE(lhs == rhs, g.to_string() << " " << h.to_string());
      }
}

TEST_CASE("weight-space dimensions") {
  CHECK(weight_space(1, 3, {1}).space.dim() == 6);
  CHECK(weight_space(2, 1, {1, 1}).space.dim() == 4);
  CHECK(weight_space(2, 2, {2, 0}).space.dim() == 8);
  for (int m = 1; m <= 2; ++m)
    for (int n = 1; n <= 2; ++n) {
      const AqAlgebra& alg = AqAlgebra::get(m, n);
      const int N = 2 * m * n;
      for (int d = 0; d <= 4; ++d) {
        std::map<std::vector<int>, long> counted;
        for_words(N, d, [&](const Word& w) {
          AqWord v;
          for (int g : w) v.push_back(alg.factor(g));
          if (alg.is_normal(v)) ++counted[weight_of(v, m)];
        });
        for (const auto& [lam, c] : counted) {
          long prod = 1;
          for (int l : lam) prod *= sym_dim(l, n);
          CHECK(prod == c);
          CHECK(weight_space(m, n, lam).space.dim() == c);
        }
      }
    }
  auto rows = as_tensor_of_sym({{1, -1}, {1, 2}, {2, 1}}, 2);
  CHECK(rows[0].idx == std::vector<int>{-1, 2});
  CHECK(from_rows(rows) == AqWord{{1, -1}, {1, 2}, {2, 1}});
}

TEST_CASE("dual action") {
  SuperMap k = dual_action({Side::N, GenKind::K, 1}, 1, 1);
  SuperSpace d = k.source();
  int v1 = d.index_of(Label(std::vector<int>{1, 1}));
  int vm1 = d.index_of(Label(std::vector<int>{1, -1}));
  CHECK(k.entry(v1, v1) == qq(-1));
  SuperMap kb = dual_action({Side::N, GenKind::Kbar, 1}, 1, 1);
  // Kbar v_1^* = -(Kbar v_{-1})-coefficient: v_1^* -> -v_{-1}^*, v_{-1}^* -> v_1^*
  CHECK(kb.entry(vm1, v1) == ScalarQ(-1));
  CHECK(kb.entry(v1, vm1) == ScalarQ(1));
  CHECK(kb.parity() == 1);
  CHECK_THROWS_WITH(dual_action({Side::N, GenKind::Ebar, 1}, 1, 2), "unsupported generator");
  // evaluation V^* (x) V -> K is a module map
  for (int n = 1; n <= 2; ++n)
    for (int kdeg = 1; kdeg <= 2; ++kdeg) {
      std::vector<ModuleFactor> fs{{kdeg, true}, {kdeg, false}};
      SuperSpace src = module_space(fs, n);
      SuperMap ev(src, SuperSpace::unit(), 0);
      for (int j = 0; j < src.dim(); ++j) {
        auto f = src.label(j).factors();
        if (std::vector<int>(f[0].begin() + 1, f[0].end()) == std::vector<int>(f[1].begin() + 1, f[1].end()))
          ev.add(0, j, ScalarQ(1));
      }
      for (const auto& g : generating_set(Side::N, n)) {
        SuperMap lhs = compose(ev, tensor_action(g, fs, n));
        SuperMap rhs = compose(tensor_action(g, {}, n), ev);
        CHECK_MESSAGE(lhs == rhs, g.to_string());
      }
    }
}

// ---- relations of the idempotented category, as operators on weight spaces ----

namespace {

struct UdotModel {
  int m, n;
  bool valid(const std::vector<int>& lam) const {
    for (int x : lam)
      if (x < 0) return false;
    return true;
  }
  SuperSpace space(const std::vector<int>& lam) const {
    return valid(lam) ? weight_space(m, n, lam).space : SuperSpace();
  }
  // Kbar_i on products through Delta(Kbar_i) = Kbar_i (x) K_i + K_i^-1 (x) Kbar_i.
  AqElement kbar(int i, const AqElement& x) const {
    const AqAlgebra& alg = AqAlgebra::get(m, n);
    AqElement out;
    for (const auto& [w, c] : x) {
      int before = 0;
      for (std::size_t j = 0; j < w.size(); ++j) {
        for (const auto& [f, v] : act_factor({Side::M, GenKind::Kbar, i}, w[j])) {
          int e = 0;
          for (std::size_t p = 0; p < w.size(); ++p)
            if (w[p].first == i && p != j) e += p < j ? -1 : 1;
          ScalarQ coef = c * v * qq(e);
          if (before) coef = -coef;
          AqWord u = w;
          u[j] = f;
          for (const auto& [y, d] : alg.normalize(u)) aq_add(out, y, coef * d);
        }
        before ^= index_parity(w[j].second);
      }
    }
    return out;
  }
  // Matrix of a basic generator on lam; names E, F, Kb, Eb, Fb.
  std::pair<SuperMap, std::vector<int>> gen(const std::string& name, int i, const std::vector<int>& lam) const {
    std::vector<int> mu = lam;
    auto ii = static_cast<std::size_t>(i);
    int par = 0;
    if (name == "E" || name == "Eb") {
      ++mu[ii - 1];
      --mu[ii];
    } else if (name == "F" || name == "Fb") {
      --mu[ii - 1];
      ++mu[ii];
    }
    if (name == "Kb" || name == "Eb" || name == "Fb") par = 1;
    if (!valid(lam) || !valid(mu)) return {SuperMap(space(lam), space(mu), par), mu};
    const WeightSpace& from = weight_space(m, n, lam);
    const WeightSpace& to = weight_space(m, n, mu);
    auto li = lam[ii - 1];
    if (name == "E") return {action_matrix({Side::M, GenKind::E, i}, m, n, lam), mu};
    if (name == "F") return {action_matrix({Side::M, GenKind::F, i}, m, n, lam), mu};
    if (name == "Kb") return {operator_matrix(from, to, 1, [&](const AqElement& x) { return kbar(i, x); }), mu};
    if (name == "Eb") {
      // Ebar_i 1_lam = q^{lam_i} (Kbar_i E_i - q E_i Kbar_i) 1_lam
      SuperMap a = compose(gen("Kb", i, mu).first, gen("E", i, lam).first);
      SuperMap b = compose(gen("E", i, lam).first, gen("Kb", i, lam).first);
      return {(a - b.scaled(qq(1))).scaled(qq(li)), mu};
    }
    // Fbar_i 1_lam = -q^{-lam_i} (Kbar_i F_i - q F_i Kbar_i) 1_lam
    SuperMap a = compose(gen("Kb", i, mu).first, gen("F", i, lam).first);
    SuperMap b = compose(gen("F", i, lam).first, gen("Kb", i, lam).first);
    return {(a - b.scaled(qq(1))).scaled(-qq(-li)), mu};
  }
  // Product of generators applied right to left, starting at lam.
  SuperMap word(const std::vector<std::pair<std::string, int>>& w, const std::vector<int>& lam) const {
    std::vector<int> cur = lam;
    SuperMap out = identity(space(lam));
    for (auto it = w.rbegin(); it != w.rend(); ++it) {
      auto [g, mu] = gen(it->first, it->second, cur);
      out = compose(g, out);
      cur = mu;
    }
    return out;
  }
};

void all_weights(int m, int total, const std::function<void(const std::vector<int>&)>& f) {
  std::vector<int> lam(static_cast<std::size_t>(m), 0);
  std::function<void(int, int)> rec = [&](int i, int left) {
    if (i == m - 1) {
      lam[static_cast<std::size_t>(i)] = left;
      f(lam);
      return;
    }
    for (int x = 0; x <= left; ++x) {
      lam[static_cast<std::size_t>(i)] = x;
      rec(i + 1, left - x);
    }
  };
  rec(0, total);
}

}  // namespace

TEST_CASE("derived barred generators match the single-factor tables") {
  for (int m = 2; m <= 3; ++m) {
    const int n = 2;
    UdotModel U{m, n};
    all_weights(m, 1, [&](const std::vector<int>& lam) {
      for (int i = 1; i < m; ++i) {
        auto [eb, mu] = U.gen("Eb", i, lam);
        if (U.valid(mu)) CHECK(eb == action_matrix({Side::M, GenKind::Ebar, i}, m, n, lam));
        auto [fb, nu] = U.gen("Fb", i, lam);
        if (U.valid(nu)) CHECK(fb == action_matrix({Side::M, GenKind::Fbar, i}, m, n, lam));
      }
    });
  }
}

TEST_CASE("defining relations of the idempotented category hold on weight spaces") {
  using W = std::vector<std::pair<std::string, int>>;
  for (int m = 2; m <= 3; ++m)
    for (int n = 1; n <= 2; ++n) {
      UdotModel U{m, n};
      for (int total = 0; total <= 3; ++total)
        all_weights(m, total, [&](const std::vector<int>& lam) {
          auto L = [&](int i) { return lam[static_cast<std::size_t>(i - 1)]; };
          auto id = identity(U.space(lam));
          auto chk = [&](const SuperMap& a, const SuperMap& b, const std::string& what) {
            CHECK_MESSAGE(a == b, what << " m=" << m << " n=" << n << " lam=" << lam[0] << "," << lam[1]);
          };
          for (int i = 1; i < m; ++i)
            for (int j = 1; j < m; ++j) {
              SuperMap ef = U.word({{"E", i}, {"F", j}}, lam) - U.word({{"F", j}, {"E", i}}, lam);
              chk(ef, i == j ? id.scaled(qint(L(i) - L(i + 1))) : ef.scaled(0), "EF-FE");
              if (std::abs(i - j) == 1) {
                for (std::string e : {"E", "F"}) {
                  SuperMap s = U.word({{e, i}, {e, i}, {e, j}}, lam) -
                               U.word({{e, i}, {e, j}, {e, i}}, lam).scaled(qint(2)) + U.word({{e, j}, {e, i}, {e, i}}, lam);
                  chk(s, s.scaled(0), "Serre " + e);
                  std::string eb = e + "b";
                  SuperMap sb = U.word({{e, i}, {e, i}, {eb, j}}, lam) -
                                U.word({{e, i}, {eb, j}, {e, i}}, lam).scaled(qint(2)) +
                                U.word({{eb, j}, {e, i}, {e, i}}, lam);
                  chk(sb, sb.scaled(0), "barred Serre " + e);
                }
              }
              SuperMap efb = U.word({{"E", i}, {"Fb", j}}, lam) - U.word({{"Fb", j}, {"E", i}}, lam);
              SuperMap ebf = U.word({{"Eb", i}, {"F", j}}, lam) - U.word({{"F", j}, {"Eb", i}}, lam);
              if (i == j) {
                chk(efb, U.word({{"Kb", i}}, lam).scaled(qq(-L(i + 1))) - U.word({{"Kb", i + 1}}, lam).scaled(qq(-L(i))),
                    "E Fbar");
                chk(ebf, U.word({{"Kb", i}}, lam).scaled(qq(L(i + 1))) - U.word({{"Kb", i + 1}}, lam).scaled(qq(L(i))),
                    "Ebar F");
              } else {
                chk(efb, efb.scaled(0), "E Fbar far");
                chk(ebf, ebf.scaled(0), "Ebar F far");
              }
            }
          for (int i = 1; i <= m; ++i)
            for (int j = 1; j <= m; ++j) {
              SuperMap kk = U.word({{"Kb", i}, {"Kb", j}}, lam) + U.word({{"Kb", j}, {"Kb", i}}, lam);
              chk(kk, i == j ? id.scaled(qint(L(i), 2) * 2) : id.scaled(0), "Kbar Kbar");
            }
          for (int i = 1; i <= m; ++i)
            for (int j = 1; j < m; ++j) {
              if (j == i) continue;
              if (j == i - 1) {
                // (q Kbar_i E_{i-1} - E_{i-1} Kbar_i) 1_lam = -q^{-(lam_i - 1)} Ebar_{i-1} 1_lam
                chk(U.word({{"Kb", i}, {"E", j}}, lam).scaled(qq(1)) - U.word({{"E", j}, {"Kb", i}}, lam),
                    U.word({{"Eb", j}}, lam).scaled(-qq(1 - L(i))), "Kbar E_{i-1}");
                // (q Kbar_i F_{i-1} - F_{i-1} Kbar_i) 1_lam = q^{lam_i + 1} Fbar_{i-1} 1_lam
                chk(U.word({{"Kb", i}, {"F", j}}, lam).scaled(qq(1)) - U.word({{"F", j}, {"Kb", i}}, lam),
                    U.word({{"Fb", j}}, lam).scaled(qq(L(i) + 1)), "Kbar F_{i-1}");
              } else {
                SuperMap a = U.word({{"Kb", i}, {"E", j}}, lam) - U.word({{"E", j}, {"Kb", i}}, lam);
                chk(a, a.scaled(0), "Kbar E far");
                SuperMap b = U.word({{"Kb", i}, {"F", j}}, lam) - U.word({{"F", j}, {"Kb", i}}, lam);
                chk(b, b.scaled(0), "Kbar F far");
              }
            }
          for (int i = 1; i < m; ++i) {
            SuperMap a = U.word({{"E", i}, {"Eb", i}}, lam) - U.word({{"Eb", i}, {"E", i}}, lam);
            chk(a, a.scaled(0), "E Ebar");
            SuperMap b = U.word({{"F", i}, {"Fb", i}}, lam) - U.word({{"Fb", i}, {"F", i}}, lam);
            chk(b, b.scaled(0), "F Fbar");
          }
          for (int i = 1; i + 1 < m; ++i) {
            chk(U.word({{"E", i}, {"E", i + 1}}, lam) - U.word({{"E", i + 1}, {"E", i}}, lam).scaled(qq(1)),
                U.word({{"Eb", i}, {"Eb", i + 1}}, lam) + U.word({{"Eb", i + 1}, {"Eb", i}}, lam).scaled(qq(1)), "EE");
            chk(U.word({{"F", i + 1}, {"F", i}}, lam).scaled(qq(1)) - U.word({{"F", i}, {"F", i + 1}}, lam),
                U.word({{"Fb", i}, {"Fb", i + 1}}, lam) + U.word({{"Fb", i + 1}, {"Fb", i}}, lam).scaled(qq(1)), "FF");
          }
        });
    }
}

TEST_CASE("far commutation needs m = 4") {
  UdotModel U{4, 1};
  for (int total = 0; total <= 2; ++total)
    all_weights(4, total, [&](const std::vector<int>& lam) {
      for (std::string e : {"E", "F"})
        for (std::string f : {"E", "F"}) {
          SuperMap d = U.word({{e, 1}, {f, 3}}, lam) - U.word({{f, 3}, {e, 1}}, lam);
          if (e == f) CHECK(d == d.scaled(0));
        }
    });
}

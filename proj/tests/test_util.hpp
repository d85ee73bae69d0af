// Small helpers shared by the test programs.
#pragma once

#include <random>

#include "qweb/superlinear.hpp"

namespace testutil {

using qweb::GaussRat;
using qweb::Laurent;
using qweb::ScalarQ;

inline Laurent random_laurent(std::mt19937& rng, int lo, int hi, int maxc) {
  std::uniform_int_distribution<int> c(-maxc, maxc);
  Laurent p;
  for (int e = lo; e <= hi; ++e) p += Laurent::monomial(e, GaussRat(mpq_class(c(rng)), mpq_class(c(rng) / 2)));
  return p;
}

inline ScalarQ random_scalar(std::mt19937& rng) {
  Laurent num = random_laurent(rng, -2, 2, 3);
  Laurent den = random_laurent(rng, -1, 1, 2);
  if (den.is_zero()) den = Laurent(GaussRat(1));
  return ScalarQ(num, den);
}

// Random parity-homogeneous sparse map.
inline qweb::SuperMap random_map(std::mt19937& rng, const qweb::SuperSpace& src, const qweb::SuperSpace& tgt,
                                 int parity, double density = 0.5) {
  qweb::SuperMap f(src, tgt, parity);
  std::uniform_real_distribution<double> u(0, 1);
  std::uniform_int_distribution<int> c(-3, 3);
  for (int j = 0; j < src.dim(); ++j)
    for (int i = 0; i < tgt.dim(); ++i)
      if (((src.parity(j) + tgt.parity(i) + parity) & 1) == 0 && u(rng) < density)
        f.add(i, j, ScalarQ(Laurent::monomial(c(rng), GaussRat(c(rng)))));
  return f;
}

inline qweb::SuperSpace space_pq(int even, int odd, int tag = 0) {
  std::vector<qweb::Label> l;
  std::vector<std::uint8_t> p;
  for (int k = 0; k < even + odd; ++k) {
    l.emplace_back(std::vector<int>{tag, k});
    p.push_back(k < even ? 0 : 1);
  }
  return qweb::SuperSpace(l, p);
}

}  // namespace testutil

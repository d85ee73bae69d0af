// Exact arithmetic in Q(i)(q): Gaussian rationals, Laurent polynomials and
// reduced rational functions, plus quantum integers and binomials.
#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

namespace qweb {

class GaussRat {
 public:
  mpq_class re, im;

  GaussRat() = default;
  GaussRat(long v) : re(v), im(0) {}  // NOLINT
  GaussRat(mpq_class r, mpq_class i = 0) : re(std::move(r)), im(std::move(i)) {
    re.canonicalize();
    im.canonicalize();
  }
  static GaussRat I() { return GaussRat(0, 1); }
  static GaussRat frac(long num, long den) { return GaussRat(mpq_class(num, den)); }

  bool is_zero() const { return sgn(re) == 0 && sgn(im) == 0; }
  bool is_one() const { return re == 1 && sgn(im) == 0; }
  bool is_real() const { return sgn(im) == 0; }

  GaussRat operator-() const { return GaussRat(-re, -im); }
  GaussRat& operator+=(const GaussRat& o);
  GaussRat& operator-=(const GaussRat& o);
  GaussRat& operator*=(const GaussRat& o);
  GaussRat& operator/=(const GaussRat& o);
  GaussRat inverse() const;

  friend GaussRat operator+(GaussRat a, const GaussRat& b) { return a += b; }
  friend GaussRat operator-(GaussRat a, const GaussRat& b) { return a -= b; }
  friend GaussRat operator*(GaussRat a, const GaussRat& b) { return a *= b; }
  friend GaussRat operator/(GaussRat a, const GaussRat& b) { return a /= b; }
  friend bool operator==(const GaussRat& a, const GaussRat& b) {
    return a.re == b.re && a.im == b.im;
  }
  friend bool operator!=(const GaussRat& a, const GaussRat& b) { return !(a == b); }

  // "re" or "(re,im)" style text; see to_string for the pretty form.
  std::string to_pair() const;
  std::string to_string() const;
  std::size_t hash() const;
};

// Laurent polynomial sum_j coef[j] q^(low + j); trimmed so that coef is empty
// (the zero polynomial) or has nonzero first and last entries.
class Laurent {
 public:
  int low = 0;
  std::vector<GaussRat> coef;

  Laurent() = default;
  Laurent(const GaussRat& c, int e = 0);  // NOLINT
  static Laurent monomial(int e, const GaussRat& c = GaussRat(1)) { return Laurent(c, e); }

  bool is_zero() const { return coef.empty(); }
  bool is_one() const { return coef.size() == 1 && low == 0 && coef[0].is_one(); }
  int high() const { return low + static_cast<int>(coef.size()) - 1; }
  std::size_t terms() const;
  const GaussRat& lead() const { return coef.back(); }
  GaussRat at(int e) const;

  void trim();
  Laurent operator-() const;
  Laurent& operator+=(const Laurent& o);
  Laurent& operator-=(const Laurent& o);
  friend Laurent operator+(Laurent a, const Laurent& b) { return a += b; }
  friend Laurent operator-(Laurent a, const Laurent& b) { return a -= b; }
  friend Laurent operator*(const Laurent& a, const Laurent& b);
  Laurent scaled(const GaussRat& c) const;
  Laurent shifted(int e) const;
  friend bool operator==(const Laurent& a, const Laurent& b) {
    return a.low == b.low && a.coef == b.coef;
  }
  friend bool operator!=(const Laurent& a, const Laurent& b) { return !(a == b); }

  GaussRat eval(const GaussRat& q0) const;  // caller guarantees q0 != 0 when low < 0
  std::size_t hash() const;
};

// Polynomial helpers over Q(i); arguments must have low >= 0.
Laurent poly_divmod(const Laurent& a, const Laurent& b, Laurent* rem);
Laurent poly_gcd(Laurent a, Laurent b);

// Element of Q(i)(q) in canonical form: den is a polynomial with nonzero
// constant term and leading coefficient 1, and gcd(num, den) = 1.
class ScalarQ {
 public:
  ScalarQ() : den_(GaussRat(1)) {}
  ScalarQ(long v) : num_(GaussRat(v)), den_(GaussRat(1)) {}  // NOLINT
  ScalarQ(const GaussRat& c) : num_(c), den_(GaussRat(1)) {}  // NOLINT
  ScalarQ(const Laurent& p) : num_(p), den_(GaussRat(1)) {}   // NOLINT
  ScalarQ(const Laurent& num, const Laurent& den);

  static ScalarQ q(int e = 1) { return ScalarQ(Laurent::monomial(e)); }
  static ScalarQ qtilde();  // q - q^-1
  static ScalarQ i() { return ScalarQ(GaussRat::I()); }

  const Laurent& num() const { return num_; }
  const Laurent& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const { return den_.is_one() && num_.is_one(); }
  bool is_laurent() const { return den_.is_one(); }
  bool is_constant() const { return den_.is_one() && (num_.is_zero() || (num_.coef.size() == 1 && num_.low == 0)); }
  std::size_t terms() const { return num_.terms() + den_.terms(); }

  ScalarQ operator-() const;
  ScalarQ& operator+=(const ScalarQ& o);
  ScalarQ& operator-=(const ScalarQ& o);
  ScalarQ& operator*=(const ScalarQ& o);
  ScalarQ& operator/=(const ScalarQ& o);
  ScalarQ inverse() const;
  friend ScalarQ operator+(ScalarQ a, const ScalarQ& b) { return a += b; }
  friend ScalarQ operator-(ScalarQ a, const ScalarQ& b) { return a -= b; }
  friend ScalarQ operator*(ScalarQ a, const ScalarQ& b) { return a *= b; }
  friend ScalarQ operator/(ScalarQ a, const ScalarQ& b) { return a /= b; }
  friend bool operator==(const ScalarQ& a, const ScalarQ& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const ScalarQ& a, const ScalarQ& b) { return !(a == b); }

  // this += a * b without building the temporary when both are Laurent
  void add_product(const ScalarQ& a, const ScalarQ& b);

  // "(re,im)*q^e" monomials sorted by exponent; fractions as "N / D".
  std::string to_text() const;
  // Human form, descending exponents: "q^2 - 1 + q^-2".
  std::string pretty() const;
  nlohmann::json to_json() const;
  static ScalarQ from_json(const nlohmann::json& j);
  std::size_t hash() const;

 private:
  struct Raw {};
  ScalarQ(Raw, Laurent num, Laurent den) : num_(std::move(num)), den_(std::move(den)) {}
  void reduce();

  Laurent num_;
  Laurent den_;
};

// Exact substitution q -> q0; throws "pole at q0".
GaussRat specialize(const ScalarQ& s, const GaussRat& q0);
GaussRat specialize(const Laurent& p, const GaussRat& q0);

// [a]_{q^e} = (q^{ea} - q^{-ea}) / (q^e - q^{-e}), e >= 1.
ScalarQ qint(long a, int e = 1);
// [a]_q! for a >= 0.
ScalarQ qfact(long a);
// Binomial [n choose k]_q = [n]! / ([k]! [n-k]!); zero unless 0 <= k <= n.
// The ratio [a+b]!/([a]![b]!) is qbinom(a + b, b).
ScalarQ qbinom(long n, long k);

std::string laurent_pretty(const Laurent& p);

}  // namespace qweb

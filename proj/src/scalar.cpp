#include "qweb/scalar.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

#include "qweb/error.hpp"

namespace qweb {

// ---- GaussRat ----

GaussRat& GaussRat::operator+=(const GaussRat& o) {
  re += o.re;
  if (sgn(o.im) != 0) im += o.im;
  return *this;
}

GaussRat& GaussRat::operator-=(const GaussRat& o) {
  re -= o.re;
  if (sgn(o.im) != 0) im -= o.im;
  return *this;
}

GaussRat& GaussRat::operator*=(const GaussRat& o) {
  if (sgn(im) == 0 && sgn(o.im) == 0) {
    re *= o.re;
    return *this;
  }
  mpq_class r = re * o.re - im * o.im;
  mpq_class i = re * o.im + im * o.re;
  re = std::move(r);
  im = std::move(i);
  return *this;
}

GaussRat GaussRat::inverse() const {
  if (sgn(im) == 0) return GaussRat(1 / re);
  mpq_class n = re * re + im * im;
  return GaussRat(re / n, -im / n);
}

GaussRat& GaussRat::operator/=(const GaussRat& o) {
  if (sgn(o.im) == 0) {
    re /= o.re;
    if (sgn(im) != 0) im /= o.re;
    return *this;
  }
  return *this *= o.inverse();
}

std::string GaussRat::to_pair() const {
  return "(" + re.get_str() + "," + im.get_str() + ")";
}

std::string GaussRat::to_string() const {
  if (sgn(im) == 0) return re.get_str();
  if (sgn(re) == 0) {
    if (im == 1) return "i";
    if (im == -1) return "-i";
    return im.get_str() + "*i";
  }
  std::string s = re.get_str();
  if (sgn(im) > 0) s += "+";
  if (im == 1) s += "i";
  else if (im == -1) s += "-i";
  else s += im.get_str() + "*i";
  return "(" + s + ")";
}

std::size_t GaussRat::hash() const {
  std::hash<std::string> h;
  std::size_t a = h(re.get_str());
  if (sgn(im) != 0) a ^= h(im.get_str()) * 31u;
  return a;
}

// ---- Laurent ----

Laurent::Laurent(const GaussRat& c, int e) {
  if (!c.is_zero()) {
    low = e;
    coef.push_back(c);
  }
}

std::size_t Laurent::terms() const {
  std::size_t t = 0;
  for (const auto& c : coef)
    if (!c.is_zero()) ++t;
  return t;
}

GaussRat Laurent::at(int e) const {
  if (coef.empty() || e < low || e > high()) return GaussRat();
  return coef[e - low];
}

void Laurent::trim() {
  while (!coef.empty() && coef.back().is_zero()) coef.pop_back();
  std::size_t k = 0;
  while (k < coef.size() && coef[k].is_zero()) ++k;
  if (k > 0) {
    coef.erase(coef.begin(), coef.begin() + static_cast<long>(k));
    low += static_cast<int>(k);
  }
  if (coef.empty()) low = 0;
}

Laurent Laurent::operator-() const {
  Laurent r = *this;
  for (auto& c : r.coef) c = -c;
  return r;
}

Laurent& Laurent::operator+=(const Laurent& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) return *this = o;
  int nl = std::min(low, o.low);
  int nh = std::max(high(), o.high());
  if (nl < low) {
    coef.insert(coef.begin(), static_cast<std::size_t>(low - nl), GaussRat());
    low = nl;
  }
  if (static_cast<int>(coef.size()) < nh - low + 1) coef.resize(nh - low + 1);
  for (std::size_t j = 0; j < o.coef.size(); ++j) coef[o.low - low + j] += o.coef[j];
  trim();
  return *this;
}

Laurent& Laurent::operator-=(const Laurent& o) { return *this += -o; }

Laurent operator*(const Laurent& a, const Laurent& b) {
  Laurent r;
  if (a.is_zero() || b.is_zero()) return r;
  r.low = a.low + b.low;
  r.coef.assign(a.coef.size() + b.coef.size() - 1, GaussRat());
  for (std::size_t i = 0; i < a.coef.size(); ++i) {
    if (a.coef[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.coef.size(); ++j) {
      if (b.coef[j].is_zero()) continue;
      r.coef[i + j] += a.coef[i] * b.coef[j];
    }
  }
  r.trim();
  return r;
}

Laurent Laurent::scaled(const GaussRat& c) const {
  if (c.is_zero()) return Laurent();
  Laurent r = *this;
  for (auto& x : r.coef) x *= c;
  return r;
}

Laurent Laurent::shifted(int e) const {
  Laurent r = *this;
  if (!r.is_zero()) r.low += e;
  return r;
}

GaussRat Laurent::eval(const GaussRat& q0) const {
  GaussRat acc;
  for (std::size_t j = coef.size(); j-- > 0;) {
    acc *= q0;
    acc += coef[j];
  }
  if (low != 0 && !acc.is_zero()) {
    GaussRat base = low > 0 ? q0 : q0.inverse();
    for (int k = 0; k < std::abs(low); ++k) acc *= base;
  }
  return acc;
}

std::size_t Laurent::hash() const {
  std::size_t h = static_cast<std::size_t>(low) * 1000003u;
  for (const auto& c : coef) h = h * 1315423911u ^ c.hash();
  return h;
}

// ---- polynomial division over Q(i) ----

namespace {

std::vector<GaussRat> dense(const Laurent& p) {
  std::vector<GaussRat> v;
  if (p.is_zero()) return v;
  v.assign(static_cast<std::size_t>(p.low), GaussRat());
  v.insert(v.end(), p.coef.begin(), p.coef.end());
  return v;
}

Laurent from_dense(std::vector<GaussRat> v) {
  Laurent r;
  r.low = 0;
  r.coef = std::move(v);
  r.trim();
  return r;
}

}  // namespace

Laurent poly_divmod(const Laurent& a, const Laurent& b, Laurent* rem) {
  std::vector<GaussRat> r = dense(a);
  std::vector<GaussRat> d = dense(b);
  if (d.empty()) throw Error(ErrorKind::Math, "division by zero");
  if (r.size() < d.size()) {
    if (rem) *rem = a;
    return Laurent();
  }
  GaussRat inv = d.back().inverse();
  std::vector<GaussRat> quo(r.size() - d.size() + 1);
  for (std::size_t k = quo.size(); k-- > 0;) {
    GaussRat c = r[k + d.size() - 1] * inv;
    if (c.is_zero()) continue;
    quo[k] = c;
    for (std::size_t j = 0; j < d.size(); ++j) {
      if (!d[j].is_zero()) r[k + j] -= c * d[j];
    }
  }
  if (rem) {
    r.resize(d.size() - 1);
    *rem = from_dense(std::move(r));
  }
  return from_dense(std::move(quo));
}

Laurent poly_gcd(Laurent a, Laurent b) {
  while (!b.is_zero()) {
    Laurent r;
    poly_divmod(a, b, &r);
    a = std::move(b);
    b = std::move(r);
  }
  if (a.is_zero()) return a;
  return a.scaled(a.lead().inverse());
}

// ---- ScalarQ ----

ScalarQ::ScalarQ(const Laurent& num, const Laurent& den) : num_(num), den_(den) {
  if (den_.is_zero()) throw Error(ErrorKind::Math, "division by zero");
  reduce();
}

ScalarQ ScalarQ::qtilde() {
  Laurent p;
  p.low = -1;
  p.coef = {GaussRat(-1), GaussRat(0), GaussRat(1)};
  return ScalarQ(p);
}

void ScalarQ::reduce() {
  if (num_.is_zero()) {
    den_ = Laurent(GaussRat(1));
    return;
  }
  if (den_.low != 0) {
    num_ = num_.shifted(-den_.low);
    den_ = den_.shifted(-den_.low);
  }
  if (den_.coef.size() == 1) {
    if (!den_.coef[0].is_one()) num_ = num_.scaled(den_.coef[0].inverse());
    den_ = Laurent(GaussRat(1));
    return;
  }
  Laurent stripped = num_.shifted(-num_.low);
  Laurent g = poly_gcd(den_, stripped);
  if (g.coef.size() > 1) {
    Laurent r;
    num_ = poly_divmod(stripped, g, &r).shifted(num_.low);
    den_ = poly_divmod(den_, g, &r);
  }
  if (!den_.lead().is_one()) {
    GaussRat inv = den_.lead().inverse();
    num_ = num_.scaled(inv);
    den_ = den_.scaled(inv);
  }
}

ScalarQ ScalarQ::operator-() const { return ScalarQ(Raw{}, -num_, den_); }

ScalarQ& ScalarQ::operator+=(const ScalarQ& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) return *this = o;
  if (den_.is_one() && o.den_.is_one()) {
    num_ += o.num_;
    return *this;
  }
  if (den_ == o.den_) {
    num_ += o.num_;
    reduce();
    return *this;
  }
  num_ = num_ * o.den_ + o.num_ * den_;
  den_ = den_ * o.den_;
  reduce();
  return *this;
}

ScalarQ& ScalarQ::operator-=(const ScalarQ& o) { return *this += -o; }

ScalarQ& ScalarQ::operator*=(const ScalarQ& o) {
  if (is_zero()) return *this;
  if (o.is_zero()) return *this = ScalarQ();
  if (den_.is_one() && o.den_.is_one()) {
    num_ = num_ * o.num_;
    return *this;
  }
  num_ = num_ * o.num_;
  den_ = den_ * o.den_;
  reduce();
  return *this;
}

ScalarQ ScalarQ::inverse() const {
  if (is_zero()) throw Error(ErrorKind::Math, "division by zero");
  return ScalarQ(den_, num_);
}

ScalarQ& ScalarQ::operator/=(const ScalarQ& o) {
  if (o.is_zero()) throw Error(ErrorKind::Math, "division by zero");
  if (o.den_.is_one() && o.num_.coef.size() == 1) {
    // monomial divisor: no gcd needed
    num_ = num_.scaled(o.num_.coef[0].inverse()).shifted(-o.num_.low);
    return *this;
  }
  return *this *= o.inverse();
}

void ScalarQ::add_product(const ScalarQ& a, const ScalarQ& b) {
  if (a.is_zero() || b.is_zero()) return;
  if (den_.is_one() && a.den_.is_one() && b.den_.is_one()) {
    num_ += a.num_ * b.num_;
    return;
  }
  *this += a * b;
}

namespace {

std::string text_poly(const Laurent& p) {
  if (p.is_zero()) return "0";
  std::string s;
  for (std::size_t j = 0; j < p.coef.size(); ++j) {
    if (p.coef[j].is_zero()) continue;
    if (!s.empty()) s += " + ";
    s += p.coef[j].to_pair() + "*q^" + std::to_string(p.low + static_cast<int>(j));
  }
  return s;
}

nlohmann::json json_poly(const Laurent& p) {
  nlohmann::json a = nlohmann::json::array();
  for (std::size_t j = 0; j < p.coef.size(); ++j) {
    if (p.coef[j].is_zero()) continue;
    a.push_back({p.low + static_cast<int>(j), p.coef[j].re.get_str(), p.coef[j].im.get_str()});
  }
  return a;
}

Laurent poly_from_json(const nlohmann::json& a) {
  Laurent p;
  for (const auto& t : a) {
    int e = t.at(0).get<int>();
    auto part = [](const nlohmann::json& v) {
      return v.is_string() ? mpq_class(v.get<std::string>()) : mpq_class(v.get<long>());
    };
    p += Laurent(GaussRat(part(t.at(1)), part(t.at(2))), e);
  }
  return p;
}

std::string qpow(int e) {
  if (e == 1) return "q";
  return "q^" + std::to_string(e);
}

}  // namespace

std::string laurent_pretty(const Laurent& p) {
  if (p.is_zero()) return "0";
  std::string s;
  for (std::size_t j = p.coef.size(); j-- > 0;) {
    const GaussRat& c = p.coef[j];
    if (c.is_zero()) continue;
    int e = p.low + static_cast<int>(j);
    bool neg = false;
    std::string mag;
    if (c.is_real()) {
      neg = sgn(c.re) < 0;
      mpq_class a = abs(c.re);
      if (a != 1 || e == 0) mag = a.get_str();
    } else if (sgn(c.re) == 0) {
      neg = sgn(c.im) < 0;
      mpq_class a = abs(c.im);
      mag = a == 1 ? "i" : a.get_str() + "*i";
    } else {
      mag = c.to_string();
    }
    std::string term = mag;
    if (e != 0) term = mag.empty() ? qpow(e) : mag + "*" + qpow(e);
    if (s.empty()) s = neg ? "-" + term : term;
    else s += (neg ? " - " : " + ") + term;
  }
  return s;
}

std::string ScalarQ::to_text() const {
  if (den_.is_one()) return text_poly(num_);
  return text_poly(num_) + " / " + text_poly(den_);
}

std::string ScalarQ::pretty() const {
  if (den_.is_one()) return laurent_pretty(num_);
  return "(" + laurent_pretty(num_) + ")/(" + laurent_pretty(den_) + ")";
}

nlohmann::json ScalarQ::to_json() const {
  return {{"num", json_poly(num_)}, {"den", json_poly(den_)}};
}

ScalarQ ScalarQ::from_json(const nlohmann::json& j) {
  return ScalarQ(poly_from_json(j.at("num")), poly_from_json(j.at("den")));
}

std::size_t ScalarQ::hash() const { return num_.hash() * 7919u ^ den_.hash(); }

// ---- specialization and quantum combinatorics ----

GaussRat specialize(const Laurent& p, const GaussRat& q0) {
  if (q0.is_zero() && p.low < 0) throw Error(ErrorKind::Math, "pole at q0");
  return p.eval(q0);
}

GaussRat specialize(const ScalarQ& s, const GaussRat& q0) {
  GaussRat d = specialize(s.den(), q0);
  if (d.is_zero()) throw Error(ErrorKind::Math, "pole at q0");
  return specialize(s.num(), q0) / d;
}

ScalarQ qint(long a, int e) {
  if (e < 1) throw Error(ErrorKind::Math, "qint exponent must be positive");
  if (a < 0) return -qint(-a, e);
  Laurent p;
  for (long j = 0; j < a; ++j) p += Laurent::monomial(static_cast<int>(e * (a - 1 - 2 * j)));
  return ScalarQ(p);
}

ScalarQ qfact(long a) {
  ScalarQ r(1);
  for (long j = 2; j <= a; ++j) r *= qint(j);
  return r;
}

ScalarQ qbinom(long n, long k) {
  if (k < 0 || n < 0 || k > n) return ScalarQ();
  return qfact(n) / (qfact(k) * qfact(n - k));
}

}  // namespace qweb

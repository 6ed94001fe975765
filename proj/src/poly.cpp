#include "bgpoly/poly.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <stdexcept>

namespace bgpoly {

namespace {

void trim(std::vector<Int>& c) {
  while (!c.empty() && c.back() == 0) c.pop_back();
}

}  // namespace

IntPolynomial::IntPolynomial(std::vector<Int> coeffs) : c_(std::move(coeffs)) {
  trim(c_);
}

IntPolynomial::IntPolynomial(std::initializer_list<Int> coeffs) : c_(coeffs) {
  trim(c_);
}

IntPolynomial IntPolynomial::constant(Int c) {
  return IntPolynomial(std::vector<Int>{std::move(c)});
}

IntPolynomial IntPolynomial::monomial(Int c, int k) {
  std::vector<Int> v(k + 1, 0);
  v[k] = std::move(c);
  return IntPolynomial(std::move(v));
}

IntPolynomial IntPolynomial::parse(const std::string& text) {
  std::string spaced = text;
  for (char& ch : spaced) {
    if (ch == ',') ch = ' ';
  }
  std::istringstream in(spaced);
  std::vector<Int> cs;
  std::string tok;
  while (in >> tok) {
    size_t i = (tok[0] == '+' || tok[0] == '-') ? 1 : 0;
    if (i == tok.size()) throw std::invalid_argument("bad coefficient '" + tok + "'");
    for (; i < tok.size(); ++i) {
      if (!isdigit(static_cast<unsigned char>(tok[i]))) {
        throw std::invalid_argument("bad coefficient '" + tok + "'");
      }
    }
    cs.emplace_back(tok);
  }
  if (cs.empty()) throw std::invalid_argument("empty coefficient list");
  return IntPolynomial(std::move(cs));
}

Int IntPolynomial::coeff(int k) const {
  if (k < 0 || k >= static_cast<int>(c_.size())) return 0;
  return c_[k];
}

const Int& IntPolynomial::leading() const {
  if (c_.empty()) throw std::logic_error("leading coefficient of zero polynomial");
  return c_.back();
}

Int IntPolynomial::operator()(const Int& x) const {
  Int acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

Rat IntPolynomial::operator()(const Rat& x) const {
  Rat acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

IntPolynomial IntPolynomial::operator+(const IntPolynomial& o) const {
  std::vector<Int> r(std::max(c_.size(), o.c_.size()), 0);
  for (size_t i = 0; i < c_.size(); ++i) r[i] += c_[i];
  for (size_t i = 0; i < o.c_.size(); ++i) r[i] += o.c_[i];
  return IntPolynomial(std::move(r));
}

IntPolynomial IntPolynomial::operator-(const IntPolynomial& o) const {
  std::vector<Int> r(std::max(c_.size(), o.c_.size()), 0);
  for (size_t i = 0; i < c_.size(); ++i) r[i] += c_[i];
  for (size_t i = 0; i < o.c_.size(); ++i) r[i] -= o.c_[i];
  return IntPolynomial(std::move(r));
}

IntPolynomial IntPolynomial::operator*(const IntPolynomial& o) const {
  if (c_.empty() || o.c_.empty()) return {};
  std::vector<Int> r(c_.size() + o.c_.size() - 1, 0);
  for (size_t i = 0; i < c_.size(); ++i) {
    for (size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
  }
  return IntPolynomial(std::move(r));
}

IntPolynomial IntPolynomial::operator*(const Int& s) const {
  std::vector<Int> r = c_;
  for (auto& v : r) v *= s;
  return IntPolynomial(std::move(r));
}

IntPolynomial IntPolynomial::operator-() const { return *this * Int(-1); }

std::string IntPolynomial::to_string() const {
  std::string s = "[";
  for (size_t i = 0; i < c_.size(); ++i) {
    if (i) s += ", ";
    s += c_[i].str();
  }
  if (c_.empty()) s += "0";
  return s + "]";
}

bool GammaVector::nonnegative() const {
  return std::all_of(gammas.begin(), gammas.end(), [](const Int& g) { return g >= 0; });
}

bool is_palindromic(const IntPolynomial& f, int d) {
  if (d < 0) throw std::invalid_argument("palindromic context degree must be nonnegative");
  if (f.degree() > d) {
    throw std::invalid_argument("degree exceeds palindromic context " + std::to_string(d));
  }
  for (int i = 0; i <= d; ++i) {
    if (f.coeff(i) != f.coeff(d - i)) return false;
  }
  return true;
}

bool is_unimodal(const IntPolynomial& f) {
  const auto& c = f.coeffs();
  size_t i = 1;
  while (i < c.size() && c[i - 1] <= c[i]) ++i;
  while (i < c.size() && c[i - 1] >= c[i]) ++i;
  return i >= c.size();
}

bool is_log_concave(const IntPolynomial& f) {
  for (int i = 0; i <= f.degree(); ++i) {
    if (f.coeff(i) * f.coeff(i) < f.coeff(i - 1) * f.coeff(i + 1)) return false;
  }
  return true;
}

IntPolynomial one_plus_x_power(int n) {
  std::vector<Int> c(n + 1);
  for (int j = 0; j <= n; ++j) c[j] = binomial(n, j);
  return IntPolynomial(std::move(c));
}

GammaVector gamma_extract(const IntPolynomial& f, int d) {
  if (!is_palindromic(f, d)) {
    throw std::invalid_argument("polynomial is not palindromic with respect to degree " +
                                std::to_string(d));
  }
  std::vector<Int> rem(d + 1, 0);
  for (int i = 0; i <= f.degree(); ++i) rem[i] = f.coeff(i);
  GammaVector gv;
  gv.degree_context = d;
  gv.gammas.assign(d / 2 + 1, 0);
  for (int i = 0; i <= d / 2; ++i) {
    Int gi = rem[i];
    gv.gammas[i] = gi;
    if (gi == 0) continue;
    for (int j = i; j <= d - i; ++j) rem[j] -= gi * binomial(d - 2 * i, j - i);
  }
  for (const Int& v : rem) {
    if (v != 0) throw std::logic_error("gamma extraction left a nonzero remainder");
  }
  return gv;
}

IntPolynomial gamma_substitute(const IntPolynomial& g, int d) {
  if (2 * g.degree() > d) {
    throw std::invalid_argument("gamma substitution needs 2 deg g <= d");
  }
  IntPolynomial acc;
  Int four_k = 1;
  for (int k = 0; k <= g.degree(); ++k) {
    if (g.coeff(k) != 0) {
      acc = acc + IntPolynomial::monomial(g.coeff(k) * four_k, k) * one_plus_x_power(d - 2 * k);
    }
    four_k *= 4;
  }
  return acc;
}

IntPolynomial derivative(const IntPolynomial& f) {
  if (f.degree() < 1) return {};
  std::vector<Int> r(f.degree());
  for (int i = 1; i <= f.degree(); ++i) r[i - 1] = f.coeff(i) * i;
  return IntPolynomial(std::move(r));
}

Int content(const IntPolynomial& f) {
  Int g = 0;
  for (const Int& c : f.coeffs()) g = boost::multiprecision::gcd(g, c);
  return g;
}

IntPolynomial primitive_part(const IntPolynomial& f) {
  if (f.is_zero()) return {};
  Int g = content(f);
  if (f.leading() < 0) g = -g;
  std::vector<Int> r = f.coeffs();
  for (auto& v : r) v /= g;
  return IntPolynomial(std::move(r));
}

namespace {

// (positive constant) * (a mod b), computed in Z[x]. Each reduction step
// rescales by |lc(b)| > 0, so signs agree pointwise with the true remainder.
IntPolynomial pseudo_remainder(const IntPolynomial& a, const IntPolynomial& b) {
  std::vector<Int> r = a.coeffs();
  const int db = b.degree();
  Int lb = b.leading();
  if (lb < 0) lb = -lb;
  const bool flip = b.leading() < 0;
  while (static_cast<int>(r.size()) - 1 >= db) {
    const int da = static_cast<int>(r.size()) - 1;
    Int lead = r[da];
    for (int i = 0; i < da; ++i) r[i] *= lb;
    for (int i = 0; i < db; ++i) {
      Int bc = b.coeff(i);
      if (flip) bc = -bc;
      r[da - db + i] -= lead * bc;
    }
    r.resize(da);  // leading term cancels exactly
    trim(r);
  }
  return IntPolynomial(std::move(r));
}

}  // namespace

IntPolynomial poly_gcd(const IntPolynomial& f, const IntPolynomial& g) {
  IntPolynomial a = primitive_part(f);
  IntPolynomial b = primitive_part(g);
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  if (a.degree() < b.degree()) std::swap(a, b);
  while (!b.is_zero()) {
    IntPolynomial r = primitive_part(pseudo_remainder(a, b));
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

IntPolynomial squarefree_part(const IntPolynomial& f) {
  if (f.is_zero()) throw std::invalid_argument("squarefree part of zero polynomial");
  if (f.degree() == 0) return IntPolynomial::constant(1);
  IntPolynomial g = poly_gcd(f, derivative(f));
  if (g.degree() == 0) return primitive_part(f);
  // exact division f / g, checked
  std::vector<Rat> rem(f.coeffs().begin(), f.coeffs().end());
  const int dg = g.degree();
  std::vector<Rat> q(f.degree() - dg + 1, 0);
  for (int i = f.degree() - dg; i >= 0; --i) {
    Rat c = rem[i + dg] / Rat(g.leading());
    q[i] = c;
    if (c != 0) {
      for (int j = 0; j <= dg; ++j) rem[i + j] -= c * Rat(g.coeff(j));
    }
  }
  for (const Rat& v : rem) {
    if (v != 0) throw std::logic_error("inexact division in squarefree_part");
  }
  // clear denominators, reduce to primitive
  Int lcm = 1;
  for (const Rat& v : q) {
    Int den = boost::multiprecision::denominator(v);
    lcm = lcm / boost::multiprecision::gcd(lcm, den) * den;
  }
  std::vector<Int> zi(q.size());
  for (size_t i = 0; i < q.size(); ++i) {
    zi[i] = boost::multiprecision::numerator(q[i]) * (lcm / boost::multiprecision::denominator(q[i]));
  }
  return primitive_part(IntPolynomial(std::move(zi)));
}

IntPolynomial series_numerator(const std::vector<Int>& values, int D) {
  if (static_cast<int>(values.size()) <= D) {
    throw std::invalid_argument("series_numerator needs values v_0..v_D");
  }
  std::vector<Int> c(D + 1, 0);
  for (int j = 0; j <= D; ++j) {
    for (int i = 0; i <= j; ++i) {
      Int term = binomial(D + 1, i) * values[j - i];
      if (i % 2) c[j] -= term; else c[j] += term;
    }
  }
  return IntPolynomial(std::move(c));
}

}  // namespace bgpoly

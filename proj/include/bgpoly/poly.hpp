#pragma once

#include <string>
#include <vector>

#include "bgpoly/bigint.hpp"

namespace bgpoly {

// Dense integer polynomial, constant term first. Canonical form: the last
// stored coefficient is nonzero; the zero polynomial stores nothing.
class IntPolynomial {
 public:
  IntPolynomial() = default;
  explicit IntPolynomial(std::vector<Int> coeffs);
  IntPolynomial(std::initializer_list<Int> coeffs);

  static IntPolynomial constant(Int c);
  static IntPolynomial monomial(Int c, int k);

  // Comma- or whitespace-separated decimal integers, constant term first.
  static IntPolynomial parse(const std::string& text);

  const std::vector<Int>& coeffs() const { return c_; }
  bool is_zero() const { return c_.empty(); }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  Int coeff(int k) const;
  const Int& leading() const;

  Int operator()(const Int& x) const;
  Rat operator()(const Rat& x) const;

  IntPolynomial operator+(const IntPolynomial& o) const;
  IntPolynomial operator-(const IntPolynomial& o) const;
  IntPolynomial operator*(const IntPolynomial& o) const;
  IntPolynomial operator*(const Int& s) const;
  IntPolynomial operator-() const;
  bool operator==(const IntPolynomial& o) const { return c_ == o.c_; }

  std::string to_string() const;  // "[a0, a1, ...]"

 private:
  std::vector<Int> c_;
};

struct GammaVector {
  std::vector<Int> gammas;  // gamma_0 .. gamma_{floor(d/2)}
  int degree_context = 0;
  bool nonnegative() const;
};

// Half-open rational interval (lo, hi]; lo == hi encodes the exact root lo.
struct RationalInterval {
  Rat lo;
  Rat hi;
};

struct RootCountCertificate {
  int total_degree = 0;
  int distinct_real_roots = 0;
  bool is_real_rooted = false;
  std::vector<RationalInterval> isolating_intervals;  // for the squarefree part
};

bool is_palindromic(const IntPolynomial& f, int d);
bool is_unimodal(const IntPolynomial& f);
bool is_log_concave(const IntPolynomial& f);

// Unique integers gamma_i with f = sum gamma_i x^i (1+x)^(d-2i).
// Requires f palindromic with respect to d.
GammaVector gamma_extract(const IntPolynomial& f, int d);

// sum_k g_k 4^k x^k (x+1)^(d-2k); requires 2 deg g <= d. The result is
// palindromic of degree at most d and evaluates at 1 to 2^d g(1).
IntPolynomial gamma_substitute(const IntPolynomial& g, int d);

RootCountCertificate real_root_certificate(const IntPolynomial& f);

// Weak root alternation: with roots of f as a_1 >= a_2 >= ... and roots of g
// as b_1 >= b_2 >= ... (with multiplicity),
//   deg g == deg f:     a_1 >= b_1 >= a_2 >= b_2 >= ...
//   deg g == deg f + 1: b_1 >= a_1 >= b_2 >= a_2 >= ... (extra root of g at
//                       the small end).
// Both inputs must be real-rooted. Decided exactly via root isolation.
bool interlaces(const IntPolynomial& f, const IntPolynomial& g);

// --- exact polynomial utilities ---

IntPolynomial derivative(const IntPolynomial& f);
Int content(const IntPolynomial& f);               // nonnegative
IntPolynomial primitive_part(const IntPolynomial& f);  // positive leading coeff
IntPolynomial poly_gcd(const IntPolynomial& f, const IntPolynomial& g);
IntPolynomial squarefree_part(const IntPolynomial& f);

// (x+1)^n
IntPolynomial one_plus_x_power(int n);

// Number of distinct real roots (whole line / in (a, b]); f nonzero.
int count_real_roots(const IntPolynomial& f);
int count_real_roots_in(const IntPolynomial& f, const Rat& a, const Rat& b);

// Disjoint half-open intervals, ascending, one distinct real root each.
std::vector<RationalInterval> isolate_real_roots(const IntPolynomial& f);

// Strict bound B with every real root of f in (-B, B).
Rat cauchy_root_bound(const IntPolynomial& f);

// numerator coefficients c_0..c_D of (1-x)^(D+1) * sum_n values[n] x^n,
// i.e. c_j = sum_i (-1)^i C(D+1, i) values[j-i]. Requires values.size() > D.
IntPolynomial series_numerator(const std::vector<Int>& values, int D);

}  // namespace bgpoly

#include <algorithm>
#include <stdexcept>
#include <utility>
#include <vector>

#include "bgpoly/poly.hpp"

// Exact real-root counting and isolation via Sturm chains over the rationals.
// No floating point takes part in any decision.

namespace bgpoly {

namespace {

IntPolynomial sturm_pseudo_step(const IntPolynomial& a, const IntPolynomial& b);

std::vector<IntPolynomial> sturm_chain(const IntPolynomial& f) {
  std::vector<IntPolynomial> chain;
  chain.push_back(primitive_part(f));
  IntPolynomial d = derivative(chain[0]);
  if (!d.is_zero()) {
    chain.push_back(primitive_part(d));
    while (true) {
      const IntPolynomial& a = chain[chain.size() - 2];
      const IntPolynomial& b = chain.back();
      IntPolynomial next = sturm_pseudo_step(a, b);
      if (next.is_zero()) break;
      chain.push_back(std::move(next));
    }
  }
  return chain;
}

// -(a mod b) up to a positive constant, reduced to primitive form.
IntPolynomial sturm_pseudo_step(const IntPolynomial& a, const IntPolynomial& b) {
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
    r.resize(da);
    while (!r.empty() && r.back() == 0) r.pop_back();
  }
  // negate and reduce by the positive content; the sign must survive, which
  // rules out primitive_part here
  Int g = 0;
  for (const Int& x : r) g = boost::multiprecision::gcd(g, x);
  if (g > 1) {
    for (Int& x : r) x /= g;
  }
  for (Int& x : r) x = -x;
  return IntPolynomial(std::move(r));
}

// Sign of p at num/den with den > 0, using p(num/den) * den^deg.
int sign_at(const IntPolynomial& p, const Rat& x) {
  const Int num = boost::multiprecision::numerator(x);
  const Int den = boost::multiprecision::denominator(x);
  Int acc = 0;
  Int den_pow = 1;
  const auto& c = p.coeffs();
  // Horner from the top: acc = sum c_i num^i den^(deg-i)
  for (auto it = c.rbegin(); it != c.rend(); ++it) {
    acc = acc * num + *it * den_pow;
    den_pow *= den;
  }
  return acc.sign();
}

int variations(const std::vector<int>& signs) {
  int v = 0;
  int prev = 0;
  for (int s : signs) {
    if (s == 0) continue;
    if (prev != 0 && s != prev) ++v;
    prev = s;
  }
  return v;
}

int variations_at(const std::vector<IntPolynomial>& chain, const Rat& x) {
  std::vector<int> signs;
  signs.reserve(chain.size());
  for (const auto& p : chain) signs.push_back(sign_at(p, x));
  return variations(signs);
}

int variations_at_infinity(const std::vector<IntPolynomial>& chain, bool positive) {
  std::vector<int> signs;
  signs.reserve(chain.size());
  for (const auto& p : chain) {
    int s = p.is_zero() ? 0 : p.leading().sign();
    if (!positive && p.degree() % 2 == 1) s = -s;
    signs.push_back(s);
  }
  return variations(signs);
}

}  // namespace

Rat cauchy_root_bound(const IntPolynomial& f) {
  if (f.is_zero()) throw std::invalid_argument("root bound of zero polynomial");
  Int lead = f.leading();
  if (lead < 0) lead = -lead;
  Int mx = 0;
  for (int i = 0; i < f.degree(); ++i) {
    Int a = f.coeff(i);
    if (a < 0) a = -a;
    if (a > mx) mx = a;
  }
  return Rat(1) + Rat(mx, lead);
}

int count_real_roots(const IntPolynomial& f) {
  if (f.is_zero()) throw std::invalid_argument("root count of zero polynomial");
  if (f.degree() == 0) return 0;
  auto chain = sturm_chain(f);
  return variations_at_infinity(chain, false) - variations_at_infinity(chain, true);
}

int count_real_roots_in(const IntPolynomial& f, const Rat& a, const Rat& b) {
  if (f.is_zero()) throw std::invalid_argument("root count of zero polynomial");
  if (f.degree() == 0) return 0;
  if (a >= b) throw std::invalid_argument("empty interval");
  auto chain = sturm_chain(f);
  return variations_at(chain, a) - variations_at(chain, b);
}

namespace {

void isolate_rec(const std::vector<IntPolynomial>& chain, const Rat& lo, int vlo,
                 const Rat& hi, int vhi, std::vector<RationalInterval>* out) {
  const int roots = vlo - vhi;
  if (roots <= 0) return;
  if (roots == 1) {
    out->push_back({lo, hi});
    return;
  }
  Rat mid = (lo + hi) / 2;
  int vmid = variations_at(chain, mid);
  isolate_rec(chain, lo, vlo, mid, vmid, out);
  isolate_rec(chain, mid, vmid, hi, vhi, out);
}

}  // namespace

std::vector<RationalInterval> isolate_real_roots(const IntPolynomial& f) {
  if (f.is_zero()) throw std::invalid_argument("cannot isolate roots of zero polynomial");
  std::vector<RationalInterval> out;
  if (f.degree() == 0) return out;
  auto chain = sturm_chain(f);
  Rat bound = cauchy_root_bound(f);
  int vlo = variations_at(chain, -bound);
  int vhi = variations_at(chain, bound);
  isolate_rec(chain, -bound, vlo, bound, vhi, &out);
  return out;  // ascending because the recursion splits left before right
}

RootCountCertificate real_root_certificate(const IntPolynomial& f) {
  if (f.is_zero()) throw std::invalid_argument("zero polynomial has no root certificate");
  RootCountCertificate cert;
  cert.total_degree = f.degree();
  IntPolynomial sf = squarefree_part(f);
  cert.distinct_real_roots = count_real_roots(sf);
  cert.is_real_rooted = cert.distinct_real_roots == sf.degree();
  cert.isolating_intervals = isolate_real_roots(sf);
  return cert;
}

namespace {

// Interval indices (into the ascending isolation of the union of roots) for
// the roots of f, listed descending and repeated with multiplicity.
// Multiplicity comes from the gcd tower f, gcd(f, f'), gcd(. , .'), ...
std::vector<int> ranked_roots(const IntPolynomial& f,
                              const std::vector<RationalInterval>& intervals) {
  std::vector<int> mult(intervals.size(), 0);
  IntPolynomial level = primitive_part(f);
  while (level.degree() >= 1) {
    for (size_t i = 0; i < intervals.size(); ++i) {
      if (count_real_roots_in(level, intervals[i].lo, intervals[i].hi) > 0) mult[i] += 1;
    }
    level = poly_gcd(level, derivative(level));
  }
  std::vector<int> out;
  for (int i = static_cast<int>(intervals.size()) - 1; i >= 0; --i) {
    for (int m = 0; m < mult[i]; ++m) out.push_back(i);
  }
  return out;
}

}  // namespace

bool interlaces(const IntPolynomial& f, const IntPolynomial& g) {
  if (f.is_zero() || g.is_zero()) {
    throw std::invalid_argument("interlacing is undefined for the zero polynomial");
  }
  if (g.degree() != f.degree() && g.degree() != f.degree() + 1) {
    throw std::invalid_argument("interlacing requires deg g in {deg f, deg f + 1}");
  }
  RootCountCertificate cf = real_root_certificate(f);
  RootCountCertificate cg = real_root_certificate(g);
  if (!cf.is_real_rooted || !cg.is_real_rooted) {
    throw std::invalid_argument("interlacing requires real-rooted inputs");
  }
  // isolate the union of roots: sf(f)*sf(g) factored by the shared part
  IntPolynomial sf = squarefree_part(f);
  IntPolynomial sg = squarefree_part(g);
  IntPolynomial h = poly_gcd(sf, sg);
  IntPolynomial w = h.degree() >= 1 ? squarefree_part(sf * sg) : sf * sg;
  std::vector<RationalInterval> intervals = isolate_real_roots(w);
  std::vector<int> a = ranked_roots(f, intervals);  // descending interval ids
  std::vector<int> b = ranked_roots(g, intervals);
  // interval id order: larger id = larger root; equal id = equal root
  const size_t n = a.size();
  if (b.size() == n) {
    for (size_t i = 0; i < n; ++i) {
      if (a[i] < b[i]) return false;                    // need a_i >= b_i
      if (i + 1 < n && b[i] < a[i + 1]) return false;   // need b_i >= a_{i+1}
    }
    return true;
  }
  if (b.size() == n + 1) {
    for (size_t i = 0; i < n; ++i) {
      if (b[i] < a[i]) return false;       // need b_i >= a_i
      if (a[i] < b[i + 1]) return false;   // need a_i >= b_{i+1}
    }
    return true;
  }
  throw std::invalid_argument("interlacing requires deg g in {deg f, deg f + 1}");
}

}  // namespace bgpoly

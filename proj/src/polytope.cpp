#include "bgpoly/polytope.hpp"

#include <algorithm>
#include <cstdint>
#include <set>
#include <stdexcept>

#include "hull.hpp"

namespace bgpoly {

LatticePolytope::LatticePolytope(int ambient_dim, std::vector<std::vector<Int>> generators,
                                 Budgets budgets)
    : ambient_(ambient_dim), gens_(std::move(generators)), budgets_(budgets),
      cache_(std::make_shared<Cache>()) {
  if (ambient_ <= 0) throw std::invalid_argument("ambient dimension must be positive");
  if (gens_.empty()) throw std::invalid_argument("polytope needs at least one generator");
  for (const auto& g : gens_) {
    if (static_cast<int>(g.size()) != ambient_) {
      throw std::invalid_argument("generator dimension mismatch");
    }
  }
  std::sort(gens_.begin(), gens_.end());
  gens_.erase(std::unique(gens_.begin(), gens_.end()), gens_.end());
}

const LatticePolytope::FacetData& LatticePolytope::facet_data() const {
  std::call_once(cache_->once, [this] {
    if (ambient_ > budgets_.hull_dim_cap) {
      throw resource_limit_error("facet enumeration limited to ambient dimension " +
                                 std::to_string(budgets_.hull_dim_cap));
    }
    std::vector<detail::IntVec> rows;
    rows.reserve(gens_.size());
    for (const auto& g : gens_) {
      detail::IntVec row(ambient_ + 1);
      row[0] = 1;
      for (int i = 0; i < ambient_; ++i) row[i + 1] = g[i];
      rows.push_back(std::move(row));
    }
    detail::DualDescription dd = detail::dual_cone_rays(rows);
    FacetData fd;
    fd.affine_dim = dd.rank - 1;
    for (const auto& v : dd.lineality) {
      // v = (v0, vhat) with v0 + vhat.p = 0 on every generator
      Halfspace eq;
      eq.normal.assign(v.begin() + 1, v.end());
      eq.rhs = -v[0];
      int lead = 0;
      for (const Int& c : eq.normal) {
        if (c != 0) { lead = c.sign(); break; }
      }
      if (lead < 0) {
        for (Int& c : eq.normal) c = -c;
        eq.rhs = -eq.rhs;
      }
      fd.equations.push_back(std::move(eq));
    }
    if (fd.affine_dim >= 1) {
      for (const auto& y : dd.rays) {
        Halfspace hs;
        hs.normal.assign(y.size() - 1, 0);
        bool zero = true;
        for (size_t i = 1; i < y.size(); ++i) {
          hs.normal[i - 1] = -y[i];
          if (y[i] != 0) zero = false;
        }
        if (zero) continue;  // the trivial inequality 0 <= y0
        hs.rhs = y[0];
        fd.facets.push_back(std::move(hs));
      }
    }
    auto cmp = [](const Halfspace& a, const Halfspace& b) {
      return std::tie(a.normal, a.rhs) < std::tie(b.normal, b.rhs);
    };
    std::sort(fd.facets.begin(), fd.facets.end(), cmp);
    std::sort(fd.equations.begin(), fd.equations.end(), cmp);
    cache_->data = std::move(fd);
  });
  return cache_->data;
}

int LatticePolytope::affine_dim() const { return facet_data().affine_dim; }
const std::vector<Halfspace>& LatticePolytope::facets() const { return facet_data().facets; }
const std::vector<Halfspace>& LatticePolytope::span_equations() const {
  return facet_data().equations;
}

bool LatticePolytope::contains_in_dilate(const std::vector<Int>& point, int n) const {
  const FacetData& fd = facet_data();
  for (const auto& eq : fd.equations) {
    Int s = 0;
    for (int i = 0; i < ambient_; ++i) s += eq.normal[i] * point[i];
    if (s != eq.rhs * n) return false;
  }
  for (const auto& hs : fd.facets) {
    Int s = 0;
    for (int i = 0; i < ambient_; ++i) s += hs.normal[i] * point[i];
    if (s > hs.rhs * n) return false;
  }
  return true;
}

namespace {

struct ScanConstraint {
  std::vector<std::int64_t> coef;
  std::int64_t rhs;
  bool is_eq;
  std::vector<std::int64_t> tail_min;  // over suffix i.., given the box
  std::vector<std::int64_t> tail_max;
};

struct Scanner {
  int dim;
  std::vector<std::int64_t> lo, hi;
  std::vector<ScanConstraint> cons;
  std::vector<std::int64_t> partial;  // running normal.prefix per constraint
  std::vector<std::int64_t> point;
  BudgetMeter meter;
  std::vector<std::vector<Int>>* sink = nullptr;
  Int count = 0;

  Scanner(const LatticePolytope& p, int n)
      : dim(p.ambient_dim()), meter(p.budgets().points, "lattice scan") {
    lo.assign(dim, 0);
    hi.assign(dim, 0);
    for (int i = 0; i < dim; ++i) {
      Int mn = p.generators()[0][i], mx = mn;
      for (const auto& g : p.generators()) {
        if (g[i] < mn) mn = g[i];
        if (g[i] > mx) mx = g[i];
      }
      lo[i] = to_int64(mn * n);
      hi[i] = to_int64(mx * n);
    }
    auto add = [&](const Halfspace& hs, bool eq) {
      ScanConstraint c;
      c.is_eq = eq;
      c.rhs = to_int64(hs.rhs * n);
      for (int i = 0; i < dim; ++i) c.coef.push_back(to_int64(hs.normal[i]));
      c.tail_min.assign(dim + 1, 0);
      c.tail_max.assign(dim + 1, 0);
      for (int i = dim - 1; i >= 0; --i) {
        std::int64_t a = c.coef[i] * lo[i];
        std::int64_t b = c.coef[i] * hi[i];
        c.tail_min[i] = c.tail_min[i + 1] + std::min(a, b);
        c.tail_max[i] = c.tail_max[i + 1] + std::max(a, b);
      }
      cons.push_back(std::move(c));
    };
    for (const auto& eq : p.span_equations()) add(eq, true);
    for (const auto& hs : p.facets()) add(hs, false);
    partial.assign(cons.size(), 0);
    point.assign(dim, 0);
  }

  void run(int depth) {
    if (depth == dim) {
      count += 1;
      if (sink) sink->emplace_back(point.begin(), point.end());
      return;
    }
    std::int64_t L = lo[depth], U = hi[depth];
    for (size_t c = 0; c < cons.size() && L <= U; ++c) {
      const auto& con = cons[c];
      std::int64_t a = con.coef[depth];
      // con.coef[depth] * x + partial + tail(depth+1) must reach rhs
      std::int64_t slack_hi = con.rhs - partial[c] - con.tail_min[depth + 1];
      std::int64_t slack_lo = con.rhs - partial[c] - con.tail_max[depth + 1];
      if (a == 0) {
        if (slack_hi < 0) return;                  // cannot satisfy <=
        if (con.is_eq && slack_lo > 0) return;     // cannot reach ==
        continue;
      }
      if (a > 0) {
        U = std::min(U, div_floor(slack_hi, a));
        if (con.is_eq) L = std::max(L, div_ceil(slack_lo, a));
      } else {
        L = std::max(L, div_ceil(slack_hi, a));
        if (con.is_eq) U = std::min(U, div_floor(slack_lo, a));
      }
    }
    for (std::int64_t v = L; v <= U; ++v) {
      meter.charge();
      point[depth] = v;
      for (size_t c = 0; c < cons.size(); ++c) partial[c] += cons[c].coef[depth] * v;
      run(depth + 1);
      for (size_t c = 0; c < cons.size(); ++c) partial[c] -= cons[c].coef[depth] * v;
    }
  }

  static std::int64_t div_floor(std::int64_t a, std::int64_t b) {
    std::int64_t q = a / b, r = a % b;
    if (r != 0 && ((r < 0) != (b < 0))) --q;
    return q;
  }
  static std::int64_t div_ceil(std::int64_t a, std::int64_t b) {
    return -div_floor(-a, b);
  }
};

}  // namespace

std::vector<std::vector<Int>> LatticePolytope::lattice_points(int n) const {
  if (n < 1) throw std::invalid_argument("dilation factor must be positive");
  facet_data();
  Scanner scan(*this, n);
  std::vector<std::vector<Int>> pts;
  scan.sink = &pts;
  scan.run(0);
  return pts;  // lexicographic by construction
}

Int LatticePolytope::lattice_point_count(int n) const {
  if (n < 1) throw std::invalid_argument("dilation factor must be positive");
  facet_data();
  Scanner scan(*this, n);
  scan.run(0);
  return scan.count;
}

LatticePolytope build_bg(const Graph& g, Budgets budgets) {
  const int d = g.vertex_count();
  std::vector<std::vector<Int>> gens;
  gens.emplace_back(d, 0);
  for (int i = 0; i < d; ++i) {
    std::vector<Int> v(d, 0);
    v[i] = 1;
    gens.push_back(v);
    v[i] = -1;
    gens.push_back(std::move(v));
  }
  for (const auto& [u, w] : g.edges()) {
    for (int su : {1, -1}) {
      for (int sw : {1, -1}) {
        std::vector<Int> v(d, 0);
        v[u - 1] = su;
        v[w - 1] = sw;
        gens.push_back(std::move(v));
      }
    }
  }
  return LatticePolytope(d, std::move(gens), budgets);
}

LatticePolytope edge_polytope(const LoopGraph& h, Budgets budgets) {
  if (h.edges.empty() && h.loops.empty()) {
    throw std::invalid_argument("edge polytope of an edgeless graph");
  }
  std::vector<std::vector<Int>> gens;
  for (const auto& [u, v] : h.edges) {
    std::vector<Int> p(h.vertex_count, 0);
    p[u - 1] += 1;
    p[v - 1] += 1;
    gens.push_back(std::move(p));
  }
  for (int u : h.loops) {
    std::vector<Int> p(h.vertex_count, 0);
    p[u - 1] = 2;
    gens.push_back(std::move(p));
  }
  return LatticePolytope(h.vertex_count, std::move(gens), budgets);
}

LatticePolytope edge_polytope(const Graph& g, Budgets budgets) {
  LoopGraph h;
  h.vertex_count = g.vertex_count();
  h.edges = g.edges();
  return edge_polytope(h, budgets);
}

EhrhartData ehrhart_hstar(const LatticePolytope& p) {
  EhrhartData data;
  data.dimension = p.affine_dim();
  data.counts.assign(data.dimension + 1, 1);
  for (int n = 1; n <= data.dimension; ++n) data.counts[n] = p.lattice_point_count(n);
  data.hstar = series_numerator(data.counts, data.dimension);
  for (const Int& c : data.hstar.coeffs()) {
    if (c < 0) throw std::logic_error("negative h* coefficient: hull or count defect");
  }
  const int D = data.dimension;
  for (int n = 0; n <= D; ++n) {
    Int reproduced = 0;
    for (int i = 0; i <= data.hstar.degree(); ++i) {
      reproduced += data.hstar.coeff(i) * binomial(n + D - i, D);
    }
    if (reproduced != data.counts[n]) {
      throw std::logic_error("h* does not reproduce the counted dilates");
    }
  }
  return data;
}

Int normalized_volume(const LatticePolytope& p) {
  return ehrhart_hstar(p).hstar(Int(1));
}

bool is_reflexive(const LatticePolytope& p) {
  if (p.affine_dim() != p.ambient_dim()) {
    throw std::invalid_argument("reflexivity requires a full-dimensional polytope");
  }
  for (const auto& f : p.facets()) {
    if (f.rhs <= 0) throw std::invalid_argument("origin is not an interior point");
  }
  for (const auto& f : p.facets()) {
    if (f.rhs != 1) return false;
  }
  return true;
}

IdpResult is_idp(const LatticePolytope& p, int kmax) {
  if (kmax < 2) throw std::invalid_argument("kmax must be at least 2");
  auto base = p.lattice_points(1);
  std::set<std::vector<Int>> sums(base.begin(), base.end());
  for (int k = 2; k <= kmax; ++k) {
    std::set<std::vector<Int>> next;
    for (const auto& s : sums) {
      for (const auto& b : base) {
        std::vector<Int> t(s.size());
        for (size_t i = 0; i < s.size(); ++i) t[i] = s[i] + b[i];
        next.insert(std::move(t));
        if (next.size() > p.budgets().points) {
          throw resource_limit_error("Minkowski sum exceeded the point budget");
        }
      }
    }
    sums = std::move(next);
    for (const auto& pt : p.lattice_points(k)) {
      if (!sums.count(pt)) {
        return IdpResult{false, k, pt};
      }
    }
  }
  return IdpResult{};
}

LatticePolytope orthant_restriction(const LatticePolytope& p, const std::vector<int>& signs) {
  if (static_cast<int>(signs.size()) != p.ambient_dim()) {
    throw std::invalid_argument("sign vector dimension mismatch");
  }
  for (int s : signs) {
    if (s != 1 && s != -1) throw std::invalid_argument("signs must be +1 or -1");
  }
  std::vector<std::vector<Int>> kept;
  for (const auto& g : p.generators()) {
    bool inside = true;
    for (size_t i = 0; i < g.size() && inside; ++i) {
      if (g[i] * signs[i] < 0) inside = false;
    }
    if (inside) kept.push_back(g);
  }
  if (kept.empty()) throw std::invalid_argument("no generators in the requested orthant");
  return LatticePolytope(p.ambient_dim(), std::move(kept), p.budgets());
}

}  // namespace bgpoly

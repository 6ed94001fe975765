#include "hull.hpp"

#include <algorithm>
#include <cstdint>
#include <stdexcept>

namespace bgpoly::detail {

namespace {

using RatVec = std::vector<Rat>;
using RatMat = std::vector<RatVec>;

// Reduced row echelon form; returns the pivot columns.
std::vector<int> rref(RatMat& M) {
  std::vector<int> pivots;
  if (M.empty()) return pivots;
  const int rows = static_cast<int>(M.size());
  const int cols = static_cast<int>(M[0].size());
  int r = 0;
  for (int c = 0; c < cols && r < rows; ++c) {
    int sel = -1;
    for (int i = r; i < rows; ++i) {
      if (M[i][c] != 0) { sel = i; break; }
    }
    if (sel < 0) continue;
    std::swap(M[r], M[sel]);
    Rat inv = Rat(1) / M[r][c];
    for (int j = c; j < cols; ++j) M[r][j] *= inv;
    for (int i = 0; i < rows; ++i) {
      if (i == r || M[i][c] == 0) continue;
      Rat factor = M[i][c];
      for (int j = c; j < cols; ++j) M[i][j] -= factor * M[r][j];
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

IntVec rat_to_primitive(const RatVec& v) {
  Int lcm = 1;
  for (const Rat& x : v) {
    Int den = boost::multiprecision::denominator(x);
    lcm = lcm / boost::multiprecision::gcd(lcm, den) * den;
  }
  IntVec out(v.size());
  for (size_t i = 0; i < v.size(); ++i) {
    out[i] = boost::multiprecision::numerator(v[i]) *
             (lcm / boost::multiprecision::denominator(v[i]));
  }
  return make_primitive(std::move(out));
}

struct Ray {
  IntVec t;                         // coordinates in the pointed quotient
  std::vector<std::uint64_t> zero;  // tight processed constraints
};

bool subset_of(const std::vector<std::uint64_t>& a, const std::vector<std::uint64_t>& b) {
  for (size_t w = 0; w < a.size(); ++w) {
    if (a[w] & ~b[w]) return false;
  }
  return true;
}

Int dot(const IntVec& a, const IntVec& b) {
  Int s = 0;
  for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

}  // namespace

IntVec make_primitive(IntVec v) {
  Int g = 0;
  for (const Int& x : v) g = boost::multiprecision::gcd(g, x);
  if (g > 1) {
    for (Int& x : v) x /= g;
  }
  return v;
}

DualDescription dual_cone_rays(const std::vector<IntVec>& rows) {
  DualDescription out;
  if (rows.empty()) throw std::invalid_argument("dual description needs at least one row");
  const int m = static_cast<int>(rows.size());
  const int n = static_cast<int>(rows[0].size());

  RatMat M(m, RatVec(n));
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < n; ++j) M[i][j] = Rat(rows[i][j]);
  }
  std::vector<int> pivots = rref(M);
  const int r = static_cast<int>(pivots.size());
  out.rank = r;

  // nullspace basis: one vector per free column
  std::vector<bool> is_pivot(n, false);
  for (int c : pivots) is_pivot[c] = true;
  for (int f = 0; f < n; ++f) {
    if (is_pivot[f]) continue;
    RatVec v(n, 0);
    v[f] = 1;
    for (int i = 0; i < r; ++i) v[pivots[i]] = -M[i][f];
    out.lineality.push_back(rat_to_primitive(v));
  }

  // pointed quotient: keep only the pivot coordinates
  std::vector<IntVec> A(m, IntVec(r));
  for (int i = 0; i < m; ++i) {
    for (int k = 0; k < r; ++k) A[i][k] = rows[i][pivots[k]];
  }

  // initial simplicial subcone from the first r independent rows
  std::vector<int> basis_rows;
  {
    RatMat G;
    for (int i = 0; i < m && static_cast<int>(basis_rows.size()) < r; ++i) {
      RatMat trial = G;
      trial.emplace_back(A[i].begin(), A[i].end());
      RatMat probe = trial;
      if (static_cast<int>(rref(probe).size()) == static_cast<int>(trial.size())) {
        G = std::move(trial);
        basis_rows.push_back(i);
      }
    }
    if (static_cast<int>(basis_rows.size()) != r) {
      throw std::logic_error("rank deficiency while seeding the double description");
    }
  }

  // invert the basis matrix; its columns span the initial rays
  const int words = (m + 63) / 64;
  std::vector<Ray> rays;
  {
    RatMat B(r, RatVec(2 * r, 0));
    for (int i = 0; i < r; ++i) {
      for (int j = 0; j < r; ++j) B[i][j] = Rat(A[basis_rows[i]][j]);
      B[i][r + i] = 1;
    }
    rref(B);
    for (int j = 0; j < r; ++j) {
      RatVec col(r);
      for (int i = 0; i < r; ++i) col[i] = B[i][r + j];
      rays.push_back({rat_to_primitive(col), std::vector<std::uint64_t>(words, 0)});
    }
  }

  std::vector<bool> in_basis(m, false);
  for (int i : basis_rows) in_basis[i] = true;

  auto mark_tight = [&](Ray& ray, int idx) {
    ray.zero[idx / 64] |= std::uint64_t{1} << (idx % 64);
  };
  for (Ray& ray : rays) {
    for (int i : basis_rows) {
      if (dot(A[i], ray.t) == 0) mark_tight(ray, i);
    }
  }

  std::vector<int> processed = basis_rows;
  for (int idx = 0; idx < m; ++idx) {
    if (in_basis[idx]) continue;
    std::vector<Int> vals(rays.size());
    for (size_t k = 0; k < rays.size(); ++k) vals[k] = dot(A[idx], rays[k].t);
    bool any_neg = false;
    for (const Int& v : vals) {
      if (v < 0) { any_neg = true; break; }
    }
    if (!any_neg) {
      for (size_t k = 0; k < rays.size(); ++k) {
        if (vals[k] == 0) mark_tight(rays[k], idx);
      }
      processed.push_back(idx);
      continue;
    }
    std::vector<Ray> next;
    for (size_t k = 0; k < rays.size(); ++k) {
      if (vals[k] >= 0) {
        Ray kept = rays[k];
        if (vals[k] == 0) mark_tight(kept, idx);
        next.push_back(std::move(kept));
      }
    }
    for (size_t p = 0; p < rays.size(); ++p) {
      if (vals[p] <= 0) continue;
      for (size_t q = 0; q < rays.size(); ++q) {
        if (vals[q] >= 0) continue;
        std::vector<std::uint64_t> common(words);
        for (int w = 0; w < words; ++w) common[w] = rays[p].zero[w] & rays[q].zero[w];
        bool adjacent = true;
        for (size_t o = 0; o < rays.size() && adjacent; ++o) {
          if (o == p || o == q) continue;
          if (subset_of(common, rays[o].zero)) adjacent = false;
        }
        if (!adjacent) continue;
        IntVec combo(r);
        for (int i = 0; i < r; ++i) combo[i] = vals[p] * rays[q].t[i] - vals[q] * rays[p].t[i];
        Ray fresh{make_primitive(std::move(combo)), std::vector<std::uint64_t>(words, 0)};
        for (int i : processed) {
          if (dot(A[i], fresh.t) == 0) mark_tight(fresh, i);
        }
        mark_tight(fresh, idx);
        next.push_back(std::move(fresh));
      }
    }
    rays = std::move(next);
    processed.push_back(idx);
  }

  for (const Ray& ray : rays) {
    IntVec lifted(n, 0);
    for (int k = 0; k < r; ++k) lifted[pivots[k]] = ray.t[k];
    out.rays.push_back(std::move(lifted));
  }
  std::sort(out.rays.begin(), out.rays.end());
  std::sort(out.lineality.begin(), out.lineality.end());
  return out;
}

}  // namespace bgpoly::detail

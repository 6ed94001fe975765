#include "bgpoly/poset.hpp"

#include <algorithm>
#include <cctype>
#include <istream>
#include <sstream>
#include <stdexcept>

namespace bgpoly {

Poset::Poset(int size, std::vector<std::pair<int, int>> relations) : d_(size) {
  if (d_ <= 0) throw std::invalid_argument("poset must have at least one element");
  if (d_ > 64) throw resource_limit_error("posets limited to 64 elements");
  below_.assign(d_, 0);
  std::vector<std::vector<int>> direct(d_ + 1);
  for (const auto& [u, v] : relations) {
    if (u < 1 || v < 1 || u > d_ || v > d_) {
      throw std::invalid_argument("relation endpoint out of range 1.." + std::to_string(d_));
    }
    if (u >= v) {
      throw std::invalid_argument("relation " + std::to_string(u) + " < " + std::to_string(v) +
                                  " violates natural labeling (labels must increase)");
    }
    direct[v].push_back(u);
  }
  // transitive closure; relations only point down to smaller labels
  for (int v = 1; v <= d_; ++v) {
    std::uint64_t mask = 0;
    for (int u : direct[v]) mask |= below_[u - 1] | (std::uint64_t{1} << (u - 1));
    below_[v - 1] = mask;
  }
}

bool Poset::less(int u, int v) const {
  if (u < 1 || v < 1 || u > d_ || v > d_) throw std::invalid_argument("element out of range");
  if (u == v) return false;
  if (u < v) return (below_[v - 1] >> (u - 1)) & 1;
  return false;
}

namespace {

bool poset_comment_or_blank(const std::string& line) {
  for (char c : line) {
    if (c == '#') return true;
    if (!isspace(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

int parse_poset_int(const std::string& tok, int lineno) {
  size_t pos = 0;
  int value;
  try {
    value = std::stoi(tok, &pos);
  } catch (const std::exception&) {
    throw std::invalid_argument("line " + std::to_string(lineno) + ": expected integer, got '" +
                                tok + "'");
  }
  if (pos != tok.size()) {
    throw std::invalid_argument("line " + std::to_string(lineno) + ": bad integer '" + tok + "'");
  }
  return value;
}

}  // namespace

Poset Poset::parse(std::istream& in) {
  std::string line;
  int d = -1;
  std::vector<std::pair<int, int>> rels;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (poset_comment_or_blank(line)) continue;
    std::istringstream ls(line);
    std::vector<std::string> toks;
    std::string tok;
    while (ls >> tok) toks.push_back(tok);
    if (d < 0) {
      if (toks.size() != 1) {
        throw std::invalid_argument("line " + std::to_string(lineno) +
                                    ": expected the element count alone");
      }
      d = parse_poset_int(toks[0], lineno);
    } else {
      if (toks.size() != 3 || toks[1] != "<") {
        throw std::invalid_argument("line " + std::to_string(lineno) + ": expected 'u < v'");
      }
      int u = parse_poset_int(toks[0], lineno);
      int v = parse_poset_int(toks[2], lineno);
      rels.emplace_back(u, v);
    }
  }
  if (d < 0) throw std::invalid_argument("missing element count line");
  return Poset(d, std::move(rels));
}

Poset Poset::parse(const std::string& text) {
  std::istringstream in(text);
  return parse(in);
}

namespace {

struct ExtensionSearch {
  const Poset& p;
  int d;
  std::vector<Int> by_descents;
  BudgetMeter meter;

  ExtensionSearch(const Poset& poset, const Budgets& budgets)
      : p(poset), d(poset.size()), meter(budgets.extensions, "linear-extension enumeration") {
    by_descents.assign(d, 0);
  }

  void rec(std::uint64_t used, int placed, int prev, int descents) {
    if (placed == d) {
      meter.charge();
      by_descents[descents] += 1;
      return;
    }
    for (int v = 1; v <= d; ++v) {
      if ((used >> (v - 1)) & 1) continue;
      if ((p.below_masks()[v - 1] & ~used) != 0) continue;  // a predecessor is unplaced
      rec(used | (std::uint64_t{1} << (v - 1)), placed + 1, v,
          descents + (placed > 0 && prev > v ? 1 : 0));
    }
  }
};

}  // namespace

IntPolynomial eulerian_polynomial(const Poset& p, const Budgets& budgets) {
  ExtensionSearch search(p, budgets);
  search.rec(0, 0, 0, 0);
  return IntPolynomial(std::move(search.by_descents));
}

std::vector<Int> order_polynomial_values(const Poset& p, int m_max, const Budgets& budgets) {
  if (m_max < 1) throw std::invalid_argument("m_max must be positive");
  const int d = p.size();
  std::vector<Int> values;
  BudgetMeter meter(budgets.extensions, "order-polynomial enumeration");
  for (int m = 1; m <= m_max; ++m) {
    // assign values in label order; predecessors always carry smaller labels
    std::vector<int> sigma(d + 1, 0);
    Int count = 0;
    auto rec = [&](auto&& self, int v) -> void {
      if (v > d) {
        count += 1;
        return;
      }
      int lo = 1;
      std::uint64_t below = p.below_masks()[v - 1];
      while (below) {
        int u = __builtin_ctzll(below) + 1;
        below &= below - 1;
        lo = std::max(lo, sigma[u]);
      }
      for (int val = lo; val <= m; ++val) {
        meter.charge();
        sigma[v] = val;
        self(self, v + 1);
      }
      sigma[v] = 0;
    };
    rec(rec, 1);
    values.push_back(count);
  }
  return values;
}

Poset two_chain_poset(int p, int q) {
  if (p < 1 || q < 1) throw std::invalid_argument("chain lengths must be positive");
  std::vector<std::pair<int, int>> rels;
  for (int i = 1; i < p; ++i) rels.emplace_back(i, i + 1);
  for (int j = 1; j < q; ++j) rels.emplace_back(p + j, p + j + 1);
  return Poset(p + q, std::move(rels));
}

Graph complement_comparability_graph(const Poset& p) {
  const int d = p.size();
  std::vector<Edge> es;
  for (int u = 1; u <= d; ++u) {
    for (int v = u + 1; v <= d; ++v) {
      if (!p.less(u, v)) es.emplace_back(u, v);
    }
  }
  return Graph(d, std::move(es));
}

IntPolynomial kpq_w(int p, int q) {
  if (p < 1 || q < 1) throw std::invalid_argument("p and q must be positive");
  std::vector<Int> c(std::min(p, q) + 1);
  for (int i = 0; i <= std::min(p, q); ++i) c[i] = binomial(p, i) * binomial(q, i);
  return IntPolynomial(std::move(c));
}

IntPolynomial kpq_hstar(int p, int q) {
  if (p < 1 || q < 1) throw std::invalid_argument("p and q must be positive");
  const int d = p + q;
  std::vector<Int> c(d + 1, 0);
  for (int i = 0; i <= std::min(p, q); ++i) {
    Int scale = int_pow(4, i) * binomial(p, i) * binomial(q, i);
    for (int j = i; j <= d - i; ++j) c[j] += scale * binomial(d - 2 * i, j - i);
  }
  return IntPolynomial(std::move(c));
}

}  // namespace bgpoly

#include "bgpoly/report.hpp"

#include <chrono>
#include <set>
#include <sstream>
#include <stdexcept>

#include "bgpoly/interior.hpp"
#include "bgpoly/poly.hpp"
#include "bgpoly/polytope.hpp"

namespace bgpoly {

namespace {

using nlohmann::ordered_json;

ordered_json poly_json(const IntPolynomial& f) {
  ordered_json coeffs = ordered_json::array();
  for (const Int& c : f.coeffs()) coeffs.push_back(c.str());
  if (f.is_zero()) coeffs.push_back("0");
  return ordered_json{{"coeffs", coeffs}};
}

ordered_json gamma_json(const GammaVector& g) {
  ordered_json coeffs = ordered_json::array();
  for (const Int& c : g.gammas) coeffs.push_back(c.str());
  return ordered_json{{"coeffs", coeffs}, {"degree_context", g.degree_context}};
}

double elapsed_ms(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
      .count();
}

std::string poly_text(const IntPolynomial& f) { return f.to_string(); }

}  // namespace

ordered_json analyze_graph(const Graph& g, const AnalyzeOptions& opts) {
  const auto start = std::chrono::steady_clock::now();
  const Budgets& budgets = opts.budgets;
  ordered_json report;
  const auto comps = components(g);
  report["input"] = {{"vertices", g.vertex_count()},
                     {"edges", g.edge_count()},
                     {"components", comps.size()}};
  auto bp = bipartition(g);
  const bool occ = satisfies_occ(g, budgets);
  report["predicates"] = {{"bipartite", bool(bp)},
                          {"odd_cycle_condition", occ},
                          {"chordal_bipartite", is_chordal_bipartite(g, budgets)}};

  ordered_json polys;
  ordered_json certs;
  polys["interior_hat"] = nullptr;
  polys["hstar"] = nullptr;
  polys["gamma"] = nullptr;
  certs["reflexive"] = nullptr;
  certs["idp"] = nullptr;
  certs["interior_hat_real_rooted"] = nullptr;
  certs["hstar_real_rooted"] = nullptr;

  IntPolynomial hstar;
  bool have_hstar = false;
  if (bp) {
    IntPolynomial interior = interior_hat_via_matchings(g, budgets);
    hstar = gamma_substitute(interior, g.vertex_count());
    have_hstar = true;
    GammaVector gamma = gamma_extract(hstar, g.vertex_count());
    // integrity: the gamma vector must be 4^k times the interior coefficients
    for (int k = 0; k < static_cast<int>(gamma.gammas.size()); ++k) {
      if (gamma.gammas[k] != interior.coeff(k) * int_pow(4, k)) {
        throw std::logic_error("gamma vector disagrees with the interior polynomial");
      }
    }
    if (hstar(Int(1)) != int_pow(2, g.vertex_count()) * interior(Int(1))) {
      throw std::logic_error("h* evaluation identity failed");
    }
    polys["interior_hat"] = poly_json(interior);
    polys["hstar"] = poly_json(hstar);
    polys["gamma"] = gamma_json(gamma);
    certs["interior_hat_real_rooted"] = real_root_certificate(interior).is_real_rooted;
    certs["hstar_real_rooted"] = real_root_certificate(hstar).is_real_rooted;
  }

  if (opts.run_geometry && g.vertex_count() <= budgets.hull_dim_cap) {
    LatticePolytope bg = build_bg(g, budgets);
    certs["reflexive"] = is_reflexive(bg);
    if (g.vertex_count() <= opts.geom_dim_max) {
      EhrhartData ehr = ehrhart_hstar(bg);
      if (have_hstar && !(ehr.hstar == hstar)) {
        throw std::logic_error("Ehrhart h* disagrees with the matching formula");
      }
      if (!have_hstar) polys["hstar"] = poly_json(ehr.hstar);
      IdpResult idp = is_idp(bg, opts.kmax);
      ordered_json idp_json{{"checked_to", opts.kmax}, {"holds", idp.idp}};
      if (!idp.idp) {
        idp_json["failed_dilation"] = idp.failed_dilation;
        ordered_json w = ordered_json::array();
        for (const Int& c : *idp.witness) w.push_back(c.str());
        idp_json["witness"] = w;
      }
      certs["idp"] = idp_json;
    }
  }

  report["polynomials"] = polys;
  report["certificates"] = certs;
  if (opts.timings) {
    report["timings"] = {{"total_ms", elapsed_ms(start)}};
  }
  return report;
}

std::string render_analysis_text(const ordered_json& r) {
  std::ostringstream out;
  auto yn = [](const ordered_json& v) -> std::string {
    if (v.is_null()) return "-";
    return v.get<bool>() ? "yes" : "no";
  };
  auto poly_line = [](const ordered_json& v) -> std::string {
    if (v.is_null()) return "-";
    std::string s = "[";
    bool first = true;
    for (const auto& c : v.at("coeffs")) {
      if (!first) s += ", ";
      s += c.get<std::string>();
      first = false;
    }
    return s + "]";
  };
  out << "graph: " << r.at("input").at("vertices") << " vertices, "
      << r.at("input").at("edges") << " edges, " << r.at("input").at("components")
      << " component(s)\n";
  out << "bipartite: " << yn(r.at("predicates").at("bipartite")) << "\n";
  out << "odd cycle condition: " << yn(r.at("predicates").at("odd_cycle_condition")) << "\n";
  out << "chordal bipartite: " << yn(r.at("predicates").at("chordal_bipartite")) << "\n";
  out << "interior I_hat: " << poly_line(r.at("polynomials").at("interior_hat")) << "\n";
  out << "h*: " << poly_line(r.at("polynomials").at("hstar")) << "\n";
  out << "gamma: " << poly_line(r.at("polynomials").at("gamma")) << "\n";
  out << "reflexive: " << yn(r.at("certificates").at("reflexive")) << "\n";
  const auto& idp = r.at("certificates").at("idp");
  if (idp.is_null()) {
    out << "IDP: -\n";
  } else {
    out << "IDP (k <= " << idp.at("checked_to") << "): "
        << (idp.at("holds").get<bool>() ? "yes" : "no");
    if (!idp.at("holds").get<bool>()) {
      out << " (witness at k = " << idp.at("failed_dilation") << ")";
    }
    out << "\n";
  }
  out << "I_hat real-rooted: " << yn(r.at("certificates").at("interior_hat_real_rooted"))
      << "\n";
  out << "h* real-rooted: " << yn(r.at("certificates").at("hstar_real_rooted")) << "\n";
  if (r.contains("timings")) {
    out << "total time: " << r.at("timings").at("total_ms") << " ms\n";
  }
  return out.str();
}

namespace {

struct Checker {
  VerifyResult result;

  void check(bool ok, const std::string& what, const std::string& detail = "") {
    if (ok) {
      result.lines.push_back("ok: " + what);
    } else {
      result.pass = false;
      result.lines.push_back("MISMATCH: " + what + (detail.empty() ? "" : " (" + detail + ")"));
    }
  }

  void note(const std::string& text) { result.lines.push_back("note: " + text); }
};

}  // namespace

VerifyResult verify_graph(const Graph& g, bool full, const Budgets& budgets,
                          int geom_dim_max) {
  Checker ck;
  const int d = g.vertex_count();
  auto bp = bipartition(g);
  const bool occ = satisfies_occ(g, budgets);

  IntPolynomial hstar_fast;
  if (bp) {
    IntPolynomial interior = interior_hat_via_matchings(g, budgets);
    Graph hg = hat(g, *bp);
    IntPolynomial left = interior_polynomial_oracle(
        hypergraph_from_bipartite(hg, SideSelector::Left), budgets);
    IntPolynomial right = interior_polynomial_oracle(
        hypergraph_from_bipartite(hg, SideSelector::Right), budgets);
    ck.check(left == interior, "hypertree oracle (left side) equals the matching formula",
             left.to_string() + " vs " + interior.to_string());
    ck.check(right == interior, "hypertree oracle (right side) equals the matching formula",
             right.to_string() + " vs " + interior.to_string());

    hstar_fast = gamma_substitute(interior, d);
    ck.check(is_palindromic(hstar_fast, d), "h* is palindromic");
    GammaVector gamma = gamma_extract(hstar_fast, d);
    bool gamma_ok = true;
    for (int k = 0; k < static_cast<int>(gamma.gammas.size()); ++k) {
      if (gamma.gammas[k] != interior.coeff(k) * int_pow(4, k)) gamma_ok = false;
    }
    ck.check(gamma_ok, "gamma vector equals 4^k interior coefficients");
    ck.check(gamma.nonnegative(), "gamma vector is nonnegative");
    ck.check(hstar_fast(Int(1)) == int_pow(2, d) * interior(Int(1)),
             "h*(1) equals 2^d I(1)");
  } else {
    ck.note("non-bipartite: reflexivity expected false, IDP expected " +
            std::string(occ ? "true" : "false"));
  }

  if (full) {
    if (d > geom_dim_max) {
      throw std::invalid_argument("full verification limited to " +
                                  std::to_string(geom_dim_max) + " vertices");
    }
    LatticePolytope bg = build_bg(g, budgets);
    EhrhartData ehr = ehrhart_hstar(bg);
    IntPolynomial sub = hstar_bg_subgraph_formula(g, budgets);
    ck.check(sub == ehr.hstar, "subgraph formula equals the Ehrhart oracle",
             sub.to_string() + " vs " + ehr.hstar.to_string());
    if (bp) {
      ck.check(hstar_fast == ehr.hstar, "matching formula equals the Ehrhart oracle",
               hstar_fast.to_string() + " vs " + ehr.hstar.to_string());
    }
    Int vol_tilde = normalized_volume(edge_polytope(tilde(g), budgets));
    ck.check(ehr.hstar(Int(1)) == int_pow(2, d) * vol_tilde,
             "Vol(B_G) equals 2^d Vol(P of the looped extension)");
    // face property: lattice points at coordinate sum 2 are exactly the edge
    // vectors, and no lattice point exceeds that sum
    std::set<std::vector<Int>> expected;
    for (const auto& [u, v] : g.edges()) {
      std::vector<Int> p(d, 0);
      p[u - 1] = 1;
      p[v - 1] = 1;
      expected.insert(std::move(p));
    }
    std::set<std::vector<Int>> at_two;
    bool over = false;
    for (const auto& pt : bg.lattice_points(1)) {
      Int s = 0;
      for (const Int& c : pt) s += c;
      if (s == 2) at_two.insert(pt);
      if (s > 2) over = true;
    }
    ck.check(!over && at_two == expected,
             "lattice points at coordinate sum 2 are exactly the edge vectors");
    ck.check(is_reflexive(bg) == bool(bp), "reflexivity matches bipartiteness");
  }
  return ck.result;
}

}  // namespace bgpoly

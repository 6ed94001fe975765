#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "bgpoly/graph.hpp"
#include "bgpoly/interior.hpp"
#include "bgpoly/poly.hpp"
#include "bgpoly/polytope.hpp"
#include "bgpoly/poset.hpp"
#include "bgpoly/report.hpp"

namespace {

using bgpoly::Budgets;
using bgpoly::Graph;
using bgpoly::IntPolynomial;
using nlohmann::ordered_json;

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

ordered_json poly_json(const IntPolynomial& f) {
  ordered_json coeffs = ordered_json::array();
  for (const auto& c : f.coeffs()) coeffs.push_back(c.str());
  if (f.is_zero()) coeffs.push_back("0");
  return ordered_json{{"coeffs", coeffs}};
}

std::string join_tokens(const std::vector<std::string>& toks) {
  std::string s;
  for (const auto& t : toks) {
    if (!s.empty()) s += ' ';
    s += t;
  }
  return s;
}

void emit(const ordered_json& doc, bool as_json, const std::string& text) {
  if (as_json) {
    std::cout << doc.dump(2) << "\n";
  } else {
    std::cout << text;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact graph polytopes, interior polynomials and h*-certificates"};
  app.require_subcommand(1);

  Budgets budgets;
  try {
    budgets = Budgets::from_env();
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  app.add_option("--budget-points", budgets.points, "lattice-scan node budget");
  app.add_option("--budget-trees", budgets.trees, "spanning-tree budget");
  app.add_option("--budget-cycles", budgets.cycles, "chordless-cycle budget");
  app.add_option("--budget-extensions", budgets.extensions, "linear-extension budget");
  app.add_option("--budget-matchings", budgets.matchings, "matching budget");
  app.add_option("--hull-dim-cap", budgets.hull_dim_cap, "facet enumeration dimension cap");

  bool as_json = false;

  auto* analyze = app.add_subcommand("analyze", "analysis report for an edge-list file");
  std::string analyze_path;
  bgpoly::AnalyzeOptions aopts;
  bool no_ehrhart = false;
  analyze->add_option("file", analyze_path, "edge-list file")->required();
  analyze->add_flag("--json", as_json, "machine-readable output");
  analyze->add_option("--kmax", aopts.kmax, "largest dilation for the IDP check")
      ->check(CLI::Range(2, 64));
  analyze->add_flag("--no-ehrhart", no_ehrhart, "skip facet/Ehrhart/IDP computations");
  analyze->add_option("--geom-dim-max", aopts.geom_dim_max,
                      "skip Ehrhart/IDP above this vertex count");
  analyze->add_flag("--timings", aopts.timings, "include timings (non-reproducible output)");

  auto* verify = app.add_subcommand("verify", "cross-check the formulas on one graph");
  std::string verify_path;
  std::string verify_level = "fast";
  verify->add_option("file", verify_path, "edge-list file")->required();
  verify->add_option("--level", verify_level, "fast or full")
      ->check(CLI::IsMember({"fast", "full"}));
  int verify_dim_max = 6;
  verify->add_option("--geom-dim-max", verify_dim_max,
                     "vertex bound for full verification");

  auto* poly = app.add_subcommand("poly", "coefficient-level polynomial tests");
  poly->require_subcommand(1);
  std::vector<std::string> coeff_args;
  std::string coeffs_f, coeffs_g;
  int degree_opt = -1;

  auto* poly_gamma = poly->add_subcommand("gamma", "gamma vector of a palindromic polynomial");
  poly_gamma->add_option("coeffs", coeff_args, "coefficients, constant first")->required();
  poly_gamma->add_option("--degree", degree_opt, "palindromic context degree");
  poly_gamma->add_flag("--json", as_json);

  auto* poly_subst = poly->add_subcommand("substitute", "expand sum g_k 4^k x^k (x+1)^(d-2k)");
  poly_subst->add_option("coeffs", coeff_args, "coefficients, constant first")->required();
  poly_subst->add_option("--degree", degree_opt, "target degree d")->required();
  poly_subst->add_flag("--json", as_json);

  auto* poly_rr = poly->add_subcommand("realrooted", "exact real-rootedness certificate");
  poly_rr->add_option("coeffs", coeff_args, "coefficients, constant first")->required();
  poly_rr->add_flag("--json", as_json);

  auto* poly_inter = poly->add_subcommand("interlaces", "exact root interlacing test");
  poly_inter->add_option("f", coeffs_f, "first polynomial, comma-separated")->required();
  poly_inter->add_option("g", coeffs_g, "second polynomial, comma-separated")->required();
  poly_inter->add_flag("--json", as_json);

  auto* poly_shape = poly->add_subcommand("shape", "palindromic/unimodal/log-concave tests");
  poly_shape->add_option("coeffs", coeff_args, "coefficients, constant first")->required();
  poly_shape->add_flag("--json", as_json);

  auto* kpq = app.add_subcommand("kpq", "closed forms for complete bipartite graphs");
  int kp = 0, kq = 0;
  kpq->add_option("p", kp, "first side")->required()->check(CLI::PositiveNumber);
  kpq->add_option("q", kq, "second side")->required()->check(CLI::PositiveNumber);
  kpq->add_flag("--json", as_json);

  auto* eulerian = app.add_subcommand("eulerian", "descent polynomial of a poset file");
  std::string poset_path;
  eulerian->add_option("file", poset_path, "poset file")->required();
  eulerian->add_flag("--json", as_json);

  auto* interior = app.add_subcommand("interior", "interior polynomial via the hypertree oracle");
  std::string interior_path;
  std::string edge_side = "right";
  interior->add_option("file", interior_path, "edge-list file (connected bipartite)")->required();
  interior->add_option("--edge-side", edge_side, "which side indexes the hyperedges")
      ->check(CLI::IsMember({"left", "right"}));
  interior->add_flag("--json", as_json);

  auto* hstar = app.add_subcommand("hstar", "h* of the graph polytope");
  std::string hstar_path;
  std::string method = "auto";
  hstar->add_option("file", hstar_path, "edge-list file")->required();
  hstar->add_option("--method", method, "auto, fast, subgraph or ehrhart")
      ->check(CLI::IsMember({"auto", "fast", "subgraph", "ehrhart"}));
  int hstar_dim_max = 6;
  hstar->add_option("--geom-dim-max", hstar_dim_max, "vertex bound for the Ehrhart oracle");
  hstar->add_flag("--json", as_json);

  CLI11_PARSE(app, argc, argv);

  try {
    if (*analyze) {
      aopts.run_geometry = !no_ehrhart;
      aopts.budgets = budgets;
      Graph g = Graph::parse_edge_list(slurp(analyze_path));
      ordered_json report = analyze_graph(g, aopts);
      emit(report, as_json, bgpoly::render_analysis_text(report));
      return 0;
    }
    if (*verify) {
      Graph g = Graph::parse_edge_list(slurp(verify_path));
      bgpoly::VerifyResult res =
          bgpoly::verify_graph(g, verify_level == "full", budgets, verify_dim_max);
      std::ostringstream out;
      for (const auto& line : res.lines) out << line << "\n";
      out << (res.pass ? "PASS" : "FAIL") << "\n";
      std::cout << out.str();
      return res.pass ? 0 : 1;
    }
    if (*poly_gamma) {
      IntPolynomial f = IntPolynomial::parse(join_tokens(coeff_args));
      int d = degree_opt >= 0 ? degree_opt : f.degree();
      bgpoly::GammaVector gv = bgpoly::gamma_extract(f, d);
      IntPolynomial gp(std::vector<bgpoly::Int>(gv.gammas.begin(), gv.gammas.end()));
      emit(ordered_json{{"gamma", poly_json(gp)},
                        {"degree_context", d},
                        {"gamma_positive", gv.nonnegative()}},
           as_json,
           "gamma = " + gp.to_string() + "\ngamma positive: " +
               (gv.nonnegative() ? "yes" : "no") + "\n");
      return 0;
    }
    if (*poly_subst) {
      IntPolynomial g = IntPolynomial::parse(join_tokens(coeff_args));
      IntPolynomial out = bgpoly::gamma_substitute(g, degree_opt);
      emit(poly_json(out), as_json, out.to_string() + "\n");
      return 0;
    }
    if (*poly_rr) {
      IntPolynomial f = IntPolynomial::parse(join_tokens(coeff_args));
      bgpoly::RootCountCertificate cert = bgpoly::real_root_certificate(f);
      emit(ordered_json{{"degree", cert.total_degree},
                        {"distinct_real_roots", cert.distinct_real_roots},
                        {"real_rooted", cert.is_real_rooted}},
           as_json,
           "degree: " + std::to_string(cert.total_degree) +
               "\ndistinct real roots: " + std::to_string(cert.distinct_real_roots) +
               "\nreal-rooted: " + (cert.is_real_rooted ? "yes" : "no") + "\n");
      return 0;
    }
    if (*poly_inter) {
      IntPolynomial f = IntPolynomial::parse(coeffs_f);
      IntPolynomial g = IntPolynomial::parse(coeffs_g);
      bool ok = bgpoly::interlaces(f, g);
      emit(ordered_json{{"interlaces", ok}}, as_json,
           std::string("interlaces: ") + (ok ? "yes" : "no") + "\n");
      return 0;
    }
    if (*poly_shape) {
      IntPolynomial f = IntPolynomial::parse(join_tokens(coeff_args));
      bool pal = bgpoly::is_palindromic(f, f.degree());
      bool uni = bgpoly::is_unimodal(f);
      bool lc = bgpoly::is_log_concave(f);
      emit(ordered_json{{"palindromic", pal}, {"unimodal", uni}, {"log_concave", lc}},
           as_json,
           std::string("palindromic: ") + (pal ? "yes" : "no") + "\nunimodal: " +
               (uni ? "yes" : "no") + "\nlog-concave: " + (lc ? "yes" : "no") + "\n");
      return 0;
    }
    if (*kpq) {
      IntPolynomial w = bgpoly::kpq_w(kp, kq);
      IntPolynomial h = bgpoly::kpq_hstar(kp, kq);
      emit(ordered_json{{"w", poly_json(w)}, {"hstar", poly_json(h)}}, as_json,
           "W = " + w.to_string() + "\nhstar = " + h.to_string() + "\n");
      return 0;
    }
    if (*eulerian) {
      bgpoly::Poset p = bgpoly::Poset::parse(slurp(poset_path));
      IntPolynomial w = bgpoly::eulerian_polynomial(p, budgets);
      Graph g = bgpoly::complement_comparability_graph(p);
      ordered_json doc{{"w", poly_json(w)}};
      std::string text = "W = " + w.to_string() + "\n";
      if (bgpoly::bipartition(g)) {
        IntPolynomial h = bgpoly::gamma_substitute(w, p.size());
        doc["hstar"] = poly_json(h);
        text += "hstar = " + h.to_string() + "\n";
      } else {
        doc["hstar"] = nullptr;
        text += "hstar: skipped (incomparability graph is not bipartite)\n";
      }
      emit(doc, as_json, text);
      return 0;
    }
    if (*interior) {
      Graph g = Graph::parse_edge_list(slurp(interior_path));
      auto side = edge_side == "left" ? bgpoly::SideSelector::Left : bgpoly::SideSelector::Right;
      bgpoly::Hypergraph h = bgpoly::hypergraph_from_bipartite(g, side);
      IntPolynomial ip = bgpoly::interior_polynomial_oracle(h, budgets);
      emit(ordered_json{{"interior", poly_json(ip)}, {"hypertrees", ip(bgpoly::Int(1)).str()}},
           as_json,
           "I = " + ip.to_string() + "\nhypertrees: " + ip(bgpoly::Int(1)).str() + "\n");
      return 0;
    }
    if (*hstar) {
      Graph g = Graph::parse_edge_list(slurp(hstar_path));
      IntPolynomial h;
      std::string used = method;
      const bool bip = bool(bgpoly::bipartition(g));
      if (method == "auto") used = bip ? "fast" : "ehrhart";
      if (used == "fast") {
        h = bgpoly::hstar_bg_fast(g, budgets);
      } else if (used == "subgraph") {
        h = bgpoly::hstar_bg_subgraph_formula(g, budgets);
      } else {
        if (g.vertex_count() > hstar_dim_max) {
          throw std::invalid_argument("Ehrhart oracle limited to " +
                                      std::to_string(hstar_dim_max) +
                                      " vertices (see --geom-dim-max)");
        }
        h = bgpoly::ehrhart_hstar(bgpoly::build_bg(g, budgets)).hstar;
      }
      emit(ordered_json{{"hstar", poly_json(h)}, {"method", used}}, as_json,
           "hstar = " + h.to_string() + "\nmethod: " + used + "\n");
      return 0;
    }
  } catch (const bgpoly::resource_limit_error& e) {
    std::cerr << "resource limit: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "bgpoly/graph.hpp"
#include "bgpoly/interior.hpp"
#include "bgpoly/poly.hpp"
#include "bgpoly/polytope.hpp"
#include "bgpoly/poset.hpp"

namespace py = pybind11;
using namespace bgpoly;

namespace {

py::int_ big_to_py(const Int& v) { return py::int_(py::str(v.str())); }

Int py_to_big(const py::int_& v) { return Int(py::str(v).cast<std::string>()); }

py::list poly_to_list(const IntPolynomial& f) {
  py::list out;
  for (const Int& c : f.coeffs()) out.append(big_to_py(c));
  return out;
}

IntPolynomial poly_from_obj(const py::object& obj) {
  std::vector<Int> cs;
  for (auto item : obj) cs.push_back(py_to_big(py::int_(py::reinterpret_borrow<py::object>(item))));
  return IntPolynomial(std::move(cs));
}

py::list points_to_list(const std::vector<std::vector<Int>>& pts) {
  py::list out;
  for (const auto& p : pts) {
    py::list row;
    for (const Int& c : p) row.append(big_to_py(c));
    out.append(row);
  }
  return out;
}

}  // namespace

PYBIND11_MODULE(_bgpoly, m) {
  m.doc() = "exact graph polytopes, interior polynomials and h*-certificates";

  py::register_exception<resource_limit_error>(m, "ResourceLimitError", PyExc_RuntimeError);

  py::class_<Graph>(m, "Graph")
      .def(py::init([](int d, const std::vector<std::pair<int, int>>& edges) {
             return Graph(d, std::vector<Edge>(edges.begin(), edges.end()));
           }),
           py::arg("vertex_count"), py::arg("edges"))
      .def_static("parse_edge_list",
                  [](const std::string& text) { return Graph::parse_edge_list(text); })
      .def_property_readonly("vertex_count", &Graph::vertex_count)
      .def_property_readonly("edges", [](const Graph& g) { return g.edges(); })
      .def("__eq__", [](const Graph& a, const Graph& b) { return a == b; })
      .def("__repr__", [](const Graph& g) {
        std::ostringstream s;
        s << "Graph(d=" << g.vertex_count() << ", edges=" << g.edge_count() << ")";
        return s.str();
      });

  py::class_<Bipartition>(m, "Bipartition")
      .def_readonly("left", &Bipartition::left)
      .def_readonly("right", &Bipartition::right);

  py::class_<MatchingProfile>(m, "MatchingProfile")
      .def_readonly("set_counts", &MatchingProfile::set_counts)
      .def_readonly("matching_counts", &MatchingProfile::matching_counts);

  m.def("bipartition", [](const Graph& g) -> py::object {
    auto b = bipartition(g);
    return b ? py::cast(*b) : py::none();
  });
  m.def("components", [](const Graph& g) {
    py::list out;
    for (const auto& c : components(g)) {
      out.append(py::make_tuple(c.graph, c.original_vertices));
    }
    return out;
  });
  m.def("chordless_cycles",
        [](const Graph& g, int min_len) { return chordless_cycles(g, min_len); },
        py::arg("g"), py::arg("min_len") = 3);
  m.def("satisfies_occ", [](const Graph& g) { return satisfies_occ(g); });
  m.def("is_chordal_bipartite", [](const Graph& g) { return is_chordal_bipartite(g); });
  m.def("matching_profile", [](const Graph& g) { return matching_profile(g); });
  m.def("complement", &complement);
  m.def("hat", [](const Graph& g) { return hat(g); });
  m.def("is_bipartite_permutation", [](const Graph& g) -> py::object {
    auto w = is_bipartite_permutation(g);
    return w ? py::make_tuple(w->left, w->right) : py::none();
  });

  m.def("is_palindromic",
        [](const py::object& f, int d) { return is_palindromic(poly_from_obj(f), d); });
  m.def("is_unimodal", [](const py::object& f) { return is_unimodal(poly_from_obj(f)); });
  m.def("is_log_concave", [](const py::object& f) { return is_log_concave(poly_from_obj(f)); });
  m.def("gamma_extract", [](const py::object& f, int d) {
    GammaVector g = gamma_extract(poly_from_obj(f), d);
    py::list out;
    for (const Int& c : g.gammas) out.append(big_to_py(c));
    return out;
  });
  m.def("gamma_substitute", [](const py::object& g, int d) {
    return poly_to_list(gamma_substitute(poly_from_obj(g), d));
  });
  m.def("real_rooted", [](const py::object& f) {
    return real_root_certificate(poly_from_obj(f)).is_real_rooted;
  });
  m.def("distinct_real_roots", [](const py::object& f) {
    return real_root_certificate(poly_from_obj(f)).distinct_real_roots;
  });
  m.def("interlaces", [](const py::object& f, const py::object& g) {
    return interlaces(poly_from_obj(f), poly_from_obj(g));
  });

  py::class_<LatticePolytope>(m, "LatticePolytope")
      .def_property_readonly("ambient_dim", &LatticePolytope::ambient_dim)
      .def_property_readonly("affine_dim", &LatticePolytope::affine_dim)
      .def_property_readonly("generators",
                             [](const LatticePolytope& p) { return points_to_list(p.generators()); })
      .def("facets",
           [](const LatticePolytope& p) {
             py::list out;
             for (const auto& f : p.facets()) {
               py::list normal;
               for (const Int& c : f.normal) normal.append(big_to_py(c));
               out.append(py::make_tuple(normal, big_to_py(f.rhs)));
             }
             return out;
           })
      .def("lattice_points",
           [](const LatticePolytope& p, int n) { return points_to_list(p.lattice_points(n)); },
           py::arg("n") = 1)
      .def("lattice_point_count",
           [](const LatticePolytope& p, int n) { return big_to_py(p.lattice_point_count(n)); },
           py::arg("n") = 1);

  m.def("build_bg", [](const Graph& g) { return build_bg(g); });
  m.def("edge_polytope", [](const Graph& g) { return edge_polytope(g); });
  m.def("edge_polytope_tilde", [](const Graph& g) { return edge_polytope(tilde(g)); });
  m.def("ehrhart_hstar", [](const LatticePolytope& p) {
    EhrhartData e = ehrhart_hstar(p);
    py::list counts;
    for (const Int& c : e.counts) counts.append(big_to_py(c));
    return py::make_tuple(e.dimension, counts, poly_to_list(e.hstar));
  });
  m.def("normalized_volume", [](const LatticePolytope& p) { return big_to_py(normalized_volume(p)); });
  m.def("is_reflexive", &is_reflexive);
  m.def("is_idp", [](const LatticePolytope& p, int kmax) -> py::object {
    IdpResult r = is_idp(p, kmax);
    if (r.idp) return py::make_tuple(true, py::none(), py::none());
    py::list w;
    for (const Int& c : *r.witness) w.append(big_to_py(c));
    return py::make_tuple(false, r.failed_dilation, w);
  }, py::arg("p"), py::arg("kmax") = 3);
  m.def("orthant_restriction", [](const LatticePolytope& p, const std::vector<int>& signs) {
    return orthant_restriction(p, signs);
  });

  m.def("interior_hat_via_matchings",
        [](const Graph& g) { return poly_to_list(interior_hat_via_matchings(g)); });
  m.def("hstar_bg_fast", [](const Graph& g) { return poly_to_list(hstar_bg_fast(g)); });
  m.def("hstar_bg_subgraph_formula",
        [](const Graph& g) { return poly_to_list(hstar_bg_subgraph_formula(g)); });
  m.def("interior_polynomial",
        [](const Graph& g, const std::string& side) {
          auto sel = side == "left" ? SideSelector::Left : SideSelector::Right;
          return poly_to_list(interior_polynomial_oracle(hypergraph_from_bipartite(g, sel)));
        },
        py::arg("g"), py::arg("side") = "right");

  py::class_<Poset>(m, "Poset")
      .def(py::init([](int d, const std::vector<std::pair<int, int>>& rels) {
             return Poset(d, rels);
           }),
           py::arg("size"), py::arg("relations"))
      .def_static("parse", [](const std::string& text) { return Poset::parse(text); })
      .def_property_readonly("size", &Poset::size)
      .def("less", &Poset::less);

  m.def("eulerian_polynomial", [](const Poset& p) { return poly_to_list(eulerian_polynomial(p)); });
  m.def("order_polynomial_values", [](const Poset& p, int m_max) {
    py::list out;
    for (const Int& v : order_polynomial_values(p, m_max)) out.append(big_to_py(v));
    return out;
  });
  m.def("two_chain_poset", &two_chain_poset);
  m.def("complement_comparability_graph", &complement_comparability_graph);
  m.def("kpq_w", [](int p, int q) { return poly_to_list(kpq_w(p, q)); });
  m.def("kpq_hstar", [](int p, int q) { return poly_to_list(kpq_hstar(p, q)); });
}

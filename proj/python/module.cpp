#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <map>

#include "binconf/families.hpp"
#include "binconf/glue.hpp"
#include "binconf/hyperplane.hpp"
#include "binconf/io.hpp"
#include "binconf/iso.hpp"
#include "binconf/triangle.hpp"

namespace py = pybind11;
using namespace binconf;

namespace {

GluingMap map_from_dict(const IncidenceStructure& k1, const IncidenceStructure& k2,
                        const std::map<std::string, std::string>& raw) {
  return validate_gluing(k1, k2, raw);
}

std::map<std::string, std::string> map_to_dict(const GluingMap& m) {
  return {m.entries.begin(), m.entries.end()};
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "finite incidence structures, binomial configurations, hyperplane "
            "decompositions and Pascal triangles of configurations";

  py::register_exception<Error>(m, "BinconfError");

  py::class_<ConfigurationType>(m, "ConfigurationType")
      .def_readonly("nu", &ConfigurationType::nu)
      .def_readonly("rho", &ConfigurationType::rho)
      .def_readonly("beta", &ConfigurationType::beta)
      .def_readonly("kappa", &ConfigurationType::kappa)
      .def("__iter__",
           [](const ConfigurationType& t) {
             return py::iter(py::make_tuple(t.nu, t.rho, t.beta, t.kappa));
           })
      .def("__repr__", [](const ConfigurationType& t) {
        return "(" + std::to_string(t.nu) + "_" + std::to_string(t.rho) + " " +
               std::to_string(t.beta) + "_" + std::to_string(t.kappa) + ")";
      });

  py::class_<BinomialSignature>(m, "BinomialSignature")
      .def_readonly("k", &BinomialSignature::k)
      .def_readonly("m", &BinomialSignature::m)
      .def("__iter__",
           [](const BinomialSignature& s) { return py::iter(py::make_tuple(s.k, s.m)); })
      .def("__repr__", [](const BinomialSignature& s) {
        return "B(" + std::to_string(s.k) + "," + std::to_string(s.m) + ")";
      });

  py::class_<IncidenceStructure>(m, "IncidenceStructure")
      .def_static(
          "build",
          [](const std::vector<std::string>& points,
             const std::vector<std::pair<std::string, std::vector<std::string>>>& lines) {
            std::vector<LineSpec> specs;
            for (const auto& [id, pts] : lines) specs.push_back({id, pts});
            return IncidenceStructure::build(points, specs);
          },
          py::arg("points"), py::arg("lines"))
      .def_property_readonly("points", &IncidenceStructure::point_ids)
      .def_property_readonly("lines", &IncidenceStructure::line_ids)
      .def("point_rank", &IncidenceStructure::point_rank)
      .def("line_size", &IncidenceStructure::line_size)
      .def("lines_through", &IncidenceStructure::lines_through)
      .def("points_on", &IncidenceStructure::points_on)
      .def("incident", &IncidenceStructure::incident)
      .def("dual", &IncidenceStructure::dual)
      .def("is_partial_linear_space", &IncidenceStructure::is_partial_linear_space)
      .def("configuration_type",
           [](const IncidenceStructure& k) -> py::object {
             auto t = k.configuration_type();
             return t ? py::cast(*t) : py::none();
           })
      .def("binomial_signature",
           [](const IncidenceStructure& k) -> py::object {
             auto s = binomial_signature(k);
             return s ? py::cast(*s) : py::none();
           })
      .def("__eq__", [](const IncidenceStructure& a,
                        const IncidenceStructure& b) { return a == b; })
      .def("__repr__", [](const IncidenceStructure& k) {
        return "<IncidenceStructure " + std::to_string(k.point_count()) + " points, " +
               std::to_string(k.line_count()) + " lines>";
      });

  // family generators
  m.def("generate", [](const std::string& spec) { return make_family(FamilySpec::parse(spec)); },
        py::arg("spec"), "build a family structure from a spec such as 'GS:5,2'");
  m.def("grassmannian_g", &grassmannian_g, py::arg("k"), py::arg("m"));
  m.def("gras_space", &gras_space, py::arg("n"), py::arg("k"));
  m.def("dcd", &dcd, py::arg("n"), py::arg("k"));
  m.def("veronesian", &veronesian, py::arg("m"), py::arg("k"));
  m.def("dual_veronesian", &dual_veronesian, py::arg("m"), py::arg("k"));
  m.def("complete_graph", &complete_graph, py::arg("n"));
  m.def("dual_complete_graph", &dual_complete_graph, py::arg("n"));
  m.def("veblen", &veblen);
  m.def("grassmannian_hyperplane",
        [](int n, int k, int atom) {
          auto h = grassmannian_hyperplane(n, k, atom);
          return py::make_tuple(h.points, map_to_dict(h.infinity));
        });
  m.def("veronesian_hyperplane", [](int mm, int k, const std::string& atom) {
    auto h = veronesian_hyperplane(mm, k, atom);
    return py::make_tuple(h.points, map_to_dict(h.infinity));
  });
  m.def("dual_veronesian_hyperplane", [](int mm, int k, const std::string& atom) {
    auto h = dual_veronesian_hyperplane(mm, k, atom);
    return py::make_tuple(h.points, map_to_dict(h.infinity));
  });

  // hyperplanes
  m.def("is_subspace", &is_subspace);
  m.def("is_hyperplane", &is_hyperplane, py::arg("k"), py::arg("h"),
        py::arg("allow_empty_in_linefree") = false);
  m.def("deep_lines", &deep_lines);
  m.def("restriction", &restriction);
  m.def("reduct", &reduct);
  m.def("extract_infinity", [](const IncidenceStructure& k, const std::vector<std::string>& h) {
    auto pairs = extract_infinity(k, h);
    return std::map<std::string, std::string>(pairs.begin(), pairs.end());
  });
  m.def("enumerate_hyperplanes",
        [](const IncidenceStructure& k, std::size_t max_points) {
          std::vector<std::vector<std::string>> out;
          for (auto& v : enumerate_hyperplanes(k, max_points)) out.push_back(v.points);
          return out;
        },
        py::arg("k"), py::arg("max_points") = 24);
  m.def("hyperplane_is_configuration",
        [](const IncidenceStructure& k, const std::vector<std::string>& h) -> py::object {
          auto t = hyperplane_is_configuration(k, h);
          return t ? py::cast(*t) : py::none();
        });

  // gluing
  m.def("glue",
        [](const IncidenceStructure& k1, const IncidenceStructure& k2,
           const std::map<std::string, std::string>& inf) {
          return glue(k1, k2, map_from_dict(k1, k2, inf));
        },
        py::arg("k1"), py::arg("k2"), py::arg("infinity"));
  m.def("decompose",
        [](const IncidenceStructure& k, const std::vector<std::string>& h) {
          auto d = decompose(k, h);
          return py::make_tuple(d.reduct_part, d.hyperplane_part, map_to_dict(d.infinity));
        },
        py::arg("k"), py::arg("hyperplane"));
  m.def("verify_duality",
        [](const IncidenceStructure& k1, const IncidenceStructure& k2,
           const std::map<std::string, std::string>& inf) {
          return verify_duality(k1, k2, map_from_dict(k1, k2, inf));
        });
  m.def("enumerate_gluings",
        [](const IncidenceStructure& k1, const IncidenceStructure& k2, std::uint64_t cap) {
          std::vector<std::map<std::string, std::string>> out;
          for (const auto& g : enumerate_gluings(k1, k2, cap)) out.push_back(map_to_dict(g));
          return out;
        },
        py::arg("k1"), py::arg("k2"), py::arg("cap") = 362880);
  m.def("classify_gluings",
        [](const IncidenceStructure& k1, const IncidenceStructure& k2, std::uint64_t cap) {
          py::list out;
          for (const auto& c : classify_gluings(k1, k2, cap))
            out.append(py::make_tuple(c.size, map_to_dict(c.representative), c.certificate_hex));
          return out;
        },
        py::arg("k1"), py::arg("k2"), py::arg("cap") = 362880);

  // isomorphism
  m.def("certificate",
        [](const IncidenceStructure& k, std::size_t max_elements) {
          return canonical_form(k, max_elements).hex();
        },
        py::arg("k"), py::arg("max_elements") = 64);
  m.def("are_isomorphic",
        [](const IncidenceStructure& a, const IncidenceStructure& b, std::size_t max_elements) {
          return are_isomorphic(a, b, max_elements);
        },
        py::arg("a"), py::arg("b"), py::arg("max_elements") = 64);

  // triangles
  m.def("family_triangle",
        [](const std::string& family, int depth) {
          auto t = build_family_triangle(triangle_family_from_name(family), depth);
          auto report = verify_triangle(t);
          py::dict cells;
          for (const auto& [idx, entry] : t.entries)
            cells[py::make_tuple(idx.first, idx.second)] = entry;
          return py::make_tuple(cells, report.all_pass);
        },
        py::arg("family"), py::arg("depth"));

  // interchange format
  m.def("parse", &parse_structure, py::arg("text"));
  m.def("serialize", &serialize_structure, py::arg("k"));
}

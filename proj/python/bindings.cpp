#include <sstream>

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "wood/certificate.hpp"
#include "wood/certify.hpp"
#include "wood/constructions.hpp"
#include "wood/error.hpp"
#include "wood/graph_io.hpp"

namespace py = pybind11;

namespace {

py::object witness_or_none(const std::optional<std::array<std::uint32_t, 4>>& w) {
  if (!w) return py::none();
  return py::cast(std::vector<std::uint32_t>(w->begin(), w->end()));
}

py::dict verdict_dict(const wood::CrookedVerdict& v) {
  py::dict d;
  d["pass"] = v.pass();
  d["condition1"] = v.condition1;
  d["condition2"] = v.condition2.pass;
  d["condition2_witness"] = witness_or_none(v.condition2.witness);
  d["condition3"] = v.condition3.pass;
  d["condition3_witness"] = witness_or_none(v.condition3.witness);
  return d;
}

wood::CertifyConfig config_from(const std::string& family, const py::dict& params) {
  wood::CertifyConfig cfg;
  cfg.family = wood::parse_family(family);
  for (const auto& [key, value] : params) {
    const auto k = key.cast<std::string>();
    if (k == "n") cfg.n = value.cast<int>();
    else if (k == "d") cfg.d = value.cast<std::uint64_t>();
    else if (k == "e") cfg.e = value.cast<int>();
    else if (k == "p") cfg.p = value.cast<std::int64_t>();
    else if (k == "name") cfg.name = value.cast<std::string>();
    else if (k == "t") cfg.t = value.cast<std::size_t>();
    else if (k == "table") cfg.table_path = value.cast<std::string>();
    else if (k == "level") cfg.level = wood::parse_level(value.cast<std::string>());
    else if (k == "workers") cfg.workers = value.cast<unsigned>();
    else throw wood::ParameterError("unknown certify parameter '" + k + "'");
  }
  return cfg;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Crooked-graph constructions and exact graph certification.";

  py::register_exception<wood::ParameterError>(m, "ParameterError", PyExc_ValueError);
  py::register_exception<wood::ConstructionRefused>(m, "ConstructionRefused", PyExc_ValueError);

  py::class_<wood::FieldCtx>(m, "FieldCtx")
      .def_property_readonly("n", &wood::FieldCtx::n)
      .def_property_readonly("modulus", &wood::FieldCtx::modulus)
      .def_property_readonly("size", &wood::FieldCtx::size)
      .def("mul", [](const wood::FieldCtx& c, std::uint32_t a, std::uint32_t b) {
        return c.mul(c.element(a), c.element(b)).bits;
      })
      .def("pow", [](const wood::FieldCtx& c, std::uint32_t a, std::uint64_t e) {
        return c.pow(c.element(a), e).bits;
      });
  m.def("make_field", &wood::make_field, py::arg("n"));
  m.def("legendre", &wood::legendre, py::arg("a"), py::arg("p"));

  py::class_<wood::FunctionTable>(m, "FunctionTable")
      .def(py::init([](int n, const std::vector<std::uint32_t>& values) {
             std::vector<wood::Gf2Elem> v(values.begin(), values.end());
             return wood::FunctionTable(n, std::move(v));
           }),
           py::arg("n"), py::arg("values"))
      .def_property_readonly("n", &wood::FunctionTable::n)
      .def_property_readonly("values", [](const wood::FunctionTable& t) {
        std::vector<std::uint32_t> out;
        for (auto v : t.values()) out.push_back(v.bits);
        return out;
      });
  m.def("tabulate_power_map", &wood::tabulate_power_map, py::arg("ctx"), py::arg("d"));
  m.def("is_apn", [](const wood::FunctionTable& t, unsigned workers) {
    const auto r = wood::is_apn(t, workers);
    return py::make_tuple(r.pass, witness_or_none(r.witness));
  }, py::arg("table"), py::arg("workers") = 1);
  m.def("is_crooked", [](const wood::FunctionTable& t, unsigned workers) {
    return verdict_dict(wood::is_crooked(t, workers));
  }, py::arg("table"), py::arg("workers") = 1);

  py::class_<wood::Graph>(m, "Graph")
      .def_property_readonly("order", &wood::Graph::order)
      .def_property_readonly("edge_count", &wood::Graph::edge_count)
      .def("degree", &wood::Graph::degree)
      .def("adjacent", &wood::Graph::adjacent)
      .def("neighbors", [](const wood::Graph& g, wood::Vertex v) {
        const auto s = g.neighbors(v);
        return std::vector<wood::Vertex>(s.begin(), s.end());
      })
      .def("label", &wood::Graph::label)
      .def("edges", &wood::Graph::edges)
      .def("edge_list", [](const wood::Graph& g) {
        std::ostringstream os;
        wood::write_edge_list(g, os);
        return os.str();
      })
      .def("dot", [](const wood::Graph& g) {
        std::ostringstream os;
        wood::write_dot(g, os);
        return os.str();
      });

  m.def("build_crooked_graph", [](const wood::FunctionTable& t, bool verify) {
    wood::CrookedBuildOptions opts;
    opts.verify = verify;
    auto gq = wood::build_crooked_graph(t, opts);
    return py::make_tuple(gq.graph, gq.fibers.fibers());
  }, py::arg("table"), py::arg("verify") = true);
  m.def("build_w3", [](const wood::FunctionTable& t) { return wood::build_w3(t); }, py::arg("table"));
  m.def("build_w5", &wood::build_w5, py::arg("e"), py::arg("workers") = 1);
  m.def("build_w7", &wood::build_w7, py::arg("p"));
  m.def("fixture", &wood::fixture, py::arg("name"));

  m.def("check_wood_json", [](const wood::Graph& g, std::size_t t, unsigned workers) {
    return wood::to_json(wood::check_wood(g, t, workers)).dump();
  });
  m.def("certify_json", [](const std::string& family, const py::dict& params) {
    const auto outcome = wood::run_certify(config_from(family, params));
    if (outcome.exit_code == wood::kExitParameterError) throw wood::ParameterError(outcome.message);
    return py::make_tuple(outcome.certificate.dump(), outcome.exit_code);
  });
  m.def("turan_report_json", [](const std::vector<int>& levels, unsigned workers) {
    return wood::to_json(wood::turan_report(levels, workers)).dump();
  });
}

#include "sasakilink/classify.hpp"
#include "sasakilink/commands.hpp"
#include "sasakilink/report.hpp"
#include "sasakilink/tables.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <string>

namespace py = pybind11;
using namespace sasakilink;

namespace {

py::object json_to_python(const nlohmann::ordered_json& j) {
  return py::module_::import("json").attr("loads")(j.dump());
}

std::filesystem::path data_dir(const std::optional<std::string>& dir) { return dir ? std::filesystem::path(*dir) : default_data_dir(); }

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Topology and Sasaki-Einstein checks for links of weighted homogeneous singularities";

  py::register_exception<Error>(m, "Error", PyExc_ValueError);

  m.def(
      "analyze",
      [](std::optional<std::string> bp, std::optional<std::string> chain, std::optional<std::string> weights,
         std::optional<std::string> degree, std::optional<std::string> poly, std::optional<std::string> dir) {
        AnalyzeArgs args{bp, chain, weights, degree, poly};
        auto table = SeTable::load(data_dir(dir) / "table1.tsv");
        return json_to_python(to_json(analyze(args, &table)));
      },
      py::arg("bp") = py::none(), py::arg("chain") = py::none(), py::arg("weights") = py::none(),
      py::arg("degree") = py::none(), py::arg("poly") = py::none(), py::arg("data_dir") = py::none(),
      "Classify a link; exponent and weight lists are comma separated strings. Returns the JSON report as a dict.");

  m.def(
      "verify",
      [](std::int64_t max, unsigned workers) {
        VerifyResult r;
        {
          py::gil_scoped_release release;
          r = verify_bp(max, workers);
        }
        return py::make_tuple(r.checked, r.failures);
      },
      py::arg("bp_max"), py::arg("workers") = 1,
      "Cross-check the homology routes on nondecreasing BP tuples; returns (checked, failures).");

  m.def(
      "check_table",
      [](int table, std::size_t depth, std::optional<std::string> dir) {
        auto data = load_datasets(data_dir(dir));
        std::vector<InstanceCheck> checks;
        if (table == 1)
          checks = check_se_table(data.table1, depth);
        else if (table == 2)
          checks = check_families(data.table2, depth, &data.table1);
        else if (table == 3)
          checks = check_families(data.table3, depth, &data.table1);
        else
          throw Error(ErrorCode::InvalidInput, "table must be 1, 2 or 3");
        py::list out;
        for (const auto& c : checks) {
          py::dict d;
          d["row"] = c.row;
          d["parameters"] = format_bindings(c.parameters);
          d["link"] = c.link;
          d["status"] = to_string(c.status);
          d["detail"] = c.detail;
          out.append(d);
        }
        return out;
      },
      py::arg("table"), py::arg("depth") = 3, py::arg("data_dir") = py::none(),
      "Check a reference table; each entry has row, parameters, link, status (PASS/FAIL/FLAGGED) and detail.");

  m.def("default_data_dir", [] { return default_data_dir().string(); });
}

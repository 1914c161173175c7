#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <string>
#include <vector>

#include "polycount/asymptotics.hpp"
#include "polycount/counts.hpp"
#include "polycount/io.hpp"
#include "polycount/oracle.hpp"

namespace py = pybind11;
using namespace polycount;

namespace {

py::object pyint(const Int& x) {
  PyObject* obj = PyLong_FromString(x.get_str().c_str(), nullptr, 10);
  if (!obj) throw py::error_already_set();
  return py::reinterpret_steal<py::object>(obj);
}

py::object eval_poly(const QPoly& p, long q) {
  const Rat v = p.eval(Rat(q));
  if (!is_integer(v)) {
    py::object fraction = py::module_::import("fractions").attr("Fraction");
    return fraction(pyint(v.get_num()), pyint(v.get_den()));
  }
  return pyint(v.get_num());
}

CountEngine engine_for(int r, int n, std::optional<int> s) {
  return CountEngine({r, std::max(n, 1), s});
}

}  // namespace

PYBIND11_MODULE(_polycount, m) {
  m.doc() = "Exact symbolic counts of reducible, powerful, and relatively "
            "irreducible monic multivariate polynomials over finite fields";

  py::class_<QPoly>(m, "QPoly")
      .def("__str__", &QPoly::str)
      .def("__repr__", [](const QPoly& p) { return "QPoly(" + p.str() + ")"; })
      .def("__eq__", [](const QPoly& a, const QPoly& b) { return a == b; })
      .def("degree", &QPoly::degree)
      .def("is_zero", &QPoly::is_zero)
      .def("eval", &eval_poly, py::arg("q"))
      .def("num_den", [](const QPoly& p) {
        py::list nums;
        for (const auto& c : p.scaled_int_coeffs()) nums.append(pyint(c));
        return py::make_tuple(nums, pyint(p.common_den()));
      });

  m.def("count_all", &count_all, py::arg("r"), py::arg("n"));
  m.def("count_irreducible",
        [](int r, int n) { return engine_for(r, n, std::nullopt).irreducible(n); });
  m.def("count_reducible",
        [](int r, int n) { return engine_for(r, n, std::nullopt).reducible(n); });
  m.def("count_powerful",
        [](int r, int n, int s) { return engine_for(r, n, s).powerful(s, n); });
  m.def("count_abs_irreducible",
        [](int r, int n) { return engine_for(r, n, std::nullopt).abs_irreducible(n); });
  m.def("count_rel_irreducible",
        [](int r, int n) { return engine_for(r, n, std::nullopt).rel_irreducible(n); });
  m.def("count_reducible_by_patterns",
        [](int r, int n) { return count_reducible_by_patterns({r, n, std::nullopt}, n); });
  m.def("binom_b", [](int r, long n) { return pyint(binom_b(r, n)); });
  m.def("mobius", &mobius);

  m.def("partitions", [](long n) {
    std::vector<std::string> out;
    for (const auto& p : enumerate_partitions(n)) out.push_back(partition_concise(p));
    return out;
  });
  m.def("patterns", [](long n) {
    std::vector<std::string> out;
    for (const auto& p : enumerate_patterns(n)) out.push_back(p.str());
    return out;
  });

  m.def("report_json", [](int r, int nmax, const std::string& families,
                          std::optional<int> s) {
    return report_to_json(make_report({r, nmax, s}, families)).dump();
  },
        py::arg("r"), py::arg("nmax"), py::arg("families") = "PIR",
        py::arg("s") = std::nullopt);

  m.def("check_bounds_json", [](const std::vector<std::string>& families,
                                const std::vector<int>& rs, const std::vector<long>& ns,
                                const std::vector<int>& ss, const std::vector<long>& qs) {
    SweepSpec spec;
    spec.families.clear();
    for (const auto& f : families) {
      if (f == "R") spec.families.push_back(Family::R);
      else if (f == "Q") spec.families.push_back(Family::Q);
      else if (f == "E") spec.families.push_back(Family::E);
      else if (f == "I") spec.families.push_back(Family::I);
      else throw std::invalid_argument("unknown family: " + f);
    }
    spec.rs = rs;
    spec.ns = ns;
    spec.ss = ss;
    spec.qs = qs;
    return sweep_to_json(sweep(spec)).dump();
  });

  m.def("oracle_monic", [](int p, int k, int r, int n) {
    return oracle::count_monic(oracle::Field::extension(p, k), r, n);
  });
  m.def("oracle_reducible", [](int p, int k, int r, int n) {
    return oracle::sieve_reducible(oracle::Field::extension(p, k), r, n);
  });
  m.def("oracle_powerful", [](int p, int k, int r, int n, int s) {
    return oracle::sieve_powerful(oracle::Field::extension(p, k), r, n, s);
  });
  m.def("oracle_rel_irreducible", [](int p, int r, int n) {
    return oracle::count_rel_irred_oracle(oracle::Field::prime(p), r, n);
  });
  m.def("galois_image", [](int p, int r, int n, int k) {
    return oracle::galois_image_check(oracle::Field::prime(p), r, n, k);
  });
}

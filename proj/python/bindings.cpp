// Copyright 2026 The coarselip authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Thin python veneer: spaces are opaque handles, functions are plain lists
// of floats with math.inf standing in for the infinity element, reports
// come back as dicts mirroring the CLI's JSON.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "coarselip/json_io.hpp"

namespace py = pybind11;
using namespace coarselip;

// pybind11 holders want a non-const element type; the class exposes no
// mutators, so handing out shared_ptr<MetricSpace> is still safe.
using SpaceHandle = std::shared_ptr<MetricSpace>;

namespace {

ExtReal ext_of(double v) { return ExtReal(v); }  // +inf becomes the infinity variant

std::vector<ExtReal> ext_vec(const std::vector<double>& vs) {
  std::vector<ExtReal> out;
  out.reserve(vs.size());
  for (double v : vs) out.push_back(ext_of(v));
  return out;
}

std::vector<double> dbl_vec(const std::vector<ExtReal>& vs) {
  std::vector<double> out;
  out.reserve(vs.size());
  for (ExtReal v : vs) out.push_back(v.as_double());
  return out;
}

SpaceHandle make_space(const std::vector<std::string>& labels,
                       const std::vector<std::vector<double>>& rows) {
  std::vector<std::vector<ExtReal>> d;
  d.reserve(rows.size());
  for (const auto& row : rows) d.push_back(ext_vec(row));
  return std::make_shared<MetricSpace>(MetricSpace::create(labels, d));
}

LipFn fn_of(const SpaceHandle& space, const std::vector<double>& values) {
  return LipFn(space, ext_vec(values));
}

py::object json_to_py(const Json& j) {
  switch (j.type()) {
    case Json::value_t::object: {
      py::dict d;
      for (auto it = j.begin(); it != j.end(); ++it) d[py::str(it.key())] = json_to_py(it.value());
      return d;
    }
    case Json::value_t::array: {
      py::list l;
      for (const Json& e : j) l.append(json_to_py(e));
      return l;
    }
    case Json::value_t::string: {
      // The JSON layer spells infinity "inf"; hand floats back to python.
      const auto& s = j.get<std::string>();
      if (s == "inf") return py::float_(std::numeric_limits<double>::infinity());
      return py::str(s);
    }
    case Json::value_t::boolean:
      return py::bool_(j.get<bool>());
    case Json::value_t::number_integer:
      return py::int_(j.get<long long>());
    case Json::value_t::number_unsigned:
      return py::int_(j.get<unsigned long long>());
    case Json::value_t::number_float:
      return py::float_(j.get<double>());
    default:
      return py::none();
  }
}

MlOracle oracle_of(const SpaceHandle& X, const SpaceHandle& Y, const std::vector<std::size_t>& fwd,
                   const std::vector<std::size_t>& bwd, double shift) {
  return lift_shifted(MapPair{fwd, bwd}, X, Y, shift);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Lipschitz function lattices over finite extended metric spaces";

  py::class_<MetricSpace, SpaceHandle>(m, "Space")
      .def_property_readonly("labels", &MetricSpace::labels)
      .def("__len__", &MetricSpace::size)
      .def("dist",
           [](const MetricSpace& s, std::size_t i, std::size_t j) {
             if (i >= s.size() || j >= s.size()) throw py::index_error();
             return s.dist(i, j).as_double();
           })
      .def("index_of",
           [](const MetricSpace& s, const std::string& label) -> py::object {
             if (auto i = s.index_of(label)) return py::int_(*i);
             return py::none();
           })
      .def("__eq__", [](const MetricSpace& a, const MetricSpace& b) { return a == b; });

  m.def("space", &make_space, py::arg("labels"), py::arg("d"),
        "Validate labels and a distance matrix (math.inf allowed) into a Space");
  m.def(
      "validate_space",
      [](const std::vector<std::string>& labels, const std::vector<std::vector<double>>& rows) {
        std::vector<std::vector<ExtReal>> d;
        std::vector<std::string> errors;
        for (std::size_t i = 0; i < rows.size(); ++i) {
          d.emplace_back();
          for (std::size_t k = 0; k < rows[i].size(); ++k) {
            try {
              d.back().push_back(ext_of(rows[i][k]));
            } catch (const std::exception& e) {
              errors.push_back("d[" + std::to_string(i) + "][" + std::to_string(k) +
                               "]: " + e.what());
              d.back().push_back(ExtReal(0.0));
            }
          }
        }
        if (errors.empty()) {
          ValidationOutcome out = MetricSpace::validate(labels, d);
          for (const auto& v : out.violations) errors.push_back(v.message);
        }
        return errors;
      },
      py::arg("labels"), py::arg("d"),
      "All metric-axiom violations of a candidate matrix; empty means valid");

  m.def("components",
        [](const SpaceHandle& s) { return components(*s).blocks; });
  m.def("cutoff",
        [](const SpaceHandle& s, double r) {
          return std::make_shared<MetricSpace>(cutoff(*s, ext_of(r)));
        });
  m.def("scale",
        [](const SpaceHandle& s, double ell) {
          return std::make_shared<MetricSpace>(scale(*s, ell));
        });

  m.def("lipschitz_excess",
        [](const SpaceHandle& s, const std::vector<double>& values, double K) {
          return lipschitz_excess(*s, ext_vec(values), K).as_double();
        });
  m.def("sup_dist", [](const SpaceHandle& s, const std::vector<double>& f,
                       const std::vector<double>& g) {
    return sup_dist(fn_of(s, f), fn_of(s, g)).as_double();
  });
  m.def("join", [](const SpaceHandle& s, const std::vector<std::vector<double>>& fams) {
    std::vector<LipFn> fns;
    for (const auto& f : fams) fns.push_back(fn_of(s, f));
    return dbl_vec(join(s, fns).values());
  });
  m.def("meet", [](const SpaceHandle& s, const std::vector<std::vector<double>>& fams) {
    std::vector<LipFn> fns;
    for (const auto& f : fams) fns.push_back(fn_of(s, f));
    return dbl_vec(meet(s, fns).values());
  });
  m.def("lambda_realize", [](const SpaceHandle& s, std::size_t center, double radius) {
    return dbl_vec(lambda_realize(s, center, ext_of(radius)).values());
  });
  m.def("lambda_dist", [](const SpaceHandle& s, std::size_t x, double r, std::size_t y, double q) {
    return lambda_dist_closed(*s, x, ext_of(r), y, ext_of(q)).as_double();
  });
  m.def("lipschitzise", [](const SpaceHandle& s, const std::vector<double>& raw, double eps) {
    return dbl_vec(lipschitzise(s, ext_vec(raw), eps).values());
  });
  m.def("nearest_lambda", [](const SpaceHandle& s, const std::vector<double>& values) {
    NearestLambda nl = nearest_lambda(fn_of(s, values));
    return py::make_tuple(nl.center, nl.radius.as_double(), nl.distance.as_double());
  });

  m.def(
      "rough_distance",
      [](const SpaceHandle& a, const SpaceHandle& b, std::size_t budget) {
        RoughDistance rd = rough_distance_exact(*a, *b, budget);
        return py::make_tuple(rd.epsilon.as_double(), rd.witness.forward, rd.witness.backward);
      },
      py::arg("a"), py::arg("b"), py::arg("budget") = 5);
  m.def("pair_defect", [](const SpaceHandle& x, const SpaceHandle& y,
                          const std::vector<std::size_t>& fwd,
                          const std::vector<std::size_t>& bwd) {
    return json_to_py(defect_to_json(defect(MapPair{fwd, bwd}, *x, *y)));
  });

  m.def(
      "lift_check",
      [](const SpaceHandle& x, const SpaceHandle& y, const std::vector<std::size_t>& fwd,
         const std::vector<std::size_t>& bwd, double shift, std::uint64_t seed,
         std::size_t samples) {
        MlDefectReport rep =
            check_ml_defect(oracle_of(x, y, fwd, bwd, shift), MlCheckConfig{seed, samples});
        return json_to_py(ml_report_to_json(rep));
      },
      py::arg("x"), py::arg("y"), py::arg("forward"), py::arg("backward"),
      py::arg("shift") = 0.0, py::arg("seed") = 0, py::arg("samples") = 64,
      "Lift the pair and measure the lattice defects of the lifted oracle");
  m.def(
      "reconstruct_lift",
      [](const SpaceHandle& x, const SpaceHandle& y, const std::vector<std::size_t>& fwd,
         const std::vector<std::size_t>& bwd, double shift) {
        MapPair pair = reconstruct(oracle_of(x, y, fwd, bwd, shift));
        return py::make_tuple(pair.forward, pair.backward);
      },
      py::arg("x"), py::arg("y"), py::arg("forward"), py::arg("backward"),
      py::arg("shift") = 0.0, "Probe the lifted oracle and rebuild the map pair");
  m.def(
      "verify_reconstruction",
      [](const SpaceHandle& x, const SpaceHandle& y, const std::vector<std::size_t>& fwd,
         const std::vector<std::size_t>& bwd, double shift, std::uint64_t seed,
         std::size_t samples) {
        Theorem2Report rep =
            verify_theorem2(oracle_of(x, y, fwd, bwd, shift), MlCheckConfig{seed, samples});
        return json_to_py(theorem2_to_json(rep, *x, *y));
      },
      py::arg("x"), py::arg("y"), py::arg("forward"), py::arg("backward"),
      py::arg("shift") = 0.0, py::arg("seed") = 0, py::arg("samples") = 64);

  m.def("lipschitzized_scaling", [](const SpaceHandle& s, const std::vector<double>& f, double ell) {
    return dbl_vec(lipschitzized_scaling(fn_of(s, f), ell).values());
  });
  m.def(
      "scaling_experiment",
      [](const std::string& family, const std::vector<std::size_t>& levels,
         std::size_t reference, std::uint64_t seed, std::size_t samples) {
        ScalingReport rep = run_scaling_experiment(ScalingExperimentConfig{family, levels, reference},
                                                   MlCheckConfig{seed, samples});
        return json_to_py(scaling_report_to_json(rep));
      },
      py::arg("family"), py::arg("levels"), py::arg("reference"), py::arg("seed") = 0,
      py::arg("samples") = 64);

  py::register_exception<ReconstructionError>(m, "ReconstructionError", PyExc_ValueError);
}

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "subsum/pcut.hpp"
#include "subsum/presets.hpp"
#include "subsum/props.hpp"
#include "subsum/render.hpp"
#include "subsum/runner.hpp"

namespace py = pybind11;
using namespace subsum;

namespace {

Scalar to_scalar(const std::string& s) { return Scalar::parse(s); }

std::vector<Scalar> to_scalars(const std::vector<std::string>& v) {
  std::vector<Scalar> out;
  out.reserve(v.size());
  for (const auto& s : v) out.push_back(Scalar::parse(s));
  return out;
}

std::vector<Point2> to_points(const std::vector<std::pair<std::string, std::string>>& v) {
  std::vector<Point2> out;
  out.reserve(v.size());
  for (const auto& [x, y] : v) out.push_back({Scalar::parse(x), Scalar::parse(y)});
  return out;
}

std::vector<std::pair<std::string, std::string>> from_intervals(
    const std::vector<Interval>& ivs) {
  std::vector<std::pair<std::string, std::string>> out;
  out.reserve(ivs.size());
  for (const Interval& iv : ivs) out.emplace_back(iv.lo.str(), iv.hi.str());
  return out;
}

Series1D spec1(const std::string& json) {
  return series1d_from_json(Json::parse(json));
}
Series2D spec2(const std::string& json) {
  return series2d_from_json(Json::parse(json));
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact covers of sets of subsums, planar cuts, spectra and centers "
            "of distances";

  py::register_exception<ConfigError>(m, "ConfigError", PyExc_ValueError);
  py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);
  py::register_exception<BudgetExceeded>(m, "BudgetExceeded", PyExc_RuntimeError);
  py::register_exception<VerificationError>(m, "VerificationError", PyExc_RuntimeError);

  py::class_<Scalar>(m, "Scalar")
      .def(py::init(&to_scalar), py::arg("literal"))
      .def("__str__", &Scalar::str)
      .def("__repr__", [](const Scalar& s) { return "Scalar('" + s.str() + "')"; })
      .def("__add__", [](const Scalar& a, const Scalar& b) { return a + b; })
      .def("__sub__", [](const Scalar& a, const Scalar& b) { return a - b; })
      .def("__mul__", [](const Scalar& a, const Scalar& b) { return a * b; })
      .def("__truediv__", [](const Scalar& a, const Scalar& b) { return a / b; })
      .def("__neg__", [](const Scalar& a) { return -a; })
      .def("__eq__", [](const Scalar& a, const Scalar& b) { return a == b; })
      .def("__lt__", [](const Scalar& a, const Scalar& b) { return a < b; })
      .def("__le__", [](const Scalar& a, const Scalar& b) { return a <= b; })
      .def("__hash__", &Scalar::hash)
      .def("__float__", &Scalar::approx)
      .def_property_readonly("sign", &Scalar::sign);

  py::class_<Series1D>(m, "Series1D")
      .def(py::init(&spec1), py::arg("spec_json"))
      .def("term", [](const Series1D& s, std::uint64_t n) { return s.term(n).str(); })
      .def("tail_bounds",
           [](const Series1D& s, std::uint64_t n) {
             TailBounds t = s.tail_bounds(n);
             return std::make_pair(t.lo.str(), t.hi.str());
           })
      .def("total", [](const Series1D& s) { return s.total().str(); })
      .def("describe", &Series1D::describe);

  py::class_<Series2D>(m, "Series2D")
      .def(py::init(&spec2), py::arg("spec_json"))
      .def("term",
           [](const Series2D& s, std::uint64_t n) {
             Point2 p = s.term(n);
             return std::make_pair(p.first.str(), p.second.str());
           })
      .def("describe", &Series2D::describe);

  m.def("cover1d",
        [](const Series1D& spec, std::uint64_t depth, std::uint64_t budget) {
          EnumLimits lim;
          if (budget) lim.max_states = budget;
          return from_intervals(cover1d(spec, depth, lim).intervals());
        },
        py::arg("spec"), py::arg("depth"), py::arg("budget") = 0,
        "Merged outer interval cover of the achievement set; exact endpoints "
        "as literals.");

  m.def("gaps",
        [](const Series1D& spec, std::uint64_t depth) {
          return from_intervals(gaps(cover1d(spec, depth)));
        },
        py::arg("spec"), py::arg("depth"));

  m.def("cover2d",
        [](const Series2D& spec, std::uint64_t depth, std::uint64_t budget) {
          EnumLimits lim;
          if (budget) lim.max_states = budget;
          std::vector<std::array<std::string, 4>> out;
          for (const Box& b : cover2d(spec, depth, lim).boxes())
            out.push_back({b.xlo.str(), b.xhi.str(), b.ylo.str(), b.yhi.str()});
          return out;
        },
        py::arg("spec"), py::arg("depth"), py::arg("budget") = 0);

  m.def("classify",
        [](const Series1D& spec) {
          const GNClassification gn = classify_gn(spec);
          py::dict d;
          switch (gn.verdict) {
            case GNClassification::Verdict::Finite: d["verdict"] = "Finite"; break;
            case GNClassification::Verdict::FiniteUnionIntervals:
              d["verdict"] = "FiniteUnionIntervals";
              break;
            case GNClassification::Verdict::Cantor: d["verdict"] = "Cantor"; break;
            case GNClassification::Verdict::KnownCantorval:
              d["verdict"] = "KnownCantorval";
              d["name"] = gn.cantorval_name;
              break;
            case GNClassification::Verdict::Undetermined:
              d["verdict"] = "Undetermined";
              break;
          }
          return d;
        },
        py::arg("spec"));

  m.def("psum_cover",
        [](const std::vector<std::string>& P, const Series1D& weights,
           std::uint64_t depth) {
          return from_intervals(psum_cover(to_scalars(P), weights, depth).intervals());
        },
        py::arg("P"), py::arg("weights"), py::arg("depth"));

  m.def("psum_witness",
        [](const std::string& params_json, const std::vector<std::string>& coeffs) {
          PcutParams p = pcut_params_from_json(Json::parse(params_json));
          PsumWitness w = psum_witness(p, to_scalars(coeffs));
          return std::make_pair(w.value.str(), w.indices);
        },
        py::arg("params_json"), py::arg("coeffs"));

  m.def("verify_pcut_cut",
        [](const std::string& params_json, std::uint64_t blocks) {
          PcutParams p = pcut_params_from_json(Json::parse(params_json));
          PcutReport r = verify_pcut_cut(p, blocks);
          py::dict d;
          d["pass"] = r.pass();
          d["zero_y_subsets"] = r.zero_y_subsets;
          d["all_block_valid"] = r.all_block_valid;
          d["all_sums_are_psums"] = r.all_sums_are_psums;
          d["hausdorff_cut_to_psum"] = r.hausdorff_cut_to_psum.str();
          d["hausdorff_psum_to_cut"] = r.hausdorff_psum_to_cut.str();
          d["certified_bound"] = r.certified_bound.str();
          return d;
        },
        py::arg("params_json"), py::arg("blocks"));

  m.def("spectre_of_points_1d",
        [](const std::vector<std::string>& points) {
          std::vector<std::string> out;
          for (const Scalar& v : spectre_of_finite_set(to_scalars(points)).vectors)
            out.push_back(v.str());
          return out;
        },
        py::arg("points"));

  m.def("spectre_of_points_2d",
        [](const std::vector<std::pair<std::string, std::string>>& points) {
          std::vector<std::pair<std::string, std::string>> out;
          for (const Point2& v : spectre_of_finite_set(to_points(points)).vectors)
            out.emplace_back(v.first.str(), v.second.str());
          return out;
        },
        py::arg("points"));

  m.def("spectre_of_shape",
        [](const std::string& shape, const std::string& spacing, std::uint64_t level,
           const std::string& radius) {
          GridShape s;
          if (shape == "square") s = GridShape::Square;
          else if (shape == "disk") s = GridShape::Disk;
          else if (shape == "triangle") s = GridShape::Triangle;
          else if (shape == "sierpinski") s = GridShape::Sierpinski;
          else if (shape == "cantor") s = GridShape::Cantor;
          else throw ConfigError("unknown shape " + shape);
          GridSet g = make_grid_shape(s, Scalar::parse(spacing), level,
                                      Scalar::parse(radius));
          std::vector<std::pair<std::string, std::string>> out;
          if (g.dims == 1) {
            for (const Scalar& v : spectre_of_grid_1d(g).vectors)
              out.emplace_back(v.str(), "0");
          } else {
            for (const Point2& v : spectre_of_grid(g).vectors)
              out.emplace_back(v.first.str(), v.second.str());
          }
          return out;
        },
        py::arg("shape"), py::arg("spacing"), py::arg("level") = 0,
        py::arg("radius") = "1");

  m.def("center_of_distances",
        [](const std::vector<std::string>& points) {
          std::vector<std::string> out;
          for (const Scalar& v : center_of_distances(to_scalars(points)))
            out.push_back(v.str());
          return out;
        },
        py::arg("points"));

  m.def("render_svg",
        [](const Series2D& spec, std::uint64_t depth, std::uint32_t width,
           std::uint32_t height) {
          RenderOptions opts;
          opts.width = width;
          opts.height = height;
          return py::bytes(render_cover(cover2d(spec, depth), opts));
        },
        py::arg("spec"), py::arg("depth"), py::arg("width") = 800,
        py::arg("height") = 800);

  m.def("presets", [] {
    std::vector<std::pair<std::string, std::string>> out;
    for (const Preset& p : preset_registry()) out.emplace_back(p.name, p.note);
    return out;
  });

  m.def("run_preset",
        [](const std::string& name) {
          auto cfg = load_preset(name);
          if (!cfg) throw ConfigError("unknown preset " + name);
          std::ostringstream os;
          const int code = run_command(*cfg, os);
          return std::make_pair(code, os.str());
        },
        py::arg("name"), "Run a preset in-process; returns (exit_code, text output).");

  m.def("run_config",
        [](const std::string& config_json) {
          RunConfig cfg = parse_config(config_json);
          std::ostringstream os;
          const int code = run_command(cfg, os);
          return std::make_pair(code, os.str());
        },
        py::arg("config_json"));

  m.def("check_props",
        [](std::uint64_t cases, std::uint64_t seed) {
          std::vector<PropResult> all;
          for (auto& r : run_spectre_properties(cases, seed)) all.push_back(r);
          for (auto& r : run_series_properties(cases, seed)) all.push_back(r);
          for (auto& r : run_cover_properties(cases, seed)) all.push_back(r);
          return std::make_pair(all_passed(all), format_results(all));
        },
        py::arg("cases") = 50, py::arg("seed") = 1);
}

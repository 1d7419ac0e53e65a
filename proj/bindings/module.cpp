// Python bindings for the simulator core. The heavy lifting stays in C++;
// python gets the main operations for scripting and plotting.

#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "swaybeam/config_io.hpp"

namespace py = pybind11;
using namespace swaybeam;

namespace {

SimulationConfig config_from_kwargs(const py::kwargs& kwargs) {
  // Route keyword arguments through the JSON loader so python and config
  // files share one schema and one validator.
  py::dict d;
  for (auto item : kwargs) d[item.first] = item.second;
  py::object dumps = py::module_::import("json").attr("dumps");
  return parse_config_text(dumps(d).cast<std::string>());
}

py::dict metrics_to_dict(const AggregateMetrics& metrics) {
  py::dict out;
  out["gamma_o_db"] = metrics.gamma_o_db;
  py::dict per_variant;
  for (std::size_t vi = 0; vi < metrics.variants.size(); ++vi) {
    std::vector<double> op, snr, ratio, msgs, cond;
    for (const LaneMetrics& m : metrics.lanes[vi]) {
      op.push_back(m.outage_probability);
      snr.push_back(m.mean_snr);
      ratio.push_back(m.snr_ratio);
      msgs.push_back(m.mean_messages);
      cond.push_back(m.cond_mean_messages);
    }
    py::dict v;
    v["outage_probability"] = op;
    v["mean_snr"] = snr;
    v["snr_ratio"] = ratio;
    v["mean_ctrl_msgs"] = msgs;
    v["cond_ctrl_msgs"] = cond;
    per_variant[variant_name(metrics.variants[vi])] = v;
  }
  out["variants"] = per_variant;
  return out;
}

}  // namespace

PYBIND11_MODULE(_swaybeam, m) {
  m.doc() = "Monte Carlo link-level simulator for position-aided mmWave beam alignment";

  py::class_<ArrayGeometry>(m, "ArrayGeometry")
      .def(py::init<int, double>(), py::arg("num_elements"), py::arg("element_spacing") = 0.5)
      .def_readonly("num_elements", &ArrayGeometry::num_elements)
      .def_readonly("element_spacing", &ArrayGeometry::element_spacing);

  m.def("steering_vector", &steering_vector, py::arg("array"), py::arg("angle"),
        "Unit-norm ULA response vector for the given angle (radians).");

  m.def(
      "g_ratio",
      [](double dx_a, double dy_a, double dx_b, double dy_b, double d1) {
        return g_ratio(NodePose::node_a(dx_a, dy_a), NodePose::node_b(dx_b, dy_b, d1), d1);
      },
      py::arg("dx_a"), py::arg("dy_a"), py::arg("dx_b"), py::arg("dy_b"), py::arg("d1"));

  m.def(
      "estimate_los_angles",
      [](double dx_a, double dy_a, double dx_b, double dy_b, double d1) {
        const auto est = true_los_angles(NodePose::node_a(dx_a, dy_a),
                                         NodePose::node_b(dx_b, dy_b, d1), d1);
        return py::make_tuple(est.aod, est.aoa, est.g_ratio);
      },
      py::arg("dx_a"), py::arg("dy_a"), py::arg("dx_b"), py::arg("dy_b"), py::arg("d1"),
      "LOS (aod, aoa, g) for the given displacements.");

  m.def(
      "build_codebook",
      [](const ArrayGeometry& array, double angle_min, double angle_max, int bits) {
        const BeamCodebook cb = build_codebook(array, angle_min, angle_max, bits);
        CMat mat(array.num_elements, cb.size());
        for (std::size_t k = 0; k < cb.size(); ++k) mat.col(k) = cb.vectors[k];
        return py::make_tuple(cb.angles, mat);
      },
      py::arg("array"), py::arg("angle_min"), py::arg("angle_max"), py::arg("bits"),
      "Quantized beam codebook: (grid angles, matrix with one beam per column).");

  m.def(
      "principal_singular_pair",
      [](const CMat& channel, double tol, int max_iters) {
        const SingularPair p = principal_singular_pair(channel, tol, max_iters);
        return py::make_tuple(p.combiner, p.beamformer, p.sigma);
      },
      py::arg("channel"), py::arg("tol") = 1e-10, py::arg("max_iters") = 1000);

  m.def(
      "run_simulation",
      [](const py::kwargs& kwargs) {
        const SimulationConfig cfg = config_from_kwargs(kwargs);
        AggregateMetrics metrics;
        {
          py::gil_scoped_release release;
          metrics = run_simulation(cfg);
        }
        return metrics_to_dict(metrics);
      },
      "Run the full sweep; keyword arguments mirror the JSON config schema.");

  m.def(
      "run_simulation_to_csv",
      [](const std::string& config_path, const std::string& out_path) {
        const SimulationConfig cfg =
            config_path.empty() ? SimulationConfig{} : parse_config(config_path);
        py::gil_scoped_release release;
        const AggregateMetrics metrics = run_simulation(cfg);
        emit_results(metrics, cfg, out_path);
      },
      py::arg("config_path"), py::arg("out_path"));
}

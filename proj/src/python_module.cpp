#include <pybind11/pybind11.h>
#include <pybind11/stl.h>
#include <pybind11/stl/filesystem.h>

#include "aerojam/baselines.hpp"
#include "aerojam/errors.hpp"
#include "aerojam/planner.hpp"

namespace py = pybind11;
using namespace aerojam;

PYBIND11_MODULE(_aerojam, m) {
    m.doc() = "Pose and power planning for a two-drone transmitter/jammer team";

    py::register_exception<DegenerateGeometryError>(m, "DegenerateGeometryError",
                                                    PyExc_ValueError);
    py::register_exception<ScenarioError>(m, "ScenarioError", PyExc_ValueError);

    py::class_<Vec3>(m, "Vec3")
        .def(py::init<>())
        .def(py::init<double, double, double>(), py::arg("x"), py::arg("y"), py::arg("z"))
        .def_readwrite("x", &Vec3::x)
        .def_readwrite("y", &Vec3::y)
        .def_readwrite("z", &Vec3::z)
        .def("norm", &Vec3::norm)
        .def("__repr__", [](const Vec3& v) {
            return "Vec3(" + std::to_string(v.x) + ", " + std::to_string(v.y) + ", " +
                   std::to_string(v.z) + ")";
        });

    py::class_<EulerAngles>(m, "EulerAngles")
        .def(py::init<>())
        .def(py::init<double, double, double>(), py::arg("roll"), py::arg("pitch"),
             py::arg("yaw") = 0.0)
        .def_readwrite("roll", &EulerAngles::roll)
        .def_readwrite("pitch", &EulerAngles::pitch)
        .def_readwrite("yaw", &EulerAngles::yaw)
        .def("__repr__", [](const EulerAngles& a) {
            return "EulerAngles(" + std::to_string(a.roll) + ", " + std::to_string(a.pitch) +
                   ", " + std::to_string(a.yaw) + ")";
        });

    py::class_<Pose>(m, "Pose")
        .def(py::init<>())
        .def(py::init<Vec3, EulerAngles>(), py::arg("position"), py::arg("desired_orientation"))
        .def_readwrite("position", &Pose::position)
        .def_readwrite("desired_orientation", &Pose::desired_orientation);

    py::class_<GroundLine>(m, "GroundLine")
        .def(py::init<double>(), py::arg("nu"))
        .def_property_readonly("nu", &GroundLine::nu)
        .def_property_readonly("direction", &GroundLine::direction)
        .def_property_readonly("normal", &GroundLine::normal)
        .def("distance_to", &GroundLine::distance_to, py::arg("point"));

    py::class_<RadioParams>(m, "RadioParams")
        .def(py::init<>())
        .def_readwrite("power_info", &RadioParams::power_info)
        .def_readwrite("power_jam", &RadioParams::power_jam)
        .def_readwrite("noise", &RadioParams::noise)
        .def_readwrite("bandwidth", &RadioParams::bandwidth)
        .def_readwrite("power_cap", &RadioParams::power_cap);

    py::class_<SinrVector>(m, "SinrVector")
        .def(py::init<>())
        .def_readwrite("gamma_user", &SinrVector::gamma_user)
        .def_readwrite("gamma_eaves", &SinrVector::gamma_eaves);

    py::class_<JitterModel>(m, "JitterModel")
        .def(py::init<>())
        .def_readwrite("sigma_info", &JitterModel::sigma_info)
        .def_readwrite("sigma_jam", &JitterModel::sigma_jam)
        .def_readwrite("sample_count", &JitterModel::sample_count)
        .def_readwrite("seed", &JitterModel::seed);

    py::class_<JitterBatch>(m, "JitterBatch")
        .def_readonly("sigma_info", &JitterBatch::sigma_info)
        .def_readonly("sigma_jam", &JitterBatch::sigma_jam)
        .def_readonly("roll_info", &JitterBatch::roll_info)
        .def_readonly("pitch_info", &JitterBatch::pitch_info)
        .def_readonly("roll_jam", &JitterBatch::roll_jam)
        .def_readonly("pitch_jam", &JitterBatch::pitch_jam)
        .def("__len__", &JitterBatch::size);

    py::class_<McEstimate>(m, "McEstimate")
        .def_readonly("mean", &McEstimate::mean)
        .def_readonly("std_err", &McEstimate::std_err)
        .def("__repr__", [](const McEstimate& e) {
            return "McEstimate(mean=" + std::to_string(e.mean) +
                   ", std_err=" + std::to_string(e.std_err) + ")";
        });

    py::class_<Seeds>(m, "Seeds")
        .def(py::init<>())
        .def_readwrite("scenario", &Seeds::scenario)
        .def_readwrite("optimizer", &Seeds::optimizer)
        .def_readwrite("mc", &Seeds::mc);

    py::class_<Scenario>(m, "Scenario")
        .def(py::init<>())
        .def_readwrite("user_position", &Scenario::user_position)
        .def_readwrite("eaves_true", &Scenario::eaves_true)
        .def_readwrite("eaves_estimated", &Scenario::eaves_estimated)
        .def_readwrite("area_half_extent", &Scenario::area_half_extent)
        .def_readwrite("z_min", &Scenario::z_min)
        .def_readwrite("z_max", &Scenario::z_max)
        .def_readwrite("power_cap", &Scenario::power_cap)
        .def_readwrite("noise_user", &Scenario::noise_user)
        .def_readwrite("noise_eaves", &Scenario::noise_eaves)
        .def_readwrite("bandwidth", &Scenario::bandwidth)
        .def_readwrite("jitter", &Scenario::jitter)
        .def_readwrite("seeds", &Scenario::seeds)
        .def("make_radio", &Scenario::make_radio, py::arg("p_info"), py::arg("p_jam"))
        .def("digest", &Scenario::digest)
        .def("validate", &Scenario::validate);

    py::class_<PlanResult>(m, "PlanResult")
        .def_readonly("info_pose", &PlanResult::info_pose)
        .def_readonly("jam_pose", &PlanResult::jam_pose)
        .def_readonly("radio", &PlanResult::radio)
        .def_readonly("expected_secrecy", &PlanResult::expected_secrecy)
        .def_readonly("std_err", &PlanResult::std_err)
        .def_readonly("line", &PlanResult::line)
        .def_readonly("iterations", &PlanResult::iterations)
        .def_readonly("trace", &PlanResult::trace)
        .def_readonly("converged", &PlanResult::converged);

    py::class_<SimplexOptions>(m, "SimplexOptions")
        .def(py::init<>())
        .def_readwrite("max_evaluations", &SimplexOptions::max_evaluations)
        .def_readwrite("initial_step", &SimplexOptions::initial_step)
        .def_readwrite("restarts", &SimplexOptions::restarts);

    py::class_<PlannerOptions>(m, "PlannerOptions")
        .def(py::init<>())
        .def_readwrite("multi_starts", &PlannerOptions::multi_starts)
        .def_readwrite("max_outer_iterations", &PlannerOptions::max_outer_iterations)
        .def_readwrite("outer_relative_tolerance", &PlannerOptions::outer_relative_tolerance)
        .def_readwrite("reporting_samples", &PlannerOptions::reporting_samples)
        .def_readwrite("simplex", &PlannerOptions::simplex);

    py::class_<BarrierOptions>(m, "BarrierOptions")
        .def(py::init<>())
        .def_readwrite("mu_initial", &BarrierOptions::mu_initial)
        .def_readwrite("mu_shrink", &BarrierOptions::mu_shrink)
        .def_readwrite("stages", &BarrierOptions::stages)
        .def_readwrite("max_iterations_per_stage", &BarrierOptions::max_iterations_per_stage);

    py::class_<BaselineOptions>(m, "BaselineOptions")
        .def(py::init<>())
        .def_readwrite("multi_starts", &BaselineOptions::multi_starts)
        .def_readwrite("reporting_samples", &BaselineOptions::reporting_samples)
        .def_readwrite("barrier", &BaselineOptions::barrier);

    py::class_<PositionsPowers>(m, "PositionsPowers")
        .def(py::init<>())
        .def_readwrite("info_position", &PositionsPowers::info_position)
        .def_readwrite("jam_position", &PositionsPowers::jam_position)
        .def_readwrite("power_info", &PositionsPowers::power_info)
        .def_readwrite("power_jam", &PositionsPowers::power_jam);

    py::class_<InnerOptResult>(m, "InnerOptResult")
        .def_readonly("point", &InnerOptResult::point)
        .def_readonly("objective", &InnerOptResult::objective)
        .def_readonly("evaluations", &InnerOptResult::evaluations)
        .def_readonly("converged", &InnerOptResult::converged);

    py::class_<RunRecord>(m, "RunRecord")
        .def(py::init<>())
        .def_readwrite("method", &RunRecord::method)
        .def_readwrite("scenario_digest", &RunRecord::scenario_digest)
        .def_readwrite("expected_secrecy_bps", &RunRecord::expected_secrecy_bps)
        .def_readwrite("std_err_bps", &RunRecord::std_err_bps)
        .def_readwrite("p_info", &RunRecord::p_info)
        .def_readwrite("p_jam", &RunRecord::p_jam)
        .def_readwrite("duration_seconds", &RunRecord::duration_seconds);

    // geometry
    m.def("orientation_vector", &orientation_vector, py::arg("angles"));
    m.def("elevation_cosine", &elevation_cosine, py::arg("observer_position"),
          py::arg("realized_angles"), py::arg("target"));
    m.def("antenna_gain", &antenna_gain, py::arg("cos_gamma"));
    m.def("canonicalize_axis", &canonicalize_axis, py::arg("axis"));
    m.def("angles_from_axis", &angles_from_axis, py::arg("axis"));
    m.def("plane_normal_from_ground_line", &plane_normal_from_ground_line,
          py::arg("drone_position"), py::arg("line"));

    // channel
    m.def("sinr_at_node", &sinr_at_node, py::arg("info_pose"), py::arg("info_realized"),
          py::arg("jam_pose"), py::arg("jam_realized"), py::arg("node_position"),
          py::arg("radio"), py::arg("node_index"));
    m.def("secrecy_rate", &secrecy_rate, py::arg("sinr"), py::arg("bandwidth"));
    m.def("utility_unclamped", &utility_unclamped, py::arg("sinr"), py::arg("bandwidth"));

    // jitter / Monte Carlo
    m.def("draw_batch", &draw_batch, py::arg("model"));
    m.def(
        "expected_secrecy",
        [](const Pose& info, const Pose& jam, const RadioParams& radio, const Vec3& user,
           const std::vector<Vec3>& eaves, const JitterBatch& batch, bool clamped) {
            return expected_secrecy(info, jam, radio, user, eaves, batch, clamped);
        },
        py::arg("info_pose"), py::arg("jam_pose"), py::arg("radio"), py::arg("user_position"),
        py::arg("eaves_positions"), py::arg("batch"), py::arg("clamped") = true);

    // planner
    m.def(
        "line_maximin",
        [](const std::vector<Vec3>& eaves) { return line_maximin(eaves); },
        py::arg("estimated_eaves"));
    m.def("info_orientation", &info_orientation, py::arg("info_position"), py::arg("line"));
    m.def("jam_orientation", &jam_orientation, py::arg("jam_position"), py::arg("user_position"));
    m.def("optimize_positions_powers", &optimize_positions_powers, py::arg("scenario"),
          py::arg("line"), py::arg("batch"), py::arg("start"),
          py::arg("options") = SimplexOptions{});
    m.def("solve", &solve, py::arg("scenario"), py::arg("options") = PlannerOptions{});

    // baselines
    py::enum_<BaselineKind>(m, "BaselineKind")
        .value("JOINT_12D", BaselineKind::Joint12D)
        .value("CONVENTIONAL_FIXED", BaselineKind::ConventionalFixed);
    m.def("solve_joint_12d", &solve_joint_12d, py::arg("scenario"),
          py::arg("options") = BaselineOptions{});
    m.def("solve_conventional", &solve_conventional, py::arg("scenario"),
          py::arg("options") = BaselineOptions{});
    m.def("solve_baseline", &solve_baseline, py::arg("kind"), py::arg("scenario"),
          py::arg("options") = BaselineOptions{});

    // scenario IO
    m.def("generate_random_scenario", &generate_random_scenario, py::arg("n_eaves"),
          py::arg("seed"), py::arg("estimate_noise_std") = 0.0);
    m.def("recenter_to_user", &recenter_to_user, py::arg("scenario"));
    m.def("load_scenario", &load_scenario, py::arg("path"));
    m.def("save_scenario", &save_scenario, py::arg("scenario"), py::arg("path"));
    m.def("load_record", &load_record, py::arg("path"));
    m.def("save_record", &save_record, py::arg("record"), py::arg("path"));
    m.def("make_record", &make_record, py::arg("method"), py::arg("scenario"), py::arg("result"),
          py::arg("duration_seconds") = 0.0);
}

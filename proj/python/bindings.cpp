// Python bindings for the main operations: tensor algebra, kinematics,
// electromagnetism, orbits and the curvilinear operators. Field oracles come
// in as Python callables; heavy pipelines (orbit runs) stay in C++ and return
// plain dictionaries.

#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "relmech/csv.hpp"
#include "relmech/curvilinear.hpp"
#include "relmech/electromagnetism.hpp"
#include "relmech/geodesic.hpp"
#include "relmech/linear_gravity.hpp"
#include "relmech/minkowski.hpp"
#include "relmech/scenario.hpp"
#include "relmech/worldline.hpp"

namespace py = pybind11;
using namespace relmech;

namespace {

Vec3 to_vec3(const std::array<double, 3>& a) { return {a[0], a[1], a[2]}; }
Vec4 to_vec4(const std::array<double, 4>& a) { return {a[0], a[1], a[2], a[3]}; }
std::array<double, 4> from_vec4(const Vec4& v) { return {v[0], v[1], v[2], v[3]}; }
std::array<double, 3> from_vec3(const Vec3& v) { return {v[0], v[1], v[2]}; }

std::vector<std::vector<double>> from_mat4(const Mat4& m) {
  std::vector<std::vector<double>> out(4, std::vector<double>(4));
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) out[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = m(i, j);
  return out;
}

}  // namespace

PYBIND11_MODULE(_relmech, m) {
  m.doc() = "special-relativistic mechanics: tensors, worldlines, fields, orbits";

  m.attr("SPEED_OF_LIGHT") = kSpeedOfLight;

  // tensor algebra
  m.def("lower", [](const std::array<double, 4>& v) {
    const CoVec4 r = lower(to_vec4(v));
    return std::array<double, 4>{r[0], r[1], r[2], r[3]};
  });
  m.def("raise_index", [](const std::array<double, 4>& v) {
    return from_vec4(raise(CoVec4{v[0], v[1], v[2], v[3]}));
  });
  m.def("inner4", [](const std::array<double, 4>& a, const std::array<double, 4>& b) {
    return inner4(to_vec4(a), to_vec4(b));
  });
  m.def("classify", [](const std::array<double, 4>& v) {
    return std::string(to_string(classify(to_vec4(v))));
  });

  py::class_<LorentzTransform>(m, "LorentzTransform")
      .def_static("identity", &LorentzTransform::identity)
      .def_static("boost",
                  [](const std::array<double, 3>& v, double c) {
                    return LorentzTransform::boost(to_vec3(v), c);
                  },
                  py::arg("velocity"), py::arg("c") = kSpeedOfLight)
      .def("matrix", [](const LorentzTransform& l) { return from_mat4(l.matrix()); })
      .def("verify", &LorentzTransform::verify)
      .def("inverse", &LorentzTransform::inverse)
      .def("apply",
           [](const LorentzTransform& l, const std::array<double, 4>& x) {
             return from_vec4(l.apply(to_vec4(x)));
           })
      .def("compose", [](const LorentzTransform& a, const LorentzTransform& b) {
        return compose(a, b);
      });

  // kinematics
  m.def("four_velocity",
        [](const std::array<double, 3>& v, double c) {
          return from_vec4(four_velocity_from_coordinate_velocity(to_vec3(v), c));
        },
        py::arg("velocity"), py::arg("c") = kSpeedOfLight);
  m.def("coordinate_velocity",
        [](const std::array<double, 4>& u, double c) {
          return from_vec3(coordinate_velocity_from_four_velocity(to_vec4(u), c));
        },
        py::arg("four_velocity"), py::arg("c") = kSpeedOfLight);
  m.def("energy",
        [](double mass, const std::array<double, 3>& v, double c) {
          return energy(mass, to_vec3(v), c);
        },
        py::arg("mass"), py::arg("velocity"), py::arg("c") = kSpeedOfLight);

  // electromagnetism
  py::class_<em::FaradayTensor>(m, "FaradayTensor")
      .def(py::init([](const std::array<double, 3>& e, const std::array<double, 3>& b) {
             return em::FaradayTensor(to_vec3(e), to_vec3(b));
           }),
           py::arg("E"), py::arg("B"))
      .def("electric", [](const em::FaradayTensor& f) { return from_vec3(f.electric()); })
      .def("magnetic", [](const em::FaradayTensor& f) { return from_vec3(f.magnetic()); })
      .def("component", &em::FaradayTensor::dd, py::arg("mu"), py::arg("nu"));

  m.def("em_stress_energy", [](const em::FaradayTensor& f) {
    const auto t = em::em_stress_energy(f);
    py::dict out;
    out["tensor"] = from_mat4(t.tensor());
    out["energy_density"] = t.energy_density();
    out["poynting"] = from_vec3(t.poynting());
    out["trace"] = t.trace();
    return out;
  });

  m.def("lorentz_trajectory",
        [](double mass, double charge, const std::array<double, 3>& e_field,
           const std::array<double, 3>& b_field, const std::array<double, 3>& v0,
           double ds, int steps, double c) {
          ParticleState s0;
          s0.x = {0, 0, 0, 0};
          s0.u = four_velocity_from_coordinate_velocity(to_vec3(v0), c);
          s0.mass = mass;
          s0.charge = charge;
          const em::FaradayTensor f(to_vec3(e_field), to_vec3(b_field));
          IntegratorOptions opts;
          opts.c = c;
          const Worldline w = em::integrate_lorentz(
              s0, [f](const Vec4&) { return f; }, ds, steps, opts);
          py::dict out;
          std::vector<double> s, t;
          std::vector<std::array<double, 4>> x, u;
          for (const auto& smp : w.samples) {
            s.push_back(smp.s);
            t.push_back(smp.t);
            x.push_back(from_vec4(smp.x));
            u.push_back(from_vec4(smp.u));
          }
          out["s"] = s;
          out["t"] = t;
          out["x"] = x;
          out["u"] = u;
          return out;
        },
        py::arg("mass"), py::arg("charge"), py::arg("E"), py::arg("B"), py::arg("v0"),
        py::arg("ds"), py::arg("steps"), py::arg("c") = kSpeedOfLight);

  // orbits
  m.def("perihelion_shift_closed_form", &orbit::perihelion_shift_closed_form,
        py::arg("gm"), py::arg("angular_momentum"), py::arg("c") = kSpeedOfLight);
  m.def("precession",
        [](double gm, double a, double e, double c, int revolutions, double gm_scale,
           int steps_per_rev, bool projection) {
          const auto r = cli::precession_pipeline(gm, a, e, c, revolutions, gm_scale,
                                                  steps_per_rev, projection);
          py::dict out;
          out["gm_effective"] = r.gm;
          out["angular_momentum"] = r.angular_momentum;
          out["period_s"] = r.period_s;
          out["closed_form_rad_per_rev"] = r.closed_form_rad_per_rev;
          out["closed_form_arcsec_per_century"] = r.closed_form_arcsec_per_century;
          out["revolutions_per_century"] = r.revolutions_per_century;
          if (revolutions > 0) {
            out["measured_rad_per_rev"] = r.measured_rad_per_rev;
            out["relative_deviation"] = r.relative_deviation;
            out["perihelion_count"] = r.perihelion_count;
            out["energy_drift_rel"] = r.energy_drift_rel;
            out["angmom_drift_rel"] = r.angmom_drift_rel;
          }
          return out;
        },
        py::arg("gm"), py::arg("a"), py::arg("e"), py::arg("c") = kSpeedOfLight,
        py::arg("revolutions") = 0, py::arg("gm_scale") = 1.0,
        py::arg("steps_per_rev") = 4000, py::arg("projection") = true);

  // curvilinear operators on python callables (spherical chart)
  m.def("spherical_laplacian",
        [](const std::function<double(std::array<double, 3>)>& f,
           const std::array<double, 3>& q, double h) {
          const auto ops = frames::orthogonal_operators(frames::ScaleFactors::spherical());
          auto wrapped = [&f](const Vec3& p) { return f({p[0], p[1], p[2]}); };
          return ops.laplacian(wrapped, to_vec3(q), h);
        },
        py::arg("f"), py::arg("point"), py::arg("h") = 1e-5);
  m.def("spherical_grad",
        [](const std::function<double(std::array<double, 3>)>& f,
           const std::array<double, 3>& q, double h) {
          const auto ops = frames::orthogonal_operators(frames::ScaleFactors::spherical());
          auto wrapped = [&f](const Vec3& p) { return f({p[0], p[1], p[2]}); };
          return from_vec3(ops.grad_phys(wrapped, to_vec3(q), h));
        },
        py::arg("f"), py::arg("point"), py::arg("h") = 1e-5);

  // scenario front end
  m.def("run_config_text", [](const std::string& text, const std::string& out_dir) {
    auto cfg = cli::parse_config(text);
    cfg.out_dir = out_dir;
    const auto rep = cli::run(cfg);
    py::dict out;
    out["scenario"] = rep.scenario_id;
    out["all_pass"] = rep.all_pass();
    py::list checks;
    for (const auto& c : rep.checks) {
      py::dict row;
      row["name"] = c.name;
      row["value"] = c.value;
      row["tolerance"] = c.tolerance;
      row["pass"] = c.pass;
      checks.append(row);
    }
    out["checks"] = checks;
    out["artifacts"] = rep.artifacts;
    return out;
  });

  py::register_exception<Error>(m, "RelmechError");
}

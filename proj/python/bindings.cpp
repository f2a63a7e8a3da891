#include "toricflow/cli.hpp"
#include "toricflow/cone.hpp"
#include "toricflow/demazure.hpp"
#include "toricflow/error.hpp"
#include "toricflow/grading.hpp"
#include "toricflow/monoid.hpp"
#include "toricflow/orbitflow.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

namespace py = pybind11;
using namespace toricflow;

namespace {

py::int_ to_py(const Integer& v) { return py::int_(py::str(v.get_str())); }

py::object to_py(const Rational& q) {
  return py::module_::import("fractions").attr("Fraction")(q.get_str());
}

py::list to_py(const LatticeVector& v) {
  py::list out;
  for (const auto& x : v.entries()) out.append(to_py(x));
  return out;
}

py::list to_py(const std::vector<LatticeVector>& vs) {
  py::list out;
  for (const auto& v : vs) out.append(to_py(v));
  return out;
}

py::list to_py(const ToricPoint& x) {
  py::list out;
  for (const auto& c : x.coords) out.append(to_py(c));
  return out;
}

LatticeVector vec(const py::sequence& s, Side side) {
  IntVector e;
  for (const auto& x : s) e.push_back(Integer(py::str(x).cast<std::string>()));
  return LatticeVector(side, std::move(e));
}

std::vector<LatticeVector> vecs(const py::sequence& s, Side side) {
  std::vector<LatticeVector> out;
  for (const auto& v : s) out.push_back(vec(v.cast<py::sequence>(), side));
  return out;
}

Rational rat(const py::handle& x) { return parse_rational(py::str(x).cast<std::string>()); }

std::size_t rank_of(const std::vector<LatticeVector>& vs) {
  if (vs.empty()) throw Error(ErrorKind::InvalidArgument, "need at least one vector");
  return vs.front().rank();
}

Side side_of(const std::string& s) {
  if (s == "N") return Side::N;
  if (s == "M") return Side::M;
  throw Error(ErrorKind::InvalidArgument, "side must be \"N\" or \"M\"");
}

Cone cone(const py::sequence& rays, const std::string& side) {
  const auto vs = vecs(rays, side_of(side));
  return Cone::from_rays(vs, rank_of(vs), side_of(side));
}

AffineMonoid monoid(const py::sequence& gens) { return AffineMonoid(vecs(gens, Side::M)); }

py::dict classify_py(const py::sequence& gens, const py::sequence& l) {
  const AffineMonoid mon = monoid(gens);
  const GradingClass c = classify(mon, vec(l, Side::N));
  py::dict d;
  d["kind"] = to_string(c.kind);
  d["zero_face"] = c.zero_face ? py::object(py::cast(c.zero_face->rays)) : py::none();
  d["fixed_divisor_ray"] = c.fixed_divisor_ray ? py::object(py::cast(*c.fixed_divisor_ray)) : py::none();
  d["degree_gcd"] = to_py(c.degree_gcd);
  d["effective"] = c.effective;
  d["invariant_trdeg"] = c.invariant_trdeg ? py::object(py::cast(*c.invariant_trdeg)) : py::none();
  return d;
}

py::dict verify_py(const py::sequence& gens, const py::sequence& l, const py::sequence& torus) {
  const AffineMonoid mon = monoid(gens);
  std::vector<Rational> t;
  for (const auto& x : torus) t.push_back(rat(x));
  const std::vector<Rational> ts = {Rational(2), Rational(1, 2), Rational(-3)};
  const std::vector<Rational> ss = {Rational(1), Rational(-1), Rational(7, 3)};
  const CompatibilityReport r = verify_compatible(mon, vec(l, Side::N), torus_point(mon, t), ts, ss);
  py::dict d;
  d["passed"] = r.passed;
  d["ray"] = r.ray;
  d["root"] = to_py(r.root.e);
  d["point"] = to_py(r.point);
  d["limit"] = to_py(r.limit);
  d["flow_parameter"] = to_py(r.flow_parameter);
  d["invariant_generators"] = r.invariant_generators;
  py::list checks;
  for (const auto& c : r.checks) checks.append(py::make_tuple(c.name, c.passed, c.detail));
  d["checks"] = checks;
  return d;
}

}  // namespace

PYBIND11_MODULE(_toricflow, m) {
  m.doc() = "Exact toolkit for Gm- and Ga-actions on affine toric varieties";

  static py::exception<Error> error(m, "Error");
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      PyErr_SetObject(error.ptr(), py::make_tuple(std::string(to_string(e.kind())), e.what()).ptr());
    }
  });

  m.def("dual_rays", [](const py::sequence& rays, const std::string& side) { return to_py(cone(rays, side).dual().rays()); },
        py::arg("rays"), py::arg("side"), "Primitive rays of the dual cone.");
  m.def("facet_normals", [](const py::sequence& rays, const std::string& side) { return to_py(cone(rays, side).facet_normals()); },
        py::arg("rays"), py::arg("side"));
  m.def("hilbert_basis", [](const py::sequence& rays) { return to_py(hilbert_basis(cone(rays, "M"))); },
        py::arg("rays"), "Hilbert basis of the M-side cone on the given rays.");
  m.def("is_saturated", [](const py::sequence& gens) {
        const SaturationResult s = is_saturated(monoid(gens));
        return py::make_tuple(s.saturated, s.witness ? py::object(to_py(*s.witness)) : py::none());
      }, py::arg("generators"));
  m.def("contains", [](const py::sequence& gens, const py::sequence& u) { return monoid(gens).contains(vec(u, Side::M)); },
        py::arg("generators"), py::arg("u"));
  m.def("classify", &classify_py, py::arg("generators"), py::arg("l"));
  m.def("straightening_subtori", [](const py::sequence& gens) {
        py::list out;
        for (const auto& st : straightening_subtori(monoid(gens)).subtori) out.append(to_py(st.subtorus));
        return out;
      }, py::arg("generators"));
  m.def("roots_in_box", [](const py::sequence& sigma_rays, long box, std::optional<std::size_t> ray) {
        py::list out;
        for (const auto& r : roots_in_box(cone(sigma_rays, "N"), box, ray)) out.append(py::make_tuple(r.ray, to_py(r.e)));
        return out;
      }, py::arg("sigma_rays"), py::arg("box"), py::arg("ray") = py::none());
  m.def("verify_compatible", &verify_py, py::arg("generators"), py::arg("l"), py::arg("torus"));
  m.def("run_cli", [](const std::vector<std::string>& args) {
        std::ostringstream out, err;
        const int code = run(args, out, err);
        return py::make_tuple(code, out.str(), err.str());
      }, py::arg("args"), "Run the command-line front end; returns (exit code, stdout, stderr).");
}

// Python bindings for the sclif core. Names follow the C++ API one to one;
// everything crosses the boundary by value, so python objects never alias
// C++ state.

#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/functional.h>
#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "sclif/contour.hpp"
#include "sclif/kernel.hpp"
#include "sclif/multivector.hpp"
#include "sclif/series.hpp"
#include "sclif/series_json.hpp"
#include "sclif/slice.hpp"
#include "sclif/zeros.hpp"

#define SCLIF_STR_IMPL(x) #x
#define SCLIF_STR(x) SCLIF_STR_IMPL(x)

namespace py = pybind11;
using namespace sclif;

PYBIND11_MODULE(_core, m) {
  m.doc() = "Slice monogenic function toolkit over the Clifford algebra R_n";

  py::register_exception<DimensionMismatch>(m, "DimensionMismatch", PyExc_ValueError);
  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
  py::register_exception<SingularKernel>(m, "SingularKernel", PyExc_ArithmeticError);

  m.attr("MAX_GENERATORS") = kMaxGenerators;

  m.def("blade_grade", &blade_grade, py::arg("mask"));
  m.def("blade_sign", &blade_sign, py::arg("a"), py::arg("b"));
  m.def("blade_key", &blade_key, py::arg("mask"));
  m.def("parse_blade_key", &parse_blade_key, py::arg("key"), py::arg("n"));

  py::class_<Multivector>(m, "Multivector")
      .def(py::init<int>(), py::arg("n"))
      .def_static("scalar", &Multivector::scalar, py::arg("n"), py::arg("value"))
      .def_static("blade", &Multivector::blade, py::arg("n"), py::arg("mask"),
                  py::arg("value") = 1.0)
      .def_property_readonly("generators", &Multivector::generators)
      .def("__len__", &Multivector::size)
      .def("__getitem__",
           [](const Multivector& v, Mask mask) {
             if (mask >= v.size()) throw py::index_error("blade mask out of range");
             return v[mask];
           })
      .def("__getitem__",
           [](const Multivector& v, const std::string& key) {
             return v[parse_blade_key(key, v.generators())];
           })
      .def("__setitem__",
           [](Multivector& v, Mask mask, double value) {
             if (mask >= v.size()) throw py::index_error("blade mask out of range");
             v[mask] = value;
           })
      .def("__setitem__",
           [](Multivector& v, const std::string& key, double value) {
             v[parse_blade_key(key, v.generators())] = value;
           })
      .def_property_readonly("coefficients", &Multivector::coefficients)
      .def("scalar_part", &Multivector::scalar_part)
      .def("norm", &Multivector::norm)
      .def("norm_squared", &Multivector::norm_squared)
      .def("grade", &Multivector::grade, py::arg("k"))
      .def(py::self + py::self)
      .def(py::self - py::self)
      .def(py::self * py::self)
      .def(py::self * double())
      .def(double() * py::self)
      .def(-py::self)
      .def("__repr__", [](const Multivector& v) { return to_string(v); });

  m.def("geometric_product", &geometric_product, py::arg("a"), py::arg("b"));
  m.def("grade_project", &grade_project, py::arg("a"), py::arg("k"));

  py::class_<InnerWedge>(m, "InnerWedge")
      .def_readonly("scalar", &InnerWedge::scalar)
      .def_readonly("wedge", &InnerWedge::wedge);
  m.def("inner_wedge", &inner_wedge, py::arg("a"), py::arg("b"));

  py::class_<Paravector>(m, "Paravector")
      .def(py::init<double, std::vector<double>>(), py::arg("x0"), py::arg("vec"))
      .def_static("zero", &Paravector::zero, py::arg("n"))
      .def_static("real", &Paravector::real, py::arg("n"), py::arg("x0"))
      .def_property_readonly("generators", &Paravector::generators)
      .def_property_readonly("scalar", &Paravector::scalar)
      .def_property_readonly("vec", &Paravector::vec)
      .def("vec_norm", &Paravector::vec_norm)
      .def("norm", &Paravector::norm)
      .def("norm_squared", &Paravector::norm_squared)
      .def("to_multivector", &Paravector::to_multivector)
      .def("conjugate", &Paravector::conjugate)
      .def("inverse", &Paravector::inverse)
      .def(py::self + py::self)
      .def(py::self - py::self)
      .def(py::self * double())
      .def(double() * py::self)
      .def(-py::self)
      .def("__repr__",
           [](const Paravector& x) { return to_string(x.to_multivector()); });

  m.def("power", &power, py::arg("x"), py::arg("m"));
  m.def("paravector_part", &paravector_part, py::arg("v"));

  py::class_<UnitOneVector>(m, "UnitOneVector")
      .def(py::init<std::vector<double>>(), py::arg("components"))
      .def_static("axis", &UnitOneVector::axis, py::arg("n"), py::arg("index"))
      .def_property_readonly("generators", &UnitOneVector::generators)
      .def_property_readonly("components", &UnitOneVector::components)
      .def("to_multivector", &UnitOneVector::to_multivector)
      .def("to_paravector", &UnitOneVector::to_paravector)
      .def("__repr__",
           [](const UnitOneVector& I) { return to_string(I.to_multivector()); });

  m.def("dot", &dot, py::arg("a"), py::arg("b"));
  m.def("distance", &distance, py::arg("a"), py::arg("b"));
  m.def("slice_unit",
        py::overload_cast<const Paravector&>(&slice_unit), py::arg("x"));
  m.def("slice_unit",
        py::overload_cast<const Paravector&, const UnitOneVector&>(&slice_unit),
        py::arg("x"), py::arg("fallback"));
  m.def("plane_coordinate", &plane_coordinate, py::arg("x"), py::arg("I"),
        py::arg("tol") = 1e-10);
  m.def("from_plane", &from_plane, py::arg("z"), py::arg("I"));

  py::class_<SlicePoint>(m, "SlicePoint")
      .def(py::init([](const UnitOneVector& I, double x, double y) {
             return SlicePoint{I, x, y};
           }),
           py::arg("I"), py::arg("x"), py::arg("y"))
      .def_static("from_paravector", &SlicePoint::from_paravector, py::arg("p"))
      .def_readwrite("I", &SlicePoint::I)
      .def_readwrite("x", &SlicePoint::x)
      .def_readwrite("y", &SlicePoint::y)
      .def("embed", &SlicePoint::embed);

  py::class_<SliceFrame>(m, "SliceFrame")
      .def_static("complete", &SliceFrame::complete, py::arg("i1"),
                  py::arg("seed") = 0)
      .def_property_readonly("generators", &SliceFrame::generators)
      .def_property_readonly("basis", &SliceFrame::basis)
      .def("blade", &SliceFrame::blade, py::arg("mask"))
      .def("change_of_basis", &SliceFrame::change_of_basis);

  m.def("split", &split, py::arg("value"), py::arg("frame"));
  m.def("unsplit", &unsplit, py::arg("components"), py::arg("frame"));

  py::class_<SphereClass>(m, "SphereClass")
      .def_readwrite("center", &SphereClass::center)
      .def_readwrite("radius", &SphereClass::radius)
      .def_readwrite("n", &SphereClass::n);
  m.def("equivalence_class", &equivalence_class, py::arg("s"));
  m.def("sphere_sample", &sphere_sample, py::arg("cls"), py::arg("count"),
        py::arg("seed"));

  py::class_<PowerSeries>(m, "PowerSeries")
      .def(py::init<int>(), py::arg("n"))
      .def(py::init<std::vector<Multivector>, double>(), py::arg("coefficients"),
           py::arg("radius") = std::numeric_limits<double>::infinity())
      .def_property_readonly("generators", &PowerSeries::generators)
      .def_property_readonly("term_count", &PowerSeries::term_count)
      .def("coefficient", &PowerSeries::coefficient, py::arg("m"))
      .def_property_readonly("coefficients", &PowerSeries::coefficients)
      .def_property("radius", &PowerSeries::radius, &PowerSeries::set_radius)
      .def("eval", &PowerSeries::eval, py::arg("x"))
      .def("__call__", &PowerSeries::eval, py::arg("x"));

  py::class_<LaurentSeries>(m, "LaurentSeries")
      .def(py::init<PowerSeries, std::vector<Multivector>, double, double>(),
           py::arg("regular"), py::arg("principal"), py::arg("inner_radius"),
           py::arg("outer_radius"))
      .def_property_readonly("generators", &LaurentSeries::generators)
      .def_property_readonly("regular", &LaurentSeries::regular)
      .def_property_readonly("principal", &LaurentSeries::principal)
      .def_property_readonly("inner_radius", &LaurentSeries::inner_radius)
      .def_property_readonly("outer_radius", &LaurentSeries::outer_radius)
      .def("has_principal", &LaurentSeries::has_principal)
      .def("eval", &LaurentSeries::eval, py::arg("x"))
      .def("__call__", &LaurentSeries::eval, py::arg("x"));

  m.def("s_derivative", &s_derivative, py::arg("f"));
  m.def("multiply_real", &multiply_real, py::arg("f"), py::arg("g"));
  m.def("compose_real", &compose_real, py::arg("f"), py::arg("g"),
        py::arg("order") = kDefaultCompositionOrder);
  m.def("recenter", &recenter, py::arg("f"), py::arg("y0"));
  m.def("compose_inversion", &compose_inversion, py::arg("f"));
  m.def("extend_holomorphic", &extend_holomorphic, py::arg("coefficients"),
        py::arg("I"));
  m.def("estimate_radius", &estimate_radius, py::arg("f"));
  m.def("monogenicity_residual", &monogenicity_residual, py::arg("f"),
        py::arg("p"), py::arg("h") = 1e-4);

  py::class_<ContourSpec>(m, "ContourSpec")
      .def(py::init<UnitOneVector, double, double, int>(), py::arg("I"),
           py::arg("center"), py::arg("radius"), py::arg("nodes") = 256)
      .def_readwrite("I", &ContourSpec::I)
      .def_readwrite("center", &ContourSpec::center)
      .def_readwrite("radius", &ContourSpec::radius)
      .def_readwrite("nodes", &ContourSpec::nodes);

  py::class_<QuadratureReport>(m, "QuadratureReport")
      .def_readonly("value", &QuadratureReport::value)
      .def_readonly("node_count", &QuadratureReport::node_count)
      .def_readonly("est_error", &QuadratureReport::est_error);

  m.def("cauchy_eval", &cauchy_eval, py::arg("f"), py::arg("x"), py::arg("contour"));
  m.def("annulus_cauchy_eval", &annulus_cauchy_eval, py::arg("f"), py::arg("x"),
        py::arg("outer"), py::arg("inner"));
  m.def("exterior_cauchy_eval", &exterior_cauchy_eval, py::arg("f"), py::arg("x"),
        py::arg("a_limit"), py::arg("contour"));
  m.def("taylor_coefficient", &taylor_coefficient, py::arg("f"), py::arg("m"),
        py::arg("contour"));
  m.def("laurent_coefficient", &laurent_coefficient, py::arg("f"), py::arg("m"),
        py::arg("contour"));
  m.def("closed_curve_integral", &closed_curve_integral, py::arg("f"),
        py::arg("contour"));

  py::class_<CauchyEstimate>(m, "CauchyEstimate")
      .def_readonly("order", &CauchyEstimate::order)
      .def_readonly("lhs", &CauchyEstimate::lhs)
      .def_readonly("rhs", &CauchyEstimate::rhs)
      .def_readonly("ok", &CauchyEstimate::ok);
  m.def("cauchy_estimate_check", &cauchy_estimate_check, py::arg("f"), py::arg("r"),
        py::arg("I"), py::arg("max_order"), py::arg("nodes") = 256,
        py::arg("slack") = 1e-9);

  py::class_<CharacteristicQuadratic>(m, "CharacteristicQuadratic")
      .def_readonly("c1", &CharacteristicQuadratic::c1)
      .def_readonly("c0", &CharacteristicQuadratic::c0);
  m.def("characteristic_quadratic", &characteristic_quadratic, py::arg("s"));
  m.def("class_quadratic_residual", &class_quadratic_residual, py::arg("v"),
        py::arg("c1"), py::arg("c0"));
  m.def("is_in_class", &is_in_class, py::arg("x"), py::arg("s"),
        py::arg("tol") = 1e-10);
  m.def("quadratic_counterexample_check", &quadratic_counterexample_check,
        py::arg("v"));

  py::class_<AlphaBeta>(m, "AlphaBeta")
      .def_readonly("alpha", &AlphaBeta::alpha)
      .def_readonly("beta", &AlphaBeta::beta);
  m.def("alpha_beta", &alpha_beta, py::arg("x0"), py::arg("y0"), py::arg("m"));

  py::class_<SphereZeroVerdict>(m, "SphereZeroVerdict")
      .def_readonly("root1", &SphereZeroVerdict::root1)
      .def_readonly("root2", &SphereZeroVerdict::root2)
      .def_readonly("whole_sphere", &SphereZeroVerdict::whole_sphere)
      .def_readonly("alpha_sum", &SphereZeroVerdict::alpha_sum)
      .def_readonly("beta_sum", &SphereZeroVerdict::beta_sum)
      .def_readonly("root1_residual", &SphereZeroVerdict::root1_residual)
      .def_readonly("root2_residual", &SphereZeroVerdict::root2_residual)
      .def_readonly("max_sample_residual", &SphereZeroVerdict::max_sample_residual);
  m.def("sphere_zero_test", &sphere_zero_test, py::arg("series"), py::arg("x0"),
        py::arg("y0"), py::arg("I1"), py::arg("I2"), py::arg("tol"),
        py::arg("seed") = 42, py::arg("samples") = 100);
  m.def("default_zero_tolerance", &default_zero_tolerance, py::arg("series"),
        py::arg("x0"), py::arg("y0"));

  m.def("kernel_series_sum", &kernel_series_sum, py::arg("p"), py::arg("s"),
        py::arg("terms"));
  m.def("kernel_tail_ratio", &kernel_tail_ratio, py::arg("p"), py::arg("s"));
  m.def("kernel_closed_form", &kernel_closed_form, py::arg("p"), py::arg("s"));
  m.def("kernel_inverse", &kernel_inverse, py::arg("p"), py::arg("s"));
  m.def("verify_identity_ss1",
        py::overload_cast<const Paravector&, const Paravector&, int>(
            &verify_identity_ss1),
        py::arg("p"), py::arg("s"), py::arg("terms"));

  py::class_<OperatorParavector>(m, "OperatorParavector")
      .def(py::init<int, std::vector<Eigen::MatrixXd>>(), py::arg("n"),
           py::arg("components"))
      .def_property_readonly("generators", &OperatorParavector::generators)
      .def_property_readonly("dim", &OperatorParavector::dim)
      .def("component", &OperatorParavector::component, py::arg("j"))
      .def("frobenius_norm", &OperatorParavector::frobenius_norm);

  py::class_<MatrixMultivector>(m, "MatrixMultivector")
      .def(py::init<int, int>(), py::arg("n"), py::arg("d"))
      .def_static("from_paravector", &MatrixMultivector::from_paravector,
                  py::arg("s"), py::arg("d"))
      .def_static("from_operator", &MatrixMultivector::from_operator, py::arg("t"))
      .def_property_readonly("generators", &MatrixMultivector::generators)
      .def_property_readonly("dim", &MatrixMultivector::dim)
      .def("__len__", &MatrixMultivector::size)
      .def("__getitem__",
           [](const MatrixMultivector& v, Mask mask) -> Eigen::MatrixXd {
             if (mask >= v.size()) throw py::index_error("blade mask out of range");
             return v[mask];
           })
      .def("__setitem__",
           [](MatrixMultivector& v, Mask mask, const Eigen::MatrixXd& value) {
             if (mask >= v.size()) throw py::index_error("blade mask out of range");
             v[mask] = value;
           })
      .def("norm", &MatrixMultivector::norm)
      .def(py::self + py::self)
      .def(py::self - py::self)
      .def(py::self * py::self);

  m.def("operator_kernel_sum", &operator_kernel_sum, py::arg("t"), py::arg("s"),
        py::arg("terms"));
  m.def("verify_identity_ss1",
        py::overload_cast<const OperatorParavector&, const Paravector&, int>(
            &verify_identity_ss1),
        py::arg("t"), py::arg("s"), py::arg("terms"));

  py::class_<ProbePoint>(m, "ProbePoint")
      .def_readonly("distance", &ProbePoint::distance)
      .def_readonly("kernel_norm", &ProbePoint::kernel_norm);
  m.def("singularity_probe", &singularity_probe, py::arg("s"), py::arg("path"));

  m.def("parse_series", &parse_series, py::arg("path"));
  m.def("parse_series_text", &parse_series_text, py::arg("text"));
  m.def("serialize_series",
        py::overload_cast<const LaurentSeries&>(&serialize_series), py::arg("s"));
  m.def("serialize_series",
        py::overload_cast<const PowerSeries&>(&serialize_series), py::arg("s"));
  m.def("parse_paravector", &parse_paravector, py::arg("literal"), py::arg("n"));

  m.def("evaluator", py::overload_cast<const PowerSeries&>(&evaluator),
        py::arg("f"));
  m.def("evaluator", py::overload_cast<const LaurentSeries&>(&evaluator),
        py::arg("f"));

#ifdef VERSION_INFO
  m.attr("__version__") = SCLIF_STR(VERSION_INFO);
#else
  m.attr("__version__") = "dev";
#endif
}

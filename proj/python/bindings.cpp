#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "kq/brioschi_quintic.hpp"
#include "kq/errors.hpp"
#include "kq/instances.hpp"
#include "kq/kronecker_f.hpp"
#include "kq/perm_group.hpp"
#include "kq/poly_core.hpp"
#include "kq/resolvent12.hpp"

namespace py = pybind11;

namespace {

kq::MonicPoly to_poly(const std::vector<kq::Complex>& coeffs) { return kq::MonicPoly(coeffs); }

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "The twelve-valued root function f, its degree-12 resolvent, and the principal-form product quintic.";

    auto base = py::register_exception<kq::Error>(m, "Error", PyExc_RuntimeError);
    py::register_exception<kq::InvalidInput>(m, "InvalidInput", PyExc_ValueError);
    py::register_exception<kq::NumericFailure>(m, "NumericFailure", base.ptr());
    py::register_exception<kq::Degenerate>(m, "Degenerate", base.ptr());
    py::register_exception<kq::VerificationFailure>(m, "VerificationFailure", base.ptr());

    // Polynomials cross the boundary as coefficient lists (z^(n-1) ... z^0, leading 1 implicit).
    m.def("poly_from_roots",
          [](const std::vector<kq::Complex>& roots) { return kq::poly_from_roots(roots).coeffs(); },
          py::arg("roots"));
    m.def("find_roots",
          [](const std::vector<kq::Complex>& coeffs) { return kq::find_roots(to_poly(coeffs)); },
          py::arg("coeffs"));
    m.def("sqrt_discriminant", &kq::sqrt_discriminant, py::arg("roots"));
    m.def("is_degenerate", &kq::is_degenerate, py::arg("roots"));
    m.def("random_instance", &kq::random_instance, py::arg("seed"), py::arg("index"));

    py::class_<kq::Perm5>(m, "Perm5")
        .def(py::init<const std::array<int, 5>&>(), py::arg("image"))
        .def_property_readonly("image", &kq::Perm5::image)
        .def_property_readonly("parity", &kq::Perm5::parity)
        .def("inverse", &kq::Perm5::inverse)
        .def("__call__", &kq::Perm5::operator())
        .def("__eq__", [](const kq::Perm5& a, const kq::Perm5& b) { return a == b; })
        .def("__repr__", [](const kq::Perm5& p) {
            std::string s = "Perm5([";
            for (int i = 0; i < 5; ++i) {
                s += std::to_string(p(i)) + (i < 4 ? ", " : "])");
            }
            return s;
        });
    m.def("all_s5", &kq::all_s5);
    m.def("all_a5", &kq::all_a5);
    m.def("three_cycles", &kq::three_cycles);
    m.def("compose", &kq::compose);
    m.def("apply", [](const kq::Perm5& p, const kq::RootTuple& rt) { return kq::apply(p, rt); },
          py::arg("perm"), py::arg("roots"));

    py::class_<kq::FFamily>(m, "FFamily")
        .def_readonly("f", &kq::FFamily::f)
        .def_readonly("fk", &kq::FFamily::fk)
        .def("values", &kq::FFamily::values);
    m.def("eval_f", &kq::eval_f, py::arg("roots"));
    m.def("f_family", &kq::f_family, py::arg("roots"));

    py::class_<kq::FamilyLabel>(m, "FamilyLabel")
        .def_readonly("member", &kq::FamilyLabel::member)
        .def_readonly("sign", &kq::FamilyLabel::sign)
        .def_readonly("deviation", &kq::FamilyLabel::deviation);
    py::class_<kq::OrbitReport>(m, "OrbitReport")
        .def_readonly("values", &kq::OrbitReport::values)
        .def_readonly("pair_map", &kq::OrbitReport::pair_map)
        .def_readonly("family_match", &kq::OrbitReport::family_match)
        .def_readonly("degenerate", &kq::OrbitReport::degenerate)
        .def("well_formed", &kq::OrbitReport::well_formed);
    m.def("a5_orbit", &kq::a5_orbit, py::arg("roots"), py::arg("tol") = kq::kDefaultDedupTol);

    py::class_<kq::RelationReport>(m, "RelationReport")
        .def_readonly("rank", &kq::RelationReport::rank)
        .def_readonly("singular_values", &kq::RelationReport::singular_values)
        .def_readonly("relations", &kq::RelationReport::relations)
        .def_readonly("integer_relations", &kq::RelationReport::integer_relations);
    m.def("relation_rank",
          [](const std::vector<kq::FFamily>& samples, double threshold) {
              return kq::relation_rank(samples, threshold);
          },
          py::arg("samples"), py::arg("threshold") = kq::kDefaultRankThreshold);

    py::class_<kq::FitResiduals>(m, "FitResiduals")
        .def_readonly("r4", &kq::FitResiduals::r4)
        .def_readonly("r2", &kq::FitResiduals::r2)
        .def_readonly("r0", &kq::FitResiduals::r0);
    py::class_<kq::ResolventCoeffs>(m, "ResolventCoeffs")
        .def_readonly("a", &kq::ResolventCoeffs::a)
        .def_readonly("b", &kq::ResolventCoeffs::b)
        .def_readonly("c", &kq::ResolventCoeffs::c)
        .def_readonly("residuals", &kq::ResolventCoeffs::residuals);
    m.def("sextic_from_family",
          [](const kq::FFamily& fam) { return kq::sextic_from_family(fam).coeffs(); });
    m.def("fit_abc",
          [](const std::vector<kq::Complex>& sextic) { return kq::fit_abc(to_poly(sextic)); },
          py::arg("sextic"));
    m.def("eval_resolvent_form", &kq::eval_resolvent_form, py::arg("F"), py::arg("a"), py::arg("b"), py::arg("c"));
    m.def("degree12_poly",
          [](const kq::ResolventCoeffs& coeffs) { return kq::degree12_poly(coeffs).coeffs(); });

    py::class_<kq::TwoValuednessReport>(m, "TwoValuednessReport")
        .def_readonly("even_triple", &kq::TwoValuednessReport::even_triple)
        .def_readonly("odd_triple", &kq::TwoValuednessReport::odd_triple)
        .def_readonly("even_spread", &kq::TwoValuednessReport::even_spread)
        .def_readonly("odd_spread", &kq::TwoValuednessReport::odd_spread)
        .def_readonly("pair_symmetric_spread", &kq::TwoValuednessReport::pair_symmetric_spread);
    m.def("two_valuedness_check", &kq::two_valuedness_check, py::arg("roots"));

    py::class_<kq::PhiFamily>(m, "PhiFamily")
        .def_readonly("values", &kq::PhiFamily::values)
        .def_readonly("s5_value_count", &kq::PhiFamily::s5_value_count);
    py::class_<kq::SuppressedCoefficients>(m, "SuppressedCoefficients")
        .def_readonly("c4_mag", &kq::SuppressedCoefficients::c4_mag)
        .def_readonly("c2_mag", &kq::SuppressedCoefficients::c2_mag);
    py::class_<kq::PrincipalQuintic>(m, "PrincipalQuintic")
        .def_readonly("p", &kq::PrincipalQuintic::p)
        .def_readonly("q", &kq::PrincipalQuintic::q)
        .def_readonly("r", &kq::PrincipalQuintic::r)
        .def_readonly("suppressed", &kq::PrincipalQuintic::suppressed);
    py::class_<kq::PowerSumCheck>(m, "PowerSumCheck")
        .def_readonly("p1", &kq::PowerSumCheck::p1)
        .def_readonly("p3", &kq::PowerSumCheck::p3)
        .def_readonly("p2_magnitude", &kq::PowerSumCheck::p2_magnitude);
    m.def("phi", &kq::phi, py::arg("family"));
    m.def("phi_values",
          [](const kq::RootTuple& rt, double tol) { return kq::phi_values(rt, tol); },
          py::arg("roots"), py::arg("tol") = kq::kDefaultDedupTol);
    m.def("phi_quintic", &kq::phi_quintic, py::arg("phi_family"));
    m.def("power_sum_check", &kq::power_sum_check, py::arg("phi_family"));
    m.def("invariance_check", &kq::invariance_check, py::arg("roots"),
          py::arg("tol") = kq::kDefaultDedupTol);
}

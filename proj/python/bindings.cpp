#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "tamecoh/cyccoh.hpp"
#include "tamecoh/error.hpp"
#include "tamecoh/groups.hpp"
#include "tamecoh/l3.hpp"
#include "tamecoh/mass.hpp"
#include "tamecoh/report.hpp"
#include "tamecoh/tame.hpp"

namespace py = pybind11;
using namespace tamecoh;

namespace {

py::object fraction(const Rational& r) {
  static py::object Fraction = py::module_::import("fractions").attr("Fraction");
  return Fraction(py::str(to_fraction_string(r)));
}

}  // namespace

PYBIND11_MODULE(_tamecoh, m) {
  m.doc() = "Tamely ramified extensions of local fields and cyclic group cohomology";
  m.attr("__version__") = TAMECOH_VERSION;

  static py::exception<OracleMismatch> oracle_error(m, "OracleMismatch", PyExc_RuntimeError);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const InputError& e) {
      PyErr_SetString(PyExc_ValueError, e.what());
    } catch (const IoError& e) {
      PyErr_SetString(PyExc_OSError, e.what());
    } catch (const OracleMismatch& e) {
      py::set_error(oracle_error, e.what());
    }
  });

  // arith
  m.def("factor_prime_power", [](Nat q) -> std::optional<std::pair<Nat, unsigned>> {
    const auto pp = factor_prime_power(q);
    if (!pp) return std::nullopt;
    return std::make_pair(pp->p, pp->r);
  });
  m.def("additive_order", &additive_order);
  m.def("solve_linear_congruence",
        [](Nat a, Nat b, Nat modulus) -> std::optional<std::pair<Nat, Nat>> {
          const auto sol = solve_linear_congruence(a, b, modulus);
          if (!sol) return std::nullopt;
          return std::make_pair(sol->x0, sol->step);
        });

  // cyccoh
  py::class_<CyclicAction>(m, "CyclicAction")
      .def(py::init(&CyclicAction::make), py::arg("m"), py::arg("n"), py::arg("a"))
      .def_property_readonly("m", &CyclicAction::m)
      .def_property_readonly("n", &CyclicAction::n)
      .def_property_readonly("a", &CyclicAction::a)
      .def("__eq__", [](const CyclicAction& x, const CyclicAction& y) { return x == y; })
      .def("__repr__", [](const CyclicAction& x) {
        return "CyclicAction(m=" + std::to_string(x.m()) + ", n=" + std::to_string(x.n()) +
               ", a=" + std::to_string(x.a()) + ")";
      });
  py::class_<H2Class>(m, "H2Class")
      .def_readonly("action", &H2Class::action)
      .def_readonly("rep", &H2Class::rep)
      .def("is_trivial", &H2Class::is_trivial)
      .def("__eq__", [](const H2Class& x, const H2Class& y) { return x == y; })
      .def("__repr__", [](const H2Class& c) { return "H2Class(rep=" + std::to_string(c.rep) + ")"; });
  m.def("norm_sum", &norm_sum);
  m.def("h1_order", &h1_order);
  m.def("h2_order", &h2_order);
  m.def("h2_order_bruteforce", &h2_order_bruteforce);
  m.def("make_class", &make_class);
  m.def("class_order", &class_order);
  m.def("inflate", &inflate);
  m.def("splitting_multiplier", &splitting_multiplier);

  // groups
  py::class_<MetacyclicPresentation>(m, "MetacyclicPresentation")
      .def(py::init(&MetacyclicPresentation::make), py::arg("m"), py::arg("n"), py::arg("a"),
           py::arg("s"))
      .def_property_readonly("m", &MetacyclicPresentation::m)
      .def_property_readonly("n", &MetacyclicPresentation::n)
      .def_property_readonly("a", &MetacyclicPresentation::a)
      .def_property_readonly("s", &MetacyclicPresentation::s)
      .def_property_readonly("order", &MetacyclicPresentation::order)
      .def("__eq__", [](const MetacyclicPresentation& x, const MetacyclicPresentation& y) {
        return x == y;
      });
  py::class_<StructureReport>(m, "StructureReport")
      .def_readonly("order", &StructureReport::order)
      .def_readonly("is_abelian", &StructureReport::is_abelian)
      .def_readonly("is_cyclic", &StructureReport::is_cyclic)
      .def_readonly("exponent", &StructureReport::exponent)
      .def_readonly("involution_count", &StructureReport::involution_count)
      .def_readonly("center_order", &StructureReport::center_order)
      .def_readonly("name", &StructureReport::name);
  m.def("multiply", [](const MetacyclicPresentation& p, std::pair<Nat, Nat> g1,
                       std::pair<Nat, Nat> g2) {
    const auto r = multiply(p, {g1.first, g1.second}, {g2.first, g2.second});
    return std::make_pair(r.i, r.j);
  });
  m.def("element_order", [](const MetacyclicPresentation& p, std::pair<Nat, Nat> g) {
    return element_order(p, {g.first, g.second});
  });
  m.def("structure_report", &structure_report);
  m.def("is_isomorphic", &is_isomorphic);

  // tame
  py::class_<LocalField>(m, "LocalField")
      .def(py::init(&LocalField::make), py::arg("q"))
      .def_property_readonly("q", &LocalField::q)
      .def_property_readonly("p", &LocalField::p)
      .def_property_readonly("r", &LocalField::r);
  py::class_<TameShape>(m, "TameShape")
      .def(py::init(&TameShape::make), py::arg("field"), py::arg("e"), py::arg("f"))
      .def_property_readonly("q", &TameShape::q)
      .def_property_readonly("e", &TameShape::e)
      .def_property_readonly("f", &TameShape::f)
      .def_property_readonly("g", &TameShape::g)
      .def_property_readonly("g_f", &TameShape::g_f)
      .def_property_readonly("galois_regime", &TameShape::galois_regime);
  py::class_<LineParam>(m, "LineParam")
      .def(py::init(&make_line), py::arg("shape"), py::arg("x"))
      .def_readonly("shape", &LineParam::shape)
      .def_readonly("x", &LineParam::x);
  py::class_<ExtensionClass>(m, "ExtensionClass")
      .def_readonly("shape", &ExtensionClass::shape)
      .def_readonly("orbit", &ExtensionClass::orbit)
      .def_property_readonly("rep", &ExtensionClass::rep)
      .def("line", &ExtensionClass::line);
  m.def("lines", &lines);
  m.def("frobenius", &frobenius);
  m.def("orbits", &orbits);
  m.def("is_stable", &is_stable);
  m.def("is_galoisian", &is_galoisian);
  m.def("is_abelian", &is_abelian);
  m.def("class_via_quotient", &class_via_quotient);
  m.def("class_via_norm", &class_via_norm);
  m.def("closure_degree", &closure_degree);
  m.def("split_degree", &split_degree);
  m.def("base_change", &base_change);
  m.def("galois_group", &galois_group);
  m.def("is_cyclic_class", &is_cyclic_class);
  m.def("aut_order_totally_ramified", &aut_order_totally_ramified);

  // mass
  m.def("tame_mass", [](Nat q, Nat e) {
    const auto r = tame_mass(LocalField::make(q), e);
    py::dict out;
    out["class_count"] = r.class_count;
    out["aut_order"] = r.aut_order;
    out["subfields_per_class"] = r.subfields_per_class;
    out["subfield_count_sum"] = fraction(r.subfield_count_sum);
    out["per_class_weighted_sum"] = fraction(r.per_class_weighted_sum);
    return out;
  });

  // JSON reports, identical to the CLI output
  m.def("classify_json", [](Nat q, Nat e, Nat f) {
    return to_json(classify(TameShape::make(LocalField::make(q), e, f)));
  });
  m.def("l3_json", [](Nat q, Nat l, bool include_abelian) {
    return to_json(classify_l3(LocalField::make(q), l, include_abelian));
  }, py::arg("q"), py::arg("l"), py::arg("include_abelian") = false);
  m.def("cohomology_json",
        [](Nat mod, Nat n, Nat a) { return cohomology_json(CyclicAction::make(mod, n, a)); });
}

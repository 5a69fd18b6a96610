#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <string>
#include <vector>

#include "isb/constructions.hpp"
#include "isb/io.hpp"
#include "isb/morphism.hpp"
#include "isb/search.hpp"
#include "isb/semibrace.hpp"
#include "isb/solutions.hpp"

namespace py = pybind11;
using namespace pybind11::literals;

namespace {

using Rows = std::vector<std::vector<isb::Element>>;

isb::MagmaTable table(Rows const& rows) { return isb::MagmaTable::from_rows(rows); }

isb::InverseSemigroup inverse_semigroup(Rows const& mul) {
  return isb::InverseSemigroup(isb::FiniteSemigroup(table(mul)));
}

Rows square(std::vector<isb::Element> const& flat, std::size_t n) {
  Rows out(n);
  for (std::size_t a = 0; a < n; ++a) out[a].assign(flat.begin() + a * n, flat.begin() + (a + 1) * n);
  return out;
}

py::object witness(isb::Check const& c) {
  if (c.holds || !c.witness) return py::none();
  return py::cast(*c.witness);
}

py::tuple check(isb::Check const& c) { return py::make_tuple(c.holds, witness(c)); }

isb::ActionFamily family(std::vector<isb::CarrierMap> const& maps, std::size_t target) {
  return isb::ActionFamily(maps.size(), target, maps);
}

isb::Equation equation(std::string const& which) {
  if (which == "braid") return isb::Equation::Braid;
  if (which == "qybe") return isb::Equation::Qybe;
  if (which == "pentagon") return isb::Equation::Pentagon;
  throw py::value_error("unknown equation: " + which);
}

}  // namespace

PYBIND11_MODULE(pyisb, m) {
  m.doc() = "Finite inverse semi-braces and their set-theoretic Yang-Baxter maps.";

  static py::exception<isb::AlgebraError> algebra_error(m, "AlgebraError", PyExc_ValueError);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (isb::AlgebraError const& e) {
      py::tuple args = py::make_tuple(std::string(isb::to_string(e.kind())), e.what(), e.witness());
      PyErr_SetObject(algebra_error.ptr(), args.ptr());
    }
  });

  py::class_<isb::PairMap>(m, "PairMap")
      .def(py::init([](Rows const& lam, Rows const& rho) {
             std::size_t const n = lam.size();
             std::vector<isb::Element> l, r;
             for (auto const& row : lam) l.insert(l.end(), row.begin(), row.end());
             for (auto const& row : rho) r.insert(r.end(), row.begin(), row.end());
             return isb::PairMap(n, std::move(l), std::move(r));
           }),
           "lam"_a, "rho"_a)
      .def_property_readonly("order", &isb::PairMap::order)
      .def_property_readonly("lam", [](isb::PairMap const& r) { return square(r.lambda_table(), r.order()); })
      .def_property_readonly("rho", [](isb::PairMap const& r) { return square(r.rho_table(), r.order()); })
      .def("__call__", [](isb::PairMap const& r, isb::Element a, isb::Element b) { return r(a, b); })
      .def("__eq__", [](isb::PairMap const& a, isb::PairMap const& b) { return a == b; });

  py::class_<isb::InverseSemiBrace>(m, "SemiBrace")
      .def(py::init([](Rows const& add, Rows const& mul) { return isb::InverseSemiBrace(table(add), table(mul)); }),
           "add"_a, "mul"_a)
      .def_property_readonly("order", &isb::InverseSemiBrace::order)
      .def_property_readonly("add", [](isb::InverseSemiBrace const& s) { return s.additive().table().rows(); })
      .def_property_readonly("mul", [](isb::InverseSemiBrace const& s) { return s.multiplicative().table().rows(); })
      .def_property_readonly("inverses", [](isb::InverseSemiBrace const& s) { return s.multiplicative().inverses(); })
      .def_property_readonly("labels", &isb::InverseSemiBrace::labels)
      .def("lambda_rho", [](isb::InverseSemiBrace const& s) { return isb::lambda_rho(s); })
      .def("to_json", [](isb::InverseSemiBrace const& s) { return isb::io::to_json(s).dump(); });

  m.def("check_associative", [](Rows const& t) { return check(isb::check_associative(table(t))); });
  m.def("inverses", [](Rows const& mul) { return inverse_semigroup(mul).inverses(); }, "mul"_a);
  m.def("endomorphisms", [](Rows const& t) { return isb::enumerate_endomorphisms(table(t)); }, "table"_a);

  m.def(
      "example_family",
      [](Rows const& mul, std::string const& variant, std::optional<isb::Element> e) {
        auto v = isb::parse_example_variant(variant);
        if (!v) throw py::value_error("unknown variant: " + variant);
        return isb::build_example_family(inverse_semigroup(mul), *v, e);
      },
      "mul"_a, "variant"_a, "e"_a = py::none());

  m.def("check_braid", [](isb::PairMap const& r) { return check(isb::check_braid(r)); });
  m.def(
      "check_equation", [](isb::PairMap const& r, std::string const& which) { return check(isb::check_equation(r, equation(which))); },
      "r"_a, "which"_a);
  m.def("flip_compose", &isb::flip_compose);
  m.def("power_profile", [](isb::PairMap const& r) {
    auto p = isb::power_profile(r);
    return py::dict("index"_a = p.index, "period"_a = p.period, "is_idempotent"_a = p.is_idempotent,
                    "is_cubic"_a = p.is_cubic, "is_involutive"_a = p.is_involutive);
  });
  m.def("degeneracy_profile", [](isb::PairMap const& r) {
    auto d = isb::degeneracy_profile(r);
    return py::dict("left_nondegenerate"_a = d.left_nondegenerate.holds,
                    "right_nondegenerate"_a = d.right_nondegenerate.holds, "bijective"_a = d.bijective.holds,
                    "class"_a = std::string(d.degeneracy_class()));
  });
  m.def("solutions_isomorphic",
        [](isb::PairMap const& a, isb::PairMap const& b) { return isb::solutions_isomorphic(a, b); },
        "Permutation carrying the first map onto the second, or None.");
  m.def("condsolution", [](isb::InverseSemiBrace const& s) {
    auto v = isb::check_condsolution(s);
    return py::dict("condition"_a = check(v.condition), "braid"_a = check(v.braid));
  });

  m.def(
      "semidirect",
      [](isb::InverseSemiBrace const& s, isb::InverseSemiBrace const& t, std::vector<isb::CarrierMap> const& sigma) {
        auto res = isb::build_semidirect(s, t, family(sigma, s.order()));
        return py::make_tuple(res.product.structure, res.product.closed_form);
      },
      "s"_a, "t"_a, "sigma"_a);
  m.def(
      "double_semidirect",
      [](isb::InverseSemiBrace const& s, isb::InverseSemiBrace const& t, std::vector<isb::CarrierMap> const& sigma,
         std::vector<isb::CarrierMap> const& delta) {
        auto res = isb::build_double_semidirect(s, t, family(sigma, s.order()), family(delta, t.order()));
        return py::make_tuple(res.product.structure, res.product.closed_form);
      },
      "s"_a, "t"_a, "sigma"_a, "delta"_a);

  m.def(
      "enumerate_additions",
      [](Rows const& mul, std::string const& emit, bool canonical) {
        isb::SearchConfig cfg;
        auto mode = isb::parse_emit_mode(emit);
        if (!mode) throw py::value_error("unknown emit mode: " + emit);
        cfg.emit = *mode;
        cfg.canonical_only = canonical;
        std::vector<Rows> out;
        for (auto const& r : isb::collect_additions(inverse_semigroup(mul), cfg))
          out.push_back(r.structure.additive().table().rows());
        return out;
      },
      "mul"_a, "emit"_a = "all", "canonical"_a = false);
  m.def("enumerate_inverse_semigroups", [](std::size_t n) {
    std::vector<Rows> out;
    for (auto const& s : isb::enumerate_inverse_semigroups(n)) out.push_back(s.table().rows());
    return out;
  });
}

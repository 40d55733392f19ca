#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "braidverify/braid.hpp"
#include "braidverify/central_ext.hpp"
#include "braidverify/fpgroup.hpp"
#include "braidverify/hom_enum.hpp"
#include "braidverify/suites.hpp"

namespace py = pybind11;

namespace bv = braidverify;

namespace {

std::vector<long> torsion_as_longs(const bv::AbelianGroup& g) {
  std::vector<long> out;
  for (const mpz_class& t : g.torsion) out.push_back(t.get_si());
  return out;
}

} // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "verification toolkit for braid groups and their quotients";

  py::class_<bv::Perm>(m, "Perm")
      .def(py::init<int>(), py::arg("degree"))
      .def(py::init<int, std::vector<int>>(), py::arg("degree"), py::arg("images"))
      .def_static("transposition", &bv::Perm::transposition)
      .def_static("parse_cycles", &bv::Perm::parse_cycles)
      .def_property_readonly("degree", &bv::Perm::degree)
      .def_property_readonly("images", &bv::Perm::images)
      .def("apply", &bv::Perm::apply)
      .def("is_identity", &bv::Perm::is_identity)
      .def("inverse", &bv::Perm::inverse)
      .def("cycle_string", &bv::Perm::cycle_string)
      .def("__mul__",
           [](const bv::Perm& p, const bv::Perm& q) { return p * q; })
      .def("__eq__",
           [](const bv::Perm& p, const bv::Perm& q) { return p == q; })
      .def("__repr__", [](const bv::Perm& p) {
        return "Perm(" + std::to_string(p.degree()) + ", \"" + p.cycle_string() +
               "\")";
      });

  py::class_<bv::BraidWord>(m, "BraidWord")
      .def(py::init<int>(), py::arg("strands"))
      .def(py::init<int, std::vector<int>>(), py::arg("strands"), py::arg("letters"))
      .def_static("parse", &bv::BraidWord::parse)
      .def_property_readonly("strands", &bv::BraidWord::strands)
      .def_property_readonly("letters", &bv::BraidWord::letters)
      .def("inverse", &bv::BraidWord::inverse)
      .def("pow", &bv::BraidWord::pow)
      .def("text", &bv::BraidWord::text)
      .def("__mul__", [](const bv::BraidWord& u, const bv::BraidWord& v) {
        return u * v;
      });

  py::class_<bv::GarsideForm>(m, "GarsideForm")
      .def_property_readonly("infimum", &bv::GarsideForm::infimum)
      .def_property_readonly("canonical_length", &bv::GarsideForm::canonical_length)
      .def_property_readonly("supremum", &bv::GarsideForm::supremum)
      .def("is_trivial", &bv::GarsideForm::is_trivial)
      .def("word", &bv::GarsideForm::word)
      .def("__repr__", &bv::GarsideForm::to_string)
      .def("__str__", &bv::GarsideForm::to_string);

  m.def("normal_form", &bv::normal_form);
  m.def("equals", &bv::equals);
  m.def("is_trivial", &bv::is_trivial);
  m.def("permutation_of", &bv::permutation_of);
  m.def("exponent_sum", &bv::exponent_sum);
  m.def("zeta", &bv::zeta, py::arg("n"), py::arg("i"));
  m.def("pure_braid_generator", &bv::pure_braid_generator);
  m.def("half_twist_word", &bv::half_twist_word);
  m.def("linking_numbers", [](const bv::BraidWord& w) {
    bv::StrandPairMatrix lk = bv::linking_numbers(w);
    std::map<std::pair<int, int>, long> out;
    for (int i = 1; i < lk.n(); ++i)
      for (int j = i + 1; j <= lk.n(); ++j) out[{i, j}] = lk.at(i, j);
    return out;
  });

  py::class_<bv::Presentation>(m, "Presentation")
      .def(py::init<std::vector<std::string>, std::vector<std::vector<int>>>(),
           py::arg("generators"), py::arg("relators"))
      .def_static("parse", &bv::Presentation::parse)
      .def_static("load", &bv::Presentation::load)
      .def_readonly("generators", &bv::Presentation::generators)
      .def_readonly("relators", &bv::Presentation::relators)
      .def("with_relator", &bv::Presentation::with_relator)
      .def("serialize", &bv::Presentation::serialize);

  m.def("braid_presentation", &bv::braid_presentation);
  m.def("mcg_sphere_presentation", &bv::mcg_sphere_presentation);
  m.def("coxeter_symmetric_presentation", &bv::coxeter_symmetric_presentation);
  m.def("free_product_three_involutions", &bv::free_product_three_involutions);
  m.def("builtin_presentation", &bv::builtin_presentation);

  py::class_<bv::CosetTable>(m, "CosetTable")
      .def_property_readonly("size", &bv::CosetTable::size)
      .def("act", &bv::CosetTable::act)
      .def("trace", [](const bv::CosetTable& t, int c, std::vector<int> word) {
        return t.trace(c, word);
      });

  m.def("todd_coxeter", &bv::todd_coxeter, py::arg("presentation"),
        py::arg("subgroup_words"), py::arg("max_cosets"));
  m.def(
      "reidemeister_schreier",
      [](const bv::Presentation& p, const bv::CosetTable& t) {
        return bv::reidemeister_schreier(p, t);
      },
      py::arg("presentation"), py::arg("table"));

  py::class_<bv::AbelianGroup>(m, "AbelianGroup")
      .def_readonly("free_rank", &bv::AbelianGroup::free_rank)
      .def_property_readonly("torsion", &torsion_as_longs)
      .def("__eq__",
           [](const bv::AbelianGroup& a, const bv::AbelianGroup& b) {
             return a == b;
           })
      .def("__repr__", &bv::AbelianGroup::to_string)
      .def("__str__", &bv::AbelianGroup::to_string);

  m.def("abelianization", &bv::abelianization);

  py::class_<bv::HomClass>(m, "HomClass")
      .def_property_readonly("images",
                             [](const bv::HomClass& c) {
                               std::vector<std::vector<int>> out;
                               for (const bv::Perm& p : c.representative.entries())
                                 out.push_back(p.images());
                               return out;
                             })
      .def_readonly("orbit_size", &bv::HomClass::orbit_size);

  py::class_<bv::HomClassification>(m, "HomClassification")
      .def_readonly("degree", &bv::HomClassification::degree)
      .def_readonly("classes", &bv::HomClassification::classes)
      .def_readonly("total", &bv::HomClassification::total);

  m.def(
      "enumerate_homs",
      [](const bv::Presentation& p, int degree, bool surjective, bool enable_n6) {
        bv::EnumOptions opt;
        opt.allow_degree_6 = enable_n6;
        return bv::enumerate_homs(p, degree, surjective, opt);
      },
      py::arg("presentation"), py::arg("degree"), py::arg("surjective") = false,
      py::arg("enable_n6") = false);

  m.def("phi_nu_verify", &bv::phi_nu_verify);
  m.def("phi_compose_law", &bv::phi_compose_law);
  m.def("phi_nu_ab_exponent", &bv::phi_nu_ab_exponent);
  m.def("splitting_search", &bv::splitting_search);
  m.def("class_order", &bv::class_order);
  m.def("transgression_cokernel", &bv::transgression_cokernel);
  m.def(
      "gt_commutation_check",
      [](int n, const std::string& f, long lambda, long e) {
        return bv::gt_commutation_check(n, bv::FreePairWord::parse(f), lambda, e);
      },
      py::arg("n"), py::arg("f"), py::arg("lambda_"), py::arg("e"));

  m.def("list_suites", [] {
    std::vector<std::pair<std::string, std::string>> out;
    for (const bv::SuiteInfo& s : bv::list_suites())
      out.emplace_back(s.name, s.description);
    return out;
  });
  m.def(
      "run_suite",
      [](const std::string& name, int n, long dmax, int maxlen,
         std::uint64_t seed, bool enable_n6) {
        bv::SuiteParams params;
        params.n = n;
        params.dmax = dmax;
        params.maxlen = maxlen;
        params.seed = seed;
        params.enable_n6 = enable_n6;
        bv::Report report = bv::run_suite(name, params);
        return py::make_tuple(report.ok(), report.to_json());
      },
      py::arg("name"), py::arg("n") = 0, py::arg("dmax") = 0,
      py::arg("maxlen") = 0, py::arg("seed") = 1729,
      py::arg("enable_n6") = false);
}

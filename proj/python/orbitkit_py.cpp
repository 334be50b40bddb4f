#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "orbitkit/actions.hpp"
#include "orbitkit/commands.hpp"
#include "orbitkit/dynamics.hpp"
#include "orbitkit/gamma.hpp"
#include "orbitkit/pstrict.hpp"
#include "orbitkit/qpartition.hpp"
#include "orbitkit/restriction.hpp"

namespace py = pybind11;
using namespace orbitkit;

namespace {

std::vector<State> to_list(const StateTable& t) {
  std::vector<State> out;
  out.reserve(t.size());
  for (std::size_t i = 0; i < t.size(); ++i) out.push_back(t.state(i));
  return out;
}

std::map<std::size_t, std::size_t> orbit_histogram(const StateTable& set,
                                                   const Action& act,
                                                   unsigned workers) {
  py::gil_scoped_release release;
  return orbit_decomposition(set, act, workers).histogram();
}

}  // namespace

PYBIND11_MODULE(_orbitkit, m) {
  m.doc() = "Promotion on P-strict labelings and rowmotion on Q-partitions.";

  auto error = py::register_exception<Error>(m, "Error");
  py::register_exception<SpecError>(m, "SpecError", error.ptr());
  py::register_exception<CapExceeded>(m, "CapExceeded", error.ptr());
  py::register_exception<InvariantViolation>(m, "InvariantViolation", error.ptr());

  py::class_<Poset>(m, "Poset")
      .def_property_readonly("name", &Poset::name)
      .def("__len__", &Poset::size)
      .def_property_readonly("covers", &Poset::covers)
      .def_property_readonly("coords", &Poset::all_coords)
      .def("less_equal", &Poset::less_equal)
      .def("__repr__", [](const Poset& p) {
        return "<Poset " + p.name() + " with " + std::to_string(p.size()) + " elements>";
      });
  m.def("poset", [](const std::string& spec) { return build_poset(spec); },
        py::arg("spec"));

  py::class_<LabelingSpace>(m, "LabelingSpace")
      .def(py::init([](const Poset& p, int ell, const std::string& restriction) {
             return LabelingSpace(p, ell, parse_restriction(p, restriction));
           }),
           py::arg("poset"), py::arg("ell"), py::arg("restriction"))
      .def_property_readonly("poset", &LabelingSpace::poset)
      .def_property_readonly("ell", &LabelingSpace::ell)
      .def_property_readonly("min_label", &LabelingSpace::min_label)
      .def_property_readonly("max_label", &LabelingSpace::max_label)
      .def("label_sets", [](const LabelingSpace& s) { return s.restriction().sets(); })
      .def("enumerate",
           [](const LabelingSpace& s, std::size_t cap) { return to_list(s.enumerate(cap)); },
           py::arg("cap") = kDefaultCap)
      .def("is_valid", [](const LabelingSpace& s, const State& f) { return s.is_valid(f); })
      .def("minimal", &LabelingSpace::minimal)
      .def("maximal", &LabelingSpace::maximal)
      .def("promotion", [](const LabelingSpace& s, const State& f) {
        if (!s.is_valid(f)) throw SpecError("not a labeling of this space");
        return s.promotion_of(f);
      })
      .def("bender_knuth", [](const LabelingSpace& s, const State& f, int k) {
        if (!s.is_valid(f)) throw SpecError("not a labeling of this space");
        return s.bender_knuth_of(f, k);
      })
      .def("pro_orbit_sizes",
           [](const LabelingSpace& s, std::size_t cap, unsigned workers) {
             const auto set = s.enumerate(cap);
             return orbit_histogram(set, pro_action(s), workers);
           },
           py::arg("cap") = kDefaultCap, py::arg("workers") = 1);

  py::class_<GammaPoset>(m, "GammaPoset")
      .def(py::init([](const LabelingSpace& s) {
             return gamma_poset(s.poset(), s.restriction());
           }),
           py::arg("space"))
      .def_property_readonly("poset", &GammaPoset::poset)
      .def("__len__", &GammaPoset::size)
      .def_property_readonly("labels",
                             [](const GammaPoset& g) {
                               std::vector<std::pair<Element, int>> out;
                               for (const auto& l : g.labels()) out.emplace_back(l.p, l.k);
                               return out;
                             })
      .def("is_column_adjacent", &is_column_adjacent)
      .def("togpro_sequence", [](const GammaPoset& g) { return togpro_sequence(g); });

  py::class_<Bijection>(m, "Bijection")
      .def(py::init<const LabelingSpace&, const GammaPoset&>(), py::arg("space"),
           py::arg("gamma"), py::keep_alive<1, 2>(), py::keep_alive<1, 3>())
      .def("phi", [](const Bijection& b, const State& f) {
        if (!b.space().is_valid(f)) throw SpecError("not a labeling of this space");
        return b.phi(f);
      })
      .def("phi_inverse", [](const Bijection& b, const State& sigma) {
        if (sigma.size() != b.gamma().size()) throw SpecError("wrong partition width");
        return b.phi_inverse(sigma);
      });

  py::class_<PartitionSpace>(m, "PartitionSpace")
      .def(py::init<Poset, int>(), py::arg("poset"), py::arg("ell"))
      .def_property_readonly("poset", &PartitionSpace::poset)
      .def_property_readonly("ell", &PartitionSpace::ell)
      .def("enumerate",
           [](const PartitionSpace& s, std::size_t cap) { return to_list(s.enumerate(cap)); },
           py::arg("cap") = kDefaultCap)
      .def("is_valid", [](const PartitionSpace& s, const State& x) { return s.is_valid(x); })
      .def("toggle_sequence",
           [](const PartitionSpace& s, const State& x, const ToggleSequence& seq) {
             if (!s.is_valid(x)) throw SpecError("not a partition of this space");
             for (Element e : seq)
               if (e >= s.size()) throw SpecError("toggle index out of range");
             return s.applied(x, seq);
           })
      .def("rowmotion",
           [](const PartitionSpace& s, const State& x) {
             if (!s.is_valid(x)) throw SpecError("not a partition of this space");
             return s.applied(x, rowmotion_sequence(s.poset()));
           })
      .def("row_orbit_sizes",
           [](const PartitionSpace& s, std::size_t cap, unsigned workers) {
             const auto set = s.enumerate(cap);
             return orbit_histogram(set, toggle_action(s, rowmotion_sequence(s.poset())),
                                    workers);
           },
           py::arg("cap") = kDefaultCap, py::arg("workers") = 1);

  m.def(
      "run_json",
      [](const std::string& command, const std::string& poset, int ell,
         const std::string& restriction, const std::string& family,
         const std::string& action, const std::vector<std::string>& stats,
         unsigned workers) {
        RunConfig c;
        c.command = command;
        c.poset = poset;
        c.ell = ell;
        c.restriction = restriction;
        c.family = family;
        c.action = action;
        c.stats = stats;
        c.workers = workers;
        const auto r = run_guarded(c);
        return py::make_tuple(r.exit_code, r.report.dump(), r.text);
      },
      py::arg("command"), py::arg("poset") = "", py::arg("ell") = 1,
      py::arg("restriction") = "", py::arg("family") = "", py::arg("action") = "",
      py::arg("stats") = std::vector<std::string>{}, py::arg("workers") = 1);
}

#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "dominotab/chains.hpp"
#include "dominotab/coplactic.hpp"
#include "dominotab/io.hpp"
#include "dominotab/switching.hpp"
#include "dominotab/verify.hpp"

namespace py = pybind11;
using namespace dominotab;

namespace {

const char* orient_name(Orientation o) { return o == Orientation::horizontal ? "h" : "v"; }

Orientation orient_of(const std::string& s) {
  if (s == "h") return Orientation::horizontal;
  if (s == "v") return Orientation::vertical;
  throw py::value_error("orient must be 'h' or 'v', got '" + s + "'");
}

py::tuple domino_tuple(const PlacedDomino& p) {
  return py::make_tuple(p.d.anchor.row, p.d.anchor.col, orient_name(p.d.orient), p.entry);
}

py::list domino_list(const std::vector<PlacedDomino>& ds) {
  py::list out;
  for (auto& p : ds) out.append(domino_tuple(p));
  return out;
}

PlacedDomino domino_of(const py::handle& h) {
  auto t = h.cast<py::tuple>();
  if (t.size() != 4) throw py::value_error("a domino is (row, col, orient, entry)");
  return {{{t[0].cast<int>(), t[1].cast<int>()}, orient_of(t[2].cast<std::string>())}, t[3].cast<int>()};
}

py::object tableau_object(const Tableau& t) {
  if (auto* y = std::get_if<YoungTableau>(&t)) return py::cast(*y);
  return py::cast(std::get<AnnotatedDomino>(t).tableau);
}

py::dict chain_dict(const Chain& c) {
  py::dict d;
  d["kind"] = c.kind == ChainKind::open ? "open" : "closed";
  d["dominoes"] = domino_list(c.dominoes);
  d["replacement"] = domino_list(c.replacement);
  return d;
}

py::dict report_dict(const CheckReport& r) {
  py::dict d;
  d["id"] = r.id;
  d["passed"] = r.passed;
  d["cases"] = r.cases;
  d["counterexample"] = r.counterexample;
  d["seconds"] = r.seconds;
  return d;
}

}  // namespace

PYBIND11_MODULE(dominotab, m) {
  m.doc() = "Domino tableaux: switching, coplactic operations and chains";

  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
  py::register_exception<RouteMismatch>(m, "RouteMismatch", PyExc_RuntimeError);

  py::class_<Partition>(m, "Partition")
      .def(py::init<>())
      .def(py::init<std::vector<int>>())
      .def(py::init([](const std::string& s) { return parse_partition(s); }))
      .def_property_readonly("parts", &Partition::parts)
      .def("row", &Partition::row)
      .def("size", &Partition::size)
      .def("transpose", &Partition::transpose)
      .def("__len__", &Partition::length)
      .def(py::self == py::self)
      .def("__hash__", [](const Partition& p) { return py::hash(py::tuple(py::cast(p.parts()))); })
      .def("__repr__", [](const Partition& p) { return "Partition(" + to_string(p) + ")"; });
  py::implicitly_convertible<py::list, Partition>();
  py::implicitly_convertible<py::tuple, Partition>();

  py::class_<SkewShape>(m, "SkewShape")
      .def(py::init<>())
      .def(py::init<Partition, Partition>(), py::arg("outer"), py::arg("inner") = Partition())
      .def(py::init([](const std::string& s) { return parse_shape(s); }))
      .def(py::init([](const std::vector<int>& outer) { return SkewShape(Partition(outer)); }))
      .def_readonly("outer", &SkewShape::outer)
      .def_readonly("inner", &SkewShape::inner)
      .def("size", &SkewShape::size)
      .def(py::self == py::self)
      .def("__str__", &format_shape)
      .def("__repr__", [](const SkewShape& s) { return "SkewShape('" + format_shape(s) + "')"; });
  py::implicitly_convertible<py::str, SkewShape>();
  py::implicitly_convertible<py::list, SkewShape>();
  py::implicitly_convertible<Partition, SkewShape>();

  py::class_<YoungTableau>(m, "YoungTableau")
      .def(py::init<SkewShape, std::vector<std::vector<int>>>(), py::arg("shape"), py::arg("rows"))
      .def_readonly("shape", &YoungTableau::shape)
      .def_readonly("rows", &YoungTableau::rows)
      .def("weight", &YoungTableau::weight)
      .def("is_semistandard", [](const YoungTableau& t) { return is_semistandard(t); })
      .def("to_json", [](const YoungTableau& t, int offset) { return to_json(t, offset); },
           py::arg("offset") = 0)
      .def("to_ascii", [](const YoungTableau& t, int offset) { return to_ascii(t, offset); },
           py::arg("offset") = 0)
      .def(py::self == py::self)
      .def("__repr__", [](const YoungTableau& t) { return "YoungTableau(" + to_string(t) + ")"; });

  // dominoes are (row, col, orient, entry) with orient "h" or "v"
  py::class_<DominoTableau>(m, "DominoTableau")
      .def(py::init([](SkewShape s, const py::iterable& ds) {
             std::vector<PlacedDomino> v;
             for (auto h : ds) v.push_back(domino_of(h));
             DominoTableau t(std::move(s), std::move(v));
             if (auto err = validate_ssdt(t)) throw py::value_error(err->message);
             return t;
           }),
           py::arg("shape"), py::arg("dominoes"))
      .def_readonly("shape", &DominoTableau::shape)
      .def_property_readonly("dominoes", [](const DominoTableau& t) { return domino_list(t.dominoes); })
      .def("weight", &DominoTableau::weight)
      .def("twospin", [](const DominoTableau& t) { return twospin(t); })
      .def("is_yamanouchi", [](const DominoTableau& t) { return is_yamanouchi_dom(t); })
      .def("to_json",
           [](const DominoTableau& t, int offset, const std::vector<int>& ords) { return to_json(t, offset, ords); },
           py::arg("offset") = 0, py::arg("ordinates") = std::vector<int>{})
      .def("to_ascii",
           [](const DominoTableau& t, int offset, const std::vector<int>& ords) { return to_ascii(t, offset, ords); },
           py::arg("offset") = 0, py::arg("ordinates") = std::vector<int>{})
      .def("__len__", &DominoTableau::size)
      .def(py::self == py::self)
      .def("__repr__", [](const DominoTableau& t) { return "DominoTableau(" + to_string(t) + ")"; });

  m.def("parse", [](const std::string& text, int offset) { return tableau_object(parse_tableau(text, offset)); },
        py::arg("text"), py::arg("offset") = 0, "A tableau from JSON or ASCII text.");
  m.def("parse_all", [](const std::string& text, int offset) {
        py::list out;
        for (auto& t : parse_tableaux(text, offset)) out.append(tableau_object(t));
        return out;
      }, py::arg("text"), py::arg("offset") = 0);

  // shapes
  m.def("core", &core_gamma);
  m.def("two_quotient", [](const Partition& p) {
    auto q = two_quotient(p);
    return py::make_tuple(q.core, q.q0, q.q1);
  });
  m.def("cq2_shape", &cq2_shape);
  m.def("dublpart", py::overload_cast<const Partition&>(&dublpart));
  m.def("epsilon2", &epsilon2);

  // enumeration
  m.def("enumerate_ssdt",
        [](const SkewShape& s, int entries, std::optional<Weight> weight, bool yamanouchi) {
          return weight ? enumerate_ssdt_weight(s, *weight, yamanouchi) : enumerate_ssdt(s, entries, yamanouchi);
        },
        py::arg("shape"), py::arg("entries") = 3, py::arg("weight") = py::none(),
        py::arg("yamanouchi") = false);
  m.def("enumerate_sst",
        [](const SkewShape& s, int entries, std::optional<Weight> weight) {
          return weight ? enumerate_sst_weight(s, *weight) : enumerate_sst(s, entries);
        },
        py::arg("shape"), py::arg("entries") = 3, py::arg("weight") = py::none());

  // switching
  m.def("pi", &pi);
  m.def("pi1", [](const DominoTableau& d) { return pi1(d); });
  m.def("pi1_inv", &pi1_inv);
  m.def("switch_pair", &switch_pair);
  m.def("is_self_switching", py::overload_cast<const YoungTableau&, const YoungTableau&>(&is_self_switching));

  // coplactic operations; None where undefined
  m.def("e", [](int i, const DominoTableau& d) { return coplactic_dom(Coplactic::e, i, d); });
  m.def("f", [](int i, const DominoTableau& d) { return coplactic_dom(Coplactic::f, i, d); });
  m.def("e_young", [](int i, const YoungTableau& t) { return coplactic_young(Coplactic::e, i, t); });
  m.def("f_young", [](int i, const YoungTableau& t) { return coplactic_young(Coplactic::f, i, t); });
  m.def("raise_to_yamanouchi", [](const DominoTableau& d) {
    auto r = raise_to_yamanouchi(d);
    return py::make_tuple(r.yamanouchi, r.word);
  });
  m.def("cl_split", &cl_split);
  m.def("cl_merge", &cl_merge);

  // chains
  m.def("chains", [](int r, const DominoTableau& d) {
    py::list out;
    for (auto& c : chains(r, d).chains) out.append(chain_dict(c));
    return out;
  });
  m.def("move_chains", [](const DominoTableau& d, int r, const std::vector<std::size_t>& which) {
        auto all = chains(r, d).chains;
        std::vector<Chain> subset;
        for (auto k : which) {
          if (k >= all.size()) throw py::index_error("no chain " + std::to_string(k));
          subset.push_back(all[k]);
        }
        return move_chains(d, r, subset);
      }, py::arg("d"), py::arg("r"), py::arg("which"), "Moves the chains with the given indices into chains(r, d).");
  m.def("s_reflect", &s_reflect_tab);
  m.def("moc", &moc);
  m.def("cq2_tab", &cq2_tab);
  m.def("cq2_tab_inv", &cq2_tab_inv);
  m.def("phi", &phi, py::arg("c"), py::arg("t0"), py::arg("t1"), py::arg("primed") = false,
        py::arg("start") = py::none());
  m.def("x_dom", &x_dom, py::arg("t0"), py::arg("t1"), py::arg("start") = py::none());
  m.def("is_lr", &is_lr);
  m.def("yamyam", &yamyam_fwd, py::arg("l"), py::arg("psi"));
  m.def("yamyam_inv", &yamyam_bwd, py::arg("m"), py::arg("chi"));

  // numbers and checks
  m.def("lr_coefficient", &lr_coefficient, py::arg("lam"), py::arg("lam1"), py::arg("nu"), py::arg("c") = 0);
  m.def("phi2_bracket", &phi2_bracket);
  m.def("signed_doubled_count", &signed_doubled_count);
  m.def("checks", [] {
    py::list out;
    for (auto& c : checks()) {
      py::dict d;
      d["id"] = c.id;
      d["summary"] = c.summary;
      d["size"] = c.default_size;
      d["entries"] = c.default_entries;
      out.append(d);
    }
    return out;
  });
  m.def("verify",
        [](const std::string& id, std::optional<int> size, std::optional<int> entries) {
          CheckReport r;
          {
            py::gil_scoped_release unlocked;
            r = verify(id, Bounds{size, entries});
          }
          return report_dict(r);
        },
        py::arg("id"), py::arg("size") = py::none(), py::arg("entries") = py::none());
}

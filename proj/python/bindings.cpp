#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "omegatrans/constructions.hpp"
#include "omegatrans/fo.hpp"
#include "omegatrans/io.hpp"

namespace py = pybind11;
using namespace omt;

namespace {

struct PyOutcome {
  std::string verdict;
  std::string output;  // padding letters rendered as ⊥
  std::string note;
};

PyOutcome to_py(const Outcome& o) { return {verdict_name(o.verdict), render_output(o.out), o.note}; }

// Holder so that pybind11 does not unpack the variant into its alternatives.
struct PyMachine {
  Machine m;
};

AperiodicReport aperiodic(const Machine& m, std::size_t cap) {
  if (auto* a = std::get_if<Dma>(&m)) return is_aperiodic(*a, cap);
  if (auto* s = std::get_if<Sst>(&m)) return is_aperiodic_sst(*s, cap);
  if (auto* t = std::get_if<TwoWst>(&m)) return is_aperiodic_2wst(*t, cap);
  throw Error("usage", std::string("no monoid for ") + kind_name(m) + " machines");
}

}  // namespace

PYBIND11_MODULE(_omegatrans, m) {
  m.doc() = "Transducers over ultimately periodic words";

  py::register_exception<Error>(m, "OmegaTransError", PyExc_ValueError);

  py::class_<UPWord>(m, "Word")
      .def(py::init(&UPWord::parse), py::arg("text"))
      .def(py::init<std::string, std::string>(), py::arg("prefix"), py::arg("period"))
      .def_property_readonly("prefix", &UPWord::prefix)
      .def_property_readonly("period", &UPWord::period)
      .def("at", &UPWord::at, py::arg("i"))
      .def("take", &UPWord::take, py::arg("n"))
      .def("__str__", &UPWord::str)
      .def("__repr__", [](const UPWord& w) { return "Word('" + w.str() + "')"; })
      .def("__eq__", &UPWord::operator==)
      .def("__hash__", [](const UPWord& w) { return py::hash(py::str(w.str())); });

  py::class_<PyOutcome>(m, "Outcome")
      .def_readonly("verdict", &PyOutcome::verdict)
      .def_readonly("output", &PyOutcome::output)
      .def_readonly("note", &PyOutcome::note)
      .def_property_readonly("accepted", [](const PyOutcome& o) { return o.verdict == "accepted"; })
      .def("__repr__", [](const PyOutcome& o) { return "Outcome(" + o.verdict + ", '" + o.output + "')"; });

  py::class_<AperiodicReport>(m, "AperiodicReport")
      .def_readonly("aperiodic", &AperiodicReport::aperiodic)
      .def_readonly("monoid_size", &AperiodicReport::monoid_size)
      .def_readonly("witness", &AperiodicReport::witness)
      .def_readonly("period", &AperiodicReport::period);

  py::class_<BoundedReport>(m, "BoundedReport")
      .def_readonly("bounded", &BoundedReport::bounded)
      .def_readonly("monoid_size", &BoundedReport::monoid_size)
      .def_readonly("witness", &BoundedReport::witness);

  py::class_<PyMachine>(m, "Machine")
      .def_property_readonly("kind", [](const PyMachine& x) { return std::string(kind_name(x.m)); })
      .def("__str__", [](const PyMachine& x) { return print_machine(x.m); })
      .def(
          "run",
          [](const PyMachine& x, const std::string& word, std::size_t k) {
            if (auto* a = std::get_if<Dma>(&x.m))
              return PyOutcome{a->accepts(UPWord::parse(word)) ? "accepted" : "rejected", "", ""};
            return to_py(runner_for(x.m)(UPWord::parse(word), k));
          },
          py::arg("word"), py::arg("k") = 20)
      .def(
          "is_aperiodic", [](const PyMachine& x, std::size_t cap) { return aperiodic(x.m, cap); },
          py::arg("cap") = 1000000)
      .def(
          "is_1_bounded",
          [](const PyMachine& x, std::size_t cap) {
            auto* s = std::get_if<Sst>(&x.m);
            if (!s) throw Error("usage", "1-boundedness is defined for SSTs");
            return is_1_bounded(*s, cap);
          },
          py::arg("cap") = 1000000)
      .def(
          "output_graph",
          [](const PyMachine& x, const std::string& word, std::size_t horizon) {
            auto* s = std::get_if<Sst>(&x.m);
            if (!s) throw Error("usage", "output graphs are drawn for SSTs");
            return to_dot(build_output_graph(*s, UPWord::parse(word), horizon));
          },
          py::arg("word"), py::arg("horizon") = 6);

  m.def("parse_machine", [](const std::string& text) { return PyMachine{parse_machine(text)}; },
        py::arg("text"));
  m.def("load_machine", [](const std::string& path) { return PyMachine{load_machine(path)}; },
        py::arg("path"));
  m.def("read_corpus", &read_corpus, py::arg("path"));

  m.def(
      "compile_2wst_to_sst",
      [](const PyMachine& x) {
        auto* t = std::get_if<TwoWst>(&x.m);
        if (!t) throw Error("usage", "expects a 2wst machine");
        return PyMachine{twowst_to_sst_sf(*t)};
      },
      py::arg("machine"));
  m.def(
      "eliminate_lookaround",
      [](const PyMachine& x) {
        auto* s = std::get_if<SstSf>(&x.m);
        if (!s) throw Error("usage", "expects an sstsf machine");
        return PyMachine{eliminate_lookaround(*s).sst};
      },
      py::arg("machine"));

  m.def(
      "compare",
      [](const PyMachine& a, const PyMachine& b, const std::vector<UPWord>& corpus, std::size_t k) {
        auto rep = compare_outputs(runner_for(a.m), runner_for(b.m), corpus, k);
        py::list rows;
        for (auto& r : rep.rows) {
          py::dict d;
          d["word"] = r.word.str();
          d["verdict"] = r.verdict;
          d["divergence"] = r.divergence ? py::cast(*r.divergence) : py::none();
          d["detail"] = r.detail;
          rows.append(d);
        }
        return rows;
      },
      py::arg("a"), py::arg("b"), py::arg("corpus"), py::arg("k") = 20);

  m.def(
      "eval_formula",
      [](const std::string& formula, const std::string& word, const fo::Assignment& assign,
         int base_bound, int doublings) {
        return fo::eval(fo::parse(formula), UPWord::parse(word), assign, {base_bound, doublings});
      },
      py::arg("formula"), py::arg("word"), py::arg("assign") = fo::Assignment{}, py::arg("base_bound") = 4,
      py::arg("doublings") = 2);
}

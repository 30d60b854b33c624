#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "csm/boolean_sim.hpp"
#include "csm/catalog.hpp"
#include "csm/circuit.hpp"
#include "csm/membership.hpp"
#include "csm/power_basis.hpp"
#include "csm/properties.hpp"
#include "csm/reductions.hpp"
#include "csm/semigroup.hpp"
#include "csm/slp.hpp"
#include "csm/squaring_dp.hpp"
#include "csm/variety_join.hpp"

namespace py = pybind11;
using namespace csm;

namespace {

Semigroup from_rows(std::vector<std::vector<Element>> const& rows) {
  std::vector<Element> flat;
  for (auto const& r : rows) {
    if (r.size() != rows.size()) {
      throw Error(ErrorKind::malformed_input, "table must be square");
    }
    flat.insert(flat.end(), r.begin(), r.end());
  }
  return Semigroup(rows.size(), std::move(flat));
}

std::vector<std::vector<Element>> to_rows(Semigroup const& s) {
  std::vector<std::vector<Element>> rows;
  for (Element a = 0; a < s.order(); ++a) {
    auto r = s.row(a);
    rows.emplace_back(r.begin(), r.end());
  }
  return rows;
}

py::dict assigned(AssignedCircuit const& c) {
  py::dict d;
  d["circuit"]    = format_circuit(c.circuit);
  d["size"]       = c.circuit.size();
  d["assignment"] = c.assignment;
  return d;
}

Digraph make_graph(std::size_t n, std::vector<std::pair<std::size_t, std::size_t>> const& edges) {
  Digraph g(n);
  for (auto [u, v] : edges) {
    g.add_edge(u, v);
  }
  return g;
}

py::tuple instance_tuple(MembershipInstance const& inst) {
  return py::make_tuple(inst.semigroup, inst.generators, inst.target);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Cayley semigroup membership";

  static py::exception<Error> csm_error(m, "CsmError", PyExc_ValueError);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (Error const& e) {
      py::object err = py::handle(csm_error.ptr())(e.what());
      err.attr("kind") = std::string(to_string(e.kind()));
      PyErr_SetObject(csm_error.ptr(), err.ptr());
    }
  });

  py::class_<Semigroup>(m, "Semigroup")
      .def(py::init(&from_rows), py::arg("table"))
      .def_static("parse", [](std::string const& text) { return parse_semigroup(text); })
      .def("format", &format_semigroup)
      .def_property_readonly("order", &Semigroup::order)
      .def("product", &Semigroup::product)
      .def("table", &to_rows)
      .def("__len__", &Semigroup::order)
      .def("__eq__", [](Semigroup const& a, Semigroup const& b) { return a == b; })
      .def("__repr__", [](Semigroup const& s) {
        return "<Semigroup of order " + std::to_string(s.order()) + ">";
      });

  m.def("cyclic_group", &catalog::cyclic_group);
  m.def("null_semigroup", &catalog::null_semigroup);
  m.def("truncated_addition", &catalog::truncated_addition);
  m.def("left_zero", &catalog::left_zero);
  m.def("symmetric_group", &catalog::symmetric_group);
  m.def("direct_product", &direct_product);

  m.def("classify", [](Semigroup const& s) {
    auto const c = classify(s);
    py::dict d;
    d["commutative"] = c.commutative;
    d["group"]       = c.group;
    d["zero"]        = c.zero;
    d["idempotents"] = c.idempotents;
    d["nilpotent"]   = c.nilpotent;
    d["zero_simple"] = c.zero_simple;
    return d;
  });

  m.def("closure", [](Semigroup const& s, std::vector<Element> const& xs) {
    return closure(s, xs).sorted_elements();
  });
  m.def(
      "is_member",
      [](Semigroup const& s, std::vector<Element> const& xs, Element t) {
        auto const r = is_member(make_instance(s, xs, t));
        py::object circuit = py::none();
        if (r.member) {
          circuit = assigned(derivation_circuit(*r.witness));
        }
        return py::make_tuple(r.member, circuit);
      },
      py::arg("semigroup"), py::arg("generators"), py::arg("target"));

  m.def("power_circuit", [](std::uint64_t e) { return format_circuit(power_circuit(e)); });
  m.def("evaluate_circuit",
        [](std::string const& text, Semigroup const& s, std::vector<Element> const& in) {
          return evaluate(parse_circuit(text), s, in);
        });
  m.def("ordering_width",
        [](std::string const& text) { return ordering_width(parse_circuit(text)); });

  m.def("power_basis", [](Semigroup const& s, std::vector<Element> const& xs, Element y) {
    std::vector<std::pair<Element, std::uint64_t>> out;
    for (auto const& f : power_basis_decomposition(s, xs, y).factors) {
      out.emplace_back(f.generator, f.exponent);
    }
    return out;
  });
  m.def("commutative_circuit", [](Semigroup const& s, std::vector<Element> const& xs, Element y) {
    return assigned(commutative_circuit(s, xs, y));
  });

  m.def("compile_slp", [](Semigroup const& g, std::vector<Element> const& xs, Element t) {
    auto const r = slp_reachability(g, xs, t);
    py::dict d;
    d["slp"]     = format_slp(r.program);
    d["length"]  = r.program.length();
    d["rounds"]  = r.rounds;
    d["circuit"] = assigned(slp_to_circuit(r.program, g.order()));
    return d;
  });

  m.def(
      "squaring_check",
      [](Semigroup const& s, std::vector<Element> const& xs, Element t, std::size_t width,
         std::uint64_t bound) {
        if (bound == 0) bound = default_size_bound(s.order());
        return dp_membership(s, xs, t, width, bound).member;
      },
      py::arg("semigroup"), py::arg("generators"), py::arg("target"), py::arg("width") = 2,
      py::arg("size_bound") = 0);

  m.def(
      "exhaustive_check",
      [](Semigroup const& s, std::vector<Element> const& xs, Element t, std::size_t max_size) {
        auto const r = exhaustive_membership(s, xs, t, max_size);
        py::object circuit = py::none();
        if (r.member) circuit = assigned(*r.witness);
        return py::make_tuple(r.member, circuit);
      },
      py::arg("semigroup"), py::arg("generators"), py::arg("target"), py::arg("max_size") = 6);

  m.def("to_boolean", [](std::string const& circuit, std::size_t order) {
    return format_netlist(compile_to_boolean(parse_circuit(circuit), order));
  });
  m.def("eval_boolean",
        [](std::string const& netlist, Semigroup const& s, std::vector<Element> const& in) {
          auto const out = evaluate_netlist(parse_netlist(netlist), encode_input(s, in));
          return decode_element(out, 0, out.size());
        });

  m.def("reduce_zero_simple",
        [](std::size_t n, std::vector<std::pair<std::size_t, std::size_t>> const& edges,
           std::size_t s, std::size_t t) {
          return instance_tuple(reduce_stconn_zero_simple(make_graph(n, edges), s, t));
        });
  m.def("reduce_nilpotent",
        [](std::size_t n, std::vector<std::pair<std::size_t, std::size_t>> const& edges,
           std::size_t s, std::size_t t) {
          return instance_tuple(reduce_stconn_nilpotent(make_graph(n, edges), s, t));
        });

  m.def("nilpotency_degree", &nilpotency_degree);
  m.def(
      "decompose",
      [](Semigroup const& s, std::size_t max_words, std::size_t max_group) {
        auto const w     = build_join_witness(s, JoinCaps{max_words, max_group});
        auto const check = verify_quotient(w, s);
        py::dict d;
        d["degree"]   = w.degree;
        d["words"]    = w.words.size();
        d["group"]    = w.group.order();
        d["members"]  = w.members;
        d["phi"]      = w.phi;
        d["verified"] = check.ok;
        d["message"]  = check.message;
        return d;
      },
      py::arg("semigroup"), py::arg("max_words") = 10, py::arg("max_group") = 20000);
}

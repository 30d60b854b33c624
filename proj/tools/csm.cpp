// csm: command-line front end for the Cayley semigroup membership toolkit.
//
// Exit codes: 0 when the query is answered true or a verification passes,
// 1 when it is answered false or fails, 2 on usage or input errors.

#include <CLI11.hpp>

#include <algorithm>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "csm/boolean_sim.hpp"
#include "csm/circuit.hpp"
#include "csm/membership.hpp"
#include "csm/power_basis.hpp"
#include "csm/properties.hpp"
#include "csm/reductions.hpp"
#include "csm/selftest.hpp"
#include "csm/slp.hpp"
#include "csm/squaring_dp.hpp"
#include "csm/variety_join.hpp"
#include "text_io.hpp"

namespace {

using namespace csm;

constexpr int exit_true  = 0;
constexpr int exit_false = 1;

std::string join(std::vector<Element> const& xs) {
  std::ostringstream os;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    os << (i ? " " : "") << xs[i];
  }
  return os.str();
}

void emit(std::string const& path, std::string const& text) {
  if (path == "-") {
    std::cout << text;
  } else {
    detail::write_file(path, text);
  }
}

struct CheckOptions {
  std::string   algo = "bfs";
  std::string   instance;
  std::size_t   width = 2;
  std::uint64_t size_bound = 0;  // 0: default for the order
  std::size_t   max_size = 6;
  std::uint64_t budget = default_search_budget;
  std::string   witness;
};

int run_check(CheckOptions const& o) {
  auto const inst = parse_instance(detail::read_file(o.instance));
  auto const& s   = inst.semigroup;
  std::cout << "algorithm: " << o.algo << '\n';
  bool member = false;
  if (o.algo == "bfs") {
    auto r = is_member(inst);
    member = r.member;
    if (member) {
      auto c = derivation_circuit(*r.witness);
      std::cout << "witness_size: " << c.circuit.size() << '\n';
      if (!o.witness.empty()) {
        emit(o.witness, format_circuit(c.circuit));
        std::cout << "witness_inputs: " << join(c.assignment) << '\n';
      }
    }
  } else if (o.algo == "power-basis") {
    if (!is_commutative(s)) {
      throw Error(ErrorKind::not_commutative,
                  "power-basis requires a commutative semigroup");
    }
    try {
      auto p = power_basis_decomposition(s, inst.generators, inst.target);
      auto c = commutative_circuit(s, inst.generators, inst.target);
      member = true;
      std::cout << "factors:";
      for (auto const& f : p.factors) {
        std::cout << ' ' << f.generator << '^' << f.exponent;
      }
      std::cout << "\ncircuit_size: " << c.circuit.size()
                << "\nordering_width: " << ordering_width(c.circuit) << '\n';
      if (!o.witness.empty()) {
        emit(o.witness, format_circuit(c.circuit));
        std::cout << "witness_inputs: " << join(c.assignment) << '\n';
      }
    } catch (Error const& e) {
      if (e.kind() != ErrorKind::target_not_generated) {
        throw;
      }
    }
  } else if (o.algo == "slp") {
    try {
      auto r = slp_reachability(s, inst.generators, inst.target);
      auto c = slp_to_circuit(r.program, s.order());
      member = true;
      std::cout << "slp_length: " << r.program.length()
                << "\nrounds: " << r.rounds
                << "\nbound_slack: " << (r.bound_slack ? "yes" : "no")
                << "\ncircuit_size: " << c.circuit.size() << '\n';
      if (!o.witness.empty()) {
        emit(o.witness, format_slp(r.program));
      }
    } catch (Error const& e) {
      if (e.kind() != ErrorKind::target_not_generated) {
        throw;
      }
    }
  } else if (o.algo == "squaring") {
    if (!is_commutative(s)) {
      throw Error(ErrorKind::not_commutative,
                  "squaring is only guaranteed for commutative semigroups");
    }
    std::uint64_t const bound
        = o.size_bound ? o.size_bound : default_size_bound(s.order());
    auto r = dp_membership(s, inst.generators, inst.target, o.width, bound);
    member = r.member;
    std::cout << "width: " << o.width << "\nsize_bound: " << bound
              << "\ndp_levels: " << r.levels
              << "\nfixpoint: " << (r.fixpoint_reached ? "yes" : "no") << '\n';
  } else if (o.algo == "exhaustive") {
    auto r = exhaustive_membership(s, inst.generators, inst.target, o.max_size,
                                   o.budget);
    member = r.member;
    std::cout << "max_size: " << o.max_size
              << "\nevaluations: " << r.evaluations << '\n';
    if (member) {
      std::cout << "witness_size: " << r.witness->circuit.size() << '\n';
      if (!o.witness.empty()) {
        emit(o.witness, format_circuit(r.witness->circuit));
        std::cout << "witness_inputs: " << join(r.witness->assignment) << '\n';
      }
    }
  }
  std::cout << "member: " << (member ? "true" : "false") << '\n';
  return member ? exit_true : exit_false;
}

int run_classify(std::string const& path) {
  auto const s = parse_semigroup(detail::read_file(path));
  auto const c = classify(s);
  std::cout << "order: " << s.order()
            << "\ncommutative: " << (c.commutative ? "true" : "false")
            << "\ngroup: " << (c.group ? "true" : "false") << "\nzero: ";
  if (c.zero) {
    std::cout << *c.zero;
  } else {
    std::cout << "none";
  }
  std::cout << "\nidempotents: " << join(c.idempotents)
            << "\nnilpotent: " << (c.nilpotent ? "true" : "false")
            << "\nzero_simple: " << (c.zero_simple ? "true" : "false") << '\n';
  return exit_true;
}

int run_reduce(std::string const& kind, std::string const& graph_path,
               std::size_t s, std::size_t t, std::string const& out) {
  auto const g = parse_graph(detail::read_file(graph_path));
  MembershipInstance inst = [&] {
    if (kind == "zero-simple") {
      ZeroSimpleReduction r(g);
      detail::write_file(out + ".map", r.element_map());
      return r.instance(s, t);
    }
    NilpotentReduction r(g);
    detail::write_file(out + ".map", r.element_map());
    return r.instance(s, t);
  }();
  detail::write_file(out, format_instance(inst));
  std::cout << "order: " << inst.semigroup.order()
            << "\ngenerators: " << inst.generators.size()
            << "\ntarget: " << inst.target << "\ninstance: " << out
            << "\nmap: " << out << ".map\n";
  return exit_true;
}

std::vector<Element> parse_elements(std::string const& list) {
  std::vector<Element> out;
  std::string          token;
  std::istringstream   in(list);
  while (std::getline(in, token, ',')) {
    std::istringstream words(token);
    std::string        w;
    while (words >> w) {
      out.push_back(static_cast<Element>(detail::parse_unsigned(w, "element")));
    }
  }
  return out;
}

int run_compile_slp(std::string const& table, std::string const& gens,
                    Element target, std::string const& slp_out,
                    std::string const& circuit_out) {
  auto const g  = parse_semigroup(detail::read_file(table));
  auto const xs = parse_elements(gens);
  auto const r  = slp_reachability(g, xs, target);
  auto const c  = slp_to_circuit(r.program, g.order());
  if (!slp_out.empty()) {
    emit(slp_out, format_slp(r.program));
  }
  if (!circuit_out.empty()) {
    emit(circuit_out, format_circuit(c.circuit));
  }
  std::cout << "slp_length: " << r.program.length()
            << "\nrounds: " << r.rounds
            << "\nbound_slack: " << (r.bound_slack ? "yes" : "no")
            << "\ncircuit_size: " << c.circuit.size()
            << "\ncircuit_inputs: " << join(c.assignment) << '\n';
  return exit_true;
}

int run_power_circuit(std::uint64_t e, std::string const& out) {
  auto const c = power_circuit(e);
  if (out.empty() || out == "-") {
    std::cout << format_circuit(c);
  } else {
    detail::write_file(out, format_circuit(c));
    std::cout << "size: " << c.size() << '\n';
  }
  return exit_true;
}

int run_to_boolean(std::string const& circuit, std::size_t order,
                   std::string const& out, std::uint64_t budget) {
  auto const c   = parse_circuit(detail::read_file(circuit));
  auto const net = compile_to_boolean(c, order, budget);
  if (out.empty() || out == "-") {
    std::cout << format_netlist(net);
  } else {
    detail::write_file(out, format_netlist(net));
    std::cout << "input_bits: " << net.input_bits
              << "\nand_gates: " << net.and_gates.size()
              << "\nor_gates: " << net.or_gates.size() << '\n';
  }
  return exit_true;
}

std::vector<bool> parse_bits(std::string const& text) {
  std::vector<bool> bits;
  for (char ch : text) {
    if (ch == '0' || ch == '1') {
      bits.push_back(ch == '1');
    } else if (ch != ' ' && ch != '\n' && ch != '\r' && ch != '\t') {
      throw Error(ErrorKind::malformed_input,
                  std::string("bit strings use 0 and 1, found '") + ch + "'");
    }
  }
  return bits;
}

int run_eval_boolean(std::string const& netlist, std::string const& bits) {
  auto const net = parse_netlist(detail::read_file(netlist));
  auto const in  = parse_bits(bits);
  auto const out = evaluate_netlist(net, in);
  std::cout << "output_bits: ";
  for (bool b : out) {
    std::cout << (b ? '1' : '0');
  }
  std::cout << "\nvalue: " << decode_element(out, 0, out.size())
            << "\nfiring_and_gates: " << firing_and_gates(net, in) << '\n';
  return exit_true;
}

int run_encode(std::string const& table, std::string const& inputs) {
  auto const s    = parse_semigroup(detail::read_file(table));
  auto const bits = encode_input(s, parse_elements(inputs));
  for (bool b : bits) {
    std::cout << (b ? '1' : '0');
  }
  std::cout << '\n';
  return exit_true;
}

int run_decompose(std::string const& table, JoinCaps caps) {
  auto const s     = parse_semigroup(detail::read_file(table));
  auto const w     = build_join_witness(s, caps);
  auto const check = verify_quotient(w, s);
  std::cout << "e: " << w.degree << "\nQ: " << w.words.size()
            << "\nG: " << w.group.order() << "\nU: " << w.members.size()
            << "\nverdict: " << (check.ok ? "pass" : "fail") << '\n';
  if (!check.ok) {
    std::cout << "reason: " << check.message << '\n';
  }
  return check.ok ? exit_true : exit_false;
}

int run_selftest(std::uint64_t seed, std::vector<int> const& ids) {
  bool all = true;
  selftest::run(ids, seed, [&](selftest::CriterionResult const& r) {
    std::cout << selftest::format_result(r) << std::endl;
    all = all && r.passed;
  });
  return all ? exit_true : exit_false;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Cayley semigroup membership toolkit"};
  app.require_subcommand(1);
  int code = 2;

  CheckOptions check;
  auto* c = app.add_subcommand("check", "Decide t in <X> for an instance file");
  c->add_option("--algo", check.algo, "bfs | power-basis | slp | squaring | exhaustive")
      ->check(CLI::IsMember({"bfs", "power-basis", "slp", "squaring", "exhaustive"}));
  c->add_option("instance", check.instance, "Instance file")->required();
  c->add_option("-w,--width", check.width, "Squaring width")->check(CLI::Range(1, 3));
  c->add_option("-s,--size-bound", check.size_bound,
                "Squaring size bound (default ceil(5 (log2 N + 1)^2))");
  c->add_option("--max-size", check.max_size, "Exhaustive circuit size limit");
  c->add_option("--budget", check.budget, "Exhaustive evaluation budget");
  c->add_option("--witness", check.witness,
                "Write the witness (circuit, or SLP for slp) here; '-' for stdout");
  c->callback([&] { code = run_check(check); });

  std::string table;
  auto* cl = app.add_subcommand("classify", "Report algebraic properties of a table");
  cl->add_option("table", table, "Table file")->required();
  cl->callback([&] { code = run_classify(table); });

  std::string kind, graph, out;
  std::size_t s = 0, t = 0;
  auto* r = app.add_subcommand(
      "reduce",
      "Build the membership instance for s-t reachability. Writes the "
      "instance to OUT and OUT.map, whose lines read 'index -> (v,w)' "
      "(zero-simple) or 'index -> (v,i,w)' (nilpotent), and 'index -> 0' "
      "for the zero");
  r->add_option("kind", kind, "zero-simple | nilpotent")
      ->required()
      ->check(CLI::IsMember({"zero-simple", "nilpotent"}));
  r->add_option("graph", graph, "Graph file: 'n m' then m lines 'u v'")->required();
  r->add_option("s", s, "Source vertex")->required();
  r->add_option("t", t, "Target vertex")->required();
  r->add_option("out", out, "Instance output path")->required();
  r->callback([&] { code = run_reduce(kind, graph, s, t, out); });

  std::string gens, slp_out, circuit_out;
  Element     target = 0;
  auto* cs = app.add_subcommand("compile-slp", "SLP and circuit for t over a group");
  cs->add_option("table", table, "Group table file")->required();
  cs->add_option("-X,--gens", gens, "Generators, comma or space separated")->required();
  cs->add_option("-t,--target", target, "Target element")->required();
  cs->add_option("--slp", slp_out, "SLP output path ('-' for stdout)");
  cs->add_option("--circuit", circuit_out, "Circuit output path ('-' for stdout)");
  cs->callback([&] { code = run_compile_slp(table, gens, target, slp_out, circuit_out); });

  std::uint64_t exponent = 1;
  auto* pc = app.add_subcommand("power-circuit", "Repeated-squaring circuit for x^e");
  pc->add_option("e", exponent, "Exponent >= 1")->required();
  pc->add_option("-o,--out", out, "Circuit output path (default stdout)");
  pc->callback([&] { code = run_power_circuit(exponent, out); });

  std::string   circuit;
  std::size_t   order  = 0;
  std::uint64_t budget = default_netlist_budget;
  auto* tb = app.add_subcommand("to-boolean", "Compile a circuit to a depth-2 netlist");
  tb->add_option("circuit", circuit, "Circuit file")->required();
  tb->add_option("N", order, "Semigroup order")->required();
  tb->add_option("-o,--out", out, "Netlist output path (default stdout)");
  tb->add_option("--budget", budget, "Largest accepted N^m");
  tb->callback([&] { code = run_to_boolean(circuit, order, out, budget); });

  std::string netlist, bits;
  auto* eb = app.add_subcommand("eval-boolean", "Evaluate a netlist on an input bit string");
  eb->add_option("netlist", netlist, "Netlist file")->required();
  eb->add_option("bits", bits, "Input bits, e.g. the output of 'encode'")->required();
  eb->callback([&] { code = run_eval_boolean(netlist, bits); });

  std::string inputs;
  auto* en = app.add_subcommand("encode", "Netlist input bits for a table and circuit inputs");
  en->add_option("table", table, "Table file")->required();
  en->add_option("inputs", inputs, "Circuit inputs, comma or space separated")->required();
  en->callback([&] { code = run_encode(table, inputs); });

  JoinCaps caps;
  auto* dc = app.add_subcommand("decompose",
                                "Group x commutative witness for a nilpotent table");
  dc->add_option("table", table, "Table file")->required();
  dc->add_option("--max-q", caps.max_words, "Largest word set Q");
  dc->add_option("--max-group", caps.max_group, "Largest group G");
  dc->callback([&] { code = run_decompose(table, caps); });

  std::uint64_t    seed = selftest::default_seed;
  std::vector<int> ids;
  auto* st = app.add_subcommand("selftest", "Run the acceptance suite");
  st->add_option("--seed", seed, "Seed for the random instances");
  st->add_option("--criterion", ids, "Only these criteria (1-9)")
      ->check(CLI::Range(1, selftest::criterion_count));
  st->callback([&] { code = run_selftest(seed, ids); });

  try {
    app.parse(argc, argv);
  } catch (CLI::CallForHelp const& e) {
    return app.exit(e);
  } catch (CLI::CallForAllHelp const& e) {
    return app.exit(e);
  } catch (CLI::ParseError const& e) {
    app.exit(e);
    return 2;
  } catch (NotAssociative const& e) {
    auto const& [a, b, cc] = e.triple();
    std::cerr << "error: " << e.what() << " (witness triple " << a << ' ' << b
              << ' ' << cc << ")\n";
    return 2;
  } catch (std::exception const& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return code;
}

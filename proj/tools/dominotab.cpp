// dominotab: enumerate, transform and check domino tableaux from the shell.
//
// Exit codes: 0 success, 1 the operation is undefined or a check failed,
// 2 usage error or malformed input.

#include <fstream>
#include <iomanip>
#include <iostream>
#include <iterator>
#include <sstream>

#include "CLI11.hpp"
#include "dominotab/chains.hpp"
#include "dominotab/coplactic.hpp"
#include "dominotab/io.hpp"
#include "dominotab/switching.hpp"
#include "dominotab/verify.hpp"
#include "json.hpp"

using namespace dominotab;
using nlohmann::json;

namespace {

struct Undefined : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct Usage : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string format = "json";
  int offset = 0;
  std::string input = "-";
};

std::string read_input(const std::string& path) {
  if (path == "-") return {std::istreambuf_iterator<char>(std::cin), {}};
  std::ifstream in(path);
  if (!in) throw Usage("cannot read " + path);
  return {std::istreambuf_iterator<char>(in), {}};
}

bool ascii(const Options& o) { return o.format == "ascii"; }

// One labelled group of tableaux. JSON output is the tableau itself for a
// single result, an array otherwise; ASCII output labels groups with '#'.
struct Output {
  std::vector<std::pair<std::string, Tableau>> items;
  std::vector<std::pair<std::string, std::string>> notes;  // e.g. the trace
  void add(std::string name, Tableau t) { items.emplace_back(std::move(name), std::move(t)); }
};

void print(const Output& out, const Options& o) {
  if (ascii(o)) {
    for (auto& [name, t] : out.items) {
      if (!name.empty()) std::cout << "# " << name << "\n";
      std::cout << to_ascii(t, o.offset);
    }
    for (auto& [k, v] : out.notes) std::cout << "# " << k << ": " << v << "\n";
    return;
  }
  std::string body;
  if (out.items.size() == 1) {
    body = to_json(out.items[0].second, o.offset);
  } else {
    body = "[";
    for (std::size_t k = 0; k < out.items.size(); ++k) body += (k ? ",\n" : "") + to_json(out.items[k].second, o.offset);
    body += "]";
  }
  if (out.notes.empty()) {
    std::cout << body << "\n";
    return;
  }
  std::cout << "{\"result\": " << body;
  for (auto& [k, v] : out.notes) std::cout << ",\n \"" << k << "\": " << json(v).dump();
  std::cout << "}\n";
}

Tableau dom(const DominoTableau& d, std::vector<int> ords = {}) { return AnnotatedDomino{d, std::move(ords)}; }

const DominoTableau& as_domino(const Tableau& t, const std::string& op) {
  if (auto* d = std::get_if<AnnotatedDomino>(&t)) return d->tableau;
  throw Usage(op + " needs a domino tableau");
}

const YoungTableau& as_young(const Tableau& t, const std::string& op) {
  if (auto* y = std::get_if<YoungTableau>(&t)) return *y;
  throw Usage(op + " needs a Young tableau");
}

std::vector<Tableau> read_n(const Options& o, std::size_t n, const std::string& op) {
  auto all = parse_tableaux(read_input(o.input), o.offset);
  if (all.size() != n)
    throw Usage(op + " expects " + std::to_string(n) + " tableau" + (n == 1 ? "" : "x") + ", got " +
                std::to_string(all.size()));
  return all;
}

YoungTableau standard_young(const StandardChain& c) {
  std::vector<int> e(c.empty() ? 0 : c.size() - 1);
  for (std::size_t k = 0; k < e.size(); ++k) e[k] = int(k);
  return destandardise(c, e);
}

std::string family_text(const SwitchingFamily& f) {
  json grid = json::array();
  for (auto& row : f.grid) {
    json r = json::array();
    for (auto& p : row) r.push_back(p.parts());
    grid.push_back(r);
  }
  return grid.dump();
}

json chain_json(const Chain& c) {
  auto dominoes = [](const std::vector<PlacedDomino>& ds) {
    json a = json::array();
    for (auto& p : ds)
      a.push_back({{"row", p.d.anchor.row}, {"col", p.d.anchor.col}, {"orient", p.d.vertical() ? "v" : "h"}, {"entry", p.entry}});
    return a;
  };
  auto squares = [](const std::vector<Square>& ss) {
    json a = json::array();
    for (auto s : ss) a.push_back({s.row, s.col});
    return a;
  };
  return {{"kind", c.kind == ChainKind::open ? "open" : "closed"},
          {"dominoes", dominoes(c.dominoes)},
          {"replacement", dominoes(c.replacement)},
          {"pivots", squares(c.pivots)},
          {"removed", squares(c.removed)},
          {"added", squares(c.added)}};
}

// ---- subcommands ----

struct EnumerateArgs {
  std::string shape;
  int entries = 3;
  std::string weight;
  bool young = false;
  bool yamanouchi = false;
  std::string dominant_for;
  bool count = false;
};

int run_enumerate(const EnumerateArgs& a, const Options& o) {
  SkewShape shape = parse_shape(a.shape);
  std::optional<SkewShape> target;
  if (!a.dominant_for.empty()) target = parse_shape(a.dominant_for);
  Output out;
  if (a.young) {
    auto all = a.weight.empty() ? enumerate_sst(shape, a.entries) : enumerate_sst_weight(shape, parse_partition(a.weight).parts());
    for (auto& t : all) {
      if (a.yamanouchi && !is_yamanouchi_word(column_word(t))) continue;
      if (target && !dominant(dominance_young(t, *target))) continue;
      out.add("", t);
    }
  } else {
    if (!tileable_core(shape)) throw Undefined("shape " + format_shape(shape) + " has no domino tiling");
    auto all = a.weight.empty() ? enumerate_ssdt(shape, a.entries, a.yamanouchi)
                                : enumerate_ssdt_weight(shape, parse_partition(a.weight).parts(), a.yamanouchi);
    for (auto& d : all) {
      if (!target) {
        out.add("", dom(d));
        continue;
      }
      auto r = augment_dom(d, *target);
      if (dominant(r)) out.add("", dom(d, std::get<Augmentation>(r).ordinate));
    }
  }
  if (a.count) {
    std::cout << out.items.size() << "\n";
    return 0;
  }
  if (!ascii(o) && out.items.size() == 1) {
    // keep enumerate output an array even for one result
    std::cout << "[" << to_json(out.items[0].second, o.offset) << "]\n";
    return 0;
  }
  if (!ascii(o) && out.items.empty()) {
    std::cout << "[]\n";
    return 0;
  }
  print(out, o);
  return 0;
}

struct ApplyArgs {
  std::string op;
  int i = 0;
  int r = 1;
  int c = 0;
  std::optional<int> start;
  bool primed = false;
  bool trace = false;
  bool dump_family = false;
  bool inverse = false;
  std::string psi, chi;
};

int run_apply(const ApplyArgs& a, const Options& o) {
  const std::string& op = a.op;
  Output out;
  if (op == "e" || op == "f") {
    Coplactic kind = op == "e" ? Coplactic::e : Coplactic::f;
    std::string name = op + "_" + std::to_string(a.i);
    auto in = read_n(o, 1, op)[0];
    if (auto* y = std::get_if<YoungTableau>(&in)) {
      auto res = coplactic_young(kind, a.i, *y);
      if (!res) throw Undefined(name + " is not defined on this tableau");
      out.add("", *res);
    } else {
      CoplacticTrace trace;
      auto res = coplactic_dom(kind, a.i, as_domino(in, op), &trace);
      if (!res) throw Undefined(name + " is not defined on this tableau");
      out.add("", dom(*res));
      if (a.trace) out.notes.emplace_back("trace", format_trace(trace, o.offset));
    }
  } else if (op == "pi0") {
    auto d = as_domino(read_n(o, 1, op)[0], op);
    auto chain = standardisation(d);
    for (std::size_t k = 0; k < d.dominoes.size(); ++k)
      if (d.dominoes[k].entry != int(k)) throw Undefined("pi0 needs a standard domino tableau (entries 0..n-1 once each)");
    SwitchingFamily fam;
    auto [s, t] = pi0(chain, &fam);
    out.add("S", standard_young(s));
    out.add("T", standard_young(t));
    if (a.dump_family) out.notes.emplace_back("family", family_text(fam));
  } else if (op == "pi1") {
    SwitchingFamily fam;
    auto [u, v] = pi1(as_domino(read_n(o, 1, op)[0], op), &fam);
    out.add("U", u);
    out.add("V", v);
    if (a.dump_family) out.notes.emplace_back("family", family_text(fam));
  } else if (op == "pi") {
    out.add("", pi(as_domino(read_n(o, 1, op)[0], op)));
  } else if (op == "pi2") {
    std::vector<DominoTableau> parts;
    for (auto& t : parse_tableaux(read_input(o.input), o.offset)) parts.push_back(as_domino(t, op));
    auto [us, vs] = pi2(parts);
    for (std::size_t k = 0; k < us.size(); ++k) out.add("U" + std::to_string(k), us[k]);
    for (std::size_t k = 0; k < vs.size(); ++k) out.add("V" + std::to_string(k), vs[k]);
  } else if (op == "phi" || op == "xdom") {
    auto in = read_n(o, 2, op);
    auto& t0 = as_young(in[0], op);
    auto& t1 = as_young(in[1], op);
    if (op == "phi") {
      out.add("", dom(phi(a.c, t0, t1, a.primed, a.start)));
    } else {
      auto [u1, u0] = x_dom(t0, t1, a.start);
      out.add("T1'", u1);
      out.add("T0'", u0);
    }
  } else if (op == "moc" || op == "sreflect") {
    auto d = as_domino(read_n(o, 1, op)[0], op);
    out.add("", dom(op == "moc" ? moc(a.r, d) : s_reflect_tab(a.r, d)));
  } else if (op == "cl_split") {
    auto [y, p] = cl_split(as_domino(read_n(o, 1, op)[0], op));
    out.add("Y", dom(y));
    out.add("P", p);
  } else if (op == "cl_merge") {
    auto in = read_n(o, 2, op);
    out.add("", dom(cl_merge(as_domino(in[0], op), as_young(in[1], op))));
  } else if (op == "raise") {
    auto r = raise_to_yamanouchi(as_domino(read_n(o, 1, op)[0], op));
    out.add("", dom(r.yamanouchi));
    std::string word;
    for (int i : r.word) word += (word.empty() ? "e_" : " e_") + std::to_string(i);
    out.notes.emplace_back("word", word);
  } else if (op == "yamyam") {
    auto d = as_domino(read_n(o, 1, op)[0], op);
    if (!a.inverse) {
      if (a.psi.empty()) throw Usage("yamyam needs --psi");
      SkewShape psi = parse_shape(a.psi);
      auto m = yamyam_fwd(d, psi);
      std::vector<int> ords;
      if (!a.chi.empty()) ords = std::get<Augmentation>(augment_dom(m, parse_shape(a.chi))).ordinate;
      out.add("", dom(m, ords));
    } else {
      if (a.chi.empty()) throw Usage("yamyam --inverse needs --chi");
      out.add("", dom(yamyam_bwd(d, parse_shape(a.chi))));
    }
  } else {
    throw Usage("unknown operation " + op);
  }
  print(out, o);
  return 0;
}

struct ChainsArgs {
  int r = 1;
  bool list = false;
  std::vector<int> move;
};

int run_chains(const ChainsArgs& a, const Options& o) {
  auto d = as_domino(read_n(o, 1, "chains")[0], "chains");
  auto cs = chains(a.r, d);
  if (!a.move.empty()) {
    std::vector<Chain> subset;
    for (int k : a.move) {
      if (k < 0 || k >= int(cs.chains.size())) throw Usage("no chain " + std::to_string(k));
      subset.push_back(cs.chains[std::size_t(k)]);
    }
    Output out;
    out.add("", dom(move_chains(d, a.r, subset)));
    print(out, o);
    return 0;
  }
  if (a.list || ascii(o)) {
    for (std::size_t k = 0; k < cs.chains.size(); ++k) {
      auto& c = cs.chains[k];
      std::cout << k << " " << (c.kind == ChainKind::open ? "open  " : "closed") << " ";
      for (std::size_t j = 0; j < c.dominoes.size(); ++j) {
        auto& p = c.dominoes[j];
        std::cout << (j ? " " : "") << (p.d.vertical() ? 'V' : 'H') << "(" << p.d.anchor.row << "," << p.d.anchor.col
                  << "):" << p.entry + o.offset;
      }
      std::cout << "\n";
    }
    std::cout << cs.residual.size() << " dominoes stay\n";
    return 0;
  }
  json j = {{"r", a.r}, {"chains", json::array()}, {"residual", chain_json(Chain{a.r, ChainKind::closed, cs.residual, {}, {}, {}, {}})["dominoes"]}};
  for (auto& c : cs.chains) j["chains"].push_back(chain_json(c));
  std::cout << j.dump(1) << "\n";
  return 0;
}

struct VerifyArgs {
  std::vector<std::string> checks;
  std::optional<int> size, entries;
  bool list = false;
};

int run_verify(const VerifyArgs& a, const Options& o) {
  if (a.list) {
    for (auto& c : dominotab::checks()) {
      std::cout << c.id << " (size " << c.default_size;
      if (c.default_entries) std::cout << ", entries " << c.default_entries;
      std::cout << "): " << c.summary << "\n";
    }
    return 0;
  }
  std::vector<std::string> ids = a.checks;
  if (ids.empty() || (ids.size() == 1 && ids[0] == "all"))
    for (auto& c : dominotab::checks()) ids.push_back(c.id);
  std::erase(ids, "all");
  for (auto& id : ids) {
    bool known = false;
    for (auto& c : dominotab::checks()) known = known || c.id == id;
    if (!known) throw Usage("unknown check " + id + " (see verify --list)");
  }
  bool all_pass = true;
  json reports = json::array();
  for (auto& id : ids) {
    auto r = verify(id, Bounds{a.size, a.entries});
    all_pass = all_pass && r.passed;
    if (ascii(o)) {
      std::cout << (r.passed ? "PASS " : "FAIL ") << r.id << "  cases=" << r.cases << "  "
                << std::fixed << std::setprecision(2) << r.seconds << "s\n";
      if (!r.passed) std::cout << "  " << r.counterexample << "\n";
    } else {
      reports.push_back({{"check", r.id}, {"passed", r.passed}, {"cases", r.cases}, {"seconds", r.seconds},
                         {"counterexample", r.counterexample}});
    }
    std::cout.flush();
  }
  if (!ascii(o)) std::cout << reports.dump(1) << "\n";
  return all_pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Domino tableaux: enumeration, bijections and exhaustive checks"};
  app.require_subcommand(1);
  app.fallthrough();
  Options o;
  app.add_option("--format", o.format, "Output format")->check(CLI::IsMember({"json", "ascii"}))->capture_default_str();
  app.add_option("--offset", o.offset, "Added to entries when printing, subtracted when reading")->capture_default_str();

  EnumerateArgs ea;
  auto* en = app.add_subcommand("enumerate", "List the tableaux of a shape");
  en->add_option("--shape", ea.shape, "Shape, e.g. 4,3,1/2")->required();
  en->add_option("--entries", ea.entries, "Entries are < this")->capture_default_str();
  en->add_option("--weight", ea.weight, "Exact weight, e.g. 2,2,1 (overrides --entries)");
  en->add_flag("--young", ea.young, "Young tableaux instead of domino tableaux");
  en->add_flag("--yamanouchi", ea.yamanouchi, "Only Yamanouchi tableaux");
  en->add_option("--dominant-for", ea.dominant_for, "Only tableaux dominant for this shape (prints ordinates)");
  en->add_flag("--count", ea.count, "Print the number of tableaux only");

  ApplyArgs aa;
  auto* ap = app.add_subcommand("apply", "Apply an operation to tableaux read from a file or stdin");
  ap->add_option("op", aa.op, "e f pi0 pi1 pi pi2 phi xdom moc sreflect cl_split cl_merge raise yamyam")
      ->required()
      ->check(CLI::IsMember({"e", "f", "pi0", "pi1", "pi", "pi2", "phi", "xdom", "moc", "sreflect", "cl_split",
                             "cl_merge", "raise", "yamyam"}));
  ap->add_option("input", o.input, "Input file, - for stdin")->capture_default_str();
  ap->add_option("--i", aa.i, "Index of e_i / f_i");
  ap->add_option("--r", aa.r, "Reflection s_r (0 or 1)")->check(CLI::Range(0, 1));
  ap->add_option("--c", aa.c, "Core index for phi");
  ap->add_option("--start", aa.start, "Segregated core index the phi / xdom walk starts from");
  ap->add_flag("--primed", aa.primed, "Phi'_c instead of Phi_c");
  ap->add_flag("--trace", aa.trace, "Print the path of the hole (e, f)");
  ap->add_flag("--dump-family", aa.dump_family, "Print the switching family (pi0, pi1)");
  ap->add_flag("--inverse", aa.inverse, "yamyam: go from M back to L");
  ap->add_option("--psi", aa.psi, "yamyam: the shape L is dominant for");
  ap->add_option("--chi", aa.chi, "yamyam: the shape of L (prints M's ordinates, or needed for --inverse)");

  ChainsArgs ca;
  auto* ch = app.add_subcommand("chains", "Chains of a domino tableau for s_r");
  ch->add_option("input", o.input, "Input file, - for stdin")->capture_default_str();
  ch->add_option("--r", ca.r, "Reflection s_r (0 or 1)")->check(CLI::Range(0, 1))->capture_default_str();
  ch->add_flag("--list", ca.list, "One line per chain");
  ch->add_option("--move", ca.move, "Move the chains with these numbers and print the result");

  VerifyArgs va;
  auto* ve = app.add_subcommand("verify", "Run exhaustive checks");
  ve->add_option("--check", va.checks, "Check id (repeatable; default all)");
  ve->add_option("--size", va.size, "Main census bound (see --list)");
  ve->add_option("--entries", va.entries, "Entries are < this");
  ve->add_flag("--list", va.list, "List the checks");

  auto* co = app.add_subcommand("convert", "Re-print tableaux in another format");
  co->add_option("input", o.input, "Input file, - for stdin")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }
  try {
    if (en->parsed()) return run_enumerate(ea, o);
    if (ap->parsed()) return run_apply(aa, o);
    if (ch->parsed()) return run_chains(ca, o);
    if (ve->parsed()) return run_verify(va, o);
    if (co->parsed()) {
      Output out;
      for (auto& t : parse_tableaux(read_input(o.input), o.offset)) out.add("", t);
      print(out, o);
      return 0;
    }
  } catch (const ParseError& e) {
    std::cerr << "dominotab: " << e.what() << "\n";
    return 2;
  } catch (const Usage& e) {
    std::cerr << "dominotab: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    // undefined operations and failed preconditions
    std::cerr << "dominotab: " << e.what() << "\n";
    return 1;
  }
  return 2;
}

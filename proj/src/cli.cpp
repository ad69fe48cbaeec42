#include "lenscalc/cli.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "lenscalc/actions.hpp"
#include "lenscalc/bounding_index.hpp"
#include "lenscalc/cobordism.hpp"
#include "lenscalc/groups.hpp"
#include "lenscalc/serialize.hpp"

namespace lenscalc::cli {

namespace {

enum class Format { Text, Json };

constexpr const char* kUsage =
    "usage: lenscalc [--format text|json] <subcommand> ...\n"
    "subcommands:\n"
    "  classify L(n,q) L(n,q')      homotopy and cobordism verdicts with witnesses\n"
    "  degrees L(n,q) L(n,q')       the realizable mapping degrees mod n\n"
    "  cobound <json|file|->        pi1-isomorphic bounding; files and - are\n"
    "                               batches of one JSON problem per line\n"
    "  ob L(p,q)                    minimal bounding index (prime p >= 5)\n"
    "  chi <json|file|->            fold an Euler-characteristic ledger\n"
    "  group sigma <json|file|->    HNN double of a finite presentation\n"
    "  group abelianize <json|file|->\n"
    "  group semidirect <p> <u> <d> order and obstruction facts for Z_p x| Z_d\n"
    "  group homology <n> <k> [u]   H_k(Z/n), optionally the power-map multiplier\n"
    "  action <n> <a1> <a2> <a3>    fixed points and boundary of a weighted action\n";

i64 parse_int(const std::string& s) {
  if (s.empty()) throw UsageError("expected an integer, got empty argument");
  char* end = nullptr;
  errno = 0;
  long long v = std::strtoll(s.c_str(), &end, 10);
  if (errno != 0 || end != s.c_str() + s.size()) {
    throw UsageError("expected an integer, got \"" + s + "\"");
  }
  return v;
}

std::string tuple_str(const std::vector<i64>& v) {
  std::ostringstream os;
  os << "(";
  for (size_t i = 0; i < v.size(); ++i) {
    if (i > 0) os << ",";
    os << v[i];
  }
  os << ")";
  return os.str();
}

// Inline JSON if the argument looks like a document, file contents otherwise,
// stdin for "-". batch marks line-oriented sources.
struct Payload {
  std::string text;
  bool batch;
};

Payload load_payload(const std::string& arg, std::istream& in) {
  if (!arg.empty() && (arg[0] == '{' || arg[0] == '[')) {
    return {arg, false};
  }
  if (arg == "-") {
    std::ostringstream buf;
    buf << in.rdbuf();
    return {buf.str(), true};
  }
  std::ifstream file(arg);
  if (!file) {
    throw Error("cannot open file: " + arg);
  }
  std::ostringstream buf;
  buf << file.rdbuf();
  return {buf.str(), true};
}

void expect_args(const std::vector<std::string>& args, size_t n, const char* what) {
  if (args.size() != n) {
    throw UsageError(std::string(what) + " expects " + std::to_string(n) + " argument" +
                     (n == 1 ? "" : "s") + ", got " + std::to_string(args.size()));
  }
}

void print_witness_line(const CobordismWitness& w, std::ostream& out) {
  out << "SAT k=" << tuple_str(w.k) << " x=" << tuple_str(w.x)
      << " degrees=" << tuple_str(w.degrees) << "\n";
}

nlohmann::json cobound_json(const BoundaryProblem& problem,
                            const std::optional<CobordismWitness>& w) {
  nlohmann::json j{{"problem", to_json(problem)}, {"sat", w.has_value()}};
  if (w) j["witness"] = to_json(*w);
  return j;
}

int cmd_classify(const std::vector<std::string>& args, Format fmt, std::ostream& out) {
  expect_args(args, 2, "classify");
  LensSpace a = parse_lens_literal(args[0]);
  LensSpace b = parse_lens_literal(args[1]);
  HomotopyEquivalence h = homotopy_equivalent_oriented(a, b);
  bool cobordant = pi1_cobordant_pair(a, b);
  if (fmt == Format::Json) {
    nlohmann::json j{{"a", to_json(a)},
                     {"b", to_json(b)},
                     {"homotopy_equivalent", h.equivalent},
                     {"pi1_cobordant", cobordant}};
    if (h.equivalent) {
      j["x1"] = h.x1;
      j["x2"] = h.x2;
    }
    out << j.dump() << "\n";
  } else {
    out << "homotopy-equivalent: " << (h.equivalent ? "true" : "false");
    if (h.equivalent) out << ", witness (" << h.x1 << "," << h.x2 << ")";
    out << "\n";
    out << "pi1-cobordant: " << (cobordant ? "true" : "false") << "\n";
  }
  return 0;
}

int cmd_degrees(const std::vector<std::string>& args, Format fmt, std::ostream& out) {
  expect_args(args, 2, "degrees");
  LensSpace a = parse_lens_literal(args[0]);
  LensSpace b = parse_lens_literal(args[1]);
  DegreeSet d = degree_set(a, b);
  if (fmt == Format::Json) {
    out << nlohmann::json{{"modulus", d.modulus}, {"residues", d.residues}}.dump() << "\n";
  } else {
    out << "{";
    for (size_t i = 0; i < d.residues.size(); ++i) {
      if (i > 0) out << ",";
      out << d.residues[i];
    }
    out << "} mod " << d.modulus << "\n";
  }
  return 0;
}

void run_cobound_one(const std::string& text, Format fmt, std::ostream& out) {
  BoundaryProblem problem = boundary_problem_from_json(parse_json_text(text));
  std::optional<CobordismWitness> w = pi1_cobound(problem);
  if (fmt == Format::Json) {
    out << cobound_json(problem, w).dump() << "\n";
  } else if (w) {
    print_witness_line(*w, out);
  } else {
    out << "UNSAT\n";
  }
}

int cmd_cobound(const std::vector<std::string>& args, Format fmt, std::istream& in,
                std::ostream& out, std::ostream& err) {
  expect_args(args, 1, "cobound");
  Payload payload = load_payload(args[0], in);
  if (!payload.batch) {
    run_cobound_one(payload.text, fmt, out);
    return 0;
  }
  int severity = 0;
  std::istringstream lines(payload.text);
  std::string line;
  size_t lineno = 0;
  while (std::getline(lines, line)) {
    ++lineno;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    try {
      run_cobound_one(line, fmt, out);
    } catch (const TheoremViolation& e) {
      err << "line " << lineno << ": internal error: " << e.what() << "\n";
      severity = std::max(severity, 3);
    } catch (const Error& e) {
      err << "line " << lineno << ": error: " << e.what() << "\n";
      severity = std::max(severity, 2);
    } catch (const std::exception& e) {
      err << "line " << lineno << ": internal error: " << e.what() << "\n";
      severity = std::max(severity, 3);
    }
  }
  return severity;
}

int cmd_ob(const std::vector<std::string>& args, Format fmt, std::ostream& out) {
  expect_args(args, 1, "ob");
  LensSpace l = parse_lens_literal(args[0]);
  i64 ob = ob_lens_prime(l);
  if (fmt == Format::Json) {
    out << nlohmann::json{{"lens", to_json(l)}, {"ob", ob},
                          {"chib_lower_bound", chib_lower_bound(l)}}
               .dump()
        << "\n";
  } else {
    out << ob << "\n";
  }
  return 0;
}

int cmd_chi(const std::vector<std::string>& args, Format fmt, std::istream& in,
            std::ostream& out) {
  expect_args(args, 1, "chi");
  Payload payload = load_payload(args[0], in);
  std::vector<ChiLedgerStep> steps = ledger_from_json(parse_json_text(payload.text));
  i64 chi = euler_ledger(steps);
  if (fmt == Format::Json) {
    out << nlohmann::json{{"chi", chi}}.dump() << "\n";
  } else {
    out << chi << "\n";
  }
  return 0;
}

void print_presentation_text(const FinitePresentation& p, std::ostream& out) {
  out << "gens:";
  for (const std::string& g : p.generators) out << " " << g;
  out << "\n";
  for (const std::vector<int>& rel : p.relators) {
    out << "rel:";
    for (int letter : rel) {
      const std::string& name = p.generators[static_cast<size_t>(std::abs(letter)) - 1];
      std::string shown = name;
      if (letter < 0) {
        for (char& c : shown) c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
      }
      out << " " << shown;
    }
    out << "\n";
  }
}

int cmd_group_sigma(const std::string& arg, Format fmt, std::istream& in, std::ostream& out) {
  Payload payload = load_payload(arg, in);
  FinitePresentation p = presentation_from_json(parse_json_text(payload.text));
  FinitePresentation s = sigma_presentation(p);
  if (fmt == Format::Json) {
    out << to_json(s).dump() << "\n";
  } else {
    print_presentation_text(s, out);
  }
  return 0;
}

int cmd_group_abelianize(const std::string& arg, Format fmt, std::istream& in,
                         std::ostream& out) {
  Payload payload = load_payload(arg, in);
  FinitePresentation p = presentation_from_json(parse_json_text(payload.text));
  AbelianizationMap ab = abelianization(p);
  if (fmt == Format::Json) {
    nlohmann::json images = nlohmann::json::array();
    for (int g = 0; g < p.rank(); ++g) images.push_back(ab.image_of_generator(g));
    out << nlohmann::json{{"gens", p.generators},
                          {"torsion", ab.torsion()},
                          {"free_rank", ab.free_rank()},
                          {"images", std::move(images)}}
               .dump()
        << "\n";
  } else {
    out << "torsion: " << tuple_str(ab.torsion()) << "\n";
    out << "free-rank: " << ab.free_rank() << "\n";
    for (int g = 0; g < p.rank(); ++g) {
      out << p.generators[g] << " -> " << tuple_str(ab.image_of_generator(g)) << "\n";
    }
  }
  return 0;
}

int cmd_group_semidirect(const std::vector<std::string>& args, Format fmt, std::ostream& out) {
  expect_args(args, 3, "group semidirect");
  i64 p = parse_int(args[0]);
  i64 u = parse_int(args[1]);
  i64 d = parse_int(args[2]);
  MetacyclicGroup g = semidirect_group(p, u, d);
  bool prime = is_prime(p);
  if (fmt == Format::Json) {
    nlohmann::json j{{"p", g.p()}, {"u", g.u()}, {"d", g.d()},
                     {"order", g.order()}, {"abelian", g.is_abelian()}};
    if (prime) j["i3_trivial"] = i3_trivial_in_semidirect(p, u, d);
    out << j.dump() << "\n";
  } else {
    out << "order: " << g.order() << "\n";
    out << "abelian: " << (g.is_abelian() ? "true" : "false") << "\n";
    if (prime) {
      out << "i3-trivial: " << (i3_trivial_in_semidirect(p, u, d) ? "true" : "false") << "\n";
    }
  }
  return 0;
}

int cmd_group_homology(const std::vector<std::string>& args, Format fmt, std::ostream& out) {
  if (args.size() != 2 && args.size() != 3) {
    throw UsageError("group homology expects <n> <k> and an optional <u>");
  }
  i64 n = parse_int(args[0]);
  i64 k = parse_int(args[1]);
  CyclicHomology h = cyclic_homology(n, k);
  std::string group;
  switch (h.kind) {
    case CyclicHomology::Kind::Integers:
      group = "Z";
      break;
    case CyclicHomology::Kind::Cyclic:
      group = "Z/" + std::to_string(h.modulus);
      break;
    case CyclicHomology::Kind::Trivial:
      group = "0";
      break;
  }
  nlohmann::json j{{"n", n}, {"k", k}, {"homology", group}};
  std::string multiplier_line;
  if (args.size() == 3) {
    i64 u = parse_int(args[2]);
    i64 mult = power_map_action_on_h(n, u, k);
    // The chain-level identification pins the multiplier in degrees 1 and 3;
    // higher odd degrees follow the same formula by periodicity.
    bool extrapolated = k > 3;
    j["multiplier"] = mult;
    j["extrapolated"] = extrapolated;
    multiplier_line =
        "multiplier: " + std::to_string(mult) + (extrapolated ? " (extrapolated)" : "");
  }
  if (fmt == Format::Json) {
    out << j.dump() << "\n";
  } else {
    out << "H_" << k << "(Z/" << n << ") = " << group << "\n";
    if (!multiplier_line.empty()) out << multiplier_line << "\n";
  }
  return 0;
}

int cmd_group(const std::vector<std::string>& args, Format fmt, std::istream& in,
              std::ostream& out) {
  if (args.empty()) {
    throw UsageError("group expects a mode: sigma, abelianize, semidirect, homology");
  }
  const std::string& mode = args[0];
  std::vector<std::string> rest(args.begin() + 1, args.end());
  if (mode == "sigma") {
    expect_args(rest, 1, "group sigma");
    return cmd_group_sigma(rest[0], fmt, in, out);
  }
  if (mode == "abelianize") {
    expect_args(rest, 1, "group abelianize");
    return cmd_group_abelianize(rest[0], fmt, in, out);
  }
  if (mode == "semidirect") return cmd_group_semidirect(rest, fmt, out);
  if (mode == "homology") return cmd_group_homology(rest, fmt, out);
  throw UsageError("unknown group mode \"" + mode + "\"");
}

int cmd_action(const std::vector<std::string>& args, Format fmt, std::ostream& out) {
  expect_args(args, 4, "action");
  i64 n = parse_int(args[0]);
  WeightedCp2Action action(n, {parse_int(args[1]), parse_int(args[2]), parse_int(args[3])});
  std::vector<LensSpace> types = fixed_point_types(action);
  BoundaryProblem boundary = orbifold_boundary(action);
  CobordismWitness witness = verify_action_consistency(action);
  if (fmt == Format::Json) {
    nlohmann::json jtypes = nlohmann::json::array();
    nlohmann::json jcanon = nlohmann::json::array();
    for (const LensSpace& t : types) {
      jtypes.push_back(to_json(t));
      jcanon.push_back(to_json(canonical_form(t)));
    }
    out << nlohmann::json{{"action", to_json(action)},
                          {"types", std::move(jtypes)},
                          {"canonical_types", std::move(jcanon)},
                          {"boundary", to_json(boundary)},
                          {"witness", to_json(witness)}}
               .dump()
        << "\n";
  } else {
    out << "types:";
    for (const LensSpace& t : types) out << " " << to_string(t);
    out << "\ncanonical:";
    for (const LensSpace& t : types) out << " " << to_string(canonical_form(t));
    out << "\nboundary: n=" << boundary.n() << " q=" << tuple_str(boundary.residues()) << "\n";
    print_witness_line(witness, out);
  }
  return 0;
}

}  // namespace

LensSpace parse_lens_literal(const std::string& text) {
  size_t pos = 0;
  auto fail = [&]() -> void {
    throw UsageError("expected a lens literal like L(5,2), got \"" + text + "\"");
  };
  if (pos >= text.size() || text[pos] != 'L') fail();
  ++pos;
  if (pos >= text.size() || text[pos] != '(') fail();
  ++pos;
  auto read_int = [&]() -> i64 {
    size_t start = pos;
    if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) ++pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos == start || (pos == start + 1 && !std::isdigit(static_cast<unsigned char>(text[start])))) {
      fail();
    }
    return std::strtoll(text.substr(start, pos - start).c_str(), nullptr, 10);
  };
  i64 n = read_int();
  if (pos >= text.size() || text[pos] != ',') fail();
  ++pos;
  i64 q = read_int();
  if (pos >= text.size() || text[pos] != ')') fail();
  ++pos;
  if (pos != text.size()) fail();
  return LensSpace(n, q);
}

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err) {
  try {
    Format fmt = Format::Text;
    std::vector<std::string> rest;
    for (size_t i = 0; i < args.size(); ++i) {
      const std::string& a = args[i];
      std::string value;
      if (a == "--format") {
        if (i + 1 >= args.size()) throw UsageError("--format needs a value");
        value = args[++i];
      } else if (a.rfind("--format=", 0) == 0) {
        value = a.substr(9);
      } else {
        rest.push_back(a);
        continue;
      }
      if (value == "json") {
        fmt = Format::Json;
      } else if (value == "text") {
        fmt = Format::Text;
      } else {
        throw UsageError("--format must be text or json, got \"" + value + "\"");
      }
    }
    if (rest.empty()) throw UsageError("missing subcommand");
    std::string sub = rest[0];
    std::vector<std::string> sub_args(rest.begin() + 1, rest.end());
    if (sub == "classify") return cmd_classify(sub_args, fmt, out);
    if (sub == "degrees") return cmd_degrees(sub_args, fmt, out);
    if (sub == "cobound") return cmd_cobound(sub_args, fmt, in, out, err);
    if (sub == "ob") return cmd_ob(sub_args, fmt, out);
    if (sub == "chi") return cmd_chi(sub_args, fmt, in, out);
    if (sub == "group") return cmd_group(sub_args, fmt, in, out);
    if (sub == "action") return cmd_action(sub_args, fmt, out);
    throw UsageError("unknown subcommand \"" + sub + "\"");
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n" << kUsage;
    return 1;
  } catch (const TheoremViolation& e) {
    err << "internal error: " << e.what() << "\n";
    return 3;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return 3;
  }
}

int run(int argc, const char* const* argv, std::istream& in, std::ostream& out,
        std::ostream& err) {
  std::vector<std::string> args;
  for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
  return run(args, in, out, err);
}

}  // namespace lenscalc::cli

#include "lenscalc/serialize.hpp"

#include <cctype>

namespace lenscalc {

namespace {

i64 get_i64(const nlohmann::json& j, const char* key) {
  if (!j.is_object() || !j.contains(key) || !j[key].is_number_integer()) {
    throw ParseError(std::string("expected integer field \"") + key + "\"");
  }
  return j[key].get<i64>();
}

std::vector<i64> get_i64_array(const nlohmann::json& j, const char* key) {
  if (!j.is_object() || !j.contains(key) || !j[key].is_array()) {
    throw ParseError(std::string("expected array field \"") + key + "\"");
  }
  std::vector<i64> out;
  for (const nlohmann::json& v : j[key]) {
    if (!v.is_number_integer()) {
      throw ParseError(std::string("field \"") + key + "\" must hold integers");
    }
    out.push_back(v.get<i64>());
  }
  return out;
}

bool is_wire_name(const std::string& s) {
  if (s.empty() || !std::islower(static_cast<unsigned char>(s[0]))) return false;
  for (char c : s) {
    unsigned char u = static_cast<unsigned char>(c);
    if (!std::islower(u) && !std::isdigit(u)) return false;
  }
  return true;
}

std::string to_upper(const std::string& s) {
  std::string out = s;
  for (char& c : out) c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
  return out;
}

std::string to_lower(const std::string& s) {
  std::string out = s;
  for (char& c : out) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return out;
}

}  // namespace

nlohmann::json parse_json_text(const std::string& text) {
  nlohmann::json j = nlohmann::json::parse(text, nullptr, false);
  if (j.is_discarded()) {
    throw ParseError("malformed JSON input");
  }
  return j;
}

nlohmann::json to_json(const LensSpace& l) { return {{"n", l.n()}, {"q", l.q()}}; }

LensSpace lens_from_json(const nlohmann::json& j) {
  return LensSpace(get_i64(j, "n"), get_i64(j, "q"));
}

nlohmann::json to_json(const BoundaryProblem& problem) {
  return {{"n", problem.n()}, {"q", problem.residues()}};
}

BoundaryProblem boundary_problem_from_json(const nlohmann::json& j) {
  return BoundaryProblem(get_i64(j, "n"), get_i64_array(j, "q"));
}

nlohmann::json to_json(const CobordismWitness& witness) {
  return {{"k", witness.k}, {"x", witness.x}, {"degrees", witness.degrees}};
}

CobordismWitness witness_from_json(const nlohmann::json& j) {
  CobordismWitness w;
  w.k = get_i64_array(j, "k");
  w.x = get_i64_array(j, "x");
  w.degrees = get_i64_array(j, "degrees");
  return w;
}

nlohmann::json to_json(const FinitePresentation& p) {
  p.validate();
  for (const std::string& g : p.generators) {
    if (!is_wire_name(g)) {
      throw InvalidArgument("generator name \"" + g +
                            "\" is not serializable (need lowercase alphanumerics)");
    }
  }
  nlohmann::json rels = nlohmann::json::array();
  for (const std::vector<int>& rel : p.relators) {
    nlohmann::json word = nlohmann::json::array();
    for (int letter : rel) {
      const std::string& name = p.generators[static_cast<size_t>(std::abs(letter)) - 1];
      word.push_back(letter > 0 ? name : to_upper(name));
    }
    rels.push_back(std::move(word));
  }
  return {{"gens", p.generators}, {"rels", std::move(rels)}};
}

FinitePresentation presentation_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("gens") || !j["gens"].is_array()) {
    throw ParseError("expected array field \"gens\"");
  }
  FinitePresentation p;
  for (const nlohmann::json& g : j["gens"]) {
    if (!g.is_string() || !is_wire_name(g.get<std::string>())) {
      throw ParseError("generator names must be lowercase alphanumeric strings");
    }
    p.generators.push_back(g.get<std::string>());
  }
  if (!j.contains("rels") || !j["rels"].is_array()) {
    throw ParseError("expected array field \"rels\"");
  }
  for (const nlohmann::json& rel : j["rels"]) {
    if (!rel.is_array()) {
      throw ParseError("each relator must be an array of letters");
    }
    std::vector<int> word;
    for (const nlohmann::json& letter : rel) {
      if (!letter.is_string()) {
        throw ParseError("relator letters must be strings");
      }
      std::string s = letter.get<std::string>();
      std::string lowered = to_lower(s);
      int index = 0;
      for (size_t i = 0; i < p.generators.size(); ++i) {
        if (p.generators[i] == lowered) {
          index = static_cast<int>(i) + 1;
          break;
        }
      }
      if (index == 0) {
        throw ParseError("unknown letter \"" + s + "\"");
      }
      if (s == lowered) {
        word.push_back(index);
      } else if (s == to_upper(lowered)) {
        word.push_back(-index);
      } else {
        throw ParseError("letter \"" + s + "\" mixes cases");
      }
    }
    p.relators.push_back(std::move(word));
  }
  p.validate();
  return p;
}

nlohmann::json to_json(const std::vector<ChiLedgerStep>& steps) {
  nlohmann::json out = nlohmann::json::array();
  for (const ChiLedgerStep& s : steps) {
    switch (s.kind) {
      case ChiLedgerStep::Kind::Closed4:
        out.push_back({{"kind", "closed4"}, {"chi", s.arg}});
        break;
      case ChiLedgerStep::Kind::RemoveBalls:
        out.push_back({{"kind", "remove_balls"}, {"count", s.arg}});
        break;
      case ChiLedgerStep::Kind::FreeQuotient:
        out.push_back({{"kind", "free_quotient"}, {"order", s.arg}});
        break;
      case ChiLedgerStep::Kind::GlueBoundaryPair:
        out.push_back({{"kind", "glue_boundary_pair"}});
        break;
      case ChiLedgerStep::Kind::CircleSurgery:
        out.push_back({{"kind", "circle_surgery"}});
        break;
    }
  }
  return out;
}

std::vector<ChiLedgerStep> ledger_from_json(const nlohmann::json& j) {
  if (!j.is_array()) {
    throw ParseError("ledger must be a JSON array of steps");
  }
  std::vector<ChiLedgerStep> steps;
  for (const nlohmann::json& s : j) {
    if (!s.is_object() || !s.contains("kind") || !s["kind"].is_string()) {
      throw ParseError("each ledger step needs a string \"kind\"");
    }
    std::string kind = s["kind"].get<std::string>();
    if (kind == "closed4") {
      steps.push_back(ChiLedgerStep::closed4(get_i64(s, "chi")));
    } else if (kind == "remove_balls") {
      steps.push_back(ChiLedgerStep::remove_balls(get_i64(s, "count")));
    } else if (kind == "free_quotient") {
      steps.push_back(ChiLedgerStep::free_quotient(get_i64(s, "order")));
    } else if (kind == "glue_boundary_pair") {
      steps.push_back(ChiLedgerStep::glue_boundary_pair());
    } else if (kind == "circle_surgery") {
      steps.push_back(ChiLedgerStep::circle_surgery());
    } else {
      throw ParseError("unknown ledger step kind \"" + kind + "\"");
    }
  }
  return steps;
}

nlohmann::json to_json(const WeightedCp2Action& action) {
  return {{"n", action.n()}, {"weights", action.weights()}};
}

WeightedCp2Action action_from_json(const nlohmann::json& j) {
  std::vector<i64> w = get_i64_array(j, "weights");
  if (w.size() != 3) {
    throw ParseError("\"weights\" must have exactly 3 entries");
  }
  return WeightedCp2Action(get_i64(j, "n"), {w[0], w[1], w[2]});
}

}  // namespace lenscalc

#include "input.hpp"

#include <fstream>
#include <json.hpp>
#include <sstream>

namespace fpm::cli {

using json = nlohmann::ordered_json;

namespace {

[[noreturn]] void bad(const std::string& where, const std::string& what) {
  throw InputError(where + ": " + what);
}

Element parse_element(const BaseRing& ring, const json& j,
                      const std::string& where) {
  if (ring.kind() == RingKind::Integers) {
    if (j.is_number_integer()) return Element::integer(Int(j.get<long long>()));
    if (j.is_string()) {
      const std::string s = j.get<std::string>();
      try {
        return Element::integer(Int(s));
      } catch (const std::exception&) {
        bad(where, "'" + s + "' is not a decimal integer");
      }
    }
    bad(where, "integer elements are decimal strings or integers");
  }
  if (!j.is_array())
    bad(where, "polynomial elements are ascending coefficient arrays");
  std::vector<std::int64_t> coeffs;
  for (size_t i = 0; i < j.size(); ++i) {
    if (!j[i].is_number_integer())
      bad(where + "[" + std::to_string(i) + "]", "coefficient must be an integer");
    coeffs.push_back(j[i].get<std::int64_t>());
  }
  return ring.poly_from_coeffs(coeffs);
}

json emit_element(const BaseRing& ring, const Element& e) {
  if (ring.kind() == RingKind::Integers) return e.int_value().str();
  json arr = json::array();
  for (std::int64_t c : e.poly_value().coeffs) arr.push_back(c);
  return arr;
}

}  // namespace

ParsedInput parse_module_description(const std::string& text) {
  json root;
  try {
    root = json::parse(text);
  } catch (const json::parse_error& e) {
    throw InputError(std::string("JSON parse error: ") + e.what());
  }
  if (!root.is_object()) bad("$", "top level must be an object");
  if (!root.contains("ring")) bad("ring", "missing");
  if (!root.contains("module")) bad("module", "missing");
  const json& ring_j = root["ring"];
  if (!ring_j.is_object() || !ring_j.contains("base"))
    bad("ring.base", "missing");
  const std::string base = ring_j["base"].get<std::string>();
  RingKind kind;
  std::optional<std::int64_t> characteristic;
  if (base == "int") {
    kind = RingKind::Integers;
  } else if (base == "poly") {
    kind = RingKind::PolynomialsOverPrimeField;
    if (!ring_j.contains("char"))
      bad("ring.char", "required for polynomial rings");
    characteristic = ring_j["char"].get<std::int64_t>();
  } else {
    bad("ring.base", "'" + base + "' is not one of int, poly");
  }
  BaseRing probe = [&]() -> BaseRing {
    try {
      return kind == RingKind::Integers
                 ? BaseRing::integers()
                 : BaseRing::polynomials(characteristic.value_or(0));
    } catch (const Error& e) {
      bad("ring.char", e.what());
    }
  }();
  std::optional<Element> modulus;
  if (ring_j.contains("modulus") && !ring_j["modulus"].is_null())
    modulus = parse_element(probe, ring_j["modulus"], "ring.modulus");
  RingContext ctx = [&]() -> RingContext {
    try {
      return make_context(kind, characteristic, modulus);
    } catch (const Error& e) {
      bad("ring", e.what());
    }
  }();

  const json& mod_j = root["module"];
  if (!mod_j.is_object() || !mod_j.contains("generators"))
    bad("module.generators", "missing");
  if (!mod_j["generators"].is_number_integer() ||
      mod_j["generators"].get<long long>() < 0)
    bad("module.generators", "must be a non-negative integer");
  int g = mod_j["generators"].get<int>();
  std::vector<Vec> rows;
  if (mod_j.contains("relations")) {
    const json& rel = mod_j["relations"];
    if (!rel.is_array()) bad("module.relations", "must be an array of rows");
    for (size_t r = 0; r < rel.size(); ++r) {
      const std::string where = "module.relations[" + std::to_string(r) + "]";
      if (!rel[r].is_array()) bad(where, "row must be an array");
      if (static_cast<int>(rel[r].size()) != g)
        bad(where, "row has length " + std::to_string(rel[r].size()) +
                       ", expected " + std::to_string(g));
      Vec row;
      for (size_t c = 0; c < rel[r].size(); ++c)
        row.push_back(parse_element(ctx.base, rel[r][c],
                                    where + "[" + std::to_string(c) + "]"));
      rows.push_back(std::move(row));
    }
  }
  ParsedInput out{ctx, present_rows(ctx, g, rows), {}};

  if (root.contains("ideals")) {
    const json& ideals_j = root["ideals"];
    if (!ideals_j.is_object()) bad("ideals", "must be an object of name -> generators");
    for (auto it = ideals_j.begin(); it != ideals_j.end(); ++it) {
      const std::string where = "ideals." + it.key();
      if (!it.value().is_array() || it.value().empty())
        bad(where, "must be a non-empty generator array");
      std::vector<Element> gens;
      for (size_t i = 0; i < it.value().size(); ++i)
        gens.push_back(parse_element(ctx.base, it.value()[i],
                                     where + "[" + std::to_string(i) + "]"));
      out.ideals.emplace_back(it.key(), ideal_from_generators(ctx, gens));
    }
  }
  return out;
}

ParsedInput load_module_description(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_module_description(buf.str());
}

std::string emit_module_description(const ParsedInput& in) {
  json root;
  json ring;
  ring["base"] =
      in.ctx.base.kind() == RingKind::Integers ? "int" : "poly";
  if (in.ctx.base.kind() == RingKind::PolynomialsOverPrimeField)
    ring["char"] = in.ctx.base.characteristic();
  if (in.ctx.modulus) ring["modulus"] = emit_element(in.ctx.base, *in.ctx.modulus);
  root["ring"] = ring;

  json mod;
  mod["generators"] = in.module.generators();
  json rel = json::array();
  // re-emit only the explicit relations (the modulus rows are implicit);
  // they sit at the front of the stored relation matrix
  int explicit_rows = in.module.relations().rows() -
                      (in.ctx.is_quotient() ? in.module.generators() : 0);
  for (int r = 0; r < explicit_rows; ++r) {
    json row = json::array();
    for (int c = 0; c < in.module.generators(); ++c)
      row.push_back(emit_element(in.ctx.base, in.module.relations().at(r, c)));
    rel.push_back(row);
  }
  mod["relations"] = rel;
  root["module"] = mod;

  json ideals;
  for (const auto& [name, ideal] : in.ideals)
    ideals[name] = json::array({emit_element(in.ctx.base, ideal.gen)});
  root["ideals"] = ideals;
  return root.dump(2) + "\n";
}

RingContext parse_context_token(const std::string& token) {
  auto slash = token.find('/');
  std::string head = slash == std::string::npos ? token : token.substr(0, slash);
  std::string tail = slash == std::string::npos ? "" : token.substr(slash + 1);
  RingKind kind;
  std::optional<std::int64_t> characteristic;
  if (head == "Z") {
    kind = RingKind::Integers;
  } else if (head.size() >= 2 && head[0] == 'F') {
    kind = RingKind::PolynomialsOverPrimeField;
    try {
      characteristic = std::stoll(head.substr(1));
    } catch (const std::exception&) {
      throw InputError("context token '" + token + "': bad characteristic");
    }
  } else {
    throw InputError("context token '" + token + "': expected Z or F<p>");
  }
  BaseRing ring = kind == RingKind::Integers
                      ? BaseRing::integers()
                      : BaseRing::polynomials(characteristic.value_or(0));
  std::optional<Element> modulus;
  if (!tail.empty()) modulus = parse_element_token(ring, tail);
  try {
    return make_context(kind, characteristic, modulus);
  } catch (const Error& e) {
    throw InputError("context token '" + token + "': " + e.what());
  }
}

std::string context_token(const RingContext& ctx) {
  std::string head = ctx.base.kind() == RingKind::Integers
                         ? "Z"
                         : "F" + std::to_string(ctx.base.characteristic());
  if (!ctx.modulus) return head;
  if (ctx.base.kind() == RingKind::Integers)
    return head + "/" + ctx.modulus->int_value().str();
  std::string tail;
  const auto& cs = ctx.modulus->poly_value().coeffs;
  for (size_t i = 0; i < cs.size(); ++i)
    tail += (i ? "." : "") + std::to_string(cs[i]);
  return head + "/" + tail;
}

Element parse_element_token(const BaseRing& ring, const std::string& token) {
  if (ring.kind() == RingKind::Integers) {
    try {
      return Element::integer(Int(token));
    } catch (const std::exception&) {
      throw InputError("'" + token + "' is not a decimal integer");
    }
  }
  std::vector<std::int64_t> coeffs;
  std::stringstream ss(token);
  std::string part;
  while (std::getline(ss, part, '.')) {
    try {
      coeffs.push_back(std::stoll(part));
    } catch (const std::exception&) {
      throw InputError("'" + token + "' is not a dot-joined coefficient list");
    }
  }
  return ring.poly_from_coeffs(coeffs);
}

}  // namespace fpm::cli

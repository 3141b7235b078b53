#include "sally/ringdoc.hpp"

#include <json.hpp>

#include "sally/parser.hpp"

namespace sally {

namespace {

using nlohmann::json;

std::vector<std::string> string_array(const json& j, const std::string& where) {
  if (!j.is_array()) throw InputError(where + ": expected an array of strings");
  std::vector<std::string> out;
  for (const auto& item : j) {
    if (!item.is_string()) throw InputError(where + ": expected an array of strings");
    out.push_back(item.get<std::string>());
  }
  return out;
}

Polynomial parse_at(const std::string& text, const std::string& where,
                    const std::vector<std::string>& variables, const Field& field) {
  try {
    return parse_polynomial(text, variables, field, MonomialOrder::grevlex());
  } catch (const ParseError& e) {
    throw InputError(where + ":" + e.what());
  }
}

}  // namespace

RingDocument parse_ring_document(const std::string& json_text) {
  json j;
  try {
    j = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw InputError(std::string("ring document is not valid JSON: ") + e.what());
  }
  if (!j.is_object()) throw InputError("ring document must be a JSON object");

  RingDocument doc;
  if (j.contains("field")) {
    if (!j["field"].is_string()) throw InputError("field: expected a string");
    doc.field = j["field"].get<std::string>();
  }
  if (!j.contains("variables")) throw InputError("ring document is missing \"variables\"");
  doc.variables = string_array(j["variables"], "variables");
  if (j.contains("relations")) doc.relations = string_array(j["relations"], "relations");
  if (j.contains("ideals")) {
    if (!j["ideals"].is_object()) throw InputError("ideals: expected an object");
    for (const auto& [name, exprs] : j["ideals"].items()) {
      doc.ideals[name] = string_array(exprs, "ideals." + name);
    }
  }

  // Validate everything parses; positions are relative to each expression.
  Field field = Field::parse(doc.field);
  for (std::size_t i = 0; i < doc.relations.size(); ++i) {
    const std::string where = "relations[" + std::to_string(i) + "]";
    Polynomial r = parse_at(doc.relations[i], where, doc.variables, field);
    for (const auto& t : r.terms()) {
      if (t.mono.is_unit()) throw InputError(where + ": relation has nonzero constant term");
    }
  }
  for (const auto& [name, exprs] : doc.ideals) {
    for (std::size_t i = 0; i < exprs.size(); ++i) {
      parse_at(exprs[i], "ideals." + name + "[" + std::to_string(i) + "]", doc.variables, field);
    }
  }
  return doc;
}

std::string emit_ring_document(const RingDocument& doc) {
  json j;
  j["field"] = doc.field;
  j["variables"] = doc.variables;
  j["relations"] = doc.relations;
  json ideals = json::object();
  for (const auto& [name, exprs] : doc.ideals) ideals[name] = exprs;
  j["ideals"] = ideals;
  return j.dump(2) + "\n";
}

CompiledRing compile_ring_document(const RingDocument& doc, std::optional<Field> field_override) {
  Field field = field_override ? *field_override : Field::parse(doc.field);
  CompiledRing out;
  if (!field.is_rational()) {
    out.warnings.push_back("prime-field coefficients: genericity-dependent claims not re-verified");
  }
  std::vector<Polynomial> relations;
  for (std::size_t i = 0; i < doc.relations.size(); ++i) {
    relations.push_back(parse_at(doc.relations[i], "relations[" + std::to_string(i) + "]",
                                 doc.variables, field));
  }
  out.ring = RingPresentation::make(field, doc.variables, std::move(relations));
  for (const auto& [name, exprs] : doc.ideals) {
    std::vector<Polynomial> gens;
    for (std::size_t i = 0; i < exprs.size(); ++i) {
      gens.push_back(parse_at(exprs[i], "ideals." + name + "[" + std::to_string(i) + "]",
                              doc.variables, field));
    }
    out.ideals.emplace(name, IdealHandle(out.ring, std::move(gens)));
  }
  return out;
}

}  // namespace sally

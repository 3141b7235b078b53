#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "sally/ideal.hpp"

namespace sally {

// On-disk ring description: a JSON object with keys "field", "variables",
// "relations", and "ideals" (name → array of expression strings).
struct RingDocument {
  std::string field = "rational";
  std::vector<std::string> variables;
  std::vector<std::string> relations;
  std::map<std::string, std::vector<std::string>> ideals;
};

RingDocument parse_ring_document(const std::string& json_text);
std::string emit_ring_document(const RingDocument& doc);

struct CompiledRing {
  RingPtr ring;
  std::map<std::string, IdealHandle> ideals;
  std::vector<std::string> warnings;
};

CompiledRing compile_ring_document(const RingDocument& doc,
                                   std::optional<Field> field_override = {});

}  // namespace sally

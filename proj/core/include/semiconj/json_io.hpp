#pragma once

#include <nlohmann/json.hpp>
#include <string>
#include <variant>
#include <vector>

#include "semiconj/character_table.hpp"
#include "semiconj/conjugacy.hpp"
#include "semiconj/partial_injection.hpp"
#include "semiconj/representations.hpp"
#include "semiconj/semigroup.hpp"
#include "semiconj/transformation.hpp"

namespace semiconj {

  using json = nlohmann::ordered_json;

  /// {"order", "table", "names"?, "identity"?} in that key order.
  json to_json(FiniteSemigroup const& S);

  /// Validates the table fully (associativity included). A stated identity
  /// must match the detected one. Throws ParseError or the table errors.
  FiniteSemigroup semigroup_from_json(json const& j);

  /// {"degree", "images"} with null for undefined points.
  json to_json(PartialInjection const& x);
  PartialInjection partial_injection_from_json(json const& j);

  json to_json(Transformation const& x);

  using GeneratorSet
      = std::variant<std::vector<PartialInjection>, std::vector<Transformation>>;

  /// {"degree", "kind": "partial_injection" | "transformation",
  ///  "generators": [[...], ...]}.
  GeneratorSet generator_set_from_json(json const& j);
  json         to_json(GeneratorSet const& gens);

  /// {"relation", "classes", "witnesses"?}; witness hull ids are reported as
  /// element names of S^1.
  json to_json(ConjugacyPartition const& p);

  /// {"group_order", "classes": [sizes], "table": [[[re, im], ...], ...]}.
  json to_json(GroupCharacterTable const& t);

  /// {"provenance", "values": {"<id>": [re, im], ...}}.
  json to_json(CharacterVector const& chi);

  /// Stable text: objects one key per line, arrays of arrays one row per
  /// line, everything else compact. Ends with a newline.
  std::string dump(json const& j);

  /// Parses text, converting syntax errors to ParseError.
  json parse_json(std::string const& text);

}  // namespace semiconj

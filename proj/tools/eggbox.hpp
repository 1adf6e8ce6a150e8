#pragma once

#include <semiconj/json_io.hpp>
#include <semiconj/semigroup.hpp>

#include <string>
#include <vector>

namespace semiconj::cli {

  /// Text picture of one D-class: rows are R-classes, columns L-classes, and
  /// a cell lists its H-class, starred when the H-class is a group.
  std::vector<std::string> draw_eggbox(FiniteSemigroup const& S,
                                       GreensStructure const& G,
                                       DClassInfo const&      d,
                                       bool                   fancy);

  /// The same picture as data.
  json eggbox_json(FiniteSemigroup const& S,
                   GreensStructure const& G,
                   DClassInfo const&      d);

}  // namespace semiconj::cli

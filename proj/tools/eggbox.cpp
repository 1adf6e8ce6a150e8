#include "eggbox.hpp"

#include <algorithm>

namespace semiconj::cli {

  namespace {

    struct Glyphs {
      char const* horizontal;
      char const* vertical;
      // Corner and junction glyphs indexed [row kind][column kind], where
      // kind 0 is the first line, 1 an inner line and 2 the last line.
      char const* joints[3][3];
    };

    constexpr Glyphs ascii{"-", "|", {{"+", "+", "+"}, {"+", "+", "+"}, {"+", "+", "+"}}};
    constexpr Glyphs box{"─",
                         "│",
                         {{"┌", "┬", "┐"},
                          {"├", "┼", "┤"},
                          {"└", "┴", "┘"}}};

    std::string cell_text(FiniteSemigroup const& S,
                          GreensStructure const& G,
                          std::size_t            h) {
      std::string text = G.h_is_group[h] ? "*" : "";
      bool        first = true;
      for (auto x : G.H.members(h)) {
        text += (first ? "" : " ") + S.name(x);
        first = false;
      }
      return text;
    }

    std::string repeat(char const* glyph, std::size_t n) {
      std::string out;
      for (std::size_t i = 0; i < n; ++i) {
        out += glyph;
      }
      return out;
    }

  }  // namespace

  std::vector<std::string> draw_eggbox(FiniteSemigroup const& S,
                                       GreensStructure const& G,
                                       DClassInfo const&      d,
                                       bool                   fancy) {
    Glyphs const& g = fancy ? box : ascii;
    std::size_t   width = 1;
    for (auto const& row : d.eggbox) {
      for (auto h : row) {
        width = std::max(width, cell_text(S, G, h).size());
      }
    }
    std::size_t const cols = d.eggbox.front().size();
    auto rule = [&](std::size_t kind) {
      std::string line = g.joints[kind][0];
      for (std::size_t c = 0; c < cols; ++c) {
        line += repeat(g.horizontal, width + 2);
        line += g.joints[kind][c + 1 == cols ? 2 : 1];
      }
      return line;
    };

    std::vector<std::string> out{rule(0)};
    for (std::size_t r = 0; r < d.eggbox.size(); ++r) {
      std::string line = g.vertical;
      for (auto h : d.eggbox[r]) {
        auto const text = cell_text(S, G, h);
        line += " " + text + std::string(width - text.size(), ' ') + " " + g.vertical;
      }
      out.push_back(line);
      out.push_back(rule(r + 1 == d.eggbox.size() ? 2 : 1));
    }
    return out;
  }

  json eggbox_json(FiniteSemigroup const& S,
                   GreensStructure const& G,
                   DClassInfo const&      d) {
    json rows = json::array();
    for (auto const& row : d.eggbox) {
      json cells = json::array();
      for (auto h : row) {
        json members = json::array();
        for (auto x : G.H.members(h)) {
          members.push_back(S.name(x));
        }
        cells.push_back(json{{"members", members}, {"group", bool(G.h_is_group[h])}});
      }
      rows.push_back(std::move(cells));
    }
    return rows;
  }

}  // namespace semiconj::cli

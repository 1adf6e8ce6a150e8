#include "semiconj/json_io.hpp"

#include "semiconj/errors.hpp"

#include <limits>

namespace semiconj {

  namespace {

    template <typename T>
    T field(json const& j, char const* key) {
      if (!j.is_object() || !j.contains(key)) {
        throw ParseError(std::string("missing field \"") + key + "\"");
      }
      try {
        return j.at(key).get<T>();
      } catch (json::exception const& e) {
        throw ParseError(std::string("bad field \"") + key + "\": " + e.what());
      }
    }

    // nlohmann converts -1 to a huge unsigned value, so check the kind first.
    std::size_t natural(json const& v, char const* what) {
      if (!v.is_number_unsigned()) {
        throw ParseError(std::string(what) + " must be a non-negative integer");
      }
      auto const x = v.get<std::uint64_t>();
      if (x > std::numeric_limits<element_id>::max()) {
        throw ParseError(std::string(what) + " is too large");
      }
      return static_cast<std::size_t>(x);
    }

    json complex_pair(complex z) {
      auto const s = snap(z);
      return json::array({s.real(), s.imag()});
    }

    std::vector<PartialInjection::point_type> images_from(json const& row) {
      if (!row.is_array()) {
        throw ParseError("images must be an array");
      }
      std::vector<PartialInjection::point_type> out;
      for (auto const& v : row) {
        if (v.is_null()) {
          out.push_back(PartialInjection::undefined);
        } else if (v.is_number_unsigned()) {
          out.push_back(v.get<PartialInjection::point_type>());
        } else {
          throw ParseError("image entries must be non-negative integers or "
                           "null");
        }
      }
      return out;
    }

    void write(std::string& out, json const& j, int depth) {
      std::string const pad(2 * static_cast<std::size_t>(depth + 1), ' ');
      std::string const close(2 * static_cast<std::size_t>(depth), ' ');
      if (j.is_object() && !j.empty()) {
        out += "{\n";
        std::size_t i = 0;
        for (auto it = j.begin(); it != j.end(); ++it, ++i) {
          out += pad + json(it.key()).dump() + ": ";
          write(out, it.value(), depth + 1);
          out += i + 1 < j.size() ? ",\n" : "\n";
        }
        out += close + "}";
      } else if (j.is_array() && !j.empty()
                 && (j.front().is_array() || j.front().is_object())) {
        out += "[\n";
        for (std::size_t i = 0; i < j.size(); ++i) {
          out += pad;
          if (j[i].is_object()) {
            write(out, j[i], depth + 1);
          } else {
            out += j[i].dump();
          }
          out += i + 1 < j.size() ? ",\n" : "\n";
        }
        out += close + "]";
      } else {
        out += j.dump();
      }
    }

  }  // namespace

  json to_json(FiniteSemigroup const& S) {
    json j;
    j["order"] = S.order();
    j["table"] = S.table();
    if (S.has_names()) {
      j["names"] = S.names();
    }
    if (S.identity()) {
      j["identity"] = *S.identity();
    }
    return j;
  }

  FiniteSemigroup semigroup_from_json(json const& j) {
    auto const order = natural(field<json>(j, "order"), "order");
    auto const rows  = field<json>(j, "table");
    if (!rows.is_array()) {
      throw ParseError("\"table\" must be an array of rows");
    }
    FiniteSemigroup::table_type table;
    for (auto const& row : rows) {
      if (!row.is_array()) {
        throw ParseError("\"table\" must be an array of rows");
      }
      auto& out = table.emplace_back();
      for (auto const& v : row) {
        out.push_back(static_cast<element_id>(natural(v, "table entry")));
      }
    }
    if (table.size() != order) {
      throw ParseError("\"order\" is " + std::to_string(order)
                       + " but the table has " + std::to_string(table.size())
                       + " rows");
    }
    std::vector<std::string> names;
    if (j.contains("names")) {
      names = field<std::vector<std::string>>(j, "names");
    }
    auto S = FiniteSemigroup::from_table(table, std::move(names));
    if (j.contains("identity")) {
      auto const stated
          = static_cast<element_id>(natural(field<json>(j, "identity"), "identity"));
      if (S.identity() != stated) {
        throw ParseError("stated identity " + std::to_string(stated)
                         + " is not the identity of the table");
      }
    }
    return S;
  }

  json to_json(PartialInjection const& x) {
    json images = json::array();
    for (auto y : x.images()) {
      images.push_back(y == PartialInjection::undefined ? json(nullptr)
                                                        : json(y));
    }
    return json{{"degree", x.degree()}, {"images", images}};
  }

  PartialInjection partial_injection_from_json(json const& j) {
    auto const degree = field<std::size_t>(j, "degree");
    auto       images = images_from(field<json>(j, "images"));
    if (images.size() != degree) {
      throw ParseError("expected " + std::to_string(degree) + " images");
    }
    try {
      return PartialInjection(std::move(images));
    } catch (Error const& e) {
      throw ParseError(e.what());
    }
  }

  json to_json(Transformation const& x) {
    return json{{"degree", x.degree()}, {"images", x.images()}};
  }

  GeneratorSet generator_set_from_json(json const& j) {
    auto const degree = field<std::size_t>(j, "degree");
    auto const kind   = field<std::string>(j, "kind");
    if (!j.contains("generators") || !j["generators"].is_array()
        || j["generators"].empty()) {
      throw ParseError("\"generators\" must be a non-empty array");
    }
    try {
      if (kind == "partial_injection") {
        std::vector<PartialInjection> gens;
        for (auto const& row : j["generators"]) {
          auto images = images_from(row);
          if (images.size() != degree) {
            throw ParseError("generator has the wrong degree");
          }
          gens.emplace_back(std::move(images));
        }
        return gens;
      }
      if (kind == "transformation") {
        std::vector<Transformation> gens;
        for (auto const& row : j["generators"]) {
          auto images = row.get<std::vector<Transformation::point_type>>();
          if (images.size() != degree) {
            throw ParseError("generator has the wrong degree");
          }
          gens.emplace_back(std::move(images));
        }
        return gens;
      }
    } catch (json::exception const& e) {
      throw ParseError(e.what());
    } catch (ParseError const&) {
      throw;
    } catch (Error const& e) {
      throw ParseError(e.what());
    }
    throw ParseError("unknown generator kind \"" + kind + "\"");
  }

  json to_json(GeneratorSet const& gens) {
    return std::visit(
        [](auto const& list) {
          json rows = json::array();
          for (auto const& g : list) {
            rows.push_back(to_json(g)["images"]);
          }
          using T = typename std::decay_t<decltype(list)>::value_type;
          std::string const kind = std::is_same_v<T, PartialInjection>
                                       ? "partial_injection"
                                       : "transformation";
          return json{{"degree", list.front().degree()},
                      {"kind", kind},
                      {"generators", rows}};
        },
        gens);
  }

  json to_json(ConjugacyPartition const& p) {
    json j;
    j["relation"] = std::string(to_string(p.relation));
    j["classes"]  = p.partition.classes();
    if (p.witnesses) {
      json w = json::array();
      for (auto const& [x, y, witness] : *p.witnesses) {
        json entry{{"x", x}, {"y", y}};
        std::visit(
            [&](auto const& v) {
              using T = std::decay_t<decltype(v)>;
              if constexpr (std::is_same_v<T, PrimaryWitness>) {
                entry["u"] = v.u;
                entry["v"] = v.v;
              } else if constexpr (std::is_same_v<T, ActionWitness>) {
                entry["a"] = v.a;
              } else if constexpr (std::is_same_v<T, UnitWitness>) {
                entry["g"] = v.g;
              } else {
                entry["agreement"] = true;
              }
            },
            witness);
        w.push_back(std::move(entry));
      }
      j["witnesses"] = std::move(w);
    }
    return j;
  }

  json to_json(GroupCharacterTable const& t) {
    json sizes = json::array();
    for (auto const& c : t.classes.classes()) {
      sizes.push_back(c.size());
    }
    json rows = json::array();
    for (auto const& row : t.values) {
      json r = json::array();
      for (auto v : row) {
        r.push_back(complex_pair(v));
      }
      rows.push_back(std::move(r));
    }
    return json{
        {"group_order", t.group_order}, {"classes", sizes}, {"table", rows}};
  }

  json to_json(CharacterVector const& chi) {
    json values = json::object();
    for (std::size_t s = 0; s < chi.values.size(); ++s) {
      values[std::to_string(s)] = complex_pair(chi.values[s]);
    }
    return json{{"provenance", chi.provenance}, {"values", values}};
  }

  std::string dump(json const& j) {
    std::string out;
    write(out, j, 0);
    out += '\n';
    return out;
  }

  json parse_json(std::string const& text) {
    try {
      return json::parse(text);
    } catch (json::parse_error const& e) {
      throw ParseError(e.what());
    }
  }

}  // namespace semiconj

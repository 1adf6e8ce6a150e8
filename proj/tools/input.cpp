#include "input.hpp"

#include <charconv>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

namespace semiconj::cli {

  namespace {

    constexpr std::size_t guarded_degree = 5;
    constexpr std::size_t max_cyclic     = 200;
    constexpr std::size_t max_monogenic  = 1000;

    void expect_arity(std::string const&              family,
                      std::vector<std::size_t> const& params,
                      std::size_t                     arity) {
      if (params.size() != arity) {
        throw UsageError(family + " takes " + std::to_string(arity)
                         + " parameter(s), got " + std::to_string(params.size()));
      }
    }

    void expect_range(std::string const& what,
                      std::size_t        value,
                      std::size_t        lo,
                      std::size_t        hi) {
      if (value < lo || value > hi) {
        throw ParamOutOfRange(what + " must be in [" + std::to_string(lo) + ", "
                              + std::to_string(hi) + "], got "
                              + std::to_string(value));
      }
    }

    void guard_degree(std::string const& family, std::size_t n, bool force) {
      expect_range(family + " degree", n, 1, guarded_degree);
      if (n == guarded_degree && !force) {
        throw ParamOutOfRange(family + " " + std::to_string(n)
                              + " is large; pass --force to build it");
      }
    }

    std::vector<std::size_t> parse_params(std::string const& text) {
      std::vector<std::size_t> out;
      std::stringstream        ss(text);
      std::string              item;
      while (std::getline(ss, item, ',')) {
        std::size_t v = 0;
        auto const [end, ec]
            = std::from_chars(item.data(), item.data() + item.size(), v);
        if (ec != std::errc() || end != item.data() + item.size()) {
          throw UsageError("bad parameter \"" + item + "\"");
        }
        out.push_back(v);
      }
      return out;
    }

  }  // namespace

  Input build_family(std::string const&              family,
                     std::vector<std::size_t> const& params,
                     bool                            force) {
    json provenance{{"tool", "semiconj"},
                    {"family", family},
                    {"params", params}};
    if (family == "is") {
      expect_arity(family, params, 1);
      guard_degree(family, params[0], force);
      return {symmetric_inverse_monoid(params[0]).semigroup, provenance};
    }
    if (family == "t") {
      expect_arity(family, params, 1);
      guard_degree(family, params[0], force);
      return {full_transformation_monoid(params[0]), provenance};
    }
    if (family == "monogenic") {
      expect_arity(family, params, 2);
      expect_range("index", params[0], 1, max_monogenic);
      expect_range("period", params[1], 1, max_monogenic);
      expect_range("order", params[0] + params[1] - 1, 1, max_monogenic);
      return {monogenic(params[0], params[1]), provenance};
    }
    if (family == "sym") {
      expect_arity(family, params, 1);
      expect_range("sym degree", params[0], 1, guarded_degree);
      return {symmetric_group(params[0]), provenance};
    }
    if (family == "cyclic") {
      expect_arity(family, params, 1);
      expect_range("cyclic order", params[0], 1, max_cyclic);
      return {cyclic_group(params[0]), provenance};
    }
    throw UsageError("unknown family \"" + family + "\"");
  }

  Input load_input(std::string const& source, bool force) {
    auto const colon = source.find(':');
    if (colon != std::string::npos && !std::filesystem::exists(source)) {
      return build_family(source.substr(0, colon), parse_params(source.substr(colon + 1)),
                          force);
    }
    auto const doc = parse_json(read_file(source));
    json       provenance{{"file", source}};
    if (doc.is_object() && doc.contains("provenance")) {
      provenance = doc["provenance"];
    }
    return {semigroup_from_json(doc), provenance};
  }

  std::string read_file(std::string const& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
      throw IoError("cannot read " + path);
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
  }

  void write_file(std::string const& path, std::string const& text) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out || !(out << text) || !out.flush()) {
      throw IoError("cannot write " + path);
    }
  }

  std::string semigroup_file(Input const& in) {
    json       doc{{"provenance", in.provenance}};
    json const table = to_json(in.S);
    for (auto const& [key, value] : table.items()) {
      doc[key] = value;
    }
    return dump(doc);
  }

  std::string digest(FiniteSemigroup const& S) {
    auto const    text = to_json(S).dump();
    std::uint64_t h    = 0xcbf29ce484222325ULL;
    for (unsigned char c : text) {
      h ^= c;
      h *= 0x100000001b3ULL;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return std::string("fnv1a64:") + buf;
  }

}  // namespace semiconj::cli

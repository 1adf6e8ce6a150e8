#pragma once

// Conversions between library values and the plain data used by the oracles.

#include <semiconj/semiconj.hpp>

#include "oracle.hpp"

namespace support {

  inline oracle::Table table(semiconj::FiniteSemigroup const& S) {
    oracle::Table t(S.order(), std::vector<int>(S.order()));
    for (semiconj::element_id a = 0; a < S.order(); ++a) {
      for (semiconj::element_id b = 0; b < S.order(); ++b) {
        t[a][b] = static_cast<int>(S.product(a, b));
      }
    }
    return t;
  }

  inline oracle::Labels labels(semiconj::Partition const& p) {
    oracle::Labels l(p.size());
    for (auto const& c : p.classes()) {
      for (auto x : c) {
        l[x] = static_cast<int>(c.front());
      }
    }
    return l;
  }

  inline oracle::Map map(semiconj::PartialInjection const& x) {
    oracle::Map m;
    for (auto v : x.images()) {
      m.push_back(v == semiconj::PartialInjection::undefined
                      ? -1
                      : static_cast<int>(v));
    }
    return m;
  }

  inline semiconj::PartialInjection injection(oracle::Map const& m) {
    std::vector<semiconj::PartialInjection::point_type> images;
    for (int v : m) {
      images.push_back(v < 0 ? semiconj::PartialInjection::undefined
                             : static_cast<semiconj::PartialInjection::point_type>(v));
    }
    return semiconj::PartialInjection(std::move(images));
  }

  /// Partial injection from "a->b" pairs on the given degree.
  inline semiconj::PartialInjection
  pi(std::size_t degree, std::initializer_list<std::pair<int, int>> pairs) {
    oracle::Map m(degree, -1);
    for (auto [a, b] : pairs) {
      m[static_cast<std::size_t>(a)] = b;
    }
    return injection(m);
  }

}  // namespace support

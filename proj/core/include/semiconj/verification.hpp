#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "semiconj/character_table.hpp"
#include "semiconj/conjugacy.hpp"
#include "semiconj/representations.hpp"
#include "semiconj/semigroup.hpp"

namespace semiconj {

  /// The non-regular counterexample: the closure of uv ~ vu separates a pair
  /// that the characters cannot tell apart.
  struct Example1Report {
    bool                      regular = false;
    bool                      tilde_trivial = false;
    std::size_t               tilde_classes = 0;
    /// First pair (x, y), x < y, that is character-equivalent with a
    /// certificate but not related by the closure.
    std::optional<element_id> x, y;
    std::string               certificate;

    /// The closure is trivial and yet some pair is certified equivalent.
    bool passed() const noexcept {
      return tilde_trivial && x.has_value();
    }
  };

  Example1Report verify_example1(FiniteSemigroup const& S,
                                 std::uint64_t          seed = default_seed);

  /// Finite regular: the closure equals character conjugacy. Finite inverse:
  /// additionally equals the action closure.
  struct CorollaryReport {
    bool                          regular = false;
    bool                          inverse = false;
    std::optional<Theorem1Report> theorem1;
    std::optional<Theorem2Report> theorem2;
    /// For inverse semigroups: the three partitions coincide.
    std::optional<bool>           three_way_equal;

    bool hypothesis_met() const noexcept {
      return regular;
    }

    bool passed() const noexcept {
      return regular && theorem1 && theorem1->passed()
             && (!inverse
                 || (theorem2 && theorem2->passed() && three_way_equal.value_or(false)));
    }
  };

  CorollaryReport verify_corollaries(FiniteSemigroup const& S,
                                     std::uint64_t          seed = default_seed);

}  // namespace semiconj

#pragma once

#include <cstddef>
#include <vector>

#include "semiconj/partial_injection.hpp"
#include "semiconj/semigroup.hpp"
#include "semiconj/transformation.hpp"

namespace semiconj {

  /// <x : x^index = x^(index+period)>, of order index + period - 1. The
  /// element with id k is x^(k+1).
  FiniteSemigroup monogenic(std::size_t index, std::size_t period);

  /// Z/n with id k standing for g^k, so the identity is 0.
  FiniteSemigroup cyclic_group(std::size_t n);

  /// S_n acting on {0..n-1}, permutations in lexicographic order (identity
  /// first).
  FiniteSemigroup symmetric_group(std::size_t n);

  /// All maps of {0..n-1}, ordered lexicographically by image sequence.
  FiniteSemigroup full_transformation_monoid(std::size_t n);

  /// T(n) as concrete maps in the same order as full_transformation_monoid.
  std::vector<Transformation> all_transformations(std::size_t n);

  /// Generators of T(n): a transposition, an n-cycle, and the map 1 -> 0.
  std::vector<Transformation> T_generators(std::size_t n);

  /// IS(n) with elements ordered as full_IS(n).
  ConcreteInverseSemigroup symmetric_inverse_monoid(std::size_t n);

}  // namespace semiconj

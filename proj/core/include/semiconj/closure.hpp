#pragma once

#include <cstddef>
#include <unordered_map>
#include <utility>
#include <vector>

#include "semiconj/errors.hpp"
#include "semiconj/semigroup.hpp"

namespace semiconj {

  inline constexpr std::size_t default_closure_budget = 1'000'000;

  /// Result of enumerating the semigroup generated by concrete elements.
  template <typename T>
  struct Closure {
    FiniteSemigroup semigroup;
    /// elements[id] is the concrete element with that id.
    std::vector<T> elements;
    /// words[id] lists generator indices whose product is elements[id].
    std::vector<std::vector<std::size_t>> words;
  };

  /// Breadth-first closure of `generators` under `multiply`, which must be
  /// associative. Ids are assigned in discovery order: first the distinct
  /// generators, then right multiples by generators level by level.
  ///
  /// The table is filled by walking the right Cayley graph along the word of
  /// the right factor, so each entry costs one lookup per letter.
  ///
  /// Throws ClosureBudgetExceeded if more than `budget` elements appear.
  template <typename T, typename Multiply, typename Hash = std::hash<T>>
  Closure<T> closure_from_generators(std::vector<T> const& generators,
                                     Multiply              multiply,
                                     std::size_t budget = default_closure_budget) {
    if (generators.empty()) {
      throw Error("closure needs at least one generator");
    }
    std::vector<T>                        elements;
    std::vector<std::vector<std::size_t>> words;
    std::unordered_map<T, element_id, Hash> index;

    auto add = [&](T const& x, std::vector<std::size_t> word) {
      auto [it, inserted]
          = index.emplace(x, static_cast<element_id>(elements.size()));
      if (inserted) {
        if (elements.size() == budget) {
          throw ClosureBudgetExceeded("closure exceeds "
                                      + std::to_string(budget) + " elements");
        }
        elements.push_back(x);
        words.push_back(std::move(word));
      }
      return it->second;
    };

    std::size_t const       k = generators.size();
    std::vector<element_id> gen_id(k);
    for (std::size_t g = 0; g < k; ++g) {
      gen_id[g] = add(generators[g], {g});
    }

    std::vector<std::vector<element_id>> right;
    for (std::size_t i = 0; i < elements.size(); ++i) {
      right.emplace_back(k);
      for (std::size_t g = 0; g < k; ++g) {
        auto word = words[i];
        word.push_back(g);
        // `elements` may reallocate inside add, so copy the operand first.
        T const x   = elements[i];
        right[i][g] = add(multiply(x, generators[g]), std::move(word));
      }
    }

    std::size_t const       n = elements.size();
    std::vector<element_id> flat(n * n);
    for (element_id s = 0; s < n; ++s) {
      for (element_id t = 0; t < n; ++t) {
        element_id p = s;
        for (std::size_t g : words[t]) {
          p = right[p][g];
        }
        flat[s * n + t] = p;
      }
    }
    auto S = FiniteSemigroup::from_flat(n, std::move(flat), {},
                                        Validation::trusted);
    return Closure<T>{std::move(S), std::move(elements), std::move(words)};
  }

}  // namespace semiconj

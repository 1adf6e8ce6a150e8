#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "semiconj/partial_injection.hpp"
#include "semiconj/partition.hpp"
#include "semiconj/semigroup.hpp"

namespace semiconj {

  enum class Relation { primary_closure, action, character, group_units };

  std::string_view to_string(Relation r) noexcept;

  /// x = uv and y = vu; u and v are ids in the monoid hull S^1.
  struct PrimaryWitness {
    element_id u, v;
    bool       operator==(PrimaryWitness const&) const = default;
  };

  /// y = a.x for a in S^1.
  struct ActionWitness {
    element_id a;
    bool       operator==(ActionWitness const&) const = default;
  };

  /// y = g x g^-1 for a unit g.
  struct UnitWitness {
    element_id g;
    bool       operator==(UnitWitness const&) const = default;
  };

  /// x and y agree on every character of the separating family.
  struct CharacterWitness {
    bool operator==(CharacterWitness const&) const = default;
  };

  using Witness
      = std::variant<PrimaryWitness, ActionWitness, UnitWitness, CharacterWitness>;

  /// One union performed while building a partition, with its evidence.
  struct MergeRecord {
    element_id x, y;
    Witness    witness;
  };

  struct ConjugacyPartition {
    Relation                                relation;
    Partition                               partition;
    std::optional<std::vector<MergeRecord>> witnesses;
  };

  /// Witness storage policy; `automatic` stores witnesses for order <= 300.
  enum class Witnesses { automatic, on, off };

  inline constexpr std::size_t witness_order_limit = 300;

  /// Least (u, v) in S^1 x S^1 with x = uv, y = vu, scanning the identity
  /// first and then ids in increasing order.
  std::optional<PrimaryWitness> primary_related(FiniteSemigroup const& S,
                                                element_id             x,
                                                element_id             y);
  std::optional<PrimaryWitness> primary_related(MonoidHull const& hull,
                                                element_id        x,
                                                element_id        y);

  /// Transitive closure of the uv ~ vu relation over S^1, reported on S.
  ConjugacyPartition tilde_classes(FiniteSemigroup const& S,
                                   Witnesses w = Witnesses::automatic);

  /// Orbits of the units under x -> g x g^-1. Throws NoIdentity.
  ConjugacyPartition g_conjugacy_classes(FiniteSemigroup const& S,
                                         Witnesses w = Witnesses::automatic);

  /// z = a.x = b.y with a, b in S^1.
  struct OneStepWitness {
    element_id z, a, b;
    /// True if found by the constructive route (z = x e_x, a = e_x,
    /// b = t e_y with t in L_{e_y} and R_{e_x}) rather than by scanning.
    bool from_recipe = false;
  };

  /// The partial conjugation action of S^1 on an inverse semigroup S:
  /// a.x = a x a^-1 when a^-1 a >= e_x. Owns its data.
  class ConjugationAction {
   public:
    /// Throws NotInverse.
    explicit ConjugationAction(FiniteSemigroup const& S);

    MonoidHull const& hull() const noexcept {
      return _hull;
    }

    std::size_t order() const noexcept {
      return _hull.base_order;
    }

    /// Inverse in S^1.
    element_id inverse(element_id a) const {
      return _inverse[a];
    }

    element_id idempotent_power(element_id x) const {
      return _e[x];
    }

    /// a.x for a in S^1 and x in S, or nothing if the guard fails.
    std::optional<element_id> act(element_id a, element_id x) const;

    /// Least-id witness search, trying the constructive route first.
    std::optional<OneStepWitness> one_step_witness(element_id x,
                                                   element_id y) const;

    /// Transitive closure of the action relation.
    ConjugacyPartition classes(Witnesses w = Witnesses::automatic) const;

   private:
    MonoidHull              _hull;
    std::vector<element_id> _inverse;
    std::vector<element_id> _e;
    Partition               _R, _L;
  };

  /// Throws NotInverse.
  ConjugacyPartition action_classes(FiniteSemigroup const& S,
                                    Witnesses w = Witnesses::automatic);

  /// Throws NotInverse.
  std::optional<OneStepWitness>
  one_step_witness(FiniteSemigroup const& S, element_id x, element_id y);

  /// Re-checks every stored witness of `p`; returns the number that fail.
  std::size_t count_invalid_witnesses(FiniteSemigroup const&    S,
                                      ConjugacyPartition const& p);

  /// The composition law of the action on an abstract inverse semigroup:
  /// (ba).x is defined iff a.x and b.(a.x) are, and then they agree. Runs
  /// over all a, b in S^1 and x in S. Throws NotInverse.
  Lemma1Report verify_action_composition(FiniteSemigroup const& S);

  /// Same law on `samples` triples drawn uniformly with the given seed.
  Lemma1Report verify_action_composition(FiniteSemigroup const& S,
                                         std::size_t            samples,
                                         std::uint64_t          seed);

  struct Theorem2Report {
    std::size_t order            = 0;
    std::size_t tilde_classes    = 0;
    std::size_t action_classes   = 0;
    bool        partitions_equal = false;
    std::size_t pairs            = 0;
    std::size_t witnessed_pairs  = 0;
    std::size_t recipe_hits      = 0;
    std::size_t failures         = 0;
    std::string counterexample;

    bool passed() const noexcept {
      return partitions_equal && failures == 0;
    }
  };

  /// Checks that the closure of uv ~ vu equals the action closure and that
  /// one-step witnesses exist exactly for related pairs. Throws NotInverse.
  Theorem2Report verify_theorem2(FiniteSemigroup const& S);

}  // namespace semiconj

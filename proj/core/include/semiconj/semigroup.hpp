#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "semiconj/partition.hpp"

namespace semiconj {

  enum class Validation {
    /// O(n^3) associativity check.
    full,
    /// Skip the associativity check; for families that are associative by
    /// construction.
    trusted
  };

  /// A finite semigroup given by its multiplication table. Elements are the
  /// dense ids 0..order()-1. Immutable after construction.
  class FiniteSemigroup {
   public:
    using table_type = std::vector<std::vector<element_id>>;

    /// Validates shape, range and (unless trusted) associativity, and
    /// detects a two-sided identity.
    ///
    /// Throws IndexOutOfRange for malformed tables and AssociativityViolation
    /// with the least witness triple (a, b, c) in lexicographic order.
    static FiniteSemigroup from_table(table_type const&         table,
                                      std::vector<std::string> names = {},
                                      Validation check = Validation::full);

    /// Same as from_table on a row-major flat table.
    static FiniteSemigroup from_flat(std::size_t               order,
                                     std::vector<element_id>  flat,
                                     std::vector<std::string> names = {},
                                     Validation check = Validation::full);

    std::size_t order() const noexcept {
      return _order;
    }

    element_id product(element_id a, element_id b) const {
      return _table[a * _order + b];
    }

    std::optional<element_id> identity() const noexcept {
      return _identity;
    }

    bool is_idempotent(element_id x) const {
      return product(x, x) == x;
    }

    std::vector<element_id> idempotents() const;

    /// x^k for k >= 1.
    element_id power(element_id x, std::size_t k) const;

    bool has_names() const noexcept {
      return !_names.empty();
    }

    std::vector<std::string> const& names() const noexcept {
      return _names;
    }

    /// The stored label, or the decimal id if no labels were supplied.
    std::string name(element_id x) const;

    table_type table() const;

    bool operator==(FiniteSemigroup const& other) const {
      return _order == other._order && _table == other._table
             && _names == other._names;
    }

   private:
    FiniteSemigroup() = default;

    std::size_t               _order = 0;
    std::vector<element_id>   _table;
    std::vector<std::string>  _names;
    std::optional<element_id> _identity;
  };

  /// S with an identity adjoined if it has none (S^1). Ids of S are kept;
  /// an adjoined identity gets id S.order().
  struct MonoidHull {
    FiniteSemigroup         hull;
    element_id              one;
    bool                    adjoined;
    std::size_t             base_order;
    std::vector<element_id> embed;

    bool in_base(element_id h) const noexcept {
      return h < base_order;
    }

    /// All hull ids with the identity first, then the rest in id order.
    /// Quantifier loops over S^1 use this order, so ties are broken in favour
    /// of the identity.
    std::vector<element_id> identity_first() const;
  };

  MonoidHull monoid_hull(FiniteSemigroup const& S);

  /// Per-element index, period and idempotent power.
  struct PowerData {
    std::vector<std::size_t> index;
    std::vector<std::size_t> period;
    std::vector<element_id>  idempotent_power;
  };

  PowerData power_data(FiniteSemigroup const& S);

  /// Metadata of one D-class. Rows of the eggbox are its R-classes and columns
  /// its L-classes, both in order of least member; entries are H-class numbers.
  struct DClassInfo {
    std::vector<element_id>               members;
    std::vector<element_id>               idempotents;
    bool                                  regular = false;
    std::vector<std::size_t>              r_classes;
    std::vector<std::size_t>              l_classes;
    std::vector<std::vector<std::size_t>> eggbox;
  };

  struct GreensStructure {
    Partition               R, L, J, H, D;
    std::vector<DClassInfo> d_classes;

    /// H-classes that contain an idempotent (hence are groups).
    std::vector<bool> h_is_group;
  };

  /// Green's relations computed from principal ideals over S^1.
  GreensStructure greens(FiniteSemigroup const& S);

  bool is_regular(FiniteSemigroup const& S);
  bool is_inverse(FiniteSemigroup const& S);

  /// The unique b with aba = a and bab = b. Throws NotInverse.
  element_id unique_inverse(FiniteSemigroup const& S, element_id a);

  /// Least b with aba = a and bab = b, if any.
  std::optional<element_id> least_inverse(FiniteSemigroup const& S,
                                          element_id             a);

  /// Cached inverse data of an inverse semigroup. Holds a reference to the
  /// semigroup, which must outlive it.
  class InverseStructure {
   public:
    /// Throws NotInverse.
    explicit InverseStructure(FiniteSemigroup const& S);

    FiniteSemigroup const& semigroup() const noexcept {
      return _S;
    }

    element_id inverse(element_id a) const {
      return _inverse[a];
    }

    /// a >= b in the natural partial order, i.e. b = ae for an idempotent e.
    bool geq(element_id a, element_id b) const;

   private:
    FiniteSemigroup const&  _S;
    std::vector<element_id> _inverse;
  };

  /// a >= b in the natural partial order of an inverse semigroup.
  /// Throws NotInverse.
  bool natural_order_geq(FiniteSemigroup const& S, element_id a, element_id b);

  struct Subgroup {
    FiniteSemigroup         group;
    std::vector<element_id> to_parent;
  };

  /// H_e as a standalone group; local ids follow increasing parent ids.
  /// Throws NotIdempotent.
  Subgroup maximal_subgroup(FiniteSemigroup const& S,
                            GreensStructure const& G,
                            element_id             e);
  Subgroup maximal_subgroup(FiniteSemigroup const& S, element_id e);

}  // namespace semiconj

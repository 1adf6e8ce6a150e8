#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace semiconj {

  using element_id = std::uint32_t;

  /// Disjoint-set forest over 0..n-1 with union by rank and path halving.
  /// Each root also remembers the least member of its set, so canonical
  /// representatives do not depend on the order of merges.
  class UnionFind {
   public:
    explicit UnionFind(std::size_t n);

    std::size_t size() const noexcept {
      return _parent.size();
    }

    element_id find(element_id x);

    /// Returns true if x and y were in different sets.
    bool unite(element_id x, element_id y);

    /// Least member of the set containing x.
    element_id least(element_id x) {
      return _least[find(x)];
    }

   private:
    std::vector<element_id>    _parent;
    std::vector<std::uint8_t>  _rank;
    std::vector<element_id>    _least;
  };

  /// An equivalence relation on 0..n-1, stored as classes sorted by least
  /// member; members within a class are increasing.
  class Partition {
   public:
    Partition() = default;

    /// Discrete partition of n points.
    static Partition discrete(std::size_t n);

    /// Builds from a class label per point (labels are arbitrary integers);
    /// classes are renumbered by least member.
    static Partition from_labels(std::span<std::size_t const> labels);

    static Partition from_union_find(UnionFind& uf);

    std::size_t size() const noexcept {
      return _class_of.size();
    }

    std::size_t number_of_classes() const noexcept {
      return _classes.size();
    }

    std::size_t class_of(element_id x) const {
      return _class_of.at(x);
    }

    std::vector<element_id> const& members(std::size_t c) const {
      return _classes.at(c);
    }

    std::vector<std::vector<element_id>> const& classes() const noexcept {
      return _classes;
    }

    bool same(element_id x, element_id y) const {
      return _class_of.at(x) == _class_of.at(y);
    }

    /// True if every class of *this lies inside a class of coarser.
    bool refines(Partition const& coarser) const;

    /// Classes of the meet (common refinement).
    Partition meet(Partition const& other) const;

    /// Classes of the join (finest common coarsening).
    Partition join(Partition const& other) const;

    /// Sorted class sizes, largest first.
    std::vector<std::size_t> class_sizes() const;

    bool operator==(Partition const& other) const {
      return _class_of == other._class_of;
    }

   private:
    std::vector<std::size_t>             _class_of;
    std::vector<std::vector<element_id>> _classes;
  };

}  // namespace semiconj

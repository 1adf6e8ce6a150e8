#include <cstdint>
#include <limits>
#include <map>

#include "semiconj/semigroup.hpp"

namespace semiconj {

  namespace {

    using Bitset = std::vector<std::uint64_t>;

    Bitset make_bitset(std::size_t n) {
      return Bitset((n + 63) / 64, 0);
    }

    void set_bit(Bitset& b, std::size_t i) {
      b[i / 64] |= std::uint64_t(1) << (i % 64);
    }

    bool test_bit(Bitset const& b, std::size_t i) {
      return (b[i / 64] >> (i % 64)) & 1U;
    }

    Partition partition_by_equal_sets(std::vector<Bitset> const& sets) {
      std::map<Bitset, std::size_t> label_of;
      std::vector<std::size_t>      labels(sets.size());
      for (std::size_t x = 0; x < sets.size(); ++x) {
        labels[x] = label_of.emplace(sets[x], label_of.size()).first->second;
      }
      return Partition::from_labels(labels);
    }

  }  // namespace

  GreensStructure greens(FiniteSemigroup const& S) {
    std::size_t const   n = S.order();
    std::vector<Bitset> right(n, make_bitset(n));
    std::vector<Bitset> left(n, make_bitset(n));
    for (element_id x = 0; x < n; ++x) {
      set_bit(right[x], x);
      set_bit(left[x], x);
      for (element_id s = 0; s < n; ++s) {
        set_bit(right[x], S.product(x, s));
        set_bit(left[x], S.product(s, x));
      }
    }
    // S^1 x S^1 is the union of the left ideals of the members of x S^1.
    std::vector<Bitset> twosided(n, make_bitset(n));
    for (element_id x = 0; x < n; ++x) {
      for (element_id y = 0; y < n; ++y) {
        if (test_bit(right[x], y)) {
          for (std::size_t w = 0; w < twosided[x].size(); ++w) {
            twosided[x][w] |= left[y][w];
          }
        }
      }
    }

    GreensStructure G;
    G.R = partition_by_equal_sets(right);
    G.L = partition_by_equal_sets(left);
    G.J = partition_by_equal_sets(twosided);
    G.H = G.R.meet(G.L);
    G.D = G.R.join(G.L);

    G.h_is_group.assign(G.H.number_of_classes(), false);
    for (element_id x = 0; x < n; ++x) {
      if (S.is_idempotent(x)) {
        G.h_is_group[G.H.class_of(x)] = true;
      }
    }

    constexpr auto unset = std::numeric_limits<std::size_t>::max();
    for (auto const& members : G.D.classes()) {
      DClassInfo info;
      info.members = members;
      std::map<std::size_t, std::size_t> row_of, col_of;
      for (element_id x : members) {
        if (S.is_idempotent(x)) {
          info.idempotents.push_back(x);
        }
        // Members are increasing, so first appearance orders R- and
        // L-classes by least member.
        auto r = G.R.class_of(x);
        if (row_of.emplace(r, info.r_classes.size()).second) {
          info.r_classes.push_back(r);
        }
        auto l = G.L.class_of(x);
        if (col_of.emplace(l, info.l_classes.size()).second) {
          info.l_classes.push_back(l);
        }
      }
      info.regular = !info.idempotents.empty();
      info.eggbox.assign(info.r_classes.size(),
                         std::vector<std::size_t>(info.l_classes.size(), unset));
      for (element_id x : members) {
        info.eggbox[row_of[G.R.class_of(x)]][col_of[G.L.class_of(x)]]
            = G.H.class_of(x);
      }
      G.d_classes.push_back(std::move(info));
    }
    return G;
  }

}  // namespace semiconj

#include "semiconj/semigroup.hpp"

#include <algorithm>
#include <limits>
#include <numeric>

#include "semiconj/errors.hpp"

namespace semiconj {

  FiniteSemigroup FiniteSemigroup::from_table(table_type const&        table,
                                              std::vector<std::string> names,
                                              Validation               check) {
    std::size_t const       n = table.size();
    std::vector<element_id> flat;
    flat.reserve(n * n);
    for (std::size_t row = 0; row < n; ++row) {
      if (table[row].size() != n) {
        throw IndexOutOfRange("table row " + std::to_string(row) + " has "
                              + std::to_string(table[row].size())
                              + " entries, expected " + std::to_string(n));
      }
      flat.insert(flat.end(), table[row].begin(), table[row].end());
    }
    return from_flat(n, std::move(flat), std::move(names), check);
  }

  FiniteSemigroup FiniteSemigroup::from_flat(std::size_t              order,
                                             std::vector<element_id>  flat,
                                             std::vector<std::string> names,
                                             Validation               check) {
    if (order == 0) {
      throw IndexOutOfRange("a semigroup must have at least one element");
    }
    if (flat.size() != order * order) {
      throw IndexOutOfRange("table has " + std::to_string(flat.size())
                            + " entries, expected "
                            + std::to_string(order * order));
    }
    if (!names.empty() && names.size() != order) {
      throw IndexOutOfRange("expected " + std::to_string(order)
                            + " names, got " + std::to_string(names.size()));
    }
    for (std::size_t i = 0; i < flat.size(); ++i) {
      if (flat[i] >= order) {
        throw IndexOutOfRange("table entry (" + std::to_string(i / order)
                              + ", " + std::to_string(i % order)
                              + ") = " + std::to_string(flat[i])
                              + " is out of range");
      }
    }

    FiniteSemigroup S;
    S._order = order;
    S._table = std::move(flat);
    S._names = std::move(names);

    if (check == Validation::full) {
      for (element_id a = 0; a < order; ++a) {
        for (element_id b = 0; b < order; ++b) {
          element_id const ab = S.product(a, b);
          for (element_id c = 0; c < order; ++c) {
            if (S.product(ab, c) != S.product(a, S.product(b, c))) {
              throw AssociativityViolation(a, b, c);
            }
          }
        }
      }
    }

    for (element_id e = 0; e < order; ++e) {
      bool is_one = true;
      for (element_id x = 0; x < order && is_one; ++x) {
        is_one = S.product(e, x) == x && S.product(x, e) == x;
      }
      if (is_one) {
        S._identity = e;
        break;
      }
    }
    return S;
  }

  std::vector<element_id> FiniteSemigroup::idempotents() const {
    std::vector<element_id> out;
    for (element_id x = 0; x < _order; ++x) {
      if (is_idempotent(x)) {
        out.push_back(x);
      }
    }
    return out;
  }

  element_id FiniteSemigroup::power(element_id x, std::size_t k) const {
    element_id y = x;
    for (std::size_t i = 1; i < k; ++i) {
      y = product(y, x);
    }
    return y;
  }

  std::string FiniteSemigroup::name(element_id x) const {
    return _names.empty() ? std::to_string(x) : _names.at(x);
  }

  FiniteSemigroup::table_type FiniteSemigroup::table() const {
    table_type out(_order);
    for (std::size_t row = 0; row < _order; ++row) {
      out[row].assign(_table.begin() + row * _order,
                      _table.begin() + (row + 1) * _order);
    }
    return out;
  }

  std::vector<element_id> MonoidHull::identity_first() const {
    std::vector<element_id> out;
    out.reserve(hull.order());
    out.push_back(one);
    for (element_id h = 0; h < hull.order(); ++h) {
      if (h != one) {
        out.push_back(h);
      }
    }
    return out;
  }

  MonoidHull monoid_hull(FiniteSemigroup const& S) {
    std::size_t const       n = S.order();
    std::vector<element_id> embed(n);
    std::iota(embed.begin(), embed.end(), element_id(0));
    if (S.identity()) {
      return MonoidHull{S, *S.identity(), false, n, std::move(embed)};
    }
    auto const              one = static_cast<element_id>(n);
    std::vector<element_id> flat((n + 1) * (n + 1));
    for (element_id a = 0; a <= n; ++a) {
      for (element_id b = 0; b <= n; ++b) {
        element_id p;
        if (a == one) {
          p = b;
        } else if (b == one) {
          p = a;
        } else {
          p = S.product(a, b);
        }
        flat[a * (n + 1) + b] = p;
      }
    }
    std::vector<std::string> names;
    if (S.has_names()) {
      names = S.names();
      names.emplace_back("1");
    }
    auto hull = FiniteSemigroup::from_flat(
        n + 1, std::move(flat), std::move(names), Validation::trusted);
    return MonoidHull{std::move(hull), one, true, n, std::move(embed)};
  }

  PowerData power_data(FiniteSemigroup const& S) {
    std::size_t const n = S.order();
    PowerData         pd;
    pd.index.resize(n);
    pd.period.resize(n);
    pd.idempotent_power.resize(n);

    // seen[y] = k means y = x^k; a repeat must occur within n + 1 powers.
    std::vector<std::size_t> seen(n, 0);
    std::vector<element_id>  visited;
    for (element_id x = 0; x < n; ++x) {
      element_id  y = x;
      std::size_t k = 1;
      while (seen[y] == 0) {
        seen[y] = k;
        visited.push_back(y);
        y = S.product(y, x);
        ++k;
      }
      std::size_t const index  = seen[y];
      std::size_t const period = k - index;
      pd.index[x]              = index;
      pd.period[x]             = period;
      // The cyclic part {x^index, ..., x^(index+period-1)} is a group with
      // exactly one idempotent.
      for (std::size_t j = index - 1; j < visited.size(); ++j) {
        if (S.is_idempotent(visited[j])) {
          pd.idempotent_power[x] = visited[j];
          break;
        }
      }
      for (element_id v : visited) {
        seen[v] = 0;
      }
      visited.clear();
    }
    return pd;
  }

  bool is_regular(FiniteSemigroup const& S) {
    for (element_id x = 0; x < S.order(); ++x) {
      bool found = false;
      for (element_id y = 0; y < S.order() && !found; ++y) {
        found = S.product(S.product(x, y), x) == x;
      }
      if (!found) {
        return false;
      }
    }
    return true;
  }

  bool is_inverse(FiniteSemigroup const& S) {
    if (!is_regular(S)) {
      return false;
    }
    auto const E = S.idempotents();
    for (element_id e : E) {
      for (element_id f : E) {
        if (S.product(e, f) != S.product(f, e)) {
          return false;
        }
      }
    }
    return true;
  }

  std::optional<element_id> least_inverse(FiniteSemigroup const& S,
                                          element_id             a) {
    for (element_id b = 0; b < S.order(); ++b) {
      if (S.product(S.product(a, b), a) == a
          && S.product(S.product(b, a), b) == b) {
        return b;
      }
    }
    return std::nullopt;
  }

  element_id unique_inverse(FiniteSemigroup const& S, element_id a) {
    if (!is_inverse(S)) {
      throw NotInverse("semigroup is not inverse");
    }
    return *least_inverse(S, a);
  }

  InverseStructure::InverseStructure(FiniteSemigroup const& S)
      : _S(S), _inverse(S.order()) {
    if (!is_inverse(S)) {
      throw NotInverse("semigroup is not inverse");
    }
    for (element_id a = 0; a < S.order(); ++a) {
      _inverse[a] = *least_inverse(S, a);
    }
  }

  bool InverseStructure::geq(element_id a, element_id b) const {
    // b = ae for some idempotent e iff b = a(b^-1 b).
    return _S.product(a, _S.product(_inverse[b], b)) == b;
  }

  bool natural_order_geq(FiniteSemigroup const& S,
                         element_id             a,
                         element_id             b) {
    return InverseStructure(S).geq(a, b);
  }

  Subgroup maximal_subgroup(FiniteSemigroup const& S,
                            GreensStructure const& G,
                            element_id             e) {
    if (!S.is_idempotent(e)) {
      throw NotIdempotent("element " + std::to_string(e)
                          + " is not an idempotent");
    }
    auto const& members = G.H.members(G.H.class_of(e));
    constexpr auto absent = std::numeric_limits<element_id>::max();
    std::vector<element_id> local(S.order(), absent);
    for (std::size_t i = 0; i < members.size(); ++i) {
      local[members[i]] = static_cast<element_id>(i);
    }
    std::size_t const       k = members.size();
    std::vector<element_id> flat(k * k);
    for (std::size_t i = 0; i < k; ++i) {
      for (std::size_t j = 0; j < k; ++j) {
        flat[i * k + j] = local[S.product(members[i], members[j])];
      }
    }
    std::vector<std::string> names;
    if (S.has_names()) {
      for (element_id x : members) {
        names.push_back(S.name(x));
      }
    }
    // H-classes containing an idempotent are closed, so no entry is absent.
    auto group = FiniteSemigroup::from_flat(
        k, std::move(flat), std::move(names), Validation::trusted);
    return Subgroup{std::move(group), members};
  }

  Subgroup maximal_subgroup(FiniteSemigroup const& S, element_id e) {
    return maximal_subgroup(S, greens(S), e);
  }

}  // namespace semiconj

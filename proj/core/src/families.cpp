#include "semiconj/families.hpp"

#include <algorithm>
#include <numeric>

#include "semiconj/errors.hpp"

namespace semiconj {

  FiniteSemigroup monogenic(std::size_t index, std::size_t period) {
    if (index == 0 || period == 0) {
      throw IndexOutOfRange("index and period must be positive");
    }
    std::size_t const n = index + period - 1;
    // x^a x^b = x^(a+b), folded back into [index, index+period).
    auto reduce = [&](std::size_t k) {
      while (k > n) {
        k -= period;
      }
      return k;
    };
    std::vector<element_id>  flat(n * n);
    std::vector<std::string> names(n);
    for (std::size_t a = 1; a <= n; ++a) {
      names[a - 1] = a == 1 ? std::string("x") : "x^" + std::to_string(a);
      for (std::size_t b = 1; b <= n; ++b) {
        flat[(a - 1) * n + (b - 1)]
            = static_cast<element_id>(reduce(a + b) - 1);
      }
    }
    return FiniteSemigroup::from_flat(n, std::move(flat), std::move(names),
                                      Validation::trusted);
  }

  FiniteSemigroup cyclic_group(std::size_t n) {
    if (n == 0) {
      throw IndexOutOfRange("group order must be positive");
    }
    std::vector<element_id>  flat(n * n);
    std::vector<std::string> names(n);
    for (std::size_t a = 0; a < n; ++a) {
      names[a] = a == 0 ? std::string("1")
                        : (a == 1 ? std::string("g") : "g^" + std::to_string(a));
      for (std::size_t b = 0; b < n; ++b) {
        flat[a * n + b] = static_cast<element_id>((a + b) % n);
      }
    }
    return FiniteSemigroup::from_flat(n, std::move(flat), std::move(names),
                                      Validation::trusted);
  }

  namespace {

    FiniteSemigroup table_of(std::vector<Transformation> const& elems,
                             auto                               index_of) {
      std::size_t const        n = elems.size();
      std::vector<element_id>  flat(n * n);
      std::vector<std::string> names(n);
      for (std::size_t a = 0; a < n; ++a) {
        names[a] = elems[a].to_string();
        for (std::size_t b = 0; b < n; ++b) {
          flat[a * n + b] = index_of(compose(elems[a], elems[b]));
        }
      }
      return FiniteSemigroup::from_flat(n, std::move(flat), std::move(names),
                                        Validation::trusted);
    }

  }  // namespace

  FiniteSemigroup symmetric_group(std::size_t n) {
    if (n == 0) {
      throw IndexOutOfRange("degree must be positive");
    }
    std::vector<Transformation::point_type> perm(n);
    std::iota(perm.begin(), perm.end(), 0U);
    std::vector<Transformation> elems;
    do {
      elems.emplace_back(perm);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return table_of(elems, [&](Transformation const& x) {
      auto it = std::lower_bound(elems.begin(), elems.end(), x);
      return static_cast<element_id>(it - elems.begin());
    });
  }

  std::vector<Transformation> all_transformations(std::size_t n) {
    if (n == 0) {
      throw IndexOutOfRange("degree must be positive");
    }
    std::size_t total = 1;
    for (std::size_t i = 0; i < n; ++i) {
      total *= n;
    }
    std::vector<Transformation> out;
    out.reserve(total);
    std::vector<Transformation::point_type> images(n);
    for (std::size_t code = 0; code < total; ++code) {
      // Most significant digit is the image of 0, giving lexicographic order.
      std::size_t c = code;
      for (std::size_t t = n; t-- > 0;) {
        images[t] = static_cast<Transformation::point_type>(c % n);
        c /= n;
      }
      out.emplace_back(images);
    }
    return out;
  }

  FiniteSemigroup full_transformation_monoid(std::size_t n) {
    auto const elems = all_transformations(n);
    return table_of(elems, [n](Transformation const& x) {
      std::size_t code = 0;
      for (auto y : x.images()) {
        code = code * n + y;
      }
      return static_cast<element_id>(code);
    });
  }

  std::vector<Transformation> T_generators(std::size_t n) {
    if (n == 0) {
      throw IndexOutOfRange("degree must be positive");
    }
    std::vector<Transformation> gens;
    auto                        id = Transformation::identity(n).images();
    if (n == 1) {
      gens.emplace_back(id);
      return gens;
    }
    auto swap = id;
    std::swap(swap[0], swap[1]);
    gens.emplace_back(swap);
    if (n >= 3) {
      std::vector<Transformation::point_type> cycle(n);
      for (std::size_t t = 0; t < n; ++t) {
        cycle[t] = static_cast<Transformation::point_type>((t + 1) % n);
      }
      gens.emplace_back(cycle);
    }
    auto collapse = id;
    collapse[1]   = 0;
    gens.emplace_back(collapse);
    return gens;
  }

  ConcreteInverseSemigroup symmetric_inverse_monoid(std::size_t n) {
    return to_abstract(full_IS(n));
  }

}  // namespace semiconj

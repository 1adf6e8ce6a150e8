#include "semiconj/partial_injection.hpp"

#include <algorithm>
#include <numeric>

#include "semiconj/closure.hpp"
#include "semiconj/errors.hpp"

namespace semiconj {

  namespace {

    void check_degrees(PartialInjection const& a, PartialInjection const& b) {
      if (a.degree() != b.degree()) {
        throw DegreeMismatch("partial injections of degree "
                             + std::to_string(a.degree()) + " and "
                             + std::to_string(b.degree()));
      }
    }

    bool contains_all(PointSet const& big, PointSet const& small) {
      return std::includes(big.begin(), big.end(), small.begin(), small.end());
    }

  }  // namespace

  PartialInjection::PartialInjection(std::vector<point_type> images)
      : _images(std::move(images)) {
    std::vector<bool> hit(_images.size(), false);
    for (auto y : _images) {
      if (y == undefined) {
        continue;
      }
      if (y >= _images.size()) {
        throw IndexOutOfRange("image " + std::to_string(y)
                              + " is out of range for degree "
                              + std::to_string(_images.size()));
      }
      if (hit[y]) {
        throw Error("not injective: point " + std::to_string(y)
                    + " is hit twice");
      }
      hit[y] = true;
    }
  }

  PartialInjection PartialInjection::identity(std::size_t degree) {
    std::vector<point_type> images(degree);
    std::iota(images.begin(), images.end(), point_type(0));
    return PartialInjection(std::move(images));
  }

  PartialInjection PartialInjection::empty(std::size_t degree) {
    return PartialInjection(std::vector<point_type>(degree, undefined));
  }

  PartialInjection
  PartialInjection::partial_identity(std::size_t                    degree,
                                     std::vector<point_type> const& points) {
    std::vector<point_type> images(degree, undefined);
    for (auto t : points) {
      images.at(t) = t;
    }
    return PartialInjection(std::move(images));
  }

  std::size_t PartialInjection::rank() const {
    return static_cast<std::size_t>(
        std::count_if(_images.begin(), _images.end(), [](point_type y) {
          return y != undefined;
        }));
  }

  std::string PartialInjection::to_string() const {
    std::string out;
    for (std::size_t t = 0; t < _images.size(); ++t) {
      if (degree() > 10 && t > 0) {
        out += ' ';
      }
      out += _images[t] == undefined ? std::string("-")
                                     : std::to_string(_images[t]);
    }
    return out;
  }

  PartialInjection compose(PartialInjection const& a,
                           PartialInjection const& b) {
    check_degrees(a, b);
    std::vector<PartialInjection::point_type> images(
        a.degree(), PartialInjection::undefined);
    for (std::size_t t = 0; t < images.size(); ++t) {
      if (b.defined_at(t)) {
        images[t] = a[b[t]];
      }
    }
    return PartialInjection(std::move(images));
  }

  PartialInjection inverse(PartialInjection const& a) {
    std::vector<PartialInjection::point_type> images(
        a.degree(), PartialInjection::undefined);
    for (std::size_t t = 0; t < a.degree(); ++t) {
      if (a.defined_at(t)) {
        images[a[t]] = static_cast<PartialInjection::point_type>(t);
      }
    }
    return PartialInjection(std::move(images));
  }

  PointSet dom(PartialInjection const& a) {
    PointSet out;
    for (std::size_t t = 0; t < a.degree(); ++t) {
      if (a.defined_at(t)) {
        out.push_back(static_cast<PartialInjection::point_type>(t));
      }
    }
    return out;
  }

  PointSet im(PartialInjection const& a) {
    PointSet out;
    for (std::size_t t = 0; t < a.degree(); ++t) {
      if (a.defined_at(t)) {
        out.push_back(a[t]);
      }
    }
    std::sort(out.begin(), out.end());
    return out;
  }

  PointSet stim(PartialInjection const& a) {
    PointSet out;
    std::size_t const n = a.degree();
    for (std::size_t t = 0; t < n; ++t) {
      auto y = static_cast<PartialInjection::point_type>(t);
      // A point on a cycle returns within n steps.
      for (std::size_t k = 0; k < n; ++k) {
        y = a[y];
        if (y == PartialInjection::undefined) {
          break;
        }
        if (y == t) {
          out.push_back(y);
          break;
        }
      }
    }
    return out;
  }

  PartialInjection e_of(PartialInjection const& x) {
    return PartialInjection::partial_identity(x.degree(), stim(x));
  }

  std::optional<PartialInjection> conj_action(PartialInjection const& a,
                                              PartialInjection const& x) {
    check_degrees(a, x);
    if (!contains_all(dom(a), stim(x))) {
      return std::nullopt;
    }
    return compose(compose(a, x), inverse(a));
  }

  std::vector<PointSet> cycles(PartialInjection const& x) {
    std::vector<PointSet> out;
    std::vector<bool>     done(x.degree(), false);
    for (auto t : stim(x)) {
      if (done[t]) {
        continue;
      }
      PointSet cycle;
      for (auto y = t; !done[y]; y = x[y]) {
        done[y] = true;
        cycle.push_back(y);
      }
      out.push_back(std::move(cycle));
    }
    return out;
  }

  std::vector<PartialInjection> full_IS(std::size_t n) {
    if (n > max_full_is_degree) {
      throw DegreeTooLarge("full_IS supports degree at most "
                           + std::to_string(max_full_is_degree));
    }
    std::vector<std::vector<PartialInjection::point_type>> all;
    std::vector<PartialInjection::point_type>              images(n);
    std::vector<bool>                                      used(n, false);
    auto extend = [&](auto&& self, std::size_t t) -> void {
      if (t == n) {
        all.push_back(images);
        return;
      }
      images[t] = PartialInjection::undefined;
      self(self, t + 1);
      for (PartialInjection::point_type y = 0; y < n; ++y) {
        if (!used[y]) {
          used[y]   = true;
          images[t] = y;
          self(self, t + 1);
          used[y] = false;
        }
      }
    };
    extend(extend, 0);

    std::vector<PartialInjection> out;
    out.reserve(all.size());
    for (auto& im : all) {
      out.emplace_back(std::move(im));
    }
    std::sort(out.begin(), out.end(), [](auto const& a, auto const& b) {
      if (a.rank() != b.rank()) {
        return a.rank() > b.rank();
      }
      return a.images() < b.images();
    });
    return out;
  }

  std::vector<PartialInjection> IS_generators(std::size_t n) {
    using point = PartialInjection::point_type;
    std::vector<PartialInjection> gens;
    if (n >= 2) {
      auto swap = PartialInjection::identity(n).images();
      std::swap(swap[0], swap[1]);
      gens.emplace_back(swap);
    }
    if (n >= 3) {
      std::vector<point> cycle(n);
      for (std::size_t t = 0; t < n; ++t) {
        cycle[t] = static_cast<point>((t + 1) % n);
      }
      gens.emplace_back(cycle);
    }
    if (n <= 1) {
      gens.push_back(PartialInjection::identity(n));
    }
    std::vector<point> points(n > 0 ? n - 1 : 0);
    std::iota(points.begin(), points.end(), point(0));
    gens.push_back(PartialInjection::partial_identity(n, points));
    return gens;
  }

  PartialInjection random_partial_injection(
      std::vector<PartialInjection> const& all,
      std::mt19937_64&                     rng) {
    std::uniform_int_distribution<std::size_t> pick(0, all.size() - 1);
    return all[pick(rng)];
  }

  ConcreteInverseSemigroup
  to_abstract(std::vector<PartialInjection> const& elems) {
    std::unordered_map<PartialInjection, element_id> id_of;
    for (std::size_t i = 0; i < elems.size(); ++i) {
      if (!id_of.emplace(elems[i], static_cast<element_id>(i)).second) {
        throw Error("duplicate element " + elems[i].to_string());
      }
    }
    std::size_t const       n = elems.size();
    std::vector<element_id> flat(n * n);
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = 0; b < n; ++b) {
        auto p  = compose(elems[a], elems[b]);
        auto it = id_of.find(p);
        if (it == id_of.end()) {
          throw NotClosed("product " + elems[a].to_string() + " * "
                          + elems[b].to_string() + " = " + p.to_string()
                          + " is not in the set");
        }
        flat[a * n + b] = it->second;
      }
    }
    std::vector<std::string> names;
    names.reserve(n);
    for (auto const& x : elems) {
      names.push_back(x.to_string());
    }
    auto S = FiniteSemigroup::from_flat(n, std::move(flat), std::move(names),
                                        Validation::trusted);
    return ConcreteInverseSemigroup{std::move(S), elems, std::move(id_of)};
  }

  ConcreteInverseSemigroup
  closure_of(std::vector<PartialInjection> const& generators) {
    auto closure = closure_from_generators(
        generators, [](PartialInjection const& a, PartialInjection const& b) {
          return compose(a, b);
        });
    return to_abstract(closure.elements);
  }

  std::vector<PartialInjection> preston_wagner(FiniteSemigroup const& S) {
    InverseStructure const inv(S);
    std::size_t const      n = S.order();
    using point              = PartialInjection::point_type;

    std::vector<PartialInjection> rho;
    rho.reserve(n);
    for (element_id a = 0; a < n; ++a) {
      element_id const   source = S.product(inv.inverse(a), a);
      std::vector<point> images(n, PartialInjection::undefined);
      for (element_id x = 0; x < n; ++x) {
        if (S.product(source, x) == x) {
          images[x] = S.product(a, x);
        }
      }
      rho.emplace_back(std::move(images));
    }

    std::unordered_map<PartialInjection, element_id> seen;
    for (element_id a = 0; a < n; ++a) {
      if (!seen.emplace(rho[a], a).second) {
        throw Error("Wagner-Preston map is not injective at "
                    + std::to_string(a));
      }
      if (rho[inv.inverse(a)] != inverse(rho[a])) {
        throw Error("Wagner-Preston map does not respect the inverse of "
                    + std::to_string(a));
      }
      for (element_id b = 0; b < n; ++b) {
        if (compose(rho[a], rho[b]) != rho[S.product(a, b)]) {
          throw Error("Wagner-Preston map is not a homomorphism at ("
                      + std::to_string(a) + ", " + std::to_string(b) + ")");
        }
      }
    }
    return rho;
  }

  namespace {

    void check_triple(Lemma1Report&           report,
                      PartialInjection const& a,
                      PartialInjection const& b,
                      PartialInjection const& x) {
      auto record = [&](char const* what) {
        if (report.failures++ == 0) {
          report.first_failure = std::string(what) + ": a=" + a.to_string()
                                 + " b=" + b.to_string()
                                 + " x=" + x.to_string();
        }
      };
      ++report.triples;
      auto const combined = conj_action(compose(b, a), x);
      auto const first    = conj_action(a, x);
      auto const second   = first ? conj_action(b, *first)
                                  : std::optional<PartialInjection>();
      bool const stepwise = first.has_value() && second.has_value();
      if (combined.has_value() != stepwise) {
        record("definedness differs");
      } else if (combined) {
        ++report.defined;
        if (*combined != *second) {
          record("values differ");
        }
      }
    }

  }  // namespace

  Lemma1Report
  check_action_composition(std::vector<PartialInjection> const& as,
                           std::vector<PartialInjection> const& bs,
                           std::vector<PartialInjection> const& xs) {
    if (as.size() != bs.size() || as.size() != xs.size()) {
      throw Error("triple lists differ in length");
    }
    Lemma1Report report;
    for (std::size_t i = 0; i < as.size(); ++i) {
      check_triple(report, as[i], bs[i], xs[i]);
    }
    return report;
  }

  Lemma1Report verify_lemma1_exhaustive(std::size_t n) {
    auto const   all = full_IS(n);
    Lemma1Report report;
    for (auto const& a : all) {
      for (auto const& b : all) {
        for (auto const& x : all) {
          check_triple(report, a, b, x);
        }
      }
    }
    return report;
  }

  Lemma1Report verify_lemma1_random(std::size_t   n,
                                    std::size_t   samples,
                                    std::uint64_t seed) {
    auto const      all = full_IS(n);
    std::mt19937_64 rng(seed);
    Lemma1Report    report;
    for (std::size_t i = 0; i < samples; ++i) {
      auto a = random_partial_injection(all, rng);
      auto b = random_partial_injection(all, rng);
      auto x = random_partial_injection(all, rng);
      check_triple(report, a, b, x);
    }
    return report;
  }

}  // namespace semiconj

std::size_t std::hash<semiconj::PartialInjection>::operator()(
    semiconj::PartialInjection const& x) const noexcept {
  std::size_t h = x.degree();
  for (auto y : x.images()) {
    h = h * 1'000'003 + y;
  }
  return h;
}

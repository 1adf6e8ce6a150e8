#pragma once

#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <random>
#include <string>
#include <unordered_map>
#include <vector>

#include "semiconj/semigroup.hpp"

namespace semiconj {

  /// An injective partial map on {0, ..., degree-1}; an element of IS(n).
  /// Undefined points carry the `undefined` sentinel in the image sequence.
  class PartialInjection {
   public:
    using point_type = std::uint32_t;
    static constexpr point_type undefined
        = std::numeric_limits<point_type>::max();

    PartialInjection() = default;

    /// Throws IndexOutOfRange for an image >= degree and Error if two points
    /// share an image.
    explicit PartialInjection(std::vector<point_type> images);

    static PartialInjection identity(std::size_t degree);
    static PartialInjection empty(std::size_t degree);

    /// Identity restricted to `points`.
    static PartialInjection partial_identity(std::size_t                    degree,
                                             std::vector<point_type> const& points);

    std::size_t degree() const noexcept {
      return _images.size();
    }

    point_type operator[](std::size_t t) const {
      return _images[t];
    }

    bool defined_at(std::size_t t) const {
      return _images[t] != undefined;
    }

    std::vector<point_type> const& images() const noexcept {
      return _images;
    }

    std::size_t rank() const;

    /// Compact notation: one symbol per point, '-' where undefined, points
    /// separated by spaces when the degree exceeds 10.
    std::string to_string() const;

    auto operator<=>(PartialInjection const&) const = default;

   private:
    std::vector<point_type> _images;
  };

  using PointSet = std::vector<PartialInjection::point_type>;

  /// (a*b)(t) = a(b(t)), defined where b(t) and a(b(t)) are.
  /// Throws DegreeMismatch.
  PartialInjection compose(PartialInjection const& a, PartialInjection const& b);

  PartialInjection inverse(PartialInjection const& a);

  /// Sorted domain and image.
  PointSet dom(PartialInjection const& a);
  PointSet im(PartialInjection const& a);

  /// Stable image: the points lying on cycles of a.
  PointSet stim(PartialInjection const& a);

  /// Identity restricted to stim(x): the idempotent power of x.
  PartialInjection e_of(PartialInjection const& x);

  /// The partial conjugation action: a x a^-1 when dom(a) contains stim(x),
  /// nothing otherwise. Throws DegreeMismatch.
  std::optional<PartialInjection> conj_action(PartialInjection const& a,
                                              PartialInjection const& x);

  /// Cycles of x as point sequences, each starting at its least point, sorted
  /// by that point.
  std::vector<PointSet> cycles(PartialInjection const& x);

  inline constexpr std::size_t max_full_is_degree = 5;

  /// All of IS(n), ordered by rank descending then lexicographically by image
  /// sequence with undefined after every point. Throws DegreeTooLarge for
  /// n > 5.
  std::vector<PartialInjection> full_IS(std::size_t n);

  /// Generators of IS(n): the permutation group generators plus the identity
  /// restricted to {0, ..., n-2}.
  std::vector<PartialInjection> IS_generators(std::size_t n);

  /// Uniformly random element of IS(n), drawn from the full enumeration.
  PartialInjection random_partial_injection(std::vector<PartialInjection> const& all,
                                            std::mt19937_64&                     rng);

}  // namespace semiconj

template <>
struct std::hash<semiconj::PartialInjection> {
  std::size_t operator()(semiconj::PartialInjection const& x) const noexcept;
};

namespace semiconj {

  /// A finite semigroup of partial injections together with the element
  /// correspondence in both directions.
  struct ConcreteInverseSemigroup {
    FiniteSemigroup                                   semigroup;
    std::vector<PartialInjection>                     elements;
    std::unordered_map<PartialInjection, element_id>  id_of;

    element_id id(PartialInjection const& x) const {
      return id_of.at(x);
    }
  };

  /// Cayley table of `elems` under compose, keeping their order as ids.
  /// Throws NotClosed with the first offending product, Error on duplicates.
  ConcreteInverseSemigroup to_abstract(std::vector<PartialInjection> const& elems);

  /// The semigroup generated by partial injections.
  ConcreteInverseSemigroup closure_of(std::vector<PartialInjection> const& generators);

  /// Embedding a -> (x -> ax) on the domain a^-1 a S, i.e. a left
  /// Wagner-Preston representation into IS(|S|). Injectivity, the
  /// homomorphism property and compatibility with inverses are asserted on
  /// construction; a failure throws Error. Throws NotInverse.
  std::vector<PartialInjection> preston_wagner(FiniteSemigroup const& S);

  /// Outcome of checking the action composition law over triples.
  struct Lemma1Report {
    std::size_t triples         = 0;
    std::size_t defined         = 0;
    std::size_t failures        = 0;
    std::string first_failure;

    bool passed() const noexcept {
      return failures == 0;
    }
  };

  /// For each triple (a, b, x): (ba).x is defined iff a.x and b.(a.x) are,
  /// and then both agree.
  Lemma1Report check_action_composition(std::vector<PartialInjection> const& as,
                                        std::vector<PartialInjection> const& bs,
                                        std::vector<PartialInjection> const& xs);

  /// All triples of full_IS(n).
  Lemma1Report verify_lemma1_exhaustive(std::size_t n);

  /// `samples` seeded random triples from IS(n).
  Lemma1Report verify_lemma1_random(std::size_t   n,
                                    std::size_t   samples,
                                    std::uint64_t seed);

}  // namespace semiconj

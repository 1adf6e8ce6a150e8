#pragma once

#include <Eigen/Dense>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "semiconj/character_table.hpp"
#include "semiconj/partition.hpp"
#include "semiconj/semigroup.hpp"

namespace semiconj {

  /// A matrix representation: one d x d complex matrix per element.
  struct Representation {
    std::size_t                   dimension = 0;
    std::vector<Eigen::MatrixXcd> matrices;
  };

  /// Throws MultiplicativityViolation at the first pair (s, t), in
  /// lexicographic order, where M(s) M(t) and M(st) differ by more than tol
  /// in some entry.
  void check_multiplicative(FiniteSemigroup const& S,
                            Representation const&  rep,
                            double                 tol = matrix_tolerance);

  /// The one-dimensional representation sending everything to 1.
  Representation trivial_representation(FiniteSemigroup const& S);

  /// Left regular representation of a group: g sends basis vector h to gh.
  Representation regular_representation(FiniteSemigroup const& G);

  /// Regular representation of S^1: row x of M(s) has its 1 in column xs.
  /// Its character at s counts the x in S^1 with xs = x. Indexed by S.
  Representation hull_regular_representation(FiniteSemigroup const& S);

  /// Character of the hull regular representation, without building matrices.
  std::vector<complex> hull_regular_character(FiniteSemigroup const& S);

  std::vector<complex> traces(Representation const& rep);

  /// Complex trace per element with a note on where it came from.
  struct CharacterVector {
    std::vector<complex> values;
    std::string          provenance;
  };

  /// Largest |chi(uv) - chi(vu)| over all u, v in S.
  double trace_identity_defect(FiniteSemigroup const& S,
                               CharacterVector const& chi);

  /// The H-classes of an L-class L_e with chosen representatives, used to
  /// induce representations from the maximal subgroup H_e. Positions are
  /// zero-based; position 0 is H_e itself with representative e.
  struct LClassFrame {
    element_id               idempotent = 0;
    std::vector<std::size_t> h_classes;
    /// reps[i] lies in h_classes[i] and is idempotent when that H-class is a
    /// group.
    std::vector<element_id> reps;
    /// An inverse of reps[i].
    std::vector<element_id> rep_inverses;
    /// Number of idempotents in L_e.
    std::size_t idempotent_count = 0;
    /// Members of H_e in increasing order; local ids of the subgroup.
    std::vector<element_id> group;
    /// H-class number of every element of S.
    std::vector<std::size_t> h_class_of;
    /// Frame position of every H-class, or npos outside L_e.
    std::vector<std::size_t> position_of;

    static constexpr std::size_t npos = static_cast<std::size_t>(-1);

    std::size_t size() const noexcept {
      return reps.size();
    }
  };

  /// Frame at the idempotent e. By default positions after 0 follow the least
  /// member of each H-class, reps are the idempotent or else the least member,
  /// and inverses are least. With a shuffle seed the non-initial positions,
  /// the non-idempotent reps and the inverses are chosen at random instead.
  ///
  /// Throws NotIdempotent and IrregularDClass.
  LClassFrame lclass_frame(FiniteSemigroup const&       S,
                           GreensStructure const&       G,
                           element_id                   e,
                           std::optional<std::uint64_t> shuffle_seed
                           = std::nullopt);

  struct Translation {
    /// Frame position j with s a_i = a_j s'.
    std::size_t position;
    element_id  s_prime;
    /// Index of s' in frame.group.
    std::size_t s_prime_local;
  };

  /// Solves s a_i = a_j s' with s' in H_e, or returns nothing when s a_i
  /// leaves L_e. Throws FrameCorruption when the solution is not unique.
  std::optional<Translation> translate(FiniteSemigroup const& S,
                                       LClassFrame const&     frame,
                                       element_id             s,
                                       std::size_t            i);

  /// Character of the induced representation: sum over the frame positions i
  /// fixed by s of chi(s'_i). `chi` is indexed by frame.group.
  CharacterVector induced_character(FiniteSemigroup const&      S,
                                    LClassFrame const&          frame,
                                    std::vector<complex> const& chi);

  /// The induced representation itself: block (j, i) of the matrix of s is
  /// phi(s') when s a_i = a_j s', and zero blocks elsewhere. `phi` is a
  /// representation of H_e indexed by frame.group. Multiplicativity is
  /// checked on construction.
  Representation induced_rep_matrices(FiniteSemigroup const& S,
                                      LClassFrame const&     frame,
                                      Representation const&  phi);

  /// Induced characters of every irreducible character of the maximal
  /// subgroup at the least idempotent of each regular D-class.
  std::vector<CharacterVector> schutzenberger_family(FiniteSemigroup const& S,
                                                     GreensStructure const& G,
                                                     std::uint64_t seed
                                                     = default_seed);
  std::vector<CharacterVector> schutzenberger_family(FiniteSemigroup const& S,
                                                     std::uint64_t seed
                                                     = default_seed);

  /// x e_x.
  element_id reduce_to_group_part(FiniteSemigroup const& S, element_id x);

  enum class Verdict { equivalent, distinct, unknown };

  std::string_view to_string(Verdict v) noexcept;

  struct Decision {
    Verdict     verdict;
    /// How the verdict was reached: "identical", "reduction", "regular
    /// completeness", "separating character" or "undecided".
    std::string reason;
    /// For distinct: index into the family and the two values.
    std::optional<std::size_t> character;
    complex                    x_value{}, y_value{};
  };

  /// Family of genuine characters of S (Schutzenberger family plus the
  /// regular character of S^1) with everything needed to decide character
  /// conjugacy.
  class CharacterOracle {
   public:
    explicit CharacterOracle(FiniteSemigroup const& S,
                             std::uint64_t          seed = default_seed);

    std::vector<CharacterVector> const& family() const noexcept {
      return _family;
    }

    bool regular() const noexcept {
      return _regular;
    }

    element_id reduce(element_id x) const {
      return _reduced[x];
    }

    /// True if every family character agrees at x and y within
    /// matrix_tolerance.
    bool agree(element_id x, element_id y) const;

    Decision decide(element_id x, element_id y) const;

    /// Classes of "all family characters agree".
    Partition agreement_partition() const;

   private:
    std::vector<CharacterVector> _family;
    std::vector<element_id>      _reduced;
    bool                         _regular;
  };

  Decision char_equal_decision(FiniteSemigroup const& S,
                               element_id             x,
                               element_id             y,
                               std::uint64_t          seed = default_seed);

  /// One instance of the trace chain chi(t y t') = chi(y t' t) = chi(y) =
  /// chi(x) for D-related group elements x, y.
  struct TraceChain {
    element_id x, y, t, t_inverse;
    /// t y t'
    element_id conjugate;
    /// Largest deviation along the chain over the family.
    double defect = 0;
  };

  /// Finds mutually inverse t, t' in the D-class of x with t y t' H x and
  /// y t' t = y; nothing if there are none.
  std::optional<TraceChain> trace_chain(FiniteSemigroup const&  S,
                                        GreensStructure const&  G,
                                        CharacterOracle const&  oracle,
                                        element_id              x,
                                        element_id              y);

  struct Theorem1Report {
    std::size_t order              = 0;
    std::size_t tilde_classes      = 0;
    std::size_t agreement_classes  = 0;
    bool        partitions_equal   = false;
    std::size_t pairs              = 0;
    std::size_t unknown_verdicts   = 0;
    std::size_t inconsistent       = 0;
    std::size_t chain_checks       = 0;
    std::size_t chain_failures     = 0;
    double      max_chain_defect   = 0;
    std::string counterexample;

    bool passed() const noexcept {
      return partitions_equal && unknown_verdicts == 0 && inconsistent == 0
             && chain_failures == 0;
    }
  };

  inline constexpr std::size_t default_chain_checks = 20;

  /// Compares the closure of uv ~ vu with agreement on the family, checks
  /// every verdict and runs up to `chain_checks` trace-chain checks on
  /// distinct related group elements. Throws NotRegular.
  Theorem1Report verify_theorem1(FiniteSemigroup const& S,
                                 std::uint64_t          seed = default_seed,
                                 std::size_t chain_checks = default_chain_checks);

}  // namespace semiconj

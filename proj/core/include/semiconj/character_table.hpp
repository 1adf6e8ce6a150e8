#pragma once

#include <complex>
#include <cstddef>
#include <cstdint>
#include <vector>

#include "semiconj/partition.hpp"
#include "semiconj/semigroup.hpp"

namespace semiconj {

  using complex = std::complex<double>;

  inline constexpr std::uint64_t default_seed            = 0xC0FFEE;
  inline constexpr double        matrix_tolerance        = 1e-8;
  inline constexpr double        orthogonality_tolerance = 1e-9;
  inline constexpr double        snap_tolerance          = 1e-6;
  inline constexpr std::size_t   max_character_table_order = 200;

  /// Rounds the real and imaginary parts to the nearest integer when within
  /// snap_tolerance; otherwise rounds to 1e-9 so that reports are stable.
  complex snap(complex z);

  /// Irreducible complex characters of a finite group.
  struct GroupCharacterTable {
    std::size_t group_order = 0;
    /// Conjugacy classes of the group, by least member.
    Partition classes;
    std::size_t identity_class = 0;
    /// values[i][c] = chi_i on class c. Row 0 is the trivial character; the
    /// others follow by degree, then by snapped values.
    std::vector<std::vector<complex>> values;
    std::vector<std::size_t> degrees;

    std::size_t size() const noexcept {
      return values.size();
    }

    /// chi_i as a function on group elements.
    std::vector<complex> character(std::size_t i) const;

    /// Largest deviation from the row relations
    /// sum_c |c| chi_i(c) conj(chi_j(c)) = |G| delta_ij.
    double row_orthogonality_error() const;

    /// Largest deviation from sum_i chi_i(c) conj(chi_i(d)) = delta_cd |G|/|c|.
    double column_orthogonality_error() const;
  };

  /// Burnside-Dixon: the eigenvectors of a random real combination of the
  /// class-sum structure matrices are the central characters, from which the
  /// degrees and values follow. Retries with a fresh combination when the
  /// spectrum is degenerate.
  ///
  /// Throws NotGroup, DegenerateEigenvalues after 10 attempts, and Error if
  /// the result fails orthogonality or the group has more than 200 elements.
  GroupCharacterTable character_table(FiniteSemigroup const& G,
                                      std::uint64_t seed = default_seed);

  /// True if G has an identity and every element is a unit.
  bool is_group(FiniteSemigroup const& G);

}  // namespace semiconj

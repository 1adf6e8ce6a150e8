#include "semiconj/character_table.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>

#include "semiconj/conjugacy.hpp"
#include "semiconj/errors.hpp"

namespace semiconj {

  complex snap(complex z) {
    auto one = [](double v) {
      double const r = std::round(v);
      if (std::abs(v - r) < snap_tolerance) {
        return r + 0.0;  // no negative zero
      }
      return std::round(v * 1e9) / 1e9 + 0.0;
    };
    return {one(z.real()), one(z.imag())};
  }

  bool is_group(FiniteSemigroup const& G) {
    if (!G.identity()) {
      return false;
    }
    element_id const one = *G.identity();
    for (element_id g = 0; g < G.order(); ++g) {
      bool unit = false;
      for (element_id h = 0; h < G.order() && !unit; ++h) {
        unit = G.product(g, h) == one && G.product(h, g) == one;
      }
      if (!unit) {
        return false;
      }
    }
    return true;
  }

  std::vector<complex> GroupCharacterTable::character(std::size_t i) const {
    std::vector<complex> out(group_order);
    for (element_id g = 0; g < group_order; ++g) {
      out[g] = values.at(i)[classes.class_of(g)];
    }
    return out;
  }

  double GroupCharacterTable::row_orthogonality_error() const {
    double worst = 0;
    for (std::size_t i = 0; i < size(); ++i) {
      for (std::size_t j = 0; j < size(); ++j) {
        complex sum = 0;
        for (std::size_t c = 0; c < classes.number_of_classes(); ++c) {
          sum += static_cast<double>(classes.members(c).size()) * values[i][c]
                 * std::conj(values[j][c]);
        }
        double const expected = i == j ? static_cast<double>(group_order) : 0;
        worst = std::max(worst, std::abs(sum - expected));
      }
    }
    return worst;
  }

  double GroupCharacterTable::column_orthogonality_error() const {
    double worst = 0;
    std::size_t const r = classes.number_of_classes();
    for (std::size_t c = 0; c < r; ++c) {
      for (std::size_t d = 0; d < r; ++d) {
        complex sum = 0;
        for (std::size_t i = 0; i < size(); ++i) {
          sum += values[i][c] * std::conj(values[i][d]);
        }
        double const expected
            = c == d ? static_cast<double>(group_order)
                           / static_cast<double>(classes.members(c).size())
                     : 0;
        worst = std::max(worst, std::abs(sum - expected));
      }
    }
    return worst;
  }

  GroupCharacterTable character_table(FiniteSemigroup const& G,
                                      std::uint64_t          seed) {
    if (!is_group(G)) {
      throw NotGroup("character tables need a group");
    }
    if (G.order() > max_character_table_order) {
      throw Error("group of order " + std::to_string(G.order())
                  + " exceeds the supported maximum of "
                  + std::to_string(max_character_table_order));
    }
    std::size_t const n   = G.order();
    element_id const  one = *G.identity();

    GroupCharacterTable table;
    table.group_order    = n;
    table.classes        = g_conjugacy_classes(G, Witnesses::off).partition;
    table.identity_class = table.classes.class_of(one);
    std::size_t const r  = table.classes.number_of_classes();

    std::vector<element_id> inv(n);
    for (element_id g = 0; g < n; ++g) {
      for (element_id h = 0; h < n; ++h) {
        if (G.product(g, h) == one) {
          inv[g] = h;
          break;
        }
      }
    }

    // constants[j](k, l) = #{x in C_j : x^-1 z_l in C_k} for a fixed z_l in
    // C_l, so that C_j C_k = sum_l constants[j](k, l) C_l.
    std::vector<Eigen::MatrixXd> constants(r, Eigen::MatrixXd::Zero(r, r));
    for (std::size_t j = 0; j < r; ++j) {
      for (std::size_t l = 0; l < r; ++l) {
        element_id const z = table.classes.members(l).front();
        for (element_id x : table.classes.members(j)) {
          constants[j](table.classes.class_of(G.product(inv[x], z)), l) += 1;
        }
      }
    }

    std::mt19937_64                        rng(seed);
    std::uniform_real_distribution<double> coefficient(-1.0, 1.0);
    constexpr std::size_t                  max_attempts = 10;

    for (std::size_t attempt = 0; attempt < max_attempts; ++attempt) {
      Eigen::MatrixXd combo = Eigen::MatrixXd::Zero(r, r);
      for (std::size_t j = 0; j < r; ++j) {
        combo += coefficient(rng) * constants[j];
      }
      Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver(
          combo.cast<complex>());
      if (solver.info() != Eigen::Success) {
        continue;
      }
      auto const& lambda = solver.eigenvalues();
      double      scale  = 1;
      for (Eigen::Index i = 0; i < lambda.size(); ++i) {
        scale = std::max(scale, std::abs(lambda(i)));
      }
      bool degenerate = false;
      for (Eigen::Index a = 0; a < lambda.size() && !degenerate; ++a) {
        for (Eigen::Index b = a + 1; b < lambda.size() && !degenerate; ++b) {
          degenerate = std::abs(lambda(a) - lambda(b)) < 1e-6 * scale;
        }
      }
      if (degenerate) {
        continue;
      }

      std::vector<std::vector<complex>> rows;
      std::vector<std::size_t>          degrees;
      bool                              ok = true;
      for (std::size_t i = 0; i < r && ok; ++i) {
        Eigen::VectorXcd w       = solver.eigenvectors().col(i);
        complex const    leading = w(table.identity_class);
        if (std::abs(leading) < 1e-12) {
          ok = false;
          break;
        }
        // Central character: omega(C_1) = 1.
        w /= leading;
        double norm = 0;
        for (std::size_t c = 0; c < r; ++c) {
          norm += std::norm(w(c))
                  / static_cast<double>(table.classes.members(c).size());
        }
        double const degree = std::sqrt(static_cast<double>(n) / norm);
        double const rounded = std::round(degree);
        if (std::abs(degree - rounded) > snap_tolerance || rounded < 1) {
          ok = false;
          break;
        }
        std::vector<complex> row(r);
        for (std::size_t c = 0; c < r; ++c) {
          row[c] = w(c) * rounded
                   / static_cast<double>(table.classes.members(c).size());
          // Values that are integers up to rounding are stored exactly.
          complex const whole(std::round(row[c].real()),
                              std::round(row[c].imag()));
          if (std::abs(row[c] - whole) < snap_tolerance) {
            row[c] = whole + complex(0.0, 0.0);
          }
        }
        rows.push_back(std::move(row));
        degrees.push_back(static_cast<std::size_t>(rounded));
      }
      if (!ok) {
        continue;
      }

      std::vector<std::size_t> order(r);
      std::iota(order.begin(), order.end(), std::size_t(0));
      auto key = [&](std::size_t i) {
        bool const trivial = std::all_of(
            rows[i].begin(), rows[i].end(), [](complex v) {
              return std::abs(v - complex(1)) < snap_tolerance;
            });
        std::vector<std::pair<double, double>> snapped;
        for (auto v : rows[i]) {
          auto s = snap(v);
          // Larger values first, so that e.g. (1, 1) precedes (1, -1).
          snapped.emplace_back(-s.real(), -s.imag());
        }
        return std::make_tuple(!trivial, degrees[i], snapped);
      };
      std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        return key(a) < key(b);
      });
      for (std::size_t i : order) {
        table.values.push_back(rows[i]);
        table.degrees.push_back(degrees[i]);
      }

      std::size_t sum_sq = 0;
      for (auto d : table.degrees) {
        sum_sq += d * d;
      }
      if (sum_sq != n || table.row_orthogonality_error() > orthogonality_tolerance
          || table.column_orthogonality_error() > orthogonality_tolerance) {
        throw Error("character table of order " + std::to_string(n)
                    + " fails the orthogonality relations");
      }
      return table;
    }
    throw DegenerateEigenvalues("no separating class-sum combination found in "
                                + std::to_string(max_attempts) + " attempts");
  }

}  // namespace semiconj

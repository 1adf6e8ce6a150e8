#include "semiconj/representations.hpp"

#include <algorithm>
#include <map>
#include <random>

#include "semiconj/conjugacy.hpp"
#include "semiconj/errors.hpp"

namespace semiconj {

  void check_multiplicative(FiniteSemigroup const& S,
                            Representation const&  rep,
                            double                 tol) {
    for (element_id s = 0; s < S.order(); ++s) {
      for (element_id t = 0; t < S.order(); ++t) {
        Eigen::MatrixXcd const diff = rep.matrices[s] * rep.matrices[t]
                                      - rep.matrices[S.product(s, t)];
        double const dev = diff.size() == 0 ? 0.0 : diff.cwiseAbs().maxCoeff();
        if (dev > tol) {
          throw MultiplicativityViolation(s, t, dev);
        }
      }
    }
  }

  Representation trivial_representation(FiniteSemigroup const& S) {
    return Representation{
        1, std::vector<Eigen::MatrixXcd>(S.order(), Eigen::MatrixXcd::Ones(1, 1))};
  }

  Representation regular_representation(FiniteSemigroup const& G) {
    if (!is_group(G)) {
      throw NotGroup("the regular representation is built for groups");
    }
    std::size_t const n = G.order();
    Representation    rep{n, {}};
    for (element_id g = 0; g < n; ++g) {
      Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(n, n);
      for (element_id h = 0; h < n; ++h) {
        m(G.product(g, h), h) = 1;
      }
      rep.matrices.push_back(std::move(m));
    }
    return rep;
  }

  Representation hull_regular_representation(FiniteSemigroup const& S) {
    auto const        hull = monoid_hull(S);
    std::size_t const N    = hull.hull.order();
    Representation    rep{N, {}};
    for (element_id s = 0; s < S.order(); ++s) {
      Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(N, N);
      for (element_id x = 0; x < N; ++x) {
        m(x, hull.hull.product(x, s)) = 1;
      }
      rep.matrices.push_back(std::move(m));
    }
    return rep;
  }

  std::vector<complex> hull_regular_character(FiniteSemigroup const& S) {
    auto const           hull = monoid_hull(S);
    std::vector<complex> chi(S.order());
    for (element_id s = 0; s < S.order(); ++s) {
      double fixed = 0;
      for (element_id x = 0; x < hull.hull.order(); ++x) {
        fixed += hull.hull.product(x, s) == x ? 1 : 0;
      }
      chi[s] = fixed;
    }
    return chi;
  }

  std::vector<complex> traces(Representation const& rep) {
    std::vector<complex> out;
    out.reserve(rep.matrices.size());
    for (auto const& m : rep.matrices) {
      out.push_back(m.trace());
    }
    return out;
  }

  double trace_identity_defect(FiniteSemigroup const& S,
                               CharacterVector const& chi) {
    double worst = 0;
    for (element_id u = 0; u < S.order(); ++u) {
      for (element_id v = 0; v < S.order(); ++v) {
        worst = std::max(worst, std::abs(chi.values[S.product(u, v)]
                                         - chi.values[S.product(v, u)]));
      }
    }
    return worst;
  }

  LClassFrame lclass_frame(FiniteSemigroup const&       S,
                           GreensStructure const&       G,
                           element_id                   e,
                           std::optional<std::uint64_t> shuffle_seed) {
    if (!S.is_idempotent(e)) {
      throw NotIdempotent("element " + std::to_string(e)
                          + " is not an idempotent");
    }
    std::optional<std::mt19937_64> rng;
    if (shuffle_seed) {
      rng.emplace(*shuffle_seed);
    }
    auto pick = [&](std::vector<element_id> const& from) {
      if (!rng) {
        return from.front();
      }
      std::uniform_int_distribution<std::size_t> d(0, from.size() - 1);
      return from[d(*rng)];
    };

    LClassFrame frame;
    frame.idempotent = e;
    frame.h_class_of.resize(S.order());
    for (element_id x = 0; x < S.order(); ++x) {
      frame.h_class_of[x] = G.H.class_of(x);
    }
    frame.position_of.assign(G.H.number_of_classes(), LClassFrame::npos);

    std::size_t const he = G.H.class_of(e);
    frame.h_classes.push_back(he);
    for (element_id x : G.L.members(G.L.class_of(e))) {
      auto const h = G.H.class_of(x);
      if (std::find(frame.h_classes.begin(), frame.h_classes.end(), h)
          == frame.h_classes.end()) {
        frame.h_classes.push_back(h);
      }
      frame.idempotent_count += S.is_idempotent(x) ? 1 : 0;
    }
    if (rng) {
      std::shuffle(frame.h_classes.begin() + 1, frame.h_classes.end(), *rng);
    }

    for (std::size_t i = 0; i < frame.h_classes.size(); ++i) {
      std::size_t const h = frame.h_classes[i];
      frame.position_of[h] = i;
      auto const& members  = G.H.members(h);
      element_id  rep;
      if (G.h_is_group[h]) {
        rep = *std::find_if(members.begin(), members.end(), [&](element_id x) {
          return S.is_idempotent(x);
        });
      } else {
        rep = pick(members);
      }
      std::vector<element_id> inverses;
      for (element_id b = 0; b < S.order(); ++b) {
        if (S.product(S.product(rep, b), rep) == rep
            && S.product(S.product(b, rep), b) == b) {
          inverses.push_back(b);
        }
      }
      if (inverses.empty()) {
        throw IrregularDClass("element " + std::to_string(rep)
                              + " has no inverse");
      }
      frame.reps.push_back(rep);
      frame.rep_inverses.push_back(pick(inverses));
    }
    frame.group = G.H.members(he);
    return frame;
  }

  std::optional<Translation> translate(FiniteSemigroup const& S,
                                       LClassFrame const&     frame,
                                       element_id             s,
                                       std::size_t            i) {
    element_id const  p = S.product(s, frame.reps.at(i));
    std::size_t const j = frame.position_of[frame.h_class_of[p]];
    if (j == LClassFrame::npos) {
      return std::nullopt;
    }
    std::optional<Translation> found;
    for (std::size_t g = 0; g < frame.group.size(); ++g) {
      if (S.product(frame.reps[j], frame.group[g]) == p) {
        if (found) {
          throw FrameCorruption("s a_i = a_j s' has several solutions");
        }
        found = Translation{j, frame.group[g], g};
      }
    }
    if (!found) {
      throw FrameCorruption("s a_i = a_j s' has no solution in H_e");
    }
    return found;
  }

  CharacterVector induced_character(FiniteSemigroup const&      S,
                                    LClassFrame const&          frame,
                                    std::vector<complex> const& chi) {
    CharacterVector out{std::vector<complex>(S.order()), "induced"};
    for (element_id s = 0; s < S.order(); ++s) {
      complex sum = 0;
      for (std::size_t i = 0; i < frame.size(); ++i) {
        auto const tr = translate(S, frame, s, i);
        if (tr && tr->position == i) {
          sum += chi.at(tr->s_prime_local);
        }
      }
      out.values[s] = sum;
    }
    return out;
  }

  Representation induced_rep_matrices(FiniteSemigroup const& S,
                                      LClassFrame const&     frame,
                                      Representation const&  phi) {
    std::size_t const d = phi.dimension;
    std::size_t const k = frame.size();
    Representation    rep{k * d, {}};
    for (element_id s = 0; s < S.order(); ++s) {
      Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(k * d, k * d);
      for (std::size_t i = 0; i < k; ++i) {
        if (auto tr = translate(S, frame, s, i)) {
          m.block(tr->position * d, i * d, d, d)
              = phi.matrices.at(tr->s_prime_local);
        }
      }
      rep.matrices.push_back(std::move(m));
    }
    check_multiplicative(S, rep);
    return rep;
  }

  std::vector<CharacterVector> schutzenberger_family(FiniteSemigroup const& S,
                                                     GreensStructure const& G,
                                                     std::uint64_t seed) {
    std::vector<CharacterVector> family;
    for (std::size_t d = 0; d < G.d_classes.size(); ++d) {
      auto const& info = G.d_classes[d];
      if (!info.regular) {
        continue;
      }
      element_id const e     = info.idempotents.front();
      auto const       frame = lclass_frame(S, G, e);
      auto const       H     = maximal_subgroup(S, G, e);
      auto const       table = character_table(H.group, seed);
      for (std::size_t i = 0; i < table.size(); ++i) {
        auto chi       = induced_character(S, frame, table.character(i));
        chi.provenance = "D" + std::to_string(d) + " e=" + S.name(e) + " chi"
                         + std::to_string(i) + " deg "
                         + std::to_string(table.degrees[i]);
        family.push_back(std::move(chi));
      }
    }
    return family;
  }

  std::vector<CharacterVector> schutzenberger_family(FiniteSemigroup const& S,
                                                     std::uint64_t seed) {
    return schutzenberger_family(S, greens(S), seed);
  }

  element_id reduce_to_group_part(FiniteSemigroup const& S, element_id x) {
    return S.product(x, power_data(S).idempotent_power[x]);
  }

  std::string_view to_string(Verdict v) noexcept {
    switch (v) {
      case Verdict::equivalent:
        return "EQUIVALENT";
      case Verdict::distinct:
        return "DISTINCT";
      case Verdict::unknown:
        return "UNKNOWN";
    }
    return "UNKNOWN";
  }

  CharacterOracle::CharacterOracle(FiniteSemigroup const& S,
                                   std::uint64_t          seed)
      : _family(schutzenberger_family(S, seed)), _regular(is_regular(S)) {
    _family.push_back({hull_regular_character(S), "regular S^1"});
    auto const e = power_data(S).idempotent_power;
    _reduced.resize(S.order());
    for (element_id x = 0; x < S.order(); ++x) {
      _reduced[x] = S.product(x, e[x]);
    }
  }

  bool CharacterOracle::agree(element_id x, element_id y) const {
    return std::all_of(_family.begin(), _family.end(), [&](auto const& chi) {
      return std::abs(chi.values[x] - chi.values[y]) <= matrix_tolerance;
    });
  }

  Decision CharacterOracle::decide(element_id x, element_id y) const {
    if (x == y) {
      return {Verdict::equivalent, "identical", std::nullopt};
    }
    for (std::size_t i = 0; i < _family.size(); ++i) {
      auto const& chi = _family[i].values;
      if (std::abs(chi[x] - chi[y]) > matrix_tolerance) {
        return {Verdict::distinct, "separating character", i, chi[x], chi[y]};
      }
    }
    if (_reduced[x] == _reduced[y]) {
      return {Verdict::equivalent, "reduction", std::nullopt};
    }
    if (_regular) {
      return {Verdict::equivalent, "regular completeness", std::nullopt};
    }
    return {Verdict::unknown, "undecided", std::nullopt};
  }

  Partition CharacterOracle::agreement_partition() const {
    std::size_t const n = _reduced.size();
    UnionFind         uf(n);
    for (element_id x = 0; x < n; ++x) {
      for (element_id y = x + 1; y < n; ++y) {
        if (uf.find(x) != uf.find(y) && agree(x, y)) {
          uf.unite(x, y);
        }
      }
    }
    return Partition::from_union_find(uf);
  }

  Decision char_equal_decision(FiniteSemigroup const& S,
                               element_id             x,
                               element_id             y,
                               std::uint64_t          seed) {
    return CharacterOracle(S, seed).decide(x, y);
  }

  std::optional<TraceChain> trace_chain(FiniteSemigroup const& S,
                                        GreensStructure const& G,
                                        CharacterOracle const& oracle,
                                        element_id             x,
                                        element_id             y) {
    auto const& D = G.D.members(G.D.class_of(x));
    for (element_id t : D) {
      for (element_id ti : D) {
        if (S.product(S.product(t, ti), t) != t
            || S.product(S.product(ti, t), ti) != ti) {
          continue;
        }
        element_id const c = S.product(S.product(t, y), ti);
        if (!G.H.same(c, x)) {
          continue;
        }
        element_id const back = S.product(S.product(y, ti), t);
        if (back != y) {
          continue;
        }
        TraceChain chain{x, y, t, ti, c, 0};
        for (auto const& chi : oracle.family()) {
          auto const& v = chi.values;
          chain.defect  = std::max({chain.defect,
                                    std::abs(v[c] - v[back]),
                                    std::abs(v[back] - v[y]),
                                    std::abs(v[y] - v[x])});
        }
        return chain;
      }
    }
    return std::nullopt;
  }

  Theorem1Report verify_theorem1(FiniteSemigroup const& S,
                                 std::uint64_t          seed,
                                 std::size_t            chain_checks) {
    if (!is_regular(S)) {
      throw NotRegular("the character criterion is only complete for regular "
                       "semigroups");
    }
    auto const            G      = greens(S);
    CharacterOracle const oracle(S, seed);
    auto const            tilde     = tilde_classes(S, Witnesses::off).partition;
    auto const            agreement = oracle.agreement_partition();

    Theorem1Report report;
    report.order             = S.order();
    report.tilde_classes     = tilde.number_of_classes();
    report.agreement_classes = agreement.number_of_classes();
    report.partitions_equal  = tilde == agreement;
    if (!report.partitions_equal) {
      report.counterexample = "partitions differ";
    }
    auto note = [&](std::string const& what) {
      if (report.counterexample.empty()) {
        report.counterexample = what;
      }
    };

    for (element_id x = 0; x < S.order(); ++x) {
      for (element_id y = 0; y < S.order(); ++y) {
        ++report.pairs;
        auto const d = oracle.decide(x, y);
        if (d.verdict == Verdict::unknown) {
          ++report.unknown_verdicts;
          note("UNKNOWN verdict at x=" + S.name(x) + " y=" + S.name(y));
        } else if ((d.verdict == Verdict::equivalent) != tilde.same(x, y)) {
          ++report.inconsistent;
          note("verdict disagrees with closure at x=" + S.name(x)
               + " y=" + S.name(y));
        }
      }
    }

    auto const e = power_data(S).idempotent_power;
    for (element_id x = 0; x < S.order() && report.chain_checks < chain_checks;
         ++x) {
      if (S.product(x, e[x]) != x) {
        continue;
      }
      for (element_id y = 0;
           y < S.order() && report.chain_checks < chain_checks;
           ++y) {
        if (y == x || S.product(y, e[y]) != y || !tilde.same(x, y)) {
          continue;
        }
        ++report.chain_checks;
        auto const chain = trace_chain(S, G, oracle, x, y);
        if (!chain) {
          ++report.chain_failures;
          note("no trace chain for x=" + S.name(x) + " y=" + S.name(y));
          continue;
        }
        report.max_chain_defect = std::max(report.max_chain_defect,
                                           chain->defect);
        if (chain->defect > matrix_tolerance) {
          ++report.chain_failures;
          note("trace chain breaks for x=" + S.name(x) + " y=" + S.name(y));
        }
      }
    }
    return report;
  }

}  // namespace semiconj

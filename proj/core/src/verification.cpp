#include "semiconj/verification.hpp"

namespace semiconj {

  Example1Report verify_example1(FiniteSemigroup const& S, std::uint64_t seed) {
    Example1Report report;
    report.regular = is_regular(S);
    auto const tilde      = tilde_classes(S, Witnesses::off).partition;
    report.tilde_classes  = tilde.number_of_classes();
    report.tilde_trivial  = tilde.number_of_classes() == S.order();

    CharacterOracle const oracle(S, seed);
    for (element_id x = 0; x < S.order() && !report.x; ++x) {
      for (element_id y = x + 1; y < S.order(); ++y) {
        if (tilde.same(x, y)) {
          continue;
        }
        auto const d = oracle.decide(x, y);
        if (d.verdict == Verdict::equivalent) {
          report.x           = x;
          report.y           = y;
          report.certificate = d.reason;
          if (d.reason == "reduction") {
            report.certificate += ": x e_x = y e_y = "
                                  + S.name(oracle.reduce(x));
          }
          break;
        }
      }
    }
    return report;
  }

  CorollaryReport verify_corollaries(FiniteSemigroup const& S,
                                     std::uint64_t          seed) {
    CorollaryReport report;
    report.regular = is_regular(S);
    report.inverse = report.regular && is_inverse(S);
    if (!report.regular) {
      return report;
    }
    report.theorem1 = verify_theorem1(S, seed);
    if (report.inverse) {
      report.theorem2      = verify_theorem2(S);
      auto const tilde     = tilde_classes(S, Witnesses::off).partition;
      auto const approx    = action_classes(S, Witnesses::off).partition;
      auto const agreement = CharacterOracle(S, seed).agreement_partition();
      report.three_way_equal = tilde == approx && tilde == agreement;
    }
    return report;
  }

}  // namespace semiconj

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "report.hpp"

namespace semiconj::cli {

  struct Options {
    bool          json    = false;
    bool          force   = false;
    bool          fancy   = false;
    bool          timing  = false;
    std::uint64_t seed    = 0;
    /// Random triples for the composition-law check on large inputs.
    std::size_t   samples = 10000;
    std::string   out;
  };

  struct Built {
    /// The semigroup file.
    std::string text;
    /// Summary, printed instead of the file when it goes to opts.out.
    Report      report;
  };

  /// family: is, t, monogenic, sym, cyclic, from-generators or from-table.
  /// The last two take a file path as their parameter.
  Built build(std::string const&              family,
              std::vector<std::string> const& params,
              Options const&                  opts);

  Report analyze(std::string const& input, Options const& opts);

  /// relation: primary, tilde, action, character or group.
  Report conjugacy(std::string const& input,
                   std::string const& relation,
                   Options const&     opts);

  /// claim: theorem1, theorem2, lemma1, example1 or corollaries.
  Report verify(std::string const& input,
                std::string const& claim,
                Options const&     opts);

}  // namespace semiconj::cli

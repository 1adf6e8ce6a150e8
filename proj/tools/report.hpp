#pragma once

#include <semiconj/json_io.hpp>

#include <optional>
#include <string>
#include <vector>

namespace semiconj::cli {

  enum class Outcome { pass, fail, hypothesis_not_met, none };

  /// What a command prints. Identical inputs and seed give identical text in
  /// both modes unless timing is requested.
  struct Report {
    std::string              command;
    std::string              input_digest;
    json                     result = json::object();
    Outcome                  outcome = Outcome::none;
    /// Human-readable body for text mode.
    std::vector<std::string> lines;
    std::optional<double>    seconds;

    int exit_code() const noexcept;
  };

  std::string render(Report const& report, bool as_json);

}  // namespace semiconj::cli

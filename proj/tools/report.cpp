#include "report.hpp"

#include <cstdio>

namespace semiconj::cli {

  namespace {

    char const* verdict(Outcome o) {
      switch (o) {
        case Outcome::pass:
          return "PASS";
        case Outcome::fail:
          return "FAIL";
        case Outcome::hypothesis_not_met:
          return "HYPOTHESIS NOT MET";
        case Outcome::none:
          break;
      }
      return "";
    }

    std::string seconds_text(double s) {
      char buf[32];
      std::snprintf(buf, sizeof buf, "%.3f", s);
      return buf;
    }

  }  // namespace

  int Report::exit_code() const noexcept {
    switch (outcome) {
      case Outcome::fail:
        return 1;
      case Outcome::hypothesis_not_met:
        return 2;
      case Outcome::pass:
      case Outcome::none:
        break;
    }
    return 0;
  }

  std::string render(Report const& report, bool as_json) {
    if (as_json) {
      json j{{"command", report.command}};
      if (!report.input_digest.empty()) {
        j["input_digest"] = report.input_digest;
      }
      j["result"] = report.result;
      if (report.outcome != Outcome::none) {
        j["verdict"] = verdict(report.outcome);
      }
      if (report.seconds) {
        j["seconds"] = *report.seconds;
      }
      return dump(j);
    }
    std::string out = "$ " + report.command + "\n";
    if (!report.input_digest.empty()) {
      out += "input " + report.input_digest + "\n";
    }
    for (auto const& line : report.lines) {
      out += line + "\n";
    }
    if (report.outcome != Outcome::none) {
      out += std::string("verdict: ") + verdict(report.outcome) + "\n";
    }
    if (report.seconds) {
      out += "time: " + seconds_text(*report.seconds) + " s\n";
    }
    return out;
  }

}  // namespace semiconj::cli

#pragma once

#include <semiconj/semiconj.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace semiconj::cli {

  /// Bad arguments or unreadable input; the process exits with status 2.
  class UsageError : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
  };

  /// A family parameter outside the allowed range.
  class ParamOutOfRange : public UsageError {
   public:
    using UsageError::UsageError;
  };

  class IoError : public UsageError {
   public:
    using UsageError::UsageError;
  };

  /// A semigroup with a record of how it was made.
  struct Input {
    FiniteSemigroup S;
    json            provenance;
  };

  /// Built-in family by name: is, t, monogenic, sym, cyclic. Degrees of 5
  /// for is and t need `force`.
  Input build_family(std::string const&              family,
                     std::vector<std::size_t> const& params,
                     bool                            force);

  /// Either a built-in family such as "is:3" or "monogenic:2,1", or the path
  /// of a semigroup file.
  Input load_input(std::string const& source, bool force);

  std::string read_file(std::string const& path);
  void        write_file(std::string const& path, std::string const& text);

  /// Semigroup file text: provenance first, then the table.
  std::string semigroup_file(Input const& in);

  /// FNV-1a over the canonical serialization of the table and names.
  std::string digest(FiniteSemigroup const& S);

}  // namespace semiconj::cli

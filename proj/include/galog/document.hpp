#pragma once

#include <optional>
#include <string>

#include "galog/functions.hpp"
#include "galog/logarithm.hpp"

namespace galog {

// Exit codes shared by the CLI and its tests.
enum ExitCode : int {
  kExitOk = 0,
  kExitUsage = 2,        // parse or usage error
  kExitNonExistent = 3,  // empty-set result
  kExitSingular = 4,     // result carries log(0+) coefficients
  kExitVerifyFailed = 5, // roundtrip residual above threshold
};

// One evaluated operation, serializable as JSON or text.  JSON is the
// authoritative encoding; text renders the same numbers at 10 significant
// digits.
struct ResultDocument {
  Signature algebra{};
  std::string op;
  Multivector input;
  BranchParams branch;

  bool exists = true;
  ExtendedMultivector value;
  std::string case_row;
  FreeFamily family;
  std::string reason;

  std::optional<double> residual;   // exp round-trip residual, when checked
  std::optional<bool> converged;    // series-log only
  std::optional<int> terms;         // series-log only

  static ResultDocument from_log(Signature sig, std::string op, const Multivector& input,
                                 const BranchParams& b, const LogResult& r);
  static ResultDocument from_value(Signature sig, std::string op, const Multivector& input,
                                   const BranchParams& b, const Multivector& v);

  std::string to_json() const;  // single line
  std::string to_text() const;
  int exit_code() const;
};

}  // namespace galog

#pragma once

#include <stdexcept>
#include <string>

namespace tdchsh {

/// Rule-set problem: non-terminating rewriting, inconsistent adjoints, ...
struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// A vacuum expectation hit an irreducible word with no declared resolution.
struct UnresolvedExpectation : std::runtime_error {
  explicit UnresolvedExpectation(const std::string& word)
      : std::runtime_error("unresolved expectation for word: " + word), word_text(word) {}
  std::string word_text;
};

/// A symbolic reduction did not reach the expected closed form; carries the
/// residual polynomial.
struct DerivationFailure : std::runtime_error {
  DerivationFailure(const std::string& what, const std::string& residual)
      : std::runtime_error(what + " (residual: " + residual + ")"), residual_text(residual) {}
  std::string residual_text;
};

}  // namespace tdchsh

#pragma once

#include <stdexcept>
#include <string>

namespace eac {

// Stable error codes. The CLI surfaces these verbatim in JSON output, so the
// names must not change between releases.
enum class Errc {
  EmptyBases,
  UnequalSizes,
  ExchangeAxiomViolated,
  InvalidElement,
  InvalidOrder,
  InvalidRank,
  DeleteColoop,
  ContractLoop,
  NotABasis,
  ElementInBasis,
  ElementNotInBasis,
  NotAPartialOrder,
  WrongBasisSet,
  NotALinearExtension,
  NonPure,
  NotAPermutation,
  FaceEnumerationTooLarge,
  GroundTooLarge,
  ParseError,
  Internal,
};

// Kebab-case identifier for an error code, e.g. "exchange-axiom-violated".
const char* errc_name(Errc code);

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  Errc code() const { return code_; }
  const char* code_name() const { return errc_name(code_); }

 private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& message) {
  throw Error(code, message);
}

}  // namespace eac

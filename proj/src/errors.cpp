#include "eac/errors.hpp"

namespace eac {

const char* errc_name(Errc code) {
  switch (code) {
    case Errc::EmptyBases: return "empty-bases";
    case Errc::UnequalSizes: return "unequal-sizes";
    case Errc::ExchangeAxiomViolated: return "exchange-axiom-violated";
    case Errc::InvalidElement: return "invalid-element";
    case Errc::InvalidOrder: return "invalid-order";
    case Errc::InvalidRank: return "invalid-rank";
    case Errc::DeleteColoop: return "delete-coloop";
    case Errc::ContractLoop: return "contract-loop";
    case Errc::NotABasis: return "not-a-basis";
    case Errc::ElementInBasis: return "element-in-basis";
    case Errc::ElementNotInBasis: return "element-not-in-basis";
    case Errc::NotAPartialOrder: return "not-a-partial-order";
    case Errc::WrongBasisSet: return "wrong-basis-set";
    case Errc::NotALinearExtension: return "not-a-linear-extension";
    case Errc::NonPure: return "non-pure";
    case Errc::NotAPermutation: return "not-a-permutation";
    case Errc::FaceEnumerationTooLarge: return "face-enumeration-too-large";
    case Errc::GroundTooLarge: return "ground-too-large";
    case Errc::ParseError: return "parse-error";
    case Errc::Internal: return "internal";
  }
  return "unknown";
}

}  // namespace eac

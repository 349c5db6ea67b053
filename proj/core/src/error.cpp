#include "qcff/error.hpp"

namespace qcff {

std::string_view to_string(Errc code) noexcept {
  switch (code) {
    case Errc::NonPrimeP: return "NonPrimeP";
    case Errc::EvenCharacteristic: return "EvenCharacteristic";
    case Errc::ReducibleModulus: return "ReducibleModulus";
    case Errc::MissingModulus: return "MissingModulus";
    case Errc::BadModulus: return "BadModulus";
    case Errc::FieldTooLarge: return "FieldTooLarge";
    case Errc::BadElement: return "BadElement";
    case Errc::LogOfZero: return "LogOfZero";
    case Errc::DivisionByZero: return "DivisionByZero";
    case Errc::GcdOfZeros: return "GcdOfZeros";
    case Errc::ConstantInput: return "ConstantInput";
    case Errc::NonpositiveBound: return "NonpositiveBound";
    case Errc::NotCoprime: return "NotCoprime";
    case Errc::NotPrimeModulus: return "NotPrimeModulus";
    case Errc::BadFactorization: return "BadFactorization";
    case Errc::EqualPrimes: return "EqualPrimes";
    case Errc::NotMonic: return "NotMonic";
    case Errc::ConstantConductor: return "ConstantConductor";
    case Errc::ReducibleClaimedPrime: return "ReducibleClaimedPrime";
    case Errc::DuplicatePrime: return "DuplicatePrime";
    case Errc::PrimeNotInConductor: return "PrimeNotInConductor";
    case Errc::PairMembersEqual: return "PairMembersEqual";
    case Errc::DuplicatePair: return "DuplicatePair";
    case Errc::WrongOrientation: return "WrongOrientation";
    case Errc::EmptyPairSet: return "EmptyPairSet";
    case Errc::BadPair: return "BadPair";
    case Errc::OnlySinglePairSupported: return "OnlySinglePairSupported";
    case Errc::OutputTooLarge: return "OutputTooLarge";
    case Errc::ParseError: return "ParseError";
    case Errc::ConfigError: return "ConfigError";
    case Errc::NonIntegerGenus: return "NonIntegerGenus";
    case Errc::NegativeGenus: return "NegativeGenus";
    case Errc::GenusPathMismatch: return "GenusPathMismatch";
    case Errc::OracleFailure: return "OracleFailure";
  }
  return "Unknown";
}

ErrorKind kind_of(Errc code) noexcept {
  switch (code) {
    case Errc::NonPrimeP:
    case Errc::EvenCharacteristic:
    case Errc::MissingModulus:
    case Errc::BadModulus:
    case Errc::FieldTooLarge:
    case Errc::BadElement:
    case Errc::NonpositiveBound:
    case Errc::EmptyPairSet:
    case Errc::OutputTooLarge:
    case Errc::ParseError:
    case Errc::ConfigError:
      return ErrorKind::Config;
    case Errc::NonIntegerGenus:
    case Errc::NegativeGenus:
    case Errc::GenusPathMismatch:
    case Errc::OracleFailure:
      return ErrorKind::Internal;
    default:
      return ErrorKind::Math;
  }
}

Error::Error(Errc code, const std::string& detail)
    : std::runtime_error(std::string(to_string(code)) + ": " + detail), code_(code) {}

}  // namespace qcff

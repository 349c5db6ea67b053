#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace qcff {

/// Every failure the library reports carries one of these codes.
enum class Errc {
  // field construction
  NonPrimeP,
  EvenCharacteristic,
  ReducibleModulus,
  MissingModulus,
  BadModulus,
  FieldTooLarge,
  BadElement,
  LogOfZero,
  // polynomial ring
  DivisionByZero,
  GcdOfZeros,
  ConstantInput,
  NonpositiveBound,
  // residue symbols
  NotCoprime,
  NotPrimeModulus,
  BadFactorization,
  EqualPrimes,
  // conductors and pair sets
  NotMonic,
  ConstantConductor,
  ReducibleClaimedPrime,
  DuplicatePrime,
  PrimeNotInConductor,
  PairMembersEqual,
  DuplicatePair,
  WrongOrientation,
  EmptyPairSet,
  BadPair,
  OnlySinglePairSupported,
  OutputTooLarge,
  // ingestion
  ParseError,
  ConfigError,
  // internal consistency
  NonIntegerGenus,
  NegativeGenus,
  GenusPathMismatch,
  OracleFailure,
};

/// Coarse classification, mapped onto CLI exit codes.
enum class ErrorKind {
  Config,    // malformed or out-of-scope input (exit 2)
  Math,      // mathematically invalid input (exit 3)
  Internal,  // consistency failure inside the library (exit 4)
};

std::string_view to_string(Errc code) noexcept;
ErrorKind kind_of(Errc code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& detail);

  Errc code() const noexcept { return code_; }
  ErrorKind kind() const noexcept { return kind_of(code_); }

 private:
  Errc code_;
};

}  // namespace qcff

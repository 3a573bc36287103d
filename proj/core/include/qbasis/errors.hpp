// Copyright 2026 The qbasis Authors
// Licensed under the Apache License, Version 2.0 (see LICENSE file)

#pragma once

#include <stdexcept>
#include <string>

namespace qb {

enum class Errc {
  NotPrime,
  FieldMismatch,
  DivisionByZero,
  DimensionMismatch,
  RaggedInput,
  DuplicatePoints,
  FieldTooSmall,
  DuplicateValues,
  RetriesExhausted,
  InconsistentData,
  Singular,
  NotApplicable,
  WrongKind,
  NonPrimeStates,
  DuplicateCollapseEmpty,
  ParseError,
};

const char* errc_name(Errc c);

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& message)
      : std::runtime_error(std::string(errc_name(code)) + ": " + message), code_(code) {}

  Errc code() const noexcept { return code_; }

  // Input shape / parse problems versus violated mathematical preconditions.
  // The CLI maps the former to exit code 2 and the latter to 3.
  bool is_input_error() const noexcept {
    return code_ == Errc::ParseError || code_ == Errc::RaggedInput ||
           code_ == Errc::DimensionMismatch;
  }

 private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& message) {
  throw Error(code, message);
}

inline const char* errc_name(Errc c) {
  switch (c) {
    case Errc::NotPrime: return "NotPrime";
    case Errc::FieldMismatch: return "FieldMismatch";
    case Errc::DivisionByZero: return "DivisionByZero";
    case Errc::DimensionMismatch: return "DimensionMismatch";
    case Errc::RaggedInput: return "RaggedInput";
    case Errc::DuplicatePoints: return "DuplicatePoints";
    case Errc::FieldTooSmall: return "FieldTooSmall";
    case Errc::DuplicateValues: return "DuplicateValues";
    case Errc::RetriesExhausted: return "RetriesExhausted";
    case Errc::InconsistentData: return "InconsistentData";
    case Errc::Singular: return "Singular";
    case Errc::NotApplicable: return "NotApplicable";
    case Errc::WrongKind: return "WrongKind";
    case Errc::NonPrimeStates: return "NonPrimeStates";
    case Errc::DuplicateCollapseEmpty: return "DuplicateCollapseEmpty";
    case Errc::ParseError: return "ParseError";
  }
  return "Error";
}

}  // namespace qb

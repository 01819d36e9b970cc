// Copyright 2026 The Sliceworks Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <stdexcept>
#include <string>

namespace sliceworks {

enum class ErrorCode {
  InvalidArgument,
  ZeroDivision,
  NotInSliceCone,
  DegenerateSlicePair,
  EmptyUnitSet,
  InsufficientUnits,
  NonRealSymmetrization,
  NoWitnessPath,
  StepOutOfRange,
  OutOfDomain,
  IncompatibleDomains,
  DomainCheckFailed,
  NoConvergence,
  ParseError,
};

const char* to_string(ErrorCode code) noexcept;

/// Every failure raised by the kernel carries one of the codes above so the C
/// layer can translate it into a status without string matching.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace sliceworks

// Copyright 2026 The cycletrace Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef CYCLETRACE_ERROR_HPP
#define CYCLETRACE_ERROR_HPP

#include <stdexcept>
#include <string>
#include <string_view>

namespace cycletrace {

enum class ErrorKind {
  ParseError,
  InvalidLabel,
  InvalidArgument,
  EmptyGraph,
  LoopEdge,
  DuplicateLabel,
  DanglingEndpoint,
  Disconnected,
  UnknownEdge,
  UnknownVertex,
  VertexLabelCollision,
  DegreeNotTwo,
  WouldCreateLoop,
  NotASpanningTree,
  InvalidOrdering,
  EmptyOrdering,
  FixedPointPrecondition,
  InvalidRotation,
  DartNotInGraph,
  NonIntegerGenus,
  NegativeGenus,
  BudgetExceeded,
  InternalVerificationFailure,
  NotIdentityOrdering,
  NotSimple,
};

constexpr std::string_view error_name(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::InvalidLabel: return "InvalidLabel";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::EmptyGraph: return "EmptyGraph";
    case ErrorKind::LoopEdge: return "LoopEdge";
    case ErrorKind::DuplicateLabel: return "DuplicateLabel";
    case ErrorKind::DanglingEndpoint: return "DanglingEndpoint";
    case ErrorKind::Disconnected: return "Disconnected";
    case ErrorKind::UnknownEdge: return "UnknownEdge";
    case ErrorKind::UnknownVertex: return "UnknownVertex";
    case ErrorKind::VertexLabelCollision: return "VertexLabelCollision";
    case ErrorKind::DegreeNotTwo: return "DegreeNotTwo";
    case ErrorKind::WouldCreateLoop: return "WouldCreateLoop";
    case ErrorKind::NotASpanningTree: return "NotASpanningTree";
    case ErrorKind::InvalidOrdering: return "InvalidOrdering";
    case ErrorKind::EmptyOrdering: return "EmptyOrdering";
    case ErrorKind::FixedPointPrecondition: return "FixedPointPrecondition";
    case ErrorKind::InvalidRotation: return "InvalidRotation";
    case ErrorKind::DartNotInGraph: return "DartNotInGraph";
    case ErrorKind::NonIntegerGenus: return "NonIntegerGenus";
    case ErrorKind::NegativeGenus: return "NegativeGenus";
    case ErrorKind::BudgetExceeded: return "BudgetExceeded";
    case ErrorKind::InternalVerificationFailure: return "InternalVerificationFailure";
    case ErrorKind::NotIdentityOrdering: return "NotIdentityOrdering";
    case ErrorKind::NotSimple: return "NotSimple";
  }
  return "Unknown";
}

/// Every failure raised by the library carries one of the named kinds above.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(std::string(error_name(kind)) + ": " + message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

/// Parse failures additionally report a 1-based line and column.
class ParseError : public Error {
 public:
  ParseError(std::size_t line, std::size_t column, const std::string& message)
      : Error(ErrorKind::ParseError,
              "line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + message),
        line_(line),
        column_(column) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

}  // namespace cycletrace

#endif  // CYCLETRACE_ERROR_HPP

/*
   Copyright 2026 The charp-forms Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef CHARP_ERROR_HPP
#define CHARP_ERROR_HPP

#include <stdexcept>
#include <string>
#include <string_view>

namespace charp {

enum class ErrorKind {
  InvalidField,
  ZeroDenominator,
  UnknownVariable,
  BothZero,
  ZeroArgument,
  ZeroSlot,
  DegreeMismatch,
  ChainMismatch,
  ZeroElement,
  SameSlot,
  ZeroVector,
  BadRange,
  WrongCollectionSize,
  SlotsNotShared,
  DimensionMismatch,
  BadMultiIndex,
  TooLarge,
  NonConstantCoefficients,
  ExplicitLeaf,
  NonInvertible,
  SyntaxError,
  UnknownIdentifier,
  Overflow,
  InvalidArgument,
};

std::string_view to_string(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

/// Parse failure carrying the 0-based character offset of the offending token.
class SyntaxError : public Error {
 public:
  SyntaxError(std::size_t offset, const std::string& what)
      : Error(ErrorKind::SyntaxError, what + " at offset " + std::to_string(offset)), offset_(offset) {}

  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

}  // namespace charp

#endif  // CHARP_ERROR_HPP

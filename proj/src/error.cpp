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

#include "charp/error.hpp"

namespace charp {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InvalidField: return "InvalidField";
    case ErrorKind::ZeroDenominator: return "ZeroDenominator";
    case ErrorKind::UnknownVariable: return "UnknownVariable";
    case ErrorKind::BothZero: return "BothZero";
    case ErrorKind::ZeroArgument: return "ZeroArgument";
    case ErrorKind::ZeroSlot: return "ZeroSlot";
    case ErrorKind::DegreeMismatch: return "DegreeMismatch";
    case ErrorKind::ChainMismatch: return "ChainMismatch";
    case ErrorKind::ZeroElement: return "ZeroElement";
    case ErrorKind::SameSlot: return "SameSlot";
    case ErrorKind::ZeroVector: return "ZeroVector";
    case ErrorKind::BadRange: return "BadRange";
    case ErrorKind::WrongCollectionSize: return "WrongCollectionSize";
    case ErrorKind::SlotsNotShared: return "SlotsNotShared";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::BadMultiIndex: return "BadMultiIndex";
    case ErrorKind::TooLarge: return "TooLarge";
    case ErrorKind::NonConstantCoefficients: return "NonConstantCoefficients";
    case ErrorKind::ExplicitLeaf: return "ExplicitLeaf";
    case ErrorKind::NonInvertible: return "NonInvertible";
    case ErrorKind::SyntaxError: return "SyntaxError";
    case ErrorKind::UnknownIdentifier: return "UnknownIdentifier";
    case ErrorKind::Overflow: return "Overflow";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
  }
  return "Error";
}

}  // namespace charp

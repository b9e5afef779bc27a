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

#ifndef CHARP_SYMBOL_HPP
#define CHARP_SYMBOL_HPP

#include <vector>

#include "charp/field.hpp"

namespace charp {

/// A decomposable presentation alpha * dlog(b_1) ^ ... ^ dlog(b_n).
/// Slots are nonzero and n >= 1.
class SymbolPresentation {
 public:
  SymbolPresentation(FieldElement alpha, std::vector<FieldElement> slots);

  const CtxPtr& ctx() const noexcept { return alpha_.ctx(); }
  const FieldElement& alpha() const noexcept { return alpha_; }
  const std::vector<FieldElement>& slots() const noexcept { return slots_; }
  const FieldElement& slot(std::size_t i) const { return slots_.at(i); }
  std::size_t n() const noexcept { return slots_.size(); }

  SymbolPresentation with_alpha(FieldElement a) const;
  SymbolPresentation with_slot(std::size_t i, FieldElement b) const;

  friend bool operator==(const SymbolPresentation& a, const SymbolPresentation& b) {
    return a.alpha_ == b.alpha_ && a.slots_ == b.slots_;
  }
  friend bool operator!=(const SymbolPresentation& a, const SymbolPresentation& b) { return !(a == b); }

 private:
  FieldElement alpha_;
  std::vector<FieldElement> slots_;
};

}  // namespace charp

#endif  // CHARP_SYMBOL_HPP

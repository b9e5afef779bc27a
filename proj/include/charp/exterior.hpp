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

#ifndef CHARP_EXTERIOR_HPP
#define CHARP_EXTERIOR_HPP

#include <cstdint>
#include <map>
#include <span>
#include <vector>

#include "charp/field.hpp"
#include "charp/symbol.hpp"

namespace charp {

/// An element of Omega^n over F_{p^e}(x_1..x_k), stored in the basis
/// dx_{i_1} ^ ... ^ dx_{i_n} (i_1 < ... < i_n). A basis element is a bit mask
/// over variable indices; zero coefficients are never stored.
class DiffForm {
 public:
  using Basis = std::uint32_t;

  DiffForm(CtxPtr ctx, unsigned degree) : ctx_(std::move(ctx)), degree_(degree) {}

  static DiffForm scalar(const FieldElement& f);
  /// coef * dx_I for the index set encoded by `mask`.
  static DiffForm basis(const FieldElement& coef, Basis mask);

  const CtxPtr& ctx() const noexcept { return ctx_; }
  unsigned degree() const noexcept { return degree_; }
  const std::map<Basis, FieldElement>& components() const noexcept { return comps_; }
  FieldElement coeff(Basis mask) const;
  bool is_zero() const noexcept { return comps_.empty(); }

  /// Adds coef to the component at mask (mask must have popcount == degree).
  void accumulate(Basis mask, const FieldElement& coef);

  DiffForm operator-() const;
  DiffForm& operator+=(const DiffForm& o);
  DiffForm& operator-=(const DiffForm& o);
  friend DiffForm operator+(DiffForm a, const DiffForm& b) { return a += b; }
  friend DiffForm operator-(DiffForm a, const DiffForm& b) { return a -= b; }
  DiffForm scaled(const FieldElement& c) const;

  friend bool operator==(const DiffForm& a, const DiffForm& b) {
    return a.degree_ == b.degree_ && a.comps_ == b.comps_;
  }
  friend bool operator!=(const DiffForm& a, const DiffForm& b) { return !(a == b); }

 private:
  CtxPtr ctx_;
  unsigned degree_;
  std::map<Basis, FieldElement> comps_;
};

/// Variable indices of a basis mask in increasing order.
std::vector<std::size_t> basis_indices(DiffForm::Basis mask);
DiffForm::Basis basis_mask(std::span<const std::size_t> indices);

/// Exterior derivative.
DiffForm d(const DiffForm& w);
/// The 1-form df.
DiffForm differential(const FieldElement& f);
DiffForm wedge(const DiffForm& a, const DiffForm& b);
/// (1/b) db; throws ZeroArgument for b = 0.
DiffForm dlog(const FieldElement& b);
/// dlog(b_1) ^ ... ^ dlog(b_n); the empty product is the 0-form 1.
DiffForm log_wedge(const CtxPtr& ctx, std::span<const FieldElement> slots);
/// alpha dlog(b_1) ^ ... ^ dlog(b_n).
DiffForm eval_symbol(const SymbolPresentation& s);
/// (u^p - u) dlog(b_1) ^ ... ^ dlog(b_n); throws ZeroSlot.
DiffForm wp_image(const FieldElement& u, std::span<const FieldElement> slots);

}  // namespace charp

#endif  // CHARP_EXTERIOR_HPP

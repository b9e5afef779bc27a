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

#include "charp/exterior.hpp"

#include <bit>

#include "charp/error.hpp"

namespace charp {

SymbolPresentation::SymbolPresentation(FieldElement alpha, std::vector<FieldElement> slots)
    : alpha_(std::move(alpha)), slots_(std::move(slots)) {
  if (slots_.empty()) throw Error(ErrorKind::InvalidArgument, "a symbol needs at least one slot");
  for (std::size_t i = 0; i < slots_.size(); ++i) {
    if (slots_[i].is_zero()) throw Error(ErrorKind::ZeroSlot, "slot " + std::to_string(i + 1) + " is zero");
    if (!slots_[i].ctx()->same_as(*alpha_.ctx()))
      throw Error(ErrorKind::InvalidArgument, "slot from a different field");
  }
}

SymbolPresentation SymbolPresentation::with_alpha(FieldElement a) const { return {std::move(a), slots_}; }

SymbolPresentation SymbolPresentation::with_slot(std::size_t i, FieldElement b) const {
  auto s = slots_;
  s.at(i) = std::move(b);
  return {alpha_, std::move(s)};
}

DiffForm DiffForm::scalar(const FieldElement& f) {
  DiffForm w(f.ctx(), 0);
  if (!f.is_zero()) w.comps_.emplace(0, f);
  return w;
}

DiffForm DiffForm::basis(const FieldElement& coef, Basis mask) {
  DiffForm w(coef.ctx(), static_cast<unsigned>(std::popcount(mask)));
  if (mask >> coef.ctx()->nvars()) throw Error(ErrorKind::UnknownVariable, "basis index out of range");
  if (!coef.is_zero()) w.comps_.emplace(mask, coef);
  return w;
}

FieldElement DiffForm::coeff(Basis mask) const {
  auto it = comps_.find(mask);
  return it == comps_.end() ? FieldElement(ctx_) : it->second;
}

void DiffForm::accumulate(Basis mask, const FieldElement& coef) {
  if (coef.is_zero()) return;
  auto it = comps_.find(mask);
  if (it == comps_.end()) {
    comps_.emplace(mask, coef);
    return;
  }
  it->second += coef;
  if (it->second.is_zero()) comps_.erase(it);
}

DiffForm DiffForm::operator-() const {
  DiffForm r = *this;
  for (auto& [m, c] : r.comps_) c = -c;
  return r;
}

DiffForm& DiffForm::operator+=(const DiffForm& o) {
  if (degree_ != o.degree_) throw Error(ErrorKind::DegreeMismatch, "adding forms of different degree");
  for (const auto& [m, c] : o.comps_) accumulate(m, c);
  return *this;
}

DiffForm& DiffForm::operator-=(const DiffForm& o) { return *this += -o; }

DiffForm DiffForm::scaled(const FieldElement& c) const {
  DiffForm r(ctx_, degree_);
  if (c.is_zero()) return r;
  for (const auto& [m, v] : comps_) r.comps_.emplace(m, v * c);
  return r;
}

std::vector<std::size_t> basis_indices(DiffForm::Basis mask) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; mask != 0; ++i, mask >>= 1)
    if (mask & 1U) out.push_back(i);
  return out;
}

DiffForm::Basis basis_mask(std::span<const std::size_t> indices) {
  DiffForm::Basis m = 0;
  for (auto i : indices) m |= DiffForm::Basis{1} << i;
  return m;
}

namespace {

// Sign of dx_I ^ dx_J relative to dx_{I u J}; 0 when the sets meet.
int wedge_sign(DiffForm::Basis I, DiffForm::Basis J) {
  if (I & J) return 0;
  int swaps = 0;
  for (DiffForm::Basis j = J; j != 0; j &= j - 1) {
    const unsigned idx = static_cast<unsigned>(std::countr_zero(j));
    swaps += std::popcount(I >> (idx + 1));
  }
  return (swaps & 1) ? -1 : 1;
}

}  // namespace

DiffForm d(const DiffForm& w) {
  DiffForm r(w.ctx(), w.degree() + 1);
  const std::size_t k = w.ctx()->nvars();
  for (const auto& [mask, f] : w.components()) {
    for (std::size_t j = 0; j < k; ++j) {
      const DiffForm::Basis bit = DiffForm::Basis{1} << j;
      if (mask & bit) continue;
      FieldElement df = f.partial(j);
      if (df.is_zero()) continue;
      if (std::popcount(mask & (bit - 1)) & 1) df = -df;
      r.accumulate(mask | bit, df);
    }
  }
  return r;
}

DiffForm differential(const FieldElement& f) { return d(DiffForm::scalar(f)); }

DiffForm wedge(const DiffForm& a, const DiffForm& b) {
  DiffForm r(a.ctx(), a.degree() + b.degree());
  for (const auto& [I, f] : a.components()) {
    for (const auto& [J, g] : b.components()) {
      const int s = wedge_sign(I, J);
      if (s == 0) continue;
      FieldElement c = f * g;
      if (s < 0) c = -c;
      r.accumulate(I | J, c);
    }
  }
  return r;
}

DiffForm dlog(const FieldElement& b) {
  if (b.is_zero()) throw Error(ErrorKind::ZeroArgument, "dlog of zero");
  return differential(b).scaled(b.inverse());
}

DiffForm log_wedge(const CtxPtr& ctx, std::span<const FieldElement> slots) {
  DiffForm acc = DiffForm::scalar(FieldElement(ctx, 1));
  for (const auto& b : slots) {
    if (b.is_zero()) throw Error(ErrorKind::ZeroSlot, "zero slot");
    acc = wedge(acc, dlog(b));
    if (acc.is_zero()) {
      // keep the right degree for the zero result
      return DiffForm(ctx, static_cast<unsigned>(slots.size()));
    }
  }
  return acc;
}

DiffForm eval_symbol(const SymbolPresentation& s) { return log_wedge(s.ctx(), s.slots()).scaled(s.alpha()); }

DiffForm wp_image(const FieldElement& u, std::span<const FieldElement> slots) {
  return log_wedge(u.ctx(), slots).scaled(u.wp());
}

}  // namespace charp

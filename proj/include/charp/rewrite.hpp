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

#ifndef CHARP_REWRITE_HPP
#define CHARP_REWRITE_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "charp/as_algebra.hpp"
#include "charp/certs.hpp"
#include "charp/symbol.hpp"

namespace charp {

/// Outcome of a rewrite: either a new presentation of the same class or a
/// proof that the class is zero. The certificate always starts at the input;
/// for Trivial outcomes its rhs is the zero form.
struct RewriteResult {
  bool trivial = false;
  std::optional<SymbolPresentation> result;
  RewriteCertificate certificate;
};

// Elementary rules. Slot indices are 0-based.

/// (a; .., b_i, ..) -> (a + b_i; .., b_i, ..).
RewriteResult rule_a(const SymbolPresentation& s, std::size_t i);
/// Slot i -> b_i N(f). Trivial when N(f) = 0.
RewriteResult rule_b(const SymbolPresentation& s, std::size_t i, const ASElement& f);
/// Slot i -> b_i + gamma^p, alpha rescaled so the form is unchanged. Trivial when the new slot is 0.
RewriteResult rule_c(const SymbolPresentation& s, std::size_t i, const FieldElement& gamma);
/// Slot j -> b_i b_j.
RewriteResult rule_d(const SymbolPresentation& s, std::size_t i, std::size_t j);
/// Slots (i, j) -> (b_i + b_j, b_j / b_i). Trivial when b_i + b_j = 0.
RewriteResult rule_e(const SymbolPresentation& s, std::size_t i, std::size_t j);
/// Slot j -> (b_i + N(f)) b_j. Trivial when b_i + N(f) = 0.
RewriteResult rule_f(const SymbolPresentation& s, std::size_t i, std::size_t j, const ASElement& f);
/// Exchanges slots i and j; when p is odd the slot moved to position i is inverted.
RewriteResult swap_slots(const SymbolPresentation& s, std::size_t i, std::size_t j);
/// Trivial outcome from u with u^p - u = alpha.
RewriteResult trivial_by_generator(const SymbolPresentation& s, const FieldElement& u);

/// Vector indexed by the nonzero tuples d in {0,1}^n. A tuple is encoded with
/// d_1 as the most significant bit, so index order is lexicographic order and
/// the valid indices are 1 .. 2^n - 1.
class TupleVector {
 public:
  TupleVector(CtxPtr ctx, std::size_t n);

  std::size_t n() const noexcept { return n_; }
  std::size_t size() const noexcept { return entries_.size(); }
  const CtxPtr& ctx() const noexcept { return ctx_; }
  const ASElement& at(std::size_t index) const;
  void set(std::size_t index, ASElement f);
  bool is_zero() const noexcept;

  static std::size_t index_of(const std::vector<int>& d);
  static std::vector<int> tuple_of(std::size_t index, std::size_t n);

 private:
  CtxPtr ctx_;
  std::size_t n_;
  std::vector<ASElement> entries_;  // entries_[index - 1]
};

/// prod b_i^{d_i}.
FieldElement tuple_product(const std::vector<FieldElement>& slots, std::size_t index);
/// sum_d N(v_d) b^d.
FieldElement phi_value(const FieldElement& alpha, const std::vector<FieldElement>& slots, const TupleVector& v);

/// (a; b_1..b_n) -> (a; b'_1..b'_{n-1}, phi(v)) or Trivial.
RewriteResult slot_modify(const SymbolPresentation& s, const TupleVector& v);
/// Same target as slot_modify, for v supported on tuples with d_n = 1; slots
/// 1..n-1 are left unchanged.
RewriteResult slot_modify_last(const SymbolPresentation& s, const TupleVector& v);
/// Same target as slot_modify, for v supported on tuples with (d_l..d_n) != 0;
/// slots 1..l-1 are left unchanged. `l` is 1-based.
RewriteResult slot_modify_tail(const SymbolPresentation& s, std::size_t l, const TupleVector& v);

}  // namespace charp

#endif  // CHARP_REWRITE_HPP

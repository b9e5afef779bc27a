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

#ifndef CHARP_FINITE_FIELD_HPP
#define CHARP_FINITE_FIELD_HPP

#include <cstdint>
#include <vector>

namespace charp {

/// The coefficient field F_{p^e}, table driven.
///
/// An element is stored as the integer sum d_0 + d_1 p + ... + d_{e-1} p^{e-1}
/// where d_i is the coefficient of g^i and g is a root of the declared
/// minimal polynomial. For e = 1 the encoding is the residue itself.
class FiniteField {
 public:
  using Elem = std::uint16_t;

  /// `min_poly` lists coefficients from the constant term up, monic, size e + 1.
  /// An empty list selects the default polynomial for (p, e).
  FiniteField(unsigned p, unsigned e, std::vector<unsigned> min_poly = {});

  /// Smallest monic irreducible polynomial of degree e over F_p in the
  /// lexicographic order of its coefficient list read from the top.
  static std::vector<unsigned> default_min_poly(unsigned p, unsigned e);

  unsigned p() const noexcept { return p_; }
  unsigned e() const noexcept { return e_; }
  unsigned q() const noexcept { return q_; }
  const std::vector<unsigned>& min_poly() const noexcept { return min_poly_; }

  Elem add(Elem a, Elem b) const noexcept { return add_[a * q_ + b]; }
  Elem sub(Elem a, Elem b) const noexcept { return add_[a * q_ + neg_[b]]; }
  Elem neg(Elem a) const noexcept { return neg_[a]; }
  Elem mul(Elem a, Elem b) const noexcept { return mul_[a * q_ + b]; }
  /// Inverse of a nonzero element; inv(0) is 0.
  Elem inv(Elem a) const noexcept { return inv_[a]; }
  Elem pow(Elem a, unsigned long long k) const noexcept;
  Elem frobenius(Elem a) const noexcept { return frob_[a]; }
  Elem frobenius_inverse(Elem a) const noexcept { return frob_inv_[a]; }

  Elem from_int(long long v) const noexcept;
  Elem generator() const noexcept { return e_ > 1 ? static_cast<Elem>(p_) : Elem{1}; }
  /// Digits (coefficients of g^0 .. g^{e-1}) of an element.
  std::vector<unsigned> digits(Elem a) const;
  Elem from_digits(const std::vector<unsigned>& d) const;
  /// Absolute trace to F_p.
  unsigned trace(Elem a) const noexcept;

  bool operator==(const FiniteField& o) const noexcept {
    return p_ == o.p_ && e_ == o.e_ && min_poly_ == o.min_poly_;
  }

 private:
  unsigned p_;
  unsigned e_;
  unsigned q_;
  std::vector<unsigned> min_poly_;
  std::vector<Elem> add_;
  std::vector<Elem> mul_;
  std::vector<Elem> neg_;
  std::vector<Elem> inv_;
  std::vector<Elem> frob_;
  std::vector<Elem> frob_inv_;
};

bool is_prime(unsigned n) noexcept;

}  // namespace charp

#endif  // CHARP_FINITE_FIELD_HPP

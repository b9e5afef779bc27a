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

#ifndef CHARP_MPOLY_HPP
#define CHARP_MPOLY_HPP

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

#include "charp/finite_field.hpp"

namespace charp {

inline constexpr std::size_t kMaxVars = 8;

/// Exponent vector with cached total degree, compared graded-lexicographically.
struct Monomial {
  std::array<std::uint16_t, kMaxVars> exp{};
  std::uint32_t deg = 0;

  static Monomial var(std::size_t i, std::uint16_t power = 1);

  bool is_one() const noexcept { return deg == 0; }
  bool divides(const Monomial& other) const noexcept;
  Monomial operator*(const Monomial& o) const;
  /// Requires divides(o).
  Monomial operator/(const Monomial& o) const noexcept;

  friend bool operator==(const Monomial& a, const Monomial& b) noexcept { return a.exp == b.exp; }
  /// grlex: total degree first, then the exponent of the first variable, and so on.
  friend bool operator<(const Monomial& a, const Monomial& b) noexcept {
    if (a.deg != b.deg) return a.deg < b.deg;
    return a.exp < b.exp;
  }
};

struct Term {
  Monomial mono;
  FiniteField::Elem coef;
};

/// Sparse multivariate polynomial over F_{p^e}, terms sorted by decreasing monomial.
///
/// The class stores no field pointer; every operation that needs arithmetic
/// takes the coefficient field explicitly.
class Poly {
 public:
  Poly() = default;
  static Poly constant(FiniteField::Elem c);
  static Poly monomial(const Monomial& m, FiniteField::Elem c);
  /// Builds from unsorted terms with possible repeats; zero sums are dropped.
  static Poly from_terms(const FiniteField& F, std::vector<Term> terms);

  bool is_zero() const noexcept { return terms_.empty(); }
  bool is_constant() const noexcept { return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_one()); }
  bool is_one() const noexcept { return terms_.size() == 1 && terms_[0].mono.is_one() && terms_[0].coef == 1; }
  const std::vector<Term>& terms() const noexcept { return terms_; }
  std::size_t size() const noexcept { return terms_.size(); }
  const Term& lead() const { return terms_.front(); }
  FiniteField::Elem constant_value() const noexcept { return terms_.empty() ? 0 : terms_[0].coef; }
  std::uint32_t total_degree() const noexcept { return terms_.empty() ? 0 : terms_.front().mono.deg; }
  unsigned degree_in(std::size_t var) const noexcept;
  /// Bit i set when variable i occurs.
  std::uint32_t var_mask() const noexcept;

  friend bool operator==(const Poly& a, const Poly& b) noexcept;
  friend bool operator<(const Poly& a, const Poly& b) noexcept;

 private:
  std::vector<Term> terms_;
  friend class PolyOps;
};

/// Arithmetic on Poly relative to a fixed coefficient field.
class PolyOps {
 public:
  explicit PolyOps(const FiniteField& F) : F_(F) {}

  const FiniteField& field() const noexcept { return F_; }

  Poly add(const Poly& a, const Poly& b) const;
  Poly sub(const Poly& a, const Poly& b) const;
  Poly neg(const Poly& a) const;
  Poly scale(const Poly& a, FiniteField::Elem c) const;
  Poly mul_term(const Poly& a, const Monomial& m, FiniteField::Elem c) const;
  Poly mul(const Poly& a, const Poly& b) const;
  Poly pow(const Poly& a, unsigned long long k) const;
  /// a^p computed termwise (Frobenius).
  Poly frobenius(const Poly& a) const;
  /// b with b^p == a, if it exists.
  std::optional<Poly> pth_root(const Poly& a) const;
  Poly derivative(const Poly& a, std::size_t var) const;

  /// Quotient when b divides a exactly, otherwise nullopt.
  std::optional<Poly> divide_exact(const Poly& a, const Poly& b) const;
  /// Scales so the leading coefficient is 1 (zero stays zero).
  Poly monic(const Poly& a) const;
  /// Monic gcd; gcd(0, 0) is 0.
  Poly gcd(const Poly& a, const Poly& b) const;

  /// Substitutes constants for every variable.
  FiniteField::Elem evaluate(const Poly& a, const std::vector<FiniteField::Elem>& point) const;

 private:
  using UPoly = std::vector<Poly>;  // univariate in a chosen variable, coefficient i at index i

  Poly gcd_primitive(const Poly& a, const Poly& b) const;
  /// gcd of polynomials primitive in `var`, by evaluation and interpolation over an extension field.
  std::optional<Poly> gcd_interpolated(const Poly& a, const Poly& b, std::size_t var) const;
  UPoly to_univariate(const Poly& a, std::size_t var) const;
  Poly from_univariate(const UPoly& u, std::size_t var) const;
  Poly content(const UPoly& u) const;
  UPoly pseudo_remainder(UPoly a, const UPoly& b) const;

  const FiniteField& F_;
};

}  // namespace charp

#endif  // CHARP_MPOLY_HPP

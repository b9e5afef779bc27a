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

#ifndef CHARP_FIELD_HPP
#define CHARP_FIELD_HPP

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "charp/finite_field.hpp"
#include "charp/mpoly.hpp"

namespace charp {

/// A rational function field F_{p^e}(x_1, ..., x_k) with named variables.
class FieldCtx {
 public:
  FieldCtx(unsigned p, unsigned e, std::vector<unsigned> min_poly, std::vector<std::string> vars);

  static std::shared_ptr<const FieldCtx> create(unsigned p, unsigned e = 1, std::vector<std::string> vars = {},
                                                std::vector<unsigned> min_poly = {});

  unsigned p() const noexcept { return fq_.p(); }
  unsigned e() const noexcept { return fq_.e(); }
  const FiniteField& fq() const noexcept { return fq_; }
  const PolyOps& ops() const noexcept { return ops_; }
  const std::vector<std::string>& vars() const noexcept { return vars_; }
  std::size_t nvars() const noexcept { return vars_.size(); }
  /// Index of a variable, or nullopt.
  std::optional<std::size_t> var_index(const std::string& name) const;

  bool same_as(const FieldCtx& o) const noexcept { return this == &o || (fq_ == o.fq_ && vars_ == o.vars_); }

 private:
  FiniteField fq_;
  PolyOps ops_;
  std::vector<std::string> vars_;
};

using CtxPtr = std::shared_ptr<const FieldCtx>;

/// An element of the rational function field kept as a canonical fraction:
/// gcd(num, den) = 1, den monic in grlex order, and zero is 0/1.
class FieldElement {
 public:
  /// The zero element.
  explicit FieldElement(CtxPtr ctx);
  FieldElement(CtxPtr ctx, long long value);

  static FieldElement normalize(CtxPtr ctx, Poly num, Poly den);
  static FieldElement from_poly(CtxPtr ctx, Poly num);
  static FieldElement variable(CtxPtr ctx, std::size_t index);
  static FieldElement variable(CtxPtr ctx, const std::string& name);
  /// The generator g of F_{p^e} (equals 1 when e = 1).
  static FieldElement generator(CtxPtr ctx);
  static FieldElement constant(CtxPtr ctx, FiniteField::Elem c);

  const CtxPtr& ctx() const noexcept { return ctx_; }
  const Poly& num() const noexcept { return num_; }
  const Poly& den() const noexcept { return den_; }

  bool is_zero() const noexcept { return num_.is_zero(); }
  bool is_one() const noexcept { return num_.is_one() && den_.is_one(); }
  /// True for elements of F_{p^e}.
  bool is_constant() const noexcept { return num_.is_constant() && den_.is_one(); }
  bool is_polynomial() const noexcept { return den_.is_one(); }

  FieldElement operator-() const;
  FieldElement& operator+=(const FieldElement& o);
  FieldElement& operator-=(const FieldElement& o);
  FieldElement& operator*=(const FieldElement& o);
  FieldElement& operator/=(const FieldElement& o);
  friend FieldElement operator+(FieldElement a, const FieldElement& b) { return a += b; }
  friend FieldElement operator-(FieldElement a, const FieldElement& b) { return a -= b; }
  friend FieldElement operator*(FieldElement a, const FieldElement& b) { return a *= b; }
  friend FieldElement operator/(FieldElement a, const FieldElement& b) { return a /= b; }
  friend bool operator==(const FieldElement& a, const FieldElement& b) noexcept {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const FieldElement& a, const FieldElement& b) noexcept { return !(a == b); }
  /// Arbitrary but fixed total order on canonical forms.
  friend bool operator<(const FieldElement& a, const FieldElement& b) noexcept {
    if (a.num_ == b.num_) return a.den_ < b.den_;
    return a.num_ < b.num_;
  }

  FieldElement inverse() const;
  FieldElement pow(long long k) const;
  /// a^p.
  FieldElement frobenius() const;
  /// b with b^p = a when a is a p-th power.
  std::optional<FieldElement> pth_root() const;
  /// Artin-Schreier map a^p - a.
  FieldElement wp() const;
  FieldElement partial(std::size_t var) const;
  FieldElement partial(const std::string& var) const;

  FieldElement make(long long v) const { return FieldElement(ctx_, v); }
  FieldElement zero() const { return FieldElement(ctx_); }
  FieldElement one() const { return FieldElement(ctx_, 1); }

 private:
  FieldElement(CtxPtr ctx, Poly num, Poly den) : ctx_(std::move(ctx)), num_(std::move(num)), den_(std::move(den)) {}
  void check_ctx(const FieldElement& o) const;

  CtxPtr ctx_;
  Poly num_;
  Poly den_;
};

/// Free-function spellings of the field_arith operations.
FieldElement normalize(const CtxPtr& ctx, const Poly& num, const Poly& den);
FieldElement partial_derivative(const FieldElement& a, std::size_t var);
std::optional<FieldElement> pth_root(const FieldElement& a);
FieldElement wp(const FieldElement& a);

/// Univariate polynomial in an auxiliary indeterminate T over the rational function field.
class UniPoly {
 public:
  explicit UniPoly(CtxPtr ctx) : ctx_(std::move(ctx)) {}
  /// Coefficients from T^0 upward; trailing zeros are dropped.
  UniPoly(CtxPtr ctx, std::vector<FieldElement> coeffs);

  /// T^p - T - a.
  static UniPoly artin_schreier(const FieldElement& a);

  const CtxPtr& ctx() const noexcept { return ctx_; }
  const std::vector<FieldElement>& coeffs() const noexcept { return coeffs_; }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  /// -1 for the zero polynomial.
  long degree() const noexcept { return static_cast<long>(coeffs_.size()) - 1; }
  const FieldElement& lead() const { return coeffs_.back(); }
  FieldElement coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : FieldElement(ctx_); }

  UniPoly operator+(const UniPoly& o) const;
  UniPoly operator-(const UniPoly& o) const;
  UniPoly operator*(const UniPoly& o) const;
  UniPoly scaled(const FieldElement& c) const;
  /// Quotient and remainder; throws on division by zero.
  std::pair<UniPoly, UniPoly> divmod(const UniPoly& d) const;
  UniPoly monic() const;
  FieldElement evaluate(const FieldElement& t) const;

  friend bool operator==(const UniPoly& a, const UniPoly& b) { return a.coeffs_ == b.coeffs_; }

 private:
  void trim();

  CtxPtr ctx_;
  std::vector<FieldElement> coeffs_;
};

/// Monic gcd by the Euclidean algorithm. Throws BothZero when both inputs vanish.
UniPoly uni_gcd(const UniPoly& f, const UniPoly& h);

}  // namespace charp

#endif  // CHARP_FIELD_HPP

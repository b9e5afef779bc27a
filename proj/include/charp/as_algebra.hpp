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

#ifndef CHARP_AS_ALGEBRA_HPP
#define CHARP_AS_ALGEBRA_HPP

#include <algorithm>
#include <vector>

#include "charp/field.hpp"

namespace charp {

/// c_0 + c_1 L + ... + c_{p-1} L^{p-1} in F[L]/(L^p - L - alpha).
/// The ambient alpha is supplied to the operations that need it.
class ASElement {
 public:
  /// Missing trailing coefficients are zero; more than p coefficients is an error.
  ASElement(CtxPtr ctx, std::vector<FieldElement> coeffs);

  static ASElement zero(const CtxPtr& ctx) { return ASElement(ctx, {}); }
  static ASElement constant(const FieldElement& c) { return ASElement(c.ctx(), {c}); }
  static ASElement binomial(const FieldElement& c0, const FieldElement& c1) { return ASElement(c0.ctx(), {c0, c1}); }

  const CtxPtr& ctx() const noexcept { return ctx_; }
  const std::vector<FieldElement>& coeffs() const noexcept { return coeffs_; }
  const FieldElement& coeff(std::size_t i) const { return coeffs_.at(i); }
  bool is_zero() const noexcept;
  /// c_2 = ... = c_{p-1} = 0.
  bool is_binomial() const noexcept;
  /// c_1 = ... = c_{p-1} = 0.
  bool is_constant() const noexcept;
  /// Coefficients read as a polynomial in T.
  UniPoly to_unipoly() const { return UniPoly(ctx_, coeffs_); }

  ASElement operator+(const ASElement& o) const;
  ASElement operator-(const ASElement& o) const;
  ASElement scaled(const FieldElement& c) const;

  friend bool operator==(const ASElement& a, const ASElement& b) { return a.coeffs_ == b.coeffs_; }

 private:
  CtxPtr ctx_;
  std::vector<FieldElement> coeffs_;
};

/// Coordinates of L^m, m = 0 .. 2p - 2, in the basis 1, L, ..., L^{p-1}.
std::vector<std::vector<FieldElement>> power_table(const FieldElement& alpha);

ASElement as_mul(const FieldElement& alpha, const ASElement& f, const ASElement& g);
/// f(L + k): the image under the k-th power of the generator L -> L + 1.
ASElement as_shift(const ASElement& f, long long k);
/// Inverse in L; throws NonInvertible when N(f) = 0.
ASElement as_inverse(const FieldElement& alpha, const ASElement& f);

/// Determinant by permutation expansion over any commutative ring R.
template <class R>
R leibniz_determinant(const std::vector<std::vector<R>>& m, const R& zero) {
  const std::size_t n = m.size();
  std::vector<std::size_t> perm(n);
  for (std::size_t i = 0; i < n; ++i) perm[i] = i;
  R total = zero;
  do {
    std::size_t inversions = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        if (perm[i] > perm[j]) ++inversions;
    R prod = m[0][perm[0]];
    for (std::size_t i = 1; i < n; ++i) prod = prod * m[i][perm[i]];
    if (inversions & 1U) {
      total = total - prod;
    } else {
      total = total + prod;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

/// Matrix of multiplication by f = sum coords[k] L^k; column j holds f * L^j.
/// `scale(r, c)` must return r * c for r in R and c in F.
template <class R, class Scale>
std::vector<std::vector<R>> multiplication_matrix(const std::vector<std::vector<FieldElement>>& powers,
                                                  const std::vector<R>& coords, const R& zero, Scale scale) {
  const std::size_t p = coords.size();
  std::vector<std::vector<R>> m(p, std::vector<R>(p, zero));
  for (std::size_t j = 0; j < p; ++j)
    for (std::size_t k = 0; k < p; ++k)
      for (std::size_t i = 0; i < p; ++i) {
        const FieldElement& r = powers[k + j][i];
        if (!r.is_zero()) m[i][j] = m[i][j] + scale(coords[k], r);
      }
  return m;
}

/// N_{L/F}(f) = det of multiplication by f.
FieldElement norm(const FieldElement& alpha, const ASElement& f);

}  // namespace charp

#endif  // CHARP_AS_ALGEBRA_HPP

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

#include "charp/as_algebra.hpp"

#include "charp/error.hpp"

namespace charp {

ASElement::ASElement(CtxPtr ctx, std::vector<FieldElement> coeffs) : ctx_(std::move(ctx)), coeffs_(std::move(coeffs)) {
  const std::size_t p = ctx_->p();
  if (coeffs_.size() > p)
    throw Error(ErrorKind::InvalidArgument, "element of the Artin-Schreier algebra has more than p coordinates");
  coeffs_.resize(p, FieldElement(ctx_));
}

bool ASElement::is_zero() const noexcept {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const FieldElement& c) { return c.is_zero(); });
}

bool ASElement::is_binomial() const noexcept {
  return std::all_of(coeffs_.begin() + std::min<std::size_t>(2, coeffs_.size()), coeffs_.end(),
                     [](const FieldElement& c) { return c.is_zero(); });
}

bool ASElement::is_constant() const noexcept {
  return std::all_of(coeffs_.begin() + 1, coeffs_.end(), [](const FieldElement& c) { return c.is_zero(); });
}

ASElement ASElement::operator+(const ASElement& o) const {
  auto c = coeffs_;
  for (std::size_t i = 0; i < c.size(); ++i) c[i] += o.coeffs_[i];
  return {ctx_, std::move(c)};
}

ASElement ASElement::operator-(const ASElement& o) const {
  auto c = coeffs_;
  for (std::size_t i = 0; i < c.size(); ++i) c[i] -= o.coeffs_[i];
  return {ctx_, std::move(c)};
}

ASElement ASElement::scaled(const FieldElement& k) const {
  auto c = coeffs_;
  for (auto& x : c) x *= k;
  return {ctx_, std::move(c)};
}

std::vector<std::vector<FieldElement>> power_table(const FieldElement& alpha) {
  const auto& ctx = alpha.ctx();
  const std::size_t p = ctx->p();
  std::vector<std::vector<FieldElement>> pw(2 * p - 1, std::vector<FieldElement>(p, FieldElement(ctx)));
  for (std::size_t m = 0; m < p; ++m) pw[m][m] = FieldElement(ctx, 1);
  for (std::size_t m = p; m < 2 * p - 1; ++m) {
    // L^m = L^{m-p+1} + alpha L^{m-p}
    for (std::size_t i = 0; i < p; ++i) pw[m][i] = pw[m - p + 1][i] + alpha * pw[m - p][i];
  }
  return pw;
}

ASElement as_mul(const FieldElement& alpha, const ASElement& f, const ASElement& g) {
  const auto& ctx = f.ctx();
  const std::size_t p = ctx->p();
  std::vector<FieldElement> prod(2 * p - 1, FieldElement(ctx));
  for (std::size_t i = 0; i < p; ++i) {
    if (f.coeff(i).is_zero()) continue;
    for (std::size_t j = 0; j < p; ++j)
      if (!g.coeff(j).is_zero()) prod[i + j] += f.coeff(i) * g.coeff(j);
  }
  // fold L^m = L^{m-p+1} + alpha L^{m-p} from the top down
  for (std::size_t m = 2 * p - 2; m >= p; --m) {
    if (prod[m].is_zero()) continue;
    prod[m - p + 1] += prod[m];
    prod[m - p] += alpha * prod[m];
    prod[m] = FieldElement(ctx);
  }
  prod.resize(p, FieldElement(ctx));
  return {ctx, std::move(prod)};
}

ASElement as_shift(const ASElement& f, long long k) {
  // f(L + k) = sum_i c_i (L + k)^i, expanded with binomial coefficients mod p
  const auto& ctx = f.ctx();
  const std::size_t p = ctx->p();
  std::vector<FieldElement> out(p, FieldElement(ctx));
  const FieldElement kk(ctx, k);
  for (std::size_t i = 0; i < p; ++i) {
    if (f.coeff(i).is_zero()) continue;
    // (L + k)^i = sum_j C(i, j) k^{i-j} L^j
    long long c = 1;
    for (std::size_t j = 0; j <= i; ++j) {
      if (j > 0) c = c * static_cast<long long>(i - j + 1) / static_cast<long long>(j);
      out[j] += f.coeff(i) * FieldElement(ctx, c % static_cast<long long>(p)) * kk.pow(static_cast<long long>(i - j));
    }
  }
  return {ctx, std::move(out)};
}

ASElement as_inverse(const FieldElement& alpha, const ASElement& f) {
  const auto& ctx = f.ctx();
  const FieldElement n = norm(alpha, f);
  if (n.is_zero()) throw Error(ErrorKind::NonInvertible, "element has zero norm");
  ASElement adj = ASElement::constant(FieldElement(ctx, 1));
  for (std::size_t k = 1; k < ctx->p(); ++k) adj = as_mul(alpha, adj, as_shift(f, static_cast<long long>(k)));
  return adj.scaled(n.inverse());
}

FieldElement norm(const FieldElement& alpha, const ASElement& f) {
  const auto& ctx = f.ctx();
  const FieldElement zero(ctx);
  if (f.is_constant()) return f.coeff(0).pow(static_cast<long long>(ctx->p()));
  const auto powers = power_table(alpha);
  const auto m = multiplication_matrix(powers, f.coeffs(), zero,
                                       [](const FieldElement& a, const FieldElement& b) { return a * b; });
  return leibniz_determinant(m, zero);
}

}  // namespace charp

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

#include "charp/cyclic.hpp"

#include "charp/error.hpp"

namespace charp {

AlgebraElement::AlgebraElement(CtxPtr ctx, std::vector<FieldElement> coords)
    : ctx_(std::move(ctx)), coords_(std::move(coords)) {
  const std::size_t p = ctx_->p();
  if (coords_.size() != p * p) throw Error(ErrorKind::DimensionMismatch, "algebra elements have p^2 coordinates");
}

const FieldElement& AlgebraElement::coeff(std::size_t i, std::size_t j) const {
  return coords_.at(i + ctx_->p() * j);
}

ASElement AlgebraElement::y_part(std::size_t j) const {
  const std::size_t p = ctx_->p();
  return ASElement(ctx_, std::vector<FieldElement>(coords_.begin() + static_cast<long>(p * j),
                                                   coords_.begin() + static_cast<long>(p * (j + 1))));
}

bool AlgebraElement::is_zero() const noexcept {
  for (const auto& c : coords_)
    if (!c.is_zero()) return false;
  return true;
}

AlgebraElement AlgebraElement::operator+(const AlgebraElement& o) const {
  AlgebraElement r = *this;
  for (std::size_t k = 0; k < coords_.size(); ++k) r.coords_[k] += o.coords_[k];
  return r;
}

AlgebraElement AlgebraElement::operator-(const AlgebraElement& o) const {
  AlgebraElement r = *this;
  for (std::size_t k = 0; k < coords_.size(); ++k) r.coords_[k] -= o.coords_[k];
  return r;
}

AlgebraElement AlgebraElement::scaled(const FieldElement& c) const {
  AlgebraElement r = *this;
  for (auto& v : r.coords_) v *= c;
  return r;
}

CyclicAlgebra::CyclicAlgebra(FieldElement alpha, FieldElement beta) : alpha_(std::move(alpha)), beta_(std::move(beta)) {
  if (beta_.is_zero()) throw Error(ErrorKind::ZeroElement, "beta must be nonzero");
}

AlgebraElement CyclicAlgebra::zero() const {
  return AlgebraElement(ctx(), std::vector<FieldElement>(p() * p(), FieldElement(ctx())));
}

AlgebraElement CyclicAlgebra::one() const { return basis(0, 0); }

AlgebraElement CyclicAlgebra::basis(std::size_t i, std::size_t j) const {
  std::vector<FieldElement> c(p() * p(), FieldElement(ctx()));
  c.at(i + p() * j) = FieldElement(ctx(), 1);
  return AlgebraElement(ctx(), std::move(c));
}

AlgebraElement CyclicAlgebra::from_parts(const std::vector<ASElement>& parts) const {
  if (parts.size() > p()) throw Error(ErrorKind::DimensionMismatch, "at most p parts");
  std::vector<FieldElement> c(p() * p(), FieldElement(ctx()));
  for (std::size_t j = 0; j < parts.size(); ++j)
    for (std::size_t i = 0; i < p(); ++i) c[i + p() * j] = parts[j].coeff(i);
  return AlgebraElement(ctx(), std::move(c));
}

AlgebraElement CyclicAlgebra::mult(const AlgebraElement& a, const AlgebraElement& b) const {
  const std::size_t n = p();
  std::vector<ASElement> out(n, ASElement::zero(ctx()));
  for (std::size_t j = 0; j < n; ++j) {
    const ASElement fj = a.y_part(j);
    if (fj.is_zero()) continue;
    for (std::size_t l = 0; l < n; ++l) {
      const ASElement gl = b.y_part(l);
      if (gl.is_zero()) continue;
      // y^j g(x) = g(x + j) y^j
      ASElement term = as_mul(alpha_, fj, as_shift(gl, static_cast<long long>(j)));
      std::size_t k = j + l;
      if (k >= n) {
        k -= n;
        term = term.scaled(beta_);
      }
      out[k] = out[k] + term;
    }
  }
  return from_parts(out);
}

AlgebraElement CyclicAlgebra::power_p(const AlgebraElement& a) const {
  AlgebraElement r = a;
  for (unsigned k = 1; k < p(); ++k) r = mult(r, a);
  return r;
}

SplitWitness split_witness(const FieldElement& alpha, const ASElement& g) {
  const FieldElement ng = g.is_zero() ? FieldElement(alpha.ctx()) : norm(alpha, g);
  if (ng.is_zero()) throw Error(ErrorKind::NonInvertible, "g has zero norm");
  CyclicAlgebra A(alpha, ng);
  const AlgebraElement t = A.mult(A.from_parts({as_inverse(alpha, g)}), A.y());
  const AlgebraElement u = t - A.one();
  return SplitWitness{A, t, A.power_p(t) == A.one(), A.power_p(u).is_zero()};
}

}  // namespace charp

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

#ifndef CHARP_CYCLIC_HPP
#define CHARP_CYCLIC_HPP

#include <vector>

#include "charp/as_algebra.hpp"

namespace charp {

/// Element of a cyclic p-algebra in the basis x^i y^j (0 <= i, j < p);
/// coordinate (i, j) is stored at i + p*j.
class AlgebraElement {
 public:
  AlgebraElement(CtxPtr ctx, std::vector<FieldElement> coords);

  const CtxPtr& ctx() const noexcept { return ctx_; }
  const std::vector<FieldElement>& coords() const noexcept { return coords_; }
  const FieldElement& coeff(std::size_t i, std::size_t j) const;
  /// Coefficient of y^j as an element of F[x]/(x^p - x - alpha).
  ASElement y_part(std::size_t j) const;
  bool is_zero() const noexcept;

  AlgebraElement operator+(const AlgebraElement& o) const;
  AlgebraElement operator-(const AlgebraElement& o) const;
  AlgebraElement scaled(const FieldElement& c) const;

  friend bool operator==(const AlgebraElement& a, const AlgebraElement& b) { return a.coords_ == b.coords_; }

 private:
  CtxPtr ctx_;
  std::vector<FieldElement> coords_;
};

/// [alpha, beta): generated by x, y with x^p = x + alpha, y^p = beta, y x = (x + 1) y.
class CyclicAlgebra {
 public:
  /// Throws ZeroElement for beta = 0.
  CyclicAlgebra(FieldElement alpha, FieldElement beta);

  const CtxPtr& ctx() const noexcept { return alpha_.ctx(); }
  const FieldElement& alpha() const noexcept { return alpha_; }
  const FieldElement& beta() const noexcept { return beta_; }
  unsigned p() const noexcept { return ctx()->p(); }

  AlgebraElement zero() const;
  AlgebraElement one() const;
  AlgebraElement basis(std::size_t i, std::size_t j) const;
  AlgebraElement x() const { return basis(1 % p(), 0); }
  AlgebraElement y() const { return basis(0, 1 % p()); }
  /// sum_j parts[j] y^j with parts[j] read as polynomials in x.
  AlgebraElement from_parts(const std::vector<ASElement>& parts) const;

  AlgebraElement mult(const AlgebraElement& a, const AlgebraElement& b) const;
  /// a multiplied by itself p times.
  AlgebraElement power_p(const AlgebraElement& a) const;

 private:
  FieldElement alpha_;
  FieldElement beta_;
};

struct SplitWitness {
  CyclicAlgebra algebra;  // [alpha, N(g))
  AlgebraElement t;       // g(x)^{-1} y
  bool t_power_is_one;    // t^p = 1
  bool nilpotent;         // (t - 1)^p = 0
};

/// Throws NonInvertible when N(g) = 0.
SplitWitness split_witness(const FieldElement& alpha, const ASElement& g);

}  // namespace charp

#endif  // CHARP_CYCLIC_HPP

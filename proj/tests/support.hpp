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

#ifndef CHARP_TESTS_SUPPORT_HPP
#define CHARP_TESTS_SUPPORT_HPP

#include <random>
#include <string>
#include <vector>

#include "charp/as_algebra.hpp"
#include "charp/expr.hpp"
#include "charp/field.hpp"

namespace charp::testing {

using Rng = std::mt19937_64;

inline FieldElement parse(const CtxPtr& ctx, const std::string& s) { return parse_expr(ctx, s); }

/// Random polynomial with up to `terms` terms of total degree <= deg.
inline FieldElement random_poly(const CtxPtr& ctx, Rng& rng, unsigned terms, unsigned deg) {
  std::uniform_int_distribution<unsigned> coef(0, ctx->fq().q() - 1);
  std::uniform_int_distribution<unsigned> nterms(1, terms);
  std::uniform_int_distribution<unsigned> var(0, static_cast<unsigned>(ctx->nvars()));
  std::uniform_int_distribution<unsigned> degree(0, deg);
  FieldElement sum(ctx);
  const unsigned count = nterms(rng);
  for (unsigned t = 0; t < count; ++t) {
    FieldElement mono = FieldElement::constant(ctx, static_cast<FiniteField::Elem>(coef(rng)));
    const unsigned d = degree(rng);
    for (unsigned k = 0; k < d; ++k) {
      const unsigned v = var(rng);
      if (v < ctx->nvars()) mono *= FieldElement::variable(ctx, v);
    }
    sum += mono;
  }
  return sum;
}

inline FieldElement random_nonzero_poly(const CtxPtr& ctx, Rng& rng, unsigned terms, unsigned deg) {
  while (true) {
    FieldElement f = random_poly(ctx, rng, terms, deg);
    if (!f.is_zero()) return f;
  }
}

/// Random rational function, a polynomial about half of the time.
inline FieldElement random_element(const CtxPtr& ctx, Rng& rng, unsigned terms = 3, unsigned deg = 2) {
  FieldElement num = random_poly(ctx, rng, terms, deg);
  if (std::uniform_int_distribution<int>(0, 1)(rng) == 0) return num;
  return num / random_nonzero_poly(ctx, rng, 2, deg);
}

inline FieldElement random_nonzero(const CtxPtr& ctx, Rng& rng, unsigned terms = 3, unsigned deg = 2) {
  while (true) {
    FieldElement f = random_element(ctx, rng, terms, deg);
    if (!f.is_zero()) return f;
  }
}

/// Random nonconstant polynomial element: nonzero differential in general.
inline FieldElement random_nonconstant(const CtxPtr& ctx, Rng& rng, unsigned terms = 3, unsigned deg = 2) {
  while (true) {
    FieldElement f = random_nonzero(ctx, rng, terms, deg);
    if (!f.is_constant()) return f;
  }
}

inline ASElement random_binomial(const CtxPtr& ctx, Rng& rng) {
  while (true) {
    ASElement f = ASElement::binomial(random_poly(ctx, rng, 2, 1), random_poly(ctx, rng, 2, 1));
    if (!f.is_zero()) return f;
  }
}

inline ASElement random_as(const CtxPtr& ctx, Rng& rng) {
  while (true) {
    std::vector<FieldElement> c;
    for (unsigned k = 0; k < ctx->p(); ++k) c.push_back(random_poly(ctx, rng, 2, 1));
    ASElement f(ctx, c);
    if (!f.is_zero()) return f;
  }
}

/// Norm as the product of the p conjugates f(L + k); an independent route to N(f).
inline FieldElement norm_by_conjugates(const FieldElement& alpha, const ASElement& f) {
  ASElement prod = ASElement::constant(alpha.one());
  for (unsigned k = 0; k < alpha.ctx()->p(); ++k) prod = as_mul(alpha, prod, as_shift(f, k));
  for (std::size_t k = 1; k < prod.coeffs().size(); ++k)
    if (!prod.coeff(k).is_zero()) throw std::logic_error("conjugate product left F");
  return prod.coeff(0);
}

/// c0^p - c0 c1^(p-1) + alpha c1^p.
inline FieldElement binomial_norm(const FieldElement& alpha, const FieldElement& c0, const FieldElement& c1) {
  const long long p = alpha.ctx()->p();
  return c0.pow(p) - c0 * c1.pow(p - 1) + alpha * c1.pow(p);
}

}  // namespace charp::testing

#endif  // CHARP_TESTS_SUPPORT_HPP

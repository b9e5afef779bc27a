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

#include "charp/finite_field.hpp"

#include <algorithm>
#include <string>

#include "charp/error.hpp"

namespace charp {

namespace {

constexpr unsigned kMaxFieldSize = 1024;

// Multiplies two digit vectors modulo the monic polynomial `mod` (degree e).
std::vector<unsigned> mulmod(const std::vector<unsigned>& a, const std::vector<unsigned>& b,
                             const std::vector<unsigned>& mod, unsigned p) {
  const std::size_t e = mod.size() - 1;
  std::vector<unsigned> prod(2 * e, 0);
  for (std::size_t i = 0; i < e; ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < e; ++j) prod[i + j] = (prod[i + j] + a[i] * b[j]) % p;
  }
  for (std::size_t k = prod.size(); k-- > e;) {
    const unsigned c = prod[k];
    if (c == 0) continue;
    prod[k] = 0;
    for (std::size_t i = 0; i < e; ++i) prod[k - e + i] = (prod[k - e + i] + (p - c) * mod[i]) % p;
  }
  prod.resize(e);
  return prod;
}

// True when the monic polynomial has no factor of degree <= deg/2 over F_p.
bool irreducible(const std::vector<unsigned>& poly, unsigned p) {
  const std::size_t deg = poly.size() - 1;
  if (deg <= 1) return deg == 1;
  // trial division by every monic polynomial of degree 1..deg/2
  for (std::size_t d = 1; d <= deg / 2; ++d) {
    std::size_t count = 1;
    for (std::size_t i = 0; i < d; ++i) count *= p;
    for (std::size_t code = 0; code < count; ++code) {
      std::vector<unsigned> div(d + 1, 0);
      std::size_t c = code;
      for (std::size_t i = 0; i < d; ++i) {
        div[i] = static_cast<unsigned>(c % p);
        c /= p;
      }
      div[d] = 1;
      std::vector<unsigned> rem = poly;
      for (std::size_t k = deg; k >= d; --k) {
        const unsigned lead = rem[k];
        if (lead != 0) {
          for (std::size_t i = 0; i <= d; ++i) rem[k - d + i] = (rem[k - d + i] + (p - lead) * div[i]) % p;
        }
        if (k == d) break;
      }
      if (std::all_of(rem.begin(), rem.end(), [](unsigned v) { return v == 0; })) return false;
    }
  }
  return true;
}

}  // namespace

bool is_prime(unsigned n) noexcept {
  if (n < 2) return false;
  for (unsigned d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::vector<unsigned> FiniteField::default_min_poly(unsigned p, unsigned e) {
  if (e == 1) return {0, 1};
  std::size_t count = 1;
  for (unsigned i = 0; i < e; ++i) count *= p;
  for (std::size_t code = 0; code < count; ++code) {
    std::vector<unsigned> poly(e + 1, 0);
    std::size_t c = code;
    for (unsigned i = 0; i < e; ++i) {
      poly[i] = static_cast<unsigned>(c % p);
      c /= p;
    }
    poly[e] = 1;
    if (irreducible(poly, p)) return poly;
  }
  throw Error(ErrorKind::InvalidField, "no irreducible polynomial found");
}

FiniteField::FiniteField(unsigned p, unsigned e, std::vector<unsigned> min_poly)
    : p_(p), e_(e), q_(1), min_poly_(std::move(min_poly)) {
  if (!is_prime(p)) throw Error(ErrorKind::InvalidField, "characteristic " + std::to_string(p) + " is not prime");
  if (e == 0) throw Error(ErrorKind::InvalidField, "extension degree must be at least 1");
  for (unsigned i = 0; i < e; ++i) {
    q_ *= p;
    if (q_ > kMaxFieldSize) throw Error(ErrorKind::InvalidField, "coefficient field too large");
  }
  if (min_poly_.empty()) min_poly_ = default_min_poly(p, e);
  if (min_poly_.size() != e + 1 || min_poly_.back() % p != 1)
    throw Error(ErrorKind::InvalidField, "minimal polynomial must be monic of degree e");
  for (auto& c : min_poly_) c %= p;
  if (e > 1 && !irreducible(min_poly_, p))
    throw Error(ErrorKind::InvalidField, "minimal polynomial is reducible over F_p");

  const unsigned q = q_;
  add_.resize(q * q);
  mul_.resize(q * q);
  neg_.resize(q);
  inv_.assign(q, 0);
  frob_.resize(q);
  frob_inv_.resize(q);
  std::vector<std::vector<unsigned>> dig(q);
  for (unsigned a = 0; a < q; ++a) dig[a] = digits(static_cast<Elem>(a));
  for (unsigned a = 0; a < q; ++a) {
    std::vector<unsigned> n(e);
    for (unsigned i = 0; i < e; ++i) n[i] = (p - dig[a][i]) % p;
    neg_[a] = from_digits(n);
    for (unsigned b = 0; b < q; ++b) {
      std::vector<unsigned> s(e);
      for (unsigned i = 0; i < e; ++i) s[i] = (dig[a][i] + dig[b][i]) % p;
      add_[a * q + b] = from_digits(s);
      mul_[a * q + b] = e == 1 ? static_cast<Elem>((a * b) % p) : from_digits(mulmod(dig[a], dig[b], min_poly_, p));
    }
  }
  for (unsigned a = 1; a < q; ++a)
    for (unsigned b = 1; b < q; ++b)
      if (mul_[a * q + b] == 1) {
        inv_[a] = static_cast<Elem>(b);
        break;
      }
  for (unsigned a = 0; a < q; ++a) {
    frob_[a] = pow(static_cast<Elem>(a), p);
    frob_inv_[frob_[a]] = static_cast<Elem>(a);
  }
}

FiniteField::Elem FiniteField::pow(Elem a, unsigned long long k) const noexcept {
  Elem result = 1;
  Elem base = a;
  while (k > 0) {
    if (k & 1ULL) result = mul(result, base);
    base = mul(base, base);
    k >>= 1;
  }
  return result;
}

FiniteField::Elem FiniteField::from_int(long long v) const noexcept {
  long long r = v % static_cast<long long>(p_);
  if (r < 0) r += p_;
  return static_cast<Elem>(r);
}

std::vector<unsigned> FiniteField::digits(Elem a) const {
  std::vector<unsigned> d(e_);
  unsigned v = a;
  for (unsigned i = 0; i < e_; ++i) {
    d[i] = v % p_;
    v /= p_;
  }
  return d;
}

FiniteField::Elem FiniteField::from_digits(const std::vector<unsigned>& d) const {
  unsigned v = 0;
  for (std::size_t i = d.size(); i-- > 0;) v = v * p_ + d[i] % p_;
  return static_cast<Elem>(v);
}

unsigned FiniteField::trace(Elem a) const noexcept {
  Elem t = 0;
  Elem c = a;
  for (unsigned i = 0; i < e_; ++i) {
    t = add(t, c);
    c = frobenius(c);
  }
  return t;  // lies in F_p, so the encoding is the residue
}

}  // namespace charp

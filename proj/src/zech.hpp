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

#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>
#include <vector>

#include "charp/finite_field.hpp"

namespace charp::detail {

/// GF(p^r) with elements stored as discrete logarithms and addition by Zech logarithms.
class ZechField {
 public:
  using Log = std::uint32_t;

  ZechField(unsigned p, unsigned r) : p_(p), r_(r) {
    q_ = 1;
    for (unsigned k = 0; k < r; ++k) q_ *= p;
    ord_ = q_ - 1;
    zero_ = ord_;
    build();
  }

  unsigned p() const noexcept { return p_; }
  Log zero() const noexcept { return zero_; }
  Log one() const noexcept { return 0; }
  Log order() const noexcept { return ord_; }

  Log mul(Log a, Log b) const noexcept {
    if (a == zero_ || b == zero_) return zero_;
    const Log s = a + b;
    return s >= ord_ ? s - ord_ : s;
  }
  Log pow(Log a, unsigned k) const noexcept {
    if (k == 0) return 0;
    if (a == zero_) return zero_;
    return static_cast<Log>((static_cast<std::uint64_t>(a) * k) % ord_);
  }
  Log add(Log a, Log b) const noexcept {
    if (a == zero_) return b;
    if (b == zero_) return a;
    const Log diff = b >= a ? b - a : b + ord_ - a;
    const Log z = zech_[diff];
    if (z == zero_) return zero_;
    return mul(a, z);
  }
  /// Image of the prime-field integer k.
  Log from_int(unsigned k) const noexcept { return log_[k % p_]; }

 private:
  void build() {
    exp_.assign(ord_, 0);
    log_.assign(q_, 0);
    std::vector<unsigned> low(r_, 0);  // f = T^r + sum low[i] T^i
    for (std::uint64_t code = 1;; ++code) {
      std::uint64_t c = code;
      for (unsigned i = 0; i < r_; ++i) {
        low[i] = static_cast<unsigned>(c % p_);
        c /= p_;
      }
      if (c != 0) throw std::logic_error("ZechField: no primitive polynomial found");
      if (low[0] == 0) continue;
      if (try_primitive(low)) break;
    }
    for (Log i = 0; i < ord_; ++i) log_[exp_[i]] = i;
    zech_.assign(ord_, zero_);
    for (Log i = 0; i < ord_; ++i) {
      // 1 + T^i: increment the constant digit.
      const std::uint32_t v = exp_[i];
      const std::uint32_t d0 = v % p_;
      const std::uint32_t w = v - d0 + (d0 + 1) % p_;
      zech_[i] = w == 0 ? zero_ : log_[w];
    }
  }

  bool try_primitive(const std::vector<unsigned>& low) {
    std::uint32_t top_unit = q_ / p_;
    std::uint32_t cur = 1;
    for (Log i = 0; i < ord_; ++i) {
      if (i > 0 && cur == 1) return false;
      exp_[i] = cur;
      // Multiply by T modulo f.
      const std::uint32_t top = cur / top_unit;
      std::uint32_t shifted = (cur % top_unit) * p_;
      if (top != 0) {
        std::uint32_t out = 0, unit = 1;
        for (unsigned k = 0; k < r_; ++k) {
          const unsigned digit = (shifted / unit) % p_;
          const unsigned sub = (top * low[k]) % p_;
          out += ((digit + p_ - sub) % p_) * unit;
          unit *= p_;
        }
        shifted = out;
      }
      cur = shifted;
    }
    return cur == 1;
  }

  unsigned p_, r_;
  std::uint32_t q_ = 0;
  Log ord_ = 0, zero_ = 0;
  std::vector<std::uint32_t> exp_;
  std::vector<Log> log_;
  std::vector<Log> zech_;
};

inline const ZechField& zech_field(unsigned p, unsigned r) {
  static std::mutex mu;
  static std::map<std::pair<unsigned, unsigned>, std::unique_ptr<ZechField>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto& slot = cache[{p, r}];
  if (!slot) slot = std::make_unique<ZechField>(p, r);
  return *slot;
}

/// Embedding of F_{p^e} into a ZechField of degree divisible by e.
inline std::vector<ZechField::Log> embed_constants(const FiniteField& F, const ZechField& Z) {
  ZechField::Log gen = Z.one();
  if (F.e() > 1) {
    const auto& mp = F.min_poly();  // low to high, monic
    bool found = false;
    for (ZechField::Log cand = 0; cand < Z.order() && !found; ++cand) {
      ZechField::Log acc = Z.zero();
      for (std::size_t i = 0; i < mp.size(); ++i)
        acc = Z.add(acc, Z.mul(Z.from_int(mp[i]), Z.pow(cand, static_cast<unsigned>(i))));
      if (acc == Z.zero()) {
        gen = cand;
        found = true;
      }
    }
    if (!found) throw std::logic_error("embed_constants: no root of the minimal polynomial");
  }
  std::vector<ZechField::Log> out(F.q());
  for (unsigned a = 0; a < F.q(); ++a) {
    const auto digits = F.digits(static_cast<FiniteField::Elem>(a));
    ZechField::Log acc = Z.zero();
    for (std::size_t i = 0; i < digits.size(); ++i)
      acc = Z.add(acc, Z.mul(Z.from_int(digits[i]), Z.pow(gen, static_cast<unsigned>(i))));
    out[a] = acc;
  }
  return out;
}

inline unsigned extension_degree(unsigned p, unsigned e) {
  constexpr std::uint64_t kLimit = std::uint64_t{1} << 18;
  unsigned r = e;
  std::uint64_t q = 1;
  for (unsigned k = 0; k < e; ++k) q *= p;
  std::uint64_t step = q;
  while (q * step <= kLimit) {
    q *= step;
    r += e;
  }
  return r;
}

}  // namespace charp::detail

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

#include "charp/mpoly.hpp"

#include <algorithm>
#include <array>
#include <limits>
#include <map>
#include <memory>
#include <mutex>
#include <queue>
#include <random>
#include <tuple>

#include "charp/error.hpp"
#include "zech.hpp"

namespace charp {

Monomial Monomial::var(std::size_t i, std::uint16_t power) {
  Monomial m;
  m.exp[i] = power;
  m.deg = power;
  return m;
}

bool Monomial::divides(const Monomial& other) const noexcept {
  if (deg > other.deg) return false;
  for (std::size_t i = 0; i < kMaxVars; ++i)
    if (exp[i] > other.exp[i]) return false;
  return true;
}

Monomial Monomial::operator*(const Monomial& o) const {
  Monomial r;
  for (std::size_t i = 0; i < kMaxVars; ++i) {
    const unsigned s = static_cast<unsigned>(exp[i]) + o.exp[i];
    if (s > std::numeric_limits<std::uint16_t>::max()) throw Error(ErrorKind::Overflow, "exponent overflow");
    r.exp[i] = static_cast<std::uint16_t>(s);
  }
  r.deg = deg + o.deg;
  return r;
}

Monomial Monomial::operator/(const Monomial& o) const noexcept {
  Monomial r;
  for (std::size_t i = 0; i < kMaxVars; ++i) r.exp[i] = static_cast<std::uint16_t>(exp[i] - o.exp[i]);
  r.deg = deg - o.deg;
  return r;
}

Poly Poly::constant(FiniteField::Elem c) {
  Poly r;
  if (c != 0) r.terms_.push_back({Monomial{}, c});
  return r;
}

Poly Poly::monomial(const Monomial& m, FiniteField::Elem c) {
  Poly r;
  if (c != 0) r.terms_.push_back({m, c});
  return r;
}

Poly Poly::from_terms(const FiniteField& F, std::vector<Term> terms) {
  std::sort(terms.begin(), terms.end(), [](const Term& a, const Term& b) { return b.mono < a.mono; });
  Poly r;
  r.terms_.reserve(terms.size());
  for (const Term& t : terms) {
    if (!r.terms_.empty() && r.terms_.back().mono == t.mono) {
      r.terms_.back().coef = F.add(r.terms_.back().coef, t.coef);
      if (r.terms_.back().coef == 0) r.terms_.pop_back();
    } else if (t.coef != 0) {
      r.terms_.push_back(t);
    }
  }
  return r;
}

unsigned Poly::degree_in(std::size_t var) const noexcept {
  unsigned d = 0;
  for (const Term& t : terms_) d = std::max<unsigned>(d, t.mono.exp[var]);
  return d;
}

std::uint32_t Poly::var_mask() const noexcept {
  std::uint32_t mask = 0;
  for (const Term& t : terms_)
    for (std::size_t i = 0; i < kMaxVars; ++i)
      if (t.mono.exp[i] != 0) mask |= 1U << i;
  return mask;
}

bool operator==(const Poly& a, const Poly& b) noexcept {
  if (a.terms_.size() != b.terms_.size()) return false;
  for (std::size_t i = 0; i < a.terms_.size(); ++i)
    if (a.terms_[i].coef != b.terms_[i].coef || !(a.terms_[i].mono == b.terms_[i].mono)) return false;
  return true;
}

bool operator<(const Poly& a, const Poly& b) noexcept {
  const std::size_t n = std::min(a.terms_.size(), b.terms_.size());
  for (std::size_t i = 0; i < n; ++i) {
    const Term& s = a.terms_[i];
    const Term& t = b.terms_[i];
    if (!(s.mono == t.mono)) return t.mono < s.mono;
    if (s.coef != t.coef) return s.coef < t.coef;
  }
  return a.terms_.size() < b.terms_.size();
}

Poly PolyOps::add(const Poly& a, const Poly& b) const {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  Poly r;
  r.terms_.reserve(a.terms_.size() + b.terms_.size());
  std::size_t i = 0, j = 0;
  while (i < a.terms_.size() && j < b.terms_.size()) {
    const Term& s = a.terms_[i];
    const Term& t = b.terms_[j];
    if (s.mono == t.mono) {
      const auto c = F_.add(s.coef, t.coef);
      if (c != 0) r.terms_.push_back({s.mono, c});
      ++i;
      ++j;
    } else if (t.mono < s.mono) {
      r.terms_.push_back(s);
      ++i;
    } else {
      r.terms_.push_back(t);
      ++j;
    }
  }
  for (; i < a.terms_.size(); ++i) r.terms_.push_back(a.terms_[i]);
  for (; j < b.terms_.size(); ++j) r.terms_.push_back(b.terms_[j]);
  return r;
}

Poly PolyOps::neg(const Poly& a) const {
  Poly r = a;
  for (Term& t : r.terms_) t.coef = F_.neg(t.coef);
  return r;
}

Poly PolyOps::sub(const Poly& a, const Poly& b) const { return add(a, neg(b)); }

Poly PolyOps::scale(const Poly& a, FiniteField::Elem c) const {
  if (c == 0) return {};
  if (c == 1) return a;
  Poly r = a;
  for (Term& t : r.terms_) t.coef = F_.mul(t.coef, c);
  return r;
}

Poly PolyOps::mul_term(const Poly& a, const Monomial& m, FiniteField::Elem c) const {
  if (c == 0) return {};
  Poly r = a;
  for (Term& t : r.terms_) {
    t.mono = t.mono * m;
    t.coef = F_.mul(t.coef, c);
  }
  return r;
}

Poly PolyOps::mul(const Poly& a, const Poly& b) const {
  if (a.is_zero() || b.is_zero()) return {};
  if (a.terms_.size() == 1) return mul_term(b, a.terms_[0].mono, a.terms_[0].coef);
  if (b.terms_.size() == 1) return mul_term(a, b.terms_[0].mono, b.terms_[0].coef);
  const std::size_t work = a.terms_.size() * b.terms_.size();
  if (work >= 4096) {
    // Dense accumulation over the exponent box of the product.
    std::array<std::size_t, kMaxVars> extent{}, stride{};
    std::size_t box = 1;
    for (std::size_t v = 0; v < kMaxVars; ++v) {
      extent[v] = std::size_t{a.degree_in(v)} + b.degree_in(v) + 1;
      stride[v] = box;
      box *= extent[v];
      if (box > (std::size_t{1} << 23)) break;
    }
    if (box <= (std::size_t{1} << 23) && box <= 8 * work) {
      auto index = [&](const Monomial& m) {
        std::size_t idx = 0;
        for (std::size_t v = 0; v < kMaxVars; ++v) idx += m.exp[v] * stride[v];
        return idx;
      };
      std::vector<std::size_t> ia, ib;
      for (const Term& t : a.terms_) ia.push_back(index(t.mono));
      for (const Term& t : b.terms_) ib.push_back(index(t.mono));
      std::vector<FiniteField::Elem> acc(box, 0);
      for (std::size_t i = 0; i < ia.size(); ++i) {
        const auto ca = a.terms_[i].coef;
        for (std::size_t j = 0; j < ib.size(); ++j) {
          auto& slot = acc[ia[i] + ib[j]];
          slot = F_.add(slot, F_.mul(ca, b.terms_[j].coef));
        }
      }
      std::vector<Term> out;
      for (std::size_t idx = 0; idx < box; ++idx) {
        if (acc[idx] == 0) continue;
        Monomial m;
        std::size_t rest = idx;
        for (std::size_t v = 0; v < kMaxVars; ++v) {
          m.exp[v] = static_cast<std::uint16_t>(rest % extent[v]);
          rest /= extent[v];
          m.deg += m.exp[v];
        }
        out.push_back({m, acc[idx]});
      }
      std::sort(out.begin(), out.end(), [](const Term& x, const Term& y) { return y.mono < x.mono; });
      Poly r;
      r.terms_ = std::move(out);
      return r;
    }
  }
  std::vector<Term> prod;
  prod.reserve(work);
  for (const Term& s : a.terms_)
    for (const Term& t : b.terms_) prod.push_back({s.mono * t.mono, F_.mul(s.coef, t.coef)});
  return Poly::from_terms(F_, std::move(prod));
}

Poly PolyOps::pow(const Poly& a, unsigned long long k) const {
  Poly result = Poly::constant(1);
  Poly base = a;
  while (k > 0) {
    if (k & 1ULL) result = mul(result, base);
    k >>= 1;
    if (k > 0) base = mul(base, base);
  }
  return result;
}

Poly PolyOps::frobenius(const Poly& a) const {
  const unsigned p = F_.p();
  Poly r;
  r.terms_.reserve(a.terms_.size());
  for (const Term& t : a.terms_) {
    Monomial m;
    for (std::size_t i = 0; i < kMaxVars; ++i) {
      const unsigned v = static_cast<unsigned>(t.mono.exp[i]) * p;
      if (v > std::numeric_limits<std::uint16_t>::max()) throw Error(ErrorKind::Overflow, "exponent overflow");
      m.exp[i] = static_cast<std::uint16_t>(v);
    }
    m.deg = t.mono.deg * p;
    r.terms_.push_back({m, F_.frobenius(t.coef)});
  }
  return r;  // the map m -> m^p preserves grlex order
}

std::optional<Poly> PolyOps::pth_root(const Poly& a) const {
  const unsigned p = F_.p();
  Poly r;
  r.terms_.reserve(a.terms_.size());
  for (const Term& t : a.terms_) {
    Monomial m;
    for (std::size_t i = 0; i < kMaxVars; ++i) {
      if (t.mono.exp[i] % p != 0) return std::nullopt;
      m.exp[i] = static_cast<std::uint16_t>(t.mono.exp[i] / p);
    }
    m.deg = t.mono.deg / p;
    r.terms_.push_back({m, F_.frobenius_inverse(t.coef)});
  }
  return r;
}

Poly PolyOps::derivative(const Poly& a, std::size_t var) const {
  std::vector<Term> out;
  for (const Term& t : a.terms_) {
    const unsigned k = t.mono.exp[var];
    if (k == 0) continue;
    const auto c = F_.mul(t.coef, F_.from_int(k));
    if (c == 0) continue;
    Monomial m = t.mono;
    m.exp[var] = static_cast<std::uint16_t>(k - 1);
    m.deg -= 1;
    out.push_back({m, c});
  }
  return Poly::from_terms(F_, std::move(out));
}

std::optional<Poly> PolyOps::divide_exact(const Poly& a, const Poly& b) const {
  if (b.is_zero()) return std::nullopt;
  if (a.is_zero()) return Poly{};
  const Term& lb = b.lead();
  const auto inv_lb = F_.inv(lb.coef);
  if (b.terms_.size() == 1) {
    Poly q;
    q.terms_.reserve(a.terms_.size());
    for (const Term& t : a.terms_) {
      if (!lb.mono.divides(t.mono)) return std::nullopt;
      q.terms_.push_back({t.mono / lb.mono, F_.mul(t.coef, inv_lb)});
    }
    return q;
  }
  // Heap division: pending products q_i * b_j (j >= 1) are merged lazily, so
  // the cost is about |q| |b| log |q| instead of |q| |a|.
  struct Pending {
    Monomial mono;
    std::size_t i, j;
    bool operator<(const Pending& o) const noexcept { return mono < o.mono; }
  };
  std::priority_queue<Pending> heap;
  std::vector<Term> quotient;
  std::size_t next_a = 0;
  while (next_a < a.terms_.size() || !heap.empty()) {
    Monomial mono;
    if (heap.empty() || (next_a < a.terms_.size() && heap.top().mono < a.terms_[next_a].mono)) {
      mono = a.terms_[next_a].mono;
    } else {
      mono = heap.top().mono;
    }
    FiniteField::Elem c = 0;
    if (next_a < a.terms_.size() && a.terms_[next_a].mono == mono) c = a.terms_[next_a++].coef;
    while (!heap.empty() && heap.top().mono == mono) {
      const Pending top = heap.top();
      heap.pop();
      c = F_.sub(c, F_.mul(quotient[top.i].coef, b.terms_[top.j].coef));
      if (top.j + 1 < b.terms_.size())
        heap.push({quotient[top.i].mono * b.terms_[top.j + 1].mono, top.i, top.j + 1});
    }
    if (c == 0) continue;
    if (!lb.mono.divides(mono)) return std::nullopt;
    quotient.push_back({mono / lb.mono, F_.mul(c, inv_lb)});
    heap.push({quotient.back().mono * b.terms_[1].mono, quotient.size() - 1, 1});
  }
  Poly q;
  q.terms_ = std::move(quotient);  // produced in decreasing order
  return q;
}

Poly PolyOps::monic(const Poly& a) const {
  if (a.is_zero() || a.lead().coef == 1) return a;
  return scale(a, F_.inv(a.lead().coef));
}

Poly PolyOps::gcd(const Poly& a, const Poly& b) const {
  if (a.is_zero()) return monic(b);
  if (b.is_zero()) return monic(a);
  if (a.is_constant() || b.is_constant()) return Poly::constant(1);

  // split off the monomial content of each side
  auto monomial_content = [](const Poly& f) {
    Monomial m = f.terms_.front().mono;
    for (const Term& t : f.terms_)
      for (std::size_t i = 0; i < kMaxVars; ++i) m.exp[i] = std::min(m.exp[i], t.mono.exp[i]);
    m.deg = 0;
    for (auto e : m.exp) m.deg += e;
    return m;
  };
  const Monomial ma = monomial_content(a);
  const Monomial mb = monomial_content(b);
  Monomial mg;
  for (std::size_t i = 0; i < kMaxVars; ++i) mg.exp[i] = std::min(ma.exp[i], mb.exp[i]);
  for (auto e : mg.exp) mg.deg += e;
  const Poly a1 = ma.is_one() ? a : *divide_exact(a, Poly::monomial(ma, 1));
  const Poly b1 = mb.is_one() ? b : *divide_exact(b, Poly::monomial(mb, 1));
  Poly g = gcd_primitive(a1, b1);
  if (!mg.is_one()) g = mul_term(g, mg, 1);
  return monic(g);
}

PolyOps::UPoly PolyOps::to_univariate(const Poly& a, std::size_t var) const {
  UPoly u(a.degree_in(var) + 1);
  std::vector<std::vector<Term>> buckets(u.size());
  for (const Term& t : a.terms_) {
    Monomial m = t.mono;
    const unsigned k = m.exp[var];
    m.exp[var] = 0;
    m.deg -= k;
    buckets[k].push_back({m, t.coef});
  }
  for (std::size_t k = 0; k < u.size(); ++k) u[k] = Poly::from_terms(F_, std::move(buckets[k]));
  return u;
}

Poly PolyOps::from_univariate(const UPoly& u, std::size_t var) const {
  std::vector<Term> all;
  for (std::size_t k = 0; k < u.size(); ++k) {
    for (const Term& t : u[k].terms_) {
      Monomial m = t.mono;
      m.exp[var] = static_cast<std::uint16_t>(k);
      m.deg += static_cast<std::uint32_t>(k);
      all.push_back({m, t.coef});
    }
  }
  return Poly::from_terms(F_, std::move(all));
}

Poly PolyOps::content(const UPoly& u) const {
  Poly c;
  for (const Poly& coef : u) {
    if (coef.is_zero()) continue;
    c = gcd(c, coef);
    if (c.is_one()) break;
  }
  return c;
}

PolyOps::UPoly PolyOps::pseudo_remainder(UPoly r, const UPoly& b) const {
  const std::size_t db = b.size() - 1;
  const Poly& lcb = b.back();
  auto strip = [](UPoly& u) {
    while (!u.empty() && u.back().is_zero()) u.pop_back();
  };
  strip(r);
  while (!r.empty() && r.size() - 1 >= db) {
    const Poly lcr = r.back();
    const std::size_t shift = r.size() - 1 - db;
    for (auto& c : r) c = mul(c, lcb);
    for (std::size_t k = 0; k <= db; ++k) r[k + shift] = sub(r[k + shift], mul(lcr, b[k]));
    strip(r);
  }
  return r;
}


namespace {

using detail::ZechField;
using ZLog = ZechField::Log;

struct Specializer {
  const ZechField* Z;
  std::vector<ZLog> emb;
  std::vector<std::int64_t> back;  // log -> element of F_{p^e}, or -1 outside the subfield
};

const Specializer& specializer(const FiniteField& F) {
  static std::mutex mu;
  static std::map<std::tuple<unsigned, unsigned, std::vector<unsigned>>, std::unique_ptr<Specializer>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto& slot = cache[{F.p(), F.e(), F.min_poly()}];
  if (!slot) {
    const ZechField& Z = detail::zech_field(F.p(), detail::extension_degree(F.p(), F.e()));
    slot = std::make_unique<Specializer>(Specializer{&Z, detail::embed_constants(F, Z), {}});
    slot->back.assign(static_cast<std::size_t>(Z.order()) + 1, -1);
    for (std::size_t a = 0; a < slot->emb.size(); ++a) slot->back[slot->emb[a]] = static_cast<std::int64_t>(a);
  }
  return *slot;
}

/// Image of `a` in GF(q)[x_var] after substituting `pt` for the other variables.
std::vector<ZLog> specialize(const Specializer& S, const Poly& a, std::size_t var, const std::vector<ZLog>& pt) {
  const ZechField& Z = *S.Z;
  std::vector<ZLog> out(a.degree_in(var) + 1, Z.zero());
  for (const Term& t : a.terms()) {
    ZLog v = S.emb[t.coef];
    for (std::size_t i = 0; i < kMaxVars; ++i)
      if (i != var && t.mono.exp[i] != 0) v = Z.mul(v, Z.pow(pt[i], t.mono.exp[i]));
    auto& slot = out[t.mono.exp[var]];
    slot = Z.add(slot, v);
  }
  return out;
}

void strip(const ZechField& Z, std::vector<ZLog>& u) {
  while (!u.empty() && u.back() == Z.zero()) u.pop_back();
}

std::size_t univariate_gcd_degree(const ZechField& Z, std::vector<ZLog> a, std::vector<ZLog> b) {
  const ZLog minus_one = Z.from_int(Z.p() - 1);
  strip(Z, a);
  strip(Z, b);
  if (a.size() < b.size()) std::swap(a, b);
  while (!b.empty()) {
    const ZLog inv_lead = b.back() == 0 ? 0 : Z.order() - b.back();
    while (a.size() >= b.size()) {
      const ZLog factor = Z.mul(Z.mul(a.back(), inv_lead), minus_one);
      const std::size_t shift = a.size() - b.size();
      for (std::size_t k = 0; k < b.size(); ++k) a[k + shift] = Z.add(a[k + shift], Z.mul(factor, b[k]));
      strip(Z, a);
      if (a.empty()) break;
    }
    std::swap(a, b);
  }
  return a.size() - 1;
}

/// Upper bounds on deg_var gcd(a, b) for each shared variable, from one
/// specialization of the remaining variables. A bound is exact-safe: the
/// specialization keeps the leading coefficient of `a` nonzero, so the image
/// of the true gcd keeps its degree and divides the univariate gcd.
std::array<unsigned, kMaxVars> gcd_degree_bounds(const FiniteField& F, const Poly& a, const Poly& b, std::uint32_t common) {
  std::array<unsigned, kMaxVars> bound{};
  bound.fill(std::numeric_limits<unsigned>::max());
  const Specializer& S = specializer(F);
  const ZechField& Z = *S.Z;
  thread_local std::mt19937_64 rng(0x676364);
  std::uniform_int_distribution<ZLog> pick(0, Z.order() - 1);
  std::vector<ZLog> pt(kMaxVars);
  for (std::size_t var = 0; var < kMaxVars; ++var) {
    if (!(common & (1U << var))) continue;
    for (int attempt = 0; attempt < 2; ++attempt) {
      for (auto& c : pt) c = pick(rng);
      const auto ua = specialize(S, a, var, pt);
      if (ua.back() == Z.zero()) continue;
      bound[var] = static_cast<unsigned>(univariate_gcd_degree(Z, ua, specialize(S, b, var, pt)));
      break;
    }
  }
  return bound;
}


/// Monic gcd in GF(q)[x]; inputs are stripped.
std::vector<ZLog> univariate_gcd(const ZechField& Z, std::vector<ZLog> a, std::vector<ZLog> b) {
  const ZLog minus_one = Z.from_int(Z.p() - 1);
  if (a.size() < b.size()) std::swap(a, b);
  while (!b.empty()) {
    const ZLog inv_lead = b.back() == 0 ? 0 : Z.order() - b.back();
    while (a.size() >= b.size()) {
      const ZLog factor = Z.mul(Z.mul(a.back(), inv_lead), minus_one);
      const std::size_t shift = a.size() - b.size();
      for (std::size_t k = 0; k < b.size(); ++k) a[k + shift] = Z.add(a[k + shift], Z.mul(factor, b[k]));
      strip(Z, a);
      if (a.empty()) break;
    }
    std::swap(a, b);
  }
  const ZLog inv_lead = a.back() == 0 ? 0 : Z.order() - a.back();
  for (auto& c : a) c = Z.mul(c, inv_lead);
  return a;
}

/// Coefficients (low to high) of the polynomial through (xs[k], ys[k]).
std::vector<ZLog> interpolate(const ZechField& Z, const std::vector<ZLog>& xs, std::vector<ZLog> ys) {
  const ZLog minus_one = Z.from_int(Z.p() - 1);
  auto sub = [&](ZLog u, ZLog v) { return Z.add(u, Z.mul(v, minus_one)); };
  auto inv = [&](ZLog u) { return u == 0 ? ZLog{0} : Z.order() - u; };
  const std::size_t n = xs.size();
  for (std::size_t j = 1; j < n; ++j)
    for (std::size_t k = n - 1; k >= j; --k) ys[k] = Z.mul(sub(ys[k], ys[k - 1]), inv(sub(xs[k], xs[k - j])));
  std::vector<ZLog> poly{ys[n - 1]};
  for (std::size_t k = n - 1; k-- > 0;) {
    // poly = poly * (x - xs[k]) + ys[k]
    std::vector<ZLog> next(poly.size() + 1, Z.zero());
    const ZLog shift = Z.mul(xs[k], minus_one);
    for (std::size_t t = 0; t < poly.size(); ++t) {
      next[t + 1] = Z.add(next[t + 1], poly[t]);
      next[t] = Z.add(next[t], Z.mul(poly[t], shift));
    }
    next[0] = Z.add(next[0], ys[k]);
    poly = std::move(next);
  }
  return poly;
}

}  // namespace

std::optional<Poly> PolyOps::gcd_interpolated(const Poly& a, const Poly& b, std::size_t var) const {
  constexpr std::size_t kMaxGrid = 200000;
  const Specializer& S = specializer(F_);
  const ZechField& Z = *S.Z;

  std::vector<std::size_t> axes;
  const std::uint32_t mask = a.var_mask() | b.var_mask();
  for (std::size_t i = 0; i < kMaxVars; ++i)
    if (i != var && (mask & (1U << i))) axes.push_back(i);
  if (axes.empty()) return std::nullopt;

  const UPoly A = to_univariate(a, var);
  const UPoly B = to_univariate(b, var);
  const Poly gamma = gcd(A.back(), B.back());

  std::vector<std::size_t> extent;
  std::size_t grid = 1;
  for (std::size_t ax : axes) {
    const std::size_t deg = gamma.degree_in(ax) + std::min(a.degree_in(ax), b.degree_in(ax)) + 1;
    extent.push_back(deg);
    grid *= deg;
    if (grid > kMaxGrid || deg >= Z.order()) return std::nullopt;
  }

  thread_local std::mt19937_64 rng(0x6d6f64);
  std::uniform_int_distribution<ZLog> pick(0, Z.order() - 1);

  for (int attempt = 0; attempt < 3; ++attempt) {
    // Distinct nonzero sample values per axis.
    std::vector<std::vector<ZLog>> values(axes.size());
    for (std::size_t k = 0; k < axes.size(); ++k) {
      std::vector<ZLog>& vs = values[k];
      while (vs.size() < extent[k]) {
        const ZLog c = pick(rng);
        if (std::find(vs.begin(), vs.end(), c) == vs.end()) vs.push_back(c);
      }
    }
    std::vector<ZLog> pt(kMaxVars, Z.one());
    std::vector<std::size_t> digit(axes.size(), 0);
    std::vector<std::vector<ZLog>> images;
    images.reserve(grid);
    std::size_t degree = 0;
    bool ok = true;
    for (std::size_t flat = 0; flat < grid && ok; ++flat) {
      for (std::size_t k = 0; k < axes.size(); ++k) pt[axes[k]] = values[k][digit[k]];
      auto ua = specialize(S, a, var, pt);
      if (ua.back() == Z.zero()) {
        ok = false;
        break;
      }
      auto ub = specialize(S, b, var, pt);
      strip(Z, ub);
      std::vector<ZLog> g = univariate_gcd(Z, std::move(ua), std::move(ub));
      const auto gval = specialize(S, gamma, var, pt);
      for (auto& c : g) c = Z.mul(c, gval[0]);
      if (flat == 0) degree = g.size() - 1;
      if (g.size() - 1 != degree) ok = false;
      images.push_back(std::move(g));
      for (std::size_t k = 0; k < axes.size(); ++k) {
        if (++digit[k] < extent[k]) break;
        digit[k] = 0;
      }
    }
    if (!ok) continue;
    if (degree == 0) return Poly::constant(1);

    std::vector<Term> terms;
    std::vector<ZLog> tensor(grid);
    for (std::size_t j = 0; j <= degree; ++j) {
      for (std::size_t flat = 0; flat < grid; ++flat) tensor[flat] = images[flat][j];
      // Interpolate along each axis in turn; axis k has stride prod(extent[0..k)).
      std::size_t stride = 1;
      for (std::size_t k = 0; k < axes.size(); ++k) {
        const std::size_t len = extent[k];
        for (std::size_t base = 0; base < grid; ++base) {
          if ((base / stride) % len != 0) continue;
          std::vector<ZLog> ys(len);
          for (std::size_t t = 0; t < len; ++t) ys[t] = tensor[base + t * stride];
          const std::vector<ZLog> coeffs = interpolate(Z, values[k], std::move(ys));
          for (std::size_t t = 0; t < len; ++t) tensor[base + t * stride] = t < coeffs.size() ? coeffs[t] : Z.zero();
        }
        stride *= len;
      }
      for (std::size_t flat = 0; flat < grid; ++flat) {
        if (tensor[flat] == Z.zero()) continue;
        const std::int64_t c = S.back[tensor[flat]];
        if (c < 0) return std::nullopt;
        Monomial m;
        std::size_t rest = flat;
        for (std::size_t k = 0; k < axes.size(); ++k) {
          m.exp[axes[k]] = static_cast<std::uint16_t>(rest % extent[k]);
          rest /= extent[k];
        }
        m.exp[var] = static_cast<std::uint16_t>(j);
        for (auto e : m.exp) m.deg += e;
        terms.push_back({m, static_cast<FiniteField::Elem>(c)});
      }
    }
    UPoly G = to_univariate(Poly::from_terms(F_, std::move(terms)), var);
    const Poly cg = content(G);
    for (auto& coef : G) coef = *divide_exact(coef, cg);
    Poly g = monic(from_univariate(G, var));
    if (divide_exact(a, g) && divide_exact(b, g)) return g;
    return std::nullopt;
  }
  return std::nullopt;
}

Poly PolyOps::gcd_primitive(const Poly& a, const Poly& b) const {
  if (a.is_constant() || b.is_constant()) return Poly::constant(1);
  const Poly ma = monic(a);
  const Poly mb = monic(b);
  if (ma == mb) return ma;
  const std::uint32_t common = a.var_mask() & b.var_mask();
  if (common == 0) return Poly::constant(1);
  if (b.size() <= a.size()) {
    if (divide_exact(a, b)) return mb;
  } else if (divide_exact(b, a)) {
    return ma;
  }

  const auto bounds = gcd_degree_bounds(F_, a, b, common);
  std::size_t var = kMaxVars;
  std::pair<unsigned, unsigned> best{};
  for (std::size_t i = 0; i < kMaxVars; ++i) {
    if (!(common & (1U << i))) continue;
    const std::pair<unsigned, unsigned> key{bounds[i], std::max(a.degree_in(i), b.degree_in(i))};
    if (var == kMaxVars || key < best) {
      var = i;
      best = key;
    }
  }
  if (best.first == 0) {
    bool all_zero = true;
    for (std::size_t i = 0; i < kMaxVars; ++i)
      if ((common & (1U << i)) && bounds[i] != 0) all_zero = false;
    if (all_zero) return Poly::constant(1);
  }

  UPoly A = to_univariate(a, var);
  UPoly B = to_univariate(b, var);
  const Poly ca = content(A);
  const Poly cb = content(B);
  const Poly c = gcd(ca, cb);
  for (auto& coef : A) coef = *divide_exact(coef, ca);
  for (auto& coef : B) coef = *divide_exact(coef, cb);
  if (best.first == 0) return monic(c);
  {
    const Poly pa = from_univariate(A, var);
    const Poly pb = from_univariate(B, var);
    if (auto g = gcd_interpolated(pa, pb, var)) return monic(mul(c, *g));
  }
  if (A.size() < B.size()) std::swap(A, B);

  while (true) {
    if (B.size() == 1) return c;  // B is a unit after removing content
    UPoly R = pseudo_remainder(A, B);
    if (R.empty()) break;
    const Poly cr = content(R);
    for (auto& coef : R) coef = *divide_exact(coef, cr);
    A = std::move(B);
    B = std::move(R);
  }
  const Poly pb = content(B);
  for (auto& coef : B) coef = *divide_exact(coef, pb);
  return monic(mul(c, from_univariate(B, var)));
}

FiniteField::Elem PolyOps::evaluate(const Poly& a, const std::vector<FiniteField::Elem>& point) const {
  FiniteField::Elem acc = 0;
  for (const Term& t : a.terms_) {
    FiniteField::Elem v = t.coef;
    for (std::size_t i = 0; i < point.size() && i < kMaxVars; ++i)
      if (t.mono.exp[i] != 0) v = F_.mul(v, F_.pow(point[i], t.mono.exp[i]));
    acc = F_.add(acc, v);
  }
  return acc;
}

}  // namespace charp

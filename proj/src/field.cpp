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

#include "charp/field.hpp"

#include <algorithm>
#include <set>

#include "charp/error.hpp"

namespace charp {

namespace {

bool valid_ident(const std::string& s) {
  if (s.empty() || s[0] < 'a' || s[0] > 'z') return false;
  return std::all_of(s.begin(), s.end(), [](char c) { return (c >= 'a' && c <= 'z') || (c >= '0' && c <= '9') || c == '_'; });
}

}  // namespace

FieldCtx::FieldCtx(unsigned p, unsigned e, std::vector<unsigned> min_poly, std::vector<std::string> vars)
    : fq_(p, e, std::move(min_poly)), ops_(fq_), vars_(std::move(vars)) {
  if (vars_.size() > kMaxVars)
    throw Error(ErrorKind::InvalidField, "at most " + std::to_string(kMaxVars) + " variables are supported");
  std::set<std::string> seen;
  for (const auto& v : vars_) {
    if (!valid_ident(v)) throw Error(ErrorKind::InvalidField, "bad variable name '" + v + "'");
    if (v == "g") throw Error(ErrorKind::InvalidField, "'g' is reserved for the generator of F_{p^e}");
    if (!seen.insert(v).second) throw Error(ErrorKind::InvalidField, "duplicate variable '" + v + "'");
  }
}

std::shared_ptr<const FieldCtx> FieldCtx::create(unsigned p, unsigned e, std::vector<std::string> vars,
                                                 std::vector<unsigned> min_poly) {
  return std::make_shared<const FieldCtx>(p, e, std::move(min_poly), std::move(vars));
}

std::optional<std::size_t> FieldCtx::var_index(const std::string& name) const {
  for (std::size_t i = 0; i < vars_.size(); ++i)
    if (vars_[i] == name) return i;
  return std::nullopt;
}

FieldElement::FieldElement(CtxPtr ctx) : ctx_(std::move(ctx)), den_(Poly::constant(1)) {}

FieldElement::FieldElement(CtxPtr ctx, long long value) : ctx_(std::move(ctx)), den_(Poly::constant(1)) {
  num_ = Poly::constant(ctx_->fq().from_int(value));
}

FieldElement FieldElement::normalize(CtxPtr ctx, Poly num, Poly den) {
  if (den.is_zero()) throw Error(ErrorKind::ZeroDenominator, "denominator is zero");
  const PolyOps& ops = ctx->ops();
  if (num.is_zero()) return FieldElement(std::move(ctx));
  if (!den.is_constant()) {
    const Poly g = ops.gcd(num, den);
    if (!g.is_one()) {
      num = *ops.divide_exact(num, g);
      den = *ops.divide_exact(den, g);
    }
  }
  const auto lc = den.lead().coef;
  if (lc != 1) {
    const auto inv = ctx->fq().inv(lc);
    num = ops.scale(num, inv);
    den = ops.scale(den, inv);
  }
  return FieldElement(std::move(ctx), std::move(num), std::move(den));
}

FieldElement FieldElement::from_poly(CtxPtr ctx, Poly num) {
  return FieldElement(std::move(ctx), std::move(num), Poly::constant(1));
}

FieldElement FieldElement::variable(CtxPtr ctx, std::size_t index) {
  if (index >= ctx->nvars()) throw Error(ErrorKind::UnknownVariable, "variable index " + std::to_string(index));
  return from_poly(std::move(ctx), Poly::monomial(Monomial::var(index), 1));
}

FieldElement FieldElement::variable(CtxPtr ctx, const std::string& name) {
  const auto idx = ctx->var_index(name);
  if (!idx) throw Error(ErrorKind::UnknownVariable, name);
  return variable(std::move(ctx), *idx);
}

FieldElement FieldElement::generator(CtxPtr ctx) {
  const auto g = ctx->fq().generator();
  return from_poly(std::move(ctx), Poly::constant(g));
}

FieldElement FieldElement::constant(CtxPtr ctx, FiniteField::Elem c) { return from_poly(std::move(ctx), Poly::constant(c)); }

void FieldElement::check_ctx(const FieldElement& o) const {
  if (ctx_ != o.ctx_ && !ctx_->same_as(*o.ctx_))
    throw Error(ErrorKind::InvalidArgument, "elements belong to different fields");
}

FieldElement FieldElement::operator-() const { return FieldElement(ctx_, ctx_->ops().neg(num_), den_); }

FieldElement& FieldElement::operator+=(const FieldElement& o) {
  check_ctx(o);
  const PolyOps& ops = ctx_->ops();
  if (o.is_zero()) return *this;
  if (is_zero()) return *this = o;
  if (den_.is_one() && o.den_.is_one()) {
    num_ = ops.add(num_, o.num_);
    return *this;
  }
  if (den_ == o.den_) {
    *this = normalize(ctx_, ops.add(num_, o.num_), den_);
    return *this;
  }
  const Poly g = ops.gcd(den_, o.den_);
  const Poly b1 = *ops.divide_exact(den_, g);
  const Poly d1 = *ops.divide_exact(o.den_, g);
  Poly num = ops.add(ops.mul(num_, d1), ops.mul(o.num_, b1));
  Poly den = ops.mul(ops.mul(b1, d1), g);
  if (num.is_zero()) return *this = FieldElement(ctx_);
  if (!g.is_one()) {
    const Poly h = ops.gcd(num, g);
    if (!h.is_one()) {
      num = *ops.divide_exact(num, h);
      den = *ops.divide_exact(den, h);
    }
  }
  // den is a product of monic factors, hence monic
  num_ = std::move(num);
  den_ = std::move(den);
  return *this;
}

FieldElement& FieldElement::operator-=(const FieldElement& o) { return *this += -o; }

FieldElement& FieldElement::operator*=(const FieldElement& o) {
  check_ctx(o);
  const PolyOps& ops = ctx_->ops();
  if (is_zero() || o.is_zero()) return *this = FieldElement(ctx_);
  if (den_.is_one() && o.den_.is_one()) {
    num_ = ops.mul(num_, o.num_);
    return *this;
  }
  // cross-cancel: (a/b)(c/d) with g1 = gcd(a, d), g2 = gcd(c, b)
  const Poly g1 = ops.gcd(num_, o.den_);
  const Poly g2 = ops.gcd(o.num_, den_);
  const Poly a = g1.is_one() ? num_ : *ops.divide_exact(num_, g1);
  const Poly d = g1.is_one() ? o.den_ : *ops.divide_exact(o.den_, g1);
  const Poly c = g2.is_one() ? o.num_ : *ops.divide_exact(o.num_, g2);
  const Poly b = g2.is_one() ? den_ : *ops.divide_exact(den_, g2);
  num_ = ops.mul(a, c);
  den_ = ops.mul(b, d);
  return *this;
}

FieldElement FieldElement::inverse() const {
  if (is_zero()) throw Error(ErrorKind::ZeroDenominator, "inverse of zero");
  const PolyOps& ops = ctx_->ops();
  const auto inv = ctx_->fq().inv(num_.lead().coef);
  return FieldElement(ctx_, ops.scale(den_, inv), ops.scale(num_, inv));
}

FieldElement& FieldElement::operator/=(const FieldElement& o) { return *this *= o.inverse(); }

FieldElement FieldElement::pow(long long k) const {
  if (k < 0) return inverse().pow(-k);
  if (k == 0) return one();
  const PolyOps& ops = ctx_->ops();
  return FieldElement(ctx_, ops.pow(num_, static_cast<unsigned long long>(k)),
                      ops.pow(den_, static_cast<unsigned long long>(k)));
}

FieldElement FieldElement::frobenius() const {
  const PolyOps& ops = ctx_->ops();
  return FieldElement(ctx_, ops.frobenius(num_), ops.frobenius(den_));
}

std::optional<FieldElement> FieldElement::pth_root() const {
  const PolyOps& ops = ctx_->ops();
  auto n = ops.pth_root(num_);
  if (!n) return std::nullopt;
  auto d = ops.pth_root(den_);
  if (!d) return std::nullopt;
  return FieldElement(ctx_, std::move(*n), std::move(*d));
}

FieldElement FieldElement::wp() const { return frobenius() - *this; }

FieldElement FieldElement::partial(std::size_t var) const {
  if (var >= ctx_->nvars()) throw Error(ErrorKind::UnknownVariable, "variable index " + std::to_string(var));
  const PolyOps& ops = ctx_->ops();
  if (den_.is_one()) return from_poly(ctx_, ops.derivative(num_, var));
  const Poly dn = ops.derivative(num_, var);
  const Poly dd = ops.derivative(den_, var);
  if (dd.is_zero()) return normalize(ctx_, dn, den_);
  // With g = gcd(b, b'), any factor shared by the new numerator and b * (b/g) divides g.
  const Poly g = ops.gcd(den_, dd);
  const Poly h = *ops.divide_exact(den_, g);
  Poly num = ops.sub(ops.mul(dn, h), ops.mul(num_, *ops.divide_exact(dd, g)));
  if (num.is_zero()) return FieldElement(ctx_);
  Poly den = ops.mul(den_, h);
  if (!g.is_one()) {
    const Poly c = ops.gcd(num, g);
    if (!c.is_one()) {
      num = *ops.divide_exact(num, c);
      den = *ops.divide_exact(den, c);
    }
  }
  return FieldElement(ctx_, std::move(num), std::move(den));
}

FieldElement FieldElement::partial(const std::string& var) const {
  const auto idx = ctx_->var_index(var);
  if (!idx) throw Error(ErrorKind::UnknownVariable, var);
  return partial(*idx);
}

FieldElement normalize(const CtxPtr& ctx, const Poly& num, const Poly& den) {
  return FieldElement::normalize(ctx, num, den);
}
FieldElement partial_derivative(const FieldElement& a, std::size_t var) { return a.partial(var); }
std::optional<FieldElement> pth_root(const FieldElement& a) { return a.pth_root(); }
FieldElement wp(const FieldElement& a) { return a.wp(); }

// ---------------------------------------------------------------------------

UniPoly::UniPoly(CtxPtr ctx, std::vector<FieldElement> coeffs) : ctx_(std::move(ctx)), coeffs_(std::move(coeffs)) {
  trim();
}

void UniPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

UniPoly UniPoly::artin_schreier(const FieldElement& a) {
  const auto& ctx = a.ctx();
  std::vector<FieldElement> c(ctx->p() + 1, FieldElement(ctx));
  c[0] = -a;
  c[1] = FieldElement(ctx, -1);
  c[ctx->p()] = FieldElement(ctx, 1);
  return UniPoly(ctx, std::move(c));
}

UniPoly UniPoly::operator+(const UniPoly& o) const {
  std::vector<FieldElement> c(std::max(coeffs_.size(), o.coeffs_.size()), FieldElement(ctx_));
  for (std::size_t i = 0; i < coeffs_.size(); ++i) c[i] += coeffs_[i];
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) c[i] += o.coeffs_[i];
  return UniPoly(ctx_, std::move(c));
}

UniPoly UniPoly::operator-(const UniPoly& o) const { return *this + o.scaled(FieldElement(ctx_, -1)); }

UniPoly UniPoly::operator*(const UniPoly& o) const {
  if (is_zero() || o.is_zero()) return UniPoly(ctx_);
  std::vector<FieldElement> c(coeffs_.size() + o.coeffs_.size() - 1, FieldElement(ctx_));
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    for (std::size_t j = 0; j < o.coeffs_.size(); ++j) c[i + j] += coeffs_[i] * o.coeffs_[j];
  return UniPoly(ctx_, std::move(c));
}

UniPoly UniPoly::scaled(const FieldElement& k) const {
  std::vector<FieldElement> c = coeffs_;
  for (auto& x : c) x *= k;
  return UniPoly(ctx_, std::move(c));
}

std::pair<UniPoly, UniPoly> UniPoly::divmod(const UniPoly& d) const {
  if (d.is_zero()) throw Error(ErrorKind::ZeroDenominator, "polynomial division by zero");
  std::vector<FieldElement> rem = coeffs_;
  if (rem.size() < d.coeffs_.size()) return {UniPoly(ctx_), *this};
  std::vector<FieldElement> quo(rem.size() - d.coeffs_.size() + 1, FieldElement(ctx_));
  const FieldElement inv_lead = d.lead().inverse();
  for (std::size_t k = rem.size(); k-- >= d.coeffs_.size();) {
    const FieldElement c = rem[k] * inv_lead;
    const std::size_t shift = k - (d.coeffs_.size() - 1);
    quo[shift] = c;
    if (!c.is_zero())
      for (std::size_t i = 0; i < d.coeffs_.size(); ++i) rem[shift + i] -= c * d.coeffs_[i];
    if (k == d.coeffs_.size() - 1) break;
  }
  return {UniPoly(ctx_, std::move(quo)), UniPoly(ctx_, std::move(rem))};
}

UniPoly UniPoly::monic() const {
  if (is_zero()) return *this;
  return scaled(lead().inverse());
}

FieldElement UniPoly::evaluate(const FieldElement& t) const {
  FieldElement acc(ctx_);
  for (std::size_t i = coeffs_.size(); i-- > 0;) acc = acc * t + coeffs_[i];
  return acc;
}

UniPoly uni_gcd(const UniPoly& f, const UniPoly& h) {
  if (f.is_zero() && h.is_zero()) throw Error(ErrorKind::BothZero, "gcd of two zero polynomials");
  UniPoly a = f;
  UniPoly b = h;
  while (!b.is_zero()) {
    UniPoly r = a.divmod(b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

}  // namespace charp

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

#include "charp/pforms.hpp"

#include <functional>

#include "charp/error.hpp"
#include "charp/expr.hpp"
#include "charp/rewrite.hpp"

namespace charp {

FormPoly FormPoly::constant(const FieldElement& c, std::size_t dim) {
  FormPoly r(c.ctx(), dim);
  r.accumulate(Exponents(dim, 0), c);
  return r;
}

FormPoly FormPoly::coordinate(const CtxPtr& ctx, std::size_t dim, std::size_t j) {
  FormPoly r(ctx, dim);
  Exponents e(dim, 0);
  e.at(j) = 1;
  r.accumulate(e, FieldElement(ctx, 1));
  return r;
}

void FormPoly::accumulate(const Exponents& exps, const FieldElement& c) {
  if (exps.size() != dim_) throw Error(ErrorKind::BadMultiIndex, "multi-index length differs from the dimension");
  if (c.is_zero()) return;
  auto it = terms_.find(exps);
  if (it == terms_.end()) {
    terms_.emplace(exps, c);
    return;
  }
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

FormPoly FormPoly::operator+(const FormPoly& o) const {
  FormPoly r = *this;
  for (const auto& [e, c] : o.terms_) r.accumulate(e, c);
  return r;
}

FormPoly FormPoly::operator-(const FormPoly& o) const {
  FormPoly r = *this;
  for (const auto& [e, c] : o.terms_) r.accumulate(e, -c);
  return r;
}

FormPoly FormPoly::operator*(const FormPoly& o) const {
  if (dim_ != o.dim_) throw Error(ErrorKind::DimensionMismatch, "form dimensions differ");
  FormPoly r(ctx_, dim_);
  for (const auto& [e1, c1] : terms_)
    for (const auto& [e2, c2] : o.terms_) {
      Exponents e(dim_);
      for (std::size_t k = 0; k < dim_; ++k) e[k] = e1[k] + e2[k];
      r.accumulate(e, c1 * c2);
    }
  return r;
}

FormPoly FormPoly::scaled(const FieldElement& c) const {
  FormPoly r(ctx_, dim_);
  if (c.is_zero()) return r;
  for (const auto& [e, v] : terms_) r.terms_.emplace(e, v * c);
  return r;
}

FormPoly FormPoly::shifted(std::size_t offset, std::size_t new_dim) const {
  if (offset + dim_ > new_dim) throw Error(ErrorKind::DimensionMismatch, "shift exceeds the target dimension");
  FormPoly r(ctx_, new_dim);
  for (const auto& [e, c] : terms_) {
    Exponents f(new_dim, 0);
    std::copy(e.begin(), e.end(), f.begin() + static_cast<long>(offset));
    r.terms_.emplace(std::move(f), c);
  }
  return r;
}

FieldElement FormPoly::evaluate(const std::vector<FieldElement>& v) const {
  if (v.size() != dim_) throw Error(ErrorKind::DimensionMismatch, "vector length differs from the dimension");
  FieldElement sum(ctx_);
  for (const auto& [e, c] : terms_) {
    FieldElement t = c;
    for (std::size_t k = 0; k < dim_ && !t.is_zero(); ++k)
      if (e[k] != 0) t *= v[k].pow(e[k]);
    sum += t;
  }
  return sum;
}

PolyFormSpec PolyFormSpec::explicit_form(FormPoly poly) {
  const unsigned p = poly.ctx()->p();
  for (const auto& [e, c] : poly.terms()) {
    unsigned deg = 0;
    for (unsigned x : e) deg += x;
    if (deg != p) throw Error(ErrorKind::BadMultiIndex, "explicit forms must be homogeneous of degree p");
  }
  auto n = std::make_shared<Node>(Node{FormKind::Explicit, poly.ctx(), poly.dim(), std::nullopt, std::nullopt,
                                       TwoDimVariant::A2Weighted, {}});
  n->poly = std::move(poly);
  return PolyFormSpec(std::move(n));
}

PolyFormSpec PolyFormSpec::two_dim(const FieldElement& alpha, TwoDimVariant variant) {
  return PolyFormSpec(std::make_shared<Node>(Node{FormKind::TwoDim, alpha.ctx(), 2, std::nullopt, alpha, variant, {}}));
}

PolyFormSpec PolyFormSpec::norm_form(const FieldElement& alpha) {
  return PolyFormSpec(std::make_shared<Node>(
      Node{FormKind::NormForm, alpha.ctx(), alpha.ctx()->p(), std::nullopt, alpha, TwoDimVariant::A2Weighted, {}}));
}

PolyFormSpec PolyFormSpec::scale(const FieldElement& c, PolyFormSpec inner) {
  if (c.is_zero()) throw Error(ErrorKind::ZeroElement, "scale factor must be nonzero");
  const std::size_t dim = inner.dimension();
  return PolyFormSpec(std::make_shared<Node>(
      Node{FormKind::Scale, c.ctx(), dim, std::nullopt, c, TwoDimVariant::A2Weighted, {std::move(inner)}}));
}

PolyFormSpec PolyFormSpec::direct_sum(std::vector<PolyFormSpec> parts) {
  if (parts.empty()) throw Error(ErrorKind::InvalidArgument, "direct sum of no forms");
  std::size_t dim = 0;
  for (const auto& f : parts) dim += f.dimension();
  CtxPtr ctx = parts.front().ctx();
  return PolyFormSpec(std::make_shared<Node>(
      Node{FormKind::DirectSum, std::move(ctx), dim, std::nullopt, std::nullopt, TwoDimVariant::A2Weighted,
           std::move(parts)}));
}

const FormPoly& PolyFormSpec::poly() const {
  if (!node_->poly) throw Error(ErrorKind::InvalidArgument, "form is not explicit");
  return *node_->poly;
}

const FieldElement& PolyFormSpec::alpha() const {
  if (node_->kind != FormKind::TwoDim && node_->kind != FormKind::NormForm)
    throw Error(ErrorKind::InvalidArgument, "form has no alpha parameter");
  return *node_->value;
}

const FieldElement& PolyFormSpec::scalar() const {
  if (node_->kind != FormKind::Scale) throw Error(ErrorKind::InvalidArgument, "form is not a scaling");
  return *node_->value;
}

const PolyFormSpec& PolyFormSpec::inner() const {
  if (node_->kind != FormKind::Scale) throw Error(ErrorKind::InvalidArgument, "form is not a scaling");
  return node_->children.front();
}

std::string_view to_string(FormKind k) {
  switch (k) {
    case FormKind::Explicit: return "Explicit";
    case FormKind::TwoDim: return "TwoDim";
    case FormKind::NormForm: return "NormForm";
    case FormKind::Scale: return "Scale";
    case FormKind::DirectSum: return "DirectSum";
  }
  return "Explicit";
}

std::string_view to_string(TwoDimVariant v) {
  return v == TwoDimVariant::A2Weighted ? "a2-weighted" : "a1-weighted";
}

FieldElement evaluate(const PolyFormSpec& form, const std::vector<FieldElement>& v) {
  if (v.size() != form.dimension()) throw Error(ErrorKind::DimensionMismatch, "vector length differs from the form dimension");
  const unsigned p = form.ctx()->p();
  switch (form.kind()) {
    case FormKind::Explicit:
      return form.poly().evaluate(v);
    case FormKind::TwoDim: {
      const auto& a1 = v[0];
      const auto& a2 = v[1];
      const FieldElement mixed = form.variant() == TwoDimVariant::A2Weighted ? a1 * a2.pow(p - 1) : a1.pow(p - 1) * a2;
      return form.alpha() * a1.pow(p) - mixed + a2.pow(p);
    }
    case FormKind::NormForm:
      return norm(form.alpha(), ASElement(form.ctx(), v));
    case FormKind::Scale:
      return form.scalar() * evaluate(form.inner(), v);
    case FormKind::DirectSum: {
      FieldElement sum(form.ctx());
      std::size_t off = 0;
      for (const auto& part : form.parts()) {
        const std::size_t m = part.dimension();
        sum += evaluate(part, std::vector<FieldElement>(v.begin() + static_cast<long>(off),
                                                        v.begin() + static_cast<long>(off + m)));
        off += m;
      }
      return sum;
    }
  }
  return FieldElement(form.ctx());
}

namespace {

FormPoly explicit_poly(const PolyFormSpec& form) {
  const CtxPtr& ctx = form.ctx();
  const unsigned p = ctx->p();
  switch (form.kind()) {
    case FormKind::Explicit:
      return form.poly();
    case FormKind::TwoDim: {
      FormPoly r(ctx, 2);
      r.accumulate({p, 0}, form.alpha());
      if (form.variant() == TwoDimVariant::A2Weighted) {
        r.accumulate({1, p - 1}, FieldElement(ctx, -1));
      } else {
        r.accumulate({p - 1, 1}, FieldElement(ctx, -1));
      }
      r.accumulate({0, p}, FieldElement(ctx, 1));
      return r;
    }
    case FormKind::NormForm: {
      const FormPoly zero(ctx, p);
      std::vector<FormPoly> coords;
      for (unsigned k = 0; k < p; ++k) coords.push_back(FormPoly::coordinate(ctx, p, k));
      const auto m = multiplication_matrix(power_table(form.alpha()), coords, zero,
                                           [](const FormPoly& r, const FieldElement& c) { return r.scaled(c); });
      return leibniz_determinant(m, zero);
    }
    case FormKind::Scale:
      return explicit_poly(form.inner()).scaled(form.scalar());
    case FormKind::DirectSum: {
      FormPoly r(ctx, form.dimension());
      std::size_t off = 0;
      for (const auto& part : form.parts()) {
        r = r + explicit_poly(part).shifted(off, form.dimension());
        off += part.dimension();
      }
      return r;
    }
  }
  return FormPoly(ctx, form.dimension());
}

/// Product of the falling factorials e_k (e_k - 1) .. (e_k - kappa_k + 1).
long long falling_factor(const FormPoly::Exponents& e, const std::vector<unsigned>& kappa) {
  long long f = 1;
  for (std::size_t k = 0; k < e.size(); ++k) {
    if (e[k] < kappa[k]) return 0;
    for (unsigned t = 0; t < kappa[k]; ++t) f *= static_cast<long long>(e[k] - t);
  }
  return f;
}

void for_each_composition(std::size_t parts, unsigned total, const std::function<void(const std::vector<unsigned>&)>& fn) {
  std::vector<unsigned> cur(parts, 0);
  std::function<void(std::size_t, unsigned)> rec = [&](std::size_t k, unsigned left) {
    if (k + 1 == parts) {
      cur[k] = left;
      fn(cur);
      return;
    }
    for (unsigned t = left + 1; t-- > 0;) {
      cur[k] = t;
      rec(k + 1, left - t);
    }
  };
  if (parts > 0) rec(0, total);
}

}  // namespace

PolyFormSpec to_explicit(const PolyFormSpec& form) {
  if (form.kind() == FormKind::Explicit) return form;
  return PolyFormSpec::explicit_form(explicit_poly(form));
}

std::vector<FieldElement> order_partials(const PolyFormSpec& form, const std::vector<unsigned>& kappa) {
  const CtxPtr& ctx = form.ctx();
  const std::size_t m = form.dimension();
  unsigned total = 0;
  for (unsigned k : kappa) total += k;
  if (kappa.size() != m || total + 1 != ctx->p())
    throw Error(ErrorKind::BadMultiIndex, "kappa must have one entry per coordinate and total p - 1");
  std::vector<FieldElement> out(m, FieldElement(ctx));
  const FormPoly poly = explicit_poly(form);
  for (const auto& [e, c] : poly.terms()) {
    const long long f = falling_factor(e, kappa);
    if (f == 0) continue;
    for (std::size_t k = 0; k < m; ++k)
      if (e[k] == kappa[k] + 1) out[k] += c * FieldElement(ctx, f);
  }
  return out;
}

BruteForceResult is_p_regular_bruteforce(const PolyFormSpec& form) {
  const CtxPtr& ctx = form.ctx();
  const FiniteField& F = ctx->fq();
  const std::size_t m = form.dimension();
  const FormPoly poly = explicit_poly(form);
  for (const auto& [e, c] : poly.terms())
    if (!c.is_constant()) throw Error(ErrorKind::NonConstantCoefficients, "brute force needs constant coefficients");
  double space = 1;
  for (std::size_t k = 0; k < m; ++k) space *= F.q();
  if (space > 1e7) throw Error(ErrorKind::TooLarge, "more than 10^7 points to enumerate");

  // Linear forms of all order-(p-1) partials, over F_q.
  std::vector<std::vector<FiniteField::Elem>> forms;
  for_each_composition(m, ctx->p() - 1, [&](const std::vector<unsigned>& kappa) {
    std::vector<FiniteField::Elem> lin(m, 0);
    bool nonzero = false;
    for (const auto& [e, c] : poly.terms()) {
      const long long f = falling_factor(e, kappa);
      if (f == 0) continue;
      for (std::size_t k = 0; k < m; ++k)
        if (e[k] == kappa[k] + 1) lin[k] = F.add(lin[k], F.mul(c.num().constant_value(), F.from_int(f)));
    }
    for (auto x : lin) nonzero = nonzero || x != 0;
    if (nonzero) forms.push_back(std::move(lin));
  });

  BruteForceResult res;
  std::vector<FiniteField::Elem> pt(m, 0);
  for (std::size_t lead = 0; lead < m; ++lead) {
    std::fill(pt.begin(), pt.end(), 0);
    pt[lead] = 1;
    while (true) {
      ++res.points_checked;
      bool singular = true;
      for (const auto& lin : forms) {
        FiniteField::Elem acc = 0;
        for (std::size_t k = lead; k < m; ++k) acc = F.add(acc, F.mul(lin[k], pt[k]));
        if (acc != 0) {
          singular = false;
          break;
        }
      }
      if (singular) {
        res.regular = false;
        std::vector<FieldElement> w;
        for (auto x : pt) w.push_back(FieldElement::constant(ctx, x));
        res.witness = std::move(w);
        return res;
      }
      // Odometer over coordinates lead+1 .. m-1, last coordinate fastest.
      bool done = true;
      for (std::size_t k = m; k-- > lead + 1;) {
        if (++pt[k] < F.q()) {
          done = false;
          break;
        }
        pt[k] = 0;
      }
      if (done) break;
    }
  }
  return res;
}

namespace {

std::optional<FiniteField::Elem> constant_wp_root(const FiniteField& F, FiniteField::Elem a) {
  for (unsigned u = 0; u < F.q(); ++u) {
    const auto e = static_cast<FiniteField::Elem>(u);
    if (F.sub(F.pow(e, F.p()), e) == a) return e;
  }
  return std::nullopt;
}

}  // namespace

ArtinSchreierRoot artin_schreier_root(const FieldElement& alpha) {
  const CtxPtr& ctx = alpha.ctx();
  const FiniteField& F = ctx->fq();
  const unsigned p = ctx->p();
  if (!alpha.is_polynomial()) {
    // A solution u = c/d forces the reduced denominator of alpha to be d^p.
    if (!FieldElement::from_poly(ctx, alpha.den()).pth_root()) return {RootDecision::NoRoot, std::nullopt};
    return {RootDecision::Undecided, std::nullopt};
  }
  // Any solution is a polynomial; peel off its terms from the top.
  FieldElement u(ctx);
  FieldElement rest = alpha;
  while (!rest.is_constant()) {
    const Term& lt = rest.num().lead();
    Monomial root;
    for (std::size_t k = 0; k < kMaxVars; ++k) {
      if (lt.mono.exp[k] % p != 0) return {RootDecision::NoRoot, std::nullopt};
      root.exp[k] = static_cast<std::uint16_t>(lt.mono.exp[k] / p);
    }
    root.deg = lt.mono.deg / p;
    const FieldElement t = FieldElement::from_poly(ctx, Poly::monomial(root, F.frobenius_inverse(lt.coef)));
    u += t;
    rest -= t.wp();
  }
  const auto c = constant_wp_root(F, rest.num().constant_value());
  if (!c) return {RootDecision::NoRoot, std::nullopt};
  u += FieldElement::constant(ctx, *c);
  return {RootDecision::HasRoot, u};
}

std::optional<RegularityCertificate> regularity_certificate(const PolyFormSpec& form) {
  switch (form.kind()) {
    case FormKind::Explicit:
      throw Error(ErrorKind::ExplicitLeaf, "explicit leaves have no structural certificate");
    case FormKind::TwoDim:
      return RegularityCertificate{
          FormKind::TwoDim, "the order-(p-1) partials include (p-1)! a1 and (p-1)! a2 up to sign", {}, {}};
    case FormKind::NormForm: {
      const ArtinSchreierRoot r = artin_schreier_root(form.alpha());
      if (r.decision == RootDecision::HasRoot) return std::nullopt;
      RegularityCertificate c{FormKind::NormForm, "norm form of a separable field extension of degree p", {}, {}};
      if (r.decision == RootDecision::Undecided)
        c.assumptions.push_back("T^p - T - alpha is irreducible for alpha = " + to_string(form.alpha()));
      return c;
    }
    case FormKind::Scale: {
      auto inner = regularity_certificate(form.inner());
      if (!inner) return std::nullopt;
      return RegularityCertificate{FormKind::Scale, "nonzero multiple of a p-regular form", {}, {std::move(*inner)}};
    }
    case FormKind::DirectSum: {
      RegularityCertificate c{FormKind::DirectSum, "orthogonal sum of p-regular forms", {}, {}};
      for (const auto& part : form.parts()) {
        auto sub = regularity_certificate(part);
        if (!sub) return std::nullopt;
        c.children.push_back(std::move(*sub));
      }
      return c;
    }
  }
  return std::nullopt;
}

PolyFormSpec build_phi(const SymbolPresentation& s) {
  std::vector<PolyFormSpec> parts;
  const std::size_t count = (std::size_t{1} << s.n()) - 1;
  for (std::size_t idx = 1; idx <= count; ++idx)
    parts.push_back(PolyFormSpec::scale(tuple_product(s.slots(), idx), PolyFormSpec::norm_form(s.alpha())));
  return PolyFormSpec::direct_sum(std::move(parts));
}

PolyFormSpec build_Phi(const SymbolPresentation& s) {
  return PolyFormSpec::direct_sum({PolyFormSpec::two_dim(s.alpha(), TwoDimVariant::A1Weighted), build_phi(s)});
}

PolyFormSpec build_common_slot_form(const std::vector<FieldElement>& alphas, const std::vector<FieldElement>& betas,
                                    const std::vector<FieldElement>& gammas, const std::vector<FieldElement>& deltas) {
  if (alphas.size() != betas.size() || gammas.size() != deltas.size())
    throw Error(ErrorKind::DimensionMismatch, "alphas/betas and gammas/deltas must pair up");
  if (alphas.empty() && gammas.empty()) throw Error(ErrorKind::InvalidArgument, "no symbols given");
  const CtxPtr& ctx = alphas.empty() ? gammas.front().ctx() : alphas.front().ctx();
  FieldElement lead(ctx);
  for (const auto& a : alphas) lead += a;
  for (const auto& g : gammas) lead -= g;
  std::vector<PolyFormSpec> parts{PolyFormSpec::two_dim(lead, TwoDimVariant::A1Weighted)};
  for (std::size_t i = 0; i < alphas.size(); ++i)
    parts.push_back(PolyFormSpec::scale(betas[i], PolyFormSpec::norm_form(alphas[i])));
  for (std::size_t i = 0; i < gammas.size(); ++i)
    parts.push_back(PolyFormSpec::scale(gammas[i], PolyFormSpec::norm_form(deltas[i])));
  return PolyFormSpec::direct_sum(std::move(parts));
}

}  // namespace charp

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

#include "charp/certs.hpp"

#include <algorithm>
#include <map>

#include "charp/error.hpp"

namespace charp {

DiffForm eval_presentation(const Presentation& p) {
  if (const auto* s = std::get_if<SymbolPresentation>(&p)) return eval_symbol(*s);
  return std::get<DiffForm>(p);
}

unsigned presentation_degree(const Presentation& p) {
  if (const auto* s = std::get_if<SymbolPresentation>(&p)) return static_cast<unsigned>(s->n());
  return std::get<DiffForm>(p).degree();
}

const CtxPtr& presentation_ctx(const Presentation& p) {
  if (const auto* s = std::get_if<SymbolPresentation>(&p)) return s->ctx();
  return std::get<DiffForm>(p).ctx();
}

bool same_presentation(const Presentation& a, const Presentation& b) {
  if (a.index() != b.index()) return false;
  if (const auto* s = std::get_if<SymbolPresentation>(&a)) return *s == std::get<SymbolPresentation>(b);
  return std::get<DiffForm>(a) == std::get<DiffForm>(b);
}

DiffForm expected_axiom_difference(const AxiomStep& step) {
  if (step.slot >= step.slots.size()) throw Error(ErrorKind::BadRange, "axiom slot index out of range");
  const FieldElement nf = norm(step.alpha, step.f);
  auto slots = step.slots;
  slots[step.slot] = nf;
  if (nf.is_zero()) return DiffForm(step.alpha.ctx(), static_cast<unsigned>(slots.size()));
  DiffForm x = log_wedge(step.alpha.ctx(), slots).scaled(step.alpha);
  return step.sign > 0 ? -x : x;
}

DiffForm exact_image(const ExactGenerator& g) {
  return wedge(differential(g.c), log_wedge(g.c.ctx(), g.slots));
}

namespace {

/// Pairwise coprime monic factors of a set of polynomials.
class CoprimeBase {
 public:
  explicit CoprimeBase(const PolyOps& ops) : ops_(ops) {}

  void add(Poly d) {
    if (d.is_constant()) return;
    for (std::size_t i = 0; i < factors_.size(); ++i) {
      const Poly g = ops_.gcd(factors_[i], d);
      if (g.is_constant()) continue;
      const Poly f = factors_[i];
      factors_.erase(factors_.begin() + static_cast<long>(i));
      add(*ops_.divide_exact(f, g));
      add(*ops_.divide_exact(d, g));
      add(g);
      return;
    }
    factors_.push_back(ops_.monic(d));
  }

  /// Exponent of every base factor in d, which must factor over the base.
  std::vector<unsigned> exponents(Poly d) const {
    std::vector<unsigned> e(factors_.size(), 0);
    for (std::size_t i = 0; i < factors_.size() && !d.is_constant(); ++i)
      while (auto q = ops_.divide_exact(d, factors_[i])) {
        d = std::move(*q);
        ++e[i];
      }
    return e;
  }

  const std::vector<Poly>& factors() const { return factors_; }

 private:
  const PolyOps& ops_;
  std::vector<Poly> factors_;
};

/// Sum of many fractions over one common denominator. Adding them pairwise
/// would normalize (and gcd) every partial sum, which grows quickly when the
/// denominators are unrelated; here only small gcds between denominator
/// factors are needed.
FieldElement sum_fractions(const CtxPtr& ctx, const std::vector<FieldElement>& terms) {
  if (terms.size() <= 2) {
    FieldElement s(ctx);
    for (const auto& t : terms) s += t;
    return s;
  }
  const PolyOps& ops = ctx->ops();
  std::vector<Poly> dens;
  for (const auto& t : terms) dens.push_back(t.den());
  std::sort(dens.begin(), dens.end());
  dens.erase(std::unique(dens.begin(), dens.end()), dens.end());
  CoprimeBase base(ops);
  for (const auto& den : dens) base.add(den);
  const std::vector<Poly>& factors = base.factors();

  std::vector<std::vector<unsigned>> exps;
  std::vector<unsigned> top(factors.size(), 0);
  for (const auto& t : terms) {
    exps.push_back(base.exponents(t.den()));
    for (std::size_t i = 0; i < factors.size(); ++i) top[i] = std::max(top[i], exps.back()[i]);
  }
  // Each denominator is monic, so it equals the product of its base factors.
  Poly num;
  for (std::size_t k = 0; k < terms.size(); ++k) {
    Poly part = terms[k].num();
    for (std::size_t i = 0; i < factors.size(); ++i)
      for (unsigned r = exps[k][i]; r < top[i]; ++r) part = ops.mul(part, factors[i]);
    num = ops.add(num, part);
  }
  if (num.is_zero()) return FieldElement(ctx);
  Poly lcm = Poly::constant(1);
  for (std::size_t i = 0; i < factors.size(); ++i)
    for (unsigned r = 0; r < top[i]; ++r) lcm = ops.mul(lcm, factors[i]);
  return FieldElement::normalize(ctx, std::move(num), std::move(lcm));
}

class FormAccumulator {
 public:
  FormAccumulator(CtxPtr ctx, unsigned degree) : ctx_(std::move(ctx)), degree_(degree) {}

  void add(const DiffForm& w, bool subtract) {
    for (const auto& [mask, c] : w.components()) parts_[mask].push_back(subtract ? -c : c);
  }

  DiffForm total() const {
    DiffForm out(ctx_, degree_);
    for (const auto& [mask, terms] : parts_) {
      const FieldElement c = sum_fractions(ctx_, terms);
      if (!c.is_zero()) out.accumulate(mask, c);
    }
    return out;
  }

 private:
  CtxPtr ctx_;
  unsigned degree_;
  std::map<DiffForm::Basis, std::vector<FieldElement>> parts_;
};

}  // namespace

std::string_view to_string(VerdictStatus s) {
  switch (s) {
    case VerdictStatus::Verified: return "Verified";
    case VerdictStatus::VerifiedModuloAxioms: return "VerifiedModuloAxioms";
    case VerdictStatus::Rejected: return "Rejected";
  }
  return "Rejected";
}

Verdict verify(const RewriteCertificate& cert) {
  const unsigned n = presentation_degree(cert.lhs);
  const CtxPtr& ctx = presentation_ctx(cert.lhs);
  if (presentation_degree(cert.rhs) != n) throw Error(ErrorKind::DegreeMismatch, "lhs and rhs degrees differ");
  if (n == 0) throw Error(ErrorKind::DegreeMismatch, "certificates need degree at least 1");
  if (cert.theta.degree() + 1 != n) throw Error(ErrorKind::DegreeMismatch, "theta must have degree n - 1");
  for (const auto& g : cert.generators)
    if (g.slots.size() != n) throw Error(ErrorKind::DegreeMismatch, "generator slot count differs from n");
  for (const auto& e : cert.exact_generators)
    if (e.slots.size() + 1 != n) throw Error(ErrorKind::DegreeMismatch, "exact generator needs n - 1 slots");

  Verdict v{VerdictStatus::Verified, DiffForm(ctx, n), {}, {}};
  FormAccumulator delta(ctx, n);
  delta.add(eval_presentation(cert.lhs), false);
  delta.add(eval_presentation(cert.rhs), true);
  for (const auto& g : cert.generators) delta.add(wp_image(g.u, g.slots), true);
  delta.add(d(cert.theta), true);
  for (const auto& e : cert.exact_generators) delta.add(exact_image(e), true);
  for (std::size_t k = 0; k < cert.axiom_steps.size(); ++k) {
    const AxiomStep& step = cert.axiom_steps[k];
    if (step.claimed_difference.degree() != n || step.slots.size() != n)
      throw Error(ErrorKind::DegreeMismatch, "axiom step degree differs from n");
    if (step.claimed_difference != expected_axiom_difference(step)) {
      v.status = VerdictStatus::Rejected;
      v.reason = "axiom step " + std::to_string(k) + " does not match its parameters";
    }
    delta.add(step.claimed_difference, true);
    v.axioms.push_back("NormSlotGeneral(slot " + std::to_string(step.slot + 1) + ")");
  }
  v.residual = delta.total();
  if (v.status == VerdictStatus::Rejected) return v;
  if (!v.residual.is_zero()) {
    v.status = VerdictStatus::Rejected;
    v.reason = "nonzero residual";
  } else if (!cert.axiom_steps.empty()) {
    v.status = VerdictStatus::VerifiedModuloAxioms;
  }
  return v;
}

RewriteCertificate identity_certificate(const Presentation& p) {
  const unsigned n = presentation_degree(p);
  return RewriteCertificate{p, p, {}, DiffForm(presentation_ctx(p), n == 0 ? 0 : n - 1), {}};
}

RewriteCertificate compose(const RewriteCertificate& c1, const RewriteCertificate& c2) {
  if (!same_presentation(c1.rhs, c2.lhs))
    throw Error(ErrorKind::ChainMismatch, "intermediate presentations differ");
  RewriteCertificate out{c1.lhs, c2.rhs, c1.generators, c1.theta + c2.theta, c1.axiom_steps};
  out.generators.insert(out.generators.end(), c2.generators.begin(), c2.generators.end());
  out.axiom_steps.insert(out.axiom_steps.end(), c2.axiom_steps.begin(), c2.axiom_steps.end());
  out.exact_generators = c1.exact_generators;
  out.exact_generators.insert(out.exact_generators.end(), c2.exact_generators.begin(), c2.exact_generators.end());
  return out;
}

RewriteCertificate reverse(const RewriteCertificate& c) {
  RewriteCertificate out{c.rhs, c.lhs, c.generators, -c.theta, c.axiom_steps};
  for (auto& g : out.generators) g.u = -g.u;  // wp is additive, so wp(-u) = -wp(u)
  out.exact_generators = c.exact_generators;
  for (auto& e : out.exact_generators) e.c = -e.c;
  for (auto& a : out.axiom_steps) {
    a.sign = -a.sign;
    a.claimed_difference = -a.claimed_difference;
  }
  return out;
}

namespace {

std::vector<FieldElement> concat(const std::vector<FieldElement>& a, const std::vector<FieldElement>& b,
                                 const std::vector<FieldElement>& c) {
  std::vector<FieldElement> out;
  out.reserve(a.size() + b.size() + c.size());
  out.insert(out.end(), a.begin(), a.end());
  out.insert(out.end(), b.begin(), b.end());
  out.insert(out.end(), c.begin(), c.end());
  return out;
}

}  // namespace

RewriteCertificate embed(const RewriteCertificate& c, const std::vector<FieldElement>& prefix,
                         const std::vector<FieldElement>& suffix) {
  if (prefix.empty() && suffix.empty()) return c;
  const CtxPtr& ctx = c.ctx();
  const DiffForm left = log_wedge(ctx, prefix);
  const DiffForm right = log_wedge(ctx, suffix);
  auto lift_form = [&](const DiffForm& w) { return wedge(wedge(left, w), right); };
  auto lift = [&](const Presentation& p) -> Presentation {
    if (const auto* s = std::get_if<SymbolPresentation>(&p))
      return SymbolPresentation(s->alpha(), concat(prefix, s->slots(), suffix));
    return lift_form(std::get<DiffForm>(p));
  };
  RewriteCertificate out{lift(c.lhs), lift(c.rhs), {}, lift_form(c.theta), {}};
  if (prefix.size() % 2 == 1) out.theta = -out.theta;
  for (const auto& g : c.generators) out.generators.push_back({g.u, concat(prefix, g.slots, suffix)});
  for (const auto& e : c.exact_generators)
    out.exact_generators.push_back({prefix.size() % 2 == 1 ? -e.c : e.c, concat(prefix, e.slots, suffix)});
  for (const auto& a : c.axiom_steps) {
    AxiomStep b = a;
    b.slots = concat(prefix, a.slots, suffix);
    b.slot = a.slot + prefix.size();
    b.claimed_difference = lift_form(a.claimed_difference);
    out.axiom_steps.push_back(std::move(b));
  }
  return out;
}

}  // namespace charp

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

// Acceptance runner: prints one PASS/FAIL line per criterion AC1..AC10 and
// exits nonzero if any criterion fails.

#include <sys/wait.h>

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <bit>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "charp/cyclic.hpp"
#include "charp/error.hpp"
#include "charp/expr.hpp"
#include "charp/json_io.hpp"
#include "charp/procedures.hpp"
#include "support.hpp"

using namespace charp;
using testing::Rng;

namespace {

/// Collects failures for one criterion; only the first few messages are kept.
class Tally {
 public:
  void check(bool ok, const std::string& what) {
    ++checks_;
    if (ok) return;
    ++failures_;
    if (messages_.size() < 3) messages_.push_back(what);
  }
  void note(const std::string& s) { notes_.push_back(s); }
  bool ok() const { return failures_ == 0; }
  std::string summary() const {
    std::ostringstream os;
    os << checks_ << " checks";
    for (const auto& n : notes_) os << ", " << n;
    if (failures_ > 0) {
      os << "; " << failures_ << " failed";
      for (const auto& m : messages_) os << " [" << m << "]";
    }
    return os.str();
  }

 private:
  std::size_t checks_ = 0;
  std::size_t failures_ = 0;
  std::vector<std::string> messages_;
  std::vector<std::string> notes_;
};

struct Context {
  std::uint64_t seed;
  std::string cli;
  /// Certificates emitted by the pipelines, re-verified in AC10.
  std::vector<RewriteCertificate> emitted;
  std::vector<RewriteCertificate> emitted_with_axioms;
};

Rng rng_for(const Context& c, std::uint64_t salt) { return Rng(c.seed * 0x9e3779b97f4a7c15ULL + salt); }

std::size_t pick(Rng& rng, std::size_t n) { return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng); }

DiffForm random_form(const CtxPtr& ctx, Rng& rng, unsigned degree) {
  DiffForm w(ctx, degree);
  const DiffForm::Basis top = DiffForm::Basis{1} << ctx->nvars();
  for (DiffForm::Basis m = 0; m < top; ++m) {
    if (static_cast<unsigned>(std::popcount(m)) != degree || pick(rng, 3) == 0) continue;
    w.accumulate(m, testing::random_element(ctx, rng, 2, 2));
  }
  return w;
}

DiffForm signed_form(const DiffForm& w, unsigned k) { return k % 2 == 0 ? w : -w; }

std::vector<FieldElement> random_slots(const CtxPtr& ctx, Rng& rng, std::size_t n, unsigned deg = 1) {
  std::vector<FieldElement> slots;
  for (std::size_t k = 0; k < n; ++k) slots.push_back(testing::random_nonconstant(ctx, rng, 2, deg));
  return slots;
}

// ---------------------------------------------------------------------------

void exterior_laws(Context& c, Tally& t) {
  Rng rng = rng_for(c, 1);
  const std::vector<CtxPtr> fields{FieldCtx::create(2, 1, {"x", "y", "z"}), FieldCtx::create(3, 1, {"x", "y"})};
  const int instances = 1000;
  for (const auto& ctx : fields) {
    const unsigned top = static_cast<unsigned>(ctx->nvars());
    const std::string tag = "p=" + std::to_string(ctx->p());
    for (int i = 0; i < instances; ++i) {
      const unsigned k = static_cast<unsigned>(pick(rng, top + 1));
      const DiffForm w = random_form(ctx, rng, k);
      t.check(d(d(w)).is_zero(), tag + " d(d w) != 0");
    }
    for (int i = 0; i < instances; ++i) {
      const unsigned ka = static_cast<unsigned>(pick(rng, top));
      const unsigned kb = static_cast<unsigned>(pick(rng, top - ka));
      const DiffForm a = random_form(ctx, rng, ka), b = random_form(ctx, rng, kb);
      t.check(d(wedge(a, b)) == wedge(d(a), b) + signed_form(wedge(a, d(b)), ka), tag + " Leibniz");
    }
    for (int i = 0; i < instances; ++i) {
      const unsigned ka = static_cast<unsigned>(pick(rng, top + 1));
      const unsigned kb = static_cast<unsigned>(pick(rng, top + 1 - ka));
      const DiffForm a = random_form(ctx, rng, ka), b = random_form(ctx, rng, kb);
      t.check(wedge(a, b) == signed_form(wedge(b, a), ka * kb), tag + " graded commutativity");
    }
    for (int i = 0; i < instances; ++i) {
      const FieldElement f = testing::random_nonzero(ctx, rng), g = testing::random_nonzero(ctx, rng);
      t.check(dlog(f * g) == dlog(f) + dlog(g), tag + " dlog multiplicativity");
    }
  }
  t.note("4 laws x " + std::to_string(instances) + " instances x 2 fields");
}

// ---------------------------------------------------------------------------

struct RuleCase {
  char rule;
  SymbolPresentation input;
  RewriteResult result;
};

/// Multiplies one slot of the left side by an element that changes its value.
std::optional<RewriteCertificate> perturb_slot(const RewriteCertificate& cert, Rng& rng) {
  const auto* sym = std::get_if<SymbolPresentation>(&cert.lhs);
  if (sym == nullptr) return std::nullopt;
  const DiffForm before = eval_presentation(cert.lhs);
  for (int attempt = 0; attempt < 8; ++attempt) {
    const std::size_t k = pick(rng, sym->n());
    const FieldElement factor = testing::random_nonconstant(sym->ctx(), rng, 2, 1);
    RewriteCertificate m = cert;
    m.lhs = sym->with_slot(k, sym->slot(k) * factor);
    if (eval_presentation(m.lhs) != before) return m;
  }
  return std::nullopt;
}

/// Removes one witness whose contribution is nonzero.
std::optional<RewriteCertificate> drop_witness(const RewriteCertificate& cert, Rng& rng) {
  std::vector<std::size_t> live;
  for (std::size_t k = 0; k < cert.generators.size(); ++k)
    if (!wp_image(cert.generators[k].u, cert.generators[k].slots).is_zero()) live.push_back(k);
  std::vector<std::size_t> exact_live;
  for (std::size_t k = 0; k < cert.exact_generators.size(); ++k)
    if (!exact_image(cert.exact_generators[k]).is_zero()) exact_live.push_back(k);
  const bool theta_live = !d(cert.theta).is_zero();
  const std::size_t choices = live.size() + exact_live.size() + (theta_live ? 1 : 0);
  if (choices == 0) return std::nullopt;
  RewriteCertificate m = cert;
  const std::size_t k = pick(rng, choices);
  if (k < live.size()) {
    m.generators.erase(m.generators.begin() + static_cast<long>(live[k]));
  } else if (k < live.size() + exact_live.size()) {
    m.exact_generators.erase(m.exact_generators.begin() + static_cast<long>(exact_live[k - live.size()]));
  } else {
    m.theta = DiffForm(cert.theta.ctx(), cert.theta.degree());
  }
  return m;
}

std::vector<RuleCase> generate_rule_cases(const CtxPtr& ctx, Rng& rng, char rule, int count) {
  std::vector<RuleCase> out;
  const bool binomial_only = ctx->p() > 2;
  const std::size_t max_n = std::min<std::size_t>(3, ctx->nvars());
  const std::size_t min_n = (rule == 'd' || rule == 'e' || rule == 'f') ? 2 : 1;
  auto element = [&] { return binomial_only ? testing::random_binomial(ctx, rng) : testing::random_as(ctx, rng); };
  for (int k = 0; k < count; ++k) {
    const std::size_t n = min_n + pick(rng, max_n - min_n + 1);
    const SymbolPresentation s(testing::random_nonzero(ctx, rng, 2, 2), random_slots(ctx, rng, n));
    const std::size_t i = pick(rng, n);
    std::size_t j = pick(rng, n - 1);
    if (j >= i) ++j;
    switch (rule) {
      case 'a': out.push_back({rule, s, rule_a(s, i)}); break;
      case 'b': out.push_back({rule, s, rule_b(s, i, element())}); break;
      case 'c': out.push_back({rule, s, rule_c(s, i, testing::random_poly(ctx, rng, 2, 1))}); break;
      case 'd': out.push_back({rule, s, rule_d(s, i, j)}); break;
      case 'e': out.push_back({rule, s, rule_e(s, i, j)}); break;
      default: out.push_back({rule, s, rule_f(s, i, j, element())}); break;
    }
  }
  return out;
}

struct RuleSuite {
  std::vector<RuleCase> cases;
};

RuleSuite& rule_suite(Context& c) {
  static RuleSuite suite;
  if (!suite.cases.empty()) return suite;
  Rng rng = rng_for(c, 2);
  for (const auto& ctx : {FieldCtx::create(2, 1, {"x", "y", "z"}), FieldCtx::create(3, 1, {"x", "y"})})
    for (char rule : std::string("abcdef")) {
      auto batch = generate_rule_cases(ctx, rng, rule, 200);
      for (auto& rc : batch) suite.cases.push_back(std::move(rc));
    }
  return suite;
}

void rewrite_soundness(Context& c, Tally& t) {
  Rng rng = rng_for(c, 3);
  const RuleSuite& suite = rule_suite(c);
  std::size_t mutants = 0, unmutable = 0, trivial = 0;
  for (std::size_t k = 0; k < suite.cases.size(); ++k) {
    const RuleCase& rc = suite.cases[k];
    const std::string tag = std::string("rule ") + rc.rule + " p=" + std::to_string(rc.input.ctx()->p());
    const RewriteCertificate& cert = rc.result.certificate;
    t.check(same_presentation(cert.lhs, rc.input), tag + " certificate does not start at the input");
    t.check(verify(cert).status == VerdictStatus::Verified, tag + " not Verified");
    if (rc.result.trivial) ++trivial;
    if (k % 7 == 0) c.emitted.push_back(cert);
    bool any = false;
    if (auto m = perturb_slot(cert, rng)) {
      ++mutants;
      any = true;
      t.check(verify(*m).status == VerdictStatus::Rejected, tag + " perturbed slot accepted");
    }
    if (auto m = drop_witness(cert, rng)) {
      ++mutants;
      any = true;
      t.check(verify(*m).status == VerdictStatus::Rejected, tag + " dropped witness accepted");
    }
    if (!any) ++unmutable;
  }
  t.note(std::to_string(suite.cases.size()) + " rewrites (200 per rule and field)");
  t.note(std::to_string(trivial) + " trivial outcomes");
  t.note(std::to_string(mutants) + " mutants");
  t.note(std::to_string(unmutable) + " certificates with nothing to mutate");
}

void exact_rules(Context& c, Tally& t) {
  std::size_t n = 0;
  for (const RuleCase& rc : rule_suite(c).cases) {
    if (rc.rule != 'c' && rc.rule != 'd' && rc.rule != 'e') continue;
    ++n;
    const RewriteCertificate& cert = rc.result.certificate;
    const std::string tag = std::string("rule ") + rc.rule;
    t.check(cert.generators.empty() && cert.exact_generators.empty() && cert.theta.is_zero() &&
                cert.axiom_steps.empty(), tag + " has witnesses");
    t.check(eval_presentation(cert.lhs) == eval_presentation(cert.rhs), tag + " eval(lhs) != eval(rhs)");
  }
  t.note(std::to_string(n) + " instances of rules c, d, e");
}

// ---------------------------------------------------------------------------

/// Coordinates of v in the order used by build_phi: tuples lexicographically,
/// each entry padded to p coefficients.
std::vector<FieldElement> flatten(const TupleVector& v) {
  const unsigned p = v.ctx()->p();
  std::vector<FieldElement> out;
  for (std::size_t idx = 1; idx <= v.size(); ++idx)
    for (unsigned k = 0; k < p; ++k)
      out.push_back(k < v.at(idx).coeffs().size() ? v.at(idx).coeff(k) : FieldElement(v.ctx()));
  return out;
}

TupleVector restrict(const TupleVector& v, std::size_t n, const std::function<std::optional<std::size_t>(std::size_t)>& map) {
  TupleVector out(v.ctx(), n);
  for (std::size_t idx = 1; idx <= v.size(); ++idx)
    if (!v.at(idx).is_zero())
      if (auto to = map(idx)) out.set(*to, v.at(idx));
  return out;
}

/// Whether the inductive construction meets a zero slot, from phi values alone.
bool expect_trivial(const FieldElement& alpha, const std::vector<FieldElement>& slots, const TupleVector& v) {
  const std::size_t n = slots.size();
  if (n == 1) return norm(alpha, v.at(1)).is_zero();
  const std::vector<FieldElement> prefix(slots.begin(), slots.end() - 1);
  const TupleVector v0 = restrict(v, n - 1, [](std::size_t idx) -> std::optional<std::size_t> {
    if (idx & 1U) return std::nullopt;
    return idx >> 1;
  });
  const TupleVector v1 = restrict(v, n - 1, [](std::size_t idx) -> std::optional<std::size_t> {
    if (!(idx & 1U) || idx == 1) return std::nullopt;
    return idx >> 1;
  });
  const ASElement& v01 = v.at(1);
  if (v1.is_zero() && v01.is_zero()) return expect_trivial(alpha, prefix, v0);
  if (v1.is_zero()) {
    if (norm(alpha, v01).is_zero()) return true;
  } else {
    if (expect_trivial(alpha, prefix, v1)) return true;
    if ((phi_value(alpha, prefix, v1) + norm(alpha, v01)).is_zero()) return true;
  }
  if (v0.is_zero()) return false;
  if (expect_trivial(alpha, prefix, v0)) return true;
  return phi_value(alpha, slots, v).is_zero();
}

void slot_modification(Context& c, Tally& t) {
  Rng rng = rng_for(c, 4);
  const CtxPtr ctx = FieldCtx::create(2, 1, {"x", "y", "z"});
  std::size_t fired = 0;
  for (int k = 0; k < 100; ++k) {
    const std::size_t n = 1 + static_cast<std::size_t>(k % 3);
    const bool split = k % 4 == 0;
    const FieldElement u = testing::random_poly(ctx, rng, 2, 1);
    const FieldElement alpha = split ? u.wp() : testing::random_element(ctx, rng, 2, 2);
    const SymbolPresentation s(alpha, random_slots(ctx, rng, n));
    TupleVector v(ctx, n);
    while (v.is_zero()) {
      for (std::size_t idx = 1; idx < (std::size_t{1} << n); ++idx) {
        const std::size_t roll = pick(rng, 4);
        if (roll == 0) continue;
        if (split && roll == 1) {
          // u + L has norm zero when alpha = u^2 + u.
          v.set(idx, ASElement::binomial(u, alpha.one()).scaled(testing::random_nonzero_poly(ctx, rng, 2, 1)));
        } else {
          v.set(idx, testing::random_as(ctx, rng));
        }
      }
    }
    const RewriteResult r = slot_modify(s, v);
    const std::string tag = "n=" + std::to_string(n);
    t.check(same_presentation(r.certificate.lhs, s), tag + " chain does not start at s");
    t.check(verify(r.certificate).status == VerdictStatus::Verified, tag + " chain not Verified");
    c.emitted.push_back(r.certificate);
    const bool expected = expect_trivial(alpha, s.slots(), v);
    t.check(r.trivial == expected, tag + " triviality branch mismatch");
    if (r.trivial) {
      ++fired;
      t.check(eval_presentation(r.certificate.rhs).is_zero(), tag + " trivial chain does not end at zero");
      continue;
    }
    const FieldElement target = evaluate(build_phi(s), flatten(v));
    t.check(r.result->slot(n - 1) == target, tag + " final slot != phi(v)");
    t.check(r.result->alpha() == alpha, tag + " alpha changed");
    t.check(same_presentation(r.certificate.rhs, *r.result), tag + " chain does not end at the result");
  }
  t.note("100 pairs, n = 1, 2, 3");
  t.note(std::to_string(fired) + " trivial branches");
}

// ---------------------------------------------------------------------------

void linkage(Context& c, Tally& t) {
  Rng rng = rng_for(c, 5);
  struct Config {
    CtxPtr ctx;
    std::size_t n, l, size;
    int runs;
  };
  const CtxPtr f2 = FieldCtx::create(2, 1, {"x", "y", "z"});
  const CtxPtr f3 = FieldCtx::create(3, 1, {"x", "y"});
  const std::vector<Config> configs{{f2, 1, 1, 2, 5}, {f2, 2, 1, 4, 5}, {f2, 2, 2, 3, 5}, {f2, 3, 1, 8, 3},
                                    {f3, 2, 1, 4, 5}};
  std::size_t total = 0;
  for (const Config& cfg : configs) {
    const std::string tag = "p=" + std::to_string(cfg.ctx->p()) + " n=" + std::to_string(cfg.n) +
                            " l=" + std::to_string(cfg.l);
    t.check(linkage_collection_size(cfg.n, cfg.l) == cfg.size, tag + " collection size");
    for (int run = 0; run < cfg.runs; ++run) {
      const std::vector<FieldElement> slots = random_slots(cfg.ctx, rng, cfg.n);
      std::vector<SymbolPresentation> symbols;
      for (std::size_t k = 0; k < cfg.size; ++k)
        symbols.emplace_back(testing::random_element(cfg.ctx, rng, 2, 1), slots);
      const LinkageOutcome o = separable_link(symbols, cfg.l);
      ++total;
      t.check(o.symbols.size() == cfg.size, tag + " output count");
      const LinkageSystem& sys = o.system;
      FieldElement common(cfg.ctx);
      for (std::size_t i = 0; i < o.symbols.size(); ++i) {
        const LinkedSymbol& ls = o.symbols[i];
        c.emitted.push_back(ls.certificate);
        t.check(ls.verdict.status == VerdictStatus::Verified, tag + " chain not Verified");
        t.check(verify(ls.certificate).status == VerdictStatus::Verified, tag + " chain fails re-verification");
        t.check(same_presentation(ls.certificate.lhs, symbols[i]), tag + " chain does not start at the input");
        t.check(eval_presentation(ls.certificate.rhs) == eval_symbol(ls.presentation), tag + " chain end mismatch");
        t.check(ls.presentation.alpha() == o.alpha_star, tag + " alpha not shared");
        for (std::size_t k = 0; k + 1 < cfg.l; ++k)
          t.check(ls.presentation.slot(k) == slots[k], tag + " leading slot not shared");

        // The solved x must satisfy alpha_0 + delta_0 = alpha_i + delta_i, with
        // delta_i the phi value of the vector built from x and y.
        TupleVector v(cfg.ctx, cfg.n);
        for (std::size_t j = 0; j < sys.gammas.size(); ++j)
          v.set(sys.gamma_tuples[j], ASElement::binomial(sys.x[j], FieldElement(cfg.ctx, sys.y[i][j])));
        const FieldElement lhs = symbols[i].alpha() + phi_value(symbols[i].alpha(), slots, v);
        if (i == 0) common = lhs;
        t.check(lhs == common, tag + " x does not solve the linear system");
        t.check(lhs == o.alpha_star, tag + " alpha_i + delta_i != alpha*");
      }
    }
  }
  t.note(std::to_string(total) + " collections (sizes 2, 4, 3, 8 for p=2; 4 for p=3)");
}

// ---------------------------------------------------------------------------

void norm_identity(Context& c, Tally& t) {
  for (unsigned p : {2U, 3U, 5U}) {
    const CtxPtr ctx = FieldCtx::create(p, 1, {"x", "y", "a"});
    const FieldElement x = FieldElement::variable(ctx, "x"), y = FieldElement::variable(ctx, "y"),
                       a = FieldElement::variable(ctx, "a");
    const FieldElement expected = x.pow(p) - x * y.pow(p - 1) + a * y.pow(p);
    t.check(norm(a, ASElement::binomial(x, y)) == expected, "p=" + std::to_string(p) + " norm(x + L y)");
  }
  Rng rng = rng_for(c, 6);
  for (unsigned p : {2U, 3U}) {
    const CtxPtr ctx = FieldCtx::create(p, 1, {"x", "y"});
    for (int k = 0; k < 100; ++k) {
      const FieldElement alpha = testing::random_element(ctx, rng, 2, 2);
      const ASElement f = testing::random_as(ctx, rng), g = testing::random_as(ctx, rng);
      const std::string tag = "p=" + std::to_string(p);
      t.check(norm(alpha, as_mul(alpha, f, g)) == norm(alpha, f) * norm(alpha, g), tag + " multiplicativity");
      t.check(norm(alpha, f) == testing::norm_by_conjugates(alpha, f), tag + " determinant vs conjugates");
    }
  }
  t.note("symbolic identity for p = 2, 3, 5; 100 pairs each for p = 2, 3");
}

// ---------------------------------------------------------------------------

/// Every composition of `total` into `parts` nonnegative pieces.
void compositions(std::size_t parts, unsigned total, std::vector<unsigned>& cur, std::vector<std::vector<unsigned>>& out) {
  if (cur.size() + 1 == parts) {
    cur.push_back(total);
    out.push_back(cur);
    cur.pop_back();
    return;
  }
  for (unsigned k = 0; k <= total; ++k) {
    cur.push_back(k);
    compositions(parts, total - k, cur, out);
    cur.pop_back();
  }
}

/// The witness is a common zero of all order p-1 partial derivatives.
bool is_singular_point(const PolyFormSpec& form, const std::vector<FieldElement>& w) {
  std::vector<std::vector<unsigned>> kappas;
  std::vector<unsigned> cur;
  compositions(form.dimension(), form.ctx()->p() - 1, cur, kappas);
  bool nonzero = false;
  for (const auto& c : w) nonzero = nonzero || !c.is_zero();
  if (!nonzero) return false;
  for (const auto& kappa : kappas) {
    const std::vector<FieldElement> lin = order_partials(form, kappa);
    FieldElement s(form.ctx());
    for (std::size_t k = 0; k < w.size(); ++k) s += lin[k] * w[k];
    if (!s.is_zero()) return false;
  }
  return true;
}

FieldElement random_constant(const CtxPtr& ctx, Rng& rng, bool nonzero) {
  const std::size_t q = ctx->fq().q();
  const std::size_t lo = nonzero ? 1 : 0;
  return FieldElement::constant(ctx, static_cast<FiniteField::Elem>(lo + pick(rng, q - lo)));
}

PolyFormSpec random_structural(const CtxPtr& ctx, Rng& rng, std::size_t budget) {
  const unsigned p = ctx->p();
  std::vector<int> options{0};
  if (budget >= 2) options.push_back(1);
  if (budget >= p) options.push_back(2);
  if (budget >= 2) options.push_back(3);
  if (budget >= 3) options.push_back(4);
  switch (options[pick(rng, options.size())]) {
    case 1:
      return PolyFormSpec::two_dim(random_constant(ctx, rng, false),
                                   pick(rng, 2) == 0 ? TwoDimVariant::A1Weighted : TwoDimVariant::A2Weighted);
    case 2: return PolyFormSpec::norm_form(random_constant(ctx, rng, false));
    case 3: return PolyFormSpec::scale(random_constant(ctx, rng, true), random_structural(ctx, rng, budget));
    case 4: {
      const std::size_t left = 1 + pick(rng, budget - 1);
      std::vector<PolyFormSpec> parts{random_structural(ctx, rng, left), random_structural(ctx, rng, budget - left)};
      return PolyFormSpec::direct_sum(std::move(parts));
    }
    default: {
      FormPoly poly(ctx, 1);
      poly.accumulate({p}, random_constant(ctx, rng, true));
      return PolyFormSpec::explicit_form(std::move(poly));
    }
  }
}

void regularity_agreement(Context& c, Tally& t) {
  Rng rng = rng_for(c, 7);
  const std::vector<CtxPtr> fields{FieldCtx::create(2, 1), FieldCtx::create(3, 1), FieldCtx::create(2, 2),
                                   FieldCtx::create(3, 2)};
  std::size_t forms = 0, certified = 0, explicit_leaves = 0, diagonal = 0;
  std::uint64_t points = 0;
  for (const auto& ctx : fields) {
    const std::string tag = "F" + std::to_string(ctx->fq().q());
    const std::size_t max_dim = ctx->fq().q() >= 9 ? 5 : 6;
    for (int k = 0; k < 40; ++k) {
      const PolyFormSpec form = random_structural(ctx, rng, 2 + pick(rng, max_dim - 1));
      if (form.dimension() > max_dim) continue;
      ++forms;
      std::optional<RegularityCertificate> cert;
      try {
        cert = regularity_certificate(form);
      } catch (const Error& e) {
        if (e.kind() != ErrorKind::ExplicitLeaf) throw;
        ++explicit_leaves;
        continue;
      }
      const BruteForceResult bf = is_p_regular_bruteforce(form);
      points += bf.points_checked;
      if (cert) {
        ++certified;
        t.check(bf.regular, tag + " certified form is not regular by brute force");
      }
      if (!bf.regular) t.check(bf.witness && is_singular_point(form, *bf.witness), tag + " bad witness");
    }
    for (std::size_t m = 1; m <= 4; ++m) {
      FormPoly poly(ctx, m);
      for (std::size_t j = 0; j < m; ++j) {
        std::vector<unsigned> e(m, 0);
        e[j] = ctx->p();
        poly.accumulate(e, random_constant(ctx, rng, true));
      }
      const PolyFormSpec form = PolyFormSpec::explicit_form(std::move(poly));
      const BruteForceResult bf = is_p_regular_bruteforce(form);
      ++diagonal;
      t.check(!bf.regular, tag + " diagonal form reported regular");
      t.check(bf.witness && is_singular_point(form, *bf.witness), tag + " diagonal witness invalid");
    }
  }
  t.check(forms - explicit_leaves >= 50, "fewer than 50 structural forms checked");
  t.note(std::to_string(forms - explicit_leaves) + " structural forms");
  t.note(std::to_string(certified) + " certified");
  t.note(std::to_string(diagonal) + " diagonal forms");
  t.note(std::to_string(points) + " points enumerated");
}

// ---------------------------------------------------------------------------

void trivialization(Context& c, Tally& t) {
  Rng rng = rng_for(c, 8);
  const CtxPtr ctx = FieldCtx::create(2, 1, {"x", "y"});
  auto phi_dim_ok = [&](const SymbolPresentation& s) {
    return build_Phi(s).dimension() == ((std::size_t{1} << s.n()) - 1) * ctx->p() + 2;
  };
  std::set<std::string> branches;
  for (int k = 0; k < 20; ++k) {
    std::optional<SymbolPresentation> s;
    if (k % 2 == 0) {
      const std::size_t n = 1 + static_cast<std::size_t>(k % 4 == 0);
      s.emplace(testing::random_nonconstant(ctx, rng, 2, 1).wp(), random_slots(ctx, rng, n));
    } else {
      const FieldElement alpha = testing::random_nonconstant(ctx, rng, 2, 1);
      ASElement f = testing::random_binomial(ctx, rng);
      while (norm(alpha, f).is_zero()) f = testing::random_binomial(ctx, rng);
      s.emplace(alpha, std::vector<FieldElement>{norm(alpha, f)});
    }
    t.check(phi_dim_ok(*s), "dim(Phi)");
    TrivializationOutcome out;
    for (unsigned deg = 0; deg <= 2 && !out.trivial; ++deg) {
      SearchBudget b;
      b.max_degree = deg;
      out = trivialize(*s, b);
    }
    t.check(out.trivial, "positive control not trivialized at degree <= 2");
    if (!out.trivial) continue;
    branches.insert(out.branch);
    t.check(verify(*out.certificate).status == VerdictStatus::Verified, "positive control certificate not Verified");
    t.check(same_presentation(out.certificate->lhs, *s), "certificate does not start at the symbol");
    t.check(eval_presentation(out.certificate->rhs).is_zero(), "certificate does not end at zero");
    c.emitted.push_back(*out.certificate);
  }
  SearchBudget b;
  b.max_degree = 3;
  const SymbolPresentation negative(FieldElement::variable(ctx, "x"), {FieldElement::variable(ctx, "y")});
  const TrivializationOutcome neg = trivialize(negative, b);
  t.check(!neg.trivial, "negative control (x; (y)) trivialized");
  t.check(phi_dim_ok(negative), "dim(Phi) of the negative control");
  for (std::size_t n = 1; n <= 3; ++n)
    t.check(phi_dim_ok(SymbolPresentation(FieldElement::variable(ctx, "x"), random_slots(ctx, rng, n))), "dim(Phi)");
  std::string names;
  for (const auto& br : branches) names += (names.empty() ? "" : "/") + br;
  t.note("20 positive controls via " + names);
  t.note(std::string("negative control ") + (neg.trivial ? "Trivial" : "NotFoundWithinBound") +
         (neg.search.cap_reached ? " (cap reached)" : ""));
}

// ---------------------------------------------------------------------------

void cyclic_cross_check(Context& c, Tally& t) {
  Rng rng = rng_for(c, 9);
  std::size_t singular = 0;
  for (unsigned p : {2U, 3U}) {
    const CtxPtr ctx = FieldCtx::create(p, 1, {"x", "y"});
    const std::string tag = "p=" + std::to_string(p);
    for (int k = 0; k < 100; ++k) {
      const FieldElement alpha = testing::random_nonconstant(ctx, rng, 2, 2);
      const FieldElement beta = testing::random_nonzero(ctx, rng, 2, 2);
      const ASElement g = testing::random_as(ctx, rng);
      const CyclicAlgebra A(alpha, beta);
      std::vector<ASElement> parts{ASElement::zero(ctx), g};
      const AlgebraElement gy = A.from_parts(parts);
      t.check(A.power_p(gy) == A.one().scaled(norm(alpha, g) * beta), tag + " power_p(g y) != N(g) beta");
      if (norm(alpha, g).is_zero()) {
        ++singular;
        continue;
      }
      const SplitWitness w = split_witness(alpha, g);
      t.check(w.t_power_is_one && w.nilpotent, tag + " split witness flags");
      const AlgebraElement u = w.t - w.algebra.one();
      AlgebraElement acc = u, tp = w.t;
      for (unsigned e = 1; e < p; ++e) {
        acc = w.algebra.mult(acc, u);
        tp = w.algebra.mult(tp, w.t);
      }
      t.check(acc.is_zero(), tag + " (t - 1)^p != 0");
      t.check(tp == w.algebra.one(), tag + " t^p != 1");
    }
  }
  t.note("100 pairs each for p = 2, 3");
  t.note(std::to_string(singular) + " with N(g) = 0");
}

// ---------------------------------------------------------------------------

int run_verify_cert(const std::string& cli, const std::filesystem::path& file) {
  const std::string cmd = "\"" + cli + "\" verify-cert \"" + file.string() + "\" > /dev/null 2>&1";
  const int status = std::system(cmd.c_str());
  return status == -1 ? -1 : WEXITSTATUS(status);
}

void cli_contract(Context& c, Tally& t) {
  Rng rng = rng_for(c, 10);
  const std::vector<CtxPtr> fields{FieldCtx::create(2, 1, {"x", "y", "z"}), FieldCtx::create(3, 1, {"x", "y"}),
                                   FieldCtx::create(5, 1, {"x"}), FieldCtx::create(2, 2, {"x", "y"}),
                                   FieldCtx::create(3, 2, {"x"})};
  for (int k = 0; k < 500; ++k) {
    const CtxPtr& ctx = fields[static_cast<std::size_t>(k) % fields.size()];
    FieldElement a = testing::random_element(ctx, rng, 3, 3);
    if (ctx->e() > 1) a *= FieldElement::generator(ctx).pow(static_cast<long long>(pick(rng, 5)));
    const std::string text = to_string(a);
    const FieldElement back = parse_expr(ctx, text);
    t.check(back == a, "parse(print(a)) != a for " + text);
    t.check(to_string(back) == text, "print is not a fixed point for " + text);
  }

  // A general norm slot: verification relies on an axiom step and reports so.
  {
    const CtxPtr f3 = FieldCtx::create(3, 1, {"x", "y"});
    const SymbolPresentation s(FieldElement::variable(f3, "x"), {FieldElement::variable(f3, "y")});
    const FieldElement one = s.alpha().one();
    c.emitted_with_axioms.push_back(rule_b(s, 0, ASElement(f3, {s.alpha(), one, one})).certificate);
  }

  if (c.emitted.empty())
    for (std::size_t k = 0; k < rule_suite(c).cases.size(); k += 7) c.emitted.push_back(rule_suite(c).cases[k].result.certificate);

  io::Json verified = io::Json::array(), with_axioms = io::Json::array();
  for (const auto* group : {&c.emitted, &c.emitted_with_axioms}) {
    const VerdictStatus want = group == &c.emitted ? VerdictStatus::Verified : VerdictStatus::VerifiedModuloAxioms;
    for (const RewriteCertificate& cert : *group) {
      const io::Json j = io::certificate_to_json(cert);
      const io::Json reparsed = io::certificate_to_json(io::certificate_from_json(io::Json::parse(j.dump())));
      t.check(reparsed == j, "certificate JSON is not a fixed point");
      t.check(verify(io::certificate_from_json(j)).status == want, "certificate changes verdict after JSON");
      (group == &c.emitted ? verified : with_axioms).push_back(j);
    }
  }
  t.check(verified.size() > 0, "no certificates were emitted by the pipelines");

  if (c.cli.empty() || !std::filesystem::exists(c.cli)) {
    t.check(false, "charp-forms binary not found for verify-cert");
  } else {
    const auto dir = std::filesystem::temp_directory_path() / ("charp-acceptance-" + std::to_string(c.seed));
    std::filesystem::create_directories(dir);
    const auto good = dir / "emitted.json", axioms = dir / "axioms.json";
    std::ofstream(good) << io::Json{{"certificates", verified}}.dump();
    std::ofstream(axioms) << io::Json{{"certificates", with_axioms}}.dump();
    t.check(run_verify_cert(c.cli, good) == 0, "verify-cert did not exit 0 on emitted certificates");
    t.check(run_verify_cert(c.cli, axioms) == 2, "verify-cert did not exit 2 on an axiom-step certificate");
    std::filesystem::remove_all(dir);
  }
  t.note("500 elements");
  t.note(std::to_string(verified.size()) + " emitted certificates re-verified by verify-cert");
}

struct Criterion {
  std::string id;
  std::string title;
  double limit_seconds;
  std::function<void(Context&, Tally&)> run;
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Acceptance criteria runner"};
  Context ctx{20261016, ""};
  std::vector<std::string> only;
  app.add_option("--seed", ctx.seed, "Seed for all randomized instances");
  app.add_option("--cli", ctx.cli, "Path to the charp-forms binary (default: next to this executable)");
  app.add_option("--only", only, "Run only these criteria (e.g. AC1 AC5)");
  CLI11_PARSE(app, argc, argv);
  if (ctx.cli.empty()) ctx.cli = (std::filesystem::absolute(argv[0]).parent_path() / "charp-forms").string();

  const std::vector<Criterion> criteria{
      {"AC1", "exterior-algebra laws", 30, exterior_laws},
      {"AC2", "rewrite-certificate soundness and mutation rejection", 300, rewrite_soundness},
      {"AC3", "exact rules c, d, e", 300, exact_rules},
      {"AC4", "slot modification pipeline", 300, slot_modification},
      {"AC5", "separable linkage", 600, linkage},
      {"AC6", "norm identity and multiplicativity", 300, norm_identity},
      {"AC7", "regularity certificate vs brute force", 120, regularity_agreement},
      {"AC8", "trivialization controls and dim(Phi)", 600, trivialization},
      {"AC9", "cyclic algebra cross-validation", 300, cyclic_cross_check},
      {"AC10", "CLI round trips and certificate re-verification", 300, cli_contract},
  };

  int failed = 0;
  for (const Criterion& cr : criteria) {
    if (!only.empty() && std::find(only.begin(), only.end(), cr.id) == only.end()) continue;
    Tally tally;
    const auto start = std::chrono::steady_clock::now();
    try {
      cr.run(ctx, tally);
    } catch (const std::exception& e) {
      tally.check(false, std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    tally.check(secs < cr.limit_seconds, "time limit " + std::to_string(static_cast<int>(cr.limit_seconds)) + "s exceeded");
    char timing[32];
    std::snprintf(timing, sizeof timing, "%.2fs", secs);
    std::cout << cr.id << ' ' << (tally.ok() ? "PASS" : "FAIL") << " - " << cr.title << " (" << timing << "; "
              << tally.summary() << ")" << std::endl;
    if (!tally.ok()) ++failed;
  }
  return failed == 0 ? 0 : 1;
}

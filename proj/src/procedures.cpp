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

#include "charp/procedures.hpp"

#include <stdexcept>

#include "charp/error.hpp"

namespace charp {

std::string_view to_string(LinkStatus s) {
  switch (s) {
    case LinkStatus::Rewritten: return "Rewritten";
    case LinkStatus::Trivial: return "Trivial";
    case LinkStatus::Unchanged: return "Unchanged";
  }
  return "Rewritten";
}

std::size_t linkage_collection_size(std::size_t n, std::size_t l) {
  if (l < 1 || l > n) throw Error(ErrorKind::BadRange, "level must satisfy 1 <= l <= n");
  return 1 + (std::size_t{1} << n) - (std::size_t{1} << (l - 1));
}

namespace {

/// delta_i = sum_j gamma_j N_{alpha_i}(x_j + L y_ij).
FieldElement linkage_delta(const FieldElement& alpha, const LinkageSystem& sys, std::size_t i,
                           const std::vector<FieldElement>& x) {
  FieldElement sum(alpha.ctx());
  for (std::size_t j = 0; j < sys.gammas.size(); ++j) {
    const ASElement f = ASElement::binomial(x[j], alpha.make(sys.y[i][j]));
    if (!f.is_zero()) sum += sys.gammas[j] * norm(alpha, f);
  }
  return sum;
}

}  // namespace

LinkageOutcome separable_link(const std::vector<SymbolPresentation>& symbols, std::size_t l) {
  if (symbols.empty()) throw Error(ErrorKind::WrongCollectionSize, "no symbols");
  const std::size_t n = symbols.front().n();
  const std::size_t expected = linkage_collection_size(n, l);
  for (const auto& s : symbols)
    if (s.slots() != symbols.front().slots()) throw Error(ErrorKind::SlotsNotShared, "symbols must share all slots");
  if (symbols.size() != expected)
    throw Error(ErrorKind::WrongCollectionSize, "expected " + std::to_string(expected) + " symbols");

  const CtxPtr& ctx = symbols.front().ctx();
  const std::vector<FieldElement>& slots = symbols.front().slots();
  const std::size_t tail_mask = (std::size_t{1} << (n - l + 1)) - 1;

  LinkageSystem sys;
  for (std::size_t idx = 1; idx < (std::size_t{1} << n); ++idx) {
    if ((idx & tail_mask) == 0) continue;
    sys.gamma_tuples.push_back(idx);
    sys.gammas.push_back(tuple_product(slots, idx));
  }
  const std::size_t m = sys.gammas.size();
  sys.y.assign(m + 1, std::vector<int>(m, 1));
  for (std::size_t i = 1; i <= m; ++i) sys.y[i][i - 1] = 0;

  // alpha_0 + delta_0 - alpha_i - delta_i is affine in x_i alone.
  const FieldElement zero(ctx);
  sys.x.assign(m, zero);
  for (std::size_t i = 1; i <= m; ++i) {
    std::vector<FieldElement> at(m, zero);
    auto residual = [&](const FieldElement& xi) {
      at[i - 1] = xi;
      return symbols[0].alpha() + linkage_delta(symbols[0].alpha(), sys, 0, at) - symbols[i].alpha() -
             linkage_delta(symbols[i].alpha(), sys, i, at);
    };
    const FieldElement e0 = residual(zero);
    const FieldElement slope = residual(zero.one()) - e0;
    if (slope.is_zero()) throw std::logic_error("separable_link: degenerate linear equation");
    sys.x[i - 1] = -e0 / slope;
  }
  for (std::size_t i = 0; i <= m; ++i) sys.deltas.push_back(linkage_delta(symbols[i].alpha(), sys, i, sys.x));

  LinkageOutcome out{symbols[0].alpha() + sys.deltas[0], sys, {}};
  std::vector<FieldElement> padded(slots.begin(), slots.begin() + static_cast<long>(l - 1));
  padded.resize(n, zero.one());
  const SymbolPresentation zero_rep(out.alpha_star, padded);

  for (std::size_t i = 0; i <= m; ++i) {
    const SymbolPresentation& s = symbols[i];
    TupleVector v(ctx, n);
    for (std::size_t j = 0; j < m; ++j)
      v.set(sys.gamma_tuples[j], ASElement::binomial(sys.x[j], zero.make(sys.y[i][j])));
    if (v.is_zero()) {
      if (s.alpha() != out.alpha_star) throw std::logic_error("separable_link: zero vector with a different alpha");
      RewriteCertificate c = identity_certificate(s);
      Verdict vd = verify(c);
      out.symbols.push_back({LinkStatus::Unchanged, s, std::move(c), std::move(vd), sys.deltas[i]});
      continue;
    }
    RewriteResult r = slot_modify_tail(s, l, v);
    RewriteCertificate chain = r.certificate;
    SymbolPresentation result = zero_rep;
    LinkStatus status = LinkStatus::Trivial;
    if (!r.trivial) {
      const RewriteResult a = rule_a(*r.result, n - 1);
      chain = compose(chain, a.certificate);
      result = *a.result;
      status = LinkStatus::Rewritten;
      if (result.alpha() != out.alpha_star) throw std::logic_error("separable_link: alpha mismatch after rewriting");
    } else {
      const Presentation zero_form = DiffForm(ctx, static_cast<unsigned>(n));
      chain = compose(chain, RewriteCertificate{zero_form, zero_rep, {}, DiffForm(ctx, static_cast<unsigned>(n - 1)), {}});
    }
    Verdict vd = verify(chain);
    out.symbols.push_back({status, std::move(result), std::move(chain), std::move(vd), sys.deltas[i]});
  }
  return out;
}

TrivializationOutcome trivialize(const SymbolPresentation& s, const SearchBudget& budget) {
  TrivializationOutcome out;
  const PolyFormSpec phi = build_Phi(s);
  out.search = isotropy_search(phi, budget);
  if (!out.search.found) return out;

  const CtxPtr& ctx = s.ctx();
  const unsigned p = ctx->p();
  const std::size_t n = s.n();
  const std::vector<FieldElement>& z = out.search.vector;
  const FieldElement& x0 = z[0];
  const FieldElement& y0 = z[1];
  TupleVector v0(ctx, n);
  for (std::size_t idx = 1; idx < (std::size_t{1} << n); ++idx) {
    const auto first = z.begin() + static_cast<long>(2 + (idx - 1) * p);
    v0.set(idx, ASElement(ctx, std::vector<FieldElement>(first, first + p)));
  }

  out.trivial = true;
  if (v0.is_zero()) {
    out.branch = "alpha-in-wp";
    out.certificate = trivial_by_generator(s, -(y0 / x0)).certificate;
    return out;
  }
  if (x0.is_zero()) {
    out.branch = "last-slot-pth-power";
    const RewriteResult r = slot_modify(s, v0);
    if (r.trivial) {
      out.certificate = r.certificate;
      return out;
    }
    const RewriteResult c = rule_c(*r.result, n - 1, y0);
    if (!c.trivial) throw std::logic_error("trivialize: last slot is not -y0^p");
    out.certificate = compose(r.certificate, c.certificate);
    return out;
  }
  out.branch = "slot-modify-then-a";
  TupleVector w(ctx, n);
  const FieldElement inv = x0.inverse();
  for (std::size_t idx = 1; idx <= v0.size(); ++idx) w.set(idx, v0.at(idx).scaled(inv));
  const RewriteResult r = slot_modify(s, w);
  if (r.trivial) {
    out.certificate = r.certificate;
    return out;
  }
  const RewriteResult a = rule_a(*r.result, n - 1);
  const FieldElement u = -(y0 / x0);
  if (a.result->alpha() != u.wp()) throw std::logic_error("trivialize: alpha is not wp(-y0/x0)");
  out.certificate = compose(compose(r.certificate, a.certificate), trivial_by_generator(*a.result, u).certificate);
  return out;
}

}  // namespace charp

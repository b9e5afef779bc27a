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

#include "charp/rewrite.hpp"

#include <stdexcept>

#include "charp/error.hpp"

namespace charp {

namespace {

/// Witness data W for a form X: X = sum wp_image(gens) + sum exact_image(exact) + sum claimed.
struct Witness {
  std::vector<WpGenerator> gens;
  std::vector<ExactGenerator> exact;
  std::vector<AxiomStep> axioms;
};

Witness empty_witness(const CtxPtr&, std::size_t) { return Witness{}; }

Witness negated(Witness w) {
  for (auto& g : w.gens) g.u = -g.u;
  for (auto& e : w.exact) e.c = -e.c;
  for (auto& a : w.axioms) {
    a.sign = -a.sign;
    a.claimed_difference = -a.claimed_difference;
  }
  return w;
}

void append(Witness& w, const Witness& o) {
  w.gens.insert(w.gens.end(), o.gens.begin(), o.gens.end());
  w.exact.insert(w.exact.end(), o.exact.begin(), o.exact.end());
  w.axioms.insert(w.axioms.end(), o.axioms.begin(), o.axioms.end());
}

/// Exact term whose derivative is b_pos dlog(b_1) ^ .. ^ dlog(b_n).
ExactGenerator exact_primitive(const std::vector<FieldElement>& slots, std::size_t pos) {
  std::vector<FieldElement> others;
  for (std::size_t k = 0; k < slots.size(); ++k)
    if (k != pos) others.push_back(slots[k]);
  // d(b_pos * w) = dlog(b_pos) ^ w * b_pos, and moving dlog(b_pos) into place costs (-1)^pos.
  return ExactGenerator{pos % 2 == 0 ? slots[pos] : -slots[pos], std::move(others)};
}

/// Witness for alpha dlog(b_1) ^ .. dlog(N(f)) .. ^ dlog(b_n) with N(f) at pos; requires N(f) != 0.
Witness norm_slot_witness(const FieldElement& alpha, const ASElement& f, std::vector<FieldElement> slots,
                          std::size_t pos) {
  const CtxPtr& ctx = alpha.ctx();
  Witness w = empty_witness(ctx, slots.size());
  if (f.is_constant()) return w;
  if (f.is_binomial()) {
    // N(c0 + c1 L) = c1^p (wp(t) + alpha) with t = c0 / c1.
    const FieldElement t = f.coeff(0) / f.coeff(1);
    const FieldElement sigma = t.wp() + alpha;
    slots[pos] = sigma;
    w.gens.push_back({-t, slots});
    w.exact.push_back(exact_primitive(slots, pos));
    return w;
  }
  AxiomStep step{AxiomRule::NormSlotGeneral, alpha, f, pos, slots, -1, DiffForm(ctx, static_cast<unsigned>(slots.size()))};
  step.claimed_difference = expected_axiom_difference(step);
  w.axioms.push_back(std::move(step));
  return w;
}

RewriteResult rewritten(const SymbolPresentation& lhs, const SymbolPresentation& rhs, Witness w) {
  DiffForm theta(lhs.ctx(), static_cast<unsigned>(lhs.n() - 1));
  return RewriteResult{false, rhs, RewriteCertificate{lhs, rhs, std::move(w.gens), std::move(theta), std::move(w.axioms),
                                                      std::move(w.exact)}};
}

RewriteResult trivial(const SymbolPresentation& lhs, Witness w) {
  return RewriteResult{true, std::nullopt,
                       RewriteCertificate{lhs, DiffForm(lhs.ctx(), static_cast<unsigned>(lhs.n())), std::move(w.gens),
                                          DiffForm(lhs.ctx(), static_cast<unsigned>(lhs.n() - 1)), std::move(w.axioms),
                                          std::move(w.exact)}};
}

void check_slot(const SymbolPresentation& s, std::size_t i) {
  if (i >= s.n()) throw Error(ErrorKind::BadRange, "slot index out of range");
}

void check_pair(const SymbolPresentation& s, std::size_t i, std::size_t j) {
  check_slot(s, i);
  check_slot(s, j);
  if (i == j) throw Error(ErrorKind::SameSlot, "rule needs two distinct slots");
}

/// A root of T^p - T - alpha shared with f, given N(f) = 0 and f nonconstant.
FieldElement shared_root(const FieldElement& alpha, const ASElement& f) {
  const CtxPtr& ctx = alpha.ctx();
  FieldElement r(ctx);
  if (f.is_binomial()) {
    r = -(f.coeff(0) / f.coeff(1));
  } else {
    const UniPoly g = uni_gcd(f.to_unipoly(), UniPoly::artin_schreier(alpha));
    const long deg = g.degree();
    if (deg < 1) throw std::logic_error("shared_root: trivial gcd for a zero norm");
    // The roots of g lie in one coset r + F_p, so their mean is again a root.
    r = -(g.coeff(static_cast<std::size_t>(deg - 1)) / FieldElement(ctx, deg));
  }
  if (r.wp() != alpha) throw std::logic_error("shared_root: root check failed");
  return r;
}

SymbolPresentation prefix_symbol(const SymbolPresentation& s, std::size_t k) {
  return SymbolPresentation(s.alpha(), std::vector<FieldElement>(s.slots().begin(), s.slots().begin() + k));
}

std::vector<FieldElement> slots_from(const SymbolPresentation& s, std::size_t k) {
  return std::vector<FieldElement>(s.slots().begin() + k, s.slots().end());
}

const SymbolPresentation& rhs_symbol(const RewriteCertificate& c) { return std::get<SymbolPresentation>(c.rhs); }

/// Lifts a sub-result on the first k slots of s back to s.
RewriteResult lift(const RewriteResult& r, const std::vector<FieldElement>& suffix) {
  RewriteCertificate c = embed(r.certificate, {}, suffix);
  if (r.trivial) return RewriteResult{true, std::nullopt, std::move(c)};
  SymbolPresentation res = rhs_symbol(c);
  return RewriteResult{false, std::move(res), std::move(c)};
}

/// Extends `chain` (ending at the input of `next`) by `next`.
RewriteResult then(const RewriteCertificate& chain, const RewriteResult& next) {
  return RewriteResult{next.trivial, next.result, compose(chain, next.certificate)};
}

}  // namespace

RewriteResult trivial_by_generator(const SymbolPresentation& s, const FieldElement& u) {
  if (u.wp() != s.alpha()) throw Error(ErrorKind::InvalidArgument, "generator does not satisfy u^p - u = alpha");
  Witness w = empty_witness(s.ctx(), s.n());
  w.gens.push_back({u, s.slots()});
  return trivial(s, std::move(w));
}

RewriteResult rule_a(const SymbolPresentation& s, std::size_t i) {
  check_slot(s, i);
  const FieldElement& b = s.slot(i);
  Witness w = empty_witness(s.ctx(), s.n());
  ExactGenerator e = exact_primitive(s.slots(), i);
  e.c = -e.c;
  w.exact.push_back(std::move(e));
  return rewritten(s, s.with_alpha(s.alpha() + b), std::move(w));
}

RewriteResult rule_b(const SymbolPresentation& s, std::size_t i, const ASElement& f) {
  check_slot(s, i);
  if (f.is_zero()) throw Error(ErrorKind::ZeroElement, "rule b needs a nonzero element of L");
  const FieldElement nf = norm(s.alpha(), f);
  if (nf.is_zero()) return trivial_by_generator(s, shared_root(s.alpha(), f));
  return rewritten(s, s.with_slot(i, s.slot(i) * nf), negated(norm_slot_witness(s.alpha(), f, s.slots(), i)));
}

RewriteResult rule_c(const SymbolPresentation& s, std::size_t i, const FieldElement& gamma) {
  check_slot(s, i);
  const FieldElement b = s.slot(i) + gamma.frobenius();
  if (b.is_zero()) return trivial(s, empty_witness(s.ctx(), s.n()));
  SymbolPresentation r(s.alpha() * b / s.slot(i), s.slots());
  return rewritten(s, r.with_slot(i, b), empty_witness(s.ctx(), s.n()));
}

RewriteResult rule_d(const SymbolPresentation& s, std::size_t i, std::size_t j) {
  check_pair(s, i, j);
  return rewritten(s, s.with_slot(j, s.slot(i) * s.slot(j)), empty_witness(s.ctx(), s.n()));
}

RewriteResult rule_e(const SymbolPresentation& s, std::size_t i, std::size_t j) {
  check_pair(s, i, j);
  const FieldElement b = s.slot(i) + s.slot(j);
  if (b.is_zero()) return trivial(s, empty_witness(s.ctx(), s.n()));
  return rewritten(s, s.with_slot(i, b).with_slot(j, s.slot(j) / s.slot(i)), empty_witness(s.ctx(), s.n()));
}

RewriteResult rule_f(const SymbolPresentation& s, std::size_t i, std::size_t j, const ASElement& f) {
  check_pair(s, i, j);
  if (f.is_zero()) throw Error(ErrorKind::ZeroElement, "rule f needs a nonzero element of L");
  const FieldElement nf = norm(s.alpha(), f);
  if (nf.is_zero()) return rule_d(s, i, j);
  const FieldElement sum = s.slot(i) + nf;
  if (sum.is_zero()) {
    // b_i = -N(f) = N(-f): the whole symbol is a norm-slot form.
    return trivial(s, norm_slot_witness(s.alpha(), f.scaled(s.alpha().make(-1)), s.slots(), i));
  }
  // eval(rhs) - eval(lhs) = X(N at j) + X(N at i, b_i/N + 1 at j).
  Witness w = norm_slot_witness(s.alpha(), f, s.slots(), j);
  std::vector<FieldElement> slots2 = s.slots();
  slots2[j] = sum / nf;
  append(w, norm_slot_witness(s.alpha(), f, slots2, i));
  return rewritten(s, s.with_slot(j, sum * s.slot(j)), negated(std::move(w)));
}

RewriteResult swap_slots(const SymbolPresentation& s, std::size_t i, std::size_t j) {
  check_pair(s, i, j);
  std::vector<FieldElement> slots = s.slots();
  std::swap(slots[i], slots[j]);
  if (s.ctx()->p() != 2) slots[i] = slots[i].inverse();
  return rewritten(s, SymbolPresentation(s.alpha(), std::move(slots)), empty_witness(s.ctx(), s.n()));
}

TupleVector::TupleVector(CtxPtr ctx, std::size_t n) : ctx_(std::move(ctx)), n_(n) {
  if (n == 0 || n > 20) throw Error(ErrorKind::BadRange, "tuple vectors need 1 <= n <= 20");
  entries_.assign((std::size_t{1} << n) - 1, ASElement::zero(ctx_));
}

const ASElement& TupleVector::at(std::size_t index) const {
  if (index == 0 || index > entries_.size()) throw Error(ErrorKind::BadRange, "tuple index out of range");
  return entries_[index - 1];
}

void TupleVector::set(std::size_t index, ASElement f) {
  if (index == 0 || index > entries_.size()) throw Error(ErrorKind::BadRange, "tuple index out of range");
  entries_[index - 1] = std::move(f);
}

bool TupleVector::is_zero() const noexcept {
  for (const auto& e : entries_)
    if (!e.is_zero()) return false;
  return true;
}

std::size_t TupleVector::index_of(const std::vector<int>& d) {
  std::size_t idx = 0;
  for (int bit : d) {
    if (bit != 0 && bit != 1) throw Error(ErrorKind::BadRange, "tuple entries must be 0 or 1");
    idx = (idx << 1) | static_cast<std::size_t>(bit);
  }
  return idx;
}

std::vector<int> TupleVector::tuple_of(std::size_t index, std::size_t n) {
  std::vector<int> d(n);
  for (std::size_t k = 0; k < n; ++k) d[k] = static_cast<int>((index >> (n - 1 - k)) & 1U);
  return d;
}

FieldElement tuple_product(const std::vector<FieldElement>& slots, std::size_t index) {
  if (slots.empty()) throw Error(ErrorKind::BadRange, "no slots");
  FieldElement r = slots.front().one();
  const std::size_t n = slots.size();
  for (std::size_t k = 0; k < n; ++k)
    if ((index >> (n - 1 - k)) & 1U) r *= slots[k];
  return r;
}

FieldElement phi_value(const FieldElement& alpha, const std::vector<FieldElement>& slots, const TupleVector& v) {
  if (slots.size() != v.n()) throw Error(ErrorKind::DimensionMismatch, "vector length does not match slot count");
  FieldElement sum(alpha.ctx());
  for (std::size_t idx = 1; idx <= v.size(); ++idx) {
    const ASElement& f = v.at(idx);
    if (!f.is_zero()) sum += norm(alpha, f) * tuple_product(slots, idx);
  }
  return sum;
}

namespace {

RewriteResult modify_rec(const SymbolPresentation& s, const TupleVector& v);

/// v1p: vector over n-1 slots for the tuples (d', 1) with d' != 0; v01: entry of (0..0, 1).
RewriteResult modify_last(const SymbolPresentation& s, const std::optional<TupleVector>& v1p, const ASElement& v01) {
  const std::size_t n = s.n();
  if (!v1p || v1p->is_zero()) return rule_b(s, n - 1, v01);
  const RewriteResult r = modify_rec(prefix_symbol(s, n - 1), *v1p);
  const RewriteResult lifted = lift(r, {s.slot(n - 1)});
  if (lifted.trivial) return lifted;
  const RewriteResult step = v01.is_zero() ? rule_d(*lifted.result, n - 2, n - 1)
                                           : rule_f(*lifted.result, n - 2, n - 1, v01);
  const RewriteResult rf = then(lifted.certificate, step);
  if (rf.trivial) return rf;
  const FieldElement last = rf.result->slot(n - 1);
  const RewriteCertificate back = embed(reverse(r.certificate), {}, {last});
  RewriteCertificate chain = compose(rf.certificate, back);
  SymbolPresentation out = rhs_symbol(chain);
  return RewriteResult{false, std::move(out), std::move(chain)};
}

RewriteResult modify_rec(const SymbolPresentation& s, const TupleVector& v) {
  const std::size_t n = s.n();
  if (n == 1) return rule_b(s, 0, v.at(1));
  const CtxPtr& ctx = s.ctx();
  TupleVector v0(ctx, n - 1), v1p(ctx, n - 1);
  for (std::size_t idx = 1; idx <= v.size(); ++idx) {
    const ASElement& f = v.at(idx);
    if (f.is_zero()) continue;
    const std::size_t head = idx >> 1;
    if ((idx & 1U) == 0) {
      v0.set(head, f);
    } else if (head != 0) {
      v1p.set(head, f);
    }
  }
  const ASElement& v01 = v.at(1);

  if (v1p.is_zero() && v01.is_zero()) {
    const RewriteResult lifted = lift(modify_rec(prefix_symbol(s, n - 1), v0), {s.slot(n - 1)});
    if (lifted.trivial) return lifted;
    return then(lifted.certificate, swap_slots(*lifted.result, n - 2, n - 1));
  }

  const RewriteResult r1 = modify_last(s, v1p, v01);
  if (r1.trivial || v0.is_zero()) return r1;
  const SymbolPresentation& cur = *r1.result;
  const RewriteResult lifted = lift(modify_rec(prefix_symbol(cur, n - 1), v0), {cur.slot(n - 1)});
  const RewriteResult chain = then(r1.certificate, lifted);
  if (chain.trivial) return chain;
  return then(chain.certificate, rule_e(*chain.result, n - 1, n - 2));
}

void check_vector(const SymbolPresentation& s, const TupleVector& v) {
  if (v.n() != s.n()) throw Error(ErrorKind::DimensionMismatch, "vector length does not match slot count");
  if (v.is_zero()) throw Error(ErrorKind::ZeroVector, "slot modification needs a nonzero vector");
}

}  // namespace

RewriteResult slot_modify(const SymbolPresentation& s, const TupleVector& v) {
  check_vector(s, v);
  return modify_rec(s, v);
}

RewriteResult slot_modify_last(const SymbolPresentation& s, const TupleVector& v) {
  check_vector(s, v);
  const std::size_t n = s.n();
  std::optional<TupleVector> v1p;
  if (n > 1) v1p.emplace(s.ctx(), n - 1);
  for (std::size_t idx = 1; idx <= v.size(); ++idx) {
    if (v.at(idx).is_zero()) continue;
    if ((idx & 1U) == 0) throw Error(ErrorKind::BadRange, "vector has support on tuples with d_n = 0");
    if (idx > 1) v1p->set(idx >> 1, v.at(idx));
  }
  return modify_last(s, v1p, v.at(1));
}

RewriteResult slot_modify_tail(const SymbolPresentation& s, std::size_t l, const TupleVector& v) {
  check_vector(s, v);
  const std::size_t n = s.n();
  if (l < 1 || l > n) throw Error(ErrorKind::BadRange, "tail start out of range");
  const std::size_t head_mask = ~((std::size_t{1} << (n - l + 1)) - 1);
  for (std::size_t idx = 1; idx <= v.size(); ++idx)
    if (!v.at(idx).is_zero() && (idx & ~head_mask) == 0)
      throw Error(ErrorKind::BadRange, "vector has support outside the tail tuples");

  RewriteResult cur{false, s, identity_certificate(s)};
  std::vector<std::size_t> touched;
  for (std::size_t k = n; k >= l; --k) {
    // Tuples whose last 1 sits at position k.
    const std::size_t shift = n - k;
    TupleVector vk(s.ctx(), k);
    for (std::size_t idx = 1; idx <= v.size(); ++idx) {
      if (v.at(idx).is_zero()) continue;
      if (((idx >> shift) & 1U) && (idx & ((std::size_t{1} << shift) - 1)) == 0) vk.set(idx >> shift, v.at(idx));
    }
    if (vk.is_zero()) continue;
    const SymbolPresentation& sym = *cur.result;
    const RewriteResult r = lift(slot_modify_last(prefix_symbol(sym, k), vk), slots_from(sym, k));
    cur = then(cur.certificate, r);
    if (cur.trivial) return cur;
    touched.push_back(k - 1);
    if (k == 1) break;
  }
  const std::size_t top = touched.front();
  for (std::size_t t = 1; t < touched.size(); ++t) {
    cur = then(cur.certificate, rule_e(*cur.result, top, touched[t]));
    if (cur.trivial) return cur;
  }
  if (top != n - 1) cur = then(cur.certificate, swap_slots(*cur.result, top, n - 1));
  return cur;
}

}  // namespace charp

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

// Isotropy search. Bounded-degree candidates are first screened by evaluating
// the form at a few fixed points of a large extension GF(p^r) of the constant
// field; only candidates vanishing at every point are checked exactly.

#include <algorithm>
#include <atomic>
#include <map>
#include <mutex>
#include <random>
#include <thread>

#include "charp/error.hpp"
#include "charp/pforms.hpp"
#include "zech.hpp"

namespace charp {

namespace {

using detail::ZechField;
using detail::embed_constants;
using detail::extension_degree;
using detail::zech_field;


std::vector<FiniteField::Elem> constant_coefficients_or_throw(const FormPoly& poly) {
  std::vector<FiniteField::Elem> out;
  for (const auto& [e, c] : poly.terms()) {
    if (!c.is_constant()) throw Error(ErrorKind::NonConstantCoefficients, "exhaustive search needs constant coefficients");
    out.push_back(c.num().constant_value());
  }
  return out;
}

IsotropyResult exhaustive_search(const PolyFormSpec& form, const SearchBudget& budget) {
  const CtxPtr& ctx = form.ctx();
  const FiniteField& F = ctx->fq();
  const std::size_t m = form.dimension();
  const FormPoly poly = to_explicit(form).poly();
  const auto coefs = constant_coefficients_or_throw(poly);
  double space = 1;
  for (std::size_t k = 0; k < m; ++k) space *= F.q();
  if (space > static_cast<double>(budget.cap)) throw Error(ErrorKind::TooLarge, "constant search space exceeds the cap");

  std::vector<const FormPoly::Exponents*> exps;
  for (const auto& [e, c] : poly.terms()) exps.push_back(&e);

  IsotropyResult res;
  std::vector<FiniteField::Elem> pt(m, 0);
  for (std::size_t lead = 0; lead < m; ++lead) {
    std::fill(pt.begin(), pt.end(), 0);
    pt[lead] = 1;
    while (true) {
      ++res.examined;
      FiniteField::Elem acc = 0;
      for (std::size_t t = 0; t < coefs.size(); ++t) {
        FiniteField::Elem v = coefs[t];
        for (std::size_t k = 0; k < m && v != 0; ++k)
          if ((*exps[t])[k] != 0) v = F.mul(v, F.pow(pt[k], (*exps[t])[k]));
        acc = F.add(acc, v);
      }
      if (acc == 0) {
        std::vector<FieldElement> v;
        for (auto x : pt) v.push_back(FieldElement::constant(ctx, x));
        if (evaluate(form, v).is_zero()) {
          res.found = true;
          res.vector = std::move(v);
          return res;
        }
      }
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

/// All exponent vectors in `nvars` variables of total degree <= maxdeg, grlex descending.
std::vector<Monomial> monomials_up_to(std::size_t nvars, unsigned maxdeg) {
  std::vector<Monomial> out;
  Monomial cur;
  std::function<void(std::size_t, unsigned)> rec = [&](std::size_t k, unsigned left) {
    if (k == nvars) {
      Monomial m = cur;
      m.deg = 0;
      for (auto x : m.exp) m.deg += x;
      out.push_back(m);
      return;
    }
    for (unsigned t = 0; t <= left; ++t) {
      cur.exp[k] = static_cast<std::uint16_t>(t);
      rec(k + 1, left - t);
    }
    cur.exp[k] = 0;
  };
  rec(0, maxdeg);
  std::sort(out.begin(), out.end(), [](const Monomial& a, const Monomial& b) { return b < a; });
  return out;
}

struct Candidate {
  std::uint64_t index;
  std::vector<std::size_t> positions;
  std::vector<FiniteField::Elem> values;
};

class BoundedSearch {
 public:
  BoundedSearch(const PolyFormSpec& form, const SearchBudget& budget)
      : form_(form), budget_(budget), ctx_(form.ctx()), F_(ctx_->fq()),
        Z_(zech_field(F_.p(), extension_degree(F_.p(), F_.e()))), dim_(form.dimension()) {
    monos_ = monomials_up_to(ctx_->nvars(), budget.max_degree);
    positions_ = dim_ * monos_.size();
    emb_ = embed_constants(F_, Z_);
    prepare_terms();
    prepare_points();
  }

  IsotropyResult run() {
    const unsigned jobs = std::max(1U, budget_.jobs);
    best_.store(budget_.cap);
    std::vector<std::optional<Candidate>> found(jobs);
    if (jobs == 1) {
      found[0] = worker(0, 1);
    } else {
      std::vector<std::thread> threads;
      for (unsigned t = 0; t < jobs; ++t) threads.emplace_back([&, t] { found[t] = worker(t, jobs); });
      for (auto& th : threads) th.join();
    }
    std::optional<Candidate> best;
    for (auto& c : found)
      if (c && (!best || c->index < best->index)) best = std::move(c);

    IsotropyResult res;
    if (best) {
      res.found = true;
      res.vector = to_vector(*best);
      res.examined = best->index + 1;
      return res;
    }
    const std::uint64_t total = total_candidates();
    res.examined = std::min(total, budget_.cap);
    res.cap_reached = total > budget_.cap;
    return res;
  }

 private:
  struct TermData {
    std::vector<std::pair<std::size_t, unsigned>> factors;  // (coordinate, exponent)
    Poly coef;                                              // denominators cleared
  };

  void prepare_terms() {
    const FormPoly poly = to_explicit(form_).poly();
    const PolyOps& ops = ctx_->ops();
    Poly lcm = Poly::constant(1);
    for (const auto& [e, c] : poly.terms()) {
      const Poly g = ops.gcd(lcm, c.den());
      lcm = ops.mul(lcm, *ops.divide_exact(c.den(), g));
    }
    const FieldElement scale = FieldElement::from_poly(ctx_, lcm);
    for (const auto& [e, c] : poly.terms()) {
      TermData t;
      for (std::size_t k = 0; k < e.size(); ++k)
        if (e[k] != 0) t.factors.emplace_back(k, e[k]);
      t.coef = (c * scale).num();
      terms_.push_back(std::move(t));
    }
  }

  ZechField::Log eval_poly(const Poly& f, const std::vector<ZechField::Log>& point) const {
    ZechField::Log acc = Z_.zero();
    for (const auto& term : f.terms()) {
      ZechField::Log v = emb_[term.coef];
      for (std::size_t k = 0; k < point.size(); ++k)
        if (term.mono.exp[k] != 0) v = Z_.mul(v, Z_.pow(point[k], term.mono.exp[k]));
      acc = Z_.add(acc, v);
    }
    return acc;
  }

  void prepare_points() {
    std::mt19937_64 rng(0x63686172u);
    std::uniform_int_distribution<ZechField::Log> pick(0, Z_.order() - 1);
    for (int t = 0; t < kPoints; ++t) {
      std::vector<ZechField::Log> pt(ctx_->nvars());
      for (auto& x : pt) x = pick(rng);
      std::vector<ZechField::Log> mu(positions_);
      for (std::size_t j = 0; j < dim_; ++j)
        for (std::size_t k = 0; k < monos_.size(); ++k)
          mu[j * monos_.size() + k] = eval_poly(Poly::monomial(monos_[k], 1), pt);
      std::vector<ZechField::Log> cf;
      for (const auto& term : terms_) cf.push_back(eval_poly(term.coef, pt));
      mono_logs_.push_back(std::move(mu));
      coef_logs_.push_back(std::move(cf));
    }
  }

  bool passes_filter(const std::vector<std::size_t>& pos, const std::vector<FiniteField::Elem>& val,
                     std::vector<ZechField::Log>& coord) const {
    const std::size_t M = monos_.size();
    for (int t = 0; t < kPoints; ++t) {
      std::fill(coord.begin(), coord.end(), Z_.zero());
      for (std::size_t k = 0; k < pos.size(); ++k) {
        const std::size_t j = pos[k] / M;
        coord[j] = Z_.add(coord[j], Z_.mul(emb_[val[k]], mono_logs_[t][pos[k]]));
      }
      ZechField::Log total = Z_.zero();
      for (std::size_t s = 0; s < terms_.size(); ++s) {
        ZechField::Log v = coef_logs_[t][s];
        for (const auto& [j, e] : terms_[s].factors) {
          v = Z_.mul(v, Z_.pow(coord[j], e));
          if (v == Z_.zero()) break;
        }
        total = Z_.add(total, v);
      }
      if (total != Z_.zero()) return false;
    }
    return true;
  }

  std::vector<FieldElement> to_vector(const Candidate& c) const {
    const std::size_t M = monos_.size();
    std::vector<std::vector<Term>> coords(dim_);
    for (std::size_t k = 0; k < c.positions.size(); ++k)
      coords[c.positions[k] / M].push_back(Term{monos_[c.positions[k] % M], c.values[k]});
    std::vector<FieldElement> v;
    for (auto& terms : coords) v.push_back(FieldElement::from_poly(ctx_, Poly::from_terms(F_, std::move(terms))));
    return v;
  }

  /// Number of value assignments for a support of size w, saturating at the cap.
  std::uint64_t assignments(std::size_t w) const {
    std::uint64_t a = 1;
    for (std::size_t k = 1; k < w; ++k) {
      a *= F_.q() - 1;
      if (a > budget_.cap) return budget_.cap + 1;
    }
    return a;
  }

  static std::uint64_t binom_sat(std::size_t n, std::size_t k, std::uint64_t limit) {
    if (k > n) return 0;
    unsigned __int128 r = 1;
    for (std::size_t i = 1; i <= k; ++i) {
      r = r * (n - k + i) / i;
      if (r > limit) return limit + 1;
    }
    return static_cast<std::uint64_t>(r);
  }

  std::uint64_t total_candidates() const {
    std::uint64_t total = 0;
    for (std::size_t w = 1; w <= positions_; ++w) {
      const unsigned __int128 level =
          static_cast<unsigned __int128>(binom_sat(positions_, w, budget_.cap)) * assignments(w);
      if (level > budget_.cap || total + level > budget_.cap) return budget_.cap + 1;
      total += static_cast<std::uint64_t>(level);
    }
    return total;
  }

  std::optional<Candidate> worker(unsigned tid, unsigned jobs) {
    std::vector<ZechField::Log> coord(dim_);
    std::uint64_t base = 0;
    const std::uint64_t q1 = F_.q() - 1;
    for (std::size_t w = 1; w <= positions_; ++w) {
      if (base >= best_.load()) return std::nullopt;
      const std::uint64_t per = assignments(w);
      std::vector<std::size_t> pos(w);
      for (std::size_t k = 0; k < w; ++k) pos[k] = k;
      std::vector<FiniteField::Elem> val(w, 1);
      std::uint64_t seq = 0;
      while (true) {
        if (seq % jobs == tid) {
          const unsigned __int128 start = static_cast<unsigned __int128>(base) + static_cast<unsigned __int128>(seq) * per;
          if (start >= best_.load()) return std::nullopt;
          std::fill(val.begin(), val.end(), 1);
          for (std::uint64_t a = 0; a < per; ++a) {
            const std::uint64_t idx = static_cast<std::uint64_t>(start) + a;
            if (idx >= best_.load()) return std::nullopt;
            if (passes_filter(pos, val, coord)) {
              Candidate c{idx, pos, val};
              if (evaluate(form_, to_vector(c)).is_zero()) {
                std::uint64_t cur = best_.load();
                while (idx < cur && !best_.compare_exchange_weak(cur, idx)) {
                }
                return c;
              }
            }
            // Next assignment: odometer on values of positions 1..w-1.
            for (std::size_t k = w; k-- > 1;) {
              if (val[k] < q1) {
                ++val[k];
                break;
              }
              val[k] = 1;
            }
          }
        }
        ++seq;
        // Next combination in lexicographic order.
        std::size_t k = w;
        while (k > 0 && pos[k - 1] == positions_ - w + (k - 1)) --k;
        if (k == 0) break;
        ++pos[k - 1];
        for (std::size_t t = k; t < w; ++t) pos[t] = pos[t - 1] + 1;
      }
      const unsigned __int128 next = static_cast<unsigned __int128>(base) + static_cast<unsigned __int128>(seq) * per;
      if (next >= budget_.cap) return std::nullopt;
      base = static_cast<std::uint64_t>(next);
    }
    return std::nullopt;
  }

  static constexpr int kPoints = 4;

  const PolyFormSpec& form_;
  SearchBudget budget_;
  CtxPtr ctx_;
  const FiniteField& F_;
  const ZechField& Z_;
  std::size_t dim_;
  std::vector<Monomial> monos_;
  std::size_t positions_ = 0;
  std::vector<ZechField::Log> emb_;
  std::vector<TermData> terms_;
  std::vector<std::vector<ZechField::Log>> mono_logs_;
  std::vector<std::vector<ZechField::Log>> coef_logs_;
  std::atomic<std::uint64_t> best_{0};
};

}  // namespace

IsotropyResult isotropy_search(const PolyFormSpec& form, const SearchBudget& budget) {
  if (budget.mode == SearchBudget::Mode::ExhaustiveConstants) return exhaustive_search(form, budget);
  BoundedSearch search(form, budget);
  return search.run();
}

}  // namespace charp

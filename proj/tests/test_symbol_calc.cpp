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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "charp/error.hpp"
#include "charp/pforms.hpp"
#include "charp/procedures.hpp"
#include "charp/rewrite.hpp"
#include "support.hpp"

using namespace charp;
using charp::testing::parse;
using charp::testing::Rng;

namespace {

SymbolPresentation sym(const CtxPtr& ctx, const std::string& a, const std::vector<std::string>& slots) {
  std::vector<FieldElement> s;
  for (const auto& t : slots) s.push_back(parse(ctx, t));
  return SymbolPresentation(parse(ctx, a), s);
}

bool verified(const RewriteResult& r) { return verify(r.certificate).status == VerdictStatus::Verified; }

bool exact(const RewriteResult& r) {
  const auto& c = r.certificate;
  return c.generators.empty() && c.axiom_steps.empty() && c.theta.is_zero() && c.exact_generators.empty() &&
         eval_presentation(c.lhs) == eval_presentation(c.rhs);
}

ASElement as(const CtxPtr& ctx, const std::vector<std::string>& coeffs) {
  std::vector<FieldElement> c;
  for (const auto& t : coeffs) c.push_back(parse(ctx, t));
  return ASElement(ctx, c);
}

}  // namespace

TEST_CASE("rule a") {
  auto f2 = FieldCtx::create(2, 1, {"x", "y", "z"});
  const RewriteResult r = rule_a(sym(f2, "x", {"y"}), 0);
  CHECK(*r.result == sym(f2, "x+y", {"y"}));
  REQUIRE(r.certificate.exact_generators.size() == 1);
  CHECK(r.certificate.exact_generators[0].c == parse(f2, "y"));
  CHECK(r.certificate.exact_generators[0].slots.empty());
  CHECK(verified(r));

  const RewriteResult r2 = rule_a(sym(f2, "x", {"y", "z"}), 0);
  CHECK(*r2.result == sym(f2, "x+y", {"y", "z"}));
  REQUIRE(r2.certificate.exact_generators.size() == 1);
  CHECK(exact_image(r2.certificate.exact_generators[0]) == d(dlog(parse(f2, "z")).scaled(parse(f2, "y"))));
  CHECK(verified(r2));
  CHECK(rule_a(*r2.result, 0).result->alpha() == parse(f2, "x"));

  auto f5 = FieldCtx::create(5, 1, {"x", "y", "z"});
  for (std::size_t i = 0; i < 3; ++i) CHECK(verified(rule_a(sym(f5, "x*z", {"y", "z", "x+y"}), i)));
  CHECK_THROWS_AS(rule_a(sym(f5, "x", {"y"}), 1), Error);
}

TEST_CASE("rule b") {
  auto f2 = FieldCtx::create(2, 1, {"x", "y"});
  const RewriteResult r = rule_b(sym(f2, "x", {"y"}), 0, as(f2, {"1", "1"}));
  REQUIRE_FALSE(r.trivial);
  CHECK(*r.result == sym(f2, "x", {"x*y"}));
  CHECK(r.certificate.generators.size() == 1);
  CHECK(verified(r));

  const RewriteResult c = rule_b(sym(f2, "x", {"y"}), 0, as(f2, {"x+y"}));
  CHECK(*c.result == sym(f2, "x", {"y*(x+y)^2"}));
  CHECK(exact(c));

  const RewriteResult t = rule_b(sym(f2, "x^2+x", {"y"}), 0, as(f2, {"x", "1"}));
  REQUIRE(t.trivial);
  REQUIRE(t.certificate.generators.size() == 1);
  CHECK(t.certificate.generators[0].u == parse(f2, "x"));
  CHECK(verified(t));

  CHECK_THROWS_AS(rule_b(sym(f2, "x", {"y"}), 0, ASElement::zero(f2)), Error);

  // Non-binomial zero divisor over F_3: (L - x)(L - x - 1) has zero norm when alpha = wp(x).
  auto f3 = FieldCtx::create(3, 1, {"x", "y"});
  const FieldElement x = parse(f3, "x");
  const ASElement zd(f3, {x * (x + x.one()), -(x + x + x.one()), x.one()});
  const RewriteResult t3 = rule_b(SymbolPresentation(wp(x), {parse(f3, "y")}), 0, zd);
  REQUIRE(t3.trivial);
  CHECK(t3.certificate.generators[0].u.wp() == wp(x));
  CHECK(verified(t3));
}

TEST_CASE("rule b slot agrees with the conjugate-product norm") {
  Rng rng(3);
  for (unsigned p : {2U, 3U, 5U}) {
    auto ctx = FieldCtx::create(p, 1, {"x", "y"});
    for (int t = 0; t < 30; ++t) {
      const SymbolPresentation s(testing::random_element(ctx, rng), {testing::random_nonconstant(ctx, rng)});
      const ASElement f = testing::random_binomial(ctx, rng);
      const RewriteResult r = rule_b(s, 0, f);
      if (r.trivial) continue;
      CHECK(r.result->slot(0) == s.slot(0) * testing::norm_by_conjugates(s.alpha(), f));
      CHECK(verified(r));
    }
  }
}

TEST_CASE("rule c") {
  auto f2 = FieldCtx::create(2, 1, {"x", "y"});
  const RewriteResult r = rule_c(sym(f2, "x", {"y"}), 0, parse(f2, "x"));
  CHECK(*r.result == sym(f2, "x*(y+x^2)/y", {"y+x^2"}));
  CHECK(exact(r));
  CHECK(*rule_c(sym(f2, "x", {"y"}), 0, FieldElement(f2)).result == sym(f2, "x", {"y"}));
  auto f3 = FieldCtx::create(3, 1, {"x", "y"});
  const RewriteResult t = rule_c(sym(f3, "x", {"y^3"}), 0, parse(f3, "2*y"));
  CHECK(t.trivial);
  CHECK(exact(t));
}

TEST_CASE("rule d") {
  auto f2 = FieldCtx::create(2, 1, {"x", "y", "z"});
  const RewriteResult r = rule_d(sym(f2, "x", {"y", "z"}), 0, 1);
  CHECK(*r.result == sym(f2, "x", {"y", "y*z"}));
  CHECK(exact(r));
  const RewriteResult r2 = rule_d(sym(f2, "x", {"y", "y"}), 0, 1);
  CHECK(*r2.result == sym(f2, "x", {"y", "y^2"}));
  CHECK(eval_presentation(r2.certificate.rhs).is_zero());
  CHECK(rule_d(*r.result, 0, 1).result->slot(1) == parse(f2, "y^2*z"));
  CHECK_THROWS_AS(rule_d(sym(f2, "x", {"y", "z"}), 1, 1), Error);
}

TEST_CASE("rule e") {
  auto f2 = FieldCtx::create(2, 1, {"x", "y", "z"});
  const RewriteResult r = rule_e(sym(f2, "x", {"y", "z"}), 0, 1);
  CHECK(*r.result == sym(f2, "x", {"y+z", "z/y"}));
  CHECK(exact(r));
  const RewriteResult t = rule_e(sym(f2, "x", {"y", "y"}), 0, 1);
  CHECK(t.trivial);
  CHECK(exact(t));
  auto f3 = FieldCtx::create(3, 1, {"x", "y"});
  const RewriteResult r3 = rule_e(sym(f3, "x", {"y", "y"}), 0, 1);
  CHECK(*r3.result == sym(f3, "x", {"2*y", "1"}));
  CHECK(exact(r3));
  CHECK(rule_e(sym(f3, "x", {"y", "2*y"}), 0, 1).trivial);
}

TEST_CASE("rule f") {
  auto f2 = FieldCtx::create(2, 1, {"x", "y", "z"});
  const RewriteResult r1 = rule_f(sym(f2, "x", {"y", "z"}), 0, 1, as(f2, {"1"}));
  CHECK(*r1.result == sym(f2, "x", {"y", "(y+1)*z"}));
  CHECK(verified(r1));
  CHECK(rule_f(sym(f2, "x", {"1", "z"}), 0, 1, as(f2, {"1"})).trivial);

  const RewriteResult r = rule_f(sym(f2, "x", {"y", "z"}), 0, 1, as(f2, {"1", "1"}));
  CHECK(*r.result == sym(f2, "x", {"y", "(y+x)*z"}));
  CHECK(verified(r));

  // b_i = -N(f) with N(1 + L) = x.
  const RewriteResult t = rule_f(sym(f2, "x", {"x", "z"}), 0, 1, as(f2, {"1", "1"}));
  CHECK(t.trivial);
  CHECK(verified(t));

  auto f3 = FieldCtx::create(3, 1, {"x", "y", "z"});
  Rng rng(9);
  for (int k = 0; k < 20; ++k) {
    const SymbolPresentation s(testing::random_element(f3, rng), {testing::random_nonconstant(f3, rng),
                                                                  testing::random_nonconstant(f3, rng)});
    CHECK(verified(rule_f(s, 0, 1, testing::random_binomial(f3, rng))));
    CHECK(verified(rule_f(s, 1, 0, testing::random_binomial(f3, rng))));
  }
  CHECK_THROWS_AS(rule_f(sym(f2, "x", {"y", "z"}), 0, 1, ASElement::zero(f2)), Error);
  CHECK_THROWS_AS(rule_f(sym(f2, "x", {"y", "z"}), 0, 0, as(f2, {"1"})), Error);
}

TEST_CASE("swap is exact for every p") {
  for (unsigned p : {2U, 3U, 5U}) {
    auto ctx = FieldCtx::create(p, 1, {"x", "y", "z"});
    const RewriteResult r = swap_slots(sym(ctx, "x", {"y", "z", "x+z"}), 0, 2);
    CHECK(exact(r));
  }
}

TEST_CASE("tuple vectors") {
  CHECK(TupleVector::index_of({1, 0}) == 2);
  CHECK(TupleVector::index_of({0, 1}) == 1);
  CHECK(TupleVector::tuple_of(6, 3) == std::vector<int>{1, 1, 0});
  auto f2 = FieldCtx::create(2, 1, {"x", "y", "z"});
  const std::vector<FieldElement> slots{parse(f2, "y"), parse(f2, "z")};
  CHECK(tuple_product(slots, 3) == parse(f2, "y*z"));
}

TEST_CASE("slot modification examples") {
  auto f2 = FieldCtx::create(2, 1, {"x", "y", "z"});
  const SymbolPresentation one = sym(f2, "x", {"y"});
  TupleVector v1(f2, 1);
  v1.set(1, as(f2, {"1", "1"}));
  const RewriteResult base = slot_modify(one, v1);
  CHECK(*base.result == *rule_b(one, 0, as(f2, {"1", "1"})).result);

  const SymbolPresentation s = sym(f2, "x", {"y", "z"});
  TupleVector v(f2, 2);
  v.set(TupleVector::index_of({0, 1}), as(f2, {"1"}));
  const RewriteResult r = slot_modify(s, v);
  REQUIRE_FALSE(r.trivial);
  CHECK(r.result->slot(1) == parse(f2, "z"));
  CHECK(verified(r));

  v.set(TupleVector::index_of({1, 0}), as(f2, {"1"}));
  const RewriteResult r2 = slot_modify(s, v);
  REQUIRE_FALSE(r2.trivial);
  CHECK(r2.result->slot(1) == parse(f2, "y+z"));
  CHECK(r2.result->alpha() == s.alpha());
  CHECK(verified(r2));

  CHECK_THROWS_AS(slot_modify(s, TupleVector(f2, 2)), Error);
  CHECK_THROWS_AS(slot_modify(s, v1), Error);
}

TEST_CASE("slot modification matches the form phi") {
  Rng rng(17);
  auto f2 = FieldCtx::create(2, 1, {"x", "y", "z"});
  for (int t = 0; t < 30; ++t) {
    const std::size_t n = 1 + static_cast<std::size_t>(t % 3);
    std::vector<FieldElement> slots;
    for (std::size_t k = 0; k < n; ++k) slots.push_back(testing::random_nonconstant(f2, rng, 2, 1));
    const SymbolPresentation s(testing::random_element(f2, rng, 2, 1), slots);
    TupleVector v(f2, n);
    std::vector<FieldElement> coords;
    for (std::size_t idx = 1; idx <= v.size(); ++idx) {
      const ASElement f = (t + idx) % 3 == 0 ? ASElement::zero(f2) : testing::random_binomial(f2, rng);
      v.set(idx, f);
      coords.push_back(f.coeff(0));
      coords.push_back(f.coeff(1));
    }
    if (v.is_zero()) continue;
    const RewriteResult r = slot_modify(s, v);
    CHECK(verified(r));
    const FieldElement phi = evaluate(build_phi(s), coords);
    CHECK(phi == phi_value(s.alpha(), slots, v));
    if (r.trivial) continue;
    CHECK(r.result->slot(n - 1) == phi);
    CHECK(r.result->alpha() == s.alpha());
  }
}

TEST_CASE("slot modification over F_3 with general elements") {
  auto f3 = FieldCtx::create(3, 1, {"x", "y"});
  const SymbolPresentation s = sym(f3, "x", {"y", "x+y"});
  TupleVector v(f3, 2);
  v.set(1, as(f3, {"1", "0", "1"}));
  v.set(2, as(f3, {"y", "1"}));
  const RewriteResult r = slot_modify(s, v);
  REQUIRE_FALSE(r.trivial);
  CHECK(r.result->slot(1) == phi_value(s.alpha(), s.slots(), v));
  CHECK(verify(r.certificate).status == VerdictStatus::VerifiedModuloAxioms);
}

TEST_CASE("tail slot modification") {
  auto f2 = FieldCtx::create(2, 1, {"x", "y", "z"});
  const SymbolPresentation s = sym(f2, "x", {"y", "z"});
  TupleVector v(f2, 2);
  v.set(TupleVector::index_of({1, 0}), as(f2, {"1"}));
  v.set(TupleVector::index_of({1, 1}), as(f2, {"1"}));
  const RewriteResult r = slot_modify_tail(s, 1, v);
  REQUIRE_FALSE(r.trivial);
  CHECK(r.result->slot(1) == parse(f2, "y + y*z"));
  CHECK(verified(r));

  // l = n keeps the first n - 1 slots.
  const SymbolPresentation s3 = sym(f2, "x", {"y", "z", "x+z"});
  TupleVector w(f2, 3);
  w.set(TupleVector::index_of({1, 0, 1}), as(f2, {"1", "1"}));
  w.set(TupleVector::index_of({0, 0, 1}), as(f2, {"y"}));
  const RewriteResult r3 = slot_modify_tail(s3, 3, w);
  REQUIRE_FALSE(r3.trivial);
  CHECK(r3.result->slot(0) == s3.slot(0));
  CHECK(r3.result->slot(1) == s3.slot(1));
  CHECK(r3.result->slot(2) == phi_value(s3.alpha(), s3.slots(), w));
  CHECK(verified(r3));

  // l = 2 keeps slot 1.
  TupleVector u(f2, 3);
  u.set(TupleVector::index_of({1, 1, 0}), as(f2, {"1"}));
  u.set(TupleVector::index_of({0, 1, 1}), as(f2, {"x", "1"}));
  const RewriteResult r2 = slot_modify_tail(s3, 2, u);
  REQUIRE_FALSE(r2.trivial);
  CHECK(r2.result->slot(0) == s3.slot(0));
  CHECK(r2.result->slot(2) == phi_value(s3.alpha(), s3.slots(), u));
  CHECK(verified(r2));

  TupleVector outside(f2, 3);
  outside.set(TupleVector::index_of({1, 0, 0}), as(f2, {"1"}));
  CHECK_THROWS_AS(slot_modify_tail(s3, 2, outside), Error);
  CHECK_THROWS_AS(slot_modify_tail(s3, 4, u), Error);
}

TEST_CASE("separable linkage examples") {
  auto f2 = FieldCtx::create(2, 1, {"x", "y"});
  const std::vector<SymbolPresentation> pair{sym(f2, "x", {"x"}), sym(f2, "y", {"x"})};
  const LinkageOutcome out = separable_link(pair, 1);
  REQUIRE(out.symbols.size() == 2);
  const FieldElement& x1 = out.system.x[0];
  const FieldElement& g1 = out.system.gammas[0];
  CHECK(g1 * (pair[0].alpha() - x1) == pair[1].alpha() - pair[0].alpha());
  for (const auto& ls : out.symbols) {
    CHECK(ls.presentation.alpha() == out.alpha_star);
    CHECK(ls.verdict.status == VerdictStatus::Verified);
  }

  auto f2z = FieldCtx::create(2, 1, {"x", "y", "z"});
  const std::vector<SymbolPresentation> four{sym(f2z, "x", {"y", "z"}), sym(f2z, "x+1", {"y", "z"}),
                                             sym(f2z, "y*z", {"y", "z"}), sym(f2z, "1/x", {"y", "z"})};
  const LinkageOutcome o4 = separable_link(four, 1);
  CHECK(o4.system.gammas.size() == 3);
  for (const auto& ls : o4.symbols) {
    CHECK(ls.presentation.alpha() == o4.alpha_star);
    CHECK(ls.verdict.status == VerdictStatus::Verified);
  }

  const std::vector<SymbolPresentation> same{sym(f2z, "x", {"y", "z"}), sym(f2z, "x", {"y", "z"}),
                                             sym(f2z, "x", {"y", "z"}), sym(f2z, "x", {"y", "z"})};
  const LinkageOutcome os = separable_link(same, 1);
  for (const auto& xi : os.system.x) CHECK(xi == parse(f2z, "x"));
  for (std::size_t i = 1; i < os.system.deltas.size(); ++i) CHECK(os.system.deltas[i] == os.system.deltas[0]);

  CHECK_THROWS_AS(separable_link({four[0], four[1]}, 1), Error);
  CHECK_THROWS_AS(separable_link({four[0], sym(f2z, "x", {"y", "x"}), four[2], four[3]}, 1), Error);
  CHECK_THROWS_AS(separable_link(four, 3), Error);
}

TEST_CASE("trivialization examples") {
  auto f2 = FieldCtx::create(2, 1, {"x", "y"});
  SearchBudget b;
  b.max_degree = 1;
  const TrivializationOutcome t1 = trivialize(sym(f2, "x^2+x", {"y"}), b);
  REQUIRE(t1.trivial);
  CHECK(t1.branch == "alpha-in-wp");
  CHECK(verify(*t1.certificate).status == VerdictStatus::Verified);

  auto fx = FieldCtx::create(2, 1, {"x"});
  // x = N(1 + L) when alpha = x.
  const TrivializationOutcome t2 = trivialize(sym(fx, "x", {"x"}), b);
  REQUIRE(t2.trivial);
  CHECK(verify(*t2.certificate).status == VerdictStatus::Verified);

  // [x, x^2 + x) = [x, x + 1) has residue 1 at x = 1, so no certificate can exist.
  const TrivializationOutcome t3 = trivialize(sym(fx, "x", {"x^2+x"}), b);
  CHECK_FALSE(t3.trivial);
  CHECK_FALSE(t3.search.found);
  CHECK_FALSE(t3.search.cap_reached);
}

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
#include "charp/json_io.hpp"
#include "support.hpp"

using namespace charp;
using charp::testing::parse;
using io::Json;

TEST_CASE("field headers") {
  const CtxPtr f9 = io::field_from_json(Json::parse(R"({"p": 3, "e": 2, "vars": ["x"]})"));
  CHECK(f9->fq().q() == 9);
  CHECK(io::field_from_json(io::field_to_json(*f9))->same_as(*f9));
  CHECK_THROWS_AS(io::field_from_json(Json::parse(R"({"p": 4, "vars": []})")), Error);
  CHECK_THROWS_AS(io::field_from_json(Json::parse(R"({"vars": ["x"]})")), Error);
}

TEST_CASE("elements and coefficient lists") {
  auto f3 = FieldCtx::create(3, 1, {"x", "y"});
  CHECK(io::element_from_json(f3, Json(5)) == parse(f3, "2"));
  CHECK(io::element_from_json(f3, Json("x/(y+1)")) == parse(f3, "x/(y+1)"));
  const ASElement f = io::parse_coefficients(f3, "x, (x+y)^2, 1/(x+1)");
  REQUIRE(f.coeffs().size() == 3);
  CHECK(f.coeff(1) == parse(f3, "(x+y)^2"));
  CHECK(io::as_from_json(f3, io::as_to_json(f)) == f);
  CHECK(io::as_from_json(f3, Json("1,x")) == ASElement::binomial(parse(f3, "1"), parse(f3, "x")));
  CHECK_THROWS_AS(io::parse_coefficients(f3, "1,2,3,4"), Error);
}

TEST_CASE("forms, symbols and tuple vectors round-trip") {
  auto f2 = FieldCtx::create(2, 1, {"x", "y", "z"});
  DiffForm w = dlog(parse(f2, "x+y"));
  w = wedge(w, dlog(parse(f2, "z")));
  const Json jw = io::diffform_to_json(w);
  CHECK(io::diffform_from_json(f2, jw) == w);
  CHECK_THROWS_AS(io::diffform_from_json(f2, Json::parse(R"({"degree": 2, "components": {"[1,0]": "x"}})")), Error);

  const SymbolPresentation s(parse(f2, "x"), {parse(f2, "y"), parse(f2, "z+1")});
  CHECK(io::symbol_from_json(f2, io::symbol_to_json(s)) == s);
  CHECK(std::holds_alternative<DiffForm>(io::presentation_from_json(f2, jw)));

  TupleVector v(f2, 2);
  v.set(TupleVector::index_of({1, 0}), ASElement::binomial(parse(f2, "x"), parse(f2, "1")));
  v.set(TupleVector::index_of({1, 1}), ASElement::constant(parse(f2, "y")));
  const Json jv = io::tuple_vector_to_json(v);
  CHECK(jv["entries"].contains("[1,0]"));
  const TupleVector back = io::tuple_vector_from_json(f2, jv);
  for (std::size_t idx = 1; idx <= v.size(); ++idx) CHECK(back.at(idx) == v.at(idx));
}

TEST_CASE("polynomial forms round-trip") {
  auto f4 = FieldCtx::create(2, 2, {});
  const PolyFormSpec f = PolyFormSpec::direct_sum(
      {PolyFormSpec::norm_form(parse(f4, "g")), PolyFormSpec::scale(parse(f4, "g+1"), PolyFormSpec::two_dim(parse(f4, "1"), TwoDimVariant::A1Weighted))});
  const Json j = io::polyform_to_json(f);
  const PolyFormSpec back = io::polyform_from_json(f4, j);
  CHECK(io::polyform_to_json(back) == j);
  CHECK(to_explicit(back).poly() == to_explicit(f).poly());

  const PolyFormSpec e = io::polyform_from_json(f4, Json::parse(R"({"dim": 2, "coeffs": {"[2,0]": "1", "[1,1]": "g"}})"));
  CHECK(e.kind() == FormKind::Explicit);
  CHECK(evaluate(e, {parse(f4, "1"), parse(f4, "1")}) == parse(f4, "1+g"));
  CHECK_THROWS_AS(io::polyform_from_json(f4, Json::parse(R"({"dim": 2, "coeffs": {"[1,0]": "1"}})")), Error);
  CHECK_THROWS_AS(io::polyform_from_json(f4, Json::parse(R"({"kind": "cubic"})")), Error);
}

TEST_CASE("certificates round-trip and keep their verdicts") {
  auto f3 = FieldCtx::create(3, 1, {"x", "y"});
  const SymbolPresentation s(parse(f3, "x"), {parse(f3, "y"), parse(f3, "x+y")});
  const ASElement one = ASElement::constant(parse(f3, "1"));
  for (const RewriteResult& r : {rule_a(s, 1), rule_b(s, 0, ASElement::binomial(parse(f3, "x"), parse(f3, "1"))),
                                 rule_f(s, 0, 1, ASElement::binomial(parse(f3, "1"), parse(f3, "y"))),
                                 rule_b(s, 1, ASElement(f3, {parse(f3, "x"), parse(f3, "1"), parse(f3, "1")}))}) {
    const Json j = io::certificate_to_json(r.certificate);
    const RewriteCertificate back = io::certificate_from_json(Json::parse(j.dump()));
    CHECK(io::certificate_to_json(back) == j);
    CHECK(verify(back).status == verify(r.certificate).status);
  }
  Json bad = io::certificate_to_json(rule_a(s, 0).certificate);
  bad["n"] = 3;
  CHECK_THROWS_AS(io::certificate_from_json(bad), Error);

  // A certificate written with only the single theta form is still accepted.
  const Json plain = Json::parse(R"({"field": {"p": 2, "vars": ["x", "y"]}, "n": 1,
      "lhs": {"alpha": "x", "slots": ["y"]}, "rhs": {"alpha": "x+y", "slots": ["y"]},
      "wp_generators": [], "theta": {"degree": 0, "components": {"[]": "y"}}, "axiom_steps": []})");
  CHECK(verify(io::certificate_from_json(plain)).status == VerdictStatus::Verified);
}

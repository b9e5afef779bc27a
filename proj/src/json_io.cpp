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

#include "charp/json_io.hpp"

#include "charp/error.hpp"
#include "charp/expr.hpp"

namespace charp::io {

namespace {

[[noreturn]] void bad(const std::string& what) { throw Error(ErrorKind::InvalidArgument, what); }

const Json& field_at(const Json& j, const char* key) {
  if (!j.is_object()) bad(std::string("expected an object with key '") + key + "'");
  const auto it = j.find(key);
  if (it == j.end()) bad(std::string("missing key '") + key + "'");
  return *it;
}

std::vector<FieldElement> elements_from_json(const CtxPtr& ctx, const Json& j) {
  if (!j.is_array()) bad("expected an array of expressions");
  std::vector<FieldElement> out;
  for (const auto& e : j) out.push_back(element_from_json(ctx, e));
  return out;
}

Json elements_to_json(const std::vector<FieldElement>& v) {
  Json out = Json::array();
  for (const auto& e : v) out.push_back(element_to_json(e));
  return out;
}

std::vector<long long> index_key(const std::string& key) {
  Json parsed;
  try {
    parsed = Json::parse(key);
  } catch (const Json::exception&) {
    bad("bad index key '" + key + "'");
  }
  if (!parsed.is_array()) bad("bad index key '" + key + "'");
  std::vector<long long> out;
  for (const auto& v : parsed) {
    if (!v.is_number_integer()) bad("bad index key '" + key + "'");
    out.push_back(v.get<long long>());
  }
  return out;
}

std::string key_of(const std::vector<long long>& idx) { return Json(idx).dump(); }

std::string kind_name(FormKind k) {
  switch (k) {
    case FormKind::Explicit: return "explicit";
    case FormKind::TwoDim: return "two-dim";
    case FormKind::NormForm: return "norm";
    case FormKind::Scale: return "scale";
    case FormKind::DirectSum: return "direct-sum";
  }
  return "explicit";
}

}  // namespace

Json field_to_json(const FieldCtx& ctx) {
  return Json{{"p", ctx.p()}, {"e", ctx.e()}, {"min_poly", ctx.fq().min_poly()}, {"vars", ctx.vars()}};
}

CtxPtr field_from_json(const Json& j) {
  const Json& p = field_at(j, "p");
  if (!p.is_number_unsigned()) bad("field 'p' must be a positive integer");
  unsigned e = 1;
  if (j.contains("e")) {
    if (!j["e"].is_number_unsigned()) bad("field 'e' must be a positive integer");
    e = j["e"].get<unsigned>();
  }
  std::vector<unsigned> min_poly;
  if (j.contains("min_poly") && !j["min_poly"].is_null()) min_poly = j["min_poly"].get<std::vector<unsigned>>();
  std::vector<std::string> vars;
  if (j.contains("vars")) vars = j["vars"].get<std::vector<std::string>>();
  return FieldCtx::create(p.get<unsigned>(), e, std::move(vars), std::move(min_poly));
}

Json element_to_json(const FieldElement& a) { return to_string(a); }

FieldElement element_from_json(const CtxPtr& ctx, const Json& j) {
  if (j.is_string()) return parse_expr(ctx, j.get<std::string>());
  if (j.is_number_integer()) return FieldElement(ctx, j.get<long long>());
  bad("expected an expression string, got " + j.dump());
}

Json as_to_json(const ASElement& f) { return elements_to_json(f.coeffs()); }

ASElement as_from_json(const CtxPtr& ctx, const Json& j) {
  if (j.is_string()) return parse_coefficients(ctx, j.get<std::string>());
  return ASElement(ctx, elements_from_json(ctx, j));
}

ASElement parse_coefficients(const CtxPtr& ctx, const std::string& text) {
  std::vector<FieldElement> coeffs;
  int depth = 0;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= text.size(); ++i) {
    const char c = i < text.size() ? text[i] : ',';
    if (c == '(') ++depth;
    if (c == ')') --depth;
    if (c == ',' && depth == 0) {
      coeffs.push_back(parse_expr(ctx, std::string_view(text).substr(start, i - start)));
      start = i + 1;
    }
  }
  return ASElement(ctx, std::move(coeffs));
}

Json diffform_to_json(const DiffForm& w) {
  Json comps = Json::object();
  for (const auto& [mask, c] : w.components()) {
    std::vector<long long> idx;
    for (auto i : basis_indices(mask)) idx.push_back(static_cast<long long>(i));
    comps[key_of(idx)] = element_to_json(c);
  }
  return Json{{"degree", w.degree()}, {"components", comps}};
}

DiffForm diffform_from_json(const CtxPtr& ctx, const Json& j) {
  const Json& deg = field_at(j, "degree");
  if (!deg.is_number_unsigned()) bad("form 'degree' must be a non-negative integer");
  DiffForm w(ctx, deg.get<unsigned>());
  if (!j.contains("components")) return w;
  const Json& comps = j["components"];
  if (!comps.is_object()) bad("form 'components' must be an object");
  for (const auto& [key, value] : comps.items()) {
    const auto idx = index_key(key);
    if (idx.size() != w.degree()) throw Error(ErrorKind::DegreeMismatch, "component " + key + " has the wrong length");
    DiffForm::Basis mask = 0;
    long long prev = -1;
    for (long long i : idx) {
      if (i <= prev || i >= static_cast<long long>(ctx->nvars()))
        throw Error(ErrorKind::BadRange, "component " + key + " must list increasing variable indices");
      mask |= DiffForm::Basis{1} << i;
      prev = i;
    }
    w.accumulate(mask, element_from_json(ctx, value));
  }
  return w;
}

Json symbol_to_json(const SymbolPresentation& s) {
  return Json{{"alpha", element_to_json(s.alpha())}, {"slots", elements_to_json(s.slots())}};
}

SymbolPresentation symbol_from_json(const CtxPtr& ctx, const Json& j) {
  return SymbolPresentation(element_from_json(ctx, field_at(j, "alpha")), elements_from_json(ctx, field_at(j, "slots")));
}

Json presentation_to_json(const Presentation& p) {
  if (const auto* s = std::get_if<SymbolPresentation>(&p)) return symbol_to_json(*s);
  return diffform_to_json(std::get<DiffForm>(p));
}

Presentation presentation_from_json(const CtxPtr& ctx, const Json& j) {
  if (j.is_object() && j.contains("alpha")) return symbol_from_json(ctx, j);
  return diffform_from_json(ctx, j);
}

Json axiom_step_to_json(const AxiomStep& step) {
  return Json{{"rule", "norm-slot-general"},
              {"alpha", element_to_json(step.alpha)},
              {"f", as_to_json(step.f)},
              {"slot", step.slot},
              {"slots", elements_to_json(step.slots)},
              {"sign", step.sign},
              {"claimed_difference", diffform_to_json(step.claimed_difference)}};
}

AxiomStep axiom_step_from_json(const CtxPtr& ctx, const Json& j) {
  const Json& rule = field_at(j, "rule");
  if (rule != "norm-slot-general") bad("unknown axiom rule " + rule.dump());
  AxiomStep step{AxiomRule::NormSlotGeneral,
                 element_from_json(ctx, field_at(j, "alpha")),
                 as_from_json(ctx, field_at(j, "f")),
                 field_at(j, "slot").get<std::size_t>(),
                 elements_from_json(ctx, field_at(j, "slots")),
                 field_at(j, "sign").get<int>(),
                 diffform_from_json(ctx, field_at(j, "claimed_difference"))};
  if (step.sign != 1 && step.sign != -1) bad("axiom sign must be 1 or -1");
  return step;
}

Json certificate_to_json(const RewriteCertificate& c) {
  Json gens = Json::array();
  for (const auto& g : c.generators) gens.push_back(Json{{"u", element_to_json(g.u)}, {"slots", elements_to_json(g.slots)}});
  Json steps = Json::array();
  for (const auto& s : c.axiom_steps) steps.push_back(axiom_step_to_json(s));
  Json exact = Json::array();
  for (const auto& e : c.exact_generators)
    exact.push_back(Json{{"c", element_to_json(e.c)}, {"slots", elements_to_json(e.slots)}});
  return Json{{"field", field_to_json(*c.ctx())},
              {"n", c.n()},
              {"lhs", presentation_to_json(c.lhs)},
              {"rhs", presentation_to_json(c.rhs)},
              {"wp_generators", gens},
              {"theta", diffform_to_json(c.theta)},
              {"exact_generators", exact},
              {"axiom_steps", steps}};
}

RewriteCertificate certificate_from_json(const Json& j) {
  const CtxPtr ctx = field_from_json(field_at(j, "field"));
  RewriteCertificate c{presentation_from_json(ctx, field_at(j, "lhs")), presentation_from_json(ctx, field_at(j, "rhs")),
                       {}, DiffForm(ctx, 0), {}};
  if (c.n() == 0) throw Error(ErrorKind::DegreeMismatch, "certificates need degree at least 1");
  c.theta = j.contains("theta") ? diffform_from_json(ctx, j["theta"]) : DiffForm(ctx, c.n() - 1);
  if (j.contains("n") && j["n"].get<unsigned>() != c.n())
    throw Error(ErrorKind::DegreeMismatch, "declared n differs from the degree of lhs");
  if (j.contains("wp_generators"))
    for (const auto& g : j["wp_generators"])
      c.generators.push_back({element_from_json(ctx, field_at(g, "u")), elements_from_json(ctx, field_at(g, "slots"))});
  if (j.contains("exact_generators"))
    for (const auto& e : j["exact_generators"])
      c.exact_generators.push_back({element_from_json(ctx, field_at(e, "c")), elements_from_json(ctx, field_at(e, "slots"))});
  if (j.contains("axiom_steps"))
    for (const auto& s : j["axiom_steps"]) c.axiom_steps.push_back(axiom_step_from_json(ctx, s));
  return c;
}

Json verdict_to_json(const Verdict& v) {
  Json out{{"status", std::string(to_string(v.status))}, {"residual", diffform_to_json(v.residual)}, {"axioms", v.axioms}};
  if (!v.reason.empty()) out["reason"] = v.reason;
  return out;
}

Json tuple_vector_to_json(const TupleVector& v) {
  Json entries = Json::object();
  for (std::size_t idx = 1; idx <= v.size(); ++idx) {
    if (v.at(idx).is_zero()) continue;
    std::vector<long long> d;
    for (int bit : TupleVector::tuple_of(idx, v.n())) d.push_back(bit);
    entries[key_of(d)] = as_to_json(v.at(idx));
  }
  return Json{{"n", v.n()}, {"entries", entries}};
}

TupleVector tuple_vector_from_json(const CtxPtr& ctx, const Json& j) {
  TupleVector v(ctx, field_at(j, "n").get<std::size_t>());
  const Json& entries = field_at(j, "entries");
  if (!entries.is_object()) bad("vector 'entries' must be an object");
  for (const auto& [key, value] : entries.items()) {
    const auto idx = index_key(key);
    if (idx.size() != v.n()) throw Error(ErrorKind::DimensionMismatch, "tuple " + key + " has the wrong length");
    std::vector<int> d(idx.begin(), idx.end());
    const std::size_t index = TupleVector::index_of(d);
    if (index == 0) throw Error(ErrorKind::BadRange, "the zero tuple has no entry");
    v.set(index, as_from_json(ctx, value));
  }
  return v;
}

Json polyform_to_json(const PolyFormSpec& f) {
  Json out{{"kind", kind_name(f.kind())}};
  switch (f.kind()) {
    case FormKind::Explicit: {
      Json coeffs = Json::object();
      for (const auto& [e, c] : f.poly().terms()) coeffs[key_of(std::vector<long long>(e.begin(), e.end()))] = element_to_json(c);
      out["dim"] = f.dimension();
      out["coeffs"] = coeffs;
      break;
    }
    case FormKind::TwoDim:
      out["alpha"] = element_to_json(f.alpha());
      out["variant"] = std::string(to_string(f.variant()));
      break;
    case FormKind::NormForm:
      out["alpha"] = element_to_json(f.alpha());
      break;
    case FormKind::Scale:
      out["c"] = element_to_json(f.scalar());
      out["inner"] = polyform_to_json(f.inner());
      break;
    case FormKind::DirectSum: {
      Json parts = Json::array();
      for (const auto& p : f.parts()) parts.push_back(polyform_to_json(p));
      out["parts"] = parts;
      break;
    }
  }
  return out;
}

PolyFormSpec polyform_from_json(const CtxPtr& ctx, const Json& j) {
  if (!j.is_object()) bad("a form must be a JSON object");
  const std::string kind = j.contains("kind") ? j["kind"].get<std::string>() : (j.contains("coeffs") ? "explicit" : "");
  if (kind == "explicit") {
    const std::size_t dim = field_at(j, "dim").get<std::size_t>();
    FormPoly poly(ctx, dim);
    for (const auto& [key, value] : field_at(j, "coeffs").items()) {
      const auto idx = index_key(key);
      if (idx.size() != dim) throw Error(ErrorKind::BadMultiIndex, "multi-index " + key + " has the wrong length");
      FormPoly::Exponents e;
      for (long long i : idx) {
        if (i < 0) throw Error(ErrorKind::BadMultiIndex, "negative exponent in " + key);
        e.push_back(static_cast<unsigned>(i));
      }
      poly.accumulate(e, element_from_json(ctx, value));
    }
    return PolyFormSpec::explicit_form(std::move(poly));
  }
  if (kind == "two-dim") {
    TwoDimVariant variant = TwoDimVariant::A2Weighted;
    if (j.contains("variant")) {
      const auto v = j["variant"].get<std::string>();
      if (v == "a1-weighted") {
        variant = TwoDimVariant::A1Weighted;
      } else if (v != "a2-weighted") {
        bad("unknown two-dim variant '" + v + "'");
      }
    }
    return PolyFormSpec::two_dim(element_from_json(ctx, field_at(j, "alpha")), variant);
  }
  if (kind == "norm") return PolyFormSpec::norm_form(element_from_json(ctx, field_at(j, "alpha")));
  if (kind == "scale")
    return PolyFormSpec::scale(element_from_json(ctx, field_at(j, "c")), polyform_from_json(ctx, field_at(j, "inner")));
  if (kind == "direct-sum") {
    std::vector<PolyFormSpec> parts;
    for (const auto& p : field_at(j, "parts")) parts.push_back(polyform_from_json(ctx, p));
    return PolyFormSpec::direct_sum(std::move(parts));
  }
  bad("unknown form kind '" + kind + "'");
}

Json regularity_to_json(const RegularityCertificate& c) {
  Json children = Json::array();
  for (const auto& ch : c.children) children.push_back(regularity_to_json(ch));
  return Json{{"node", kind_name(c.node)},
              {"justification", c.justification},
              {"assumptions", c.assumptions},
              {"children", children}};
}

Json algebra_element_to_json(const AlgebraElement& a) {
  const unsigned p = a.ctx()->p();
  Json coords = Json::object();
  for (std::size_t j = 0; j < p; ++j)
    for (std::size_t i = 0; i < p; ++i)
      if (!a.coeff(i, j).is_zero())
        coords[key_of({static_cast<long long>(i), static_cast<long long>(j)})] = element_to_json(a.coeff(i, j));
  return coords;
}

}  // namespace charp::io

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

// JSON encodings shared by the command-line tool and the tests. Element
// values are expression strings in the field's grammar; key order is sorted.

#ifndef CHARP_JSON_IO_HPP
#define CHARP_JSON_IO_HPP

#include <string>
#include <vector>

#include "charp/certs.hpp"
#include "charp/cyclic.hpp"
#include "charp/pforms.hpp"
#include "charp/procedures.hpp"
#include "charp/rewrite.hpp"
#include "json.hpp"

namespace charp::io {

using Json = nlohmann::json;

Json field_to_json(const FieldCtx& ctx);
CtxPtr field_from_json(const Json& j);

Json element_to_json(const FieldElement& a);
/// Accepts an expression string or an integer.
FieldElement element_from_json(const CtxPtr& ctx, const Json& j);

/// Coefficients c_0, c_1, ... of c_0 + c_1 L + ...
Json as_to_json(const ASElement& f);
ASElement as_from_json(const CtxPtr& ctx, const Json& j);
/// Comma-separated coefficient list such as "x,1" (commas inside parentheses do not split).
ASElement parse_coefficients(const CtxPtr& ctx, const std::string& text);

Json diffform_to_json(const DiffForm& w);
DiffForm diffform_from_json(const CtxPtr& ctx, const Json& j);

Json symbol_to_json(const SymbolPresentation& s);
SymbolPresentation symbol_from_json(const CtxPtr& ctx, const Json& j);

Json presentation_to_json(const Presentation& p);
Presentation presentation_from_json(const CtxPtr& ctx, const Json& j);

Json axiom_step_to_json(const AxiomStep& step);
AxiomStep axiom_step_from_json(const CtxPtr& ctx, const Json& j);

/// Includes the field header.
Json certificate_to_json(const RewriteCertificate& c);
RewriteCertificate certificate_from_json(const Json& j);

Json verdict_to_json(const Verdict& v);

/// {"n": n, "entries": {"[d_1,...,d_n]": [coefficients]}}; absent tuples are zero.
Json tuple_vector_to_json(const TupleVector& v);
TupleVector tuple_vector_from_json(const CtxPtr& ctx, const Json& j);

/// Structural tree with "kind" tags, or {"dim", "coeffs"} for an explicit form.
Json polyform_to_json(const PolyFormSpec& f);
PolyFormSpec polyform_from_json(const CtxPtr& ctx, const Json& j);

Json regularity_to_json(const RegularityCertificate& c);
Json algebra_element_to_json(const AlgebraElement& a);

}  // namespace charp::io

#endif  // CHARP_JSON_IO_HPP

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

#ifndef CHARP_EXPR_HPP
#define CHARP_EXPR_HPP

#include <string>
#include <string_view>

#include "charp/field.hpp"

namespace charp {

/// Parses the expression grammar
///
///   expr   := term (('+'|'-') term)*
///   term   := factor (('*'|'/') factor)*
///   factor := atom ('^' uint)?
///   atom   := uint | ident | '(' expr ')'
///
/// Integers reduce mod p, `g` is the generator of F_{p^e} (e > 1), any other
/// identifier must be a declared variable. Throws SyntaxError with the byte
/// offset of the offending token, or Error(UnknownIdentifier).
FieldElement parse_expr(const CtxPtr& ctx, std::string_view text);

std::string to_string(const Poly& poly, const FieldCtx& ctx);
/// Canonical text; parse_expr(to_string(a)) == a.
std::string to_string(const FieldElement& a);

}  // namespace charp

#endif  // CHARP_EXPR_HPP

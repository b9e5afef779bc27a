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

#include "charp/expr.hpp"

#include <cctype>

#include "charp/error.hpp"

namespace charp {

namespace {

class Parser {
 public:
  Parser(const CtxPtr& ctx, std::string_view text) : ctx_(ctx), text_(text) {}

  FieldElement parse() {
    FieldElement v = expr();
    skip_ws();
    if (pos_ != text_.size()) throw SyntaxError(pos_, std::string("unexpected '") + text_[pos_] + "'");
    return v;
  }

 private:
  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  FieldElement expr() {
    FieldElement acc = term();
    while (true) {
      if (accept('+')) {
        acc += term();
      } else if (accept('-')) {
        acc -= term();
      } else {
        return acc;
      }
    }
  }

  FieldElement term() {
    FieldElement acc = factor();
    while (true) {
      if (accept('*')) {
        acc *= factor();
      } else if (accept('/')) {
        const std::size_t at = pos_;
        FieldElement d = factor();
        if (d.is_zero()) throw Error(ErrorKind::ZeroDenominator, "division by zero at offset " + std::to_string(at));
        acc /= d;
      } else {
        return acc;
      }
    }
  }

  FieldElement factor() {
    FieldElement base = atom();
    if (accept('^')) {
      skip_ws();
      const std::size_t start = pos_;
      if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_])))
        throw SyntaxError(pos_, "expected exponent");
      unsigned long long k = 0;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
        k = k * 10 + static_cast<unsigned>(text_[pos_] - '0');
        if (k > 1000000) throw SyntaxError(start, "exponent too large");
        ++pos_;
      }
      return base.pow(static_cast<long long>(k));
    }
    return base;
  }

  FieldElement atom() {
    skip_ws();
    if (pos_ >= text_.size()) throw SyntaxError(pos_, "unexpected end of input");
    const char c = text_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      long long r = 0;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
        r = (r * 10 + (text_[pos_] - '0')) % static_cast<long long>(ctx_->p());
        ++pos_;
      }
      return FieldElement(ctx_, r);
    }
    if (c >= 'a' && c <= 'z') {
      const std::size_t start = pos_;
      while (pos_ < text_.size() &&
             (std::islower(static_cast<unsigned char>(text_[pos_])) ||
              std::isdigit(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
        ++pos_;
      const std::string name(text_.substr(start, pos_ - start));
      if (name == "g" && ctx_->e() > 1) return FieldElement::generator(ctx_);
      const auto idx = ctx_->var_index(name);
      if (!idx)
        throw Error(ErrorKind::UnknownIdentifier, "'" + name + "' at offset " + std::to_string(start));
      return FieldElement::variable(ctx_, *idx);
    }
    if (c == '(') {
      ++pos_;
      FieldElement v = expr();
      if (!accept(')')) throw SyntaxError(pos_, "expected ')'");
      return v;
    }
    throw SyntaxError(pos_, std::string("unexpected '") + c + "'");
  }

  const CtxPtr& ctx_;
  std::string_view text_;
  std::size_t pos_ = 0;
};

// Coefficient text and whether it is a single product (safe to juxtapose with '*').
std::pair<std::string, bool> coef_text(FiniteField::Elem c, const FiniteField& fq) {
  if (fq.e() == 1) return {std::to_string(c), true};
  const auto d = fq.digits(c);
  std::string out;
  int nonzero = 0;
  for (std::size_t i = d.size(); i-- > 0;) {
    if (d[i] == 0) continue;
    if (nonzero++ > 0) out += " + ";
    std::string piece;
    if (i == 0) {
      piece = std::to_string(d[i]);
    } else {
      piece = d[i] == 1 ? "" : std::to_string(d[i]) + "*";
      piece += i == 1 ? "g" : "g^" + std::to_string(i);
    }
    out += piece;
  }
  return {out, nonzero <= 1};
}

std::string monomial_text(const Monomial& m, const FieldCtx& ctx) {
  std::string out;
  for (std::size_t i = 0; i < ctx.nvars(); ++i) {
    if (m.exp[i] == 0) continue;
    if (!out.empty()) out += "*";
    out += ctx.vars()[i];
    if (m.exp[i] > 1) out += "^" + std::to_string(m.exp[i]);
  }
  return out;
}

}  // namespace

FieldElement parse_expr(const CtxPtr& ctx, std::string_view text) { return Parser(ctx, text).parse(); }

std::string to_string(const Poly& poly, const FieldCtx& ctx) {
  if (poly.is_zero()) return "0";
  std::string out;
  for (const Term& t : poly.terms()) {
    if (!out.empty()) out += " + ";
    auto [cs, single] = coef_text(t.coef, ctx.fq());
    if (t.mono.is_one()) {
      out += cs;
    } else if (t.coef == 1) {
      out += monomial_text(t.mono, ctx);
    } else {
      out += (single ? cs : "(" + cs + ")") + "*" + monomial_text(t.mono, ctx);
    }
  }
  return out;
}

std::string to_string(const FieldElement& a) {
  const FieldCtx& ctx = *a.ctx();
  std::string num = to_string(a.num(), ctx);
  if (a.den().is_one()) return num;
  std::string den = to_string(a.den(), ctx);
  if (a.num().size() > 1 || num.find(" + ") != std::string::npos) num = "(" + num + ")";
  if (den.find_first_of(" *") != std::string::npos) den = "(" + den + ")";
  return num + "/" + den;
}

}  // namespace charp

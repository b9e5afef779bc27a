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

#ifndef CHARP_PFORMS_HPP
#define CHARP_PFORMS_HPP

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "charp/as_algebra.hpp"
#include "charp/symbol.hpp"

namespace charp {

/// Polynomial in the coordinates a_1..a_m with coefficients in the ambient field.
class FormPoly {
 public:
  using Exponents = std::vector<unsigned>;

  FormPoly(CtxPtr ctx, std::size_t dim) : ctx_(std::move(ctx)), dim_(dim) {}

  static FormPoly constant(const FieldElement& c, std::size_t dim);
  static FormPoly coordinate(const CtxPtr& ctx, std::size_t dim, std::size_t j);

  const CtxPtr& ctx() const noexcept { return ctx_; }
  std::size_t dim() const noexcept { return dim_; }
  const std::map<Exponents, FieldElement>& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  /// Adds c * a^exps.
  void accumulate(const Exponents& exps, const FieldElement& c);

  FormPoly operator+(const FormPoly& o) const;
  FormPoly operator-(const FormPoly& o) const;
  FormPoly operator*(const FormPoly& o) const;
  FormPoly scaled(const FieldElement& c) const;
  /// Same polynomial in a space of dimension new_dim, coordinates moved up by offset.
  FormPoly shifted(std::size_t offset, std::size_t new_dim) const;
  FieldElement evaluate(const std::vector<FieldElement>& v) const;

  friend bool operator==(const FormPoly& a, const FormPoly& b) { return a.dim_ == b.dim_ && a.terms_ == b.terms_; }

 private:
  CtxPtr ctx_;
  std::size_t dim_;
  std::map<Exponents, FieldElement> terms_;
};

enum class FormKind { Explicit, TwoDim, NormForm, Scale, DirectSum };

/// A2Weighted: alpha a1^p - a1 a2^(p-1) + a2^p.  A1Weighted: alpha a1^p - a1^(p-1) a2 + a2^p.
enum class TwoDimVariant { A2Weighted, A1Weighted };

/// Homogeneous degree-p form, either explicit or built structurally.
class PolyFormSpec {
 public:
  /// Throws BadMultiIndex unless every term has total degree p.
  static PolyFormSpec explicit_form(FormPoly poly);
  static PolyFormSpec two_dim(const FieldElement& alpha, TwoDimVariant variant);
  static PolyFormSpec norm_form(const FieldElement& alpha);
  /// Throws ZeroElement for c = 0.
  static PolyFormSpec scale(const FieldElement& c, PolyFormSpec inner);
  /// Throws InvalidArgument for an empty list.
  static PolyFormSpec direct_sum(std::vector<PolyFormSpec> parts);

  FormKind kind() const noexcept { return node_->kind; }
  const CtxPtr& ctx() const noexcept { return node_->ctx; }
  std::size_t dimension() const noexcept { return node_->dim; }

  const FormPoly& poly() const;
  const FieldElement& alpha() const;
  TwoDimVariant variant() const noexcept { return node_->variant; }
  const FieldElement& scalar() const;
  const PolyFormSpec& inner() const;
  const std::vector<PolyFormSpec>& parts() const noexcept { return node_->children; }

 private:
  struct Node {
    FormKind kind;
    CtxPtr ctx;
    std::size_t dim;
    std::optional<FormPoly> poly;
    std::optional<FieldElement> value;  // alpha or the scale factor
    TwoDimVariant variant = TwoDimVariant::A2Weighted;
    std::vector<PolyFormSpec> children;
  };
  explicit PolyFormSpec(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  std::shared_ptr<const Node> node_;
};

std::string_view to_string(FormKind k);
std::string_view to_string(TwoDimVariant v);

/// Throws DimensionMismatch when v has the wrong length.
FieldElement evaluate(const PolyFormSpec& form, const std::vector<FieldElement>& v);
PolyFormSpec to_explicit(const PolyFormSpec& form);
/// Coefficient vector of the linear form d^kappa phi; |kappa| must equal p - 1.
std::vector<FieldElement> order_partials(const PolyFormSpec& form, const std::vector<unsigned>& kappa);

struct BruteForceResult {
  bool regular = true;
  std::optional<std::vector<FieldElement>> witness;
  std::uint64_t points_checked = 0;
};

/// Enumerates nonzero points up to scalar over F_{p^e}. Requires constant
/// coefficients and (p^e)^m <= 10^7.
BruteForceResult is_p_regular_bruteforce(const PolyFormSpec& form);

struct RegularityCertificate {
  FormKind node;
  std::string justification;
  std::vector<std::string> assumptions;
  std::vector<RegularityCertificate> children;
};

/// Structural proof of p-regularity, or nullopt when a norm-form leaf has
/// alpha in wp(F) (the extension is not a field). Throws ExplicitLeaf.
std::optional<RegularityCertificate> regularity_certificate(const PolyFormSpec& form);

enum class RootDecision { HasRoot, NoRoot, Undecided };

struct ArtinSchreierRoot {
  RootDecision decision;
  std::optional<FieldElement> root;
};

/// Decides whether u^p - u = alpha has a solution in the ambient field.
/// Constants and polynomials are decided; other rational functions are Undecided.
ArtinSchreierRoot artin_schreier_root(const FieldElement& alpha);

struct SearchBudget {
  enum class Mode { ExhaustiveConstants, BoundedDegree };
  Mode mode = Mode::BoundedDegree;
  unsigned max_degree = 1;
  std::uint64_t cap = 10'000'000;
  unsigned jobs = 1;
};

struct IsotropyResult {
  bool found = false;
  std::vector<FieldElement> vector;
  std::uint64_t examined = 0;
  bool cap_reached = false;
};

/// Searches for a nonzero zero of the form. Found vectors are re-verified with
/// evaluate before being returned. Exhaustive mode throws TooLarge beyond the cap.
IsotropyResult isotropy_search(const PolyFormSpec& form, const SearchBudget& budget);

/// Direct sum over the nonzero tuples d (lexicographic) of b^d N_alpha.
PolyFormSpec build_phi(const SymbolPresentation& s);
/// TwoDim(alpha, A1Weighted) followed by build_phi(s).
PolyFormSpec build_Phi(const SymbolPresentation& s);
/// phi' + sum_i beta_i N_{alpha_i} + sum_i gamma_i N_{delta_i}, where
/// phi'(a, b) = (sum alpha_i - sum gamma_i) a^p - a^(p-1) b + b^p.
PolyFormSpec build_common_slot_form(const std::vector<FieldElement>& alphas, const std::vector<FieldElement>& betas,
                                    const std::vector<FieldElement>& gammas, const std::vector<FieldElement>& deltas);

}  // namespace charp

#endif  // CHARP_PFORMS_HPP

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

#ifndef CHARP_CERTS_HPP
#define CHARP_CERTS_HPP

#include <string>
#include <variant>
#include <vector>

#include "charp/as_algebra.hpp"
#include "charp/exterior.hpp"
#include "charp/symbol.hpp"

namespace charp {

/// Either side of a certificate: a decomposable presentation or an explicit form.
using Presentation = std::variant<SymbolPresentation, DiffForm>;

DiffForm eval_presentation(const Presentation& p);
unsigned presentation_degree(const Presentation& p);
const CtxPtr& presentation_ctx(const Presentation& p);
bool same_presentation(const Presentation& a, const Presentation& b);

/// A decomposable generator (u; slots) contributing (u^p - u) dlog(slots).
struct WpGenerator {
  FieldElement u;
  std::vector<FieldElement> slots;
};

/// An exact term c dlog(b_1) ^ ... ^ dlog(b_{n-1}) of theta; its derivative is
/// dc ^ dlog(b_1) ^ ... ^ dlog(b_{n-1}). Keeping these terms apart avoids
/// forming one large normalized theta when certificates are chained.
struct ExactGenerator {
  FieldElement c;
  std::vector<FieldElement> slots;
};

/// d(c dlog(b_1) ^ ... ^ dlog(b_{n-1})).
DiffForm exact_image(const ExactGenerator& g);

enum class AxiomRule { NormSlotGeneral };

/// A step justified by the norm-slot rule for an element of degree >= 2 in L,
/// for which no explicit witness is produced. Its contribution is
///   claimed_difference = -sign * alpha dlog(b_1) ^ .. dlog(N(f)) .. ^ dlog(b_n)
/// with N(f) in position `slot`; the verifier recomputes it from the parameters.
struct AxiomStep {
  AxiomRule rule = AxiomRule::NormSlotGeneral;
  FieldElement alpha;
  ASElement f;
  std::size_t slot = 0;
  std::vector<FieldElement> slots;
  int sign = 1;
  DiffForm claimed_difference;
};

/// Value an axiom step must carry, recomputed from its parameters.
DiffForm expected_axiom_difference(const AxiomStep& step);

/// Witness data for
///   eval(lhs) - eval(rhs) = sum wp_image(gen) + d(theta) + sum exact_image(e) + sum claimed.
struct RewriteCertificate {
  Presentation lhs;
  Presentation rhs;
  std::vector<WpGenerator> generators;
  DiffForm theta;
  std::vector<AxiomStep> axiom_steps;
  std::vector<ExactGenerator> exact_generators{};

  unsigned n() const { return presentation_degree(lhs); }
  const CtxPtr& ctx() const { return presentation_ctx(lhs); }
};

enum class VerdictStatus { Verified, VerifiedModuloAxioms, Rejected };

std::string_view to_string(VerdictStatus s);

struct Verdict {
  VerdictStatus status;
  DiffForm residual;
  /// One description per axiom step relied on.
  std::vector<std::string> axioms;
  std::string reason;

  bool accepted() const noexcept { return status != VerdictStatus::Rejected; }
};

/// Recomputes the residual exactly. Throws DegreeMismatch on inconsistent degrees.
Verdict verify(const RewriteCertificate& cert);

/// lhs = rhs = p, no witnesses.
RewriteCertificate identity_certificate(const Presentation& p);
/// Chains c1: A -> B and c2: B -> C into A -> C. Throws ChainMismatch.
RewriteCertificate compose(const RewriteCertificate& c1, const RewriteCertificate& c2);
/// B -> A from A -> B.
RewriteCertificate reverse(const RewriteCertificate& c);
/// Wedges every form of the certificate with dlog(prefix) on the left and
/// dlog(suffix) on the right; a certificate for (a; S) becomes one for (a; P, S, Q).
RewriteCertificate embed(const RewriteCertificate& c, const std::vector<FieldElement>& prefix,
                         const std::vector<FieldElement>& suffix);

}  // namespace charp

#endif  // CHARP_CERTS_HPP

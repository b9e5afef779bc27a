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

#ifndef CHARP_PROCEDURES_HPP
#define CHARP_PROCEDURES_HPP

#include <string>
#include <vector>

#include "charp/pforms.hpp"
#include "charp/rewrite.hpp"

namespace charp {

enum class LinkStatus { Rewritten, Trivial, Unchanged };

std::string_view to_string(LinkStatus s);

struct LinkedSymbol {
  LinkStatus status;
  SymbolPresentation presentation;
  RewriteCertificate certificate;
  Verdict verdict;
  FieldElement delta;
};

/// The unknowns and solution of the linear system behind separable linkage.
struct LinkageSystem {
  std::vector<std::size_t> gamma_tuples;  // tuple indices, lexicographic
  std::vector<FieldElement> gammas;
  std::vector<FieldElement> x;              // x_1..x_m, shared by all symbols
  std::vector<std::vector<int>> y;          // y[i][j] for symbol i, component j
  std::vector<FieldElement> deltas;         // delta_0..delta_m
};

struct LinkageOutcome {
  FieldElement alpha_star;
  LinkageSystem system;
  std::vector<LinkedSymbol> symbols;
};

/// Number of symbols that separable_link expects: 1 + sum_{i=l}^{n} 2^(i-1).
std::size_t linkage_collection_size(std::size_t n, std::size_t l);

/// Rewrites 1 + sum_{i=l}^{n} 2^(i-1) symbols sharing all n slots so that they
/// share alpha and the first l-1 slots. `l` is 1-based.
LinkageOutcome separable_link(const std::vector<SymbolPresentation>& symbols, std::size_t l);

struct TrivializationOutcome {
  bool trivial = false;
  /// "alpha-in-wp", "last-slot-pth-power" or "slot-modify-then-a"; empty when not found.
  std::string branch;
  IsotropyResult search;
  std::optional<RewriteCertificate> certificate;
};

/// Searches for an isotropic vector of build_Phi(s) and turns it into a
/// certificate that the class of s is zero.
TrivializationOutcome trivialize(const SymbolPresentation& s, const SearchBudget& budget);

}  // namespace charp

#endif  // CHARP_PROCEDURES_HPP

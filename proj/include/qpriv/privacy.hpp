// Copyright 2026 The qpriv Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef QPRIV_PRIVACY_HPP
#define QPRIV_PRIVACY_HPP

#include <vector>

#include "qpriv/entropy.hpp"

namespace qpriv {

/// Lower bounds on the guaranteed privacy of a channel for a given input
/// state. Everything here is a lower bound; the true privacy (a supremum
/// over protocols) is not computable.
struct PrivacyBoundReport {
  Index d = 0;                       // system dimension
  Bits s_b = 0.0;                    // S(rho^B)
  Bits s_e = 0.0;                    // S(rho^E)
  double fidelity = 0.0;             // entanglement fidelity F
  Bits coherent_bound = 0.0;         // S(rho^B) - S(rho^E)
  Bits fano_bound = 0.0;             // fidelity-based bound at (s_b, F, d)
  Bits fano_inequality_slack = 0.0;  // [H(F) + (1-F) log2(d^2-1)] - S_E
};

struct FactorEntropies {
  Bits s_b = 0.0;
  Bits s_e = 0.0;
};

/// Outcome of the multipartite chain verification: lhs >= rhs - 1e-9 holds
/// for arbitrary pairs by Araki-Lieb plus subadditivity.
struct MultipartiteBoundReport {
  Index n = 0;     // number of factors
  Bits lhs = 0.0;  // S(rho^B) - S(rho^E)
  Bits rhs = 0.0;  // S(B_1) - sum_{i>=2} S(B_i) - sum_i S(E_i)
  std::vector<FactorEntropies> per_factor;
};

struct AdditivityResult {
  Bits lhs = 0.0;  // I(tensor of states, tensor of channels)
  Bits rhs = 0.0;  // sum_i I(state_i, channel_i)
};

/// Coherent-information lower bound: I(rho, channel).
Bits coherent_privacy_bound(const DensityOperator& rho,
                            const KrausChannel& channel);

/// Fidelity-based lower bound
///   s_b - F log2 F - (1-F) log2(1-F) + (F-1) log2(d^2-1)
/// with the 0 log 0 = 0 convention at F in {0, 1}. s_b is a free
/// nonnegative parameter, deliberately not capped at log2 d.
Bits fano_privacy_bound(Bits s_b, double fidelity, Index d);

/// Location of the bound's maximum in F: (d^2-1)/d^2.
double fano_max_location(Index d);

/// Value of the bound at its maximum: s_b + log2(d^2/(d^2-1)).
Bits fano_max_value(Bits s_b, Index d);

/// Full bound report for a concrete (state, channel) pair: S_B, S_E, F,
/// both lower bounds, and the slack of the quantum Fano inequality
/// S(rho, channel) <= H(F) + (1-F) log2(d^2-1), which is never negative
/// beyond numerics.
PrivacyBoundReport fano_bound_from_channel(const DensityOperator& rho,
                                           const KrausChannel& channel);

/// Multipartite right-hand side
///   S(B_1) - S(E_1) + sum_{i=2..N} [ -S(ref_b_star[i]) - S(E_i) ].
/// ref_b_star covers factors 2..N, so it has N-1 entries.
Bits multipartite_bound_rhs(const std::vector<DensityOperator>& reduced_b,
                            const std::vector<DensityOperator>& reduced_e,
                            const std::vector<DensityOperator>& ref_b_star);

/// Evaluates both sides of the chain with the reference states instantiated
/// as the actual reduced states, where the inequality is exact.
MultipartiteBoundReport multipartite_chain_check(const MultipartiteState& rho_b,
                                                 const MultipartiteState& rho_e);

/// Coherent information is additive over product inputs and product
/// channels; returns both sides for comparison.
AdditivityResult additivity_check(const std::vector<DensityOperator>& states,
                                  const std::vector<KrausChannel>& channels);

}  // namespace qpriv

#endif  // QPRIV_PRIVACY_HPP

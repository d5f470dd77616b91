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

#ifndef QPRIV_ENTROPY_HPP
#define QPRIV_ENTROPY_HPP

#include "qpriv/channel.hpp"
#include "qpriv/state.hpp"

namespace qpriv {

/// Entropies and informations in bits: every logarithm in this library is
/// base 2, so a maximally mixed qubit has entropy exactly one.
using Bits = double;

// Eigenvalues below this are treated as exact zeros inside entropy sums.
inline constexpr double kEntropyEigenvalueCutoff = 1e-12;

/// -sum_i lambda_i log2 lambda_i with 0 log 0 = 0. Computed entropies in
/// [-1e-9, 0) are clamped to zero; anything more negative means invalid
/// input leaked past validation and throws.
Bits von_neumann_entropy(const DensityOperator& rho);
Bits von_neumann_entropy(const MultipartiteState& s);

/// -x log2 x - (1-x) log2 (1-x) on [0, 1], zero at the endpoints.
Bits binary_entropy(double x);

/// S(rho, channel) = S of the environment state W. Invariant under Kraus
/// remixing (W transforms isospectrally).
Bits entropy_exchange(const DensityOperator& rho, const KrausChannel& channel);

/// S(channel(rho)) - S(rho, channel). May be negative. Requires a square
/// channel (dim_out == dim_in).
Bits coherent_information(const DensityOperator& rho,
                          const KrausChannel& channel);

/// F(rho, channel) = sum_k |tr(rho A_k)|^2. For pure rho this equals
/// <psi| channel(rho) |psi>. Requires a square channel.
double entanglement_fidelity(const DensityOperator& rho,
                             const KrausChannel& channel);

/// S(sum_k p_k rho_k) - sum_k p_k S(rho_k) >= 0.
Bits holevo_chi(const Ensemble& ensemble);

}  // namespace qpriv

#endif  // QPRIV_ENTROPY_HPP

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

#include "qpriv/privacy.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace qpriv {

namespace {

void require_dim(Index d) {
  if (d < 2) {
    throw Error(errc::bad_dimension,
                "dimension " + std::to_string(d) + " must be >= 2");
  }
}

}  // namespace

Bits coherent_privacy_bound(const DensityOperator& rho,
                            const KrausChannel& channel) {
  return coherent_information(rho, channel);
}

Bits fano_privacy_bound(Bits s_b, double fidelity, Index d) {
  require_dim(d);
  if (fidelity < 0.0 || fidelity > 1.0) {
    throw Error(errc::bad_fidelity,
                "fidelity " + std::to_string(fidelity) + " outside [0, 1]",
                fidelity);
  }
  const double d2m1 = static_cast<double>(d) * static_cast<double>(d) - 1.0;
  return s_b + binary_entropy(fidelity) -
         (1.0 - fidelity) * std::log2(d2m1);
}

double fano_max_location(Index d) {
  require_dim(d);
  const double d2 = static_cast<double>(d) * static_cast<double>(d);
  return (d2 - 1.0) / d2;
}

Bits fano_max_value(Bits s_b, Index d) {
  require_dim(d);
  const double d2 = static_cast<double>(d) * static_cast<double>(d);
  return s_b + std::log2(d2) - std::log2(d2 - 1.0);
}

PrivacyBoundReport fano_bound_from_channel(const DensityOperator& rho,
                                           const KrausChannel& channel) {
  if (channel.dim_out() != channel.dim_in()) {
    throw Error(errc::dim_mismatch, "bound requires dim_out == dim_in");
  }
  if (rho.dim() != channel.dim_in()) {
    throw Error(errc::dim_mismatch,
                "state dimension does not match channel input");
  }
  PrivacyBoundReport report;
  report.d = rho.dim();
  report.s_b = von_neumann_entropy(apply(channel, rho));
  report.s_e = entropy_exchange(rho, channel);
  // F can exceed 1 by eigensolver noise; the bound formulas need [0, 1].
  report.fidelity =
      std::clamp(entanglement_fidelity(rho, channel), 0.0, 1.0);
  report.coherent_bound = report.s_b - report.s_e;
  report.fano_bound = fano_privacy_bound(report.s_b, report.fidelity, report.d);
  const double d2m1 =
      static_cast<double>(report.d) * static_cast<double>(report.d) - 1.0;
  report.fano_inequality_slack = binary_entropy(report.fidelity) +
                                 (1.0 - report.fidelity) * std::log2(d2m1) -
                                 report.s_e;
  return report;
}

Bits multipartite_bound_rhs(const std::vector<DensityOperator>& reduced_b,
                            const std::vector<DensityOperator>& reduced_e,
                            const std::vector<DensityOperator>& ref_b_star) {
  const std::size_t n = reduced_b.size();
  if (n < 1 || reduced_e.size() != n || ref_b_star.size() + 1 != n) {
    throw Error(errc::length_mismatch,
                "need N reduced B states, N reduced E states and N-1 "
                "reference states");
  }
  Bits rhs = von_neumann_entropy(reduced_b[0]) -
             von_neumann_entropy(reduced_e[0]);
  for (std::size_t i = 1; i < n; ++i) {
    rhs -= von_neumann_entropy(ref_b_star[i - 1]);
    rhs -= von_neumann_entropy(reduced_e[i]);
  }
  return rhs;
}

MultipartiteBoundReport multipartite_chain_check(
    const MultipartiteState& rho_b, const MultipartiteState& rho_e) {
  const auto n = static_cast<Index>(rho_b.dims.size());
  if (rho_e.dims.size() != rho_b.dims.size()) {
    throw Error(errc::factor_mismatch,
                "states factor into " + std::to_string(rho_b.dims.size()) +
                    " and " + std::to_string(rho_e.dims.size()) + " parts");
  }
  MultipartiteBoundReport report;
  report.n = n;
  report.lhs = von_neumann_entropy(rho_b) - von_neumann_entropy(rho_e);
  report.per_factor.reserve(n);
  for (Index i = 0; i < n; ++i) {
    const int fi = static_cast<int>(i);
    FactorEntropies fe;
    fe.s_b = von_neumann_entropy(partial_trace(rho_b, {fi}));
    fe.s_e = von_neumann_entropy(partial_trace(rho_e, {fi}));
    report.per_factor.push_back(fe);
  }
  report.rhs = report.per_factor[0].s_b;
  for (Index i = 0; i < n; ++i) {
    if (i >= 1) report.rhs -= report.per_factor[i].s_b;
    report.rhs -= report.per_factor[i].s_e;
  }
  return report;
}

AdditivityResult additivity_check(const std::vector<DensityOperator>& states,
                                  const std::vector<KrausChannel>& channels) {
  if (states.empty() || states.size() != channels.size()) {
    throw Error(errc::dim_mismatch,
                "need equally many states and channels (at least one)");
  }
  for (std::size_t i = 0; i < states.size(); ++i) {
    if (channels[i].dim_out() != channels[i].dim_in() ||
        states[i].dim() != channels[i].dim_in()) {
      throw Error(errc::dim_mismatch,
                  "factor " + std::to_string(i) +
                      ": state and square channel dimensions must agree");
    }
  }
  DensityOperator product = states[0];
  KrausChannel joint = channels[0];
  AdditivityResult result;
  result.rhs = coherent_information(states[0], channels[0]);
  for (std::size_t i = 1; i < states.size(); ++i) {
    product.matrix = kron(product.matrix, states[i].matrix);
    joint = tensor_channels(joint, channels[i]);
    result.rhs += coherent_information(states[i], channels[i]);
  }
  result.lhs = coherent_information(product, joint);
  return result;
}

}  // namespace qpriv

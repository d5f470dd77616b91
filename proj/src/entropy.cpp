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

#include "qpriv/entropy.hpp"

#include <cmath>
#include <string>

namespace qpriv {

namespace {

void require_square_channel(const KrausChannel& channel) {
  if (channel.dim_out() != channel.dim_in()) {
    throw Error(errc::dim_mismatch,
                "operation requires dim_out == dim_in, got " +
                    std::to_string(channel.dim_out()) + " != " +
                    std::to_string(channel.dim_in()));
  }
}

Bits entropy_of_hermitian(const ComplexMatrix& m) {
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(m, Eigen::EigenvaluesOnly);
  double s = 0.0;
  for (Index i = 0; i < es.eigenvalues().size(); ++i) {
    const double lambda = es.eigenvalues()(i);
    if (lambda > kEntropyEigenvalueCutoff) s -= lambda * std::log2(lambda);
  }
  if (s < 0.0) {
    if (s < -1e-9) {
      throw Error(errc::negative_entropy,
                  "entropy " + std::to_string(s) +
                      "; input state is not a density operator",
                  s);
    }
    s = 0.0;
  }
  return s;
}

}  // namespace

Bits von_neumann_entropy(const DensityOperator& rho) {
  return entropy_of_hermitian(rho.matrix);
}

Bits von_neumann_entropy(const MultipartiteState& s) {
  return entropy_of_hermitian(s.matrix);
}

Bits binary_entropy(double x) {
  if (x < 0.0 || x > 1.0) {
    throw Error(errc::out_of_range,
                "argument " + std::to_string(x) + " outside [0, 1]", x);
  }
  double s = 0.0;
  if (x > 0.0) s -= x * std::log2(x);
  if (x < 1.0) s -= (1.0 - x) * std::log2(1.0 - x);
  return s;
}

Bits entropy_exchange(const DensityOperator& rho,
                      const KrausChannel& channel) {
  return von_neumann_entropy(environment_state(channel, rho));
}

Bits coherent_information(const DensityOperator& rho,
                          const KrausChannel& channel) {
  require_square_channel(channel);
  return von_neumann_entropy(apply(channel, rho)) -
         entropy_exchange(rho, channel);
}

double entanglement_fidelity(const DensityOperator& rho,
                             const KrausChannel& channel) {
  require_square_channel(channel);
  if (rho.dim() != channel.dim_in()) {
    throw Error(errc::dim_mismatch,
                "state dimension does not match channel input");
  }
  double f = 0.0;
  for (const auto& a : channel.kraus) {
    f += std::norm((rho.matrix.array() * a.transpose().array()).sum());
  }
  return f;
}

Bits holevo_chi(const Ensemble& ensemble) {
  const Index d = ensemble.states.front().dim();
  ComplexMatrix avg = ComplexMatrix::Zero(d, d);
  Bits mean_entropy = 0.0;
  for (std::size_t k = 0; k < ensemble.probs.size(); ++k) {
    avg += ensemble.probs[k] * ensemble.states[k].matrix;
    mean_entropy +=
        ensemble.probs[k] * von_neumann_entropy(ensemble.states[k]);
  }
  return entropy_of_hermitian(avg) - mean_entropy;
}

}  // namespace qpriv

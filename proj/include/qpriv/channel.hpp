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

#ifndef QPRIV_CHANNEL_HPP
#define QPRIV_CHANNEL_HPP

#include <cstdint>
#include <vector>

#include "qpriv/state.hpp"

namespace qpriv {

// Completeness tolerance for sum_k A_k^dag A_k = I.
inline constexpr double kCompletenessAtol = 1e-8;
inline constexpr double kIsometryAtol = 1e-10;

/// Completely positive trace-preserving map in Kraus form: a nonempty list
/// of dim_out x dim_in matrices with sum_k A_k^dag A_k = I. Channels are
/// stored in Kraus form only; every quantity this library computes is a
/// direct Kraus expression.
struct KrausChannel {
  std::vector<ComplexMatrix> kraus;

  Index num_kraus() const { return static_cast<Index>(kraus.size()); }
  Index dim_in() const { return kraus.front().cols(); }
  Index dim_out() const { return kraus.front().rows(); }
};

/// Stinespring dilation isometry, shape (dim_out * K) x dim_in with
/// V^dag V = I. Row (i * K + k) carries component i of Kraus operator k,
/// i.e. V = sum_k A_k (x) |k>.
struct Isometry {
  ComplexMatrix matrix;
  Index env_dim;

  Index dim_in() const { return matrix.cols(); }
  Index dim_out() const { return matrix.rows() / env_dim; }
};

KrausChannel validate_channel(const std::vector<ComplexMatrix>& kraus);

/// sum_k A_k rho A_k^dag.
DensityOperator apply(const KrausChannel& channel, const DensityOperator& rho);

/// Eve's output: the K x K matrix W with W_ij = tr(A_i rho A_j^dag).
/// Hermitian, positive-semidefinite, unit trace by channel completeness.
DensityOperator environment_state(const KrausChannel& channel,
                                  const DensityOperator& rho);

Isometry stinespring_isometry(const KrausChannel& channel);

/// V rho V^dag on the output (x) environment space, dims {dim_out, K}.
/// Tracing out factor 1 recovers apply(), factor 0 recovers
/// environment_state(); this is the dilation oracle those checks use.
MultipartiteState dilate(const KrausChannel& channel,
                         const DensityOperator& rho);

/// Kraus set {A_i (x) B_j}.
KrausChannel tensor_channels(const KrausChannel& a, const KrausChannel& b);

enum class ChannelKind {
  identity,
  depolarizing,
  dephasing,
  amplitude_damping,
  unitary,
};

KrausChannel identity_channel(Index dim);

/// rho -> (1-p) rho + p I/dim, p in [0, 1]. For qubits the Kraus set is
/// {sqrt(1-3p/4) I, sqrt(p/4) X, sqrt(p/4) Y, sqrt(p/4) Z}; higher
/// dimensions use the discrete Weyl (shift/clock) unitaries.
KrausChannel depolarizing_channel(Index dim, double p);

/// Qubit dephasing {sqrt(1-p) I, sqrt(p) Z}; leaves diagonals fixed.
KrausChannel dephasing_channel(double p);

/// Qubit amplitude damping with decay gamma in [0, 1].
KrausChannel amplitude_damping_channel(double gamma);

KrausChannel unitary_channel(const ComplexMatrix& u);

/// Dispatcher over the named constructors. `params` carries the scalar
/// parameters (p, gamma); the unitary kind needs the matrix overload.
KrausChannel make_channel(ChannelKind kind, Index dim,
                          const std::vector<double>& params = {});
KrausChannel make_channel(ChannelKind kind, const ComplexMatrix& unitary);

/// Haar-style random channel: orthonormalize a seeded Ginibre matrix into an
/// isometry and slice it into env_dim Kraus operators. env_dim = 1 gives a
/// random unitary channel. Deterministic per seed.
KrausChannel random_channel(Index dim, Index env_dim, std::uint64_t seed);
KrausChannel random_channel(Index dim, Index env_dim, Rng& rng);

/// Unitary freedom of the Kraus representation: A'_j = sum_k u_jk A_k with
/// u a K x K unitary. Represents the same map.
KrausChannel remix_kraus(const KrausChannel& channel, const ComplexMatrix& u);

}  // namespace qpriv

#endif  // QPRIV_CHANNEL_HPP

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

#include "qpriv/channel.hpp"

#include <cmath>
#include <numbers>
#include <string>
#include <utility>

namespace qpriv {

namespace {

void require_dims(const KrausChannel& channel, const DensityOperator& rho) {
  if (rho.dim() != channel.dim_in()) {
    throw Error(errc::dim_mismatch,
                "state dimension " + std::to_string(rho.dim()) +
                    " does not match channel input dimension " +
                    std::to_string(channel.dim_in()));
  }
}

}  // namespace

KrausChannel validate_channel(const std::vector<ComplexMatrix>& kraus) {
  if (kraus.empty()) {
    throw Error(errc::empty_kraus, "channel needs at least one Kraus operator");
  }
  const Index rows = kraus.front().rows();
  const Index cols = kraus.front().cols();
  if (rows < 1 || cols < 1) {
    throw Error(errc::shape_mismatch, "Kraus operators must be nonempty");
  }
  for (const auto& a : kraus) {
    if (a.rows() != rows || a.cols() != cols) {
      throw Error(errc::shape_mismatch,
                  "Kraus operators differ in shape");
    }
  }
  ComplexMatrix sum = ComplexMatrix::Zero(cols, cols);
  for (const auto& a : kraus) sum += a.adjoint() * a;
  const double defect =
      (sum - ComplexMatrix::Identity(cols, cols)).cwiseAbs().maxCoeff();
  if (defect > kCompletenessAtol) {
    throw Error(errc::not_trace_preserving,
                "completeness defect " + std::to_string(defect), defect);
  }
  return {kraus};
}

DensityOperator apply(const KrausChannel& channel, const DensityOperator& rho) {
  require_dims(channel, rho);
  ComplexMatrix out =
      ComplexMatrix::Zero(channel.dim_out(), channel.dim_out());
  for (const auto& a : channel.kraus) out += a * rho.matrix * a.adjoint();
  return {std::move(out)};
}

DensityOperator environment_state(const KrausChannel& channel,
                                  const DensityOperator& rho) {
  require_dims(channel, rho);
  const Index k = channel.num_kraus();
  ComplexMatrix w(k, k);
  for (Index i = 0; i < k; ++i) {
    const ComplexMatrix b = channel.kraus[i] * rho.matrix;
    for (Index j = 0; j < k; ++j) {
      w(i, j) = (b.array() * channel.kraus[j].array().conjugate()).sum();
    }
  }
  return {std::move(w)};
}

Isometry stinespring_isometry(const KrausChannel& channel) {
  const Index k = channel.num_kraus();
  const Index out = channel.dim_out();
  const Index in = channel.dim_in();
  ComplexMatrix v(out * k, in);
  for (Index e = 0; e < k; ++e)
    for (Index i = 0; i < out; ++i) v.row(i * k + e) = channel.kraus[e].row(i);
  return {std::move(v), k};
}

MultipartiteState dilate(const KrausChannel& channel,
                         const DensityOperator& rho) {
  require_dims(channel, rho);
  const Isometry v = stinespring_isometry(channel);
  return {{channel.dim_out(), channel.num_kraus()},
          v.matrix * rho.matrix * v.matrix.adjoint()};
}

KrausChannel tensor_channels(const KrausChannel& a, const KrausChannel& b) {
  std::vector<ComplexMatrix> kraus;
  kraus.reserve(a.kraus.size() * b.kraus.size());
  for (const auto& ka : a.kraus)
    for (const auto& kb : b.kraus) kraus.push_back(kron(ka, kb));
  return {std::move(kraus)};
}

KrausChannel identity_channel(Index dim) {
  if (dim < 1) throw Error(errc::bad_param, "dimension must be >= 1");
  return {{ComplexMatrix::Identity(dim, dim)}};
}

KrausChannel depolarizing_channel(Index dim, double p) {
  if (dim < 2) throw Error(errc::bad_param, "depolarizing needs dim >= 2");
  if (p < 0.0 || p > 1.0) {
    throw Error(errc::bad_param, "p must lie in [0, 1]", p);
  }
  const double d2 = static_cast<double>(dim) * static_cast<double>(dim);
  std::vector<ComplexMatrix> kraus;
  kraus.push_back(std::sqrt(1.0 - p + p / d2) *
                  ComplexMatrix::Identity(dim, dim));
  const double w = std::sqrt(p / d2);
  if (dim == 2) {
    ComplexMatrix x(2, 2), y(2, 2), z(2, 2);
    x << 0, 1, 1, 0;
    y << 0, Complex(0, -1), Complex(0, 1), 0;
    z << 1, 0, 0, -1;
    kraus.push_back(w * x);
    kraus.push_back(w * y);
    kraus.push_back(w * z);
  } else {
    // Discrete Weyl unitaries X^a Z^b, (a, b) != (0, 0).
    for (Index a = 0; a < dim; ++a) {
      for (Index b = 0; b < dim; ++b) {
        if (a == 0 && b == 0) continue;
        ComplexMatrix op = ComplexMatrix::Zero(dim, dim);
        for (Index j = 0; j < dim; ++j) {
          const double phase = 2.0 * std::numbers::pi *
                               static_cast<double>((j * b) % dim) /
                               static_cast<double>(dim);
          op((j + a) % dim, j) = Complex(std::cos(phase), std::sin(phase));
        }
        kraus.push_back(w * op);
      }
    }
  }
  return {std::move(kraus)};
}

KrausChannel dephasing_channel(double p) {
  if (p < 0.0 || p > 1.0) {
    throw Error(errc::bad_param, "p must lie in [0, 1]", p);
  }
  ComplexMatrix z(2, 2);
  z << 1, 0, 0, -1;
  return {{std::sqrt(1.0 - p) * ComplexMatrix::Identity(2, 2),
           std::sqrt(p) * z}};
}

KrausChannel amplitude_damping_channel(double gamma) {
  if (gamma < 0.0 || gamma > 1.0) {
    throw Error(errc::bad_param, "gamma must lie in [0, 1]", gamma);
  }
  ComplexMatrix a0(2, 2), a1(2, 2);
  a0 << 1, 0, 0, std::sqrt(1.0 - gamma);
  a1 << 0, std::sqrt(gamma), 0, 0;
  return {{std::move(a0), std::move(a1)}};
}

KrausChannel unitary_channel(const ComplexMatrix& u) {
  if (u.rows() != u.cols() || u.rows() < 1) {
    throw Error(errc::not_unitary, "matrix is not square");
  }
  const double defect =
      (u.adjoint() * u - ComplexMatrix::Identity(u.cols(), u.cols()))
          .cwiseAbs()
          .maxCoeff();
  if (defect > kIsometryAtol) {
    throw Error(errc::not_unitary, "unitarity defect " + std::to_string(defect),
                defect);
  }
  return {{u}};
}

KrausChannel make_channel(ChannelKind kind, Index dim,
                          const std::vector<double>& params) {
  auto one_param = [&](const char* name) {
    if (params.size() != 1) {
      throw Error(errc::bad_param,
                  std::string(name) + " takes exactly one parameter");
    }
    return params.front();
  };
  switch (kind) {
    case ChannelKind::identity:
      return identity_channel(dim);
    case ChannelKind::depolarizing:
      return depolarizing_channel(dim, one_param("depolarizing"));
    case ChannelKind::dephasing:
      if (dim != 2) throw Error(errc::bad_param, "dephasing needs dim == 2");
      return dephasing_channel(one_param("dephasing"));
    case ChannelKind::amplitude_damping:
      if (dim != 2) {
        throw Error(errc::bad_param, "amplitude damping needs dim == 2");
      }
      return amplitude_damping_channel(one_param("amplitude_damping"));
    case ChannelKind::unitary:
      throw Error(errc::bad_param, "unitary kind takes a matrix, not scalars");
  }
  throw Error(errc::bad_param, "unknown channel kind");
}

KrausChannel make_channel(ChannelKind kind, const ComplexMatrix& unitary) {
  if (kind != ChannelKind::unitary) {
    throw Error(errc::bad_param, "matrix parameter is for the unitary kind");
  }
  return unitary_channel(unitary);
}

KrausChannel random_channel(Index dim, Index env_dim, Rng& rng) {
  if (dim < 1) throw Error(errc::bad_param, "dimension must be >= 1");
  if (env_dim < 1) throw Error(errc::bad_param, "env_dim must be >= 1");
  const Index rows = dim * env_dim;
  ComplexMatrix g(rows, dim);
  for (Index i = 0; i < rows; ++i)
    for (Index j = 0; j < dim; ++j) g(i, j) = rng.complex_normal();
  Eigen::HouseholderQR<ComplexMatrix> qr(g);
  ComplexMatrix v =
      qr.householderQ() * ComplexMatrix::Identity(rows, dim);
  const ComplexMatrix r = qr.matrixQR();
  for (Index j = 0; j < dim; ++j) {
    const Complex rjj = r(j, j);
    const double mag = std::abs(rjj);
    v.col(j) *= (mag > 0.0) ? rjj / mag : Complex(1.0, 0.0);
  }
  // Unstack V = sum_k A_k (x) |k>.
  std::vector<ComplexMatrix> kraus(env_dim, ComplexMatrix(dim, dim));
  for (Index e = 0; e < env_dim; ++e)
    for (Index i = 0; i < dim; ++i) kraus[e].row(i) = v.row(i * env_dim + e);
  return {std::move(kraus)};
}

KrausChannel random_channel(Index dim, Index env_dim, std::uint64_t seed) {
  Rng rng(seed);
  return random_channel(dim, env_dim, rng);
}

KrausChannel remix_kraus(const KrausChannel& channel, const ComplexMatrix& u) {
  const Index k = channel.num_kraus();
  if (u.rows() != k || u.cols() != k) {
    throw Error(errc::not_unitary,
                "remix matrix must be " + std::to_string(k) + "x" +
                    std::to_string(k));
  }
  const double defect =
      (u.adjoint() * u - ComplexMatrix::Identity(k, k)).cwiseAbs().maxCoeff();
  if (defect > kIsometryAtol) {
    throw Error(errc::not_unitary, "unitarity defect " + std::to_string(defect),
                defect);
  }
  std::vector<ComplexMatrix> kraus(
      k, ComplexMatrix::Zero(channel.dim_out(), channel.dim_in()));
  for (Index j = 0; j < k; ++j)
    for (Index i = 0; i < k; ++i) kraus[j] += u(j, i) * channel.kraus[i];
  return {std::move(kraus)};
}

}  // namespace qpriv

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

#ifndef QPRIV_STATE_HPP
#define QPRIV_STATE_HPP

#include <complex>
#include <cstdint>
#include <vector>

#include <Eigen/Dense>

#include "qpriv/error.hpp"
#include "qpriv/rng.hpp"

namespace qpriv {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;
using Index = Eigen::Index;

// Validation tolerances for density operators. Eigensolvers on well-formed
// inputs produce O(1e-12) noise; 1e-8 leaves margin without accepting bad
// physics. Eigenvalues in [kEigenvalueFloor, 0) are clamped to zero before
// any entropy or purification step.
inline constexpr double kHermitianAtol = 1e-8;
inline constexpr double kEigenvalueFloor = -1e-8;
inline constexpr double kTraceAtol = 1e-8;

/// Density operator: Hermitian, positive-semidefinite, unit-trace matrix.
/// Construct through validate_density() for untrusted input; library
/// operations build outputs directly (valid by construction).
struct DensityOperator {
  ComplexMatrix matrix;

  Index dim() const { return matrix.rows(); }
};

/// Normalized state vector.
struct PureState {
  ComplexVector amplitudes;

  Index dim() const { return amplitudes.size(); }
  DensityOperator density() const {
    return {amplitudes * amplitudes.adjoint()};
  }
};

/// Density operator with a declared tensor factorization. The matrix acts on
/// the Kronecker-ordered product space of dimension prod(dims).
struct MultipartiteState {
  std::vector<Index> dims;
  ComplexMatrix matrix;

  Index total_dim() const { return matrix.rows(); }
  DensityOperator joint() const { return {matrix}; }
};

/// States with attached probabilities (equal dimensions, probs sum to 1).
struct Ensemble {
  std::vector<double> probs;
  std::vector<DensityOperator> states;
};

/// Kronecker product.
ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);

/// Checks the density-operator invariants in order (square, Hermitian within
/// kHermitianAtol, eigenvalues >= kEigenvalueFloor, trace within kTraceAtol
/// of one) and throws Error naming the first violation with its measured
/// magnitude.
DensityOperator validate_density(const ComplexMatrix& m);

/// validate_density plus the factorization invariants (dims all positive,
/// product equal to the matrix dimension).
MultipartiteState validate_multipartite(const std::vector<Index>& dims,
                                        const ComplexMatrix& m);

Ensemble make_ensemble(std::vector<double> probs,
                       std::vector<DensityOperator> states);

/// a (x) b with dims {dim a, dim b}.
MultipartiteState tensor(const DensityOperator& a, const DensityOperator& b);

/// Reduced state on the kept factors, in the original factor order.
/// `keep` is treated as a set; indices must be valid and nonempty.
MultipartiteState partial_trace(const MultipartiteState& s,
                                std::vector<int> keep);

/// tr|a - b|: sum of singular values of the difference. No 1/2 factor.
double trace_distance(const DensityOperator& a, const DensityOperator& b);

/// Pure state on dim^2 whose reduction over the second factor is rho.
/// The i-th largest eigenvector pairs with environment basis vector |i>,
/// so a pure input purifies to (input) (x) |0>.
PureState purify(const DensityOperator& rho);

// Seeded generators (Ginibre construction): G G^dag / tr(G G^dag) with G of
// shape dim x rank. Deterministic per seed; the Rng overloads draw from an
// existing stream.
DensityOperator random_density(Index dim, Index rank, std::uint64_t seed);
DensityOperator random_density(Index dim, Index rank, Rng& rng);
PureState random_pure(Index dim, std::uint64_t seed);
PureState random_pure(Index dim, Rng& rng);

/// Haar-style random unitary: QR of a Ginibre matrix with the R-diagonal
/// phase fix.
ComplexMatrix random_unitary(Index dim, Rng& rng);

}  // namespace qpriv

#endif  // QPRIV_STATE_HPP

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

#include "qpriv/state.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

namespace qpriv {

const char* to_string(errc code) noexcept {
  switch (code) {
    case errc::not_square: return "NotSquare";
    case errc::not_hermitian: return "NotHermitian";
    case errc::negative_eigenvalue: return "NegativeEigenvalue";
    case errc::trace_not_one: return "TraceNotOne";
    case errc::dim_mismatch: return "DimMismatch";
    case errc::bad_index: return "BadIndex";
    case errc::bad_rank: return "BadRank";
    case errc::empty_kraus: return "EmptyKraus";
    case errc::shape_mismatch: return "ShapeMismatch";
    case errc::not_trace_preserving: return "NotTracePreserving";
    case errc::not_unitary: return "NotUnitary";
    case errc::bad_param: return "BadParam";
    case errc::out_of_range: return "OutOfRange";
    case errc::negative_entropy: return "NegativeEntropy";
    case errc::bad_fidelity: return "BadF";
    case errc::bad_dimension: return "BadDim";
    case errc::length_mismatch: return "LengthMismatch";
    case errc::factor_mismatch: return "FactorMismatch";
    case errc::bad_window: return "BadWindow";
    case errc::condition_violated: return "ConditionViolated";
    case errc::unknown_check: return "UnknownCheck";
    case errc::parse_error: return "ParseError";
    case errc::io_error: return "IoError";
  }
  return "UnknownError";
}

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
  ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Index i = 0; i < a.rows(); ++i)
    for (Index j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

DensityOperator validate_density(const ComplexMatrix& m) {
  if (m.rows() != m.cols() || m.rows() < 1) {
    throw Error(errc::not_square,
                "matrix is " + std::to_string(m.rows()) + "x" +
                    std::to_string(m.cols()));
  }
  const double herm_defect = (m - m.adjoint()).cwiseAbs().maxCoeff();
  if (herm_defect > kHermitianAtol) {
    throw Error(errc::not_hermitian,
                "hermiticity defect " + std::to_string(herm_defect),
                herm_defect);
  }
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(m,
                                                  Eigen::EigenvaluesOnly);
  const double lambda_min = es.eigenvalues().minCoeff();
  if (lambda_min < kEigenvalueFloor) {
    throw Error(errc::negative_eigenvalue,
                "smallest eigenvalue " + std::to_string(lambda_min),
                lambda_min);
  }
  const double trace_defect = std::abs(m.trace().real() - 1.0);
  if (trace_defect > kTraceAtol) {
    throw Error(errc::trace_not_one,
                "trace deviates from one by " + std::to_string(trace_defect),
                trace_defect);
  }
  return {m};
}

MultipartiteState validate_multipartite(const std::vector<Index>& dims,
                                        const ComplexMatrix& m) {
  if (dims.empty()) {
    throw Error(errc::bad_param, "dims list is empty");
  }
  Index total = 1;
  for (Index d : dims) {
    if (d < 1) throw Error(errc::bad_param, "factor dimensions must be >= 1");
    total *= d;
  }
  DensityOperator rho = validate_density(m);
  if (total != rho.dim()) {
    throw Error(errc::dim_mismatch,
                "product of dims is " + std::to_string(total) +
                    " but matrix dimension is " + std::to_string(rho.dim()));
  }
  return {dims, std::move(rho.matrix)};
}

Ensemble make_ensemble(std::vector<double> probs,
                       std::vector<DensityOperator> states) {
  if (probs.empty() || probs.size() != states.size()) {
    throw Error(errc::length_mismatch,
                "need equally many probabilities and states");
  }
  double sum = 0.0;
  for (double p : probs) {
    if (p < 0.0) throw Error(errc::bad_param, "negative probability", p);
    sum += p;
  }
  if (std::abs(sum - 1.0) > 1e-10) {
    throw Error(errc::bad_param, "probabilities sum to " + std::to_string(sum),
                std::abs(sum - 1.0));
  }
  const Index d = states.front().dim();
  for (const auto& s : states) {
    if (s.dim() != d) {
      throw Error(errc::dim_mismatch, "ensemble states differ in dimension");
    }
  }
  return {std::move(probs), std::move(states)};
}

MultipartiteState tensor(const DensityOperator& a, const DensityOperator& b) {
  return {{a.dim(), b.dim()}, kron(a.matrix, b.matrix)};
}

MultipartiteState partial_trace(const MultipartiteState& s,
                                std::vector<int> keep) {
  const int n = static_cast<int>(s.dims.size());
  std::sort(keep.begin(), keep.end());
  keep.erase(std::unique(keep.begin(), keep.end()), keep.end());
  if (keep.empty()) {
    throw Error(errc::bad_index, "keep set is empty");
  }
  for (int f : keep) {
    if (f < 0 || f >= n) {
      throw Error(errc::bad_index,
                  "factor index " + std::to_string(f) + " out of range");
    }
  }

  std::vector<int> traced;
  for (int f = 0; f < n; ++f) {
    if (!std::binary_search(keep.begin(), keep.end(), f)) traced.push_back(f);
  }

  // Row-index stride of each factor in the Kronecker ordering.
  std::vector<Index> stride(n, 1);
  for (int f = n - 2; f >= 0; --f) stride[f] = stride[f + 1] * s.dims[f + 1];

  // Flat offsets of every kept and every traced multi-index.
  auto offsets = [&](const std::vector<int>& factors) {
    std::vector<Index> off{0};
    for (int f : factors) {
      std::vector<Index> next;
      next.reserve(off.size() * s.dims[f]);
      for (Index base : off)
        for (Index i = 0; i < s.dims[f]; ++i)
          next.push_back(base + i * stride[f]);
      off = std::move(next);
    }
    return off;
  };
  const std::vector<Index> kept_off = offsets(keep);
  const std::vector<Index> traced_off = offsets(traced);

  const auto dk = static_cast<Index>(kept_off.size());
  ComplexMatrix out = ComplexMatrix::Zero(dk, dk);
  for (Index r = 0; r < dk; ++r)
    for (Index c = 0; c < dk; ++c)
      for (Index t : traced_off)
        out(r, c) += s.matrix(kept_off[r] + t, kept_off[c] + t);

  std::vector<Index> out_dims;
  for (int f : keep) out_dims.push_back(s.dims[f]);
  return {std::move(out_dims), std::move(out)};
}

double trace_distance(const DensityOperator& a, const DensityOperator& b) {
  if (a.dim() != b.dim()) {
    throw Error(errc::dim_mismatch, "states differ in dimension");
  }
  // The difference is Hermitian, so its singular values are the absolute
  // eigenvalues.
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(a.matrix - b.matrix,
                                                  Eigen::EigenvaluesOnly);
  return es.eigenvalues().cwiseAbs().sum();
}

PureState purify(const DensityOperator& rho) {
  const Index d = rho.dim();
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(rho.matrix);
  ComplexVector amps = ComplexVector::Zero(d * d);
  // Eigen sorts ascending; pair the largest eigenvalue with |0>.
  for (Index k = 0; k < d; ++k) {
    const Index src = d - 1 - k;
    const double lambda = std::max(es.eigenvalues()(src), 0.0);
    const double w = std::sqrt(lambda);
    for (Index a = 0; a < d; ++a) {
      amps(a * d + k) = w * es.eigenvectors()(a, src);
    }
  }
  return {std::move(amps)};
}

DensityOperator random_density(Index dim, Index rank, Rng& rng) {
  if (dim < 1) throw Error(errc::bad_param, "dimension must be >= 1");
  if (rank < 1 || rank > dim) {
    throw Error(errc::bad_rank,
                "rank " + std::to_string(rank) + " not in [1, " +
                    std::to_string(dim) + "]");
  }
  ComplexMatrix g(dim, rank);
  for (Index i = 0; i < dim; ++i)
    for (Index j = 0; j < rank; ++j) g(i, j) = rng.complex_normal();
  ComplexMatrix m = g * g.adjoint();
  m = ((m + m.adjoint()) / 2.0).eval();  // scrub rounding asymmetry
  m /= m.trace().real();
  return {std::move(m)};
}

DensityOperator random_density(Index dim, Index rank, std::uint64_t seed) {
  Rng rng(seed);
  return random_density(dim, rank, rng);
}

PureState random_pure(Index dim, Rng& rng) {
  if (dim < 1) throw Error(errc::bad_param, "dimension must be >= 1");
  ComplexVector v(dim);
  for (Index i = 0; i < dim; ++i) v(i) = rng.complex_normal();
  v.normalize();
  return {std::move(v)};
}

PureState random_pure(Index dim, std::uint64_t seed) {
  Rng rng(seed);
  return random_pure(dim, rng);
}

ComplexMatrix random_unitary(Index dim, Rng& rng) {
  ComplexMatrix g(dim, dim);
  for (Index i = 0; i < dim; ++i)
    for (Index j = 0; j < dim; ++j) g(i, j) = rng.complex_normal();
  Eigen::HouseholderQR<ComplexMatrix> qr(g);
  ComplexMatrix q = qr.householderQ();
  const ComplexMatrix r = qr.matrixQR();
  for (Index j = 0; j < dim; ++j) {
    const Complex rjj = r(j, j);
    const double mag = std::abs(rjj);
    q.col(j) *= (mag > 0.0) ? rjj / mag : Complex(1.0, 0.0);
  }
  return q;
}

}  // namespace qpriv

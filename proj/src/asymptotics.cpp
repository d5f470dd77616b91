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

#include "qpriv/asymptotics.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

namespace qpriv {

namespace {

// Up to 64 sample points covering 1..n_max, geometrically spaced, always
// including both ends. Trace distances of mixing sequences are monotone in
// the schedule weight, so a sparse scan suffices for the monotonicity check.
std::vector<long> sample_indices(long n_max) {
  std::vector<long> ns;
  if (n_max <= 64) {
    for (long n = 1; n <= n_max; ++n) ns.push_back(n);
    return ns;
  }
  const double step = std::pow(static_cast<double>(n_max), 1.0 / 63.0);
  double x = 1.0;
  for (int i = 0; i < 64; ++i, x *= step) {
    ns.push_back(std::min<long>(n_max, std::lround(x)));
  }
  ns.push_back(n_max);
  std::sort(ns.begin(), ns.end());
  ns.erase(std::unique(ns.begin(), ns.end()), ns.end());
  return ns;
}

}  // namespace

double MixingSequence::weight(long n) const {
  switch (schedule) {
    case MixingSchedule::harmonic:
      return 1.0 / static_cast<double>(n);
    case MixingSchedule::geometric:
      return std::pow(ratio, static_cast<double>(n));
  }
  return 0.0;
}

DensityOperator MixingSequence::element(long n) const {
  if (n < 1 || n > n_max) {
    throw Error(errc::out_of_range,
                "sequence index " + std::to_string(n) + " outside [1, " +
                    std::to_string(n_max) + "]");
  }
  const double a = weight(n);
  return {(1.0 - a) * base.matrix + a * perturbation.matrix};
}

MixingSequence make_mixing_sequence(DensityOperator base,
                                    DensityOperator perturbation,
                                    MixingSchedule schedule, long n_max,
                                    double ratio) {
  if (base.dim() != perturbation.dim()) {
    throw Error(errc::dim_mismatch,
                "base and perturbation differ in dimension");
  }
  if (n_max < 2) throw Error(errc::bad_param, "n_max must be >= 2");
  if (schedule == MixingSchedule::geometric &&
      (ratio <= 0.0 || ratio >= 1.0)) {
    throw Error(errc::bad_param, "geometric ratio must lie in (0, 1)", ratio);
  }
  return {std::move(base), std::move(perturbation), schedule, ratio, n_max};
}

bool check_condition_i(const MixingSequence& seq, double tol) {
  double prev = -1.0;
  bool first = true;
  for (long n : sample_indices(seq.n_max)) {
    const double dist = trace_distance(seq.element(n), seq.base);
    if (!first && dist > prev + 1e-12) return false;
    prev = dist;
    first = false;
  }
  return prev < tol;
}

bool semicontinuity_check(const MixingSequence& seq, long tail_start,
                          Bits tol) {
  if (tail_start < 1 || tail_start >= seq.n_max) {
    throw Error(errc::bad_window,
                "tail_start " + std::to_string(tail_start) +
                    " outside [1, n_max)");
  }
  const Bits s_base = von_neumann_entropy(seq.base);
  for (long n = tail_start; n <= seq.n_max; ++n) {
    if (von_neumann_entropy(seq.element(n)) < s_base - tol) return false;
  }
  return true;
}

Lemma1Report lemma1_experiment(const MixingSequence& seq_b,
                               const MixingSequence& seq_e,
                               const DensityOperator& rho_star_b,
                               long tail_start, Bits tol) {
  if (seq_b.n_max != seq_e.n_max) {
    throw Error(errc::bad_param, "sequences must share n_max");
  }
  if (rho_star_b.dim() != seq_b.base.dim()) {
    throw Error(errc::dim_mismatch,
                "reference state dimension does not match the B sequence");
  }
  const long n_max = seq_b.n_max;
  if (tail_start < 1 || tail_start >= n_max) {
    throw Error(errc::bad_window,
                "tail_start " + std::to_string(tail_start) +
                    " outside [1, n_max)");
  }
  if (!check_condition_i(seq_b, tol)) {
    throw Error(errc::condition_violated,
                "condition (i) fails for the B sequence: trace distances do "
                "not converge below tol");
  }
  if (!check_condition_i(seq_e, tol)) {
    throw Error(errc::condition_violated,
                "condition (i) fails for the E sequence: trace distances do "
                "not converge below tol");
  }

  const Bits s_star = von_neumann_entropy(rho_star_b);
  const Bits s_b_limit = von_neumann_entropy(seq_b.base);
  const Bits s_e_limit = von_neumann_entropy(seq_e.base);

  Bits max_sb = -1.0, max_se = -1.0;
  Bits min_diff = 0.0, min_negsum = 0.0;
  bool first = true;
  for (long n = tail_start; n <= n_max; ++n) {
    const Bits sb = von_neumann_entropy(seq_b.element(n));
    const Bits se = von_neumann_entropy(seq_e.element(n));
    max_sb = std::max(max_sb, sb);
    max_se = std::max(max_se, se);
    min_diff = first ? sb - se : std::min(min_diff, sb - se);
    min_negsum = first ? -sb - se : std::min(min_negsum, -sb - se);
    first = false;
  }
  if (max_sb > s_star + tol) {
    throw Error(errc::condition_violated,
                "condition (ii) fails for the B sequence: tail entropy " +
                    std::to_string(max_sb) + " exceeds the reference " +
                    std::to_string(s_star),
                max_sb - s_star);
  }
  if (max_se > s_e_limit + tol) {
    throw Error(errc::condition_violated,
                "condition (ii) fails for the E sequence: tail entropy " +
                    std::to_string(max_se) + " exceeds the limit " +
                    std::to_string(s_e_limit),
                max_se - s_e_limit);
  }

  Lemma1Report report;
  report.n_max = n_max;
  report.tail_start = tail_start;
  report.tail_min_diff = min_diff;
  report.limit_diff = s_b_limit - s_e_limit;
  report.tail_min_negsum = min_negsum;
  report.limit_negsum = -s_star - s_e_limit;
  report.condition_i_final =
      std::max(trace_distance(seq_b.element(n_max), seq_b.base),
               trace_distance(seq_e.element(n_max), seq_e.base));
  report.conditions_hold =
      min_diff >= report.limit_diff - tol &&
      min_negsum >= report.limit_negsum - tol;
  return report;
}

}  // namespace qpriv

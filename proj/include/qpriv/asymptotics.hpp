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

#ifndef QPRIV_ASYMPTOTICS_HPP
#define QPRIV_ASYMPTOTICS_HPP

#include "qpriv/entropy.hpp"
#include "qpriv/state.hpp"

namespace qpriv {

enum class MixingSchedule {
  harmonic,   // a_n = 1/n
  geometric,  // a_n = r^n, r in (0, 1)
};

/// Trace-norm-convergent sequence rho_n = (1 - a_n) base + a_n perturbation,
/// n = 1..n_max. Elements are computed lazily per index, so n_max can be
/// large without holding n_max matrices.
struct MixingSequence {
  DensityOperator base;
  DensityOperator perturbation;
  MixingSchedule schedule = MixingSchedule::harmonic;
  double ratio = 0.5;  // geometric only
  long n_max = 2;

  double weight(long n) const;
  DensityOperator element(long n) const;
};

/// Finite-n standing of the asymptotic entropy-difference inequalities,
/// with liminf/limsup replaced by min/max over the declared tail window
/// [tail_start, n_max].
struct Lemma1Report {
  long n_max = 0;
  long tail_start = 0;
  Bits tail_min_diff = 0.0;     // min over tail of S(B_n) - S(E_n)
  Bits limit_diff = 0.0;        // S(B limit) - S(E limit)
  Bits tail_min_negsum = 0.0;   // min over tail of -S(B_n) - S(E_n)
  Bits limit_negsum = 0.0;      // -S(reference B) - S(E limit)
  double condition_i_final = 0.0;  // largest final trace distance to a limit
  bool conditions_hold = false;    // both tail inequalities within tol
};

MixingSequence make_mixing_sequence(DensityOperator base,
                                    DensityOperator perturbation,
                                    MixingSchedule schedule, long n_max,
                                    double ratio = 0.5);

/// Convergence in trace norm: the final distance to the base is below tol
/// and sampled distances are nonincreasing.
bool check_condition_i(const MixingSequence& seq, double tol);

/// Tail-window form of entropy lower semicontinuity:
/// min over n in [tail_start, n_max] of S(rho_n) >= S(base) - tol.
bool semicontinuity_check(const MixingSequence& seq, long tail_start,
                          Bits tol);

/// Runs the full finite-n experiment on a pair of sequences. Preconditions
/// (convergence of both sequences; tail entropies dominated by S(rho_star_b)
/// and S of the E limit, within tol) are checked and throw
/// errc::condition_violated naming the failed condition. The report compares
/// the tail minima of S(B_n) - S(E_n) and -S(B_n) - S(E_n) against their
/// limiting right-hand sides.
Lemma1Report lemma1_experiment(const MixingSequence& seq_b,
                               const MixingSequence& seq_e,
                               const DensityOperator& rho_star_b,
                               long tail_start, Bits tol);

}  // namespace qpriv

#endif  // QPRIV_ASYMPTOTICS_HPP

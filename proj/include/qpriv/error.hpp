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

#ifndef QPRIV_ERROR_HPP
#define QPRIV_ERROR_HPP

#include <stdexcept>
#include <string>

namespace qpriv {

/// Machine-readable failure classes. Every throwing operation names one.
enum class errc {
  // state validation
  not_square,
  not_hermitian,
  negative_eigenvalue,
  trace_not_one,
  dim_mismatch,
  bad_index,
  bad_rank,
  // channel validation
  empty_kraus,
  shape_mismatch,
  not_trace_preserving,
  not_unitary,
  bad_param,
  // entropic quantities
  out_of_range,
  negative_entropy,
  // privacy bounds
  bad_fidelity,
  bad_dimension,
  length_mismatch,
  factor_mismatch,
  // asymptotic experiments
  bad_window,
  condition_violated,
  // check suites
  unknown_check,
  // serialization
  parse_error,
  io_error,
};

const char* to_string(errc code) noexcept;

/// Exception carrying an error class and, where meaningful, the measured
/// violation magnitude (hermiticity defect, smallest eigenvalue, ...).
class Error : public std::runtime_error {
 public:
  Error(errc code, const std::string& what, double magnitude = 0.0)
      : std::runtime_error(std::string(to_string(code)) + ": " + what),
        code_(code),
        magnitude_(magnitude) {}

  errc code() const noexcept { return code_; }
  double magnitude() const noexcept { return magnitude_; }

 private:
  errc code_;
  double magnitude_;
};

}  // namespace qpriv

#endif  // QPRIV_ERROR_HPP

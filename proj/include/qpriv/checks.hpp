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

#ifndef QPRIV_CHECKS_HPP
#define QPRIV_CHECKS_HPP

#include <optional>
#include <string_view>
#include <vector>

#include "qpriv/privacy.hpp"

namespace qpriv {

/// Theorem-backed inequalities and identities exercised as randomized
/// suites. Every check reports slack = (weak side) - (strong side), so
/// slack >= 0 means the inequality holds; identity checks report the
/// negated absolute deviation.
enum class CheckName {
  araki_lieb,      // S(AB) >= |S(A) - S(B)|
  subadditivity,   // S(AB) <= S(A) + S(B)
  quantum_fano,    // S(rho, eps) <= H(F) + (1-F) log2(d^2-1)
  theorem1_chain,  // multipartite chain lhs >= rhs
  additivity,      // coherent information additive on products
  kraus_remix,     // F and S_E invariant under Kraus remixing
  env_identity,    // W matrix equals the Stinespring dilation reduction
  fidelity_pure,   // F(pure rho) = <psi| eps(rho) |psi>
};

struct CheckSpec {
  CheckName name = CheckName::araki_lieb;
  long trials = 1;
  Index dim = 2;
  Index env_dim = 2;
  std::uint64_t seed = 0;
  double atol = 1e-9;
};

/// Suite outcome. violations counts trials with slack < -atol; worst_margin
/// is the most negative slack seen (reported even with zero violations).
struct CheckReport {
  CheckSpec spec;
  long violations = 0;
  double worst_margin = 0.0;
  double elapsed_ms = 0.0;
};

const char* to_string(CheckName name) noexcept;
std::optional<CheckName> check_name_from_string(std::string_view s) noexcept;

/// All check names, in declaration order.
const std::vector<CheckName>& all_check_names();

/// Runs one suite. Per-trial instances are generated from seed + trial
/// index, so results do not depend on execution order.
CheckReport run_check(const CheckSpec& spec);

/// Every check at dims {2, 3} with a shared seed. Success means zero
/// violations in total.
std::vector<CheckReport> run_all(std::uint64_t seed, long trials);

}  // namespace qpriv

#endif  // QPRIV_CHECKS_HPP

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

#include "qpriv/checks.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <string>

namespace qpriv {

namespace {

MultipartiteState random_bipartite(Index dim, Rng& rng) {
  const Index total = dim * dim;
  const Index rank = rng.uniform_int(1, total);
  DensityOperator rho = random_density(total, rank, rng);
  return {{dim, dim}, std::move(rho.matrix)};
}

double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b) {
  return (a - b).cwiseAbs().maxCoeff();
}

double clamp01(double x) { return std::clamp(x, 0.0, 1.0); }

double trial_slack(const CheckSpec& spec, Rng& rng) {
  const Index d = spec.dim;
  switch (spec.name) {
    case CheckName::araki_lieb: {
      const MultipartiteState ab = random_bipartite(d, rng);
      const Bits s_ab = von_neumann_entropy(ab);
      const Bits s_a = von_neumann_entropy(partial_trace(ab, {0}));
      const Bits s_b = von_neumann_entropy(partial_trace(ab, {1}));
      return s_ab - std::abs(s_a - s_b);
    }
    case CheckName::subadditivity: {
      const MultipartiteState ab = random_bipartite(d, rng);
      const Bits s_ab = von_neumann_entropy(ab);
      const Bits s_a = von_neumann_entropy(partial_trace(ab, {0}));
      const Bits s_b = von_neumann_entropy(partial_trace(ab, {1}));
      return s_a + s_b - s_ab;
    }
    case CheckName::quantum_fano: {
      const DensityOperator rho =
          random_density(d, rng.uniform_int(1, d), rng);
      const KrausChannel channel = random_channel(d, spec.env_dim, rng);
      const double f = clamp01(entanglement_fidelity(rho, channel));
      const double d2m1 = static_cast<double>(d) * static_cast<double>(d) - 1.0;
      return binary_entropy(f) + (1.0 - f) * std::log2(d2m1) -
             entropy_exchange(rho, channel);
    }
    case CheckName::theorem1_chain: {
      const MultipartiteState rho_b = random_bipartite(d, rng);
      const MultipartiteState rho_e = random_bipartite(d, rng);
      const MultipartiteBoundReport rep =
          multipartite_chain_check(rho_b, rho_e);
      return rep.lhs - rep.rhs;
    }
    case CheckName::additivity: {
      std::vector<DensityOperator> states;
      std::vector<KrausChannel> channels;
      for (int i = 0; i < 2; ++i) {
        states.push_back(random_density(d, rng.uniform_int(1, d), rng));
        channels.push_back(random_channel(d, spec.env_dim, rng));
      }
      const AdditivityResult res = additivity_check(states, channels);
      return -std::abs(res.lhs - res.rhs);
    }
    case CheckName::kraus_remix: {
      const DensityOperator rho =
          random_density(d, rng.uniform_int(1, d), rng);
      const KrausChannel channel = random_channel(d, spec.env_dim, rng);
      const KrausChannel remixed =
          remix_kraus(channel, random_unitary(spec.env_dim, rng));
      const double df = std::abs(entanglement_fidelity(rho, channel) -
                                 entanglement_fidelity(rho, remixed));
      const double ds = std::abs(entropy_exchange(rho, channel) -
                                 entropy_exchange(rho, remixed));
      const double dmap =
          max_abs_diff(apply(channel, rho).matrix, apply(remixed, rho).matrix);
      return -std::max({df, ds, dmap});
    }
    case CheckName::env_identity: {
      const DensityOperator rho =
          random_density(d, rng.uniform_int(1, d), rng);
      const KrausChannel channel = random_channel(d, spec.env_dim, rng);
      const MultipartiteState dilated = dilate(channel, rho);
      const double d_env =
          max_abs_diff(environment_state(channel, rho).matrix,
                       partial_trace(dilated, {1}).matrix);
      const double d_out = max_abs_diff(apply(channel, rho).matrix,
                                        partial_trace(dilated, {0}).matrix);
      return -std::max(d_env, d_out);
    }
    case CheckName::fidelity_pure: {
      const PureState psi = random_pure(d, rng);
      const DensityOperator rho = psi.density();
      const KrausChannel channel = random_channel(d, spec.env_dim, rng);
      const double f = entanglement_fidelity(rho, channel);
      const double oracle =
          (psi.amplitudes.adjoint() * apply(channel, rho).matrix *
           psi.amplitudes)(0)
              .real();
      return -std::abs(f - oracle);
    }
  }
  throw Error(errc::unknown_check, "unhandled check name");
}

}  // namespace

const char* to_string(CheckName name) noexcept {
  switch (name) {
    case CheckName::araki_lieb: return "araki_lieb";
    case CheckName::subadditivity: return "subadditivity";
    case CheckName::quantum_fano: return "quantum_fano";
    case CheckName::theorem1_chain: return "theorem1_chain";
    case CheckName::additivity: return "additivity";
    case CheckName::kraus_remix: return "kraus_remix";
    case CheckName::env_identity: return "env_identity";
    case CheckName::fidelity_pure: return "fidelity_pure";
  }
  return "unknown";
}

const std::vector<CheckName>& all_check_names() {
  static const std::vector<CheckName> names = {
      CheckName::araki_lieb,    CheckName::subadditivity,
      CheckName::quantum_fano,  CheckName::theorem1_chain,
      CheckName::additivity,    CheckName::kraus_remix,
      CheckName::env_identity,  CheckName::fidelity_pure,
  };
  return names;
}

std::optional<CheckName> check_name_from_string(std::string_view s) noexcept {
  for (CheckName name : all_check_names()) {
    if (s == to_string(name)) return name;
  }
  return std::nullopt;
}

CheckReport run_check(const CheckSpec& spec) {
  if (spec.trials < 1) throw Error(errc::bad_param, "trials must be >= 1");
  if (spec.atol <= 0.0) throw Error(errc::bad_param, "atol must be > 0");
  if (spec.dim < 2) throw Error(errc::bad_param, "dim must be >= 2");
  if (spec.env_dim < 1) throw Error(errc::bad_param, "env_dim must be >= 1");

  const auto t0 = std::chrono::steady_clock::now();
  CheckReport report;
  report.spec = spec;
  for (long trial = 0; trial < spec.trials; ++trial) {
    Rng rng(spec.seed + static_cast<std::uint64_t>(trial));
    const double slack = trial_slack(spec, rng);
    if (trial == 0 || slack < report.worst_margin) {
      report.worst_margin = slack;
    }
    if (slack < -spec.atol) ++report.violations;
  }
  const auto t1 = std::chrono::steady_clock::now();
  report.elapsed_ms =
      std::chrono::duration<double, std::milli>(t1 - t0).count();
  return report;
}

std::vector<CheckReport> run_all(std::uint64_t seed, long trials) {
  std::vector<CheckReport> reports;
  for (CheckName name : all_check_names()) {
    for (Index dim : {Index{2}, Index{3}}) {
      CheckSpec spec;
      spec.name = name;
      spec.trials = trials;
      spec.dim = dim;
      spec.env_dim = dim;
      spec.seed = seed;
      spec.atol = (name == CheckName::env_identity) ? 1e-10 : 1e-9;
      reports.push_back(run_check(spec));
    }
  }
  return reports;
}

}  // namespace qpriv

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

#ifndef QPRIV_IO_HPP
#define QPRIV_IO_HPP

#include <filesystem>

#include <json.hpp>

#include "qpriv/asymptotics.hpp"
#include "qpriv/checks.hpp"
#include "qpriv/privacy.hpp"

// JSON documents:
//   state:   {"dims": [d1, ...], "matrix": [[[re, im], ...], ...]}
//   channel: {"dim_in": d, "dim_out": d, "kraus": [matrix, ...]}
// Matrices are row-major: the outer list holds rows, each entry a [re, im]
// pair. Reports serialize with their field names in declaration order.
//
// Malformed documents throw errc::parse_error; documents that parse but
// violate physics invariants throw the validation error codes.

namespace qpriv {

using Json = nlohmann::ordered_json;

Json matrix_to_json(const ComplexMatrix& m);
ComplexMatrix matrix_from_json(const nlohmann::json& j);

Json state_to_json(const MultipartiteState& s);
MultipartiteState state_from_json(const nlohmann::json& j);

Json channel_to_json(const KrausChannel& channel);
KrausChannel channel_from_json(const nlohmann::json& j);

/// File loaders; unreadable paths throw errc::io_error, bad content as above.
MultipartiteState load_state(const std::filesystem::path& path);
KrausChannel load_channel(const std::filesystem::path& path);

Json to_json(const PrivacyBoundReport& report);
Json to_json(const MultipartiteBoundReport& report);
Json to_json(const Lemma1Report& report);
// elapsed_ms stays out of the serialized form so that identical seeds give
// byte-identical output.
Json to_json(const CheckReport& report);

}  // namespace qpriv

#endif  // QPRIV_IO_HPP

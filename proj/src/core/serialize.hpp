// Copyright 2026 The Topoforge Authors
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

#pragma once

#include <json.hpp>

#include "core/basis.hpp"
#include "core/corruption.hpp"
#include "core/perturbation.hpp"
#include "core/phantom.hpp"
#include "core/topology.hpp"

// JSON forms used for provenance blocks and dataset manifests. Unsigned
// 64-bit seeds are stored as JSON integers; doubles round-trip exactly.

namespace topoforge {

nlohmann::json to_json(const PolynomialFamily& family);
nlohmann::json to_json(const BasisSpec& spec);
nlohmann::json to_json(const MaskSpec& spec);
nlohmann::json to_json(const CorruptionSpec& spec);
nlohmann::json to_json(const PhantomSpec& spec);
nlohmann::json to_json(const BettiNumbers& betti);
nlohmann::json to_json(const MetricsReport& report);

PolynomialFamily family_from_json(const nlohmann::json& j);
BasisSpec basis_from_json(const nlohmann::json& j);
MaskSpec mask_spec_from_json(const nlohmann::json& j);
CorruptionSpec corruption_from_json(const nlohmann::json& j);
PhantomSpec phantom_from_json(const nlohmann::json& j);

std::string_view mapping_name(DomainMapping mapping);
std::optional<DomainMapping> parse_mapping(std::string_view name);

}  // namespace topoforge

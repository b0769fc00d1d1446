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

#include "core/serialize.hpp"

#include "core/error.hpp"

namespace topoforge {

using nlohmann::json;

std::string_view mapping_name(DomainMapping mapping) {
  return mapping == DomainMapping::kSymmetricUnit ? "symmetric" : "unit";
}

std::optional<DomainMapping> parse_mapping(std::string_view name) {
  if (name == "symmetric" || name == "symmetric-unit") return DomainMapping::kSymmetricUnit;
  if (name == "unit" || name == "unit-interval") return DomainMapping::kUnitInterval;
  return std::nullopt;
}

json to_json(const PolynomialFamily& family) {
  json j{{"kind", family_name(family.kind)}};
  if (family.kind == PolynomialKind::kHermiteGaussian) {
    j["hermite_exponent"] =
        family.hermite_exponent == HermiteExponent::kStandard ? "standard" : "paper-as-written";
  }
  return j;
}

json to_json(const BasisSpec& spec) {
  return {{"family", to_json(spec.family)},
          {"max_order", spec.max_order},
          {"rank", spec.rank},
          {"mapping", mapping_name(spec.mapping)}};
}

json to_json(const MaskSpec& spec) {
  return {{"basis", to_json(spec.basis)},
          {"dims", spec.dims.axes()},
          {"seed", spec.seed},
          {"coeff_mean", spec.coeff_mean},
          {"coeff_std", spec.coeff_std},
          {"normalization", spec.normalization == Normalization::kMinMaxUnit ? "minmax" : "none"},
          {"rng", "philox4x32-10"}};
}

json to_json(const CorruptionSpec& spec) {
  return {{"noise_std", spec.noise_std},
          {"blob_rate", spec.blob_rate},
          {"blob_radius_min", spec.blob_radius_min},
          {"blob_radius_max", spec.blob_radius_max},
          {"threshold", spec.threshold},
          {"seed", spec.seed}};
}

json to_json(const PhantomSpec& spec) {
  return {{"kind", phantom_name(spec.kind)},
          {"dims", spec.dims.axes()},
          {"radius", spec.radius},
          {"thickness", spec.thickness},
          {"loops", spec.loops},
          {"seed", spec.seed},
          {"jitter", spec.jitter}};
}

json to_json(const BettiNumbers& betti) {
  return {{"b0", betti.b0},
          {"b1", betti.b1},
          {"b2", betti.b2},
          {"fg_connectivity", static_cast<int>(betti.foreground)},
          {"bg_connectivity", static_cast<int>(betti.background)}};
}

json to_json(const MetricsReport& report) {
  return {{"dice", report.dice},
          {"e", report.e},
          {"e0", report.e0},
          {"e1", report.e1},
          {"e2", report.e2},
          {"betti_pred", to_json(report.prediction)},
          {"betti_gt", to_json(report.truth)}};
}

namespace {

template <class F>
auto guarded(const char* what, F&& f) {
  try {
    return f();
  } catch (const json::exception& e) {
    fail(ErrorCode::kBadMetadata, std::string("malformed ") + what + ": " + e.what());
  }
}

}  // namespace

PolynomialFamily family_from_json(const json& j) {
  return guarded("polynomial family", [&] {
    const auto kind = parse_family(j.at("kind").get<std::string>());
    require(kind.has_value(), ErrorCode::kBadMetadata, "unknown polynomial family");
    PolynomialFamily family{*kind};
    if (j.value("hermite_exponent", "standard") == "paper-as-written") {
      family.hermite_exponent = HermiteExponent::kPaperAsWritten;
    }
    return family;
  });
}

BasisSpec basis_from_json(const json& j) {
  return guarded("basis spec", [&] {
    BasisSpec spec;
    spec.family = family_from_json(j.at("family"));
    spec.max_order = j.at("max_order").get<int>();
    spec.rank = j.at("rank").get<int>();
    const auto mapping = parse_mapping(j.at("mapping").get<std::string>());
    require(mapping.has_value(), ErrorCode::kBadMetadata, "unknown domain mapping");
    spec.mapping = *mapping;
    return spec;
  });
}

MaskSpec mask_spec_from_json(const json& j) {
  return guarded("mask spec", [&] {
    MaskSpec spec;
    spec.basis = basis_from_json(j.at("basis"));
    const auto dims = j.at("dims").get<std::vector<std::size_t>>();
    spec.dims = Extent::from(dims);
    spec.seed = j.at("seed").get<std::uint64_t>();
    spec.coeff_mean = j.at("coeff_mean").get<double>();
    spec.coeff_std = j.at("coeff_std").get<double>();
    spec.normalization =
        j.at("normalization").get<std::string>() == "none" ? Normalization::kNone : Normalization::kMinMaxUnit;
    return spec;
  });
}

CorruptionSpec corruption_from_json(const json& j) {
  return guarded("corruption spec", [&] {
    CorruptionSpec spec;
    spec.noise_std = j.at("noise_std").get<double>();
    spec.blob_rate = j.at("blob_rate").get<double>();
    spec.blob_radius_min = j.at("blob_radius_min").get<double>();
    spec.blob_radius_max = j.at("blob_radius_max").get<double>();
    spec.threshold = j.at("threshold").get<double>();
    spec.seed = j.at("seed").get<std::uint64_t>();
    return spec;
  });
}

PhantomSpec phantom_from_json(const json& j) {
  return guarded("phantom spec", [&] {
    PhantomSpec spec;
    const auto kind = parse_phantom(j.at("kind").get<std::string>());
    require(kind.has_value(), ErrorCode::kBadMetadata, "unknown phantom kind");
    spec.kind = *kind;
    spec.dims = Extent::from(j.at("dims").get<std::vector<std::size_t>>());
    spec.radius = j.value("radius", 0.0);
    spec.thickness = j.value("thickness", 0.0);
    spec.loops = j.value("loops", 4);
    spec.seed = j.value("seed", std::uint64_t{0});
    spec.jitter = j.value("jitter", 0.0);
    return spec;
  });
}

}  // namespace topoforge

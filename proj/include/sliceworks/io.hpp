// Copyright 2026 The Sliceworks Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

// JSON and text forms of every value that crosses the command line. Parsers
// are strict: unknown keys are rejected, syntax errors carry line and column,
// schema errors carry the JSON pointer of the offending value. Every emitted
// document has "schema": "sliceworks/1" and re-parses with the matching reader.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "sliceworks/domain.hpp"
#include "sliceworks/path.hpp"
#include "sliceworks/slice_function.hpp"
#include "sliceworks/stem.hpp"
#include "sliceworks/testkit.hpp"
#include "sliceworks/zeros.hpp"

namespace sliceworks::io {

inline constexpr const char* kSchema = "sliceworks/1";

SliceFunction parse_function(const std::string& text);
std::string function_to_json(const SliceFunction& f, const std::vector<std::string>& warnings = {});

SliceDomain parse_domain(const std::string& text);
std::string domain_to_json(const SliceDomain& domain);

PlanarRegion parse_region(const std::string& text);
std::string region_to_json(const PlanarRegion& region);

PathCn parse_path(const std::string& text);
std::string path_to_json(const PathCn& path);

StemValue parse_stem(const std::string& text);
std::string stem_to_json(const StemValue& stem);

std::string zeroset_to_json(const ZeroSet& zeros);
ZeroSet parse_zeroset(const std::string& text);

/// Keys: seed, trials, degree_cap, coeff_norm_cap, unit_samples, fd_step; all optional.
OracleConfig parse_oracle_config(const std::string& text);
PropertyReport parse_property_report(const std::string& text);

std::string quaternion_result_to_json(const Quaternion& value);
Quaternion parse_quaternion_result(const std::string& text);

/// Unit sets, the three radii and both domain checks for a path.
struct DomainInfo {
  std::size_t dimension{0};
  bool axially_symmetric{true};
  std::optional<PathCn> path;
  SliceUnitSet units;
  /// nullopt when the quantity is undefined for this path; may be infinite.
  std::optional<double> radius_for_units;
  std::optional<double> radius_path_ball;
  std::optional<double> radius_two_units;
  std::vector<std::string> notes;
  DomainCheckReport real_path_connected;
  DomainCheckReport self_stem_preserving;
};

DomainInfo compute_domain_info(const SliceDomain& domain, const std::optional<PathCn>& path, std::uint64_t seed,
                               std::size_t samples = 64);
std::string domain_info_to_json(const DomainInfo& info);
DomainInfo parse_domain_info(const std::string& text);

}  // namespace sliceworks::io

#pragma once

#include <string>

#include <nlohmann/json_fwd.hpp>

#include "cubepaths/bounds.hpp"
#include "cubepaths/compression.hpp"
#include "cubepaths/cube_set.hpp"
#include "cubepaths/flownet.hpp"

// Stable-key-order JSON encodings used by the CLI and certificate files.
// Vertices are emitted as sorted 1-based element lists and accepted either in
// that form or as hex mask strings ("0x5").

#include <nlohmann/json.hpp>

namespace cubepaths {

using Json = nlohmann::ordered_json;

Json vertex_to_json(std::uint32_t mask, int dim);
std::uint32_t vertex_from_json(const Json& j, int dim);

Json cube_set_to_json(const CubeSet& s);
CubeSet cube_set_from_json(const Json& j);

// Members-only list, for embedding where the dimension is implied.
Json member_list_to_json(const CubeSet& s);
CubeSet member_list_from_json(const Json& j, int dim);

Json edge_set_to_json(const EdgeSet& e);
Json path_family_to_json(const PathFamily& family);
Json trace_to_json(const std::vector<CompressionStep>& trace);

// Fixed 12-significant-digit decimal rendering for reals.
std::string format_real(double value);

}  // namespace cubepaths

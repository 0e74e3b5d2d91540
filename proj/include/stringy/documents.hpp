#pragma once

// JSON formats read and written by the command-line tool. All documents
// carry "format_version": "1". Rationals are [num, den] pairs whose parts
// are JSON integers, or decimal strings when they do not fit in 64 bits.
//
// Matrix:  {"rows": r, "cols": c, "entries": [[num, den], ...]}   row-major
//
// Simplicial document:
//   {"format_version": "1", "vertices": [...], "facets": [[...], ...],
//    "singular_vertex": "y", "half_dim": n}
//
// Rank document:
//   {"format_version": "1", "n": n,
//    "dims_Y": [2n+1], "dims_Yo": [2n+1], "dims_Yo_c": [2n+1], "dims_L": [2n],
//    "maps": {"ranks": [[a, b, c], ...]}            one triple per degree
//         or {"matrices": [{"a": M, "b": M, "c": M}, ...]},
//    "multinode": {"node_link_dims": [[...], ...], "link_dims_total": [...],
//                  "alpha2": {"rank": r} | M, "gamma1": {"rank": r} | M}}
// "maps" and the dims other than dims_Y / dims_Yo may be omitted when a
// multinode block is present.

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "stringy/cohomology.hpp"
#include "stringy/stratified.hpp"
#include "stringy/zigzag.hpp"

namespace stringy::documents {

using json = nlohmann::json;

inline constexpr const char* kFormatVersion = "1";

/// Reads and parses a JSON file; throws InputError on I/O or syntax errors.
json load_json_file(const std::filesystem::path& path);

json matrix_to_json(const qlinalg::Matrix& m);
qlinalg::Matrix matrix_from_json(const json& j);

struct SimplicialDocument {
  std::string format_version;
  std::vector<std::string> vertices;
  std::vector<std::vector<std::string>> facets;
  std::string singular_vertex;
  std::size_t half_dim = 0;
};

SimplicialDocument parse_simplicial(const json& j);
json to_json(const SimplicialDocument& doc);
/// Builds and validates the stratified space the document describes.
stratified::StratifiedSpace to_stratified(const SimplicialDocument& doc);

struct RankDocument {
  std::string format_version;
  std::size_t n = 0;
  std::optional<stratified::RankInput> package;
  std::optional<cohomology::MultiNodeData> multinode;
};

RankDocument parse_ranks(const json& j);
json to_json(const stratified::RankInput& input);

json to_json(const cohomology::CohomologyReport& report);
cohomology::CohomologyReport report_from_json(const json& j);
json to_json(const cohomology::ObstructionReport& report);

json to_json(const zigzag::ZigZagObject& z);
zigzag::ZigZagObject zigzag_from_json(const json& j);

}  // namespace stringy::documents

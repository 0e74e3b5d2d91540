#pragma once

// Command-line front end shared by the stringycoh binary and the tests.
//
//   stringycoh compute|zigzag|verify (--input <path> | --fixture <name>)
//              [--mode simplicial|ranks] [--out table|json]
//   stringycoh generate [--seed S] [--n N] [--non-dual] [--output <path>]
//
// Exit codes: 0 ok, 1 verify found failing checks, 2 bad input or usage,
// 3 internal invariant violation.

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "stringy/cohomology.hpp"
#include "stringy/stratified.hpp"

namespace stringy::cli {

enum class Mode { simplicial, ranks };

struct LoadedInput {
  Mode mode = Mode::ranks;
  std::optional<stratified::CohomologyPackage> package;
  std::optional<cohomology::MultiNodeData> multinode;
};

/// Mode from a ".simp." / ".ranks." infix, if present.
std::optional<Mode> infer_mode(const std::filesystem::path& path);

/// Parses, validates and assembles. Throws InputError (exit 2) or
/// InternalError (exit 3).
LoadedInput load_input(const std::filesystem::path& path, std::optional<Mode> mode);

/// $STRINGYCOH_FIXTURE_DIR, else the fixtures directory of the source tree.
std::filesystem::path fixture_dir();

/// "quintic_node" finds quintic_node.ranks.json or quintic_node.simp.json;
/// a full file name is taken as is.
std::filesystem::path resolve_fixture(const std::string& name);

std::string format_table(const cohomology::CohomologyReport& report);

struct Check {
  std::string name;
  bool passed = false;
  bool informational = false;  // reported, never affects the exit code
};

std::vector<Check> verify_checks(const LoadedInput& input);

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace stringy::cli

#pragma once

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "elasto/verify.hpp"

namespace elasto::cli {

enum class Command { Solve, Study, Farfield };

/// Evaluation grid for `solve`: either points on a circle or a rectangle.
struct GridSpec {
  enum class Kind { Circle, Rect };
  Kind kind = Kind::Circle;
  double radius = 3.0;
  int count = 32;
  double xmin = -3, xmax = 3, ymin = -3, ymax = 3;
  int nx = 21, ny = 21;
};

/// Everything one invocation needs, after config-file and flag merging.
struct RunManifest {
  Command command = Command::Study;
  std::optional<std::filesystem::path> config_path;
  std::filesystem::path out_dir = ".";
  StudyConfig study;
  GridSpec grid;
  int directions = 64;
  bool wall_clock = false;  // off keeps output byte-identical across runs
};

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitNumerical = 3;

int cmd_study(const RunManifest& manifest, std::ostream& log);
int cmd_farfield(const RunManifest& manifest, std::ostream& log);
int cmd_solve(const RunManifest& manifest, std::ostream& log);

/// Parses flags (and an optional key=value file given by --config), runs the
/// command and maps failures to exit codes.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace elasto::cli

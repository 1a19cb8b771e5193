#pragma once

// JSON reports and the command pipelines behind the CLI.

#include <cstdint>
#include <optional>
#include <string>

#include "json.hpp"

#include "chatelet/bundle.hpp"
#include "chatelet/obstruction.hpp"
#include "chatelet/surface.hpp"

namespace chatelet {

using Json = nlohmann::ordered_json;

inline constexpr int kSchemaVersion = 1;
inline constexpr const char* kToolVersion = "1.0.0";

enum ExitCode : int { kExitOk = 0, kExitUsage = 2, kExitStageFailure = 3, kExitInconclusive = 4 };

struct RunConfig {
  std::uint64_t seed = 0;
  /// Height bound of rational point searches.
  unsigned long height = 100;
  /// Certified points sampled per bad place.
  std::size_t samples = 200;
  /// Parameter search bound.
  Integer bound = 100;
  /// Affine bundle fibers t = +-1 .. +-fibers are verified besides 0 and infinity.
  unsigned fibers = 10;
  /// Forces the base-change coefficient instead of the first good one.
  std::optional<Integer> d;
  /// Witness search bound of the conic solver inside point searches.
  unsigned long witness_bound = 2000;
};

/// A failure inside a named pipeline stage.
class StageError : public std::runtime_error {
 public:
  StageError(std::string stage, const std::string& message)
      : std::runtime_error(message), stage_(std::move(stage)) {}
  const std::string& stage() const { return stage_; }

 private:
  std::string stage_;
};

struct CommandResult {
  Json report;
  int exit_code = kExitOk;
};

Json to_json(const ChateletSurface& s);
ChateletSurface surface_from_json(const Json& j);
Json to_json(const LocalReport& r);
Json to_json(const ObstructionReport& r, const BrauerClass& A);
Json to_json(const PointSearchResult& r);
Json to_json(const BadFiberSet& F);
Json to_json(const BundleReport& r);

CommandResult cmd_counterexample(const RunConfig& config);
CommandResult cmd_bundle(const RunConfig& config);
/// Symbol at one place, or the support table with the product formula.
CommandResult cmd_hilbert(const std::string& a, const std::string& b, const std::optional<std::string>& place);
CommandResult cmd_iskovskikh(const RunConfig& config);
/// Verifies a serialized surface given as JSON text.
CommandResult cmd_surface(const RunConfig& config, const std::string& json_text);

}  // namespace chatelet

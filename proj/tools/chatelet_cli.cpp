// chatelet: command-line driver for the Chatelet surface toolkit.
//
//   chatelet counterexample [--bound N] [--samples N] [--height H] [--seed S]
//   chatelet bundle [--fibers N] [--d D] ...
//   chatelet hilbert A B [--place P]
//   chatelet iskovskikh [--height H]
//   chatelet surface FILE|-
//
// Exit codes: 0 ok, 2 usage, 3 stage failure, 4 inconclusive.

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include "CLI11.hpp"
#include "chatelet/report.hpp"

namespace {

using chatelet::CommandResult;
using chatelet::RunConfig;

int emit(const CommandResult& result, const std::string& out_path) {
  std::string text = result.report.dump(2) + "\n";
  if (out_path.empty()) {
    std::cout << text;
  } else {
    std::ofstream out(out_path, std::ios::binary);
    if (!out) {
      std::cerr << "cannot write " << out_path << "\n";
      return chatelet::kExitUsage;
    }
    out << text;
  }
  return result.exit_code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Chatelet surfaces: Hasse principle counterexamples and bundles"};
  app.require_subcommand(1);

  RunConfig config;
  std::string out_path;
  std::string bound_text = "100";
  std::string d_text;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--seed", config.seed, "Seed for point sampling");
    sub->add_option("--height", config.height, "Height bound for rational point searches")
        ->check(CLI::PositiveNumber);
    sub->add_option("--out", out_path, "Write the JSON report here instead of stdout");
  };

  CLI::App* counter = app.add_subcommand("counterexample", "Build and certify the counterexample surface");
  add_common(counter);
  counter->add_option("--samples", config.samples, "Certified points per bad place");
  counter->add_option("--bound", bound_text, "Parameter search bound");

  CLI::App* bundle = app.add_subcommand("bundle", "Build, pull back and verify the surface bundle");
  add_common(bundle);
  bundle->add_option("--samples", config.samples, "Certified points per bad place on the special fiber");
  bundle->add_option("--bound", bound_text, "Parameter search bound");
  bundle->add_option("--fibers", config.fibers, "Verify t = 0, infinity and +-1 .. +-N");
  bundle->add_option("--d", d_text, "Base-change coefficient (default: first good one)");

  std::string a_text, b_text, place_text;
  CLI::App* hilbert = app.add_subcommand("hilbert", "Hilbert symbol (a, b) at one place or all support places");
  hilbert->add_option("a", a_text, "First argument (integer or fraction)")->required();
  hilbert->add_option("b", b_text, "Second argument (integer or fraction)")->required();
  hilbert->add_option("--place", place_text, "inf or a prime");
  hilbert->add_option("--out", out_path, "Write the JSON report here instead of stdout");

  CLI::App* isk = app.add_subcommand("iskovskikh", "Local solvability and point search on y^2 + z^2 = (x^2-2)(3-x^2)");
  add_common(isk);

  std::string surface_path;
  CLI::App* surface = app.add_subcommand("surface", "Verify a serialized surface");
  add_common(surface);
  surface->add_option("--samples", config.samples, "Certified points per bad place");
  surface->add_option("input", surface_path, "JSON file, or - for stdin")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : chatelet::kExitUsage;
  }

  try {
    config.bound = chatelet::parse_integer(bound_text);
    if (config.bound <= 0) throw chatelet::InvalidArgument("--bound must be positive");
    if (!d_text.empty()) config.d = chatelet::parse_integer(d_text);
  } catch (const std::exception& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return chatelet::kExitUsage;
  }

  if (*counter) return emit(chatelet::cmd_counterexample(config), out_path);
  if (*bundle) return emit(chatelet::cmd_bundle(config), out_path);
  if (*hilbert) {
    std::optional<std::string> place;
    if (!place_text.empty()) place = place_text;
    return emit(chatelet::cmd_hilbert(a_text, b_text, place), out_path);
  }
  if (*isk) return emit(chatelet::cmd_iskovskikh(config), out_path);
  if (*surface) {
    std::string text;
    if (surface_path == "-") {
      text.assign(std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>());
    } else {
      std::ifstream in(surface_path, std::ios::binary);
      if (!in) {
        std::cerr << "cannot read " << surface_path << "\n";
        return chatelet::kExitUsage;
      }
      text.assign(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
    }
    return emit(chatelet::cmd_surface(config, text), out_path);
  }
  return chatelet::kExitUsage;
}

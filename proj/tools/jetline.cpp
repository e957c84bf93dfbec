// jetline: emit operators, describe atlases and run verification suites.
//
// Exit status: 0 when everything passes, 1 when a verification check fails,
// 2 for usage and parse errors.

#include <cstdint>
#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "jetline/atlas_io.hpp"
#include "jetline/emit.hpp"
#include "jetline/errors.hpp"
#include "jetline/verify.hpp"

namespace {

constexpr int kPass = 0;
constexpr int kFail = 1;
constexpr int kUsage = 2;

constexpr const char* kSeedVariable = "JETLINE_SEED";

std::uint64_t default_seed() {
  const char* env = std::getenv(kSeedVariable);
  if (!env || !*env) return 1;
  try {
    std::size_t used = 0;
    const unsigned long long v = std::stoull(env, &used);
    if (used == std::string(env).size()) return v;
  } catch (const std::exception&) {
  }
  throw CLI::ValidationError(kSeedVariable, std::string("not an unsigned integer: ") + env);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact jet-bundle computations over the projective line"};
  app.require_subcommand(1);

  std::string kind;
  int n = 1;
  std::string emit_format = "json";
  auto* emit = app.add_subcommand("emit", "Print the CMZ or Bol operator of order n");
  emit->add_option("kind", kind, "cmz or bol")->required()->check(CLI::IsMember({"cmz", "bol"}));
  emit->add_option("--n", n, "Order parameter")->required();
  emit->add_option("--format", emit_format, "json or latex")->check(CLI::IsMember({"json", "latex"}));

  std::string suite;
  std::optional<int> verify_n;
  std::optional<int> verify_k;
  std::optional<std::uint64_t> seed;
  std::vector<std::string> atlas_paths;
  bool no_timestamp = false;
  std::string verify_format = "json";
  auto* verify = app.add_subcommand("verify", "Run a seeded verification suite");
  verify->add_option("suite", suite, "splitting, equivariance-cmz, bol, phi, casimir, atlas or all")->required();
  verify->add_option("--n", verify_n, "Upper bound on n");
  verify->add_option("--k", verify_k, "Weight for the Casimir checks");
  verify->add_option("--seed", seed, std::string("Seed (default: $") + kSeedVariable + " or 1)");
  verify->add_option("--atlas", atlas_paths, "Atlas file (repeatable); default: the shipped atlases");
  verify->add_flag("--no-timestamp", no_timestamp, "Omit the timestamp so reports are byte-identical");
  verify->add_option("--format", verify_format, "json or text")->check(CLI::IsMember({"json", "text"}));

  std::string atlas_path;
  std::string atlas_flag;
  std::string atlas_format = "text";
  auto* atlas = app.add_subcommand("atlas", "Describe and validate an atlas file");
  atlas->add_option("path", atlas_path, "Atlas file");
  atlas->add_option("--atlas", atlas_flag, "Atlas file (alternative to the positional path)");
  atlas->add_option("--format", atlas_format, "text, json (description) or canonical (re-emitted atlas)")
      ->check(CLI::IsMember({"text", "json", "canonical"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kPass : kUsage;
  }

  try {
    if (*emit) {
      std::cout << jetline::emit_operator(kind, n, emit_format);
      return kPass;
    }
    if (*verify) {
      jetline::VerifyParams params;
      params.n = verify_n;
      params.k = verify_k;
      params.seed = seed ? *seed : default_seed();
      params.atlas_paths = atlas_paths;
      const jetline::VerificationReport report = jetline::run_verify(suite, params);
      if (verify_format == "json") {
        std::cout << report.to_json(!no_timestamp).dump(2) << "\n";
      } else {
        for (const auto& c : report.checks) {
          if (!c.pass) std::cout << "FAIL " << c.id << "\n  lhs: " << c.lhs << "\n  rhs: " << c.rhs << "\n";
        }
        std::cout << report.suite << ": " << report.checks.size() << " checks, " << report.failures()
                  << " failed (seed " << report.seed << ")\n";
      }
      return report.passed() ? kPass : kFail;
    }
    if (*atlas) {
      const std::string path = !atlas_flag.empty() ? atlas_flag : atlas_path;
      if (path.empty()) {
        std::cerr << "atlas: a path is required\n";
        return kUsage;
      }
      const jetline::Atlas a = jetline::load_atlas(path);
      if (atlas_format == "canonical") {
        std::cout << jetline::emit_atlas(a);
        return kPass;
      }
      const bool valid = jetline::validate_atlas(a).valid();
      if (atlas_format == "json") {
        std::cout << jetline::describe_atlas_json(a).dump(2) << "\n";
      } else {
        std::cout << jetline::describe_atlas(a);
      }
      return valid ? kPass : kFail;
    }
  } catch (const CLI::ValidationError& e) {
    std::cerr << e.what() << "\n";
    return kUsage;
  } catch (const jetline::Error& e) {
    std::cerr << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}

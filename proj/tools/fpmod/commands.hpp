#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "fpm/harness.hpp"
#include "input.hpp"

namespace fpm::cli {

// exit codes shared by all subcommands
inline constexpr int kExitPass = 0;
inline constexpr int kExitViolations = 1;
inline constexpr int kExitInputError = 2;

struct AnalyzeOptions {
  std::string file;
  std::string format = "text";  // text | structured
  bool emit_input = false;
};

struct ComputeOptions {
  std::string file;
  std::string functor;              // gamma | lambda | hom | tensor | localize
  std::optional<std::string> ideal; // name from the input file
  std::optional<std::string> with;  // second description file (hom/tensor)
  std::optional<std::string> prime; // element token (localize)
  std::string format = "text";
};

struct VerifyOptions {
  std::string law;
  std::uint64_t seed = 1;
  int count = 100;
  std::vector<std::string> contexts;  // context tokens; empty = default
  std::string profile = "default";    // small | default | large
  std::string format = "text";
  long long max_size = 64;            // oracle bound
};

int cmd_analyze(const AnalyzeOptions& opt, std::ostream& out, std::ostream& err);
int cmd_compute(const ComputeOptions& opt, std::ostream& out, std::ostream& err);
int cmd_verify(const VerifyOptions& opt, std::ostream& out, std::ostream& err);

}  // namespace fpm::cli

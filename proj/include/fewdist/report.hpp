#pragma once

// Command drivers shared by the C API and the CLI. Each returns the JSON
// document, a plain-text table and the process status for one request.

#include "fewdist/code.hpp"
#include "fewdist/orthopoly.hpp"
#include "fewdist/sdp_cert.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace fewdist {

// 0 success or exact, 1 sound result with a gap, 3 search budget exhausted.
enum class CommandStatus { Ok = 0, Gap = 1, Budget = 3 };

struct CommandOutput {
  CommandStatus status = CommandStatus::Ok;
  std::string json;
  std::string table;
};

enum class BoundMethod {
  Auto,
  Harmonic,
  Conditional,
  Lp,
  Det,
  Refined,
  Ekr,
  Forbidden,
  Packing,
  Spherical,
  Oracle,
};

std::optional<BoundMethod> parse_bound_method(std::string_view name);
const char* to_string(BoundMethod m);

CommandOutput run_bound(const SpaceSpec& space, const DistanceSet& d, BoundMethod method, std::uint64_t budget);
// The determinant bound alone. Accepts any 1 <= w <= n; past n/2 the Hahn
// values are evaluated formally.
CommandOutput run_det_bound(int n, int w, const std::vector<int>& d);
CommandOutput run_exact(const SpaceSpec& space, int s);
CommandOutput run_table1(int n_max);
CommandOutput run_appendix_check(int w, int s, int n_max);
CommandOutput run_oracle(const SpaceSpec& space, int s, std::uint64_t budget);
// Checks the distribution of `code`, or `imported` when given, against d
// (the code's own distance set when d is empty).
CommandOutput run_sdp_check(const SpaceSpec& space, const Code& code, const std::optional<DistanceSet>& d,
                            const std::optional<TripleDistribution>& imported);
CommandOutput run_thm11(int n_min, int n_max);

}  // namespace fewdist

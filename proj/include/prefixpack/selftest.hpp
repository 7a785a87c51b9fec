#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "prefixpack/model.hpp"

namespace prefixpack {

struct SelftestBounds {
  std::vector<std::uint32_t> arities{2, 3};
  std::size_t max_m = 4;
  std::uint32_t max_len = 2;
};

struct SelftestReport {
  std::size_t instances = 0;
  std::size_t packable = 0;
  std::optional<ProblemSpec> mismatch;
  std::string detail;

  bool passed() const { return !mismatch.has_value(); }
};

using Decider = std::function<bool(const ProblemSpec&)>;

/// Sweeps every instance within `bounds` and checks that the fast decision,
/// the greedy packer (with a validated solution) and the brute-force oracle
/// agree, and that every packable instance satisfies the Kraft inequality.
/// Stops at the first disagreement.
SelftestReport run_selftest(const SelftestBounds& bounds, const Decider& fast);
SelftestReport run_selftest(const SelftestBounds& bounds);

/// "q=(2,2) lengths={(1,0),(0,1)}"
std::string describe(const ProblemSpec& spec);

/// The spec as an instance-file JSON document.
std::string to_instance_json(const ProblemSpec& spec);

}  // namespace prefixpack

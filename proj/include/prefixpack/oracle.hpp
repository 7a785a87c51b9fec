#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "prefixpack/model.hpp"

// Exhaustive reference procedures for desk-scale instances. Nothing here
// calls into the packer or the cutting function.

namespace prefixpack::oracle {

struct OracleLimits {
  std::size_t max_m = 16;
  std::int64_t max_dim = 64;
  std::uint64_t max_nodes = 50'000'000;
};

enum class Verdict { yes, no, budget_exceeded };

/// Backtracking over every aligned location of every block inside the
/// containers. Blocks are placed in the given order; equal adjacent blocks
/// take strictly increasing candidate positions.
Verdict brute_decide(std::span<const Block> blocks, std::span<const Container> containers,
                     const OracleLimits& limits = {});

struct SigmaMin {
  enum class Status { found, none, budget_exceeded } status = Status::none;
  std::size_t min_count = 0;
  std::vector<Region> partition;      // one optimal partition, sorted by region_less
  std::uint64_t optimal_partitions = 0;  // number of distinct optimal partitions
};

/// Minimum-cardinality partition of `c` into regular aligned regions each
/// ⪯ `s`, by memoised search over covered-cell masks. Requires
/// w * h <= 64 and both sides <= limits.max_dim.
SigmaMin brute_sigma_min(const Region& c, const Size& s, const Arities& q,
                         const OracleLimits& limits = {});

/// All arity pairs drawn from `values` x `values`.
std::vector<Arities> arity_pairs(std::span<const std::uint32_t> values);

/// Deterministic stream of every multiset of length tuples with at most
/// `max_m` entries and components at most `max_len`, for each arity pair.
/// Tuples inside a spec are in nondecreasing (l1, l2) order.
class InstanceStream {
 public:
  InstanceStream(std::vector<Arities> q_choices, std::size_t max_m, std::uint32_t max_len);

  std::optional<ProblemSpec> next();
  void reset();

 private:
  std::vector<Arities> q_choices_;
  std::size_t max_m_;
  std::uint32_t max_len_;
  std::size_t tuple_kinds_;
  std::size_t q_index_ = 0;
  std::size_t m_ = 0;
  std::vector<std::size_t> combo_;
  bool fresh_ = true;
};

std::vector<ProblemSpec> enumerate_instances(std::vector<Arities> q_choices, std::size_t max_m,
                                             std::uint32_t max_len);

}  // namespace prefixpack::oracle

#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "prefixpack/geometry.hpp"
#include "prefixpack/model.hpp"

namespace prefixpack {

struct Placement {
  std::size_t block = 0;  // index into the block sequence the solver was given
  BigInt x{0};
  BigInt y{0};

  friend bool operator==(const Placement&, const Placement&) = default;
};

struct Solution {
  std::vector<Placement> assignments;  // sorted by block index

  friend bool operator==(const Solution&, const Solution&) = default;
};

/// Checks the three packing constraints: every placed block is aligned,
/// placed blocks are pairwise disjoint, and each lies inside some container.
bool is_valid_solution(std::span<const Block> blocks, std::span<const Container> containers,
                       const Solution& sol);

/// Outcome of the greedy packer, together with the free space left over.
struct NaiveRun {
  std::optional<Solution> solution;
  std::vector<QuotientGrid> free;
};

/// Greedy packing with explicit locations. `blocks` must be sorted
/// descending under cmp_total and regular; `containers` must be pairwise
/// disjoint. Ties between equally small candidate containers go to the
/// lexicographically smallest (x, y).
NaiveRun run_naive(std::span<const Block> blocks, std::span<const Container> containers,
                   const Arities& q);

std::optional<Solution> solve_naive(std::span<const Block> blocks,
                                    std::span<const Container> containers, const Arities& q);

/// Count-array view of the free space: cell (i, j) holds the number of
/// free regular aligned containers of size [q1^i, q2^j]. Cells beyond the
/// current caps are always zero.
class ContainerBank {
 public:
  ContainerBank(const Arities& q, std::uint32_t max_a, std::uint32_t max_b);

  /// One container [q1^l1max, q2^l2max], the root of both prefix trees.
  static ContainerBank canonical(const Arities& q, std::uint32_t l1_max, std::uint32_t l2_max);

  void add(const RegularExp& e, const BigInt& n);
  const BigInt& count(std::uint32_t i, std::uint32_t j) const { return cells_[index(i, j)]; }

  std::uint32_t cap_a() const { return cap_a_; }
  std::uint32_t cap_b() const { return cap_b_; }

  /// Cuts every container down to at most [q1^cap_a, q2^cap_b], one
  /// exponent step at a time (a column or row is multiplied by q and
  /// folded into its neighbour). Raising a cap is a no-op.
  void refine_to(std::uint32_t cap_a, std::uint32_t cap_b);

  /// Places `n` identical blocks one after another, each into the smallest
  /// adequate container. The block must be the largest remaining size, so
  /// its longer side equals the corresponding cap. Returns false when some
  /// block finds no container; the bank is then left partially consumed.
  bool place_run(const RegularExp& block, std::uint64_t n);

  BigInt free_area() const;
  ExpCounts nonzero() const;

 private:
  std::size_t index(std::uint32_t i, std::uint32_t j) const { return std::size_t{i} * stride_ + j; }
  bool place_wide(std::uint32_t a, std::uint32_t b, std::uint64_t n);
  bool place_tall(std::uint32_t a, std::uint32_t b, std::uint64_t n);

  Arities q_;
  std::size_t stride_;
  std::uint32_t cap_a_;
  std::uint32_t cap_b_;
  std::vector<BigInt> cells_;
  std::vector<BigInt> pow1_;
  std::vector<BigInt> pow2_;
};

/// Runs the count-array decision procedure; the final bank on success.
std::optional<ContainerBank> pack_counts(const ProblemSpec& spec);

bool decide_fast(const ProblemSpec& spec);

bool decide(const ProblemSpec& spec);

/// Greedy packing of the canonical instance. Assignment k belongs to
/// spec.lengths[k].
std::optional<Solution> construct(const ProblemSpec& spec);

}  // namespace prefixpack

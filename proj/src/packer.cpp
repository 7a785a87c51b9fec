#include "prefixpack/packer.hpp"

#include <algorithm>
#include <stdexcept>

#include "prefixpack/codes.hpp"

namespace prefixpack {

bool is_valid_solution(std::span<const Block> blocks, std::span<const Container> containers,
                       const Solution& sol) {
  if (sol.assignments.size() != blocks.size()) return false;
  std::vector<Region> placed;
  placed.reserve(blocks.size());
  std::vector<bool> seen(blocks.size(), false);
  for (const auto& p : sol.assignments) {
    if (p.block >= blocks.size() || seen[p.block]) return false;
    seen[p.block] = true;
    Region r = blocks[p.block].placed(p.x, p.y);
    if (!is_aligned(r)) return false;
    bool inside = std::any_of(containers.begin(), containers.end(),
                              [&](const Container& c) { return contains(c, r); });
    if (!inside) return false;
    placed.push_back(std::move(r));
  }
  for (std::size_t i = 0; i < placed.size(); ++i) {
    for (std::size_t j = i + 1; j < placed.size(); ++j) {
      if (overlap(placed[i], placed[j])) return false;
    }
  }
  return true;
}

namespace {

struct FreeGrid {
  QuotientGrid grid;
  bool regular;  // cells are regular and aligned
};

void check_naive_input(std::span<const Block> blocks, std::span<const Container> containers,
                       const Arities& q) {
  q.validate();
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    if (!is_regular(blocks[i].size, q)) {
      throw InputError("block " + std::to_string(i) + " has non-regular size " +
                       to_string(blocks[i].size));
    }
    if (i > 0 && cmp_total(blocks[i - 1].size, blocks[i].size) < 0) {
      throw InputError("blocks are not sorted in descending order");
    }
  }
  for (std::size_t i = 0; i < containers.size(); ++i) {
    if (containers[i].w() < 1 || containers[i].h() < 1 || containers[i].x < 0 ||
        containers[i].y < 0) {
      throw InputError("container " + to_string(containers[i]) + " is degenerate");
    }
    for (std::size_t j = i + 1; j < containers.size(); ++j) {
      if (overlap(containers[i], containers[j])) throw InputError("containers overlap");
    }
  }
}

}  // namespace

NaiveRun run_naive(std::span<const Block> blocks, std::span<const Container> containers,
                   const Arities& q) {
  check_naive_input(blocks, containers, q);

  // bounds[i] = componentwise max of the sizes of blocks i..end
  std::vector<Size> bounds(blocks.size());
  for (std::size_t i = blocks.size(); i-- > 0;) {
    bounds[i] = blocks[i].size;
    if (i + 1 < blocks.size()) {
      bounds[i].w = std::max(bounds[i].w, bounds[i + 1].w);
      bounds[i].h = std::max(bounds[i].h, bounds[i + 1].h);
    }
  }

  std::vector<FreeGrid> free;
  for (const auto& c : containers) free.push_back({QuotientGrid{c, c.size}, false});

  NaiveRun run;
  Solution sol;
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    const Size& bound = bounds[i];
    const Size& need = blocks[i].size;

    std::vector<FreeGrid> cut;
    cut.reserve(free.size());
    for (auto& f : free) {
      if (f.regular) {
        f.grid.cell.w = std::min(f.grid.cell.w, bound.w);
        f.grid.cell.h = std::min(f.grid.cell.h, bound.h);
        cut.push_back(std::move(f));
      } else {
        for (auto& g : cut_sigma_grids(f.grid.bound, bound, q)) cut.push_back({std::move(g), true});
      }
    }
    free = std::move(cut);

    std::size_t best = free.size();
    for (std::size_t k = 0; k < free.size(); ++k) {
      const auto& g = free[k].grid;
      if (!covers(g.cell, need)) continue;
      if (best == free.size()) {
        best = k;
        continue;
      }
      const auto& b = free[best].grid;
      auto c = cmp_total(g.cell, b.cell);
      if (c < 0 || (c == 0 && (g.bound.x < b.bound.x ||
                               (g.bound.x == b.bound.x && g.bound.y < b.bound.y)))) {
        best = k;
      }
    }
    if (best == free.size()) {
      run.free.clear();
      for (auto& f : free) run.free.push_back(std::move(f.grid));
      return run;
    }

    QuotientGrid chosen = std::move(free[best].grid);
    free.erase(free.begin() + static_cast<std::ptrdiff_t>(best));
    Region target(chosen.bound.x, chosen.bound.y, chosen.cell);
    sol.assignments.push_back(Placement{i, target.x, target.y});

    if (chosen.rows() > 1) {
      free.push_back({QuotientGrid{Region(target.x, target.top(), chosen.cell.w,
                                          chosen.bound.h() - chosen.cell.h),
                                   chosen.cell},
                      true});
    }
    if (chosen.columns() > 1) {
      free.push_back({QuotientGrid{Region(target.right(), target.y,
                                          chosen.bound.w() - chosen.cell.w, chosen.bound.h()),
                                   chosen.cell},
                      true});
    }
    for (auto& g : corner_cut_grids(target, need, q)) free.push_back({std::move(g), true});
  }

  run.solution = std::move(sol);
  for (auto& f : free) run.free.push_back(std::move(f.grid));
  return run;
}

std::optional<Solution> solve_naive(std::span<const Block> blocks,
                                    std::span<const Container> containers, const Arities& q) {
  return run_naive(blocks, containers, q).solution;
}

ContainerBank::ContainerBank(const Arities& q, std::uint32_t max_a, std::uint32_t max_b)
    : q_(q),
      stride_(std::size_t{max_b} + 1),
      cap_a_(max_a),
      cap_b_(max_b),
      cells_((std::size_t{max_a} + 1) * (std::size_t{max_b} + 1)) {
  q_.validate();
  pow1_.reserve(max_a + 1);
  pow2_.reserve(max_b + 1);
  BigInt p = 1;
  for (std::uint32_t i = 0; i <= max_a; ++i, p *= q.q1) pow1_.push_back(p);
  p = 1;
  for (std::uint32_t j = 0; j <= max_b; ++j, p *= q.q2) pow2_.push_back(p);
}

ContainerBank ContainerBank::canonical(const Arities& q, std::uint32_t l1_max,
                                       std::uint32_t l2_max) {
  ContainerBank bank(q, l1_max, l2_max);
  bank.add(RegularExp{l1_max, l2_max}, 1);
  return bank;
}

void ContainerBank::add(const RegularExp& e, const BigInt& n) {
  if (e.a > cap_a_ || e.b > cap_b_) throw InputError("container size exceeds the bank caps");
  cells_[index(e.a, e.b)] += n;
}

void ContainerBank::refine_to(std::uint32_t cap_a, std::uint32_t cap_b) {
  for (; cap_a_ > cap_a; --cap_a_) {
    for (std::uint32_t j = 0; j <= cap_b_; ++j) {
      BigInt& from = cells_[index(cap_a_, j)];
      if (from == 0) continue;
      cells_[index(cap_a_ - 1, j)] += from * q_.q1;
      from = 0;
    }
  }
  for (; cap_b_ > cap_b; --cap_b_) {
    for (std::uint32_t i = 0; i <= cap_a_; ++i) {
      BigInt& from = cells_[index(i, cap_b_)];
      if (from == 0) continue;
      cells_[index(i, cap_b_ - 1)] += from * q_.q2;
      from = 0;
    }
  }
}

bool ContainerBank::place_run(const RegularExp& block, std::uint64_t n) {
  if (n == 0) return true;
  if (block.a > cap_a_ || block.b > cap_b_) return false;
  if (pow1_[block.a] >= pow2_[block.b]) {
    if (block.a != cap_a_) throw std::logic_error("place_run: block is not the largest size");
    return place_wide(block.a, block.b, n);
  }
  if (block.b != cap_b_) throw std::logic_error("place_run: block is not the largest size");
  return place_tall(block.a, block.b, n);
}

// Width fits the column exactly; candidates differ only in height. A run of
// n blocks drains containers from the smallest upward, each one fully before
// the next is opened. The partially used container leaves (q2^(j-b) - r)
// block-sized slots, kept as its base-q2 digits in cells (a, b..j-1).
bool ContainerBank::place_wide(std::uint32_t a, std::uint32_t b, std::uint64_t n) {
  BigInt left = n;
  for (std::uint32_t j = b; j <= cap_b_; ++j) {
    BigInt& cnt = cells_[index(a, j)];
    if (cnt == 0) continue;
    const BigInt& slots = pow2_[j - b];
    BigInt capacity = slots * cnt;
    if (capacity <= left) {
      left -= capacity;
      cnt = 0;
      if (left == 0) return true;
      continue;
    }
    cnt -= left / slots;
    auto used = static_cast<std::uint64_t>(left % slots);
    if (used > 0) {
      cnt -= 1;
      std::uint64_t rest = used - 1;
      for (std::uint32_t t = b; t < j; ++t) {
        cells_[index(a, t)] += (q_.q2 - 1) - rest % q_.q2;
        rest /= q_.q2;
      }
    }
    return true;
  }
  return false;
}

bool ContainerBank::place_tall(std::uint32_t a, std::uint32_t b, std::uint64_t n) {
  BigInt left = n;
  for (std::uint32_t i = a; i <= cap_a_; ++i) {
    BigInt& cnt = cells_[index(i, b)];
    if (cnt == 0) continue;
    const BigInt& slots = pow1_[i - a];
    BigInt capacity = slots * cnt;
    if (capacity <= left) {
      left -= capacity;
      cnt = 0;
      if (left == 0) return true;
      continue;
    }
    cnt -= left / slots;
    auto used = static_cast<std::uint64_t>(left % slots);
    if (used > 0) {
      cnt -= 1;
      std::uint64_t rest = used - 1;
      for (std::uint32_t t = a; t < i; ++t) {
        cells_[index(t, b)] += (q_.q1 - 1) - rest % q_.q1;
        rest /= q_.q1;
      }
    }
    return true;
  }
  return false;
}

BigInt ContainerBank::free_area() const {
  BigInt area = 0;
  for (std::uint32_t i = 0; i <= cap_a_; ++i) {
    for (std::uint32_t j = 0; j <= cap_b_; ++j) {
      const BigInt& c = cells_[index(i, j)];
      if (c != 0) area += c * pow1_[i] * pow2_[j];
    }
  }
  return area;
}

ExpCounts ContainerBank::nonzero() const {
  ExpCounts out;
  for (std::uint32_t i = 0; i <= cap_a_; ++i) {
    for (std::uint32_t j = 0; j <= cap_b_; ++j) {
      const BigInt& c = cells_[index(i, j)];
      if (c != 0) out[RegularExp{i, j}] = c;
    }
  }
  return out;
}

std::optional<ContainerBank> pack_counts(const ProblemSpec& spec) {
  spec.validate();
  const Arities& q = spec.arities;
  const std::uint32_t l1 = spec.l1_max();
  const std::uint32_t l2 = spec.l2_max();
  ContainerBank bank = ContainerBank::canonical(q, l1, l2);
  if (spec.lengths.empty()) return bank;

  const std::size_t stride = std::size_t{l2} + 1;
  std::vector<std::uint64_t> histogram((std::size_t{l1} + 1) * stride, 0);
  for (const auto& t : spec.lengths) {
    ++histogram[std::size_t{l1 - t.l1} * stride + (l2 - t.l2)];
  }

  std::vector<RegularExp> groups;
  for (std::uint32_t a = 0; a <= l1; ++a) {
    for (std::uint32_t b = 0; b <= l2; ++b) {
      if (histogram[a * stride + b] > 0) groups.push_back(RegularExp{a, b});
    }
  }

  std::vector<BigInt> pow1, pow2;
  BigInt p = 1;
  for (std::uint32_t i = 0; i <= l1; ++i, p *= q.q1) pow1.push_back(p);
  p = 1;
  for (std::uint32_t j = 0; j <= l2; ++j, p *= q.q2) pow2.push_back(p);
  auto larger = [&](const RegularExp& x, const RegularExp& y) {
    const BigInt& wx = pow1[x.a];
    const BigInt& hx = pow2[x.b];
    const BigInt& wy = pow1[y.a];
    const BigInt& hy = pow2[y.b];
    const BigInt& mx = wx > hx ? wx : hx;
    const BigInt& my = wy > hy ? wy : hy;
    if (mx != my) return mx > my;
    if (wx != wy) return wx > wy;
    return hx > hy;
  };
  std::sort(groups.begin(), groups.end(), larger);

  std::vector<RegularExp> caps(groups.size());
  for (std::size_t g = groups.size(); g-- > 0;) {
    caps[g] = groups[g];
    if (g + 1 < groups.size()) {
      caps[g].a = std::max(caps[g].a, caps[g + 1].a);
      caps[g].b = std::max(caps[g].b, caps[g + 1].b);
    }
  }

  for (std::size_t g = 0; g < groups.size(); ++g) {
    bank.refine_to(caps[g].a, caps[g].b);
    if (!bank.place_run(groups[g], histogram[groups[g].a * stride + groups[g].b])) {
      return std::nullopt;
    }
  }
  return bank;
}

bool decide_fast(const ProblemSpec& spec) { return pack_counts(spec).has_value(); }

bool decide(const ProblemSpec& spec) { return decide_fast(spec); }

std::optional<Solution> construct(const ProblemSpec& spec) {
  spec.validate();
  PackingInstance inst = lengths_to_instance(spec);
  std::vector<std::size_t> order = sorted_block_order(inst.blocks);
  std::vector<Block> sorted;
  sorted.reserve(order.size());
  for (std::size_t k : order) sorted.push_back(inst.blocks[k]);

  std::vector<Container> containers{inst.container};
  auto sol = solve_naive(sorted, containers, spec.arities);
  if (!sol) return std::nullopt;
  for (auto& p : sol->assignments) p.block = order[p.block];
  std::sort(sol->assignments.begin(), sol->assignments.end(),
            [](const Placement& a, const Placement& b) { return a.block < b.block; });
  return sol;
}

}  // namespace prefixpack

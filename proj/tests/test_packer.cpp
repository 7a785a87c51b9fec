#include <algorithm>
#include <random>

#include "doctest.h"
#include "prefixpack/codes.hpp"
#include "prefixpack/oracle.hpp"
#include "prefixpack/packer.hpp"
#include "prefixpack/selftest.hpp"
#include "test_util.hpp"

using namespace prefixpack;
using testutil::B;
using testutil::R;
using testutil::S;
using testutil::spec;

namespace {

ExpCounts grid_counts(const std::vector<QuotientGrid>& grids, const Arities& q) {
  ExpCounts out;
  for (const auto& g : grids) out[*to_exp(g.cell, q)] += g.count();
  return out;
}

struct Groups {
  std::vector<RegularExp> sizes;
  std::vector<std::uint64_t> counts;
  std::vector<RegularExp> caps;
};

// Groups of identical blocks in descending order, with suffix caps.
Groups group_blocks(const ProblemSpec& s) {
  const PackingInstance inst = lengths_to_instance(s);
  const auto sorted = sort_blocks_desc(inst.blocks);
  Groups g;
  for (const auto& b : sorted) {
    const RegularExp e = *to_exp(b.size, s.arities);
    if (!g.sizes.empty() && g.sizes.back() == e) {
      ++g.counts.back();
    } else {
      g.sizes.push_back(e);
      g.counts.push_back(1);
    }
  }
  g.caps = g.sizes;
  for (std::size_t k = g.caps.size(); k-- > 1;) {
    g.caps[k - 1].a = std::max(g.caps[k - 1].a, g.caps[k].a);
    g.caps[k - 1].b = std::max(g.caps[k - 1].b, g.caps[k].b);
  }
  return g;
}

BigInt exp_area(const RegularExp& e, const Arities& q) {
  return pow_big(q.q1, e.a) * pow_big(q.q2, e.b);
}

}  // namespace

TEST_CASE("is_valid_solution rejects each broken constraint") {
  const std::vector<Block> blocks{B(2, 1), B(1, 2)};
  const std::vector<Container> cs{R(0, 0, 2, 2), R(0, 2, 2, 1)};
  CHECK(is_valid_solution(blocks, cs, Solution{{{0, 0, 2}, {1, 0, 0}}}));
  CHECK_FALSE(is_valid_solution(blocks, cs, Solution{{{0, 0, 2}, {1, 1, 1}}}));  // misaligned
  CHECK_FALSE(is_valid_solution(blocks, cs, Solution{{{0, 0, 0}, {1, 0, 0}}}));  // overlap
  CHECK_FALSE(is_valid_solution(blocks, cs, Solution{{{0, 0, 2}, {1, 2, 0}}}));  // outside
  CHECK_FALSE(is_valid_solution(blocks, cs, Solution{{{0, 0, 2}}}));            // missing block
  // straddling two containers is not "inside a container"
  const std::vector<Container> split{R(0, 0, 1, 2), R(1, 0, 1, 2)};
  CHECK_FALSE(is_valid_solution(std::vector<Block>{B(2, 2)}, split, Solution{{{0, 0, 0}}}));
}

TEST_CASE("solve_naive examples") {
  const Arities q{2, 2};
  const std::vector<Block> blocks{B(2, 1), B(1, 2)};
  CHECK_FALSE(solve_naive(blocks, std::vector<Container>{R(0, 0, 2, 2)}, q).has_value());
  CHECK(oracle::brute_decide(blocks, std::vector<Container>{R(0, 0, 2, 2)}) == oracle::Verdict::no);

  const std::vector<Container> two{R(0, 0, 2, 2), R(0, 2, 2, 1)};
  const auto sol = solve_naive(blocks, two, q);
  REQUIRE(sol.has_value());
  CHECK(*sol == Solution{{{0, 0, 2}, {1, 0, 0}}});
  CHECK(is_valid_solution(blocks, two, *sol));
  CHECK(oracle::brute_decide(blocks, two) == oracle::Verdict::yes);

  const auto empty = solve_naive(std::vector<Block>{}, two, q);
  REQUIRE(empty.has_value());
  CHECK(empty->assignments.empty());
}

TEST_CASE("run_naive rejects malformed input") {
  const Arities q{2, 2};
  const std::vector<Container> one{R(0, 0, 4, 4)};
  CHECK_THROWS_AS(run_naive(std::vector<Block>{B(1, 2), B(2, 1)}, one, q), InputError);
  CHECK_THROWS_AS(run_naive(std::vector<Block>{B(3, 1)}, one, q), InputError);
  const std::vector<Container> overlapping{R(0, 0, 2, 2), R(1, 1, 2, 2)};
  CHECK_THROWS_AS(run_naive(std::vector<Block>{B(1, 1)}, overlapping, q), InputError);
}

TEST_CASE("run_naive free space is the container minus the placed blocks") {
  std::mt19937_64 rng(21);
  for (const auto& q : testutil::small_arities()) {
    for (int it = 0; it < 100; ++it) {
      const ProblemSpec s = testutil::random_spec(rng, q, 6, 2, 2);
      const PackingInstance inst = lengths_to_instance(s);
      const auto sorted = sort_blocks_desc(inst.blocks);
      const auto run = run_naive(sorted, std::vector<Container>{inst.container}, q);
      if (!run.solution) continue;
      testutil::Cells used;
      std::size_t total = 0;
      for (const auto& p : run.solution->assignments) {
        auto c = testutil::cells_of(sorted[p.block].placed(p.x, p.y));
        total += c.size();
        used.insert(c.begin(), c.end());
      }
      for (const auto& g : run.free) {
        for (const auto& r : expand(g)) {
          CHECK(is_aligned(r));
          auto c = testutil::cells_of(r);
          total += c.size();
          used.insert(c.begin(), c.end());
        }
      }
      CHECK(used.size() == total);
      CHECK(used == testutil::cells_of(inst.container));
    }
  }
}

TEST_CASE("decide examples") {
  CHECK_FALSE(decide_fast(spec(2, 2, {{1, 0}, {0, 1}})));
  CHECK(decide_fast(spec(2, 2, {{1, 0}, {1, 1}, {1, 1}})));
  CHECK(decide_fast(spec(2, 2, {})));
  CHECK_FALSE(construct(spec(2, 2, {{1, 0}, {0, 1}})).has_value());
  CHECK(decide(spec(2, 2, {{1, 1}, {1, 1}, {1, 1}, {1, 1}})));
  CHECK(decide(spec(2, 2, {{1, 0}, {2, 0}, {2, 0}})));
  CHECK(decide(spec(3, 2, {{0, 0}})));
  CHECK_FALSE(decide(spec(2, 2, {{0, 0}, {3, 3}})));
  CHECK_THROWS_AS(decide(spec(1, 2, {{0, 0}})), InputError);
}

TEST_CASE("decide examples agree with the brute-force oracle") {
  for (const auto& s : {spec(2, 2, {{1, 0}, {1, 1}, {1, 1}}), spec(2, 2, {{1, 1}, {1, 1}, {1, 1}, {1, 1}}),
                        spec(2, 2, {{1, 0}, {2, 0}, {2, 0}}), spec(2, 2, {{1, 0}, {0, 1}})}) {
    const PackingInstance inst = lengths_to_instance(s);
    const auto v = oracle::brute_decide(inst.blocks, std::vector<Container>{inst.container});
    CHECK((v == oracle::Verdict::yes) == decide(s));
  }
}

TEST_CASE("fast decision, greedy packer and oracle agree on the small sweep") {
  const auto report = run_selftest(SelftestBounds{});
  CHECK_MESSAGE(report.passed(), report.detail);
  CHECK(report.instances > 2000);
}

TEST_CASE("fast decision and greedy packer agree on larger random instances") {
  std::mt19937_64 rng(22);
  std::size_t yes = 0, no = 0;
  for (const auto& q : testutil::small_arities()) {
    for (int it = 0; it < 400; ++it) {
      const ProblemSpec s = testutil::random_spec(rng, q, 25, 5, 5);
      const bool fast = decide_fast(s);
      const auto sol = construct(s);
      CHECK(fast == sol.has_value());
      if (sol) {
        const PackingInstance inst = lengths_to_instance(s);
        CHECK(is_valid_solution(inst.blocks, std::vector<Container>{inst.container}, *sol));
        CHECK(kraft_ok(kraft_sum(s)));
        ++yes;
      } else {
        ++no;
      }
    }
  }
  CHECK(yes > 100);
  CHECK(no > 100);
}

TEST_CASE("oracle agrees beyond the sweep bounds") {
  std::mt19937_64 rng(23);
  oracle::OracleLimits limits;
  limits.max_m = 7;
  limits.max_dim = 256;
  for (const auto& q : testutil::small_arities()) {
    for (int it = 0; it < 150; ++it) {
      const ProblemSpec s = testutil::random_spec(rng, q, 7, 3, 3);
      const PackingInstance inst = lengths_to_instance(s);
      const auto v = oracle::brute_decide(inst.blocks, std::vector<Container>{inst.container}, limits);
      if (v == oracle::Verdict::budget_exceeded) continue;
      CHECK_MESSAGE((v == oracle::Verdict::yes) == decide_fast(s), describe(s));
    }
  }
}

TEST_CASE("decide is invariant under reordering and monotone under removal") {
  std::mt19937_64 rng(24);
  for (const auto& q : testutil::small_arities()) {
    for (int it = 0; it < 200; ++it) {
      ProblemSpec s = testutil::random_spec(rng, q, 12, 4, 4);
      const bool d = decide(s);
      for (int k = 0; k < 5; ++k) {
        std::shuffle(s.lengths.begin(), s.lengths.end(), rng);
        CHECK(decide(s) == d);
      }
      if (d) {
        CHECK(kraft_ok(kraft_sum(s)));
        for (std::size_t k = 0; k < s.lengths.size(); ++k) {
          ProblemSpec sub = s;
          sub.lengths.erase(sub.lengths.begin() + static_cast<long>(k));
          CHECK(decide(sub));
        }
      }
    }
  }
}

TEST_CASE("(0,0) takes the whole container") {
  CHECK(decide(spec(2, 3, {{0, 0}})));
  for (std::uint32_t l1 = 0; l1 <= 3; ++l1)
    for (std::uint32_t l2 = 0; l2 <= 3; ++l2) CHECK_FALSE(decide(spec(2, 3, {{0, 0}, {l1, l2}})));
}

TEST_CASE("bank area accounting holds after every mutation") {
  std::mt19937_64 rng(25);
  for (const auto& q : testutil::small_arities()) {
    for (int it = 0; it < 300; ++it) {
      const ProblemSpec s = testutil::random_spec(rng, q, 30, 6, 6);
      const Groups g = group_blocks(s);
      ContainerBank bank = ContainerBank::canonical(q, s.l1_max(), s.l2_max());
      BigInt free_area = exp_area(RegularExp{s.l1_max(), s.l2_max()}, q);
      CHECK(bank.free_area() == free_area);
      bool ok = true;
      for (std::size_t k = 0; k < g.sizes.size() && ok; ++k) {
        bank.refine_to(g.caps[k].a, g.caps[k].b);
        CHECK(bank.free_area() == free_area);
        CHECK(bank.cap_a() == g.caps[k].a);
        CHECK(bank.cap_b() == g.caps[k].b);
        ok = bank.place_run(g.sizes[k], g.counts[k]);
        if (ok) {
          free_area -= exp_area(g.sizes[k], q) * g.counts[k];
          CHECK(bank.free_area() == free_area);
        }
      }
      CHECK(ok == decide_fast(s));
      for (const auto& [e, n] : bank.nonzero()) CHECK(n > 0);
    }
  }
}

TEST_CASE("a run of n blocks equals n single placements") {
  std::mt19937_64 rng(26);
  for (const auto& q : testutil::small_arities()) {
    for (int it = 0; it < 300; ++it) {
      const std::uint32_t L1 = rng() % 5, L2 = rng() % 5;
      ContainerBank base(q, L1, L2);
      for (int k = 0; k < 6; ++k) base.add(RegularExp{std::uint32_t(rng() % (L1 + 1)), std::uint32_t(rng() % (L2 + 1))}, rng() % 3);
      // pick a block whose long side sits at the cap
      const BigInt W = pow_big(q.q1, L1), H = pow_big(q.q2, L2);
      RegularExp block;
      if (W >= H) {
        block = RegularExp{L1, std::uint32_t(rng() % (L2 + 1))};
        if (pow_big(q.q2, block.b) > W) continue;
      } else {
        block = RegularExp{std::uint32_t(rng() % (L1 + 1)), L2};
        if (pow_big(q.q1, block.a) >= H) continue;
      }
      const std::uint64_t n = 1 + rng() % 40;
      ContainerBank bulk = base, single = base;
      const bool bulk_ok = bulk.place_run(block, n);
      bool single_ok = true;
      for (std::uint64_t k = 0; k < n && single_ok; ++k) single_ok = single.place_run(block, 1);
      CHECK(bulk_ok == single_ok);
      if (bulk_ok) CHECK(bulk.nonzero() == single.nonzero());
    }
  }
}

TEST_CASE("place_run refuses a block below the cap") {
  ContainerBank bank = ContainerBank::canonical(Arities{2, 2}, 3, 3);
  CHECK_THROWS_AS(bank.place_run(RegularExp{2, 1}, 1), std::logic_error);
  CHECK_FALSE(bank.place_run(RegularExp{3, 3}, 2));
}

TEST_CASE("bank leftovers equal the greedy packer's leftovers") {
  std::mt19937_64 rng(27);
  std::size_t compared = 0;
  for (const auto& q : testutil::small_arities()) {
    for (int it = 0; it < 300; ++it) {
      const ProblemSpec s = testutil::random_spec(rng, q, 20, 5, 5);
      const auto bank = pack_counts(s);
      const PackingInstance inst = lengths_to_instance(s);
      const auto run = run_naive(sort_blocks_desc(inst.blocks), std::vector<Container>{inst.container}, q);
      CHECK(bank.has_value() == run.solution.has_value());
      if (bank && run.solution) {
        CHECK(bank->nonzero() == grid_counts(run.free, q));
        ++compared;
      }
    }
  }
  CHECK(compared > 200);
}

TEST_CASE("huge exponents stay exact") {
  ProblemSpec s = spec(10, 7, {{60, 0}, {0, 60}});
  CHECK_FALSE(decide(s));
  s = spec(10, 7, {{1, 60}, {60, 1}});
  CHECK(decide(s));
  ProblemSpec full;
  full.arities = Arities{3, 3};
  for (int k = 0; k < 3; ++k) full.lengths.push_back(LengthTuple{1, 0});
  full.lengths.back() = LengthTuple{1, 50};
  CHECK(decide(full));
  const auto sol = construct(full);
  REQUIRE(sol.has_value());
  const PackingInstance inst = lengths_to_instance(full);
  CHECK(is_valid_solution(inst.blocks, std::vector<Container>{inst.container}, *sol));
}

#include <algorithm>
#include <random>
#include <set>

#include "doctest.h"
#include "prefixpack/codes.hpp"
#include "prefixpack/geometry.hpp"
#include "prefixpack/oracle.hpp"
#include "prefixpack/selftest.hpp"
#include "test_util.hpp"

using namespace prefixpack;
using testutil::B;
using testutil::R;
using testutil::S;

TEST_CASE("brute_decide examples") {
  CHECK(oracle::brute_decide(std::vector<Block>{B(1, 2), B(2, 1)}, std::vector<Container>{R(0, 0, 2, 2)}) ==
        oracle::Verdict::no);
  CHECK(oracle::brute_decide(std::vector<Block>{B(2, 1), B(1, 2)},
                             std::vector<Container>{R(0, 0, 2, 2), R(0, 2, 2, 1)}) == oracle::Verdict::yes);
  CHECK(oracle::brute_decide(std::vector<Block>{}, std::vector<Container>{R(0, 0, 2, 2)}) ==
        oracle::Verdict::yes);
  CHECK(oracle::brute_decide(std::vector<Block>{}, std::vector<Container>{}) == oracle::Verdict::yes);
  // a block may not straddle two touching containers
  CHECK(oracle::brute_decide(std::vector<Block>{B(2, 2)},
                             std::vector<Container>{R(0, 0, 1, 2), R(1, 0, 1, 2)}) == oracle::Verdict::no);
}

TEST_CASE("brute_decide reports an exhausted budget") {
  std::vector<Block> blocks(12, B(1, 1));
  blocks.push_back(B(4, 4));
  oracle::OracleLimits limits;
  limits.max_nodes = 50;
  CHECK(oracle::brute_decide(blocks, std::vector<Container>{R(0, 0, 4, 4)}, limits) ==
        oracle::Verdict::budget_exceeded);
  limits.max_m = 3;
  CHECK_THROWS_AS(oracle::brute_decide(blocks, std::vector<Container>{R(0, 0, 4, 4)}, limits), InputError);
}

TEST_CASE("brute_decide does not depend on block order") {
  std::mt19937_64 rng(41);
  for (const auto& q : testutil::small_arities()) {
    for (int it = 0; it < 150; ++it) {
      const ProblemSpec s = testutil::random_spec(rng, q, 6, 2, 2);
      auto inst = lengths_to_instance(s);
      const std::vector<Container> cs{inst.container};
      const auto v = oracle::brute_decide(inst.blocks, cs);
      REQUIRE(v != oracle::Verdict::budget_exceeded);
      for (int k = 0; k < 4; ++k) {
        std::shuffle(inst.blocks.begin(), inst.blocks.end(), rng);
        CHECK(oracle::brute_decide(inst.blocks, cs) == v);
      }
    }
  }
}

TEST_CASE("brute_sigma_min examples") {
  const Arities q{2, 2};
  auto r = oracle::brute_sigma_min(R(1, 0, 2, 1), S(2, 1), q);
  CHECK(r.status == oracle::SigmaMin::Status::found);
  CHECK(r.min_count == 2);
  r = oracle::brute_sigma_min(R(0, 0, 2, 2), S(2, 2), q);
  CHECK(r.min_count == 1);
  CHECK(r.partition == std::vector<Region>{R(0, 0, 2, 2)});
  r = oracle::brute_sigma_min(R(0, 0, 4, 2), S(2, 1), q);
  CHECK(r.min_count == 4);
  CHECK_THROWS_AS(oracle::brute_sigma_min(R(0, 0, 9, 8), S(1, 1), q), InputError);
}

TEST_CASE("brute_sigma_min partitions satisfy the cut invariants") {
  std::mt19937_64 rng(42);
  for (const auto& q : testutil::small_arities()) {
    for (int it = 0; it < 300; ++it) {
      const Region c = R(rng() % 20, rng() % 20, 1 + rng() % 8, 1 + rng() % 8);
      const Size s = S(testutil::ipow(q.q1, rng() % 3), testutil::ipow(q.q2, rng() % 3));
      const auto r = oracle::brute_sigma_min(c, s, q);
      REQUIRE(r.status == oracle::SigmaMin::Status::found);
      CHECK(r.partition.size() == r.min_count);
      CHECK(r.optimal_partitions >= 1);
      testutil::Cells covered;
      std::size_t total = 0;
      for (const auto& p : r.partition) {
        CHECK(is_regular(p.size, q));
        CHECK(is_aligned(p));
        CHECK(covers(s, p.size));
        auto pc = testutil::cells_of(p);
        total += pc.size();
        covered.insert(pc.begin(), pc.end());
      }
      CHECK(covered.size() == total);
      CHECK(covered == testutil::cells_of(c));
    }
  }
}

TEST_CASE("enumeration examples") {
  const auto one = oracle::enumerate_instances({Arities{2, 2}}, 1, 1);
  REQUIRE(one.size() == 5);
  std::set<std::vector<LengthTuple>> got;
  for (const auto& s : one) got.insert(s.lengths);
  const std::set<std::vector<LengthTuple>> expect{
      {}, {LengthTuple{0, 0}}, {LengthTuple{0, 1}}, {LengthTuple{1, 0}}, {LengthTuple{1, 1}}};
  CHECK(got == expect);

  // multisets of size <= 2 over 4 tuple kinds: C(5,2) + C(4,1) + 1
  CHECK(oracle::enumerate_instances({Arities{2, 2}}, 2, 1).size() == 15);
}

TEST_CASE("enumeration counts match multiset counting") {
  auto binom = [](std::size_t n, std::size_t k) {
    std::size_t r = 1;
    for (std::size_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
  };
  for (std::size_t m = 0; m <= 4; ++m) {
    for (std::uint32_t len = 0; len <= 2; ++len) {
      const std::size_t kinds = (len + 1) * (len + 1);
      std::size_t expect = 0;
      for (std::size_t k = 0; k <= m; ++k) expect += binom(kinds + k - 1, k);
      const std::vector<std::uint32_t> values{2, 3};
      const auto all = oracle::enumerate_instances(oracle::arity_pairs(values), m, len);
      CHECK(all.size() == 4 * expect);
      std::set<std::pair<std::pair<std::uint32_t, std::uint32_t>, std::vector<LengthTuple>>> distinct;
      for (const auto& s : all) {
        CHECK(std::is_sorted(s.lengths.begin(), s.lengths.end()));
        CHECK_NOTHROW(s.validate());
        distinct.insert({{s.arities.q1, s.arities.q2}, s.lengths});
      }
      CHECK(distinct.size() == all.size());
    }
  }
}

TEST_CASE("instance stream restarts deterministically") {
  const std::vector<std::uint32_t> values{2, 3};
  oracle::InstanceStream stream(oracle::arity_pairs(values), 3, 1);
  std::vector<std::string> first, second;
  while (auto s = stream.next()) first.push_back(describe(*s));
  stream.reset();
  while (auto s = stream.next()) second.push_back(describe(*s));
  CHECK(first == second);
  CHECK_FALSE(stream.next().has_value());
  CHECK(oracle::arity_pairs(values).size() == 4);
}

#include "prefixpack/model.hpp"

#include <algorithm>
#include <numeric>

namespace prefixpack {

void Arities::validate() const {
  if (q1 < 2 || q2 < 2) {
    throw InputError("arities must be at least 2, got (" + std::to_string(q1) + ", " +
                     std::to_string(q2) + ")");
  }
}

std::uint32_t ProblemSpec::l1_max() const {
  std::uint32_t m = 0;
  for (const auto& t : lengths) m = std::max(m, t.l1);
  return m;
}

std::uint32_t ProblemSpec::l2_max() const {
  std::uint32_t m = 0;
  for (const auto& t : lengths) m = std::max(m, t.l2);
  return m;
}

bool region_less(const Region& a, const Region& b) {
  if (a.x != b.x) return a.x < b.x;
  if (a.y != b.y) return a.y < b.y;
  if (a.w() != b.w()) return a.w() < b.w();
  return a.h() < b.h();
}

namespace {

std::strong_ordering cmp_big(const BigInt& a, const BigInt& b) {
  if (a < b) return std::strong_ordering::less;
  if (a > b) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

}  // namespace

std::strong_ordering cmp_total(const Size& s1, const Size& s2) {
  const BigInt& m1 = std::max(s1.w, s1.h);
  const BigInt& m2 = std::max(s2.w, s2.h);
  if (auto c = cmp_big(m1, m2); c != 0) return c;
  if (auto c = cmp_big(s1.w, s2.w); c != 0) return c;
  return cmp_big(s1.h, s2.h);
}

PartialOrder cmp_partial(const Size& s1, const Size& s2) {
  if (s1 == s2) return PartialOrder::equal;
  if (s1.w >= s2.w && s1.h >= s2.h) return PartialOrder::succeeds;
  if (s1.w <= s2.w && s1.h <= s2.h) return PartialOrder::precedes;
  return PartialOrder::incomparable;
}

std::optional<std::uint32_t> exact_log(const BigInt& v, std::uint32_t base) {
  if (v < 1 || base < 2) return std::nullopt;
  BigInt cur = v;
  std::uint32_t e = 0;
  while (cur > 1) {
    if (cur % base != 0) return std::nullopt;
    cur /= base;
    ++e;
  }
  return e;
}

bool is_regular(const Size& s, const Arities& q) {
  return exact_log(s.w, q.q1).has_value() && exact_log(s.h, q.q2).has_value();
}

bool is_aligned(const Region& r) {
  return r.w() > 0 && r.h() > 0 && r.x % r.w() == 0 && r.y % r.h() == 0;
}

std::vector<std::size_t> sorted_block_order(std::span<const Block> blocks) {
  std::vector<std::size_t> order(blocks.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(), [&](std::size_t i, std::size_t j) {
    return cmp_total(blocks[i].size, blocks[j].size) > 0;
  });
  return order;
}

std::vector<Block> sort_blocks_desc(std::vector<Block> blocks) {
  std::stable_sort(blocks.begin(), blocks.end(), [](const Block& a, const Block& b) {
    return cmp_total(a.size, b.size) > 0;
  });
  return blocks;
}

BigInt pow_big(std::uint32_t base, std::uint32_t exp) {
  return boost::multiprecision::pow(BigInt(base), exp);
}

Size to_size(const RegularExp& e, const Arities& q) {
  return Size{pow_big(q.q1, e.a), pow_big(q.q2, e.b)};
}

std::optional<RegularExp> to_exp(const Size& s, const Arities& q) {
  auto a = exact_log(s.w, q.q1);
  auto b = exact_log(s.h, q.q2);
  if (!a || !b) return std::nullopt;
  return RegularExp{*a, *b};
}

std::string to_string(const Size& s) {
  return "[" + s.w.str() + "," + s.h.str() + "]";
}

std::string to_string(const Region& r) {
  return "Reg(" + r.x.str() + "," + r.y.str() + "," + r.w().str() + "," + r.h().str() + ")";
}

}  // namespace prefixpack

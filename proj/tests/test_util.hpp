#pragma once

#include <cstdint>
#include <random>
#include <set>
#include <utility>
#include <vector>

#include "prefixpack/model.hpp"

namespace testutil {

using prefixpack::Arities;
using prefixpack::BigInt;
using prefixpack::Block;
using prefixpack::LengthTuple;
using prefixpack::ProblemSpec;
using prefixpack::Region;
using prefixpack::Size;

inline Size S(long w, long h) { return Size{BigInt(w), BigInt(h)}; }
inline Region R(long x, long y, long w, long h) { return Region(x, y, w, h); }
inline Block B(long w, long h) { return Block{S(w, h)}; }

inline long ipow(long base, unsigned e) {
  long r = 1;
  while (e--) r *= base;
  return r;
}

inline ProblemSpec spec(std::uint32_t q1, std::uint32_t q2,
                        std::vector<std::pair<std::uint32_t, std::uint32_t>> lens) {
  ProblemSpec s;
  s.arities = Arities{q1, q2};
  for (auto [a, b] : lens) s.lengths.push_back(LengthTuple{a, b});
  return s;
}

inline const std::vector<Arities>& small_arities() {
  static const std::vector<Arities> all{{2, 2}, {2, 3}, {3, 2}, {3, 3}};
  return all;
}

// Covered unit cells of a region, for small explicit geometry checks.
using Cells = std::set<std::pair<long, long>>;

inline Cells cells_of(const Region& r) {
  Cells out;
  const long x = r.x.convert_to<long>(), y = r.y.convert_to<long>();
  const long w = r.w().convert_to<long>(), h = r.h().convert_to<long>();
  for (long i = x; i < x + w; ++i)
    for (long j = y; j < y + h; ++j) out.insert({i, j});
  return out;
}

// Every aligned [w,h] cell lying inside c, by direct enumeration.
inline std::vector<Region> aligned_cells_inside(const Region& c, long w, long h) {
  std::vector<Region> out;
  const long x0 = c.x.convert_to<long>(), y0 = c.y.convert_to<long>();
  const long x1 = c.right().convert_to<long>(), y1 = c.top().convert_to<long>();
  for (long x = 0; x + w <= x1; x += w) {
    if (x < x0) continue;
    for (long y = 0; y + h <= y1; y += h) {
      if (y < y0) continue;
      out.push_back(R(x, y, w, h));
    }
  }
  return out;
}

// Random length multiset with the given bounds.
inline ProblemSpec random_spec(std::mt19937_64& rng, const Arities& q, std::size_t max_m,
                               std::uint32_t max_l1, std::uint32_t max_l2) {
  ProblemSpec s;
  s.arities = q;
  const std::size_t m = std::uniform_int_distribution<std::size_t>(1, max_m)(rng);
  std::uniform_int_distribution<std::uint32_t> d1(0, max_l1), d2(0, max_l2);
  for (std::size_t k = 0; k < m; ++k) s.lengths.push_back(LengthTuple{d1(rng), d2(rng)});
  return s;
}

}  // namespace testutil

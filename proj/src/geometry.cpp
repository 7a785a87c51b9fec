#include "prefixpack/geometry.hpp"

#include <algorithm>

namespace prefixpack {

namespace {

BigInt ceil_multiple(const BigInt& v, const BigInt& step) {
  return ((v + step - 1) / step) * step;
}

BigInt floor_multiple(const BigInt& v, const BigInt& step) {
  return (v / step) * step;
}

// Whether [lo, lo+len) holds an aligned interval of length `step`.
bool fits_aligned(const BigInt& lo, const BigInt& len, const BigInt& step) {
  return floor_multiple(lo + len, step) - ceil_multiple(lo, step) >= step;
}

// Largest e with base^e <= limit and an aligned base^e interval in [lo, lo+len).
BigInt largest_fitting_power(const BigInt& lo, const BigInt& len, const BigInt& limit,
                             std::uint32_t base) {
  BigInt best = 1;
  for (BigInt next = base; next <= limit && fits_aligned(lo, len, next); next *= base) {
    best = next;
  }
  return best;
}

void cut_into(const Region& c, const Size& s, const Arities& q, std::vector<QuotientGrid>& out) {
  Size cell{largest_fitting_power(c.x, c.w(), s.w, q.q1),
            largest_fitting_power(c.y, c.h(), s.h, q.q2)};
  // A 1x1 cell always fits in an integer region, so the bound exists.
  auto bound = quotient_bound(c, cell);
  out.push_back(QuotientGrid{*bound, cell});
  for (const auto& piece : remainder_frame(c, *bound)) {
    if (piece) cut_into(*piece, s, q, out);
  }
}

}  // namespace

bool overlap(const Region& r1, const Region& r2) {
  return r1.x < r2.right() && r2.x < r1.right() && r1.y < r2.top() && r2.y < r1.top();
}

bool contains(const Region& outer, const Region& inner) {
  return outer.x <= inner.x && inner.right() <= outer.right() && outer.y <= inner.y &&
         inner.top() <= outer.top();
}

std::optional<Region> quotient_bound(const Region& c, const Size& s) {
  BigInt x0 = ceil_multiple(c.x, s.w);
  BigInt x1 = floor_multiple(c.right(), s.w);
  BigInt y0 = ceil_multiple(c.y, s.h);
  BigInt y1 = floor_multiple(c.top(), s.h);
  if (x1 - x0 < s.w || y1 - y0 < s.h) return std::nullopt;
  return Region(x0, y0, x1 - x0, y1 - y0);
}

std::array<std::optional<Region>, 8> remainder_frame(const Region& c, const Region& quotient) {
  const BigInt xs[3] = {c.x, quotient.x, quotient.right()};
  const BigInt ws[3] = {quotient.x - c.x, quotient.w(), c.right() - quotient.right()};
  const BigInt ys[3] = {quotient.top(), quotient.y, c.y};
  const BigInt hs[3] = {c.top() - quotient.top(), quotient.h(), quotient.y - c.y};

  std::array<std::optional<Region>, 8> frame;
  std::size_t slot = 0;
  for (int row = 0; row < 3; ++row) {
    for (int col = 0; col < 3; ++col) {
      if (row == 1 && col == 1) continue;
      if (ws[col] > 0 && hs[row] > 0) frame[slot] = Region(xs[col], ys[row], ws[col], hs[row]);
      ++slot;
    }
  }
  return frame;
}

std::vector<Region> remainder_regions(const Region& c, const Size& s) {
  auto bound = quotient_bound(c, s);
  if (!bound) return {c};
  std::vector<Region> out;
  for (auto& piece : remainder_frame(c, *bound)) {
    if (piece) out.push_back(std::move(*piece));
  }
  return out;
}

std::vector<QuotientGrid> cut_sigma_grids(const Region& c, const Size& s, const Arities& q) {
  if (!is_regular(s, q)) throw InputError("cut bound " + to_string(s) + " is not regular");
  std::vector<QuotientGrid> out;
  cut_into(c, s, q, out);
  return out;
}

std::vector<Region> expand(const QuotientGrid& g) {
  std::vector<Region> out;
  for (BigInt x = g.bound.x; x < g.bound.right(); x += g.cell.w) {
    for (BigInt y = g.bound.y; y < g.bound.top(); y += g.cell.h) {
      out.emplace_back(x, y, g.cell);
    }
  }
  return out;
}

std::vector<Region> cut_sigma(const Region& c, const Size& s, const Arities& q) {
  std::vector<Region> out;
  for (const auto& g : cut_sigma_grids(c, s, q)) {
    auto cells = expand(g);
    out.insert(out.end(), cells.begin(), cells.end());
  }
  std::sort(out.begin(), out.end(), region_less);
  return out;
}

ExpCounts cut_sigma_counts(const Region& c, const Size& s, const Arities& q) {
  ExpCounts counts;
  for (const auto& g : cut_sigma_grids(c, s, q)) {
    counts[*to_exp(g.cell, q)] += g.count();
  }
  return counts;
}

ExpCounts corner_cut(const RegularExp& container, const RegularExp& block, const Arities& q) {
  if (block.a > container.a || block.b > container.b) {
    throw InputError("block exceeds container in corner_cut");
  }
  ExpCounts counts;
  for (std::uint32_t k = block.a; k < container.a; ++k) {
    counts[RegularExp{k, container.b}] += q.q1 - 1;
  }
  for (std::uint32_t t = block.b; t < container.b; ++t) {
    counts[RegularExp{block.a, t}] += q.q2 - 1;
  }
  return counts;
}

std::vector<QuotientGrid> corner_cut_grids(const Region& container, const Size& block,
                                           const Arities& q) {
  if (!covers(container.size, block)) throw InputError("block exceeds container in corner_cut");
  std::vector<QuotientGrid> out;
  for (BigInt w = block.w; w < container.w(); w *= q.q1) {
    out.push_back(QuotientGrid{Region(container.x + w, container.y, w * (q.q1 - 1), container.h()),
                               Size{w, container.h()}});
  }
  for (BigInt h = block.h; h < container.h(); h *= q.q2) {
    out.push_back(QuotientGrid{Region(container.x, container.y + h, block.w, h * (q.q2 - 1)),
                               Size{block.w, h}});
  }
  return out;
}

}  // namespace prefixpack

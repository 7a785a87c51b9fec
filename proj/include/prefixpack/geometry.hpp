#pragma once

#include <array>
#include <map>
#include <optional>
#include <vector>

#include "prefixpack/model.hpp"

namespace prefixpack {

/// A rectangular block of identical regular aligned containers: `bound` is
/// tiled by cells of size `cell`. Quotient containers are kept in this form
/// so that huge grids are never enumerated.
struct QuotientGrid {
  Region bound;
  Size cell;

  BigInt columns() const { return bound.w() / cell.w; }
  BigInt rows() const { return bound.h() / cell.h; }
  BigInt count() const { return columns() * rows(); }

  friend bool operator==(const QuotientGrid&, const QuotientGrid&) = default;
};

using ExpCounts = std::map<RegularExp, BigInt>;

bool overlap(const Region& r1, const Region& r2);

/// `inner` lies entirely inside `outer`.
bool contains(const Region& outer, const Region& inner);

/// Bounding region of all aligned [w,h] cells inside `c`, or nullopt when
/// no such cell fits.
std::optional<Region> quotient_bound(const Region& c, const Size& s);

/// The eight frame pieces around `quotient` inside `c`, in the order
/// top-left, top-mid, top-right, mid-left, mid-right, low-left, low-mid,
/// low-right. Empty pieces are nullopt.
std::array<std::optional<Region>, 8> remainder_frame(const Region& c, const Region& quotient);

/// Non-empty remainder regions of `c` with respect to `s`; `{c}` when no
/// quotient container exists.
std::vector<Region> remainder_regions(const Region& c, const Size& s);

/// Container cutting function: the unique smallest partition of `c` into
/// regular aligned containers each ⪯ `s`, grouped into quotient grids.
/// Throws InputError when `s` is not regular.
std::vector<QuotientGrid> cut_sigma_grids(const Region& c, const Size& s, const Arities& q);

/// cut_sigma_grids expanded to individual containers, sorted by region_less.
std::vector<Region> cut_sigma(const Region& c, const Size& s, const Arities& q);

/// cut_sigma_grids summarised as counts per regular size.
ExpCounts cut_sigma_counts(const Region& c, const Size& s, const Arities& q);

std::vector<Region> expand(const QuotientGrid& g);

/// Leftover containers after a block of size `block` is placed at the
/// lower-left corner of a regular aligned container of size `container`:
/// (q1-1) containers [q1^k, q2^j] for each k in [a, i), then (q2-1)
/// containers [q1^a, q2^t] for each t in [b, j).
ExpCounts corner_cut(const RegularExp& container, const RegularExp& block, const Arities& q);

/// Same partition as corner_cut, located inside `container`. The strips to
/// the right of the block span the full container height; the pieces above
/// the block have the block's width.
std::vector<QuotientGrid> corner_cut_grids(const Region& container, const Size& block,
                                           const Arities& q);

}  // namespace prefixpack

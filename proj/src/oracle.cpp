#include "prefixpack/oracle.hpp"

#include <algorithm>
#include <bit>
#include <unordered_map>

namespace prefixpack::oracle {

namespace {

struct Rect {
  std::int64_t x, y, w, h;
};

struct BudgetExceeded {};

std::int64_t to_small(const BigInt& v, std::int64_t limit, const char* what) {
  if (v < 0 || v > limit) {
    throw InputError(std::string("oracle input out of range: ") + what + " = " + v.str());
  }
  return v.convert_to<std::int64_t>();
}

bool rects_overlap(const Rect& a, const Rect& b) {
  return a.x < b.x + b.w && b.x < a.x + a.w && a.y < b.y + b.h && b.y < a.y + a.h;
}

std::int64_t ceil_to(std::int64_t v, std::int64_t step) { return (v + step - 1) / step * step; }

class Backtracker {
 public:
  Backtracker(std::vector<Rect> blocks, std::vector<Rect> containers, std::uint64_t budget)
      : blocks_(std::move(blocks)), budget_(budget) {
    for (const auto& b : blocks_) {
      std::vector<std::pair<std::int64_t, std::int64_t>> spots;
      for (const auto& c : containers) {
        for (auto x = ceil_to(c.x, b.w); x + b.w <= c.x + c.w; x += b.w) {
          for (auto y = ceil_to(c.y, b.h); y + b.h <= c.y + c.h; y += b.h) spots.emplace_back(x, y);
        }
      }
      std::sort(spots.begin(), spots.end());
      candidates_.push_back(std::move(spots));
    }
    chosen_.assign(blocks_.size(), 0);
    placed_.resize(blocks_.size());
  }

  bool run(std::size_t k) {
    if (k == blocks_.size()) return true;
    const Rect& b = blocks_[k];
    std::size_t start = 0;
    if (k > 0 && blocks_[k - 1].w == b.w && blocks_[k - 1].h == b.h) start = chosen_[k - 1] + 1;
    const auto& spots = candidates_[k];
    for (std::size_t idx = start; idx < spots.size(); ++idx) {
      if (++nodes_ > budget_) throw BudgetExceeded{};
      Rect r{spots[idx].first, spots[idx].second, b.w, b.h};
      bool clash = false;
      for (std::size_t j = 0; j < k && !clash; ++j) clash = rects_overlap(r, placed_[j]);
      if (clash) continue;
      placed_[k] = r;
      chosen_[k] = idx;
      if (run(k + 1)) return true;
    }
    return false;
  }

 private:
  std::vector<Rect> blocks_;
  std::vector<std::vector<std::pair<std::int64_t, std::int64_t>>> candidates_;
  std::vector<std::size_t> chosen_;
  std::vector<Rect> placed_;
  std::uint64_t budget_;
  std::uint64_t nodes_ = 0;
};

}  // namespace

Verdict brute_decide(std::span<const Block> blocks, std::span<const Container> containers,
                     const OracleLimits& limits) {
  if (blocks.size() > limits.max_m) throw InputError("oracle: too many blocks");
  const std::int64_t dim = limits.max_dim;
  std::vector<Rect> bs;
  for (const auto& b : blocks) {
    auto w = to_small(b.size.w, dim, "block width");
    auto h = to_small(b.size.h, dim, "block height");
    if (w < 1 || h < 1) throw InputError("oracle: empty block");
    bs.push_back(Rect{0, 0, w, h});
  }
  std::vector<Rect> cs;
  for (const auto& c : containers) {
    cs.push_back(Rect{to_small(c.x, 4 * dim, "container x"), to_small(c.y, 4 * dim, "container y"),
                      to_small(c.w(), dim, "container width"),
                      to_small(c.h(), dim, "container height")});
  }
  try {
    Backtracker search(std::move(bs), std::move(cs), limits.max_nodes);
    return search.run(0) ? Verdict::yes : Verdict::no;
  } catch (const BudgetExceeded&) {
    return Verdict::budget_exceeded;
  }
}

namespace {

class SigmaSearch {
 public:
  struct Entry {
    std::uint32_t best;
    std::uint64_t ways;
    std::int32_t choice;  // index into pieces_, -1 at the full mask
  };

  SigmaSearch(std::int64_t x0, std::int64_t y0, std::int64_t w, std::int64_t h,
              std::vector<std::pair<std::int64_t, std::int64_t>> pieces, std::uint64_t budget)
      : x0_(x0), y0_(y0), w_(w), h_(h), pieces_(std::move(pieces)), budget_(budget) {
    const auto cells = static_cast<int>(w * h);
    full_ = cells == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << cells) - 1;
  }

  const Entry& solve(std::uint64_t mask) {
    if (auto it = memo_.find(mask); it != memo_.end()) return it->second;
    if (memo_.size() >= budget_) throw BudgetExceeded{};
    Entry e{0, 1, -1};
    if (mask != full_) {
      e = Entry{UINT32_MAX, 0, -1};
      const int p = std::countr_one(mask);
      const std::int64_t cx = p % w_;
      const std::int64_t cy = p / w_;
      for (std::size_t k = 0; k < pieces_.size(); ++k) {
        const auto [pw, ph] = pieces_[k];
        if ((x0_ + cx) % pw != 0 || (y0_ + cy) % ph != 0) continue;
        if (cx + pw > w_ || cy + ph > h_) continue;
        const std::uint64_t pm = piece_mask(cx, cy, pw, ph);
        if (pm & mask) continue;
        const Entry sub = solve(mask | pm);
        if (sub.best + 1 < e.best) {
          e = Entry{sub.best + 1, sub.ways, static_cast<std::int32_t>(k)};
        } else if (sub.best + 1 == e.best) {
          e.ways = std::min<std::uint64_t>(e.ways + sub.ways, UINT64_MAX / 2);
        }
      }
    }
    return memo_.emplace(mask, e).first->second;
  }

  std::vector<Region> rebuild() {
    std::vector<Region> out;
    std::uint64_t mask = 0;
    while (mask != full_) {
      const Entry e = solve(mask);
      const int p = std::countr_one(mask);
      const std::int64_t cx = p % w_;
      const std::int64_t cy = p / w_;
      const auto [pw, ph] = pieces_[static_cast<std::size_t>(e.choice)];
      out.emplace_back(x0_ + cx, y0_ + cy, pw, ph);
      mask |= piece_mask(cx, cy, pw, ph);
    }
    std::sort(out.begin(), out.end(), region_less);
    return out;
  }

 private:
  std::uint64_t piece_mask(std::int64_t cx, std::int64_t cy, std::int64_t pw,
                           std::int64_t ph) const {
    const std::uint64_t row = pw == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << pw) - 1;
    std::uint64_t m = 0;
    for (std::int64_t r = 0; r < ph; ++r) m |= row << ((cy + r) * w_ + cx);
    return m;
  }

  std::int64_t x0_, y0_, w_, h_;
  std::vector<std::pair<std::int64_t, std::int64_t>> pieces_;
  std::uint64_t budget_;
  std::uint64_t full_;
  std::unordered_map<std::uint64_t, Entry> memo_;
};

}  // namespace

SigmaMin brute_sigma_min(const Region& c, const Size& s, const Arities& q,
                         const OracleLimits& limits) {
  q.validate();
  const std::int64_t dim = limits.max_dim;
  const auto w = to_small(c.w(), dim, "container width");
  const auto h = to_small(c.h(), dim, "container height");
  const auto x = to_small(c.x, 4 * dim, "container x");
  const auto y = to_small(c.y, 4 * dim, "container y");
  if (w < 1 || h < 1 || w * h > 64) throw InputError("oracle: container must have 1..64 cells");

  std::vector<std::pair<std::int64_t, std::int64_t>> pieces;
  for (std::int64_t pw = 1; pw <= w && pw <= s.w; pw *= q.q1) {
    for (std::int64_t ph = 1; ph <= h && ph <= s.h; ph *= q.q2) pieces.emplace_back(pw, ph);
  }
  // Larger pieces first so the retained partition is found early.
  std::reverse(pieces.begin(), pieces.end());

  SigmaMin out;
  try {
    SigmaSearch search(x, y, w, h, std::move(pieces), limits.max_nodes);
    const auto& root = search.solve(0);
    if (root.best == UINT32_MAX) return out;
    out.status = SigmaMin::Status::found;
    out.min_count = root.best;
    out.optimal_partitions = root.ways;
    out.partition = search.rebuild();
  } catch (const BudgetExceeded&) {
    out = SigmaMin{};
    out.status = SigmaMin::Status::budget_exceeded;
  }
  return out;
}

std::vector<Arities> arity_pairs(std::span<const std::uint32_t> values) {
  std::vector<Arities> out;
  for (auto a : values) {
    for (auto b : values) out.push_back(Arities{a, b});
  }
  return out;
}

InstanceStream::InstanceStream(std::vector<Arities> q_choices, std::size_t max_m,
                               std::uint32_t max_len)
    : q_choices_(std::move(q_choices)),
      max_m_(max_m),
      max_len_(max_len),
      tuple_kinds_((std::size_t{max_len} + 1) * (std::size_t{max_len} + 1)) {}

void InstanceStream::reset() {
  q_index_ = 0;
  m_ = 0;
  combo_.clear();
  fresh_ = true;
}

std::optional<ProblemSpec> InstanceStream::next() {
  if (q_index_ >= q_choices_.size()) return std::nullopt;
  if (fresh_) {
    fresh_ = false;
    combo_.assign(m_, 0);
  } else {
    // advance to the next nondecreasing combination
    std::size_t i = combo_.size();
    while (i > 0 && combo_[i - 1] == tuple_kinds_ - 1) --i;
    if (i == 0) {
      if (++m_ > max_m_) {
        m_ = 0;
        ++q_index_;
        if (q_index_ >= q_choices_.size()) return std::nullopt;
      }
      combo_.assign(m_, 0);
    } else {
      const std::size_t v = combo_[i - 1] + 1;
      std::fill(combo_.begin() + static_cast<std::ptrdiff_t>(i - 1), combo_.end(), v);
    }
  }
  ProblemSpec spec;
  spec.arities = q_choices_[q_index_];
  const std::size_t side = std::size_t{max_len_} + 1;
  for (auto t : combo_) {
    spec.lengths.push_back(
        LengthTuple{static_cast<std::uint32_t>(t / side), static_cast<std::uint32_t>(t % side)});
  }
  return spec;
}

std::vector<ProblemSpec> enumerate_instances(std::vector<Arities> q_choices, std::size_t max_m,
                                             std::uint32_t max_len) {
  InstanceStream stream(std::move(q_choices), max_m, max_len);
  std::vector<ProblemSpec> out;
  while (auto s = stream.next()) out.push_back(std::move(*s));
  return out;
}

}  // namespace prefixpack::oracle

#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace prefixpack {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Raised for malformed user input (bad arities, unsorted blocks, ...).
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Alphabet sizes of the two channels.
struct Arities {
  std::uint32_t q1 = 2;
  std::uint32_t q2 = 2;

  void validate() const;
  friend bool operator==(const Arities&, const Arities&) = default;
};

/// Codeword length as a (channel-1, channel-2) symbol count.
struct LengthTuple {
  std::uint32_t l1 = 0;
  std::uint32_t l2 = 0;

  friend auto operator<=>(const LengthTuple&, const LengthTuple&) = default;
};

/// Input of the decision procedure: arities and a multiset of lengths.
struct ProblemSpec {
  Arities arities;
  std::vector<LengthTuple> lengths;

  std::uint32_t l1_max() const;
  std::uint32_t l2_max() const;
  void validate() const { arities.validate(); }
};

struct Size {
  BigInt w{1};
  BigInt h{1};

  friend bool operator==(const Size&, const Size&) = default;
};

/// Exponent form of a regular size: [q1^a, q2^b].
struct RegularExp {
  std::uint32_t a = 0;
  std::uint32_t b = 0;

  friend auto operator<=>(const RegularExp&, const RegularExp&) = default;
};

/// Half-open rectangle [x, x+w) x [y, y+h).
struct Region {
  BigInt x{0};
  BigInt y{0};
  Size size;

  Region() = default;
  Region(BigInt x_, BigInt y_, BigInt w, BigInt h)
      : x(std::move(x_)), y(std::move(y_)), size{std::move(w), std::move(h)} {}
  Region(BigInt x_, BigInt y_, Size s)
      : x(std::move(x_)), y(std::move(y_)), size(std::move(s)) {}

  const BigInt& w() const { return size.w; }
  const BigInt& h() const { return size.h; }
  BigInt right() const { return x + size.w; }
  BigInt top() const { return y + size.h; }
  BigInt area() const { return size.w * size.h; }

  friend bool operator==(const Region&, const Region&) = default;
};

/// Lexicographic (x, y, w, h) order, for sets and deterministic output.
bool region_less(const Region& a, const Region& b);

using Container = Region;

/// A regular block; its location is chosen by the packer.
struct Block {
  Size size;

  Region placed(const BigInt& u, const BigInt& v) const { return Region(u, v, size); }
  friend bool operator==(const Block&, const Block&) = default;
};

enum class PartialOrder { succeeds, precedes, equal, incomparable };

/// Total order: max side first, then width, then height.
std::strong_ordering cmp_total(const Size& s1, const Size& s2);

/// Componentwise dominance.
PartialOrder cmp_partial(const Size& s1, const Size& s2);

/// s1 ⪰ s2, equality included.
inline bool covers(const Size& s1, const Size& s2) { return s1.w >= s2.w && s1.h >= s2.h; }

bool is_regular(const Size& s, const Arities& q);
bool is_aligned(const Region& r);

/// Stable descending sort under cmp_total.
std::vector<Block> sort_blocks_desc(std::vector<Block> blocks);

/// Permutation that sorts `blocks` descending (stable); result[k] is the
/// input index of the k-th largest block.
std::vector<std::size_t> sorted_block_order(std::span<const Block> blocks);

BigInt pow_big(std::uint32_t base, std::uint32_t exp);

/// e such that base^e == v, if any.
std::optional<std::uint32_t> exact_log(const BigInt& v, std::uint32_t base);

Size to_size(const RegularExp& e, const Arities& q);
std::optional<RegularExp> to_exp(const Size& s, const Arities& q);

std::string to_string(const Size& s);
std::string to_string(const Region& r);

}  // namespace prefixpack

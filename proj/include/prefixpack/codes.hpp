#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "prefixpack/model.hpp"
#include "prefixpack/packer.hpp"

namespace prefixpack {

/// Digit string, most significant digit first.
using Word = std::vector<std::uint32_t>;

struct Codeword {
  Word c1;
  Word c2;

  friend bool operator==(const Codeword&, const Codeword&) = default;
};

using Codebook = std::vector<Codeword>;

/// Exact Σ_j Π_i q_i^{-l_i^j} for any number of channels. Every tuple must
/// have one entry per arity.
Rational kraft_sum(std::span<const std::uint32_t> arities,
                   std::span<const std::vector<std::uint32_t>> lengths);
Rational kraft_sum(const ProblemSpec& spec);

inline bool kraft_ok(const Rational& sum) { return sum <= 1; }

struct SourceDistribution {
  std::vector<double> p;
  double base = 2.0;
};

struct EntropyReport {
  double avg_length = 0.0;  // in base-D symbols
  double entropy = 0.0;
  double slack = 0.0;  // avg_length - entropy
  bool equality = false;
};

inline constexpr double kEntropyTolerance = 1e-9;

EntropyReport entropy_bound(std::span<const std::uint32_t> arities,
                            std::span<const std::vector<std::uint32_t>> lengths,
                            const SourceDistribution& dist);

struct PackingInstance {
  std::vector<Block> blocks;  // same order as the spec's lengths
  Container container;
  std::uint32_t l1_max = 0;
  std::uint32_t l2_max = 0;
};

/// A codeword of length (l1, l2) becomes a block [q1^(L1-l1), q2^(L2-l2)]
/// inside the container [q1^L1, q2^L2].
PackingInstance lengths_to_instance(const ProblemSpec& spec);

/// Codeword whose prefix-tree leaves are exactly the cells covered by a
/// block of the canonical instance placed at (x, y).
Codeword location_to_codeword(const Arities& q, const LengthTuple& len, std::uint32_t l1_max,
                              std::uint32_t l2_max, const BigInt& x, const BigInt& y);

Codebook solution_to_codebook(const ProblemSpec& spec, const Solution& sol);

/// `a` is a prefix of `b` (every word is a prefix of itself).
bool is_prefix(const Word& a, const Word& b);

bool pair_prefix_free(const Codeword& a, const Codeword& b);

bool verify_codebook(const Codebook& cb);

/// Renders digits with 0-9a-z when q <= 36, dot-separated decimals otherwise.
std::string format_word(const Word& w, std::uint32_t q);
std::optional<Word> parse_word(std::string_view text, std::uint32_t q);

}  // namespace prefixpack

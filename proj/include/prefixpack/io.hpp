#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "prefixpack/codes.hpp"
#include "prefixpack/model.hpp"

namespace prefixpack {

/// Parsed instance file. `q` has one entry per channel; every tuple in
/// `lengths` has the same number of entries.
struct InstanceFile {
  std::vector<std::uint32_t> q;
  std::vector<std::vector<std::uint32_t>> lengths;
  std::optional<std::vector<double>> probs;
  std::optional<double> base;

  /// Two-channel view for the packer. A single-channel file becomes
  /// q = (q1, 2) with every l2 = 0. Throws InputError for three or more
  /// channels.
  ProblemSpec to_spec() const;
};

enum class InputFormat { detect, json, text };

/// JSON: {"q": [...], "lengths": [[...], ...], "probs": [...], "D": x}.
/// Text: a header line with the arities, then one tuple per line; '#'
/// starts a comment. Unknown JSON keys are rejected.
InstanceFile parse_instance(std::string_view text, InputFormat format = InputFormat::detect);
InstanceFile load_instance(const std::filesystem::path& path,
                           InputFormat format = InputFormat::detect);

struct ResultEntropy {
  double avg_length = 0.0;
  double entropy = 0.0;
  double slack = 0.0;

  friend bool operator==(const ResultEntropy&, const ResultEntropy&) = default;
};

struct ResultCodeword {
  std::string c1;
  std::string c2;

  friend bool operator==(const ResultCodeword&, const ResultCodeword&) = default;
};

struct ResultFile {
  bool decision = false;
  std::string kraft;  // "num/den"
  std::optional<std::vector<ResultCodeword>> codebook;
  std::optional<ResultEntropy> entropy;

  friend bool operator==(const ResultFile&, const ResultFile&) = default;
};

std::string write_result(const ResultFile& r);
ResultFile parse_result(std::string_view text);

/// Always "num/den", including integers ("1/1").
std::string format_rational(const Rational& r);

}  // namespace prefixpack

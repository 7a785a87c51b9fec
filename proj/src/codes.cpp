#include "prefixpack/codes.hpp"

#include <algorithm>
#include <cmath>

namespace prefixpack {

namespace {

void check_arities(std::span<const std::uint32_t> arities) {
  if (arities.empty()) throw InputError("at least one channel is required");
  for (auto q : arities) {
    if (q < 2) throw InputError("arity must be at least 2, got " + std::to_string(q));
  }
}

void check_tuples(std::span<const std::uint32_t> arities,
                  std::span<const std::vector<std::uint32_t>> lengths) {
  for (const auto& t : lengths) {
    if (t.size() != arities.size()) {
      throw InputError("length tuple has " + std::to_string(t.size()) + " entries, expected " +
                       std::to_string(arities.size()));
    }
  }
}

std::vector<std::vector<std::uint32_t>> as_tuples(const ProblemSpec& spec) {
  std::vector<std::vector<std::uint32_t>> out;
  out.reserve(spec.lengths.size());
  for (const auto& t : spec.lengths) out.push_back({t.l1, t.l2});
  return out;
}

Word digits(BigInt value, std::uint32_t base, std::uint32_t len) {
  Word out(len, 0);
  for (std::uint32_t k = len; k-- > 0;) {
    out[k] = static_cast<std::uint32_t>(value % base);
    value /= base;
  }
  return out;
}

}  // namespace

Rational kraft_sum(std::span<const std::uint32_t> arities,
                   std::span<const std::vector<std::uint32_t>> lengths) {
  check_arities(arities);
  check_tuples(arities, lengths);
  const std::size_t n = arities.size();
  std::vector<std::uint32_t> max_len(n, 0);
  for (const auto& t : lengths) {
    for (std::size_t i = 0; i < n; ++i) max_len[i] = std::max(max_len[i], t[i]);
  }
  BigInt denominator = 1;
  for (std::size_t i = 0; i < n; ++i) denominator *= pow_big(arities[i], max_len[i]);

  BigInt numerator = 0;
  for (const auto& t : lengths) {
    BigInt term = 1;
    for (std::size_t i = 0; i < n; ++i) term *= pow_big(arities[i], max_len[i] - t[i]);
    numerator += term;
  }
  return Rational(numerator, denominator);
}

Rational kraft_sum(const ProblemSpec& spec) {
  const std::uint32_t q[2] = {spec.arities.q1, spec.arities.q2};
  return kraft_sum(q, as_tuples(spec));
}

EntropyReport entropy_bound(std::span<const std::uint32_t> arities,
                            std::span<const std::vector<std::uint32_t>> lengths,
                            const SourceDistribution& dist) {
  check_arities(arities);
  check_tuples(arities, lengths);
  if (dist.p.size() != lengths.size()) {
    throw InputError("got " + std::to_string(dist.p.size()) + " probabilities for " +
                     std::to_string(lengths.size()) + " codewords");
  }
  if (!(dist.base > 1.0) || !std::isfinite(dist.base)) {
    throw InputError("entropy base D must be a finite real greater than 1");
  }
  double total = 0.0;
  for (double p : dist.p) {
    if (!(p > 0.0 && p <= 1.0)) throw InputError("probabilities must lie in (0, 1]");
    total += p;
  }
  if (std::abs(total - 1.0) > kEntropyTolerance) throw InputError("probabilities must sum to 1");

  const double log_base = std::log(dist.base);
  std::vector<double> symbol_cost(arities.size());
  for (std::size_t i = 0; i < arities.size(); ++i) {
    symbol_cost[i] = std::log(static_cast<double>(arities[i])) / log_base;
  }

  EntropyReport r;
  r.equality = true;
  for (std::size_t j = 0; j < lengths.size(); ++j) {
    double len = 0.0;
    for (std::size_t i = 0; i < arities.size(); ++i) len += lengths[j][i] * symbol_cost[i];
    const double info = -std::log(dist.p[j]) / log_base;
    r.avg_length += dist.p[j] * len;
    r.entropy += dist.p[j] * info;
    if (std::abs(len - info) > kEntropyTolerance) r.equality = false;
  }
  r.slack = r.avg_length - r.entropy;
  return r;
}

PackingInstance lengths_to_instance(const ProblemSpec& spec) {
  spec.validate();
  PackingInstance inst;
  inst.l1_max = spec.l1_max();
  inst.l2_max = spec.l2_max();
  const Arities& q = spec.arities;
  inst.blocks.reserve(spec.lengths.size());
  for (const auto& t : spec.lengths) {
    inst.blocks.push_back(Block{to_size(RegularExp{inst.l1_max - t.l1, inst.l2_max - t.l2}, q)});
  }
  inst.container = Region(0, 0, to_size(RegularExp{inst.l1_max, inst.l2_max}, q));
  return inst;
}

Codeword location_to_codeword(const Arities& q, const LengthTuple& len, std::uint32_t l1_max,
                              std::uint32_t l2_max, const BigInt& x, const BigInt& y) {
  if (len.l1 > l1_max || len.l2 > l2_max) throw InputError("length exceeds the maximum length");
  const BigInt w = pow_big(q.q1, l1_max - len.l1);
  const BigInt h = pow_big(q.q2, l2_max - len.l2);
  if (x < 0 || y < 0 || x % w != 0 || y % h != 0) {
    throw InputError("misaligned location (" + x.str() + ", " + y.str() + ") for block " +
                     to_string(Size{w, h}));
  }
  const BigInt col = x / w;
  const BigInt row = y / h;
  if (col >= pow_big(q.q1, len.l1) || row >= pow_big(q.q2, len.l2)) {
    throw InputError("location lies outside the container");
  }
  return Codeword{digits(col, q.q1, len.l1), digits(row, q.q2, len.l2)};
}

Codebook solution_to_codebook(const ProblemSpec& spec, const Solution& sol) {
  if (sol.assignments.size() != spec.lengths.size()) {
    throw InputError("solution does not assign every codeword");
  }
  const std::uint32_t l1 = spec.l1_max();
  const std::uint32_t l2 = spec.l2_max();
  Codebook cb(spec.lengths.size());
  std::vector<bool> seen(spec.lengths.size(), false);
  for (const auto& p : sol.assignments) {
    if (p.block >= spec.lengths.size() || seen[p.block]) {
      throw InputError("solution assigns a codeword twice or out of range");
    }
    seen[p.block] = true;
    cb[p.block] = location_to_codeword(spec.arities, spec.lengths[p.block], l1, l2, p.x, p.y);
  }
  return cb;
}

bool is_prefix(const Word& a, const Word& b) {
  return a.size() <= b.size() && std::equal(a.begin(), a.end(), b.begin());
}

bool pair_prefix_free(const Codeword& a, const Codeword& b) {
  const bool free1 = !is_prefix(a.c1, b.c1) && !is_prefix(b.c1, a.c1);
  const bool free2 = !is_prefix(a.c2, b.c2) && !is_prefix(b.c2, a.c2);
  return free1 || free2;
}

bool verify_codebook(const Codebook& cb) {
  for (std::size_t i = 0; i < cb.size(); ++i) {
    for (std::size_t j = i + 1; j < cb.size(); ++j) {
      if (!pair_prefix_free(cb[i], cb[j])) return false;
    }
  }
  return true;
}

std::string format_word(const Word& w, std::uint32_t q) {
  static constexpr std::string_view kDigits = "0123456789abcdefghijklmnopqrstuvwxyz";
  std::string out;
  if (q <= kDigits.size()) {
    for (auto d : w) out.push_back(kDigits[d]);
    return out;
  }
  for (std::size_t k = 0; k < w.size(); ++k) {
    if (k) out.push_back('.');
    out += std::to_string(w[k]);
  }
  return out;
}

std::optional<Word> parse_word(std::string_view text, std::uint32_t q) {
  Word out;
  if (text.empty()) return out;
  if (q <= 36) {
    for (char ch : text) {
      std::uint32_t d;
      if (ch >= '0' && ch <= '9') {
        d = static_cast<std::uint32_t>(ch - '0');
      } else if (ch >= 'a' && ch <= 'z') {
        d = static_cast<std::uint32_t>(ch - 'a') + 10;
      } else {
        return std::nullopt;
      }
      if (d >= q) return std::nullopt;
      out.push_back(d);
    }
    return out;
  }
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('.', start);
    if (end == std::string_view::npos) end = text.size();
    auto part = text.substr(start, end - start);
    if (part.empty() || part.size() > 10) return std::nullopt;
    std::uint64_t v = 0;
    for (char ch : part) {
      if (ch < '0' || ch > '9') return std::nullopt;
      v = v * 10 + static_cast<std::uint64_t>(ch - '0');
    }
    if (v >= q) return std::nullopt;
    out.push_back(static_cast<std::uint32_t>(v));
    start = end + 1;
  }
  return out;
}

}  // namespace prefixpack

#include "prefixpack/selftest.hpp"

#include "json.hpp"
#include "prefixpack/codes.hpp"
#include "prefixpack/oracle.hpp"
#include "prefixpack/packer.hpp"

namespace prefixpack {

std::string describe(const ProblemSpec& spec) {
  std::string out = "q=(" + std::to_string(spec.arities.q1) + "," +
                    std::to_string(spec.arities.q2) + ") lengths={";
  for (std::size_t k = 0; k < spec.lengths.size(); ++k) {
    if (k) out += ",";
    out += "(" + std::to_string(spec.lengths[k].l1) + "," + std::to_string(spec.lengths[k].l2) + ")";
  }
  return out + "}";
}

std::string to_instance_json(const ProblemSpec& spec) {
  nlohmann::ordered_json doc;
  doc["q"] = {spec.arities.q1, spec.arities.q2};
  doc["lengths"] = nlohmann::ordered_json::array();
  for (const auto& t : spec.lengths) doc["lengths"].push_back({t.l1, t.l2});
  return doc.dump();
}

SelftestReport run_selftest(const SelftestBounds& bounds, const Decider& fast) {
  SelftestReport report;
  oracle::InstanceStream stream(oracle::arity_pairs(bounds.arities), bounds.max_m, bounds.max_len);
  oracle::OracleLimits limits;
  limits.max_m = bounds.max_m;
  limits.max_dim = 1 << 20;

  auto fail = [&](const ProblemSpec& spec, std::string why) {
    report.mismatch = spec;
    report.detail = std::move(why);
    return report;
  };

  while (auto spec = stream.next()) {
    ++report.instances;
    const bool by_fast = fast(*spec);

    const PackingInstance inst = lengths_to_instance(*spec);
    const std::vector<Container> containers{inst.container};
    const auto sol = construct(*spec);
    if (sol && !is_valid_solution(inst.blocks, containers, *sol)) {
      return fail(*spec, "greedy packer returned an invalid solution");
    }
    const bool by_naive = sol.has_value();

    const auto verdict = oracle::brute_decide(inst.blocks, containers, limits);
    if (verdict == oracle::Verdict::budget_exceeded) {
      return fail(*spec, "oracle search budget exceeded");
    }
    const bool by_oracle = verdict == oracle::Verdict::yes;

    if (by_fast != by_naive || by_fast != by_oracle) {
      return fail(*spec, std::string("fast=") + (by_fast ? "1" : "0") + " naive=" +
                             (by_naive ? "1" : "0") + " oracle=" + (by_oracle ? "1" : "0"));
    }
    if (by_fast) {
      ++report.packable;
      if (!kraft_ok(kraft_sum(*spec))) return fail(*spec, "packable instance violates Kraft");
    }
  }
  return report;
}

SelftestReport run_selftest(const SelftestBounds& bounds) {
  return run_selftest(bounds, [](const ProblemSpec& s) { return decide_fast(s); });
}

}  // namespace prefixpack

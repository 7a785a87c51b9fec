#include "prefixpack/io.hpp"

#include <fstream>
#include <limits>
#include <sstream>

#include "json.hpp"

namespace prefixpack {

namespace {

using nlohmann::json;
using ordered_json = nlohmann::ordered_json;

std::uint32_t as_count(const json& v, const std::string& what) {
  if (!v.is_number_integer()) throw InputError(what + " must be an integer");
  if (v.is_number_unsigned()) {
    auto u = v.get<std::uint64_t>();
    if (u > std::numeric_limits<std::uint32_t>::max()) throw InputError(what + " is too large");
    return static_cast<std::uint32_t>(u);
  }
  auto s = v.get<std::int64_t>();
  if (s < 0) throw InputError(what + " must be non-negative");
  if (s > std::numeric_limits<std::uint32_t>::max()) throw InputError(what + " is too large");
  return static_cast<std::uint32_t>(s);
}

void check_shape(const InstanceFile& f) {
  if (f.q.empty()) throw InputError("q must list at least one arity");
  for (auto a : f.q) {
    if (a < 2) throw InputError("arity must be at least 2, got " + std::to_string(a));
  }
  for (std::size_t j = 0; j < f.lengths.size(); ++j) {
    if (f.lengths[j].size() != f.q.size()) {
      throw InputError("lengths[" + std::to_string(j) + "] must have " +
                       std::to_string(f.q.size()) + " entries");
    }
  }
  if (f.probs && f.probs->size() != f.lengths.size()) {
    throw InputError("probs must have one entry per length tuple");
  }
}

InstanceFile parse_json_instance(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw InputError(std::string("invalid JSON: ") + e.what());
  }
  if (!doc.is_object()) throw InputError("instance must be a JSON object");
  for (const auto& [key, _] : doc.items()) {
    if (key != "q" && key != "lengths" && key != "probs" && key != "D") {
      throw InputError("unknown field \"" + key + "\"");
    }
  }
  if (!doc.contains("q") || !doc["q"].is_array()) throw InputError("q must be an array");
  if (!doc.contains("lengths") || !doc["lengths"].is_array()) {
    throw InputError("lengths must be an array");
  }

  InstanceFile f;
  for (const auto& v : doc["q"]) f.q.push_back(as_count(v, "arity"));
  for (const auto& t : doc["lengths"]) {
    if (!t.is_array()) throw InputError("each length tuple must be an array");
    std::vector<std::uint32_t> tuple;
    for (const auto& v : t) tuple.push_back(as_count(v, "codeword length"));
    f.lengths.push_back(std::move(tuple));
  }
  if (doc.contains("probs")) {
    if (!doc["probs"].is_array()) throw InputError("probs must be an array");
    std::vector<double> probs;
    for (const auto& v : doc["probs"]) {
      if (!v.is_number()) throw InputError("probabilities must be numbers");
      probs.push_back(v.get<double>());
    }
    f.probs = std::move(probs);
  }
  if (doc.contains("D")) {
    if (!doc["D"].is_number()) throw InputError("D must be a number");
    f.base = doc["D"].get<double>();
  }
  check_shape(f);
  return f;
}

std::vector<std::uint32_t> parse_counts(const std::string& line, std::size_t line_no) {
  std::istringstream in(line);
  std::vector<std::uint32_t> out;
  std::string tok;
  while (in >> tok) {
    if (tok.find_first_not_of("0123456789") != std::string::npos || tok.size() > 9) {
      throw InputError("line " + std::to_string(line_no) + ": expected a non-negative integer, got \"" +
                       tok + "\"");
    }
    out.push_back(static_cast<std::uint32_t>(std::stoul(tok)));
  }
  return out;
}

InstanceFile parse_text_instance(std::string_view text) {
  InstanceFile f;
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t line_no = 0;
  bool have_header = false;
  while (std::getline(in, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    auto values = parse_counts(line, line_no);
    if (values.empty()) continue;
    if (!have_header) {
      f.q = std::move(values);
      have_header = true;
    } else {
      f.lengths.push_back(std::move(values));
    }
  }
  if (!have_header) throw InputError("missing arity header line");
  check_shape(f);
  return f;
}

}  // namespace

ProblemSpec InstanceFile::to_spec() const {
  if (q.size() > 2) throw InputError("packing supports at most two channels");
  ProblemSpec spec;
  spec.arities = Arities{q.at(0), q.size() == 2 ? q[1] : 2u};
  spec.arities.validate();
  for (const auto& t : lengths) {
    spec.lengths.push_back(LengthTuple{t.at(0), t.size() == 2 ? t[1] : 0u});
  }
  return spec;
}

InstanceFile parse_instance(std::string_view text, InputFormat format) {
  if (format == InputFormat::detect) {
    auto first = text.find_first_not_of(" \t\r\n");
    format = (first != std::string_view::npos && text[first] == '{') ? InputFormat::json
                                                                      : InputFormat::text;
  }
  return format == InputFormat::json ? parse_json_instance(text) : parse_text_instance(text);
}

InstanceFile load_instance(const std::filesystem::path& path, InputFormat format) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_instance(buf.str(), format);
}

std::string format_rational(const Rational& r) {
  return boost::multiprecision::numerator(r).str() + "/" +
         boost::multiprecision::denominator(r).str();
}

std::string write_result(const ResultFile& r) {
  ordered_json doc;
  doc["decision"] = r.decision;
  doc["kraft"] = r.kraft;
  if (r.codebook) {
    doc["codebook"] = ordered_json::array();
    for (const auto& cw : *r.codebook) {
      doc["codebook"].push_back(ordered_json{{"c1", cw.c1}, {"c2", cw.c2}});
    }
  }
  if (r.entropy) {
    doc["entropy"] = ordered_json{{"avg_length", r.entropy->avg_length},
                                  {"entropy", r.entropy->entropy},
                                  {"slack", r.entropy->slack}};
  }
  return doc.dump(2) + "\n";
}

ResultFile parse_result(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw InputError(std::string("invalid JSON: ") + e.what());
  }
  try {
    ResultFile r;
    r.decision = doc.at("decision").get<bool>();
    r.kraft = doc.at("kraft").get<std::string>();
    if (doc.contains("codebook")) {
      std::vector<ResultCodeword> cb;
      for (const auto& e : doc["codebook"]) {
        cb.push_back(ResultCodeword{e.at("c1").get<std::string>(), e.at("c2").get<std::string>()});
      }
      r.codebook = std::move(cb);
    }
    if (doc.contains("entropy")) {
      const auto& e = doc["entropy"];
      r.entropy = ResultEntropy{e.at("avg_length").get<double>(), e.at("entropy").get<double>(),
                                e.at("slack").get<double>()};
    }
    return r;
  } catch (const json::exception& e) {
    throw InputError(std::string("malformed result file: ") + e.what());
  }
}

}  // namespace prefixpack

#include "majlat/io.hpp"

#include <algorithm>
#include <cctype>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace majlat {

namespace {

using nlohmann::json;

bool parse_double(const std::string& token, double& out) {
  const char* begin = token.c_str();
  char* end = nullptr;
  out = std::strtod(begin, &end);
  return end != begin && end == begin + token.size();
}

std::string trim(const std::string& s) {
  const auto from = s.find_first_not_of(" \t\r\n");
  if (from == std::string::npos) return "";
  const auto to = s.find_last_not_of(" \t\r\n");
  return s.substr(from, to - from + 1);
}

OrderedPmf parse_pmf_json(const std::string& text, bool strict) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::exception& e) {
    raise(errc::parse_error, std::string("bad JSON: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("pmf") || !doc["pmf"].is_array())
    raise(errc::parse_error, "expected an object with a \"pmf\" array");
  std::vector<double> values;
  values.reserve(doc["pmf"].size());
  for (const auto& v : doc["pmf"]) {
    if (!v.is_number())
      raise(errc::parse_error, "\"pmf\" entries must be numbers");
    values.push_back(v.get<double>());
  }
  return OrderedPmf::from_values(values, strict);
}

OrderedPmf parse_pmf_csv(const std::string& text, bool strict) {
  std::vector<double> values;
  std::istringstream in(text);
  std::string line;
  bool first_content_line = true;
  while (std::getline(in, line)) {
    const std::string token = trim(line);
    if (token.empty()) continue;
    double v = 0.0;
    if (!parse_double(token, v)) {
      if (first_content_line) {  // header row
        first_content_line = false;
        continue;
      }
      raise(errc::parse_error, "bad CSV mass '" + token + "'");
    }
    first_content_line = false;
    values.push_back(v);
  }
  return OrderedPmf::from_values(values, strict);
}

}  // namespace

OrderedPmf parse_pmf_text(const std::string& text, bool strict) {
  const std::string body = trim(text);
  if (body.empty()) raise(errc::parse_error, "empty PMF input");
  if (body.front() == '{') return parse_pmf_json(body, strict);
  return parse_pmf_csv(body, strict);
}

OrderedPmf read_pmf_file(const std::filesystem::path& path, bool strict) {
  std::ifstream in(path, std::ios::binary);
  if (!in) raise(errc::io_error, "cannot open '" + path.string() + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_pmf_text(buf.str(), strict);
}

double round_to_digits(double value, int digits) {
  digits = std::clamp(digits, 1, 17);
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*g", digits, value);
  return std::strtod(buf, nullptr);
}

namespace {

json rounded_array(const std::vector<double>& values, int digits) {
  json arr = json::array();
  for (double v : values) arr.push_back(round_to_digits(v, digits));
  return arr;
}

std::string format_number(double value, int digits) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*g", std::clamp(digits, 1, 17), value);
  return buf;
}

json alpha_to_json(const AlphaOrder& alpha) {
  if (alpha.kind() == AlphaOrder::Kind::infinity) return json("inf");
  return json(alpha.value());
}

}  // namespace

std::string pmf_to_json(const OrderedPmf& p, int digits,
                        bool with_prefix_sums) {
  json out;
  out["pmf"] = rounded_array(p.masses(), digits);
  if (with_prefix_sums)
    out["prefix_sums"] = rounded_array(prefix_sums(p).breakpoints(), digits);
  return out.dump();
}

std::string pmf_to_csv(const OrderedPmf& p, int digits) {
  std::ostringstream out;
  out << "mass,prefix_sum\n";
  double acc = 0.0;
  for (double m : p) {
    acc += m;
    out << format_number(m, digits) << ',' << format_number(acc, digits)
        << '\n';
  }
  return out.str();
}

std::string lorenz_to_csv(const OrderedPmf& p, int digits) {
  std::ostringstream out;
  out << "t,L\n0,0\n";
  const LorenzCurve curve(p);
  for (std::size_t k = 1; k <= curve.size(); ++k)
    out << k << ',' << format_number(curve.value_at(k), digits) << '\n';
  return out.str();
}

std::string coupling_to_csv(const Coupling& c, int digits) {
  std::ostringstream out;
  out << "i,j,mass\n";
  for (const auto& cell : c.cells())
    out << cell.row + 1 << ',' << cell.col + 1 << ','
        << format_number(cell.mass, digits) << '\n';
  return out.str();
}

std::string report_to_json(const VerificationReport& report,
                           const SweepConfig& cfg, int digits) {
  json config;
  config["n"] = cfg.n;
  config["samples"] = cfg.samples;
  config["seed"] = cfg.seed;
  config["m"] = cfg.m;
  json alphas = json::array();
  for (const auto& a : cfg.alpha_grid) alphas.push_back(alpha_to_json(a));
  config["alphas"] = alphas;
  json families = json::array();
  for (Family f : cfg.families) families.push_back(family_name(f));
  config["families"] = families;
  json preds = json::array();
  for (Pred p : cfg.predicates) preds.push_back(pred_name(p));
  config["predicates"] = preds;

  json violations = json::array();
  for (const Violation& v : report.violations) {
    json entry;
    entry["predicate"] = v.predicate;
    entry["family"] = family_name(v.family);
    entry["alpha"] = alpha_to_json(v.alpha);
    entry["gap"] = round_to_digits(v.gap, digits);
    entry["sample_index"] = v.sample_index;
    if (!v.inputs.empty()) entry["p"] = rounded_array(v.inputs[0], digits);
    if (v.inputs.size() > 1) entry["q"] = rounded_array(v.inputs[1], digits);
    if (v.inputs.size() > 2) {
      json all = json::array();
      for (const auto& x : v.inputs) all.push_back(rounded_array(x, digits));
      entry["inputs"] = all;
    }
    violations.push_back(entry);
  }

  json out;
  out["config"] = config;
  out["samples_run"] = report.samples_run;
  out["violations"] = violations;
  out["worst_gap"] = round_to_digits(report.worst_gap, digits);
  out["wall_time_seconds"] = round_to_digits(report.wall_time_seconds, 6);

  if (!report.search_stats.empty()) {
    json stats = json::array();
    for (const SearchStat& s : report.search_stats) {
      json entry;
      entry["alpha"] = alpha_to_json(s.alpha);
      entry["positive"] = s.positive;
      entry["negative"] = s.negative;
      entry["max_gap"] = round_to_digits(s.max_gap, digits);
      entry["min_gap"] = round_to_digits(s.min_gap, digits);
      if (!s.first_positive.empty()) {
        entry["first_positive"] = json::array();
        for (const auto& x : s.first_positive)
          entry["first_positive"].push_back(rounded_array(x, digits));
      }
      if (!s.first_negative.empty()) {
        entry["first_negative"] = json::array();
        for (const auto& x : s.first_negative)
          entry["first_negative"].push_back(rounded_array(x, digits));
      }
      stats.push_back(entry);
    }
    out["search_stats"] = stats;
  }
  return out.dump();
}

}  // namespace majlat

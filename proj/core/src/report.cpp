#include "kplab/report.hpp"

#include <algorithm>

#include "json.hpp"
#include "kplab/errors.hpp"

namespace kplab {

using nlohmann::ordered_json;

std::string verdict_name(Verdict v) {
  switch (v) {
    case Verdict::Pass: return "pass";
    case Verdict::Fail: return "fail";
    case Verdict::Inconclusive: return "inconclusive";
  }
  return "inconclusive";
}

Verdict parse_verdict(const std::string& s) {
  if (s == "pass") return Verdict::Pass;
  if (s == "fail") return Verdict::Fail;
  if (s == "inconclusive") return Verdict::Inconclusive;
  throw ConfigError("unknown verdict '" + s + "'");
}

void PointTally::add(const std::string& label, const ResidualSummary& s) {
  r_.asserted += s.asserted;
  std::string m = "asserted=" + std::to_string(s.asserted);
  if (s.min_validity != kExact) m += " valid_through>=" + std::to_string(s.min_validity);
  r_.metrics[label] = m;
  if (!s.zero) {
    failed_ = true;
    if (s.worst >= worst_) {
      worst_ = s.worst;
      r_.worst_at = label + " " + s.worst_at;
    }
  }
}

void PointTally::expect(const std::string& label, bool ok, const std::string& detail) {
  r_.asserted += 1;
  r_.metrics[label] = ok ? "ok" : "violated";
  if (!ok) {
    failed_ = true;
    if (r_.worst_at.empty()) r_.worst_at = label;
    if (!detail.empty()) r_.notes.push_back(label + ": " + detail);
  }
}

PointResult PointTally::finish() {
  r_.worst_residual = worst_.get_str();
  if (failed_) {
    r_.verdict = Verdict::Fail;
  } else if (r_.asserted == 0) {
    r_.verdict = Verdict::Inconclusive;
  } else {
    r_.verdict = Verdict::Pass;
  }
  return r_;
}

VerificationReport assemble_report(std::string id, std::vector<PointResult> points,
                                   std::map<std::string, std::string> caps, std::size_t min_pass,
                                   std::vector<std::string> notes) {
  VerificationReport rep;
  rep.id = std::move(id);
  rep.caps = std::move(caps);
  rep.notes = std::move(notes);
  std::size_t passed = 0;
  bool failed = false;
  Rat worst = 0;
  for (const auto& p : points) {
    rep.asserted_count += p.asserted;
    if (p.verdict == Verdict::Pass) ++passed;
    if (p.verdict == Verdict::Fail) failed = true;
    Rat w = parse_rat(p.worst_residual);
    if (w > worst) worst = w;
  }
  rep.worst_residual = worst.get_str();
  if (!points.empty()) rep.params = points.front().params;
  if (failed) {
    rep.verdict = Verdict::Fail;
  } else if (passed >= min_pass && passed > 0) {
    rep.verdict = Verdict::Pass;
  } else {
    rep.verdict = Verdict::Inconclusive;
    rep.notes.push_back("only " + std::to_string(passed) + " of the required " + std::to_string(min_pass) +
                        " parameter points passed");
  }
  rep.points = std::move(points);
  return rep;
}

namespace {

ordered_json point_json(const PointResult& p) {
  ordered_json j;
  j["params"] = p.params;
  j["verdict"] = verdict_name(p.verdict);
  j["asserted"] = p.asserted;
  j["worst_residual"] = p.worst_residual;
  j["worst_at"] = p.worst_at;
  j["metrics"] = p.metrics;
  j["notes"] = p.notes;
  return j;
}

ordered_json report_json(const VerificationReport& r) {
  ordered_json j;
  j["schema"] = VerificationReport::kSchema;
  j["id"] = r.id;
  j["verdict"] = verdict_name(r.verdict);
  j["asserted_count"] = r.asserted_count;
  j["worst_residual"] = r.worst_residual;
  j["params"] = r.params;
  j["caps"] = r.caps;
  ordered_json pts = ordered_json::array();
  for (const auto& p : r.points) pts.push_back(point_json(p));
  j["points"] = pts;
  j["notes"] = r.notes;
  return j;
}

template <class J>
std::map<std::string, std::string> string_map(const J& j, const char* key) {
  std::map<std::string, std::string> m;
  if (j.contains(key))
    for (auto it = j.at(key).begin(); it != j.at(key).end(); ++it) m[it.key()] = it.value().template get<std::string>();
  return m;
}

VerificationReport report_from(const ordered_json& j) {
  VerificationReport r;
  r.id = j.at("id").get<std::string>();
  r.verdict = parse_verdict(j.at("verdict").get<std::string>());
  r.asserted_count = j.at("asserted_count").get<std::size_t>();
  r.worst_residual = j.at("worst_residual").get<std::string>();
  r.params = string_map(j, "params");
  r.caps = string_map(j, "caps");
  if (j.contains("points")) {
    for (const auto& pj : j.at("points")) {
      PointResult p;
      p.params = string_map(pj, "params");
      p.verdict = parse_verdict(pj.at("verdict").get<std::string>());
      p.asserted = pj.at("asserted").get<std::size_t>();
      p.worst_residual = pj.at("worst_residual").get<std::string>();
      p.worst_at = pj.value("worst_at", std::string());
      p.metrics = string_map(pj, "metrics");
      if (pj.contains("notes")) p.notes = pj.at("notes").get<std::vector<std::string>>();
      r.points.push_back(std::move(p));
    }
  }
  if (j.contains("notes")) r.notes = j.at("notes").get<std::vector<std::string>>();
  return r;
}

}  // namespace

std::string VerificationReport::to_json(int indent) const { return report_json(*this).dump(indent); }

VerificationReport VerificationReport::from_json(const std::string& text) {
  ordered_json j;
  try {
    j = ordered_json::parse(text);
  } catch (const std::exception& e) {
    throw ConfigError(std::string("report is not valid JSON: ") + e.what());
  }
  if (j.value("schema", 0) != kSchema) throw ConfigError("unsupported report schema");
  try {
    return report_from(j);
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError(std::string("malformed report: ") + e.what());
  }
}

ReportSummary merge_reports(std::vector<VerificationReport> reports) {
  std::stable_sort(reports.begin(), reports.end(),
                   [](const VerificationReport& a, const VerificationReport& b) { return a.id < b.id; });
  ReportSummary s;
  for (const auto& r : reports) {
    if (r.verdict == Verdict::Fail) s.verdict = Verdict::Fail;
    if (r.verdict == Verdict::Inconclusive && s.verdict == Verdict::Pass) s.verdict = Verdict::Inconclusive;
  }
  s.reports = std::move(reports);
  return s;
}

std::string ReportSummary::to_json(int indent) const {
  ordered_json j;
  j["schema"] = VerificationReport::kSchema;
  j["verdict"] = verdict_name(verdict);
  ordered_json rows = ordered_json::array();
  for (const auto& r : reports) {
    ordered_json row;
    row["id"] = r.id;
    row["verdict"] = verdict_name(r.verdict);
    row["asserted_count"] = r.asserted_count;
    row["worst_residual"] = r.worst_residual;
    row["points"] = r.points.size();
    rows.push_back(row);
  }
  j["checks"] = rows;
  return j.dump(indent);
}

}  // namespace kplab

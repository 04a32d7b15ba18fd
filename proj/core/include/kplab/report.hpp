#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "kplab/diff_op.hpp"
#include "kplab/rational.hpp"

namespace kplab {

enum class Verdict { Pass, Fail, Inconclusive };

std::string verdict_name(Verdict v);
Verdict parse_verdict(const std::string& s);

/// Outcome at one parameter point (or one random instance).
struct PointResult {
  std::map<std::string, std::string> params;
  Verdict verdict = Verdict::Inconclusive;
  std::size_t asserted = 0;
  std::string worst_residual = "0";
  std::string worst_at;
  std::map<std::string, std::string> metrics;
  std::vector<std::string> notes;
};

struct VerificationReport {
  static constexpr int kSchema = 1;

  std::string id;
  Verdict verdict = Verdict::Inconclusive;
  std::size_t asserted_count = 0;
  std::string worst_residual = "0";
  std::map<std::string, std::string> params;
  std::map<std::string, std::string> caps;
  std::vector<PointResult> points;
  std::vector<std::string> notes;

  std::string to_json(int indent = 2) const;
  static VerificationReport from_json(const std::string& text);
};

/// Accumulates residual summaries of one point.
class PointTally {
 public:
  explicit PointTally(std::map<std::string, std::string> params) { r_.params = std::move(params); }

  /// Records a residual; any non-zero asserted coefficient fails the point.
  void add(const std::string& label, const ResidualSummary& s);
  /// A direct yes/no assertion (counts as one asserted coefficient).
  void expect(const std::string& label, bool ok, const std::string& detail = "");
  void metric(const std::string& key, const std::string& value) { r_.metrics[key] = value; }
  void note(const std::string& text) { r_.notes.push_back(text); }
  bool failed() const { return failed_; }
  std::size_t asserted() const { return r_.asserted; }

  PointResult finish();

 private:
  PointResult r_;
  Rat worst_ = 0;
  bool failed_ = false;
};

/// Builds the report from point results: any failure fails it; a pass needs
/// at least min_pass passing points.
VerificationReport assemble_report(std::string id, std::vector<PointResult> points,
                                   std::map<std::string, std::string> caps, std::size_t min_pass,
                                   std::vector<std::string> notes = {});

/// Deterministic merge, ordered by id; the summary verdict is the worst one.
struct ReportSummary {
  std::vector<VerificationReport> reports;
  Verdict verdict = Verdict::Pass;
  std::string to_json(int indent = 2) const;
};
ReportSummary merge_reports(std::vector<VerificationReport> reports);

}  // namespace kplab

#include <fstream>
#include <sstream>

#include "doctest.h"
#include "kplab/errors.hpp"
#include "kplab/reduction.hpp"
#include "kplab/report.hpp"

using namespace kplab;

namespace {

std::string slurp(const std::string& path) {
  std::ifstream f(path);
  REQUIRE(f.good());
  std::stringstream ss;
  ss << f.rdbuf();
  std::string s = ss.str();
  while (!s.empty() && s.back() == '\n') s.pop_back();
  return s;
}

ResidualSummary zero_summary(std::size_t n, int validity) {
  ResidualSummary s;
  s.asserted = n;
  s.coefficients = n;
  s.min_validity = validity;
  s.max_validity = validity;
  return s;
}

VerificationReport sample_report() {
  PointTally a({{"g", "2"}, {"M", "1"}, {"Q", "3/2"}});
  a.add("k=1", zero_summary(10, 3));
  a.metric("k=1 window", "-4..2");
  PointTally b({{"g", "1/2"}, {"M", "1"}, {"Q", "1/3"}});
  b.add("k=1", zero_summary(7, 2));
  b.note("grid point s=0 skipped");
  std::vector<PointResult> pts{a.finish(), b.finish()};
  return assemble_report("lax/a", pts, {{"D", "6"}, {"K", "6"}}, 2, {"sample"});
}

}  // namespace

TEST_CASE("verdict names") {
  for (Verdict v : {Verdict::Pass, Verdict::Fail, Verdict::Inconclusive}) CHECK(parse_verdict(verdict_name(v)) == v);
  CHECK_THROWS(parse_verdict("maybe"));
}

TEST_CASE("a non-zero asserted residual fails the point") {
  PointTally t({});
  ResidualSummary bad = zero_summary(3, 1);
  bad.zero = false;
  bad.worst = Rat(1, 9);
  bad.worst_at = "Lambda^-2";
  t.add("r", bad);
  CHECK(t.failed());
  PointResult p = t.finish();
  CHECK(p.verdict == Verdict::Fail);
  CHECK(p.worst_residual == "1/9");
  CHECK(p.worst_at.find("Lambda^-2") != std::string::npos);
  auto rep = assemble_report("x", {p}, {}, 1);
  CHECK(rep.verdict == Verdict::Fail);
}

TEST_CASE("verdict assembly") {
  PointTally pass({});
  pass.expect("ok", true);
  PointTally empty({});
  auto p = pass.finish();
  auto e = empty.finish();
  CHECK(e.verdict == Verdict::Inconclusive);
  CHECK(assemble_report("x", {p, p, p}, {}, 3).verdict == Verdict::Pass);
  auto short_run = assemble_report("x", {p, e, p}, {}, 3);
  CHECK(short_run.verdict == Verdict::Inconclusive);
  CHECK_FALSE(short_run.notes.empty());
  PointTally no({});
  no.expect("nope", false, "detail");
  CHECK(assemble_report("x", {p, p, p, no.finish()}, {}, 3).verdict == Verdict::Fail);
}

TEST_CASE("report JSON matches the pinned golden file") {
  CHECK(sample_report().to_json() == slurp(KPLAB_GOLDEN_DIR "/report_v1.json"));
}

TEST_CASE("a real check run matches its pinned golden file") {
  CheckSpec s;
  s.id = "case";
  s.family = Family::A;
  s.caps.K = 4;
  s.caps.D = 4;
  s.caps.n_cut = 4;
  s.seed = 3;
  CHECK(run_check(s).to_json() == slurp(KPLAB_GOLDEN_DIR "/case_a_seed3.json"));
}

TEST_CASE("JSON round trip") {
  VerificationReport r = sample_report();
  VerificationReport back = VerificationReport::from_json(r.to_json());
  CHECK(back.to_json() == r.to_json());
  CHECK(back.points.size() == 2);
  CHECK(back.points[1].notes.size() == 1);
  CHECK_THROWS(VerificationReport::from_json("{\"schema\": 99}"));
  CHECK_THROWS(VerificationReport::from_json("not json"));
}

TEST_CASE("merging sorts by id and keeps the worst verdict") {
  VerificationReport a = sample_report();
  VerificationReport b = sample_report();
  b.id = "case/a";
  VerificationReport c = sample_report();
  c.id = "init/a";
  c.verdict = Verdict::Inconclusive;
  ReportSummary s = merge_reports({a, c, b});
  REQUIRE(s.reports.size() == 3);
  CHECK(s.reports[0].id == "case/a");
  CHECK(s.reports[2].id == "lax/a");
  CHECK(s.verdict == Verdict::Inconclusive);
  c.verdict = Verdict::Fail;
  CHECK(merge_reports({a, c, b}).verdict == Verdict::Fail);
  CHECK(merge_reports({a, c, b}).to_json() == merge_reports({b, a, c}).to_json());
}

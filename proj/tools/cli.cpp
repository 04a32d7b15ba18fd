#include "cli.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "kplab/errors.hpp"
#include "kplab/points.hpp"
#include "kplab/reduction.hpp"
#include "kplab/schur.hpp"
#include "kplab/tau.hpp"

namespace kplab::cli {

namespace {

struct Options {
  std::string family = "a";
  std::string x, g, Q, q, sigma, f, tau, a, kappa, b, an;
  long M = 0;
  std::uint64_t seed = 1;
  int points = 3;
  int K = 6, D = 6, n_cut = 6;
  std::string lo = "-8", hi = "4";
  std::string ks;
  std::string alphas;
  int instances = 20;
  int N = 2;
  std::string a_values;
  bool trend = false;
  bool strict = false;
  int threads = 0;
  std::string out;
  // schur / tau
  int max_size = 4;
  std::string s = "0";
};

std::optional<Rat> opt_rat(const std::string& text) {
  if (text.empty()) return std::nullopt;
  return parse_rat(text);
}

std::vector<std::string> split(const std::string& text) {
  std::vector<std::string> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ','))
    if (!item.empty()) out.push_back(item);
  return out;
}

std::vector<Rat> rat_list(const std::string& text) {
  std::vector<Rat> out;
  for (const auto& s : split(text)) out.push_back(parse_rat(s));
  return out;
}

std::vector<int> int_list(const std::string& text) {
  std::vector<int> out;
  for (const auto& s : split(text)) out.push_back(static_cast<int>(to_long(parse_rat(s), "integer list entry")));
  return out;
}

void add_params(CLI::App* app, Options& o) {
  app->add_option("--case,--family", o.family, "a, b, c, d, general, gbi, gbin, grr");
  app->add_option("--x", o.x, "e^beta (exact rational)");
  app->add_option("--g", o.g, "e^{beta/M}; needs --M");
  app->add_option("--M", o.M, "lattice denominator for --g");
  app->add_option("--Q", o.Q, "Q");
  app->add_option("--q", o.q, "q (cases c, d: a square)");
  app->add_option("--sigma", o.sigma, "q^{1/2}");
  app->add_option("--f", o.f, "integer framing");
  app->add_option("--tau", o.tau, "rational framing tau > -1");
  app->add_option("--a", o.a, "parameter a of cases b, d");
  app->add_option("--b", o.b, "b_1,...,b_N of gbin/grr");
  app->add_option("--an", o.an, "a_1,...,a_N of grr");
  app->add_option("--seed", o.seed, "seed of the random parameter points");
}

void add_caps(CLI::App* app, Options& o) {
  app->add_option("--points", o.points, "parameter points per check")->check(CLI::PositiveNumber);
  app->add_option("--K", o.K, "number of KP times")->check(CLI::PositiveNumber);
  app->add_option("--D", o.D, "t-degree cap")->check(CLI::NonNegativeNumber);
  app->add_option("--n-cut", o.n_cut, "shift floor -N_cut")->check(CLI::PositiveNumber);
  app->add_option("--lo", o.lo, "grid window start");
  app->add_option("--hi", o.hi, "grid window end");
  app->add_option("--threads", o.threads, "workers (default KPLAB_THREADS)");
}

PointRequest request_from(const Options& o) {
  PointRequest r;
  r.x = opt_rat(o.x);
  r.g = opt_rat(o.g);
  if (o.M > 0) r.M = o.M;
  if (r.g && !r.M) throw ConfigError("--g needs --M");
  r.Q = opt_rat(o.Q);
  r.q = opt_rat(o.q);
  r.sigma = opt_rat(o.sigma);
  if (!o.f.empty() && !o.tau.empty()) throw ConfigError("give either --f or --tau");
  if (!o.f.empty()) {
    Rat f = parse_rat(o.f);
    if (!is_integer(f)) throw ConfigError("--f must be an integer; use --tau for rational framings");
    r.tau = f;
  }
  if (!o.tau.empty()) r.tau = parse_rat(o.tau);
  r.a = opt_rat(o.a);
  r.b_n = rat_list(o.b);
  r.a_n = rat_list(o.an);
  return r;
}

CheckSpec spec_from(const Options& o, const std::string& id) {
  CheckSpec s;
  s.id = id;
  s.family = parse_family(o.family);
  s.request = request_from(o);
  s.caps.K = o.K;
  s.caps.D = o.D;
  s.caps.n_cut = o.n_cut;
  s.caps.lo = parse_rat(o.lo);
  s.caps.hi = parse_rat(o.hi);
  if (s.caps.hi <= s.caps.lo) throw ConfigError("empty grid window");
  s.caps.threads = o.threads > 0 ? o.threads : threads_from_env();
  s.points = o.points;
  s.seed = o.seed;
  if (!o.ks.empty()) s.ks = int_list(o.ks);
  if (!o.alphas.empty()) s.alphas = rat_list(o.alphas);
  s.instances = o.instances;
  s.N = o.N;
  if (!o.kappa.empty()) s.kappa = parse_rat(o.kappa);
  if (!o.a_values.empty()) {
    s.a_values.clear();
    for (int v : int_list(o.a_values)) s.a_values.push_back(v);
  }
  return s;
}

std::string monomial(const TRing& ring, std::size_t i) {
  std::string m;
  const auto& e = ring.exponents(i);
  for (std::size_t k = 0; k < e.size(); ++k) {
    if (e[k] == 0) continue;
    if (!m.empty()) m += "*";
    m += "t" + std::to_string(k + 1);
    if (e[k] > 1) m += "^" + std::to_string(e[k]);
  }
  return m.empty() ? "1" : m;
}

void write_poly(std::ostream& out, const std::string& label, const TPoly& p) {
  const TRing& ring = p.ring();
  auto c = p.coefficients();
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (ring.weight(i) > p.valid_through()) break;
    if (sgn(c[i]) == 0) continue;
    out << label << "," << monomial(ring, i) << "," << c[i].get_str() << "\n";
  }
}

ParamEnv single_point(const Options& o, Family fam) {
  std::vector<std::string> notes;
  auto pts = parameter_points(fam, request_from(o), 1, 1, o.seed, &notes, fam == Family::D ? Rat(0) : Rat(1));
  if (pts.empty()) throw ConfigError(notes.empty() ? "no parameter point" : notes.front());
  return pts.front();
}

CVector family_c(const Options& o, Family fam, const ParamEnv& env, int Kc) {
  if (fam == Family::General || fam == Family::GBIFinite)
    throw ConfigError("schur/tau tables need a named family (a, b, c, d, gbin, grr)");
  (void)o;
  return cvector(fam, env, Kc);
}

int cmd_schur(const Options& o, std::ostream& out) {
  Family fam = parse_family(o.family);
  ParamEnv env = single_point(o, fam);
  CVector c = family_c(o, fam, env, std::max(o.max_size, 1));
  bool closed = fam == Family::A || fam == Family::C;
  out << "partition,size,value" << (closed ? ",closed_form" : "") << "\n";
  for (const auto& lambda : enumerate_partitions(o.max_size)) {
    out << "\"" << lambda.to_string() << "\"," << lambda.size() << "," << schur_at(lambda, c).get_str();
    if (closed) out << "," << schur_special_closed(lambda, fam, env).get_str();
    out << "\n";
  }
  return 0;
}

int cmd_tau(const Options& o, std::ostream& out) {
  Family fam = parse_family(o.family);
  ParamEnv env = single_point(o, fam);
  auto ring = TRing::make(std::max(o.K, o.D), o.D);
  CVector c = family_c(o, fam, env, std::max(o.D, 1));
  Rat s = parse_rat(o.s);
  out << "series,monomial,coefficient\n";
  write_poly(out, "tau", tau_normalized(s, c, ring, env).value);
  WaveBuilder wb(c, std::make_shared<const ParamEnv>(env), ring, o.n_cut);
  auto w = wb.at(s);
  for (std::size_t n = 1; n < w.size(); ++n) write_poly(out, "w" + std::to_string(n), w[n]);
  return 0;
}

std::vector<CheckSpec> suite(const Options& o) {
  std::vector<CheckSpec> specs;
  Family fam = parse_family(o.family);
  bool topo = is_topological_family(fam);
  auto with = [&](const std::string& id, Family f) {
    CheckSpec s = spec_from(o, id);
    s.family = f;
    // the user's point only carries over to checks of the same kind
    if (is_topological_family(f) != topo || (f != fam && (f == Family::B || f == Family::D))) {
      PointRequest keep;
      if (is_topological_family(f) == topo) keep = s.request;
      keep.a.reset();
      if (f != fam) {
        keep.b_n.clear();
        keep.a_n.clear();
        keep.tau.reset();
      }
      s.request = keep;
    }
    specs.push_back(s);
  };
  with("init", fam);
  with("prop1", Family::General);
  with("case", fam);
  with("lax", fam);
  with("wave", fam);
  with("extract", Family::General);
  with("pqr", Family::General);
  with("persist", Family::C);
  with("bcflow", Family::D);
  {
    with("ccflow", Family::B);
    specs.back().ks = {1, 2};
  }
  specs[specs.size() - 2].ks = {1, 2};
  if (o.trend) with("scaling", Family::B);
  return specs;
}

int finish(Verdict v, const Options& o, std::ostream& err) {
  if (v == Verdict::Fail) return 1;
  if (v == Verdict::Inconclusive) {
    err << "warning: inconclusive verdict (nothing assertable at the given caps)\n";
    return o.strict ? 1 : 0;
  }
  return 0;
}

void emit(const std::string& text, const Options& o, std::ostream& out) {
  if (o.out.empty()) {
    out << text << "\n";
    return;
  }
  std::ofstream f(o.out);
  if (!f) throw ConfigError("cannot write " + o.out);
  f << text << "\n";
}

int cmd_verify(const std::string& id, const Options& o, std::ostream& out, std::ostream& err) {
  if (id == "scaling" && !o.trend) throw ConfigError("the scaling check is float-valued; pass --trend to run it");
  if (id != "all") {
    VerificationReport r = run_check(spec_from(o, id));
    emit(r.to_json(), o, out);
    return finish(r.verdict, o, err);
  }
  std::vector<VerificationReport> reports;
  for (const auto& s : suite(o)) reports.push_back(run_check(s));
  ReportSummary sum = merge_reports(reports);
  nlohmann::ordered_json j;
  j["summary"] = nlohmann::ordered_json::parse(sum.to_json());
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const auto& r : sum.reports) arr.push_back(nlohmann::ordered_json::parse(r.to_json()));
  j["reports"] = arr;
  emit(j.dump(2), o, out);
  return finish(sum.verdict, o, err);
}

int cmd_report(const std::vector<std::string>& files, const Options& o, std::ostream& out, std::ostream& err) {
  std::vector<VerificationReport> reports;
  for (const auto& path : files) {
    std::ifstream f(path);
    if (!f) throw ConfigError("cannot read " + path);
    std::stringstream ss;
    ss << f.rdbuf();
    auto j = nlohmann::ordered_json::parse(ss.str(), nullptr, false);
    if (j.is_discarded()) throw ConfigError(path + " is not valid JSON");
    if (j.contains("reports")) {
      for (const auto& r : j.at("reports")) reports.push_back(VerificationReport::from_json(r.dump()));
    } else {
      reports.push_back(VerificationReport::from_json(ss.str()));
    }
  }
  ReportSummary sum = merge_reports(std::move(reports));
  emit(sum.to_json(), o, out);
  return finish(sum.verdict, o, err);
}

// Splices `--config FILE` into flags right after the subcommand, so flags on
// the command line still win (options take the last value).
std::vector<std::string> expand_config(CLI::App& app, int argc, const char* const* argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  std::string path;
  for (std::size_t i = 0; i < args.size(); ++i) {
    if (args[i] == "--config" && i + 1 < args.size()) {
      path = args[i + 1];
      args.erase(args.begin() + static_cast<long>(i), args.begin() + static_cast<long>(i) + 2);
      break;
    }
    if (args[i].rfind("--config=", 0) == 0) {
      path = args[i].substr(9);
      args.erase(args.begin() + static_cast<long>(i));
      break;
    }
  }
  if (path.empty()) {
    std::reverse(args.begin(), args.end());
    return args;
  }
  auto sub_at = std::find_if(args.begin(), args.end(), [&](const std::string& a) {
    return app.get_subcommand_no_throw(a) != nullptr;
  });
  if (sub_at == args.end()) throw CLI::ValidationError("--config", "needs a subcommand");
  CLI::App* sub = app.get_subcommand(*sub_at);
  std::vector<CLI::ConfigItem> items;
  try {
    items = CLI::ConfigTOML().from_file(path);
  } catch (const CLI::FileError& e) {
    throw CLI::ValidationError("--config", e.what());
  }
  std::vector<std::string> flags;
  for (const auto& item : items) {
    if (item.name == "++" || item.name == "--") continue;
    std::string key = item.name;
    std::replace(key.begin(), key.end(), '_', '-');
    if (key == "N-cut") key = "n-cut";
    const CLI::Option* opt = sub->get_option_no_throw("--" + key);
    if (opt == nullptr || key == "config" || !item.parents.empty())
      throw CLI::ValidationError("--config", "unknown key '" + item.fullname() + "' in " + path);
    std::string value;
    for (const auto& in : item.inputs) value += (value.empty() ? "" : ",") + in;
    flags.push_back("--" + key + "=" + value);
  }
  args.insert(sub_at + 1, flags.begin(), flags.end());
  std::reverse(args.begin(), args.end());
  return args;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"kplab: lattice KP reductions of hypergeometric tau functions"};
  app.option_defaults()->multi_option_policy(CLI::MultiOptionPolicy::TakeLast);
  app.require_subcommand(1);
  Options o;

  auto* schur = app.add_subcommand("schur", "table of S_lambda(c) as CSV");
  add_params(schur, o);
  schur->add_option("--max-size", o.max_size, "largest |lambda|")->check(CLI::NonNegativeNumber);

  auto* tau = app.add_subcommand("tau", "tau(s, t)/h_empty(s) and w_n as CSV");
  add_params(tau, o);
  add_caps(tau, o);
  tau->add_option("--s", o.s, "lattice point s");

  std::string check;
  auto* verify = app.add_subcommand("verify", "run verification checks, JSON report");
  verify->add_option("check", check, "init|prop1|case|lax|persist|extract|pqr|bcflow|ccflow|wave|scaling|all")
      ->required()
      ->check(CLI::IsMember({"init", "prop1", "case", "lax", "persist", "extract", "pqr", "bcflow", "ccflow", "wave",
                             "scaling", "all"}));
  add_params(verify, o);
  add_caps(verify, o);
  verify->add_option("--k", o.ks, "flow indices, e.g. 1,2,3");
  verify->add_option("--alpha", o.alphas, "fractional orders for prop1, e.g. 1/2,1/3");
  verify->add_option("--instances", o.instances, "random instances (pqr, extract)")->check(CLI::PositiveNumber);
  verify->add_option("--N", o.N, "band width (pqr, extract, gbi)")->check(CLI::PositiveNumber);
  verify->add_option("--kappa", o.kappa, "scaling limit constant");
  verify->add_option("--a-values", o.a_values, "scaling sequence, e.g. 100,1000,10000");
  verify->add_flag("--trend", o.trend, "allow the float-valued scaling check");
  verify->add_flag("--strict", o.strict, "inconclusive verdicts exit non-zero");
  verify->add_option("--out", o.out, "write the report here instead of stdout");

  std::vector<std::string> files;
  auto* report = app.add_subcommand("report", "merge JSON reports into a summary");
  report->add_option("files", files, "report files")->required()->check(CLI::ExistingFile);
  report->add_flag("--strict", o.strict, "inconclusive verdicts exit non-zero");
  report->add_option("--out", o.out, "write the summary here instead of stdout");

  // only listed for --help; expand_config consumes the flag before parsing
  std::string config_path;
  for (auto* sub : {schur, tau, verify, report})
    sub->add_option("--config", config_path, "TOML/INI file with the same keys as the flags");

  try {
    app.parse(expand_config(app, argc, argv));
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n" << app.help();
    return 2;
  }

  try {
    if (*schur) return cmd_schur(o, out);
    if (*tau) return cmd_tau(o, out);
    if (*verify) return cmd_verify(check, o, out, err);
    if (*report) return cmd_report(files, o, out, err);
  } catch (const ConfigError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const LatticeError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}

}  // namespace kplab::cli

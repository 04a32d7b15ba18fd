#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "kplab/diff_op.hpp"
#include "kplab/param_env.hpp"
#include "kplab/points.hpp"
#include "kplab/report.hpp"
#include "kplab/schur.hpp"
#include "kplab/tau.hpp"

namespace kplab {

/// Truncation caps and grid window shared by the checks.
struct LabCaps {
  int K = 6;
  int D = 6;
  int n_cut = 6;
  Rat lo = -8;
  Rat hi = 4;
  int threads = 1;

  std::map<std::string, std::string> describe() const;
};

using ExpOp = DiffOp<ExpCoeff>;
using GridOp = DiffOp<GridCoeff>;
using SeriesOp = DiffOp<ExpSeriesT>;

/// Exact-constant operator context for env.
OpContext exp_context(const ParamEnv& env, long m, int n_cut);

/// W_0 = exp(-sum c_k Q^k e^{-beta k(k+1)/2} e^{beta k s} Lambda^{-k}).
ExpOp build_W0(const CVector& c, const OpContext& ctx);
/// The same operator as U exp(-sum c_k Lambda^{-k}) U^{-1}, U = e^{beta(s^2-s)/2} Q^s
/// (the constant e^{beta/8} Q^{-1/2} of U cancels and is left out).
ExpOp build_W0_conjugated(const CVector& c, const OpContext& ctx);

/// V X V^{-1} for V = e^{beta (s-1/2)^2 / 2}, with V as an explicit coefficient.
ExpOp gaussian_conjugate(const ExpOp& x);

/// q^{(tau+1)(s-1) + x + 1/2} = q^{x+1/2} e^{beta (s-1)} on a topological point.
ExpCoeff topo_factor(const ParamEnv& env, const Rat& x);

/// L = B C^{-1} Lambda^alpha in rational form.
struct ReducedPair {
  GridOp B;
  GridOp C;
};

struct ExtractResult {
  bool ok = false;
  std::string reason;
  ReducedPair pair;
  /// Rows below -2N that the solved pair must also satisfy.
  ResidualSummary consistency;
};

/// Solves (Lfrac Lambda^{-alpha}) C = B for banded B = 1 + sum v_n Lambda^{-n},
/// C = 1 + sum u_n Lambda^{-n} (n <= N), one grid point at a time.
ExtractResult extract_BC(const GridOp& Lfrac, const Rat& alpha, int N);

/// Selection of a check run.
struct CheckSpec {
  std::string id;  // init prop1 case lax persist pqr bcflow ccflow wave scaling
  Family family = Family::A;
  PointRequest request;
  LabCaps caps;
  std::vector<int> ks = {1, 2, 3};
  int points = 3;
  std::uint64_t seed = 1;
  /// prop1: fractional orders.
  std::vector<Rat> alphas = {Rat(1, 2), Rat(1, 3)};
  /// pqr: random instances, N_max and framings.
  int instances = 20;
  int N = 2;
  std::vector<int> framings = {1, 2};
  /// scaling: kappa and the a-sequence (float mode).
  Rat kappa = 1;
  std::vector<long> a_values = {100, 1000, 10000};
};

VerificationReport check_factorization_initial(const CheckSpec& spec);
VerificationReport check_prop1(const CheckSpec& spec);
VerificationReport check_case(const CheckSpec& spec);
VerificationReport check_scaling_limits(const CheckSpec& spec);
VerificationReport lax_residual(const CheckSpec& spec);
VerificationReport check_reduction_persistence(const CheckSpec& spec);
VerificationReport check_extract_soundness(const CheckSpec& spec);
VerificationReport check_prop2_PQR(const CheckSpec& spec);
VerificationReport check_prop3_BC_flow(const CheckSpec& spec);
VerificationReport check_prop4_CC_flow(const CheckSpec& spec);
VerificationReport check_wave_linear(const CheckSpec& spec);

/// Dispatches on spec.id.
VerificationReport run_check(const CheckSpec& spec);
/// Check ids understood by run_check.
const std::vector<std::string>& check_ids();

}  // namespace kplab

#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "kplab/rational.hpp"

namespace kplab {

/// Parameter point of a run.
///
/// Every exponential in the model is reduced to an integer power of one
/// rational base g = e^{beta/M}. The formal symbol beta itself never gets a
/// numeric value in exact mode; it lives in BetaScalar / ExpCoeff keys.
///
/// Q is either tied to the base (Q = g^{jQ}) or an independent rational, in
/// which case fractional powers of Q must have exact rational roots.
///
/// The topological specialisation (cases c and d) fixes
///   q = sigma^2,  Q = sigma,  e^beta = q^{tau+1}
/// with tau the (possibly rational) framing.
class ParamEnv {
 public:
  /// e^{beta/M} = g, Q independent.
  static ParamEnv generic(Rat g, long M, Rat Q);
  /// e^{beta/M} = g, Q = g^{jQ}.
  static ParamEnv tied(Rat g, long M, Rat jQ);
  /// q = sigma^2, Q = sigma, e^beta = q^{tau+1}. With tau + 1 = P/R in lowest
  /// terms the base is rho with sigma = rho^{R*refine}, so M = 2*P*refine.
  static ParamEnv topological(Rat sigma, Rat tau, long refine = 1);

  const Rat& g() const { return g_; }
  long M() const { return M_; }

  /// e^{beta * x}; x must lie on (1/M)Z.
  Rat exp_beta(const Rat& x) const;
  /// Q^r.
  Rat Q_pow(const Rat& r) const;
  Rat Q() const { return Q_pow(Rat(1)); }
  /// q^r (topological point or explicit q).
  Rat q_pow(const Rat& r) const;

  bool has_q() const { return q_.has_value(); }
  const Rat& q() const;
  bool is_topological() const { return topological_; }
  /// Framing tau (integer f in the usual case).
  const Rat& framing() const;
  /// 1/(tau+1).
  Rat frac_order() const;
  /// Denominator of the fractional shift 1/(tau+1); 1 outside case c/d.
  long shift_denominator() const;

  /// When Q = g^{jQ}, the exponent jQ; used to fold Q^{x s} into e^{beta ...}.
  const std::optional<Rat>& Q_tie() const { return jQ_; }

  // Case data.
  std::optional<Rat> a;
  std::vector<Rat> b_n;
  std::vector<Rat> a_n;
  int beta_cap = 2;

  ParamEnv with_q(Rat q) const;

  /// Checks the constraints of the topological specialisation.
  void validate_topological() const;

  /// Flat key/value description (exact strings) for reports.
  std::map<std::string, std::string> describe() const;

 private:
  ParamEnv() = default;

  Rat g_ = 1;
  long M_ = 1;
  std::optional<Rat> jQ_;
  std::optional<Rat> Q_;
  std::optional<Rat> q_;
  std::optional<Rat> sigma_;
  std::optional<Rat> tau_;
  bool topological_ = false;
};

}  // namespace kplab

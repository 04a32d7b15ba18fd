#include "kplab/param_env.hpp"

#include <sstream>

#include "kplab/errors.hpp"

namespace kplab {

ParamEnv ParamEnv::generic(Rat g, long M, Rat Q) {
  if (g <= 0) throw ConfigError("base g must be positive");
  if (M <= 0) throw ConfigError("lattice denominator M must be positive");
  if (Q == 0) throw ConfigError("Q must be non-zero");
  ParamEnv env;
  env.g_ = std::move(g);
  env.M_ = M;
  env.Q_ = std::move(Q);
  return env;
}

ParamEnv ParamEnv::tied(Rat g, long M, Rat jQ) {
  if (g <= 0) throw ConfigError("base g must be positive");
  if (M <= 0) throw ConfigError("lattice denominator M must be positive");
  ParamEnv env;
  env.g_ = std::move(g);
  env.M_ = M;
  env.jQ_ = std::move(jQ);
  return env;
}

ParamEnv ParamEnv::topological(Rat sigma, Rat tau, long refine) {
  if (sigma <= 0 || sigma >= 1) throw ConfigError("sigma = q^{1/2} must lie in (0, 1)");
  if (tau <= -1) throw ConfigError("framing tau must satisfy tau > -1");
  if (refine <= 0) throw ConfigError("refine must be positive");
  Rat tp1 = tau + 1;
  long P = tp1.get_num().get_si();
  long R = tp1.get_den().get_si();
  auto rho = exact_root(sigma, static_cast<unsigned long>(R * refine));
  if (!rho)
    throw LatticeError("sigma = " + sigma.get_str() + " has no exact " +
                       std::to_string(R * refine) + "-th root; the framing " + tau.get_str() +
                       " needs it");
  ParamEnv env;
  env.g_ = *rho;
  env.M_ = 2 * P * refine;
  env.jQ_ = Rat(R * refine);
  env.sigma_ = sigma;
  env.q_ = sigma * sigma;
  env.tau_ = tau;
  env.topological_ = true;
  return env;
}

Rat ParamEnv::exp_beta(const Rat& x) const {
  Rat e = x * M_;
  e.canonicalize();
  if (!is_integer(e)) {
    std::ostringstream os;
    os << "exponent lattice violation: e^{beta*" << x.get_str() << "} needs M*x = " << e.get_str()
       << " to be an integer (M = " << M_ << ")";
    throw LatticeError(os.str());
  }
  return pow(g_, to_long(e, "e^beta power"));
}

Rat ParamEnv::Q_pow(const Rat& r) const {
  if (jQ_) {
    Rat e = *jQ_ * r;
    e.canonicalize();
    if (!is_integer(e)) {
      std::ostringstream os;
      os << "exponent lattice violation: Q^{" << r.get_str() << "} = g^{" << e.get_str() << "}";
      throw LatticeError(os.str());
    }
    return pow(g_, to_long(e, "Q power"));
  }
  if (is_integer(r)) return pow(*Q_, to_long(r, "Q power"));
  auto root = exact_root(*Q_, r.get_den().get_ui());
  if (!root) {
    std::ostringstream os;
    os << "exponent lattice violation: Q^{" << r.get_str() << "} with Q = " << Q_->get_str()
       << " has no exact rational value";
    throw LatticeError(os.str());
  }
  return pow(*root, r.get_num().get_si());
}

Rat ParamEnv::q_pow(const Rat& r) const {
  if (!q_) throw ConfigError("parameter q is not set");
  if (is_integer(r)) return pow(*q_, to_long(r, "q power"));
  if (topological_) return Q_pow(2 * r);
  auto root = exact_root(*q_, r.get_den().get_ui());
  if (!root) {
    std::ostringstream os;
    os << "exponent lattice violation: q^{" << r.get_str() << "} with q = " << q_->get_str()
       << " has no exact rational value";
    throw LatticeError(os.str());
  }
  return pow(*root, r.get_num().get_si());
}

const Rat& ParamEnv::q() const {
  if (!q_) throw ConfigError("parameter q is not set");
  return *q_;
}

const Rat& ParamEnv::framing() const {
  if (!tau_) throw ConfigError("framing f / tau is not set");
  return *tau_;
}

Rat ParamEnv::frac_order() const {
  Rat r = 1 / (framing() + 1);
  r.canonicalize();
  return r;
}

long ParamEnv::shift_denominator() const {
  if (!tau_) return 1;
  return frac_order().get_den().get_si();
}

ParamEnv ParamEnv::with_q(Rat q) const {
  if (topological_) throw ConfigError("q is fixed by the topological specialisation");
  ParamEnv env = *this;
  env.q_ = std::move(q);
  return env;
}

void ParamEnv::validate_topological() const {
  if (!topological_ || !q_ || !sigma_ || !tau_)
    throw ConfigError("case c/d needs q, sigma and the framing");
  if (*q_ != *sigma_ * *sigma_) throw ConfigError("q != sigma^2");
  if (Q() != *sigma_) throw ConfigError("Q != sigma");
  // e^beta = q^{tau+1} compared as e^{beta*R} = q^{P}.
  Rat tp1 = *tau_ + 1;
  Rat lhs = exp_beta(Rat(tp1.get_den()));
  Rat rhs = pow(*q_, tp1.get_num().get_si());
  if (lhs != rhs) throw ConfigError("e^beta != q^{f+1}");
}

std::map<std::string, std::string> ParamEnv::describe() const {
  std::map<std::string, std::string> out;
  out["g"] = g_.get_str();
  out["M"] = std::to_string(M_);
  if (jQ_) out["jQ"] = jQ_->get_str();
  if (Q_) out["Q"] = Q_->get_str();
  if (q_) out["q"] = q_->get_str();
  if (sigma_) out["sigma"] = sigma_->get_str();
  if (tau_) out["tau"] = tau_->get_str();
  if (a) out["a"] = a->get_str();
  auto join = [](const std::vector<Rat>& v) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + v[i].get_str();
    return s;
  };
  if (!b_n.empty()) out["b_n"] = join(b_n);
  if (!a_n.empty()) out["a_n"] = join(a_n);
  return out;
}

}  // namespace kplab

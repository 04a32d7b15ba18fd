#include "kplab/points.hpp"

#include <random>
#include <set>

#include "kplab/errors.hpp"

namespace kplab {

bool PointRequest::pins_point() const {
  return x || g || Q || q || sigma || a || !b_n.empty() || !a_n.empty();
}

bool is_topological_family(Family f) {
  return f == Family::C || f == Family::D || f == Family::GBIN || f == Family::GRR;
}

namespace {

Rat pick(std::mt19937_64& rng, const std::vector<Rat>& pool) {
  std::uniform_int_distribution<std::size_t> d(0, pool.size() - 1);
  return pool[d(rng)];
}

long pick_int(std::mt19937_64& rng, long lo, long hi) {
  std::uniform_int_distribution<long> d(lo, hi);
  return d(rng);
}

const std::vector<Rat>& base_pool() {
  static const std::vector<Rat> p = {Rat(2), Rat(3, 2), Rat(4, 3), Rat(2, 3), Rat(3, 4), Rat(1, 2), Rat(5, 4), Rat(5, 3)};
  return p;
}

const std::vector<Rat>& q_pool() {
  static const std::vector<Rat> p = {Rat(1, 3), Rat(1, 2), Rat(2), Rat(3), Rat(2, 5), Rat(3, 2), Rat(1, 4), Rat(5, 2)};
  return p;
}

const std::vector<Rat>& rho_pool() {
  static const std::vector<Rat> p = {Rat(1, 2), Rat(1, 3), Rat(2, 3), Rat(1, 4), Rat(3, 4), Rat(2, 5), Rat(3, 5)};
  return p;
}

std::vector<Rat> distinct_ints(std::mt19937_64& rng, int n, long lo, long hi, const std::vector<Rat>& avoid) {
  std::vector<Rat> out;
  while (static_cast<int>(out.size()) < n) {
    Rat v(pick_int(rng, lo, hi));
    bool clash = false;
    for (const auto& o : out) clash = clash || o == v;
    for (const auto& o : avoid) clash = clash || o == v;
    if (!clash) out.push_back(v);
  }
  return out;
}

void fill_case_data(Family family, ParamEnv& env, const PointRequest& req, std::mt19937_64& rng, bool user,
                    int N) {
  if (family == Family::B) {
    env.a = user && req.a ? *req.a : Rat(pick_int(rng, 1, 5), pick_int(rng, 1, 3));
  } else if (family == Family::D) {
    env.a = user && req.a ? *req.a : Rat(pick_int(rng, 1, 3));
  } else if (family == Family::GBIN || family == Family::GRR) {
    env.b_n = user && !req.b_n.empty() ? req.b_n : distinct_ints(rng, N, 0, 3, {});
    if (family == Family::GRR) {
      int na = user && !req.a_n.empty() ? static_cast<int>(req.a_n.size()) : static_cast<int>(env.b_n.size());
      env.a_n = user && !req.a_n.empty() ? req.a_n : distinct_ints(rng, na, 1, 4, env.b_n);
    }
  }
}

std::optional<ParamEnv> user_point(Family family, const PointRequest& req, long lattice, Rat tau,
                                   std::vector<std::string>* notes) {
  auto drop = [&](const std::string& why) {
    if (notes) notes->push_back("user point dropped: " + why);
    return std::optional<ParamEnv>();
  };
  if (is_topological_family(family)) {
    std::optional<Rat> sigma = req.sigma;
    if (!sigma && req.q) {
      sigma = exact_root(*req.q, 2);
      if (!sigma) throw ConfigError("q = " + req.q->get_str() + " is not the square of a rational sigma");
    }
    if (!sigma) sigma = Rat(1, 4);
    try {
      return ParamEnv::topological(*sigma, tau, lattice);
    } catch (const LatticeError& e) {
      return drop(e.what());
    }
  }
  std::optional<Rat> x = req.x;
  if (!x && req.g) x = pow(*req.g, req.M.value_or(1));
  if (!x) x = pow(Rat(3, 2), lattice);
  auto g = exact_root(*x, static_cast<unsigned long>(lattice));
  if (!g) return drop("e^beta = " + x->get_str() + " has no exact " + std::to_string(lattice) + "-th root");
  return ParamEnv::generic(*g, lattice, req.Q.value_or(Rat(1, 3)));
}

}  // namespace

std::vector<ParamEnv> parameter_points(Family family, const PointRequest& req, long lattice, int count,
                                       std::uint64_t seed, std::vector<std::string>* notes, Rat default_tau,
                                       int default_N) {
  if (count <= 0) return {};
  std::mt19937_64 rng(seed * 1000003ULL + static_cast<std::uint64_t>(family));
  Rat tau = req.tau.value_or(default_tau);
  int N = default_N;
  if (!req.b_n.empty()) N = static_cast<int>(req.b_n.size());
  std::vector<ParamEnv> out;
  std::set<std::string> seen;
  auto key = [](const ParamEnv& e) {
    std::string k;
    for (const auto& [a, b] : e.describe()) k += a + "=" + b + ";";
    return k;
  };
  if (req.pins_point()) {
    if (auto env = user_point(family, req, lattice, tau, notes)) {
      fill_case_data(family, *env, req, rng, true, N);
      seen.insert(key(*env));
      out.push_back(*env);
    }
  }
  for (int attempt = 0; static_cast<int>(out.size()) < count && attempt < 200; ++attempt) {
    std::optional<ParamEnv> env;
    if (is_topological_family(family)) {
      Rat tp1 = tau + 1;
      long R = tp1.get_den().get_si() * lattice;
      Rat sigma = pow(pick(rng, rho_pool()), R);
      env = ParamEnv::topological(sigma, tau, lattice);
    } else {
      env = ParamEnv::generic(pick(rng, base_pool()), lattice, pick(rng, q_pool()));
    }
    fill_case_data(family, *env, req, rng, false, N);
    if (seen.insert(key(*env)).second) out.push_back(*env);
  }
  return out;
}

}  // namespace kplab

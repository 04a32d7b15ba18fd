#include "kplab/schur.hpp"

#include <algorithm>
#include <cctype>
#include <functional>

#include "kplab/errors.hpp"

namespace kplab {

namespace {

// Laplace expansion along the first row; sizes here are at most ~8.
template <class T, class Entry>
T determinant(int n, Entry&& entry, const T& zero) {
  if (n == 0) return zero;
  std::vector<int> cols(n);
  for (int j = 0; j < n; ++j) cols[j] = j;
  std::function<T(int, std::vector<int>&)> rec = [&](int row, std::vector<int>& free) -> T {
    if (row == n - 1) return entry(row, free[0]);
    T acc = zero;
    for (std::size_t k = 0; k < free.size(); ++k) {
      int c = free[k];
      free.erase(free.begin() + static_cast<long>(k));
      T minor = rec(row + 1, free);
      free.insert(free.begin() + static_cast<long>(k), c);
      T term = entry(row, c) * minor;
      if (k % 2 == 0) {
        acc = acc + term;
      } else {
        acc = acc - term;
      }
    }
    return acc;
  };
  return rec(0, cols);
}

Rat q_denominator(const ParamEnv& env, int k) {
  Rat d = 1 - env.q_pow(Rat(k));
  if (d == 0) throw PoleError("q^" + std::to_string(k) + " = 1 makes c_" + std::to_string(k) + " singular");
  return Rat(k) * d;
}

}  // namespace

std::string family_name(Family f) {
  switch (f) {
    case Family::A: return "a";
    case Family::B: return "b";
    case Family::C: return "c";
    case Family::D: return "d";
    case Family::General: return "general";
    case Family::GBIFinite: return "gbi";
    case Family::GBIN: return "gbin";
    case Family::GRR: return "grr";
  }
  return "?";
}

Family parse_family(const std::string& name) {
  std::string s = name;
  std::transform(s.begin(), s.end(), s.begin(), [](unsigned char ch) { return std::tolower(ch); });
  for (Family f : {Family::A, Family::B, Family::C, Family::D, Family::General, Family::GBIFinite,
                   Family::GBIN, Family::GRR})
    if (family_name(f) == s) return f;
  throw ConfigError("unknown case '" + name + "'");
}

bool CVector::all_zero() const {
  return std::all_of(values.begin(), values.end(), [](const Rat& v) { return v == 0; });
}

CVector cvector(Family family, const ParamEnv& env, int Kc) {
  CVector c;
  c.family = family;
  auto need_a = [&]() -> const Rat& {
    if (!env.a) throw ConfigError("case " + family_name(family) + " needs the parameter a");
    return *env.a;
  };
  for (int k = 1; k <= Kc; ++k) {
    Rat v;
    switch (family) {
      case Family::A: v = (k == 1) ? 1 : 0; break;
      case Family::B: v = need_a() / Rat(k); break;
      case Family::C: v = 1 / q_denominator(env, k); break;
      case Family::D: v = (1 - env.q_pow(need_a() * k)) / q_denominator(env, k); break;
      case Family::GBIN:
      case Family::GRR: {
        if (env.b_n.empty()) throw ConfigError("case " + family_name(family) + " needs b_n");
        Rat num = 0;
        for (const auto& b : env.b_n) num += env.q_pow(b * k);
        if (family == Family::GRR) {
          if (env.a_n.size() != env.b_n.size()) throw ConfigError("case grr needs as many a_n as b_n");
          for (const auto& a : env.a_n) num -= env.q_pow(a * k);
        }
        v = num / q_denominator(env, k);
        break;
      }
      case Family::General:
      case Family::GBIFinite:
        throw ConfigError("explicit c-vectors are built with cvector_finite");
    }
    v.canonicalize();
    c.values.push_back(v);
  }
  return c;
}

CVector cvector_finite(std::vector<Rat> head, int Kc) {
  CVector c;
  c.family = Family::GBIFinite;
  c.values = std::move(head);
  if (static_cast<int>(c.values.size()) > Kc) throw ConfigError("more explicit c_k than Kc");
  c.values.resize(static_cast<std::size_t>(Kc), Rat(0));
  return c;
}

std::vector<TPoly> one_row_schur(const TRingPtr& ring) {
  // n S_n = sum_k k t_k S_{n-k}
  std::vector<TPoly> S;
  S.push_back(TPoly::constant(ring, Rat(1)));
  for (int n = 1; n <= ring->D(); ++n) {
    TPoly acc(ring);
    for (int k = 1; k <= std::min(n, ring->K()); ++k) acc += TPoly::variable(ring, k) * S[n - k] * Rat(k);
    S.push_back(acc * Rat(1, n));
  }
  return S;
}

namespace {

// Elementary polynomials e_n(t) = (-1)^n S_n(-t).
std::vector<TPoly> elementary_from_rows(const std::vector<TPoly>& rows) {
  std::vector<TPoly> e;
  for (std::size_t n = 0; n < rows.size(); ++n) {
    const TPoly& p = rows[n];
    const TRing& R = p.ring();
    TPoly r(p.ring_ptr(), p.valid_through());
    auto cs = p.coefficients();
    for (std::size_t i = 0; i < cs.size(); ++i) {
      if (cs[i] == 0) continue;
      int deg = 0;
      for (int x : R.exponents(i)) deg += x;
      int sign = ((static_cast<int>(n) + deg) % 2 == 0) ? 1 : -1;
      r += TPoly::monomial(p.ring_ptr(), R.exponents(i), cs[i] * sign);
    }
    e.push_back(r);
  }
  return e;
}

// Jacobi-Trudi in whichever of lambda, lambda' is shorter.
template <class T>
T jacobi_trudi(const Partition& lambda, const std::vector<T>& h, const std::vector<T>& e, const T& zero,
               const T& one) {
  Partition conj = lambda.conjugate();
  bool dual = conj.length() < lambda.length();
  const Partition& mu = dual ? conj : lambda;
  const std::vector<T>& gen = dual ? e : h;
  int n = mu.length();
  if (n == 0) return one;
  auto entry = [&](int i, int j) -> T {
    int idx = mu.part(i + 1) - (i + 1) + (j + 1);
    if (idx < 0 || idx >= static_cast<int>(gen.size())) return zero;
    return gen[static_cast<std::size_t>(idx)];
  };
  return determinant<T>(n, entry, zero);
}

}  // namespace

TPoly schur_poly(const Partition& lambda, const TRingPtr& ring) {
  auto rows = one_row_schur(ring);
  return jacobi_trudi(lambda, rows, elementary_from_rows(rows), TPoly(ring), TPoly::constant(ring, Rat(1)));
}

Rat schur_at(const Partition& lambda, const CVector& c) {
  int d = lambda.size();
  if (c.size() < d)
    throw ConfigError("S_" + lambda.to_string() + "(c) needs c_1..c_" + std::to_string(d) + ", only " +
                      std::to_string(c.size()) + " given");
  // n S_n = sum k c_k S_{n-k}; e_n from the same recurrence with (-1)^{k-1} c_k.
  std::vector<Rat> h{Rat(1)};
  std::vector<Rat> e{Rat(1)};
  for (int n = 1; n <= d; ++n) {
    Rat hs = 0;
    Rat es = 0;
    for (int k = 1; k <= n; ++k) {
      hs += Rat(k) * c[k] * h[n - k];
      Rat term = Rat(k) * c[k] * e[n - k];
      if (k % 2 == 0) {
        es -= term;
      } else {
        es += term;
      }
    }
    h.push_back(hs / n);
    e.push_back(es / n);
  }
  Rat r = jacobi_trudi(lambda, h, e, Rat(0), Rat(1));
  r.canonicalize();
  return r;
}

Rat schur_special_closed(const Partition& lambda, Family family, const ParamEnv& env) {
  auto hk = hooks(lambda);
  if (family == Family::A) {
    Rat r = 1;
    for (const auto& [box, h] : hk) r /= h;
    return r;
  }
  if (family == Family::C) {
    Rat num = env.q_pow(Rat(-kappa(lambda), 4) - Rat(lambda.size(), 2));
    Rat den = 1;
    for (const auto& [box, h] : hk) den *= env.q_pow(Rat(-h, 2)) - env.q_pow(Rat(h, 2));
    if (den == 0) throw PoleError("q^h = 1 in the hook product");
    return num / den;
  }
  throw ConfigError("closed-form Schur values exist for cases a and c only");
}

SchurTable::SchurTable(TRingPtr ring)
    : ring_(std::move(ring)), rows_(one_row_schur(ring_)), elem_(elementary_from_rows(rows_)) {}

const TPoly& SchurTable::operator()(const Partition& lambda) {
  auto it = cache_.find(lambda);
  if (it != cache_.end()) return it->second;
  TPoly p = jacobi_trudi(lambda, rows_, elem_, TPoly(ring_), TPoly::constant(ring_, Rat(1)));
  return cache_.emplace(lambda, std::move(p)).first->second;
}

}  // namespace kplab

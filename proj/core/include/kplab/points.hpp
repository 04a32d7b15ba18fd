#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "kplab/param_env.hpp"
#include "kplab/schur.hpp"

namespace kplab {

/// Parameter values supplied by the user; anything missing is drawn at random.
struct PointRequest {
  std::optional<Rat> x;      // e^beta
  std::optional<Rat> g;      // e^{beta/M}, with M
  std::optional<long> M;
  std::optional<Rat> Q;
  std::optional<Rat> q;
  std::optional<Rat> sigma;
  std::optional<Rat> tau;    // framing; integer f or rational tau
  std::optional<Rat> a;
  std::vector<Rat> b_n;
  std::vector<Rat> a_n;

  /// True when some value fixes the first point.
  bool pins_point() const;
};

/// Whether a family lives on the topological specialisation.
bool is_topological_family(Family f);

/// Up to `count` distinct points for the family. The first is the user's
/// point when one was given and it fits the lattice; otherwise a note says
/// why it was dropped. Generic points have M = lattice; topological points
/// use refine = lattice. Structural choices (framing, N) are kept fixed.
std::vector<ParamEnv> parameter_points(Family family, const PointRequest& req, long lattice, int count,
                                       std::uint64_t seed, std::vector<std::string>* notes = nullptr,
                                       Rat default_tau = Rat(1), int default_N = 2);

}  // namespace kplab

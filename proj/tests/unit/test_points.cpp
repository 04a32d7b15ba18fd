#include "doctest.h"
#include "kplab/points.hpp"

using namespace kplab;

TEST_CASE("random points are deterministic and distinct") {
  PointRequest none;
  auto a = parameter_points(Family::A, none, 1, 5, 42);
  auto b = parameter_points(Family::A, none, 1, 5, 42);
  REQUIRE(a.size() == 5);
  for (std::size_t i = 0; i < a.size(); ++i) CHECK(a[i].describe() == b[i].describe());
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = i + 1; j < a.size(); ++j) CHECK(a[i].describe() != a[j].describe());
  auto c = parameter_points(Family::A, none, 1, 5, 43);
  CHECK(a[0].describe() != c[0].describe());
}

TEST_CASE("the user's point comes first") {
  PointRequest req;
  req.x = Rat(9, 4);
  req.Q = Rat(1, 3);
  auto pts = parameter_points(Family::A, req, 2, 3, 1);
  REQUIRE(pts.size() == 3);
  CHECK(pts[0].g() == Rat(3, 2));
  CHECK(pts[0].M() == 2);
  CHECK(pts[0].Q() == Rat(1, 3));
}

TEST_CASE("a user point off the lattice is dropped with a note") {
  PointRequest req;
  req.x = Rat(2);
  std::vector<std::string> notes;
  auto pts = parameter_points(Family::A, req, 2, 3, 1, &notes);
  CHECK(pts.size() == 3);
  CHECK(pts[0].exp_beta(Rat(1)) != Rat(2));
  REQUIRE_FALSE(notes.empty());
}

TEST_CASE("topological requests") {
  PointRequest req;
  req.q = Rat(1, 16);
  req.tau = Rat(2);
  auto pts = parameter_points(Family::C, req, 1, 2, 1);
  REQUIRE_FALSE(pts.empty());
  CHECK(pts[0].q() == Rat(1, 16));
  CHECK(pts[0].framing() == 2);
  for (const auto& p : pts) CHECK(p.is_topological());
  CHECK(is_topological_family(Family::D));
  CHECK_FALSE(is_topological_family(Family::B));
}

TEST_CASE("case data is drawn for families that need it") {
  PointRequest none;
  for (const auto& p : parameter_points(Family::B, none, 1, 3, 5)) CHECK(p.a.has_value());
  for (const auto& p : parameter_points(Family::GBIN, none, 1, 3, 5)) CHECK(p.b_n.size() == 2);
  for (const auto& p : parameter_points(Family::GRR, none, 1, 3, 5)) {
    CHECK(p.b_n.size() == 2);
    CHECK(p.a_n.size() == 2);
  }
}

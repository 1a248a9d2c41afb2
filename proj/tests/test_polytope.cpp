#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <set>
#include <vector>

#include "rhotensor/polytope.hpp"
#include "support/exact_lp.hpp"
#include "support/test_util.hpp"

using namespace rhotensor;
using testutil::make_weight;

namespace {

Weight two_rho(const RootSystem& sys) { return sys.rho_weight + sys.rho_weight; }

}  // namespace

TEST_CASE("subset masks") {
  CHECK(indices_to_mask({}, 4) == 0u);
  CHECK(indices_to_mask({1}, 4) == 1u);
  CHECK(indices_to_mask({2, 4}, 4) == 0b1010u);
  CHECK(indices_to_mask({4, 2}, 4) == 0b1010u);
  CHECK(mask_to_indices(0b1010u, 4) == std::vector<int>{2, 4});
  CHECK(mask_to_indices(0u, 3).empty());
  CHECK_THROWS_AS(indices_to_mask({5}, 4), std::invalid_argument);
  CHECK_THROWS_AS(indices_to_mask({0}, 4), std::invalid_argument);
}

TEST_CASE("vertex sets of small chamber polytopes") {
  RootSystem a1 = build("A1");
  VertexSet v1 = vertices(a1, make_weight({2}));
  CHECK(v1.entries.size() == 2);
  CHECK(v1.at(0b0) == make_weight({2}));
  CHECK(v1.at(0b1) == make_weight({0}));

  RootSystem a2 = build("A2");
  VertexSet v2 = vertices(a2, make_weight({2, 2}));
  CHECK(v2.entries.size() == 4);
  CHECK(v2.at(0b00) == make_weight({2, 2}));
  CHECK(v2.at(0b01) == make_weight({0, 3}));
  CHECK(v2.at(0b10) == make_weight({3, 0}));
  CHECK(v2.at(0b11) == make_weight({0, 0}));

  RootSystem b2 = build("B2");
  VertexSet vb = vertices(b2, make_weight({2, 2}));
  CHECK(vb.at(0b00) == make_weight({2, 2}));
  CHECK(vb.at(0b01) == make_weight({0, 4}));
  CHECK(vb.at(0b10) == make_weight({3, 0}));
  CHECK(vb.at(0b11) == make_weight({0, 0}));

  // Vertices need not be integral for general regular mu.
  VertexSet vr = vertices(b2, b2.rho_weight);
  CHECK(vr.at(0b00) == b2.rho_weight);
  CHECK(vr.at(0b01) == make_weight({0, 2}));
  CHECK(vr.at(0b11) == Weight::zero(2));
  CHECK(vr.at(0b10).coords == std::vector<Rat>{Rat(3, 2), Rat(0)});

  CHECK_THROWS_AS(vertices(a2, make_weight({1, 0})), std::invalid_argument);  // singular
  CHECK_THROWS_AS(vertices(a2, make_weight({-1, 2})), std::invalid_argument);

  Limits tight;
  tight.max_vertex_rank = 2;
  CHECK_THROWS_AS(vertices(build("A3"), build("A3").rho_weight, tight), GuardExceeded);
}

TEST_CASE("closed form for the vertices below twice rho") {
  for (const char* name :
       {"A1", "A2", "A3", "A4", "B2", "B3", "B4", "C2", "C3", "C4", "D4", "G2", "F4"}) {
    RootSystem sys = build(name);
    VertexSet closed = vertices_2rho(sys);
    VertexSet averaged = vertices(sys, two_rho(sys));
    REQUIRE(closed.entries.size() == (std::size_t{1} << sys.rank()));
    REQUIRE(averaged.entries.size() == closed.entries.size());
    for (const auto& [mask, v] : closed.entries) {
      CHECK(v == averaged.at(mask));
      CHECK(v.is_integral());
      CHECK(v.is_dominant());

      // Coordinates of v vanish exactly on the chosen subset.
      std::vector<int> indices = mask_to_indices(mask, sys.rank());
      std::set<int> J(indices.begin(), indices.end());
      for (int i = 1; i <= sys.rank(); ++i) {
        CHECK((v.coords[i - 1] == 0) == (J.count(i) > 0));
      }
    }

    // The empty set keeps 2rho; the full set lands on zero.
    CHECK(closed.at(0u) == two_rho(sys));
    CHECK(closed.at((1u << sys.rank()) - 1) == Weight::zero(sys.rank()));
  }
}

TEST_CASE("vertex criterion") {
  RootSystem b2 = build("B2");
  Weight mu = two_rho(b2);
  CHECK(vertex_criterion(b2, mu, mu));
  CHECK(vertex_criterion(b2, mu, make_weight({0, 4})));
  CHECK(vertex_criterion(b2, mu, make_weight({3, 0})));
  CHECK(vertex_criterion(b2, mu, Weight::zero(2)));
  CHECK_FALSE(vertex_criterion(b2, mu, make_weight({0, 2})));  // gap (2, 2)
  CHECK_FALSE(vertex_criterion(b2, mu, make_weight({1, 2})));
  CHECK_FALSE(vertex_criterion(b2, mu, make_weight({2, 0})));

  RootSystem a2 = build("A2");
  CHECK_FALSE(vertex_criterion(a2, two_rho(a2), a2.rho_weight));  // gap (1, 1)

  CHECK_THROWS_AS(vertex_criterion(b2, make_weight({1, 0}), Weight::zero(2)),
                  std::invalid_argument);  // mu singular
  CHECK_THROWS_AS(vertex_criterion(b2, mu, make_weight({-1, 4})), std::invalid_argument);
  CHECK_THROWS_AS(vertex_criterion(b2, mu, make_weight({5, 0})), std::invalid_argument);
}

TEST_CASE("criterion matches the vertex list on lattice points") {
  for (const char* name : {"A1", "A2", "A3", "A4", "B2", "B3", "C2", "C3", "D4", "G2"}) {
    RootSystem sys = build(name);
    Weight mu = two_rho(sys);
    VertexSet vs = vertices_2rho(sys);
    std::set<Weight> vertex_values;
    for (const auto& [mask, v] : vs.entries) vertex_values.insert(v);

    std::vector<LatticePoint2Rho> points = lattice_points_2rho(sys);
    REQUIRE(!points.empty());
    for (const LatticePoint2Rho& p : points) {
      bool crit = vertex_criterion(sys, mu, p.weight);
      CHECK(crit == (vertex_values.count(p.weight) > 0));
      CHECK(crit == p.is_vertex);
    }

    // Every vertex appears among the lattice points.
    std::set<Weight> point_values;
    for (const LatticePoint2Rho& p : points) point_values.insert(p.weight);
    for (const Weight& v : vertex_values) CHECK(point_values.count(v) == 1);
  }
}

TEST_CASE("lattice points below twice rho") {
  RootSystem a1 = build("A1");
  std::vector<LatticePoint2Rho> p1 = lattice_points_2rho(a1);
  REQUIRE(p1.size() == 2);
  CHECK(p1[0].weight == make_weight({2}));
  CHECK(p1[1].weight == make_weight({0}));
  CHECK(p1[0].is_vertex);
  CHECK(p1[1].is_vertex);

  RootSystem a2 = build("A2");
  std::vector<LatticePoint2Rho> p2 = lattice_points_2rho(a2);
  REQUIRE(p2.size() == 5);
  CHECK(p2[0].weight == make_weight({2, 2}));
  CHECK(p2[1].weight == make_weight({3, 0}));
  CHECK(p2[2].weight == make_weight({0, 3}));
  CHECK(p2[3].weight == make_weight({1, 1}));
  CHECK(p2[4].weight == make_weight({0, 0}));
  CHECK(!p2[3].is_vertex);

  RootSystem b2 = build("B2");
  std::vector<LatticePoint2Rho> pb = lattice_points_2rho(b2);
  REQUIRE(pb.size() == 8);
  bool saw_inner = false;
  for (const LatticePoint2Rho& p : pb) {
    // weight + gap reconstructs 2rho.
    Weight back = p.weight;
    for (int i = 0; i < 2; ++i) {
      back = back + p.root_gap.coords[i] * b2.simple_roots[i];
    }
    CHECK(back == two_rho(b2));
    if (p.weight == make_weight({0, 2})) {
      saw_inner = true;
      CHECK(p.root_gap.coords == std::vector<Rat>{Rat(2), Rat(2)});
      CHECK(!p.is_vertex);
    }
  }
  CHECK(saw_inner);
}

TEST_CASE("polytope membership") {
  RootSystem a2 = build("A2");
  Weight mu = two_rho(a2);
  CHECK(membership(a2, mu, mu));
  CHECK(membership(a2, mu, make_weight({1, 1})));
  CHECK(membership(a2, mu, Weight::zero(2)));
  CHECK_FALSE(membership(a2, mu, make_weight({4, 0})));   // outside the cone below mu
  CHECK_FALSE(membership(a2, mu, make_weight({-1, 1})));  // not dominant
  CHECK_FALSE(membership(a2, mu, make_weight({3, 1})));   // gap root coords (-1/3, 1/3)

  // Membership is about the real polytope: points off the 2rho coset count too.
  CHECK(membership(a2, mu, make_weight({2, 1})));  // gap root coords (1/3, 2/3)
  CHECK(testlp::in_convex_hull(orbit(a2, mu), make_weight({2, 1})));
  CHECK_FALSE(testlp::in_convex_hull(orbit(a2, mu), make_weight({3, 1})));

  // Fractional weights inside the chamber cut are members too.
  Weight half = Rat(1, 2) * a2.rho_weight;
  CHECK(membership(a2, mu, half));

  RootSystem a1 = build("A1");
  CHECK_FALSE(membership(a1, make_weight({2}), make_weight({3})));
  CHECK(membership(a1, make_weight({2}), make_weight({1})));  // fractional gap 1/2

  CHECK_THROWS_AS(membership(a2, make_weight({1, 0}), Weight::zero(2)), std::invalid_argument);
}

TEST_CASE("convexity of the chamber polytope by exact linear programming") {
  for (const char* name : {"A1", "A2", "A3", "B2", "B3", "C2", "C3", "G2"}) {
    RootSystem sys = build(name);
    Weight mu = two_rho(sys);
    std::vector<Weight> full_orbit = orbit(sys, mu);
    std::vector<LatticePoint2Rho> points = lattice_points_2rho(sys);
    VertexSet vs = vertices_2rho(sys);

    std::vector<Weight> vertex_list;
    for (const auto& [mask, v] : vs.entries) vertex_list.push_back(v);

    // Lattice points and chamber vertices lie in the convex hull of the orbit.
    for (const LatticePoint2Rho& p : points) {
      CHECK(testlp::in_convex_hull(full_orbit, p.weight));
    }
    for (const Weight& v : vertex_list) {
      CHECK(testlp::in_convex_hull(full_orbit, v));
    }

    // Non-vertex lattice points are convex combinations of the vertices;
    // vertices are extreme among all candidate points.
    std::vector<Weight> candidates = vertex_list;
    for (const LatticePoint2Rho& p : points) {
      if (!p.is_vertex) candidates.push_back(p.weight);
    }
    for (const LatticePoint2Rho& p : points) {
      if (!p.is_vertex) CHECK(testlp::in_convex_hull(vertex_list, p.weight));
    }
    for (const Weight& v : vertex_list) {
      std::vector<Weight> others;
      for (const Weight& c : candidates) {
        if (c != v) others.push_back(c);
      }
      CHECK_FALSE(testlp::in_convex_hull(others, v));
    }

    // Points beyond the polytope are rejected.
    Weight outside = mu;
    outside.coords[0] += 1;
    CHECK_FALSE(testlp::in_convex_hull(full_orbit, outside));
    Weight fractional = Rat(101, 100) * mu;
    CHECK_FALSE(testlp::in_convex_hull(full_orbit, fractional));
  }
}

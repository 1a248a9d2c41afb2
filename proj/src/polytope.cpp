#include "rhotensor/polytope.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

namespace rhotensor {

namespace {

void require_regular_dominant_integral(const Weight& mu) {
  if (!mu.is_integral() || !mu.is_regular_dominant()) {
    throw std::invalid_argument("mu must be regular dominant integral, got " + to_string(mu));
  }
}

void check_vertex_rank(const RootSystem& sys, const Limits& limits) {
  if (sys.rank() > limits.max_vertex_rank) {
    std::ostringstream os;
    os << "vertex enumeration over 2^" << sys.rank() << " subsets exceeds rank limit "
       << limits.max_vertex_rank;
    throw GuardExceeded(os.str());
  }
}

}  // namespace

unsigned indices_to_mask(const std::vector<int>& indices, int rank) {
  unsigned mask = 0;
  for (int i : indices) {
    if (i < 1 || i > rank) throw std::invalid_argument("simple root index out of range");
    mask |= 1u << (i - 1);
  }
  return mask;
}

std::vector<int> mask_to_indices(unsigned mask, int rank) {
  std::vector<int> out;
  for (int i = 1; i <= rank; ++i) {
    if (mask & (1u << (i - 1))) out.push_back(i);
  }
  return out;
}

VertexSet vertices(const RootSystem& sys, const Weight& mu, const Limits& limits) {
  require_regular_dominant_integral(mu);
  check_vertex_rank(sys, limits);
  const int r = sys.rank();

  VertexSet vs;
  std::set<Weight> seen;
  for (unsigned mask = 0; mask < (1u << r); ++mask) {
    std::vector<Weight> orb = orbit_under(sys, mu, mask_to_indices(mask, r), limits);
    Weight sum = Weight::zero(r);
    for (const Weight& w : orb) sum = sum + w;
    Weight v = Rat(1, static_cast<long>(orb.size())) * sum;
    if (!vertex_criterion(sys, mu, v)) {
      throw std::logic_error("vertices: orbit average fails the vertex criterion");
    }
    if (!seen.insert(v).second) {
      throw std::logic_error("vertices: coinciding vertices for distinct subsets");
    }
    vs.entries.emplace(mask, std::move(v));
  }
  return vs;
}

VertexSet vertices_2rho(const RootSystem& sys, const Limits& limits) {
  check_vertex_rank(sys, limits);
  const int r = sys.rank();
  Weight two_rho = Rat(2) * sys.rho_weight;

  VertexSet vs;
  for (unsigned mask = 0; mask < (1u << r); ++mask) {
    Weight v = two_rho;
    for (const RootCoords& alpha : positive_roots_of_subsystem(sys, mask_to_indices(mask, r))) {
      v = v - root_to_weight_coords(sys, alpha);
    }
    vs.entries.emplace(mask, std::move(v));
  }
  return vs;
}

bool vertex_criterion(const RootSystem& sys, const Weight& mu, const Weight& lambda) {
  require_regular_dominant_integral(mu);
  if (!lambda.is_dominant()) {
    throw std::invalid_argument("lambda must be dominant, got " + to_string(lambda));
  }
  RootCoords gap = weight_to_root_coords(sys, mu - lambda);
  if (!gap.is_nonnegative()) {
    throw std::invalid_argument("lambda must lie below mu, got gap " + to_string(gap));
  }
  for (int i = 0; i < sys.rank(); ++i) {
    const Rat& m = lambda.coords[i];
    const Rat& a = gap.coords[i];
    if (m != 0 && a != 0) return false;
    if (m == 0 && a == 0) return false;
  }
  return true;
}

bool membership(const RootSystem& sys, const Weight& mu, const Weight& lambda) {
  require_regular_dominant_integral(mu);
  if (lambda.rank() != sys.rank()) throw std::invalid_argument("membership: rank mismatch");
  if (!lambda.is_dominant()) return false;
  return weight_to_root_coords(sys, mu - lambda).is_nonnegative();
}

std::vector<LatticePoint2Rho> lattice_points_2rho(const RootSystem& sys, const Limits& limits) {
  Weight two_rho = Rat(2) * sys.rho_weight;
  std::vector<Weight> points = dominant_weights_below(sys, two_rho, limits);
  VertexSet vs = vertices_2rho(sys, limits);
  std::set<Weight> vertex_values;
  for (const auto& [mask, v] : vs.entries) vertex_values.insert(v);

  FreudenthalTable rho_table(sys, sys.rho_weight);
  std::vector<LatticePoint2Rho> out;
  out.reserve(points.size());
  for (const Weight& w : points) {
    if (rho_table.multiplicity(w - sys.rho_weight) == 0) {
      throw std::logic_error("lattice_points_2rho: point minus rho is not a weight of V(rho): " +
                             to_string(w));
    }
    LatticePoint2Rho p;
    p.weight = w;
    p.root_gap = weight_to_root_coords(sys, two_rho - w);
    p.is_vertex = vertex_values.count(w) > 0;
    out.push_back(std::move(p));
  }
  return out;
}

}  // namespace rhotensor

#pragma once

#include <map>
#include <vector>

#include "rhotensor/reps.hpp"

namespace rhotensor {

// Vertices of P(mu) = conv(W.mu) cap dominant chamber, one per subset J of
// simple-root indices.  Keys are bitmasks: bit k set means index k+1 in J.
struct VertexSet {
  std::map<unsigned, Weight> entries;

  const Weight& at(unsigned mask) const { return entries.at(mask); }
};

unsigned indices_to_mask(const std::vector<int>& indices, int rank);
std::vector<int> mask_to_indices(unsigned mask, int rank);

// v_J = average of the W_J-orbit of mu, for regular dominant integral mu.
VertexSet vertices(const RootSystem& sys, const Weight& mu, const Limits& limits = {});

// Closed form for mu = 2rho: v_J = 2rho - sum(Phi_J+) = rho + w_J(rho).
VertexSet vertices_2rho(const RootSystem& sys, const Limits& limits = {});

// lambda is a vertex of P(mu) iff min(m_i, a_i) = 0 for every i and no index
// has m_i = a_i = 0, where m = fundamental coords of lambda and a = root
// coords of mu - lambda.
bool vertex_criterion(const RootSystem& sys, const Weight& mu, const Weight& lambda);

// lambda in P(mu) iff lambda is dominant and mu - lambda has nonnegative
// root coordinates.
bool membership(const RootSystem& sys, const Weight& mu, const Weight& lambda);

struct LatticePoint2Rho {
  Weight weight;
  RootCoords root_gap;  // 2rho - weight in root coordinates
  bool is_vertex = false;
};

// Dominant lattice points of P(2rho) congruent to 2rho mod the root lattice,
// each checked to be rho plus a weight of V(rho).  Ordered by gap height,
// then lexicographically by gap.
std::vector<LatticePoint2Rho> lattice_points_2rho(const RootSystem& sys,
                                                  const Limits& limits = {});

}  // namespace rhotensor

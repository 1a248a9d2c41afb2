#pragma once

#include <map>
#include <string>
#include <vector>

#include "rhotensor/polytope.hpp"

namespace rhotensor {

struct ConjecturePoint {
  Weight weight;
  RootCoords root_gap;   // 2rho - weight in root coordinates
  Int multiplicity;      // c_{rho,rho}^weight
  bool is_vertex = false;
};

struct ConjectureReport {
  std::string lie_type;
  std::vector<ConjecturePoint> points;
  bool all_positive = false;
  bool vertex_mults_all_one = false;
  bool dim_identity_holds = false;
  long long runtime_ms = 0;
};

struct SaturationPoint {
  Weight weight;     // lattice point lambda of P(2rho)
  Int multiplicity;  // c_{d rho, d rho}^{d lambda}
};

struct SaturationReport {
  std::string lie_type;
  Int d = 1;
  std::vector<SaturationPoint> points;
  bool all_positive = false;
};

// Multiplicity of each polytope vertex v_J inside V(rho) tensor V(rho),
// keyed by the subset bitmask.  Passes when every value is 1.
std::map<unsigned, Int> verify_vertices(const RootSystem& sys, const Limits& limits = {});

// Full positivity check: decompose V(rho) tensor V(rho) once and join the
// result against the lattice points of P(2rho).  A zero multiplicity is
// reported, not thrown; a component outside the lattice-point set is an
// internal error.
ConjectureReport verify_conjecture(const RootSystem& sys, const Limits& limits = {});

// Sum of c * dim over the decomposition equals 2^(2|Phi+|), and
// 2^(dim g) = 2^r * 2^(2|Phi+|) with dim g = r + 2|Phi+|.
bool verify_dimension_identity(const RootSystem& sys, const Limits& limits = {});

// (mu,mu) <= (rho,rho) for every mu in Pi(rho), with equality exactly on the
// Weyl orbit of rho.
bool verify_norm_inequality(const RootSystem& sys, const Limits& limits = {});

// For every w != 1 in W, the weight w_J(rho) + 2rho - w(2rho) has
// Freudenthal multiplicity 0 in V(rho).  W is enumerated through the regular
// orbit of 2rho.
bool verify_emptiness(const RootSystem& sys, const std::vector<int>& J,
                      const Limits& limits = {});

// c_{d rho, d rho}^{d lambda} for every lattice point lambda of P(2rho).
SaturationReport verify_saturation(const RootSystem& sys, const Int& d,
                                   const Limits& limits = {});

// Known saturation factors: 1 for A, 2 for B and C, 4 for D; 0 means no
// default is provided and the caller must choose d explicitly.
Int default_saturation_factor(const LieType& type);

}  // namespace rhotensor

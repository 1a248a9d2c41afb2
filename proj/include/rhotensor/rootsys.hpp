#pragma once

#include <string>
#include <vector>

#include "rhotensor/numeric.hpp"
#include "rhotensor/weight.hpp"

namespace rhotensor {

// A simple Lie type: series letter and rank.  Admissible ranks are
// A r>=1, B r>=2, C r>=2, D r>=4, E 6..8, F 4, G 2.
struct LieType {
  char series = 'A';
  int rank = 1;

  std::string name() const { return std::string(1, series) + std::to_string(rank); }

  friend bool operator==(const LieType& a, const LieType& b) {
    return a.series == b.series && a.rank == b.rank;
  }
};

// Parses strings like "B2" or "E6"; throws std::invalid_argument for
// malformed input or inadmissible ranks.
LieType parse_lie_type(const std::string& s);

bool is_admissible(const LieType& t);

// Immutable Cartan data for a simple type, all entries exact.
//
// Conventions (fixed once, everything downstream depends on them):
//   * Bourbaki numbering of the simple roots.  For B_r the last root alpha_r
//     is short; for C_r it is long.
//   * cartan[i][j] = alpha_{j+1}(H_{alpha_{i+1}}), so the j-th column of the
//     Cartan matrix is alpha_{j+1} written in the fundamental-weight basis.
//   * symmetrizer d satisfies d[i]*cartan[i][j] = d[j]*cartan[j][i] and is
//     normalized so long roots have squared norm 2, i.e. max d[i] = 1.
struct RootSystem {
  LieType type;
  std::vector<std::vector<Int>> cartan;
  std::vector<std::vector<Rat>> cartan_inverse;
  std::vector<RootCoords> positive_roots;  // nonnegative integer coordinates
  std::vector<Rat> symmetrizer;

  // Derived data, filled in by build():
  Weight rho_weight;                        // (1,...,1)
  std::vector<Weight> simple_roots;         // columns of cartan
  std::vector<std::vector<Rat>> gram;       // gram[i][j] = (omega_{i+1}, omega_{j+1})

  int rank() const { return type.rank; }
};

// Constructs the root system for an admissible type.  Positive roots are
// generated by closure of the simple roots under root strings; the count is
// checked against the classical table and the Cartan inverse is verified
// exactly, so a construction bug cannot escape silently.
RootSystem build(const LieType& type);
RootSystem build(const std::string& type_name);

// rho = sum of fundamental weights = half the sum of positive roots.
Weight rho(const RootSystem& sys);

// Exact change of basis between fundamental-weight and simple-root coordinates.
RootCoords weight_to_root_coords(const RootSystem& sys, const Weight& w);
Weight root_to_weight_coords(const RootSystem& sys, const RootCoords& a);

// Standard W-invariant bilinear form, normalized so long roots have (a,a)=2.
Rat bilinear(const RootSystem& sys, const Weight& x, const Weight& y);

// (x, beta) for a root given in simple-root coordinates.
Rat bilinear_root(const RootSystem& sys, const Weight& x, const RootCoords& beta);

// True iff the (integral) weight lies in the root lattice.
bool in_root_lattice(const RootSystem& sys, const Weight& w);

// |W| by the classical closed form; used for orbit-size estimates.
Int weyl_order(const LieType& type);

// Classical |Phi+| count; build() checks the generated roots against it.
Int positive_root_count(const LieType& type);

}  // namespace rhotensor

#pragma once

#include <map>
#include <vector>

#include "rhotensor/weyl.hpp"

namespace rhotensor {

// A formal character / weight system: weight -> positive multiplicity.
using WeightMultiset = std::map<Weight, Int>;

// Tensor product decomposition: dominant weight -> multiplicity.
using Decomposition = std::map<Weight, Int>;

// All dominant integral mu with lambda - mu a nonnegative integer combination
// of simple roots, lambda itself included.  Ordered by height of the gap,
// then lexicographically by the gap coordinates.
std::vector<Weight> dominant_weights_below(const RootSystem& sys, const Weight& lambda,
                                           const Limits& limits = {});

// Weight multiplicities of V(lambda) by the Freudenthal recursion, evaluated
// top-down with memoization on dominant representatives.  The RootSystem must
// outlive the table.
class FreudenthalTable {
 public:
  FreudenthalTable(const RootSystem& sys, Weight lambda);

  const Weight& highest_weight() const { return lambda_; }

  // dim of the mu weight space of V(lambda); 0 when mu is not a weight.
  Int multiplicity(const Weight& mu) const;

 private:
  Int dominant_multiplicity(const Weight& nu) const;

  const RootSystem& sys_;
  Weight lambda_;
  RootCoords lambda_root_coords_;
  Rat lambda_rho_norm_;  // (lambda+rho, lambda+rho)
  mutable std::map<Weight, Int> memo_;
};

Int freudenthal_multiplicity(const RootSystem& sys, const Weight& lambda, const Weight& mu);

// Independent oracle for m_rho: the number of subsets of Phi+ summing to
// rho - beta.  (chi_rho = e^rho * prod_{a>0}(1+e^{-a}), so coefficients of the
// rho character are subset counts.)  Guarded to |Phi+| <= 24.
Int rho_multiplicity_oracle(const RootSystem& sys, const Weight& beta);

// Full weight system Pi(lambda) with multiplicities; total mass = dim(lambda).
WeightMultiset weight_system(const RootSystem& sys, const Weight& lambda,
                             const Limits& limits = {});

// Weyl dimension formula, exact.
Int dim(const RootSystem& sys, const Weight& lambda);

// Tensor product decomposition by the signed dominant-shift formula: for each
// beta in Pi(lambda), normalize beta + mu + rho to the dominant chamber, drop
// singular hits, and add parity-weighted multiplicity to the bucket at
// (representative - rho).  Iterates the smaller-dimensional factor orbit by
// orbit, so memory stays proportional to the dominant weights plus one orbit.
Decomposition tensor_decompose(const RootSystem& sys, const Weight& lambda, const Weight& mu,
                               const Limits& limits = {});

// Single coefficient c_{lambda mu}^nu without materializing the decomposition.
Int tensor_multiplicity(const RootSystem& sys, const Weight& lambda, const Weight& mu,
                        const Weight& nu, const Limits& limits = {});

// Independent oracle: multiply the formal characters, then repeatedly strip
// the highest dominant weight with the full character of its irreducible.
Decomposition character_product_oracle(const RootSystem& sys, const Weight& lambda,
                                       const Weight& mu, const Limits& limits = {});

}  // namespace rhotensor

#pragma once

#include <vector>

#include "rhotensor/rootsys.hpp"

namespace rhotensor {

// A word in the simple reflections, letters in 1..r.  Words only ever come
// from our own normalization algorithms, so parity (-1)^length is the sign
// character of the element they represent.
struct WeylWord {
  std::vector<int> letters;

  size_t length() const { return letters.size(); }
  int parity() const { return letters.size() % 2 == 0 ? 1 : -1; }
};

// Result of dominant-chamber normalization.  Applying the word's reflections
// left to right to `representative` recovers the input weight.
struct DominantResult {
  Weight representative;
  int parity = 1;
  bool regular = false;
  WeylWord word;
};

// A parabolic subgroup W_J with its order and the longest element w_J as a
// reduced word.
struct Parabolic {
  std::vector<int> indices;  // J, sorted, 1-based
  Int order = 1;
  WeylWord longest_word;
};

// s_i(w) = w - w(H_{alpha_i}) * alpha_i.  i is 1-based.
Weight reflect(const RootSystem& sys, const Weight& w, int i);

// Folds reflect over the letters, left to right.
Weight apply(const RootSystem& sys, const WeylWord& word, const Weight& w);
RootCoords apply(const RootSystem& sys, const WeylWord& word, const RootCoords& a);

// The unique dominant element of W*w, with word and sign bookkeeping.
// Never fails; singular inputs simply come back with regular == false.
DominantResult to_dominant(const RootSystem& sys, const Weight& w);

// lambda* = -w0(lambda).
Weight dual(const RootSystem& sys, const Weight& w);

// W_J for J a set of 1-based simple root indices.  The order is computed by
// enumerating the W_J-orbit of rho (free since rho is regular); the longest
// word by repeatedly reflecting rho at the smallest J-index with positive
// coordinate until all J-coordinates are negative.
Parabolic parabolic(const RootSystem& sys, const std::vector<int>& J);

// w_J(rho) = rho - sum of the positive roots of Phi_J+.
Weight wJ_rho(const RootSystem& sys, const Parabolic& p);

// The positive roots supported on J.
std::vector<RootCoords> positive_roots_of_subsystem(const RootSystem& sys,
                                                    const std::vector<int>& J);

// Full Weyl orbit of w, sorted lexicographically.  Throws GuardExceeded when
// the estimated orbit size |W| / |W_J0| (J0 = stabilizer indices of the
// dominant representative) exceeds the limit.
std::vector<Weight> orbit(const RootSystem& sys, const Weight& w, const Limits& limits = {});

// W_J-orbit of w; same canonical ordering, guarded by limits.max_orbit.
std::vector<Weight> orbit_under(const RootSystem& sys, const Weight& w,
                                const std::vector<int>& J, const Limits& limits = {});

// |W_J| from the classification of the sub-Dynkin-diagram.  Fast path used
// for orbit-size estimates; parabolic() itself counts the rho-orbit.
Int parabolic_order_classified(const RootSystem& sys, const std::vector<int>& J);

}  // namespace rhotensor

#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>

namespace rhotensor {

// All arithmetic in the library is exact: arbitrary-precision integers and
// rationals, no floating point anywhere.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline bool is_integer(const Rat& q) { return denominator(q) == 1; }

// Exact integer value of q; throws if q is not an integer.
inline Int to_int(const Rat& q) {
  if (!is_integer(q)) throw std::invalid_argument("to_int: value " + q.str() + " is not an integer");
  return numerator(q);
}

// Largest integer <= q.
inline Int floor_int(const Rat& q) {
  Int n = numerator(q), d = denominator(q);
  Int f = n / d;
  if (n < 0 && f * d != n) --f;
  return f;
}

// "p/q" for proper fractions, plain decimal for integers.
inline std::string rat_to_string(const Rat& q) {
  if (is_integer(q)) return numerator(q).str();
  return numerator(q).str() + "/" + denominator(q).str();
}

// Size guard violations (orbit/dimension/product limits).
struct GuardExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Configurable size guards. Defaults let every rank <= 4 computation finish
// in minutes; the CLI exposes them as flags.
struct Limits {
  Int max_orbit = 10'000'000;    // Weyl orbit enumeration
  Int max_dim = 10'000'000;      // weight-system mass (= dim of the module)
  Int max_product = 1'000'000;   // character-product oracle: dim * dim
  int max_vertex_rank = 20;      // 2^r subset enumeration
  bool allow_large = false;      // opt-in for types with |Phi+| > 16 (F4)

  // allow_large lifts the dimension ceiling far enough for the 2^24-mass
  // weight system of F4's V(rho).
  Int effective_max_dim() const {
    if (!allow_large) return max_dim;
    Int f4 = Int(1) << 25;
    return max_dim > f4 ? max_dim : f4;
  }
};

}  // namespace rhotensor

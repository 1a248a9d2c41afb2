#pragma once

#include <initializer_list>
#include <string>
#include <vector>

#include "rhotensor/numeric.hpp"

namespace rhotensor {

// A weight in the fundamental-weight basis {omega_i}: coords[k] is the value
// of the weight on the coroot H_{alpha_{k+1}}.  Vectors are 0-indexed; simple
// root indices in the public API are 1-based throughout.
struct Weight {
  std::vector<Rat> coords;

  Weight() = default;
  explicit Weight(std::vector<Rat> c) : coords(std::move(c)) {}
  Weight(std::initializer_list<Rat> c) : coords(c) {}

  static Weight zero(int rank) { return Weight(std::vector<Rat>(rank, Rat(0))); }

  int rank() const { return static_cast<int>(coords.size()); }

  bool is_integral() const {
    for (const Rat& c : coords)
      if (!is_integer(c)) return false;
    return true;
  }
  bool is_dominant() const {
    for (const Rat& c : coords)
      if (c < 0) return false;
    return true;
  }
  bool is_regular_dominant() const {
    for (const Rat& c : coords)
      if (c <= 0) return false;
    return true;
  }
  bool is_zero() const {
    for (const Rat& c : coords)
      if (c != 0) return false;
    return true;
  }

  friend bool operator==(const Weight& a, const Weight& b) { return a.coords == b.coords; }
  friend bool operator!=(const Weight& a, const Weight& b) { return !(a == b); }
  friend bool operator<(const Weight& a, const Weight& b) {
    return std::lexicographical_compare(a.coords.begin(), a.coords.end(), b.coords.begin(),
                                        b.coords.end());
  }

  friend Weight operator+(const Weight& a, const Weight& b) {
    Weight r = a;
    for (int k = 0; k < r.rank(); ++k) r.coords[k] += b.coords[k];
    return r;
  }
  friend Weight operator-(const Weight& a, const Weight& b) {
    Weight r = a;
    for (int k = 0; k < r.rank(); ++k) r.coords[k] -= b.coords[k];
    return r;
  }
  friend Weight operator-(const Weight& a) {
    Weight r = a;
    for (Rat& c : r.coords) c = -c;
    return r;
  }
  friend Weight operator*(const Rat& s, const Weight& a) {
    Weight r = a;
    for (Rat& c : r.coords) c *= s;
    return r;
  }
};

// The same vector space in the simple-root basis {alpha_i}.  Kept as a
// distinct type so the two coordinate systems cannot be mixed up silently.
struct RootCoords {
  std::vector<Rat> coords;

  RootCoords() = default;
  explicit RootCoords(std::vector<Rat> c) : coords(std::move(c)) {}
  RootCoords(std::initializer_list<Rat> c) : coords(c) {}

  int rank() const { return static_cast<int>(coords.size()); }

  bool is_integral() const {
    for (const Rat& c : coords)
      if (!is_integer(c)) return false;
    return true;
  }
  // Lies in the nonnegative span of the simple roots.
  bool is_nonnegative() const {
    for (const Rat& c : coords)
      if (c < 0) return false;
    return true;
  }
  // Height: sum of simple-root coefficients.
  Rat height() const {
    Rat h = 0;
    for (const Rat& c : coords) h += c;
    return h;
  }

  friend bool operator==(const RootCoords& a, const RootCoords& b) { return a.coords == b.coords; }
  friend bool operator!=(const RootCoords& a, const RootCoords& b) { return !(a == b); }
  friend bool operator<(const RootCoords& a, const RootCoords& b) {
    return std::lexicographical_compare(a.coords.begin(), a.coords.end(), b.coords.begin(),
                                        b.coords.end());
  }
};

inline std::string to_string(const Weight& w) {
  std::string s = "(";
  for (int k = 0; k < w.rank(); ++k) {
    if (k) s += ",";
    s += rat_to_string(w.coords[k]);
  }
  return s + ")";
}

inline std::string to_string(const RootCoords& a) {
  std::string s = "[";
  for (int k = 0; k < a.rank(); ++k) {
    if (k) s += ",";
    s += rat_to_string(a.coords[k]);
  }
  return s + "]";
}

}  // namespace rhotensor

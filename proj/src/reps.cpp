#include "rhotensor/reps.hpp"

#include <algorithm>
#include <functional>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace rhotensor {

namespace {

void require_dominant_integral(const Weight& w, const char* what) {
  if (!w.is_integral() || !w.is_dominant()) {
    throw std::invalid_argument(std::string(what) + " must be dominant integral, got " +
                                to_string(w));
  }
}

// Height-then-lex order on the gap vectors used for reporting enumerations.
bool gap_before(const std::vector<Int>& a, const std::vector<Int>& b) {
  Int ha = 0, hb = 0;
  for (const Int& v : a) ha += v;
  for (const Int& v : b) hb += v;
  if (ha != hb) return ha < hb;
  return a < b;
}

}  // namespace

std::vector<Weight> dominant_weights_below(const RootSystem& sys, const Weight& lambda,
                                           const Limits& limits) {
  require_dominant_integral(lambda, "lambda");
  const int r = sys.rank();

  RootCoords top = weight_to_root_coords(sys, lambda);
  std::vector<Int> bound(r);
  Int box = 1;
  for (int i = 0; i < r; ++i) {
    bound[i] = floor_int(top.coords[i]);
    if (bound[i] < 0) bound[i] = 0;
    box *= bound[i] + 1;
  }
  if (box > limits.effective_max_dim()) {
    std::ostringstream os;
    os << "dominant_weights_below: enumeration box " << box << " exceeds limit "
       << limits.effective_max_dim();
    throw GuardExceeded(os.str());
  }

  std::vector<std::pair<std::vector<Int>, Weight>> found;
  std::vector<Int> gap(r, 0);
  // Depth-first over gap vectors; partial[i] holds lambda minus the chosen
  // multiples of alpha_1..alpha_i in fundamental coordinates.
  std::vector<Weight> partial(static_cast<std::size_t>(r) + 1, lambda);
  std::function<void(int)> rec = [&](int i) {
    if (i == r) {
      if (partial[r].is_dominant()) found.emplace_back(gap, partial[r]);
      return;
    }
    partial[i + 1] = partial[i];
    for (Int a = 0; a <= bound[i]; ++a) {
      gap[i] = a;
      if (a > 0) partial[i + 1] = partial[i + 1] - sys.simple_roots[i];
      rec(i + 1);
    }
    gap[i] = 0;
  };
  rec(0);

  std::sort(found.begin(), found.end(),
            [](const auto& x, const auto& y) { return gap_before(x.first, y.first); });
  std::vector<Weight> out;
  out.reserve(found.size());
  for (auto& [g, w] : found) out.push_back(std::move(w));
  return out;
}

FreudenthalTable::FreudenthalTable(const RootSystem& sys, Weight lambda)
    : sys_(sys), lambda_(std::move(lambda)) {
  require_dominant_integral(lambda_, "lambda");
  lambda_root_coords_ = weight_to_root_coords(sys_, lambda_);
  Weight shifted = lambda_ + sys_.rho_weight;
  lambda_rho_norm_ = bilinear(sys_, shifted, shifted);
  memo_[lambda_] = 1;
}

Int FreudenthalTable::multiplicity(const Weight& mu) const {
  if (mu.rank() != sys_.rank()) {
    throw std::invalid_argument("multiplicity: rank mismatch");
  }
  if (!mu.is_integral()) return 0;
  return dominant_multiplicity(to_dominant(sys_, mu).representative);
}

Int FreudenthalTable::dominant_multiplicity(const Weight& nu) const {
  auto it = memo_.find(nu);
  if (it != memo_.end()) return it->second;

  const int r = sys_.rank();
  RootCoords nu_rc = weight_to_root_coords(sys_, nu);
  std::vector<Rat> gap(r);
  bool inside = true;
  for (int i = 0; i < r; ++i) {
    gap[i] = lambda_root_coords_.coords[i] - nu_rc.coords[i];
    if (gap[i] < 0 || !is_integer(gap[i])) inside = false;
  }
  if (!inside) {
    memo_[nu] = 0;
    return 0;
  }

  Weight nu_rho = nu + sys_.rho_weight;
  Rat denom = lambda_rho_norm_ - bilinear(sys_, nu_rho, nu_rho);
  if (denom == 0) {
    // Only lambda itself sits on the shifted sphere inside the cone below
    // lambda, and lambda is seeded in the memo.
    throw std::logic_error("freudenthal: zero denominator below lambda");
  }

  Rat numer = 0;
  for (const RootCoords& alpha : sys_.positive_roots) {
    Weight alpha_w = root_to_weight_coords(sys_, alpha);
    Rat alpha_norm = bilinear_root(sys_, alpha_w, alpha);
    Rat base = bilinear_root(sys_, nu, alpha);
    std::vector<Rat> g = gap;
    Weight up = nu;
    for (Int k = 1;; ++k) {
      bool ok = true;
      for (int i = 0; i < r; ++i) {
        g[i] -= alpha.coords[i];
        if (g[i] < 0) ok = false;
      }
      if (!ok) break;
      up = up + alpha_w;
      Int m = dominant_multiplicity(to_dominant(sys_, up).representative);
      if (m != 0) numer += (base + Rat(k) * alpha_norm) * Rat(m);
    }
  }

  Rat value = 2 * numer / denom;
  if (!is_integer(value) || value < 0) {
    throw std::logic_error("freudenthal: non-integral multiplicity at " + to_string(nu));
  }
  Int result = to_int(value);
  memo_[nu] = result;
  return result;
}

Int freudenthal_multiplicity(const RootSystem& sys, const Weight& lambda, const Weight& mu) {
  return FreudenthalTable(sys, lambda).multiplicity(mu);
}

Int rho_multiplicity_oracle(const RootSystem& sys, const Weight& beta) {
  if (sys.positive_roots.size() > 24) {
    std::ostringstream os;
    os << "rho_multiplicity_oracle: " << sys.positive_roots.size()
       << " positive roots exceeds subset-sum limit 24";
    throw GuardExceeded(os.str());
  }
  const int r = sys.rank();
  RootCoords gap_rc = weight_to_root_coords(sys, sys.rho_weight - beta);
  std::vector<Int> target(r);
  for (int i = 0; i < r; ++i) {
    if (!is_integer(gap_rc.coords[i]) || gap_rc.coords[i] < 0) return 0;
    target[i] = to_int(gap_rc.coords[i]);
  }

  // Subset-sum DP over positive roots; partial sums are pruned against the
  // target componentwise, which keeps the table inside the gap box.
  std::map<std::vector<Int>, Int> counts;
  counts[std::vector<Int>(r, 0)] = 1;
  for (const RootCoords& alpha : sys.positive_roots) {
    std::vector<Int> a(r);
    for (int i = 0; i < r; ++i) a[i] = to_int(alpha.coords[i]);
    std::map<std::vector<Int>, Int> next = counts;
    for (const auto& [sum, c] : counts) {
      std::vector<Int> s = sum;
      bool ok = true;
      for (int i = 0; i < r; ++i) {
        s[i] += a[i];
        if (s[i] > target[i]) ok = false;
      }
      if (ok) next[s] += c;
    }
    counts = std::move(next);
  }
  auto it = counts.find(target);
  return it == counts.end() ? Int(0) : it->second;
}

Int dim(const RootSystem& sys, const Weight& lambda) {
  require_dominant_integral(lambda, "lambda");
  Weight shifted = lambda + sys.rho_weight;
  Rat product = 1;
  for (const RootCoords& alpha : sys.positive_roots) {
    product *= bilinear_root(sys, shifted, alpha) / bilinear_root(sys, sys.rho_weight, alpha);
  }
  if (!is_integer(product)) throw std::logic_error("dim: non-integral Weyl quotient");
  return to_int(product);
}

WeightMultiset weight_system(const RootSystem& sys, const Weight& lambda, const Limits& limits) {
  require_dominant_integral(lambda, "lambda");
  Int d = dim(sys, lambda);
  if (d > limits.effective_max_dim()) {
    std::ostringstream os;
    os << "weight_system: dim " << d << " exceeds limit " << limits.effective_max_dim();
    throw GuardExceeded(os.str());
  }

  FreudenthalTable table(sys, lambda);
  WeightMultiset out;
  Int mass = 0;
  for (const Weight& nu : dominant_weights_below(sys, lambda, limits)) {
    Int m = table.multiplicity(nu);
    if (m == 0) throw std::logic_error("weight_system: dominant weight below lambda with mult 0");
    for (const Weight& u : orbit(sys, nu, limits)) {
      out[u] = m;
      mass += m;
    }
  }
  if (mass != d) throw std::logic_error("weight_system: total mass differs from dim");
  return out;
}

Decomposition tensor_decompose(const RootSystem& sys, const Weight& lambda, const Weight& mu,
                               const Limits& limits) {
  require_dominant_integral(lambda, "lambda");
  require_dominant_integral(mu, "mu");
  Weight small = lambda, big = mu;
  Int dim_small = dim(sys, small), dim_big = dim(sys, big);
  if (dim_small > dim_big) {
    std::swap(small, big);
    std::swap(dim_small, dim_big);
  }
  if (dim_small > limits.effective_max_dim()) {
    std::ostringstream os;
    os << "tensor_decompose: smaller factor dim " << dim_small << " exceeds limit "
       << limits.effective_max_dim();
    throw GuardExceeded(os.str());
  }

  FreudenthalTable table(sys, small);
  Weight shift = big + sys.rho_weight;
  std::map<Weight, Int> bucket;
  for (const Weight& nu : dominant_weights_below(sys, small, limits)) {
    Int m = table.multiplicity(nu);
    for (const Weight& beta : orbit(sys, nu, limits)) {
      DominantResult dr = to_dominant(sys, beta + shift);
      if (!dr.regular) continue;
      bucket[dr.representative - sys.rho_weight] += Int(dr.parity) * m;
    }
  }

  Decomposition out;
  Int mass = 0;
  for (auto& [nu, c] : bucket) {
    if (c < 0) {
      throw std::logic_error("tensor_decompose: negative multiplicity at " + to_string(nu));
    }
    if (c == 0) continue;
    if (!nu.is_dominant() || !nu.is_integral()) {
      throw std::logic_error("tensor_decompose: non-dominant summand " + to_string(nu));
    }
    out.emplace(nu, c);
    mass += c * dim(sys, nu);
  }
  if (mass != dim_small * dim_big) {
    throw std::logic_error("tensor_decompose: dimensions of summands do not add up");
  }
  return out;
}

Int tensor_multiplicity(const RootSystem& sys, const Weight& lambda, const Weight& mu,
                        const Weight& nu, const Limits& limits) {
  require_dominant_integral(lambda, "lambda");
  require_dominant_integral(mu, "mu");
  if (!nu.is_integral() || !nu.is_dominant()) return 0;

  Weight small = lambda, big = mu;
  if (dim(sys, small) > dim(sys, big)) std::swap(small, big);
  Int dim_small = dim(sys, small);
  if (dim_small > limits.effective_max_dim()) {
    std::ostringstream os;
    os << "tensor_multiplicity: smaller factor dim " << dim_small << " exceeds limit "
       << limits.effective_max_dim();
    throw GuardExceeded(os.str());
  }

  FreudenthalTable table(sys, small);
  Weight target = nu + sys.rho_weight;
  Weight shift = big + sys.rho_weight;
  Int total = 0;
  for (const Weight& dom : dominant_weights_below(sys, small, limits)) {
    Int m = table.multiplicity(dom);
    for (const Weight& beta : orbit(sys, dom, limits)) {
      DominantResult dr = to_dominant(sys, beta + shift);
      if (!dr.regular || dr.representative != target) continue;
      total += Int(dr.parity) * m;
    }
  }
  if (total < 0) throw std::logic_error("tensor_multiplicity: negative coefficient");
  return total;
}

Decomposition character_product_oracle(const RootSystem& sys, const Weight& lambda,
                                       const Weight& mu, const Limits& limits) {
  Int da = dim(sys, lambda), db = dim(sys, mu);
  if (da * db > limits.max_product) {
    std::ostringstream os;
    os << "character_product_oracle: product dim " << (da * db) << " exceeds limit "
       << limits.max_product;
    throw GuardExceeded(os.str());
  }

  WeightMultiset a = weight_system(sys, lambda, limits);
  WeightMultiset b = weight_system(sys, mu, limits);
  WeightMultiset product;
  for (const auto& [wa, ma] : a) {
    for (const auto& [wb, mb] : b) {
      product[wa + wb] += ma * mb;
    }
  }

  Decomposition out;
  while (!product.empty()) {
    // Pick the maximal-height remaining weight; it must be a highest weight.
    auto best = product.begin();
    Rat best_h = weight_to_root_coords(sys, best->first).height();
    for (auto it = std::next(product.begin()); it != product.end(); ++it) {
      Rat h = weight_to_root_coords(sys, it->first).height();
      if (h > best_h) {
        best = it;
        best_h = h;
      }
    }
    Weight top = best->first;
    Int c = best->second;
    if (!top.is_dominant() || c <= 0) {
      throw std::logic_error("character_product_oracle: residual character is not a sum of "
                             "irreducible characters");
    }
    out.emplace(top, c);
    for (const auto& [w, m] : weight_system(sys, top, limits)) {
      auto it = product.find(w);
      if (it == product.end()) {
        throw std::logic_error("character_product_oracle: stripping produced a negative entry");
      }
      it->second -= c * m;
      if (it->second == 0) {
        product.erase(it);
      } else if (it->second < 0) {
        throw std::logic_error("character_product_oracle: stripping produced a negative entry");
      }
    }
  }
  return out;
}

}  // namespace rhotensor

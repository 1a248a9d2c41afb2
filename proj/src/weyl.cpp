#include "rhotensor/weyl.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace rhotensor {

Weight reflect(const RootSystem& sys, const Weight& w, int i) {
  if (i < 1 || i > sys.rank())
    throw std::invalid_argument("reflect: index " + std::to_string(i) + " out of range 1.." +
                                std::to_string(sys.rank()));
  const Rat c = w.coords[i - 1];
  if (c == 0) return w;
  Weight r = w;
  const Weight& alpha = sys.simple_roots[i - 1];
  for (int k = 0; k < sys.rank(); ++k)
    if (alpha.coords[k] != 0) r.coords[k] -= c * alpha.coords[k];
  return r;
}

Weight apply(const RootSystem& sys, const WeylWord& word, const Weight& w) {
  Weight v = w;
  for (int i : word.letters) v = reflect(sys, v, i);
  return v;
}

RootCoords apply(const RootSystem& sys, const WeylWord& word, const RootCoords& a) {
  return weight_to_root_coords(sys, apply(sys, word, root_to_weight_coords(sys, a)));
}

DominantResult to_dominant(const RootSystem& sys, const Weight& w) {
  DominantResult res;
  Weight v = w;
  std::vector<int> applied;
  for (;;) {
    int i = 0;
    for (int k = 0; k < sys.rank(); ++k)
      if (v.coords[k] < 0) { i = k + 1; break; }
    if (i == 0) break;
    v = reflect(sys, v, i);
    applied.push_back(i);
  }
  res.parity = applied.size() % 2 == 0 ? 1 : -1;
  res.regular = v.is_regular_dominant();
  std::reverse(applied.begin(), applied.end());
  res.word.letters = std::move(applied);
  res.representative = std::move(v);
  return res;
}

Weight dual(const RootSystem& sys, const Weight& w) {
  std::vector<int> all(sys.rank());
  for (int i = 0; i < sys.rank(); ++i) all[i] = i + 1;
  Parabolic full = parabolic(sys, all);
  return -apply(sys, full.longest_word, w);
}

std::vector<RootCoords> positive_roots_of_subsystem(const RootSystem& sys,
                                                    const std::vector<int>& J) {
  std::vector<bool> in_J(sys.rank() + 1, false);
  for (int i : J) {
    if (i < 1 || i > sys.rank())
      throw std::invalid_argument("subset index " + std::to_string(i) + " out of range");
    in_J[i] = true;
  }
  std::vector<RootCoords> out;
  for (const RootCoords& a : sys.positive_roots) {
    bool supported = true;
    for (int k = 0; k < sys.rank(); ++k)
      if (a.coords[k] != 0 && !in_J[k + 1]) { supported = false; break; }
    if (supported) out.push_back(a);
  }
  return out;
}

std::vector<Weight> orbit_under(const RootSystem& sys, const Weight& w,
                                const std::vector<int>& J, const Limits& limits) {
  std::set<Weight> seen{w};
  std::vector<Weight> stack{w};
  while (!stack.empty()) {
    Weight v = std::move(stack.back());
    stack.pop_back();
    for (int i : J) {
      Weight u = reflect(sys, v, i);
      if (seen.insert(u).second) {
        if (Int(seen.size()) > limits.max_orbit)
          throw GuardExceeded("orbit size exceeds limit " + limits.max_orbit.str());
        stack.push_back(std::move(u));
      }
    }
  }
  return {seen.begin(), seen.end()};
}

std::vector<Weight> orbit(const RootSystem& sys, const Weight& w, const Limits& limits) {
  // Estimate |W*w| = |W| / |W_J0| before enumerating anything large.
  DominantResult dom = to_dominant(sys, w);
  std::vector<int> stabilizer;
  for (int k = 0; k < sys.rank(); ++k)
    if (dom.representative.coords[k] == 0) stabilizer.push_back(k + 1);
  Int estimate = weyl_order(sys.type) / parabolic_order_classified(sys, stabilizer);
  if (estimate > limits.max_orbit)
    throw GuardExceeded("estimated orbit size " + estimate.str() + " exceeds limit " +
                        limits.max_orbit.str());
  std::vector<int> all(sys.rank());
  for (int i = 0; i < sys.rank(); ++i) all[i] = i + 1;
  std::vector<Weight> res = orbit_under(sys, w, all, limits);
  if (Int(res.size()) != estimate)
    throw std::logic_error("orbit size " + std::to_string(res.size()) +
                           " does not match stabilizer-index estimate " + estimate.str());
  return res;
}

Parabolic parabolic(const RootSystem& sys, const std::vector<int>& J) {
  Parabolic p;
  p.indices = J;
  std::sort(p.indices.begin(), p.indices.end());
  p.indices.erase(std::unique(p.indices.begin(), p.indices.end()), p.indices.end());
  for (int i : p.indices)
    if (i < 1 || i > sys.rank())
      throw std::invalid_argument("subset index " + std::to_string(i) + " out of range");
  if (p.indices.empty()) {
    p.order = 1;
    return p;
  }
  // rho is J-regular, so the W_J-orbit of rho is free.
  p.order = Int(orbit_under(sys, sys.rho_weight, p.indices).size());
  // Descent walk from rho to w_J(rho); records a reduced word for w_J.
  Weight v = sys.rho_weight;
  for (;;) {
    int pick = 0;
    for (int i : p.indices)
      if (v.coords[i - 1] > 0) { pick = i; break; }
    if (pick == 0) break;
    v = reflect(sys, v, pick);
    p.longest_word.letters.push_back(pick);
  }
  return p;
}

Weight wJ_rho(const RootSystem& sys, const Parabolic& p) {
  Weight sum = Weight::zero(sys.rank());
  for (const RootCoords& a : positive_roots_of_subsystem(sys, p.indices))
    sum = sum + root_to_weight_coords(sys, a);
  return sys.rho_weight - sum;
}

namespace {

Int factorial(int n) {
  Int f = 1;
  for (int k = 2; k <= n; ++k) f *= k;
  return f;
}

// Order of the Weyl group of one connected sub-Dynkin-diagram, by shape.
Int component_order(const RootSystem& sys, const std::vector<int>& comp) {
  const int n = static_cast<int>(comp.size());
  if (n == 1) return 2;
  auto entry = [&](int i, int j) { return sys.cartan[comp[i] - 1][comp[j] - 1]; };
  std::vector<std::vector<int>> adj(n);
  int double_a = -1, double_b = -1;
  bool triple = false;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      Int m = entry(i, j) * entry(j, i);
      if (m == 0) continue;
      adj[i].push_back(j);
      adj[j].push_back(i);
      if (m == 2) { double_a = i; double_b = j; }
      if (m == 3) triple = true;
    }
  }
  if (triple) return 12;  // G2
  if (double_a >= 0) {
    if (n == 2) return 8;  // B2/C2
    bool at_leaf = adj[double_a].size() == 1 || adj[double_b].size() == 1;
    if (at_leaf) return factorial(n) * (Int(1) << n);  // B_n / C_n
    if (n == 4) return 1152;                           // F4
    throw std::logic_error("unrecognized sub-diagram with interior double edge");
  }
  // Simply laced: A, D, or E by branch structure.
  int branch = -1;
  for (int i = 0; i < n; ++i) {
    if (adj[i].size() > 3) throw std::logic_error("sub-diagram node of degree > 3");
    if (adj[i].size() == 3) {
      if (branch >= 0) throw std::logic_error("sub-diagram with two branch nodes");
      branch = i;
    }
  }
  if (branch < 0) return factorial(n + 1);  // A_n
  std::vector<int> arms;
  for (int next : adj[branch]) {
    int len = 1, prev = branch, cur = next;
    for (;;) {
      int cont = -1;
      for (int nb : adj[cur])
        if (nb != prev) { cont = nb; break; }
      if (cont < 0) break;
      prev = cur;
      cur = cont;
      ++len;
    }
    arms.push_back(len);
  }
  std::sort(arms.begin(), arms.end());
  if (arms[0] == 1 && arms[1] == 1) return factorial(n) * (Int(1) << (n - 1));  // D_n
  if (arms[0] == 1 && arms[1] == 2 && arms[2] >= 2 && arms[2] <= 4) {
    if (arms[2] == 2) return 51840;      // E6
    if (arms[2] == 3) return 2903040;    // E7
    return 696729600;                    // E8
  }
  throw std::logic_error("unrecognized simply-laced sub-diagram");
}

}  // namespace

Int parabolic_order_classified(const RootSystem& sys, const std::vector<int>& J) {
  std::vector<int> idx = J;
  std::sort(idx.begin(), idx.end());
  idx.erase(std::unique(idx.begin(), idx.end()), idx.end());
  for (int i : idx)
    if (i < 1 || i > sys.rank())
      throw std::invalid_argument("subset index " + std::to_string(i) + " out of range");
  std::vector<bool> used(idx.size(), false);
  Int order = 1;
  for (size_t s = 0; s < idx.size(); ++s) {
    if (used[s]) continue;
    // Connected component of idx[s] in the induced sub-diagram.
    std::vector<int> comp;
    std::vector<size_t> stack{s};
    used[s] = true;
    while (!stack.empty()) {
      size_t cur = stack.back();
      stack.pop_back();
      comp.push_back(idx[cur]);
      for (size_t t = 0; t < idx.size(); ++t)
        if (!used[t] && sys.cartan[idx[cur] - 1][idx[t] - 1] != 0) {
          used[t] = true;
          stack.push_back(t);
        }
    }
    order *= component_order(sys, comp);
  }
  return order;
}

}  // namespace rhotensor

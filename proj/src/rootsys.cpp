#include "rhotensor/rootsys.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <set>
#include <stdexcept>

namespace rhotensor {

bool is_admissible(const LieType& t) {
  switch (t.series) {
    case 'A': return t.rank >= 1;
    case 'B': return t.rank >= 2;
    case 'C': return t.rank >= 2;
    case 'D': return t.rank >= 4;
    case 'E': return t.rank >= 6 && t.rank <= 8;
    case 'F': return t.rank == 4;
    case 'G': return t.rank == 2;
    default: return false;
  }
}

LieType parse_lie_type(const std::string& s) {
  // ^[A-G][1-9][0-9]*$
  if (s.size() < 2 || s[0] < 'A' || s[0] > 'G' || s[1] < '1' || s[1] > '9')
    throw std::invalid_argument("bad Lie type '" + s + "': expected a series letter A-G followed by a rank, e.g. B2");
  for (size_t k = 2; k < s.size(); ++k)
    if (!std::isdigit(static_cast<unsigned char>(s[k])))
      throw std::invalid_argument("bad Lie type '" + s + "': rank is not a number");
  LieType t;
  t.series = s[0];
  t.rank = std::stoi(s.substr(1));
  if (!is_admissible(t))
    throw std::invalid_argument("inadmissible type " + t.name() +
                                ": ranks are A>=1, B>=2, C>=2, D>=4, E 6-8, F 4, G 2");
  return t;
}

Int positive_root_count(const LieType& t) {
  const Int r = t.rank;
  switch (t.series) {
    case 'A': return r * (r + 1) / 2;
    case 'B':
    case 'C': return r * r;
    case 'D': return r * (r - 1);
    case 'E': return t.rank == 6 ? 36 : (t.rank == 7 ? 63 : 120);
    case 'F': return 24;
    case 'G': return 6;
  }
  throw std::invalid_argument("unknown series");
}

Int weyl_order(const LieType& t) {
  Int fact = 1;
  for (int k = 2; k <= t.rank; ++k) fact *= k;
  switch (t.series) {
    case 'A': return fact * (t.rank + 1);
    case 'B':
    case 'C': return fact * (Int(1) << t.rank);
    case 'D': return fact * (Int(1) << (t.rank - 1));
    case 'E': return t.rank == 6 ? 51840 : (t.rank == 7 ? 2903040 : 696729600);
    case 'F': return 1152;
    case 'G': return 12;
  }
  throw std::invalid_argument("unknown series");
}

namespace {

// cartan[i][j] = alpha_j(H_{alpha_i}) in Bourbaki numbering.
std::vector<std::vector<Int>> cartan_matrix(const LieType& t) {
  const int r = t.rank;
  std::vector<std::vector<Int>> a(r, std::vector<Int>(r, 0));
  for (int i = 0; i < r; ++i) a[i][i] = 2;
  auto link = [&](int i, int j) { a[i][j] = -1; a[j][i] = -1; };  // 0-based

  switch (t.series) {
    case 'A':
      for (int i = 0; i + 1 < r; ++i) link(i, i + 1);
      break;
    case 'B':  // alpha_r short: alpha_r(H_{alpha_{r-1}}) = -1, alpha_{r-1}(H_{alpha_r}) = -2
      for (int i = 0; i + 1 < r; ++i) link(i, i + 1);
      a[r - 1][r - 2] = -2;
      a[r - 2][r - 1] = -1;
      break;
    case 'C':  // alpha_r long
      for (int i = 0; i + 1 < r; ++i) link(i, i + 1);
      a[r - 1][r - 2] = -1;
      a[r - 2][r - 1] = -2;
      break;
    case 'D':
      for (int i = 0; i + 2 < r; ++i) link(i, i + 1);
      link(r - 3, r - 1);
      break;
    case 'E':
      // Chain 1-3-4-5-...-r with node 2 attached to node 4.
      link(0, 2);
      for (int i = 2; i + 1 < r; ++i) link(i, i + 1);
      link(1, 3);
      break;
    case 'F':  // alpha_1, alpha_2 long; alpha_3, alpha_4 short
      link(0, 1);
      link(2, 3);
      a[2][1] = -2;
      a[1][2] = -1;
      break;
    case 'G':  // alpha_1 short, alpha_2 long
      a[0][1] = -3;
      a[1][0] = -1;
      break;
  }
  return a;
}

std::vector<std::vector<Rat>> invert_exact(const std::vector<std::vector<Int>>& a) {
  const int n = static_cast<int>(a.size());
  std::vector<std::vector<Rat>> m(n, std::vector<Rat>(2 * n, Rat(0)));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) m[i][j] = Rat(a[i][j]);
    m[i][n + i] = 1;
  }
  for (int col = 0; col < n; ++col) {
    int piv = -1;
    for (int row = col; row < n; ++row)
      if (m[row][col] != 0) { piv = row; break; }
    if (piv < 0) throw std::logic_error("Cartan matrix is singular");
    std::swap(m[col], m[piv]);
    Rat d = m[col][col];
    for (int j = 0; j < 2 * n; ++j) m[col][j] /= d;
    for (int row = 0; row < n; ++row) {
      if (row == col || m[row][col] == 0) continue;
      Rat f = m[row][col];
      for (int j = 0; j < 2 * n; ++j) m[row][j] -= f * m[col][j];
    }
  }
  std::vector<std::vector<Rat>> inv(n, std::vector<Rat>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) inv[i][j] = m[i][n + j];
  return inv;
}

// Closure of the simple roots under root strings, processed by height.
// For a positive root b and simple root a_i, let p be the length of the
// descending string b, b-a_i, ..., b-p*a_i inside Phi+; then b+a_i is a root
// iff p - b(H_{alpha_i}) >= 1.
std::vector<RootCoords> generate_positive_roots(const std::vector<std::vector<Int>>& cartan) {
  const int r = static_cast<int>(cartan.size());
  using IVec = std::vector<Int>;
  std::set<IVec> found;
  std::vector<IVec> layer;
  for (int i = 0; i < r; ++i) {
    IVec e(r, 0);
    e[i] = 1;
    found.insert(e);
    layer.push_back(e);
  }
  while (!layer.empty()) {
    std::vector<IVec> next;
    for (const IVec& b : layer) {
      for (int i = 0; i < r; ++i) {
        IVec up = b;
        up[i] += 1;
        if (found.count(up)) continue;
        // pairing = b(H_{alpha_i}) = (cartan * b)[i]
        Int pairing = 0;
        for (int j = 0; j < r; ++j) pairing += cartan[i][j] * b[j];
        Int p = 0;
        IVec down = b;
        while (true) {
          down[i] -= 1;
          if (down[i] < 0 || !found.count(down)) break;
          ++p;
        }
        if (p - pairing >= 1) {
          found.insert(up);
          next.push_back(up);
        }
      }
    }
    layer = std::move(next);
  }
  std::vector<RootCoords> roots;
  roots.reserve(found.size());
  for (const IVec& v : found) {
    std::vector<Rat> c(r);
    for (int k = 0; k < r; ++k) c[k] = Rat(v[k]);
    roots.push_back(RootCoords(std::move(c)));
  }
  // Sort by height, then lexicographically: simple roots first, highest root last.
  std::sort(roots.begin(), roots.end(), [](const RootCoords& x, const RootCoords& y) {
    Rat hx = x.height(), hy = y.height();
    if (hx != hy) return hx < hy;
    return x < y;
  });
  return roots;
}

// Solve d_i * A[i][j] = d_j * A[j][i] along the Dynkin graph and normalize
// so that max d_i = 1 (long roots get squared norm 2).
std::vector<Rat> compute_symmetrizer(const std::vector<std::vector<Int>>& cartan) {
  const int r = static_cast<int>(cartan.size());
  std::vector<Rat> d(r, Rat(0));
  d[0] = 1;
  std::vector<int> stack{0};
  while (!stack.empty()) {
    int i = stack.back();
    stack.pop_back();
    for (int j = 0; j < r; ++j) {
      if (j == i || cartan[i][j] == 0 || d[j] != 0) continue;
      d[j] = d[i] * Rat(cartan[i][j]) / Rat(cartan[j][i]);
      stack.push_back(j);
    }
  }
  Rat dmax = d[0];
  for (const Rat& x : d) {
    if (x == 0) throw std::logic_error("Dynkin diagram is not connected");
    if (x > dmax) dmax = x;
  }
  for (Rat& x : d) x /= dmax;
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j)
      if (d[i] * Rat(cartan[i][j]) != d[j] * Rat(cartan[j][i]))
        throw std::logic_error("symmetrizer does not symmetrize the Cartan matrix");
  return d;
}

}  // namespace

RootSystem build(const LieType& type) {
  if (!is_admissible(type))
    throw std::invalid_argument("inadmissible type " + type.name() +
                                ": ranks are A>=1, B>=2, C>=2, D>=4, E 6-8, F 4, G 2");
  RootSystem sys;
  sys.type = type;
  const int r = type.rank;
  sys.cartan = cartan_matrix(type);
  sys.cartan_inverse = invert_exact(sys.cartan);
  sys.positive_roots = generate_positive_roots(sys.cartan);
  sys.symmetrizer = compute_symmetrizer(sys.cartan);

  if (Int(sys.positive_roots.size()) != positive_root_count(type))
    throw std::logic_error("positive root closure produced " +
                           std::to_string(sys.positive_roots.size()) + " roots for " + type.name());
  // cartan * cartan_inverse = identity, exactly.
  for (int i = 0; i < r; ++i) {
    for (int j = 0; j < r; ++j) {
      Rat s = 0;
      for (int k = 0; k < r; ++k) s += Rat(sys.cartan[i][k]) * sys.cartan_inverse[k][j];
      if (s != Rat(i == j ? 1 : 0)) throw std::logic_error("Cartan inverse is not exact");
      if (sys.cartan_inverse[i][j] <= 0)
        throw std::logic_error("Cartan inverse has a nonpositive entry");
    }
  }

  sys.rho_weight = Weight(std::vector<Rat>(r, Rat(1)));
  sys.simple_roots.reserve(r);
  for (int j = 0; j < r; ++j) {
    std::vector<Rat> col(r);
    for (int i = 0; i < r; ++i) col[i] = Rat(sys.cartan[i][j]);
    sys.simple_roots.push_back(Weight(std::move(col)));
  }
  // (omega_i, omega_j) = d_j * Cinv[j][i]
  sys.gram.assign(r, std::vector<Rat>(r));
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j) sys.gram[i][j] = sys.symmetrizer[j] * sys.cartan_inverse[j][i];
  return sys;
}

RootSystem build(const std::string& type_name) { return build(parse_lie_type(type_name)); }

Weight rho(const RootSystem& sys) { return sys.rho_weight; }

RootCoords weight_to_root_coords(const RootSystem& sys, const Weight& w) {
  const int r = sys.rank();
  std::vector<Rat> a(r, Rat(0));
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j) a[i] += sys.cartan_inverse[i][j] * w.coords[j];
  return RootCoords(std::move(a));
}

Weight root_to_weight_coords(const RootSystem& sys, const RootCoords& a) {
  const int r = sys.rank();
  std::vector<Rat> w(r, Rat(0));
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j) w[i] += Rat(sys.cartan[i][j]) * a.coords[j];
  return Weight(std::move(w));
}

Rat bilinear(const RootSystem& sys, const Weight& x, const Weight& y) {
  const int r = sys.rank();
  Rat s = 0;
  for (int i = 0; i < r; ++i) {
    if (x.coords[i] == 0) continue;
    for (int j = 0; j < r; ++j) s += x.coords[i] * sys.gram[i][j] * y.coords[j];
  }
  return s;
}

Rat bilinear_root(const RootSystem& sys, const Weight& x, const RootCoords& beta) {
  // (x, sum c_k alpha_k) = sum c_k d_k x[k] since (x, alpha_k) = d_k * x(H_{alpha_k}).
  Rat s = 0;
  for (int k = 0; k < sys.rank(); ++k)
    if (beta.coords[k] != 0) s += beta.coords[k] * sys.symmetrizer[k] * x.coords[k];
  return s;
}

bool in_root_lattice(const RootSystem& sys, const Weight& w) {
  return weight_to_root_coords(sys, w).is_integral();
}

}  // namespace rhotensor

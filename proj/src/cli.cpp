#include "rhotensor/cli.hpp"

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <limits>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "rhotensor/kostant.hpp"

namespace rhotensor::cli {

namespace {

using ordered_json = nlohmann::ordered_json;

struct Check {
  std::string name;
  bool pass = false;
  std::string detail;
};

ordered_json int_json(const Int& v) {
  static const Int kMin = std::numeric_limits<long long>::min();
  static const Int kMax = std::numeric_limits<long long>::max();
  if (v >= kMin && v <= kMax) return v.convert_to<long long>();
  return v.str();
}

ordered_json rat_json(const Rat& v) {
  if (is_integer(v)) return int_json(to_int(v));
  return rat_to_string(v);
}

ordered_json weight_json(const Weight& w) {
  ordered_json arr = ordered_json::array();
  for (const Rat& c : w.coords) arr.push_back(rat_json(c));
  return arr;
}

ordered_json root_json(const RootCoords& rc) {
  ordered_json arr = ordered_json::array();
  for (const Rat& c : rc.coords) arr.push_back(rat_json(c));
  return arr;
}

ordered_json subset_json(unsigned mask, int rank) {
  ordered_json arr = ordered_json::array();
  for (int i : mask_to_indices(mask, rank)) arr.push_back(i);
  return arr;
}

ordered_json checks_json(const std::vector<Check>& checks) {
  ordered_json arr = ordered_json::array();
  for (const Check& c : checks) {
    ordered_json item;
    item["name"] = c.name;
    item["pass"] = c.pass;
    item["detail"] = c.detail;
    arr.push_back(std::move(item));
  }
  return arr;
}

Weight weight_from_ints(const std::vector<long long>& values, std::size_t begin, int rank) {
  Weight w = Weight::zero(rank);
  for (int i = 0; i < rank; ++i) w.coords[i] = Rat(values[begin + i]);
  return w;
}

ordered_json cmd_roots(const RootSystem& sys, std::vector<Check>& checks) {
  const int r = sys.rank();
  const std::size_t n = sys.positive_roots.size();

  ordered_json results;
  results["rank"] = r;
  results["num_positive_roots"] = n;
  results["weyl_order"] = int_json(weyl_order(sys.type));
  results["dim_g"] = static_cast<long long>(r) + 2 * static_cast<long long>(n);
  ordered_json cartan = ordered_json::array();
  for (const auto& row : sys.cartan) {
    ordered_json jrow = ordered_json::array();
    for (const Int& e : row) jrow.push_back(int_json(e));
    cartan.push_back(std::move(jrow));
  }
  results["cartan"] = std::move(cartan);
  ordered_json cinv = ordered_json::array();
  for (const auto& row : sys.cartan_inverse) {
    ordered_json jrow = ordered_json::array();
    for (const Rat& e : row) jrow.push_back(rat_json(e));
    cinv.push_back(std::move(jrow));
  }
  results["cartan_inverse"] = std::move(cinv);
  ordered_json sym = ordered_json::array();
  for (const Rat& d : sys.symmetrizer) sym.push_back(rat_json(d));
  results["symmetrizer"] = std::move(sym);
  results["rho"] = weight_json(sys.rho_weight);
  results["rho_root_coords"] = root_json(weight_to_root_coords(sys, sys.rho_weight));
  ordered_json roots = ordered_json::array();
  for (const RootCoords& alpha : sys.positive_roots) roots.push_back(root_json(alpha));
  results["positive_roots"] = std::move(roots);

  {
    std::ostringstream os;
    os << n << " positive roots match the closed-form count";
    checks.push_back({"positive_root_count", Int(n) == positive_root_count(sys.type), os.str()});
  }
  {
    Weight sum = Weight::zero(r);
    for (const RootCoords& alpha : sys.positive_roots) {
      sum = sum + root_to_weight_coords(sys, alpha);
    }
    checks.push_back({"two_rho_is_root_sum", sum == Rat(2) * sys.rho_weight,
                      "sum of positive roots equals 2rho"});
  }
  return results;
}

ordered_json cmd_vertices(const RootSystem& sys, const Limits& limits,
                          const std::vector<long long>& weight_args,
                          std::vector<Check>& checks) {
  const int r = sys.rank();
  Weight mu;
  bool is_two_rho = weight_args.empty();
  if (is_two_rho) {
    mu = Rat(2) * sys.rho_weight;
  } else {
    if (weight_args.size() != static_cast<std::size_t>(r)) {
      std::ostringstream os;
      os << "--weights expects " << r << " integers for " << sys.type.name();
      throw std::invalid_argument(os.str());
    }
    mu = weight_from_ints(weight_args, 0, r);
  }

  VertexSet vs = vertices(sys, mu, limits);
  std::vector<unsigned> masks;
  for (const auto& [mask, v] : vs.entries) masks.push_back(mask);
  std::sort(masks.begin(), masks.end(), [r](unsigned a, unsigned b) {
    std::vector<int> ia = mask_to_indices(a, r), ib = mask_to_indices(b, r);
    if (ia.size() != ib.size()) return ia.size() < ib.size();
    return ia < ib;
  });

  ordered_json results;
  results["mu"] = weight_json(mu);
  ordered_json list = ordered_json::array();
  for (unsigned mask : masks) {
    ordered_json item;
    item["subset"] = subset_json(mask, r);
    item["weight"] = weight_json(vs.entries.at(mask));
    list.push_back(std::move(item));
  }
  results["vertices"] = std::move(list);

  std::ostringstream os;
  os << "all " << vs.entries.size() << " orbit averages pass the vertex criterion";
  checks.push_back({"vertex_criterion_all", true, os.str()});
  if (is_two_rho) {
    bool match = vs.entries == vertices_2rho(sys, limits).entries;
    checks.push_back({"closed_form_matches", match,
                      "orbit averages agree with 2rho - sum(Phi_J+) for every subset"});
  }
  return results;
}

ordered_json cmd_tensor(const RootSystem& sys, const Limits& limits,
                        const std::vector<long long>& weight_args, std::vector<Check>& checks) {
  const int r = sys.rank();
  if (weight_args.size() != 2 * static_cast<std::size_t>(r)) {
    std::ostringstream os;
    os << "--weights expects " << 2 * r << " integers (lambda then mu) for " << sys.type.name();
    throw std::invalid_argument(os.str());
  }
  Weight lambda = weight_from_ints(weight_args, 0, r);
  Weight mu = weight_from_ints(weight_args, static_cast<std::size_t>(r), r);

  Decomposition decomp = tensor_decompose(sys, lambda, mu, limits);
  Int dim_lambda = dim(sys, lambda), dim_mu = dim(sys, mu);

  ordered_json results;
  results["lambda"] = weight_json(lambda);
  results["mu"] = weight_json(mu);
  results["dim_lambda"] = int_json(dim_lambda);
  results["dim_mu"] = int_json(dim_mu);
  ordered_json comps = ordered_json::array();
  Int total = 0;
  for (const auto& [nu, c] : decomp) {
    Int d = dim(sys, nu);
    total += c * d;
    ordered_json item;
    item["weight"] = weight_json(nu);
    item["multiplicity"] = int_json(c);
    item["dim"] = int_json(d);
    comps.push_back(std::move(item));
  }
  results["components"] = std::move(comps);
  results["sum_of_dims"] = int_json(total);

  std::ostringstream os;
  os << "sum of component dims " << total << " equals " << dim_lambda << " * " << dim_mu;
  checks.push_back({"dimension_sum_matches", total == dim_lambda * dim_mu, os.str()});
  return results;
}

ordered_json conjecture_points_json(const ConjectureReport& report) {
  ordered_json points = ordered_json::array();
  for (const ConjecturePoint& p : report.points) {
    ordered_json item;
    item["weight"] = weight_json(p.weight);
    item["root_gap"] = root_json(p.root_gap);
    item["multiplicity"] = int_json(p.multiplicity);
    item["is_vertex"] = p.is_vertex;
    points.push_back(std::move(item));
  }
  return points;
}

void conjecture_checks(const ConjectureReport& report, std::vector<Check>& checks) {
  std::size_t zeros = 0;
  for (const ConjecturePoint& p : report.points) {
    if (p.multiplicity < 1) ++zeros;
  }
  {
    std::ostringstream os;
    if (report.all_positive) {
      os << "all " << report.points.size() << " lattice points of P(2rho) have multiplicity >= 1";
    } else {
      os << zeros << " of " << report.points.size() << " lattice points have multiplicity 0";
    }
    checks.push_back({"all_points_positive", report.all_positive, os.str()});
  }
  checks.push_back({"vertex_mults_all_one", report.vertex_mults_all_one,
                    "every vertex of P(2rho) appears with multiplicity exactly 1"});
  checks.push_back({"support_equals_lattice_points", true,
                    "every component of the product is a lattice point of P(2rho)"});
  checks.push_back({"dimension_identity", report.dim_identity_holds,
                    "sum of multiplicity * dim equals 2^(2 |Phi+|)"});
}

ordered_json cmd_verify_kostant(const RootSystem& sys, const Limits& limits,
                                std::vector<Check>& checks) {
  ConjectureReport report = verify_conjecture(sys, limits);
  ordered_json results;
  results["num_points"] = report.points.size();
  results["points"] = conjecture_points_json(report);
  results["runtime_ms"] = report.runtime_ms;
  conjecture_checks(report, checks);
  return results;
}

ordered_json cmd_verify_saturation(const RootSystem& sys, const Limits& limits,
                                   std::optional<long long> d_arg, std::vector<Check>& checks) {
  Int d;
  if (d_arg) {
    d = *d_arg;
  } else {
    d = default_saturation_factor(sys.type);
    if (d == 0) {
      throw std::invalid_argument("no default saturation factor for type " + sys.type.name() +
                                  "; pass --d explicitly");
    }
  }
  SaturationReport report = verify_saturation(sys, d, limits);

  ordered_json results;
  results["d"] = int_json(report.d);
  ordered_json points = ordered_json::array();
  for (const SaturationPoint& p : report.points) {
    ordered_json item;
    item["weight"] = weight_json(p.weight);
    item["scaled_weight"] = weight_json(Rat(report.d) * p.weight);
    item["multiplicity"] = int_json(p.multiplicity);
    points.push_back(std::move(item));
  }
  results["points"] = std::move(points);

  std::ostringstream os;
  os << "every lattice point lambda of P(2rho) has V(" << report.d
     << " lambda) inside V(d rho) tensor V(d rho)";
  checks.push_back({"saturation_all_positive", report.all_positive, os.str()});
  return results;
}

ordered_json cmd_verify_all(const RootSystem& sys, const Limits& limits,
                            std::vector<Check>& checks) {
  const int r = sys.rank();
  auto start = std::chrono::steady_clock::now();
  Weight two_rho = Rat(2) * sys.rho_weight;

  {
    bool ok = Int(sys.positive_roots.size()) == positive_root_count(sys.type);
    Weight sum = Weight::zero(r);
    for (const RootCoords& alpha : sys.positive_roots) {
      sum = sum + root_to_weight_coords(sys, alpha);
    }
    ok = ok && sum == two_rho;
    for (int i = 0; i < r && ok; ++i) {
      for (int j = 0; j < r; ++j) {
        Rat entry = 0;
        for (int k = 0; k < r; ++k) entry += Rat(sys.cartan[i][k]) * sys.cartan_inverse[k][j];
        if (entry != Rat(i == j ? 1 : 0)) ok = false;
        if (sys.cartan_inverse[i][j] <= 0) ok = false;
      }
    }
    checks.push_back({"root_system_invariants", ok,
                      "root count, 2rho as root sum, and the exact Cartan inverse all agree"});
  }

  {
    bool match = vertices(sys, two_rho, limits).entries == vertices_2rho(sys, limits).entries;
    std::ostringstream os;
    os << "orbit averages agree with 2rho - sum(Phi_J+) on all " << (1u << r) << " subsets";
    checks.push_back({"vertex_cross_check", match, os.str()});
  }

  checks.push_back({"norm_inequality", verify_norm_inequality(sys, limits),
                    "(mu,mu) <= (rho,rho) on Pi(rho), equality exactly on the orbit of rho"});

  {
    bool ok = true;
    for (unsigned mask = 0; mask < (1u << r); ++mask) {
      if (!verify_emptiness(sys, mask_to_indices(mask, r), limits)) ok = false;
    }
    std::ostringstream os;
    os << "w_J rho + 2rho - w(2rho) avoids Pi(rho) for every w != 1 and all " << (1u << r)
       << " subsets";
    checks.push_back({"emptiness", ok, os.str()});
  }

  ConjectureReport report = verify_conjecture(sys, limits);
  conjecture_checks(report, checks);

  ordered_json results;
  results["num_points"] = report.points.size();
  results["points"] = conjecture_points_json(report);
  results["emptiness_subsets_checked"] = 1u << r;
  results["runtime_ms"] = std::chrono::duration_cast<std::chrono::milliseconds>(
                              std::chrono::steady_clock::now() - start)
                              .count();
  return results;
}

bool is_scalar_array(const ordered_json& j) {
  for (const auto& e : j) {
    if (e.is_object() || e.is_array()) return false;
  }
  return true;
}

void print_tree(std::ostream& out, const ordered_json& j, int indent) {
  std::string pad(static_cast<std::size_t>(indent), ' ');
  for (auto it = j.begin(); it != j.end(); ++it) {
    const ordered_json& v = it.value();
    if (v.is_object()) {
      out << pad << it.key() << ":\n";
      print_tree(out, v, indent + 2);
    } else if (v.is_array() && !is_scalar_array(v)) {
      out << pad << it.key() << ":\n";
      for (const auto& e : v) out << pad << "  - " << e.dump() << "\n";
    } else if (v.is_string()) {
      out << pad << it.key() << ": " << v.get<std::string>() << "\n";
    } else {
      out << pad << it.key() << ": " << v.dump() << "\n";
    }
  }
}

void print_text(std::ostream& out, const ordered_json& top) {
  out << "rho-tensor " << top["tool_version"].get<std::string>() << "\n";
  out << "type: " << top["lie_type"].get<std::string>() << "\n";
  out << "command: " << top["command"].get<std::string>() << "\n";
  print_tree(out, top["results"], 0);
  out << "checks:\n";
  for (const auto& c : top["checks"]) {
    out << "  [" << (c["pass"].get<bool>() ? "PASS" : "FAIL") << "] "
        << c["name"].get<std::string>() << ": " << c["detail"].get<std::string>() << "\n";
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact computations with root systems, Weyl orbits, weight polytopes, and "
               "tensor products of the rho representation"};
  app.set_version_flag("--version", std::string(kToolVersion));
  app.require_subcommand(1);

  bool json_out = false;
  app.add_flag("--json", json_out, "Emit a JSON report instead of text");
  long long max_orbit_flag = -1;
  app.add_option("--max-orbit", max_orbit_flag, "Orbit size guard");
  long long max_dim_flag = -1;
  app.add_option("--max-dim", max_dim_flag, "Dimension guard (env RHO_TENSOR_MAX_DIM)");
  bool allow_large = false;
  app.add_flag("--allow-large", allow_large, "Lift the large weight-system gate");

  std::string type_str;
  std::vector<long long> weight_args;
  long long d_flag = -1;

  CLI::App* roots_cmd = app.add_subcommand("roots", "Print the root system data");
  CLI::App* vertices_cmd =
      app.add_subcommand("vertices", "Vertices of the dominant weight polytope (default mu=2rho)");
  vertices_cmd->add_option("--weights", weight_args, "Fundamental coordinates of mu");
  CLI::App* tensor_cmd = app.add_subcommand("tensor", "Decompose V(lambda) tensor V(mu)");
  tensor_cmd->add_option("--weights", weight_args, "Fundamental coordinates of lambda then mu")
      ->required();
  CLI::App* kostant_cmd = app.add_subcommand(
      "verify-kostant", "Check positivity on all lattice points of P(2rho) for rho tensor rho");
  CLI::App* saturation_cmd = app.add_subcommand(
      "verify-saturation", "Check c_{d rho, d rho}^{d lambda} > 0 on lattice points of P(2rho)");
  saturation_cmd->add_option("--d", d_flag, "Saturation factor (default 1/2/4 for A/BC/D)");
  CLI::App* all_cmd = app.add_subcommand("verify-all", "Run the full verification battery");

  for (CLI::App* sub : {roots_cmd, vertices_cmd, tensor_cmd, kostant_cmd, saturation_cmd, all_cmd}) {
    sub->add_option("type", type_str, "Lie type, e.g. A2 or B4")->required();
    sub->fallthrough();
  }

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  Limits limits;
  if (const char* env = std::getenv("RHO_TENSOR_MAX_DIM")) {
    try {
      limits.max_dim = Int(std::string(env));
    } catch (const std::exception&) {
      err << "error: RHO_TENSOR_MAX_DIM is not an integer: " << env << "\n";
      return 2;
    }
  }
  if (max_orbit_flag >= 0) limits.max_orbit = max_orbit_flag;
  if (max_dim_flag >= 0) limits.max_dim = max_dim_flag;
  limits.allow_large = allow_large;

  std::string command;
  ordered_json results;
  std::vector<Check> checks;
  try {
    RootSystem sys = build(type_str);
    if (roots_cmd->parsed()) {
      command = "roots";
      results = cmd_roots(sys, checks);
    } else if (vertices_cmd->parsed()) {
      command = "vertices";
      results = cmd_vertices(sys, limits, weight_args, checks);
    } else if (tensor_cmd->parsed()) {
      command = "tensor";
      results = cmd_tensor(sys, limits, weight_args, checks);
    } else if (kostant_cmd->parsed()) {
      command = "verify-kostant";
      results = cmd_verify_kostant(sys, limits, checks);
    } else if (saturation_cmd->parsed()) {
      command = "verify-saturation";
      std::optional<long long> d_arg;
      if (saturation_cmd->count("--d") > 0) d_arg = d_flag;
      results = cmd_verify_saturation(sys, limits, d_arg, checks);
    } else if (all_cmd->parsed()) {
      command = "verify-all";
      results = cmd_verify_all(sys, limits, checks);
    }
  } catch (const GuardExceeded& e) {
    err << "guard: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::logic_error& e) {
    err << "internal error: " << e.what() << "\n";
    return 1;
  }

  ordered_json top;
  top["tool_version"] = kToolVersion;
  top["lie_type"] = type_str;
  top["command"] = command;
  top["results"] = std::move(results);
  top["checks"] = checks_json(checks);

  bool all_pass = true;
  for (const Check& c : checks) all_pass = all_pass && c.pass;

  if (json_out) {
    out << top.dump(2) << "\n";
  } else {
    print_text(out, top);
    out << "result: " << (all_pass ? "PASS" : "FAIL") << "\n";
  }
  return all_pass ? 0 : 1;
}

}  // namespace rhotensor::cli

// Command-line entry point.
//
// Exit codes: 0 all checks pass (UNRESOLVED counts as a warning),
// 1 a check failed, 2 usage error, 3 precondition violation, 4 I/O error.

#include "inflect/conjectures.hpp"
#include "inflect/inflection.hpp"
#include "inflect/render.hpp"

#include "CLI11.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace {

using namespace inflect;

enum Exit { kOk = 0, kCheckFailed = 1, kUsage = 2, kPrecondition = 3, kIo = 4 };

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

Rational flag_rational(const std::string& name, const std::string& text) {
  try {
    return parse_rational(text);
  } catch (const std::invalid_argument& e) {
    throw UsageError(name + ": " + e.what());
  }
}

std::vector<Rational> parse_grid(const std::string& text) {
  std::vector<Rational> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(flag_rational("--lambda-grid", item));
  if (out.empty()) throw UsageError("--lambda-grid: empty list");
  return out;
}

// Collects report verdicts into an exit code.
class Tally {
 public:
  void add(const CheckReport& r) {
    std::cout << r.to_json().dump() << '\n';
    if (r.verdict == Verdict::fail) ++failed_;
    if (r.verdict == Verdict::unresolved) ++unresolved_;
  }
  int finish() const {
    if (unresolved_) std::cerr << "warning: " << unresolved_ << " unresolved report(s)\n";
    return failed_ ? kCheckFailed : kOk;
  }

 private:
  int failed_ = 0;
  int unresolved_ = 0;
};

SparsePoly inflection_poly(int mu, int k) {
  if (mu == 1) return basic_inflection(k).poly;
  return general_inflection(mu, k).poly;
}

// k from --k, or 1..k_max (from `first`) from --k-max.
std::vector<int> k_range(const std::optional<int>& k, const std::optional<int>& k_max, int first,
                         int default_max) {
  if (k && k_max) throw UsageError("--k and --k-max are mutually exclusive");
  if (k) return {*k};
  std::vector<int> out;
  for (int i = first; i <= k_max.value_or(default_max); ++i) out.push_back(i);
  return out;
}

std::filesystem::path output_path(const std::string& out) {
  std::filesystem::path p(out);
  if (p.is_relative()) {
    if (const char* dir = std::getenv("INFLECT_OUT_DIR"); dir && *dir) p = std::filesystem::path(dir) / p;
  }
  return p;
}

int run(int argc, char** argv) {
  CLI::App app{"Inflection polynomials on Legendre elliptic curves"};
  app.require_subcommand(0, 1);

  bool coefficient_check = false;
  app.add_flag("--coefficient-check", coefficient_check)->group("");

  // compute
  auto* compute = app.add_subcommand("compute", "Print P_{mu,k}");
  int c_mu = 1, c_k = 0;
  std::string c_format = "json";
  compute->add_option("--mu", c_mu)->capture_default_str();
  compute->add_option("--k", c_k)->required();
  compute->add_option("--format", c_format)->check(CLI::IsMember({"json", "text"}))->capture_default_str();

  // verify
  auto* verify = app.add_subcommand("verify", "Run a named check and stream JSON reports");
  std::string v_check;
  std::optional<int> v_k, v_k_max, v_mu;
  std::vector<std::string> v_lambda;
  verify->add_option("check", v_check)
      ->required()
      ->check(CLI::IsMember({"symmetry", "support", "faces", "lemma1", "torsion", "singular"}));
  verify->add_option("--k", v_k);
  verify->add_option("--k-max", v_k_max);
  verify->add_option("--mu", v_mu);
  verify->add_option("--lambda", v_lambda)->allow_extra_args(false);

  // roots
  auto* roots = app.add_subcommand("roots", "Real-root census at one lambda");
  int r_mu = 1, r_k = 0;
  std::string r_lambda;
  roots->add_option("--mu", r_mu)->capture_default_str();
  roots->add_option("--k", r_k)->required();
  roots->add_option("--lambda", r_lambda)->required();

  // scan
  auto* scan = app.add_subcommand("scan", "Real-root census over a lambda grid");
  int s_mu = 1, s_k = 0;
  std::string s_grid;
  scan->add_option("--mu", s_mu)->capture_default_str();
  scan->add_option("--k", s_k)->required();
  scan->add_option("--lambda-grid", s_grid, "comma-separated rationals");

  // plot
  auto* plot = app.add_subcommand("plot", "Render the real locus as SVG");
  int p_mu = 1, p_k = 0;
  std::string p_out;
  const Window dw = default_window();
  std::string p_xmin = to_string(dw.x_min), p_xmax = to_string(dw.x_max);
  std::string p_lmin = to_string(dw.l_min), p_lmax = to_string(dw.l_max);
  int p_nx = dw.nx, p_nl = dw.nl;
  plot->add_option("--mu", p_mu)->capture_default_str();
  plot->add_option("--k", p_k)->required();
  plot->add_option("--out", p_out)->required();
  plot->add_option("--x-min", p_xmin)->capture_default_str();
  plot->add_option("--x-max", p_xmax)->capture_default_str();
  plot->add_option("--lambda-min", p_lmin)->capture_default_str();
  plot->add_option("--lambda-max", p_lmax)->capture_default_str();
  plot->add_option("--nx", p_nx)->capture_default_str();
  plot->add_option("--nl", p_nl)->capture_default_str();

  // genus
  auto* genus = app.add_subcommand("genus", "Print the predicted delta and genus");
  int g_k = 0;
  genus->add_option("--k", g_k)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  if (coefficient_check) {
    const CoefficientCalibration c = calibrate_recurrence(9);
    Json j;
    j["max_order"] = c.max_order;
    j["printed_matches"] = c.printed_matches;
    j["derived_matches"] = c.derived_matches;
    j["matching"] = c.derived_matches ? (c.printed_matches ? "both" : "derived")
                                      : (c.printed_matches ? "printed" : "none");
    std::cout << j.dump() << '\n';
    return c.derived_matches ? kOk : kCheckFailed;
  }

  if (*compute) {
    const SparsePoly p = inflection_poly(c_mu, c_k);
    std::cout << (c_format == "json" ? to_json(p) : to_text(p)) << '\n';
    return kOk;
  }

  if (*verify) {
    Tally t;
    if (v_check == "symmetry") {
      for (int k : k_range(v_k, v_k_max, 1, 8)) {
        t.add(check_homogenization_symmetry(k));
        t.add(check_shift_symmetry(k));
      }
    } else if (v_check == "support") {
      for (int k : k_range(v_k, v_k_max, 1, 8)) {
        t.add(check_support(k));
        t.add(check_coeff_symmetry(k));
      }
    } else if (v_check == "faces") {
      for (int k : k_range(v_k, v_k_max, 2, 6)) t.add(check_face_structure(k));
    } else if (v_check == "singular") {
      for (int k : k_range(v_k, v_k_max, 1, 3)) t.add(singular_probe(k));
    } else if (v_check == "lemma1") {
      if (v_k_max) throw UsageError("lemma1 takes --mu and --k");
      if (v_mu.has_value() != v_k.has_value()) throw UsageError("lemma1 needs both --mu and --k");
      if (v_mu) {
        t.add(check_determinant_agreement(*v_mu, *v_k));
      } else {
        for (auto [mu, k] : {std::pair{2, 3}, {2, 4}, {3, 4}, {2, 5}}) t.add(check_determinant_agreement(mu, k));
      }
    } else if (v_check == "torsion") {
      if (v_k_max) throw UsageError("torsion takes --k");
      std::vector<Rational> lambdas;
      for (const auto& s : v_lambda) lambdas.push_back(flag_rational("--lambda", s));
      if (lambdas.empty()) lambdas = {Rational(-1), Rational(-1, 2), Rational(1, 3), Rational(2), Rational(5)};
      const std::vector<int> ks = v_k ? std::vector<int>{*v_k} : std::vector<int>{2, 3};
      for (int k : ks) {
        for (const auto& l : lambdas) t.add(check_torsion(k, l));
      }
    }
    return t.finish();
  }

  if (*roots) {
    const RootCensus c = real_root_census(r_mu, r_k, flag_rational("--lambda", r_lambda));
    std::cout << c.to_json().dump() << '\n';
    return c.separable_away_from_01 ? kOk : kCheckFailed;
  }

  if (*scan) {
    const std::vector<Rational> grid = s_grid.empty() ? default_lambda_grid() : parse_grid(s_grid);
    for (const auto& l : grid) {
      if (l == 0 || l == 1) throw PreconditionError("degenerate Legendre parameter " + to_string(l));
    }
    Tally t;
    t.add(conjecture4_scan(s_mu, s_k, grid));
    return t.finish();
  }

  if (*plot) {
    Window w;
    w.x_min = flag_rational("--x-min", p_xmin);
    w.x_max = flag_rational("--x-max", p_xmax);
    w.l_min = flag_rational("--lambda-min", p_lmin);
    w.l_max = flag_rational("--lambda-max", p_lmax);
    w.nx = p_nx;
    w.nl = p_nl;
    try {
      w.validate();
    } catch (const std::invalid_argument& e) {
      throw UsageError(e.what());
    }
    const SparsePoly p = inflection_poly(p_mu, p_k);
    std::ostringstream svg;
    render_curve(p, w, svg, "Real locus of P_{" + std::to_string(p_mu) + "," + std::to_string(p_k) + "} = 0");
    const auto path = output_path(p_out);
    std::ofstream f(path, std::ios::binary);
    if (!f) throw IoError("cannot open " + path.string());
    f << svg.str();
    f.close();
    if (!f) throw IoError("failed writing " + path.string());
    return kOk;
  }

  if (*genus) {
    const long genus_value = predicted_genus(g_k);
    std::cout << "delta=" << predicted_delta(g_k) << " genus=" << genus_value << '\n';
    if (genus_value < 0) std::cerr << "note: the genus formula is negative at k=" << g_k << '\n';
    return kOk;
  }

  std::cout << app.help();
  return kUsage;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return kUsage;
  } catch (const PreconditionError& e) {
    std::cerr << "precondition violated: " << e.what() << '\n';
    return kPrecondition;
  } catch (const IoError& e) {
    std::cerr << "I/O error: " << e.what() << '\n';
    return kIo;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kCheckFailed;
  }
}

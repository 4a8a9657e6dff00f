#include "inflect/conjectures.hpp"

#include "inflect/inflection.hpp"
#include "inflect/linalg.hpp"

#include <algorithm>
#include <stdexcept>

namespace inflect {

namespace {

Json point_json(const LatticePoint& p) { return Json::array({p.first, p.second}); }

Json points_json(const std::set<LatticePoint>& pts) {
  Json out = Json::array();
  for (const auto& p : pts) out.push_back(point_json(p));
  return out;
}

Json poly_json(const SparsePoly& p) { return Json::parse(to_json(p)); }

Json interval_json(const IsolatingInterval& iv) {
  Json j;
  j["lo"] = to_string(iv.lo);
  j["hi"] = to_string(iv.hi);
  return j;
}

void require_k(int k, int min) {
  if (k < min) throw PreconditionError("check needs k >= " + std::to_string(min));
}

void require_lambda(const Rational& lambda0) {
  if (lambda0 == 0 || lambda0 == 1) {
    throw PreconditionError("degenerate Legendre parameter " + to_string(lambda0));
  }
}

// First term of a - b, for FAIL witnesses.
Json difference_witness(const SparsePoly& a, const SparsePoly& b) {
  const SparsePoly d = a - b;
  Json w;
  w["exponent"] = d.leading_term().first;
  w["difference"] = to_string(d.leading_term().second);
  w["difference_terms"] = d.size();
  return w;
}

CheckReport equality_report(std::string name, int k, const SparsePoly& lhs, const SparsePoly& rhs) {
  CheckReport r;
  r.check = std::move(name);
  r.params["k"] = k;
  if (lhs == rhs) {
    r.data["terms"] = lhs.size();
  } else {
    r.verdict = Verdict::fail;
    r.witness = difference_witness(lhs, rhs);
  }
  return r;
}

DensePoly at_lambda(const SparsePoly& p, const Rational& lambda0) {
  return DensePoly::from_sparse(specialize(p, kLambda, lambda0));
}

}  // namespace

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::pass: return "PASS";
    case Verdict::fail: return "FAIL";
    case Verdict::out_of_range: return "OUT_OF_RANGE";
    case Verdict::unresolved: return "UNRESOLVED";
  }
  return "?";
}

Json CheckReport::to_json() const {
  Json j;
  j["check"] = check;
  j["params"] = params;
  j["verdict"] = to_string(verdict);
  j["witness"] = witness ? *witness : Json(nullptr);
  j["data"] = data;
  return j;
}

Json rational_json(const Rational& r) { return to_string(r); }

CheckReport homogenization_symmetry(const SparsePoly& p, int k) {
  require_k(k, 1);
  const SparsePoly h = homogenize(p, "z", 2 * (k + 1));
  return equality_report("homogenization_symmetry", k, dehomogenize(h, kLambda),
                         rename_variable(p, kLambda, "z"));
}

CheckReport check_homogenization_symmetry(int k) {
  return homogenization_symmetry(basic_inflection(k).poly, k);
}

CheckReport shift_symmetry(const SparsePoly& p, int k) {
  require_k(k, 1);
  const SparsePoly shifted =
      substitute_affine(p, {{kX, {Rational(1), Rational(1)}}, {kLambda, {Rational(1), Rational(1)}}});
  const SparsePoly reflected =
      substitute_affine(p, {{kX, {Rational(-1), Rational(0)}}, {kLambda, {Rational(-1), Rational(0)}}});
  return equality_report("shift_symmetry", k, shifted, reflected);
}

CheckReport check_shift_symmetry(int k) { return shift_symmetry(basic_inflection(k).poly, k); }

CheckReport check_determinant_agreement(int mu, int k) {
  if (mu >= 2 && k <= mu && k + 1 >= mu) {
    // outside the stated range; compare the two determinants without a verdict
    const SparsePoly a = q_substitution_unchecked(mu, k);
    const SparsePoly b = wronskian_unchecked(mu, k);
    CheckReport r;
    r.check = "lemma1";
    r.params = Json{{"mu", mu}, {"k", k}};
    r.verdict = Verdict::out_of_range;
    r.data["constructions_agree"] = a == b;
    r.data["deg_x"] = a.degree_in(kX);
    r.data["deg_lambda"] = a.degree_in(kLambda);
    return r;
  }
  const InflectionPoly a = general_inflection(mu, k);
  const InflectionPoly b = wronskian_direct(mu, k);
  CheckReport r = equality_report("lemma1", k, a.poly, b.poly);
  r.params = Json{{"mu", mu}, {"k", k}};
  r.data["deg_x"] = a.poly.degree_in(kX);
  r.data["deg_lambda"] = a.poly.degree_in(kLambda);
  return r;
}

CheckReport check_torsion(int k, const Rational& lambda0) {
  const TorsionReport t = torsion_check(k, lambda0);
  CheckReport r;
  r.check = "torsion";
  r.params = Json{{"k", k}, {"lambda", to_string(lambda0)}};
  r.data["inflection_degree"] = t.inflection_degree;
  r.data["division_degree"] = t.division_degree;
  if (t.pass) {
    r.data["ratio"] = to_string(t.ratio);
  } else {
    r.verdict = Verdict::fail;
    r.witness = Json{{"diagnostics", t.diagnostics}};
  }
  return r;
}

std::set<LatticePoint> predicted_support(int k) {
  require_k(k, 1);
  const long K = k;
  std::set<LatticePoint> out =
      lattice_points_in_hull({{0, K + 1}, {K - 1, K + 1}, {K - 1, 2}, {2 * K - 2, 2}});
  const auto second = lattice_points_in_hull({{2 * K, 1}, {2 * K + 1, 1}, {2 * K + 1, 0}, {2 * K + 2, 0}});
  out.insert(second.begin(), second.end());
  return out;
}

LatticePoint sigma(int k, const LatticePoint& p) {
  return {p.first, 2L * k + 2 - p.first - p.second};
}

CheckReport support_report(const SparsePoly& p, int k) {
  CheckReport r;
  r.check = "support";
  r.params["k"] = k;
  const std::set<LatticePoint> actual = newton_data(p).support;
  const std::set<LatticePoint> predicted = predicted_support(k);
  r.data["support"] = points_json(actual);
  if (actual != predicted) {
    r.verdict = Verdict::fail;
    std::set<LatticePoint> extra, missing;
    std::set_difference(actual.begin(), actual.end(), predicted.begin(), predicted.end(),
                        std::inserter(extra, extra.end()));
    std::set_difference(predicted.begin(), predicted.end(), actual.begin(), actual.end(),
                        std::inserter(missing, missing.end()));
    Json w;
    w["unpredicted"] = points_json(extra);
    w["missing"] = points_json(missing);
    r.witness = w;
  }
  return r;
}

CheckReport check_support(int k) { return support_report(basic_inflection(k).poly, k); }

CheckReport coeff_symmetry_report(const SparsePoly& p, int k) {
  require_k(k, 1);
  CheckReport r;
  r.check = "coeff_symmetry";
  r.params["k"] = k;
  std::size_t pairs = 0;
  for (const auto& [e, c] : p.terms()) {
    const LatticePoint image = sigma(k, {e[0], e[1]});
    const Rational other = image.second < 0
                               ? Rational(0)
                               : p.coefficient({static_cast<unsigned>(image.first),
                                                static_cast<unsigned>(image.second)});
    if (other != c) {
      r.verdict = Verdict::fail;
      Json w;
      w["point"] = Json::array({e[0], e[1]});
      w["image"] = point_json(image);
      w["coefficient"] = to_string(c);
      w["image_coefficient"] = to_string(other);
      r.witness = w;
      return r;
    }
    ++pairs;
  }
  r.data["checked_terms"] = pairs;
  return r;
}

CheckReport check_coeff_symmetry(int k) { return coeff_symmetry_report(basic_inflection(k).poly, k); }

Segment gamma1(int k) { return {{0, k + 1L}, {k - 1L, 2}}; }
Segment gamma2(int k) { return {{k - 1L, 2}, {2L * k + 1, 0}}; }

CheckReport face_structure_report(const SparsePoly& p, int k) {
  require_k(k, 1);
  CheckReport r;
  r.check = "face_structure";
  r.params["k"] = k;
  if (k < 2) {
    r.verdict = Verdict::out_of_range;
    r.data["note"] = "face description applies for k >= 2";
    return r;
  }
  const NewtonData nd = newton_data(p);
  const Segment g1 = gamma1(k);
  const Segment g2 = gamma2(k);
  r.data["gamma1_is_lower_face"] = is_lower_face(nd, g1);
  r.data["gamma2_is_lower_face"] = is_lower_face(nd, g2);

  auto fail = [&](std::string part, Json detail) {
    r.verdict = Verdict::fail;
    Json w;
    w["part"] = std::move(part);
    w["detail"] = std::move(detail);
    r.witness = w;
    return r;
  };

  if (!is_lower_face(nd, g1)) return fail("faces", "Gamma_1 is not a lower face");
  if (!is_lower_face(nd, g2)) return fail("faces", "Gamma_2 is not a lower face");

  // (a) Gamma_1 restriction carries lambda^2
  const SparsePoly r1 = face_restriction(p, g1);
  if (r1.is_zero()) return fail("a", "empty Gamma_1 restriction");
  for (const auto& [e, c] : r1.terms()) {
    if (e[1] < 2) return fail("a", Json::array({e[0], e[1]}));
  }
  r.data["gamma1_terms"] = r1.size();

  // (b) Gamma_2 restriction is a lambda^2 x^(k-1) + b x^(2k+1)
  const SparsePoly r2 = face_restriction(p, g2);
  Json lattice = Json::array();
  for (const auto& q : lattice_points_on_segment(g2)) lattice.push_back(point_json(q));
  r.data["gamma2_lattice_points"] = lattice;
  const Exponents ea{static_cast<unsigned>(k - 1), 2u};
  const Exponents eb{static_cast<unsigned>(2 * k + 1), 0u};
  if (r2.size() != 2 || r2.coefficient(ea) == 0 || r2.coefficient(eb) == 0) {
    return fail("b", poly_json(r2));
  }
  r.data["gamma2_a"] = to_string(r2.coefficient(ea));
  r.data["gamma2_b"] = to_string(r2.coefficient(eb));

  // (c) cofactor Q_{k-1}(x, 1) squarefree of full degree
  SparsePoly cofactor(p.vars());
  for (const auto& [e, c] : r1.terms()) cofactor.add_term({e[0], e[1] - 2}, c);
  const DensePoly q = DensePoly::from_sparse(dehomogenize(cofactor, kLambda));
  r.data["gamma1_cofactor"] = poly_json(q.to_sparse(kX));
  if (q.degree() != k - 1 || gcd(q, q.derivative()).degree() > 0) {
    return fail("c", poly_json(q.to_sparse(kX)));
  }
  return r;
}

CheckReport check_face_structure(int k) { return face_structure_report(basic_inflection(k).poly, k); }

CheckReport separability_check(int mu, int k, const Rational& lambda0) {
  require_lambda(lambda0);
  CheckReport r;
  r.check = "separability";
  r.params["mu"] = mu;
  r.params["k"] = k;
  r.params["lambda"] = rational_json(lambda0);
  const DensePoly p = at_lambda(general_inflection(mu, k).poly, lambda0);
  if (p.is_zero()) throw std::logic_error("inflection polynomial vanishes at lambda0");
  const DensePoly g = gcd(p, p.derivative());
  const DensePoly x01(std::vector<Rational>{0, -1, 1});
  const bool ok = g.degree() < 1 || divmod(x01, squarefree_part(g)).remainder.is_zero();
  r.data["gcd_degree"] = g.degree();
  if (!ok) {
    r.verdict = Verdict::fail;
    r.witness = poly_json(g.to_sparse(kX));
  }
  return r;
}

Json RootCensus::to_json() const {
  Json j;
  j["mu"] = mu;
  j["k"] = k;
  j["lambda"] = rational_json(lambda0);
  j["total_distinct_real_roots"] = total_distinct_real_roots;
  j["roots_f_positive"] = roots_f_positive;
  j["real_points_on_curve"] = 2 * roots_f_positive;
  j["multiplicity_at_0"] = multiplicity_at_0;
  j["multiplicity_at_1"] = multiplicity_at_1;
  j["separable_away_from_01"] = separable_away_from_01;
  Json rs = Json::array();
  for (const auto& root : roots) {
    Json e = interval_json(root.interval);
    e["approx"] = Rational((root.interval.lo + root.interval.hi) / 2).get_d();
    e["f_sign"] = root.f_sign;
    rs.push_back(std::move(e));
  }
  j["roots"] = std::move(rs);
  return j;
}

RootCensus real_root_census(int mu, int k, const Rational& lambda0) {
  require_lambda(lambda0);
  RootCensus c;
  c.mu = mu;
  c.k = k;
  c.lambda0 = lambda0;
  const DensePoly p = at_lambda(general_inflection(mu, k).poly, lambda0);
  if (p.is_zero()) throw std::logic_error("inflection polynomial vanishes at lambda0");
  const DensePoly f = at_lambda(legendre_f(), lambda0);
  c.multiplicity_at_0 = root_multiplicity(p, Rational(0));
  c.multiplicity_at_1 = root_multiplicity(p, Rational(1));
  c.separable_away_from_01 = separability_check(mu, k, lambda0).verdict == Verdict::pass;
  const Rational width = pow2_neg(20);
  for (const auto& iv : isolate_real_roots(p)) {
    RootInfo info{refine(p, iv, width), 0};
    info.f_sign = sign_at_root(f, p, info.interval);
    if (info.f_sign > 0) ++c.roots_f_positive;
    c.roots.push_back(std::move(info));
  }
  c.total_distinct_real_roots = static_cast<int>(c.roots.size());
  return c;
}

int expected_f_positive_roots(int mu, int k) { return (k - mu) % 2 == 0 ? mu : 2 * mu; }

std::vector<Rational> default_lambda_grid() {
  return {Rational(-3),   Rational(-1),   Rational(-1, 2), Rational(1, 4),
          Rational(1, 2), Rational(3, 4), Rational(2),     Rational(5)};
}

CheckReport conjecture4_scan(int mu, int k, const std::vector<Rational>& lambda_samples) {
  if (lambda_samples.empty()) throw std::invalid_argument("conjecture4_scan needs lambda samples");
  CheckReport r;
  r.check = "real_roots_scan";
  r.params["mu"] = mu;
  r.params["k"] = k;
  Json samples = Json::array();
  for (const auto& l : lambda_samples) samples.push_back(rational_json(l));
  r.params["lambda"] = samples;

  Json warnings = Json::array();
  Json census = Json::array();
  std::set<int> observed;
  for (const auto& l : lambda_samples) {
    if (l == 0 || l == 1) {
      warnings.push_back("skipped degenerate lambda " + to_string(l));
      continue;
    }
    const RootCensus c = real_root_census(mu, k, l);
    observed.insert(c.roots_f_positive);
    Json e;
    e["lambda"] = rational_json(l);
    e["total_distinct_real_roots"] = c.total_distinct_real_roots;
    e["roots_f_positive"] = c.roots_f_positive;
    e["separable_away_from_01"] = c.separable_away_from_01;
    census.push_back(std::move(e));
  }
  if (census.empty()) throw std::invalid_argument("every lambda sample is degenerate");

  const int expected = expected_f_positive_roots(mu, k);
  const bool gap_even = (k - mu) % 2 == 0;
  r.data["census"] = census;
  r.data["observed_counts"] = Json(std::vector<int>(observed.begin(), observed.end()));
  r.data["predicted_set"] = Json::array({mu, 2 * mu});
  r.data["k_minus_mu_parity"] = gap_even ? "even" : "odd";
  r.data["expected_count"] = expected;
  if (observed.size() == 1) {
    const int value = *observed.begin();
    r.data["observed_direction"] = value == mu ? "mu" : (value == 2 * mu ? "2mu" : "other");
  }
  r.data["warnings"] = warnings;
  if (observed.size() != 1 || *observed.begin() != expected) {
    r.verdict = Verdict::fail;
    Json w;
    for (const auto& e : census) {
      if (e["roots_f_positive"] != expected) {
        w = e;
        break;
      }
    }
    r.witness = w;
  }
  return r;
}

std::vector<ProjectivePoint> distinguished_points() {
  return {{Rational(0), Rational(0), Rational(1)},
          {Rational(0), Rational(1), Rational(0)},
          {Rational(1), Rational(1), Rational(1)}};
}

namespace {

struct Chart {
  std::string fixed;  // coordinate set to 1
  std::string u;      // eliminated coordinate
  std::string v;      // coordinate the resultants live in
};

ProjectivePoint chart_point(const Chart& c, const Rational& u, const Rational& v) {
  auto value = [&](const std::string& name) {
    if (name == c.fixed) return Rational(1);
    return name == c.u ? u : v;
  };
  return {value(kX), value(kLambda), value("z")};
}

// Affine coordinates (u, v) of a projective point in chart c, if it lies there.
std::optional<std::pair<Rational, Rational>> in_chart(const Chart& c, const ProjectivePoint& p) {
  auto coord = [&](const std::string& name) {
    if (name == kX) return p.x;
    if (name == kLambda) return p.lambda;
    return p.z;
  };
  const Rational w = coord(c.fixed);
  if (w == 0) return std::nullopt;
  return std::make_pair(Rational(coord(c.u) / w), Rational(coord(c.v) / w));
}

Json projective_json(const ProjectivePoint& p) {
  return Json::array({to_string(p.x), to_string(p.lambda), to_string(p.z)});
}

DensePoly on_line(const SparsePoly& a, const Chart& c, const Rational& v0) {
  return DensePoly::from_sparse(specialize(a, c.v, v0));
}

}  // namespace

CheckReport singular_points_report(const SparsePoly& p, const std::vector<ProjectivePoint>& allowed,
                                   const std::string& check_name) {
  if (p.vars() != kXL) throw VariableError("singular probe expects a polynomial in (x, lambda)");
  CheckReport r;
  r.check = check_name;
  const SparsePoly h = homogenize(p, "z", p.total_degree());
  const std::vector<Chart> charts = {{"z", kX, kLambda}, {kLambda, kX, "z"}, {kX, kLambda, "z"}};

  Json certified = Json::array();
  Json unresolved = Json::array();
  Json elsewhere = Json::array();
  Json chart_data = Json::array();
  for (const Chart& c : charts) {
    const SparsePoly a = dehomogenize(h, c.fixed);
    const SparsePoly au = derivative(a, c.u);
    const SparsePoly av = derivative(a, c.v);
    Json cd;
    cd["chart"] = c.fixed + "=1";
    if (a.degree_in(c.u) < 1) {
      unresolved.push_back({{"chart", c.fixed + "=1"}, {"reason", "no dependence on " + c.u}});
      chart_data.push_back(cd);
      continue;
    }
    const DensePoly r1 = DensePoly::from_sparse(resultant(a, au, c.u));
    const DensePoly r2 = DensePoly::from_sparse(resultant(a, av, c.u));
    DensePoly g = gcd(r1, r2);
    if (g.is_zero()) {
      unresolved.push_back({{"chart", c.fixed + "=1"}, {"reason", "both resultants vanish"}});
      chart_data.push_back(cd);
      continue;
    }
    g = squarefree_part(g);
    cd["resultant_gcd_degree"] = g.degree();

    // exact candidate coordinates: 0, 1, -1 and those of allowed points
    std::vector<Rational> trial = {Rational(0), Rational(1), Rational(-1)};
    for (const auto& q : allowed) {
      if (auto uv = in_chart(c, q)) trial.push_back(uv->second);
    }
    std::sort(trial.begin(), trial.end());
    trial.erase(std::unique(trial.begin(), trial.end()), trial.end());

    Json lines = Json::array();
    for (const Rational& v0 : trial) {
      if (g.degree() < 1 || g.sign_at(v0) != 0) continue;
      g = divmod(g, DensePoly(std::vector<Rational>{-v0, Rational(1)})).quotient;
      lines.push_back(to_string(v0));
      DensePoly common = gcd(gcd(on_line(a, c, v0), on_line(au, c, v0)), on_line(av, c, v0));
      if (common.is_zero()) {
        unresolved.push_back({{"chart", c.fixed + "=1"}, {c.v, to_string(v0)},
                              {"reason", "line lies in the singular locus"}});
        continue;
      }
      for (const auto& q : allowed) {
        const auto uv = in_chart(c, q);
        if (!uv || uv->second != v0) continue;
        const unsigned m = root_multiplicity(common, uv->first);
        if (m == 0) continue;
        for (unsigned i = 0; i < m; ++i) {
          common = divmod(common, DensePoly(std::vector<Rational>{-uv->first, Rational(1)})).quotient;
        }
        const Json pj = projective_json(q);
        if (std::find(certified.begin(), certified.end(), pj) == certified.end()) certified.push_back(pj);
      }
      if (common.degree() >= 1) {
        Json e;
        e["chart"] = c.fixed + "=1";
        e[c.v] = to_string(v0);
        e["polynomial_in_" + c.u] = Json::parse(to_json(common.to_sparse(c.u)));
        const auto roots = isolate_real_roots(common);
        if (!roots.empty()) {
          const ProjectivePoint sample = chart_point(c, roots.front().hi, v0);
          e["real_root_near"] = projective_json(sample);
        }
        elsewhere.push_back(std::move(e));
      }
    }
    cd["exact_lines"] = lines;
    if (g.degree() >= 1) {
      Json e;
      e["chart"] = c.fixed + "=1";
      e["reason"] = "resultant factor with no certified follow-up";
      e["factor_in_" + c.v] = Json::parse(to_json(g.to_sparse(c.v)));
      e["real_candidates"] = isolate_real_roots(g).size();
      unresolved.push_back(std::move(e));
    }
    chart_data.push_back(cd);
  }

  Json allowed_json = Json::array();
  for (const auto& q : allowed) allowed_json.push_back(projective_json(q));
  r.data["allowed"] = allowed_json;
  r.data["certified_singular"] = certified;
  r.data["unresolved"] = unresolved;
  r.data["charts"] = chart_data;
  if (!elsewhere.empty()) {
    r.verdict = Verdict::fail;
    r.witness = elsewhere;
  } else if (!unresolved.empty()) {
    r.verdict = Verdict::unresolved;
  }
  return r;
}

CheckReport singular_probe(int k) {
  require_k(k, 1);
  CheckReport r = singular_points_report(basic_inflection(k).poly, distinguished_points());
  r.params["k"] = k;
  return r;
}

}  // namespace inflect

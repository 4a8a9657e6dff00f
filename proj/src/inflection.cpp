#include "inflect/inflection.hpp"

#include "inflect/linalg.hpp"
#include "inflect/univariate.hpp"

#include <map>
#include <mutex>
#include <shared_mutex>
#include <stdexcept>

namespace inflect {

namespace {

SparsePoly x_var() { return SparsePoly::variable(kXL, kX); }
SparsePoly lambda_var() { return SparsePoly::variable(kXL, kLambda); }
SparsePoly constant(const Rational& c) { return SparsePoly::constant(kXL, c); }

void require_series_range(int mu, int k) {
  if (mu < 1) throw PreconditionError("mu must be at least 1");
  if (k <= mu) {
    throw PreconditionError("series parameters need k > mu (got mu=" + std::to_string(mu) +
                            ", k=" + std::to_string(k) + ")");
  }
}

// Append-only cache of P_{1,k}; entries are never modified once inserted.
class BasicCache {
 public:
  SparsePoly get(int k) {
    {
      std::shared_lock lock(mutex_);
      if (const auto it = table_.find(k); it != table_.end()) return it->second;
    }
    int start = 0;
    SparsePoly cur;
    {
      std::shared_lock lock(mutex_);
      auto it = table_.upper_bound(k);
      if (it != table_.begin()) {
        --it;
        start = it->first;
        cur = it->second;
      }
    }
    if (cur.vars().empty()) cur = derivative(legendre_f(), kX) * Rational(1, 2);
    std::vector<std::pair<int, SparsePoly>> fresh;
    fresh.emplace_back(start, cur);
    for (int j = start; j < k; ++j) {
      cur = recurrence_step(cur, j, RecurrenceCoefficient::derived);
      fresh.emplace_back(j + 1, cur);
    }
    std::unique_lock lock(mutex_);
    for (auto& [j, p] : fresh) table_.try_emplace(j, std::move(p));
    return table_.at(k);
  }

 private:
  std::shared_mutex mutex_;
  std::map<int, SparsePoly> table_;
};

BasicCache& basic_cache() {
  static BasicCache cache;
  return cache;
}

// Element of Q[x, lambda] possibly times y; y^2 is folded back into f.
struct WithY {
  SparsePoly poly;
  bool y = false;
};

WithY mul(const WithY& a, const WithY& b) {
  WithY out{a.poly * b.poly, a.y != b.y};
  if (a.y && b.y) out.poly = out.poly * legendre_f();
  return out;
}

WithY sub(const WithY& a, const WithY& b) {
  if (a.y != b.y && !a.poly.is_zero() && !b.poly.is_zero()) {
    throw std::logic_error("division polynomial recurrence mixed y-parities");
  }
  return {a.poly - b.poly, a.poly.is_zero() ? b.y : a.y};
}

WithY cube(const WithY& a) { return mul(a, mul(a, a)); }
WithY square(const WithY& a) { return mul(a, a); }

std::vector<WithY> psi_table(int m) {
  const SparsePoly x = x_var();
  const SparsePoly a2 = -(constant(1) + lambda_var());
  const SparsePoly a4 = lambda_var();
  const SparsePoly b2 = a2 * Rational(4);
  const SparsePoly b4 = a4 * Rational(2);
  const SparsePoly b8 = -(a4 * a4);  // b6 = 0 for this curve

  std::vector<WithY> psi;
  psi.push_back({SparsePoly(kXL), false});
  psi.push_back({constant(1), false});
  psi.push_back({constant(2), true});
  psi.push_back({pow(x, 4) * Rational(3) + b2 * pow(x, 3) + b4 * pow(x, 2) * Rational(3) + b8,
                 false});
  // psi_4 = psi_2 (2x^6 + b2 x^5 + 5 b4 x^4 + 10 b8 x^2 + b2 b8 x + b4 b8)
  const SparsePoly inner = pow(x, 6) * Rational(2) + b2 * pow(x, 5) +
                           b4 * pow(x, 4) * Rational(5) + b8 * pow(x, 2) * Rational(10) +
                           b2 * b8 * x + b4 * b8;
  psi.push_back({inner * Rational(2), true});

  for (int j = static_cast<int>(psi.size()); j <= m; ++j) {
    const int n = j / 2;
    if (j % 2 == 1) {
      psi.push_back(sub(mul(psi[n + 2], cube(psi[n])), mul(psi[n - 1], cube(psi[n + 1]))));
      continue;
    }
    const WithY t = mul(psi[n], sub(mul(psi[n + 2], square(psi[n - 1])),
                                    mul(psi[n - 2], square(psi[n + 1]))));
    // divide by psi_2 = 2y, using 1/y = y/f
    if (t.y) {
      psi.push_back({t.poly * Rational(1, 2), false});
    } else {
      psi.push_back({divide_exact(t.poly, legendre_f()) * Rational(1, 2), true});
    }
  }
  return psi;
}

}  // namespace

SparsePoly legendre_f() {
  const SparsePoly x = x_var();
  return x * (x - constant(1)) * (x - lambda_var());
}

Rational recurrence_coefficient(RecurrenceCoefficient variant, int k) {
  switch (variant) {
    case RecurrenceCoefficient::printed: return Rational(-k) + Rational(1, 2);
    case RecurrenceCoefficient::derived: return -(Rational(k) + Rational(1, 2));
  }
  throw std::invalid_argument("unknown recurrence variant");
}

SparsePoly recurrence_step(const SparsePoly& p, int k, RecurrenceCoefficient variant) {
  const SparsePoly f = legendre_f();
  return derivative(p, kX) * f + p * derivative(f, kX) * recurrence_coefficient(variant, k);
}

InflectionPoly basic_inflection(int k) {
  if (k < 0) throw PreconditionError("basic_inflection needs k >= 0");
  return {1, k, basic_cache().get(k)};
}

std::vector<DerivativeForm> derivative_oracle_sequence(int max_order) {
  if (max_order < 1) throw PreconditionError("derivative order must be at least 1");
  const SparsePoly f = legendre_f();
  const SparsePoly df = derivative(f, kX);
  // D^m y = y * num / den with den a constant multiple of a power of f.
  SparsePoly num = df;
  SparsePoly den = f * Rational(2);
  std::vector<DerivativeForm> out;
  for (int m = 1;; ++m) {
    // cancel common f factors
    while (true) {
      auto qn = try_divide_exact(num, f);
      auto qd = try_divide_exact(den, f);
      if (!qn || !qd) break;
      num = std::move(*qn);
      den = std::move(*qd);
    }
    int power = 0;
    SparsePoly rest = den;
    while (auto q = try_divide_exact(rest, f)) {
      rest = std::move(*q);
      ++power;
    }
    if (!rest.is_constant() || rest.is_zero()) {
      throw std::logic_error("derivative oracle: denominator is not a power of f");
    }
    out.push_back({m, num * (Rational(1) / rest.leading_term().second), power});
    if (m == max_order) break;
    // D(y N/F) = y [ N D(f) F / (2f) + N' F - N F' ] / F^2
    //          = y [ N D(f) F + 2f (N' F - N F') ] / (2 f F^2)
    const SparsePoly dnum = derivative(num, kX);
    const SparsePoly dden = derivative(den, kX);
    SparsePoly next_num = num * df * den + f * (dnum * den - num * dden) * Rational(2);
    SparsePoly next_den = f * den * den * Rational(2);
    num = std::move(next_num);
    den = std::move(next_den);
  }
  return out;
}

DerivativeForm derivative_oracle(int m) { return derivative_oracle_sequence(m).back(); }

CoefficientCalibration calibrate_recurrence(int max_order) {
  const auto oracle = derivative_oracle_sequence(max_order);
  CoefficientCalibration cal{max_order, true, true};
  for (auto variant : {RecurrenceCoefficient::printed, RecurrenceCoefficient::derived}) {
    bool ok = true;
    SparsePoly p = derivative(legendre_f(), kX) * Rational(1, 2);
    for (int m = 1; m <= max_order && ok; ++m) {
      ok = oracle[m - 1].f_power == m && oracle[m - 1].numerator == p;
      p = recurrence_step(p, m - 1, variant);
    }
    (variant == RecurrenceCoefficient::printed ? cal.printed_matches : cal.derived_matches) = ok;
  }
  return cal;
}

Integer falling_factorial(long a, long i) {
  if (a < 0 || i < 0) throw PreconditionError("falling factorial needs non-negative inputs");
  Integer r(1);
  for (long j = 0; j < i; ++j) r *= a - j;
  return r;
}

std::string q_variable(int ell) { return "t[" + std::to_string(ell) + "]"; }

QTemplate q_template(int mu, int n) {
  if (mu < 1) throw PreconditionError("q_template needs mu >= 1");
  if (n < 2) throw PreconditionError("q_template needs n >= 2");
  std::vector<std::string> vars;
  for (int ell = 1 - mu; ell <= mu - 1; ++ell) vars.push_back(q_variable(ell));
  PolyMatrix m(mu, std::vector<SparsePoly>(mu));
  for (int i = 0; i < mu; ++i) {
    for (int j = 0; j < mu; ++j) {
      m[i][j] = SparsePoly::variable(vars, q_variable(j - i)) *
                Rational(falling_factorial(n + j, i));
    }
  }
  return {mu, n, det_polymatrix(m)};
}

SparsePoly q_substitution_unchecked(int mu, int k) {
  if (mu < 1 || k + 1 - mu < 0) throw PreconditionError("q substitution needs k + 1 >= mu >= 1");
  const int n = k + 1;
  const QTemplate q = q_template(mu, n);
  std::map<std::string, SparsePoly> images;
  for (int ell = 1 - mu; ell <= mu - 1; ++ell) {
    images.emplace(q_variable(ell), basic_inflection(n + ell - 1).poly);
  }
  return compose(q.poly, images);
}

SparsePoly wronskian_unchecked(int mu, int k) {
  if (mu < 1 || k + 1 - mu < 0) throw PreconditionError("wronskian needs k + 1 >= mu >= 1");
  const auto forms = derivative_oracle_sequence(k + mu);
  PolyMatrix m(mu, std::vector<SparsePoly>(mu));
  for (int i = 0; i < mu; ++i) {
    for (int j = 0; j < mu; ++j) {
      const int order = k + 1 + j - i;
      const DerivativeForm& d = forms[order - 1];
      if (d.f_power != order) {
        throw std::logic_error("derivative oracle f-power does not match its order");
      }
      m[i][j] = d.numerator * Rational(falling_factorial(k + 1 + j, i));
    }
  }
  return det_polymatrix(m);
}

InflectionPoly general_inflection(int mu, int k) {
  require_series_range(mu, k);
  if (mu == 1) return basic_inflection(k);
  return {mu, k, q_substitution_unchecked(mu, k)};
}

InflectionPoly wronskian_direct(int mu, int k) {
  require_series_range(mu, k);
  return {mu, k, wronskian_unchecked(mu, k)};
}

SparsePoly division_polynomial(int m) {
  if (m < 1) throw PreconditionError("division polynomial index must be at least 1");
  return psi_table(m)[m].poly;
}

TorsionReport torsion_check(int k, const Rational& lambda0) {
  if (k < 2) throw PreconditionError("torsion check needs k >= 2");
  if (lambda0 == 0 || lambda0 == 1) {
    throw PreconditionError("degenerate Legendre parameter " + to_string(lambda0));
  }
  TorsionReport r;
  r.k = k;
  r.lambda0 = lambda0;
  const SparsePoly p = specialize(general_inflection(k - 1, k).poly, kLambda, lambda0);
  const SparsePoly g = specialize(division_polynomial(2 * k), kLambda, lambda0);
  r.inflection_degree = p.total_degree();
  r.division_degree = g.total_degree();
  const int expected = 2 * k * k - 2;
  if (r.inflection_degree != expected || r.division_degree != expected) {
    r.diagnostics = "x-degrees " + std::to_string(r.inflection_degree) + " and " +
                    std::to_string(r.division_degree) + ", expected " + std::to_string(expected);
    return r;
  }
  const DensePoly dp = DensePoly::from_sparse(p);
  const DensePoly dg = DensePoly::from_sparse(g);
  r.ratio = dp.lead() / dg.lead();
  r.pass = dp.monic() == dg.monic();
  if (!r.pass) r.diagnostics = "monic normalizations differ";
  return r;
}

long predicted_delta(int k) {
  if (k < 1) throw PreconditionError("predicted_delta needs k >= 1");
  const long kk = k;
  return kk * kk / 2 + kk;
}

long predicted_genus(int k) {
  if (k < 1) throw PreconditionError("predicted_genus needs k >= 1");
  const long kk = k;
  return (2 * kk + 1) * (2 * kk) / 2 - 3 * (kk * kk / 2) - 3 * kk;
}

}  // namespace inflect

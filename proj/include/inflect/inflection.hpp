// Inflection polynomials of the series {1, x, ..., x^k, y, yx, ..., yx^(mu-1)}
// on the Legendre curve y^2 = x(x-1)(x-lambda), together with the independent
// constructions used to cross-check them.
#pragma once

#include "inflect/poly.hpp"

#include <string>
#include <vector>

namespace inflect {

inline const std::string kX = "x";
inline const std::string kLambda = "lambda";
inline const std::vector<std::string> kXL = {kX, kLambda};

/// P_{mu,k} as a polynomial in (x, lambda).
/// deg_x = 2 mu (k+1) and deg_lambda = mu (k+1) hold for every instance
/// built by this module.
struct InflectionPoly {
  int mu = 0;
  int k = 0;
  SparsePoly poly;
};

/// Q_{mu,n}: determinant of ((n+j)_(i) t_{j-i}) in the variables
/// t_{1-mu}, ..., t_{mu-1}; integer coefficients, homogeneous of degree mu.
struct QTemplate {
  int mu = 0;
  int n = 0;
  SparsePoly poly;
};

/// D^m y = y * numerator / f^f_power, with no f left to cancel.
struct DerivativeForm {
  int order = 0;
  SparsePoly numerator;
  int f_power = 0;
};

/// x^3 - (1+lambda) x^2 + lambda x.
SparsePoly legendre_f();

/// The two readings of the first-order recurrence coefficient.
/// `printed` is (-k + 1/2); `derived` is -(k + 1/2), which is what direct
/// differentiation of y^2 = f gives. Only `derived` reproduces the
/// derivative oracle (see calibrate_recurrence), so basic_inflection uses it.
enum class RecurrenceCoefficient { printed, derived };

Rational recurrence_coefficient(RecurrenceCoefficient variant, int k);

/// P_{1,k+1} = D(P_{1,k}) f + c(k) P_{1,k} D(f).
SparsePoly recurrence_step(const SparsePoly& p, int k, RecurrenceCoefficient variant);

/// Seed D(f)/2 iterated k times. Results are memoized per process.
InflectionPoly basic_inflection(int k);

/// D^m y by repeated quotient-rule differentiation of y' = y D(f) / (2f),
/// cancelling common powers of f after each step. Shares no code with the
/// recurrence.
DerivativeForm derivative_oracle(int m);
/// Forms for orders 1..max_order in one pass.
std::vector<DerivativeForm> derivative_oracle_sequence(int max_order);

struct CoefficientCalibration {
  int max_order = 0;
  bool printed_matches = false;
  bool derived_matches = false;
};

/// Runs both recurrence variants against the derivative oracle for orders
/// 1..max_order.
CoefficientCalibration calibrate_recurrence(int max_order);

/// a (a-1) ... (a-i+1); zero when i > a. Negative inputs are rejected.
Integer falling_factorial(long a, long i);

/// Variable name used for t_ell in QTemplate polynomials.
std::string q_variable(int ell);

QTemplate q_template(int mu, int n);

/// Q_{mu,n} with t_ell replaced by P_{1,n+ell-1}, n = k+1. Requires k > mu.
InflectionPoly general_inflection(int mu, int k);

/// Determinant of ((k+1+j)_(i) D^{k+1+j-i} y) built from derivative_oracle
/// entries. Row i carries f^i and column j carries f^-j after factoring out
/// (y f^-(k+1))^mu, so every entry becomes a polynomial. Requires k > mu.
InflectionPoly wronskian_direct(int mu, int k);

/// The two determinant constructions without the k > mu range check; they
/// only need k + 1 - mu >= 0. Used to probe parameters outside the stated
/// range.
SparsePoly q_substitution_unchecked(int mu, int k);
SparsePoly wronskian_unchecked(int mu, int k);

/// Classical division polynomial of y^2 = x^3 + a2 x^2 + a4 x with
/// a2 = -(1+lambda), a4 = lambda. Odd m gives psi_m; even m gives
/// g_m = psi_m / y, so g_2 = 2.
SparsePoly division_polynomial(int m);

struct TorsionReport {
  int k = 0;
  Rational lambda0;
  bool pass = false;
  int inflection_degree = -1;
  int division_degree = -1;
  /// lead(P_{k-1,k}) / lead(g_{2k}) at lambda0.
  Rational ratio;
  std::string diagnostics;
};

/// Compares P_{k-1,k}(x, lambda0) with g_{2k}(x, lambda0) up to a nonzero
/// constant. Requires k >= 2 and lambda0 not in {0, 1}.
TorsionReport torsion_check(int k, const Rational& lambda0);

/// floor(k^2/2) + k.
long predicted_delta(int k);
/// binom(2k+1, 2) - 3 floor(k^2/2) - 3k. Negative for k = 2.
long predicted_genus(int k);

}  // namespace inflect

// Sparse multivariate polynomials over the rationals.
#pragma once

#include "inflect/rational.hpp"

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace inflect {

using Exponents = std::vector<unsigned>;

/// Graded lexicographic order, largest first. Earlier variables are more
/// significant among monomials of equal total degree.
struct GrlexGreater {
  bool operator()(const Exponents& a, const Exponents& b) const;
};

/// Raised when two operands live over different variable tuples, or a
/// variable name is not part of a tuple.
class VariableError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Polynomial in a declared, ordered tuple of variables. Terms are kept in
/// grlex-descending order and no stored coefficient is zero.
class SparsePoly {
 public:
  using TermMap = std::map<Exponents, Rational, GrlexGreater>;

  SparsePoly() = default;
  explicit SparsePoly(std::vector<std::string> vars);

  static SparsePoly constant(std::vector<std::string> vars, const Rational& c);
  static SparsePoly variable(std::vector<std::string> vars, std::string_view name);
  static SparsePoly monomial(std::vector<std::string> vars, Exponents e, const Rational& c);

  const std::vector<std::string>& vars() const { return vars_; }
  const TermMap& terms() const { return terms_; }
  std::size_t arity() const { return vars_.size(); }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;

  /// Index of `name` in the variable tuple; throws VariableError if absent.
  std::size_t var_index(std::string_view name) const;
  bool has_var(std::string_view name) const;

  /// -1 for the zero polynomial.
  int total_degree() const;
  int degree_in(std::size_t var) const;
  int degree_in(std::string_view name) const { return degree_in(var_index(name)); }

  Rational coefficient(const Exponents& e) const;
  /// Leading term in grlex order. Requires a nonzero polynomial.
  const std::pair<const Exponents, Rational>& leading_term() const;

  /// Adds c·x^e, dropping the term if it cancels.
  void add_term(const Exponents& e, const Rational& c);

  SparsePoly& operator+=(const SparsePoly& o);
  SparsePoly& operator-=(const SparsePoly& o);
  SparsePoly& operator*=(const Rational& c);

  friend SparsePoly operator+(SparsePoly a, const SparsePoly& b) { return a += b; }
  friend SparsePoly operator-(SparsePoly a, const SparsePoly& b) { return a -= b; }
  friend SparsePoly operator*(const SparsePoly& a, const SparsePoly& b);
  friend SparsePoly operator*(SparsePoly a, const Rational& c) { return a *= c; }
  friend SparsePoly operator*(const Rational& c, SparsePoly a) { return a *= c; }
  SparsePoly operator-() const;

  bool operator==(const SparsePoly& o) const = default;

 private:
  void require_same_vars(const SparsePoly& o) const;

  std::vector<std::string> vars_;
  TermMap terms_;
};

enum class ArithOp { add, sub, mul };
SparsePoly poly_arith(const SparsePoly& a, const SparsePoly& b, ArithOp op);

SparsePoly pow(const SparsePoly& p, unsigned n);

SparsePoly derivative(const SparsePoly& p, std::string_view var);

/// Exact value at a point; every variable of p must be assigned.
Rational evaluate(const SparsePoly& p, const std::map<std::string, Rational>& point);

struct AffineMap {
  Rational scale;
  Rational shift;
};

/// Replaces each mapped variable v by scale·v + shift.
SparsePoly substitute_affine(const SparsePoly& p, const std::map<std::string, AffineMap>& map);

/// Multiplies each term by new_var^(target_degree - deg term). The new
/// variable is appended to the tuple.
SparsePoly homogenize(const SparsePoly& p, std::string_view new_var, int target_degree);

/// Sets `var` to 1 and drops it from the tuple.
SparsePoly dehomogenize(const SparsePoly& p, std::string_view var);

/// Sets `var` to `value` and drops it from the tuple.
SparsePoly specialize(const SparsePoly& p, std::string_view var, const Rational& value);

SparsePoly rename_variable(const SparsePoly& p, std::string_view from, std::string_view to);

/// Same polynomial expressed over a different tuple. Variables of p missing
/// from `vars` must not occur in p.
SparsePoly reorder_vars(const SparsePoly& p, const std::vector<std::string>& vars);

/// Substitutes every variable of p by a polynomial over a common target tuple.
SparsePoly compose(const SparsePoly& p, const std::map<std::string, SparsePoly>& images);

/// Coefficients of p as a polynomial in `var`, lowest power first, each over
/// the remaining variables.
std::vector<SparsePoly> coefficients_in(const SparsePoly& p, std::string_view var);

/// Quotient a/b; throws std::domain_error if b does not divide a exactly.
SparsePoly divide_exact(const SparsePoly& a, const SparsePoly& b);
/// Quotient a/b when the division is exact, nullopt otherwise.
std::optional<SparsePoly> try_divide_exact(const SparsePoly& a, const SparsePoly& b);

/// Least common multiple of the coefficient denominators (1 for zero).
Integer denominator_lcm(const SparsePoly& p);

bool is_homogeneous(const SparsePoly& p, int degree);

/// Canonical interchange JSON: compact, grlex-descending, reduced fractions.
std::string to_json(const SparsePoly& p);
SparsePoly from_json(std::string_view text);

/// Human-readable expansion such as "3/2*x^2 - lambda*x + 1".
std::string to_text(const SparsePoly& p);

}  // namespace inflect

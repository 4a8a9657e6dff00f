// Univariate algorithms over Q: division, gcd, Sturm chains, real root
// isolation by bisection.
//
// The public surface takes single-variable SparsePoly values; the work is
// done on dense coefficient vectors.
#pragma once

#include "inflect/poly.hpp"

#include <optional>
#include <vector>

namespace inflect {

/// Half-open interval (lo, hi] containing exactly one root of its target
/// polynomial. Endpoints produced by isolate_real_roots are never roots, so
/// the squarefree part changes sign strictly across the interval.
struct IsolatingInterval {
  Rational lo;
  Rational hi;

  Rational width() const { return hi - lo; }
  bool operator==(const IsolatingInterval&) const = default;
};

struct SturmChain {
  std::vector<SparsePoly> seq;
};

/// Dense coefficients, constant term first. Trailing zeros are stripped so
/// the zero polynomial is the empty vector.
class DensePoly {
 public:
  DensePoly() = default;
  explicit DensePoly(std::vector<Rational> coeffs);
  static DensePoly from_sparse(const SparsePoly& p);
  SparsePoly to_sparse(const std::string& var) const;

  const std::vector<Rational>& coeffs() const { return c_; }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const Rational& lead() const { return c_.back(); }

  Rational operator()(const Rational& x) const;
  /// Sign of p(x) without forming the full rational value.
  int sign_at(const Rational& x) const;

  DensePoly derivative() const;
  DensePoly monic() const;

  bool operator==(const DensePoly&) const = default;

 private:
  void trim();
  std::vector<Rational> c_;
};

struct DivMod {
  DensePoly quotient;
  DensePoly remainder;
};
DivMod divmod(const DensePoly& a, const DensePoly& b);
DensePoly operator*(const DensePoly& a, const DensePoly& b);
DensePoly operator-(const DensePoly& a, const DensePoly& b);
/// Monic gcd; gcd(0, 0) is 0.
DensePoly gcd(const DensePoly& a, const DensePoly& b);
DensePoly squarefree_part(const DensePoly& p);
/// Largest m with (x - root)^m dividing p. p must be nonzero.
unsigned root_multiplicity(const DensePoly& p, const Rational& root);

/// Monic gcd of two polynomials in the same single variable.
SparsePoly gcd_univariate(const SparsePoly& a, const SparsePoly& b);

/// p0 = p, p1 = p', p(i+1) = -rem(p(i-1), p(i)); stops at the last nonzero
/// remainder.
SturmChain sturm_chain(const SparsePoly& p);

/// Every real root lies strictly inside (-B, B) with B = 1 + max|c_i / c_lead|.
Rational cauchy_bound(const DensePoly& p);

/// Number of distinct real roots in (lo, hi]. A missing bound stands for
/// the corresponding infinity and is realised through the Cauchy bound. The
/// count runs on the squarefree part, so repeated roots are counted once
/// and roots sitting exactly on an endpoint are handled.
int sturm_count(const SparsePoly& p, const std::optional<Rational>& lo,
                const std::optional<Rational>& hi);
int sturm_count(const DensePoly& p, const std::optional<Rational>& lo,
                const std::optional<Rational>& hi);

/// One interval per distinct real root, sorted ascending.
std::vector<IsolatingInterval> isolate_real_roots(const SparsePoly& p);
std::vector<IsolatingInterval> isolate_real_roots(const DensePoly& p);

/// Default refinement target: 2^-40.
Rational default_refinement_width();

/// Bisects iv until its width is at most `width`. The result still isolates
/// the same root with non-root endpoints.
IsolatingInterval refine(const DensePoly& p, IsolatingInterval iv, const Rational& width);
IsolatingInterval refine(const SparsePoly& p, const IsolatingInterval& iv,
                         const Rational& width = default_refinement_width());

/// Sign of q at the unique root of p isolated by iv. Exact zero is found via
/// gcd; otherwise iv is refined until q has no root inside it. Throws
/// std::domain_error if iv does not isolate a root of p.
int sign_at_root(const SparsePoly& q, const SparsePoly& p, const IsolatingInterval& iv);
int sign_at_root(const DensePoly& q, const DensePoly& p, const IsolatingInterval& iv);

}  // namespace inflect

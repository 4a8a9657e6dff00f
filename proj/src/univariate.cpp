#include "inflect/univariate.hpp"

#include <stdexcept>

namespace inflect {

namespace {

const std::string& only_var(const SparsePoly& p) {
  if (p.arity() != 1) throw VariableError("expected a univariate polynomial");
  return p.vars()[0];
}

void require_same_var(const SparsePoly& a, const SparsePoly& b) {
  if (only_var(a) != only_var(b)) throw VariableError("univariate operands use different variables");
}

// Squarefree Sturm sequence with cached sign evaluation.
class Sturm {
 public:
  explicit Sturm(const DensePoly& squarefree) {
    chain_.push_back(squarefree);
    if (squarefree.degree() < 1) return;
    chain_.push_back(squarefree.derivative());
    while (true) {
      DensePoly r = divmod(chain_[chain_.size() - 2], chain_.back()).remainder;
      if (r.is_zero()) break;
      // scaling by a positive constant keeps sign variations and tames growth
      const Rational s = abs(r.lead());
      std::vector<Rational> c = r.coeffs();
      for (auto& v : c) v = -v / s;
      chain_.emplace_back(std::move(c));
    }
  }

  int variations(const Rational& x) const {
    int count = 0;
    int last = 0;
    for (const auto& p : chain_) {
      const int s = p.sign_at(x);
      if (s == 0) continue;
      if (last != 0 && s != last) ++count;
      last = s;
    }
    return count;
  }

 private:
  std::vector<DensePoly> chain_;
};

Rational bisection_point(const DensePoly& q, const Rational& lo, const Rational& hi) {
  Rational mid = (lo + hi) / 2;
  Rational step = (hi - lo) / 4;
  // nudge toward hi until the split point is not a root; q has finitely many
  while (q.sign_at(mid) == 0) {
    mid = (lo + hi) / 2 + step;
    step /= 2;
  }
  return mid;
}

}  // namespace

DensePoly::DensePoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

void DensePoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

DensePoly DensePoly::from_sparse(const SparsePoly& p) {
  only_var(p);
  std::vector<Rational> c(static_cast<std::size_t>(std::max(p.total_degree(), 0)) + 1);
  for (const auto& [e, v] : p.terms()) c[e[0]] = v;
  return DensePoly(std::move(c));
}

SparsePoly DensePoly::to_sparse(const std::string& var) const {
  SparsePoly out({var});
  for (std::size_t i = 0; i < c_.size(); ++i) out.add_term({static_cast<unsigned>(i)}, c_[i]);
  return out;
}

Rational DensePoly::operator()(const Rational& x) const {
  Rational acc(0);
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

int DensePoly::sign_at(const Rational& x) const {
  if (c_.empty()) return 0;
  // sign of sum c_i a^i b^(d-i) with x = a/b, b > 0, after clearing denominators
  Integer l(1);
  for (const auto& v : c_) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), v.get_den_mpz_t());
  const Integer& a = x.get_num();
  const Integer& b = x.get_den();
  Integer acc = Integer(c_.back() * l);
  Integer bpow(1);
  for (std::size_t i = c_.size() - 1; i-- > 0;) {
    bpow *= b;
    acc = acc * a + Integer(c_[i] * l) * bpow;
  }
  return sgn(acc);
}

DensePoly DensePoly::derivative() const {
  if (c_.size() <= 1) return {};
  std::vector<Rational> d(c_.size() - 1);
  for (std::size_t i = 1; i < c_.size(); ++i) d[i - 1] = c_[i] * static_cast<unsigned long>(i);
  return DensePoly(std::move(d));
}

DensePoly DensePoly::monic() const {
  if (c_.empty()) return {};
  std::vector<Rational> m = c_;
  const Rational l = c_.back();
  for (auto& v : m) v /= l;
  return DensePoly(std::move(m));
}

DivMod divmod(const DensePoly& a, const DensePoly& b) {
  if (b.is_zero()) throw std::domain_error("polynomial division by zero");
  std::vector<Rational> r = a.coeffs();
  const int db = b.degree();
  if (a.degree() < db) return {DensePoly{}, a};
  std::vector<Rational> q(static_cast<std::size_t>(a.degree() - db) + 1);
  const Rational& lb = b.lead();
  for (int i = a.degree(); i >= db; --i) {
    const Rational f = r[i] / lb;
    q[i - db] = f;
    if (f == 0) continue;
    for (int j = 0; j <= db; ++j) r[i - db + j] -= f * b.coeffs()[j];
  }
  r.resize(static_cast<std::size_t>(db));
  return {DensePoly(std::move(q)), DensePoly(std::move(r))};
}

DensePoly operator*(const DensePoly& a, const DensePoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> c(a.coeffs().size() + b.coeffs().size() - 1);
  for (std::size_t i = 0; i < a.coeffs().size(); ++i) {
    for (std::size_t j = 0; j < b.coeffs().size(); ++j) c[i + j] += a.coeffs()[i] * b.coeffs()[j];
  }
  return DensePoly(std::move(c));
}

DensePoly operator-(const DensePoly& a, const DensePoly& b) {
  std::vector<Rational> c(std::max(a.coeffs().size(), b.coeffs().size()));
  for (std::size_t i = 0; i < a.coeffs().size(); ++i) c[i] += a.coeffs()[i];
  for (std::size_t i = 0; i < b.coeffs().size(); ++i) c[i] -= b.coeffs()[i];
  return DensePoly(std::move(c));
}

DensePoly gcd(const DensePoly& a, const DensePoly& b) {
  DensePoly x = a.monic();
  DensePoly y = b.monic();
  while (!y.is_zero()) {
    DensePoly r = divmod(x, y).remainder.monic();
    x = std::move(y);
    y = std::move(r);
  }
  return x;
}

DensePoly squarefree_part(const DensePoly& p) {
  if (p.degree() < 1) return p.monic();
  return divmod(p, gcd(p, p.derivative())).quotient.monic();
}

unsigned root_multiplicity(const DensePoly& p, const Rational& root) {
  if (p.is_zero()) throw std::domain_error("multiplicity in the zero polynomial");
  const DensePoly linear(std::vector<Rational>{-root, Rational(1)});
  unsigned m = 0;
  DensePoly cur = p;
  while (true) {
    DivMod qr = divmod(cur, linear);
    if (!qr.remainder.is_zero()) return m;
    cur = std::move(qr.quotient);
    ++m;
  }
}

SparsePoly gcd_univariate(const SparsePoly& a, const SparsePoly& b) {
  require_same_var(a, b);
  return gcd(DensePoly::from_sparse(a), DensePoly::from_sparse(b)).to_sparse(a.vars()[0]);
}

SturmChain sturm_chain(const SparsePoly& p) {
  const std::string& v = only_var(p);
  SturmChain out;
  DensePoly prev = DensePoly::from_sparse(p);
  if (prev.is_zero()) throw std::domain_error("Sturm chain of the zero polynomial");
  out.seq.push_back(prev.to_sparse(v));
  DensePoly cur = prev.derivative();
  while (!cur.is_zero()) {
    out.seq.push_back(cur.to_sparse(v));
    DensePoly r = divmod(prev, cur).remainder;
    std::vector<Rational> neg = r.coeffs();
    for (auto& c : neg) c = -c;
    prev = std::move(cur);
    cur = DensePoly(std::move(neg));
  }
  return out;
}

Rational cauchy_bound(const DensePoly& p) {
  if (p.is_zero()) throw std::domain_error("Cauchy bound of the zero polynomial");
  Rational m(0);
  for (int i = 0; i < p.degree(); ++i) {
    const Rational r = abs(p.coeffs()[i] / p.lead());
    if (r > m) m = r;
  }
  return m + 1;
}

int sturm_count(const DensePoly& p, const std::optional<Rational>& lo,
                const std::optional<Rational>& hi) {
  if (p.is_zero()) throw std::domain_error("sturm_count of the zero polynomial");
  if (lo && hi && *lo >= *hi) throw std::invalid_argument("sturm_count needs lo < hi");
  const DensePoly q = squarefree_part(p);
  if (q.degree() < 1) return 0;
  const Rational bound = cauchy_bound(q);
  const Sturm s(q);
  const Rational a = lo ? *lo : Rational(-bound);
  const Rational b = hi ? *hi : bound;
  if (a >= b) return 0;
  return s.variations(a) - s.variations(b);
}

int sturm_count(const SparsePoly& p, const std::optional<Rational>& lo,
                const std::optional<Rational>& hi) {
  return sturm_count(DensePoly::from_sparse(p), lo, hi);
}

std::vector<IsolatingInterval> isolate_real_roots(const DensePoly& p) {
  if (p.is_zero()) throw std::domain_error("root isolation of the zero polynomial");
  const DensePoly q = squarefree_part(p);
  std::vector<IsolatingInterval> out;
  if (q.degree() < 1) return out;
  const Sturm s(q);
  const Rational bound = cauchy_bound(q);

  struct Pending {
    Rational lo, hi;
    int vlo, vhi;
  };
  // depth-first, left half first, so roots come out ascending
  std::vector<Pending> stack;
  stack.push_back({-bound, bound, s.variations(-bound), s.variations(bound)});
  while (!stack.empty()) {
    Pending cur = std::move(stack.back());
    stack.pop_back();
    const int n = cur.vlo - cur.vhi;
    if (n == 0) continue;
    if (n == 1) {
      out.push_back({cur.lo, cur.hi});
      continue;
    }
    const Rational mid = bisection_point(q, cur.lo, cur.hi);
    const int vmid = s.variations(mid);
    stack.push_back({mid, cur.hi, vmid, cur.vhi});
    stack.push_back({cur.lo, mid, cur.vlo, vmid});
  }
  return out;
}

std::vector<IsolatingInterval> isolate_real_roots(const SparsePoly& p) {
  only_var(p);
  return isolate_real_roots(DensePoly::from_sparse(p));
}

Rational default_refinement_width() { return pow2_neg(40); }

IsolatingInterval refine(const DensePoly& p, IsolatingInterval iv, const Rational& width) {
  if (width <= 0) throw std::invalid_argument("refinement width must be positive");
  const DensePoly q = squarefree_part(p);
  const int slo = q.sign_at(iv.lo);
  const int shi = q.sign_at(iv.hi);
  if (slo == 0 || shi == 0 || slo == shi) {
    throw std::domain_error("interval does not isolate a sign-changing root");
  }
  while (iv.width() > width) {
    const Rational mid = (iv.lo + iv.hi) / 2;
    const int s = q.sign_at(mid);
    if (s == 0) {
      // exact hit: the root is mid and it is the only root in the interval
      Rational half = width / 2;
      if (half * 4 > iv.width()) half = iv.width() / 4;
      return {mid - half, mid + half};
    }
    if (s == slo) {
      iv.lo = mid;
    } else {
      iv.hi = mid;
    }
  }
  return iv;
}

IsolatingInterval refine(const SparsePoly& p, const IsolatingInterval& iv, const Rational& width) {
  return refine(DensePoly::from_sparse(p), iv, width);
}

int sign_at_root(const DensePoly& q, const DensePoly& p, const IsolatingInterval& iv) {
  if (p.is_zero()) throw std::domain_error("sign_at_root: p is zero");
  const DensePoly ps = squarefree_part(p);
  if (iv.lo >= iv.hi || ps.sign_at(iv.lo) == 0 || ps.sign_at(iv.hi) == 0 ||
      sturm_count(ps, iv.lo, iv.hi) != 1) {
    throw std::domain_error("sign_at_root: interval does not isolate exactly one root");
  }
  if (q.is_zero()) return 0;
  const DensePoly g = gcd(q, ps);
  if (g.degree() >= 1 && g.sign_at(iv.lo) != g.sign_at(iv.hi)) return 0;
  IsolatingInterval cur = iv;
  const DensePoly qs = squarefree_part(q);
  int slo = ps.sign_at(cur.lo);
  const Sturm chain(qs);
  while (qs.degree() >= 1 && chain.variations(cur.lo) - chain.variations(cur.hi) > 0) {
    const Rational mid = bisection_point(ps, cur.lo, cur.hi);
    const int s = ps.sign_at(mid);
    if (s == slo) {
      cur.lo = mid;
    } else {
      cur.hi = mid;
    }
    slo = ps.sign_at(cur.lo);
  }
  return q.sign_at(cur.hi);
}

int sign_at_root(const SparsePoly& q, const SparsePoly& p, const IsolatingInterval& iv) {
  require_same_var(q, p);
  return sign_at_root(DensePoly::from_sparse(q), DensePoly::from_sparse(p), iv);
}

}  // namespace inflect

#include "inflect/poly.hpp"

#include "json.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace inflect {

namespace {

unsigned total(const Exponents& e) { return std::accumulate(e.begin(), e.end(), 0u); }

std::string join(const std::vector<std::string>& v) {
  std::string out = "(";
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? "," : "") + v[i];
  return out + ")";
}

}  // namespace

bool GrlexGreater::operator()(const Exponents& a, const Exponents& b) const {
  const unsigned ta = total(a);
  const unsigned tb = total(b);
  if (ta != tb) return ta > tb;
  return std::lexicographical_compare(b.begin(), b.end(), a.begin(), a.end());
}

SparsePoly::SparsePoly(std::vector<std::string> vars) : vars_(std::move(vars)) {
  for (std::size_t i = 0; i < vars_.size(); ++i) {
    for (std::size_t j = i + 1; j < vars_.size(); ++j) {
      if (vars_[i] == vars_[j]) throw VariableError("duplicate variable " + vars_[i]);
    }
  }
}

SparsePoly SparsePoly::constant(std::vector<std::string> vars, const Rational& c) {
  SparsePoly p(std::move(vars));
  p.add_term(Exponents(p.arity(), 0), c);
  return p;
}

SparsePoly SparsePoly::variable(std::vector<std::string> vars, std::string_view name) {
  SparsePoly p(std::move(vars));
  Exponents e(p.arity(), 0);
  e[p.var_index(name)] = 1;
  p.add_term(e, Rational(1));
  return p;
}

SparsePoly SparsePoly::monomial(std::vector<std::string> vars, Exponents e, const Rational& c) {
  SparsePoly p(std::move(vars));
  if (e.size() != p.arity()) throw VariableError("exponent vector length does not match arity");
  p.add_term(e, c);
  return p;
}

bool SparsePoly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && total(terms_.begin()->first) == 0);
}

std::size_t SparsePoly::var_index(std::string_view name) const {
  for (std::size_t i = 0; i < vars_.size(); ++i) {
    if (vars_[i] == name) return i;
  }
  throw VariableError("unknown variable '" + std::string(name) + "' in " + join(vars_));
}

bool SparsePoly::has_var(std::string_view name) const {
  return std::find(vars_.begin(), vars_.end(), name) != vars_.end();
}

int SparsePoly::total_degree() const {
  // grlex puts the highest total degree first
  return terms_.empty() ? -1 : static_cast<int>(total(terms_.begin()->first));
}

int SparsePoly::degree_in(std::size_t var) const {
  if (var >= vars_.size()) throw VariableError("variable index out of range");
  int d = -1;
  for (const auto& [e, c] : terms_) d = std::max(d, static_cast<int>(e[var]));
  return d;
}

Rational SparsePoly::coefficient(const Exponents& e) const {
  const auto it = terms_.find(e);
  return it == terms_.end() ? Rational(0) : it->second;
}

const std::pair<const Exponents, Rational>& SparsePoly::leading_term() const {
  if (terms_.empty()) throw std::domain_error("leading term of the zero polynomial");
  return *terms_.begin();
}

void SparsePoly::add_term(const Exponents& e, const Rational& c) {
  if (e.size() != vars_.size()) throw VariableError("exponent vector length does not match arity");
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

void SparsePoly::require_same_vars(const SparsePoly& o) const {
  if (vars_ != o.vars_) {
    throw VariableError("variable tuple mismatch: " + join(vars_) + " vs " + join(o.vars_));
  }
}

SparsePoly& SparsePoly::operator+=(const SparsePoly& o) {
  require_same_vars(o);
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

SparsePoly& SparsePoly::operator-=(const SparsePoly& o) {
  require_same_vars(o);
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

SparsePoly& SparsePoly::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, v] : terms_) v *= c;
  return *this;
}

SparsePoly operator*(const SparsePoly& a, const SparsePoly& b) {
  a.require_same_vars(b);
  SparsePoly out(a.vars_);
  Exponents e(a.arity());
  Rational prod;
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      prod = ca * cb;
      out.add_term(e, prod);
    }
  }
  return out;
}

SparsePoly SparsePoly::operator-() const {
  SparsePoly out = *this;
  for (auto& [e, c] : out.terms_) c = -c;
  return out;
}

SparsePoly poly_arith(const SparsePoly& a, const SparsePoly& b, ArithOp op) {
  switch (op) {
    case ArithOp::add: return a + b;
    case ArithOp::sub: return a - b;
    case ArithOp::mul: return a * b;
  }
  throw std::invalid_argument("unknown arithmetic op");
}

SparsePoly pow(const SparsePoly& p, unsigned n) {
  SparsePoly result = SparsePoly::constant(p.vars(), Rational(1));
  SparsePoly base = p;
  while (n) {
    if (n & 1u) result = result * base;
    n >>= 1;
    if (n) base = base * base;
  }
  return result;
}

SparsePoly derivative(const SparsePoly& p, std::string_view var) {
  const std::size_t v = p.var_index(var);
  SparsePoly out(p.vars());
  for (const auto& [e, c] : p.terms()) {
    if (e[v] == 0) continue;
    Exponents d = e;
    --d[v];
    out.add_term(d, c * e[v]);
  }
  return out;
}

Rational evaluate(const SparsePoly& p, const std::map<std::string, Rational>& point) {
  std::vector<Rational> values(p.arity());
  for (std::size_t i = 0; i < p.arity(); ++i) {
    const auto it = point.find(p.vars()[i]);
    if (it == point.end()) throw VariableError("no value assigned to '" + p.vars()[i] + "'");
    values[i] = it->second;
  }
  Rational sum(0);
  Rational term;
  Rational power;
  for (const auto& [e, c] : p.terms()) {
    term = c;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      mpz_pow_ui(power.get_num_mpz_t(), values[i].get_num_mpz_t(), e[i]);
      mpz_pow_ui(power.get_den_mpz_t(), values[i].get_den_mpz_t(), e[i]);
      term *= power;
    }
    sum += term;
  }
  return sum;
}

SparsePoly compose(const SparsePoly& p, const std::map<std::string, SparsePoly>& images) {
  if (images.empty()) throw VariableError("compose needs at least one image");
  const std::vector<std::string>& target = images.begin()->second.vars();
  std::vector<std::vector<SparsePoly>> powers(p.arity());
  for (std::size_t i = 0; i < p.arity(); ++i) {
    const auto it = images.find(p.vars()[i]);
    if (it == images.end()) throw VariableError("no image for '" + p.vars()[i] + "'");
    if (it->second.vars() != target) throw VariableError("images must share a variable tuple");
    const int d = std::max(p.degree_in(i), 0);
    powers[i].reserve(d + 1);
    powers[i].push_back(SparsePoly::constant(target, Rational(1)));
    for (int k = 1; k <= d; ++k) powers[i].push_back(powers[i].back() * it->second);
  }
  SparsePoly out(target);
  for (const auto& [e, c] : p.terms()) {
    SparsePoly term = SparsePoly::constant(target, c);
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i]) term = term * powers[i][e[i]];
    }
    out += term;
  }
  return out;
}

SparsePoly substitute_affine(const SparsePoly& p, const std::map<std::string, AffineMap>& map) {
  std::map<std::string, SparsePoly> images;
  for (const auto& name : p.vars()) {
    SparsePoly v = SparsePoly::variable(p.vars(), name);
    const auto it = map.find(name);
    if (it != map.end()) {
      v = v * it->second.scale + SparsePoly::constant(p.vars(), it->second.shift);
    }
    images.emplace(name, std::move(v));
  }
  for (const auto& [name, m] : map) p.var_index(name);
  if (p.arity() == 0) return p;
  return compose(p, images);
}

SparsePoly homogenize(const SparsePoly& p, std::string_view new_var, int target_degree) {
  if (target_degree < p.total_degree()) {
    throw PreconditionError("homogenization degree " + std::to_string(target_degree) +
                            " is below the total degree " + std::to_string(p.total_degree()));
  }
  std::vector<std::string> vars = p.vars();
  vars.emplace_back(new_var);
  SparsePoly out(std::move(vars));
  for (const auto& [e, c] : p.terms()) {
    Exponents h = e;
    h.push_back(static_cast<unsigned>(target_degree) - total(e));
    out.add_term(h, c);
  }
  return out;
}

SparsePoly specialize(const SparsePoly& p, std::string_view var, const Rational& value) {
  const std::size_t v = p.var_index(var);
  std::vector<std::string> vars = p.vars();
  vars.erase(vars.begin() + static_cast<std::ptrdiff_t>(v));
  SparsePoly out(std::move(vars));
  Rational power;
  for (const auto& [e, c] : p.terms()) {
    Exponents r = e;
    r.erase(r.begin() + static_cast<std::ptrdiff_t>(v));
    mpz_pow_ui(power.get_num_mpz_t(), value.get_num_mpz_t(), e[v]);
    mpz_pow_ui(power.get_den_mpz_t(), value.get_den_mpz_t(), e[v]);
    out.add_term(r, c * power);
  }
  return out;
}

SparsePoly dehomogenize(const SparsePoly& p, std::string_view var) {
  return specialize(p, var, Rational(1));
}

SparsePoly rename_variable(const SparsePoly& p, std::string_view from, std::string_view to) {
  std::vector<std::string> vars = p.vars();
  vars[p.var_index(from)] = std::string(to);
  SparsePoly out(std::move(vars));
  for (const auto& [e, c] : p.terms()) out.add_term(e, c);
  return out;
}

SparsePoly reorder_vars(const SparsePoly& p, const std::vector<std::string>& vars) {
  SparsePoly out(vars);
  std::vector<std::optional<std::size_t>> where(p.arity());
  for (std::size_t i = 0; i < p.arity(); ++i) {
    if (out.has_var(p.vars()[i])) where[i] = out.var_index(p.vars()[i]);
  }
  for (const auto& [e, c] : p.terms()) {
    Exponents r(vars.size(), 0);
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (!e[i]) continue;
      if (!where[i]) throw VariableError("variable '" + p.vars()[i] + "' occurs but is dropped");
      r[*where[i]] = e[i];
    }
    out.add_term(r, c);
  }
  return out;
}

std::vector<SparsePoly> coefficients_in(const SparsePoly& p, std::string_view var) {
  const std::size_t v = p.var_index(var);
  std::vector<std::string> rest = p.vars();
  rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(v));
  std::vector<SparsePoly> out(static_cast<std::size_t>(std::max(p.degree_in(v), 0)) + 1,
                              SparsePoly(rest));
  for (const auto& [e, c] : p.terms()) {
    Exponents r = e;
    r.erase(r.begin() + static_cast<std::ptrdiff_t>(v));
    out[e[v]].add_term(r, c);
  }
  return out;
}

std::optional<SparsePoly> try_divide_exact(const SparsePoly& a, const SparsePoly& b) {
  if (a.vars() != b.vars()) throw VariableError("divide_exact: variable tuple mismatch");
  if (b.is_zero()) throw std::domain_error("division by the zero polynomial");
  SparsePoly quotient(a.vars());
  SparsePoly rem = a;
  const Exponents lead_e = b.leading_term().first;
  const Rational lead_c = b.leading_term().second;
  Exponents q(a.arity());
  while (!rem.is_zero()) {
    const auto& [re, rc] = rem.leading_term();
    for (std::size_t i = 0; i < q.size(); ++i) {
      if (re[i] < lead_e[i]) return std::nullopt;
      q[i] = re[i] - lead_e[i];
    }
    const SparsePoly step = SparsePoly::monomial(a.vars(), q, rc / lead_c);
    quotient += step;
    rem -= step * b;
  }
  return quotient;
}

SparsePoly divide_exact(const SparsePoly& a, const SparsePoly& b) {
  auto q = try_divide_exact(a, b);
  if (!q) throw std::domain_error("divide_exact: division is not exact");
  return std::move(*q);
}

Integer denominator_lcm(const SparsePoly& p) {
  Integer l(1);
  for (const auto& [e, c] : p.terms()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
  return l;
}

bool is_homogeneous(const SparsePoly& p, int degree) {
  return std::all_of(p.terms().begin(), p.terms().end(), [&](const auto& t) {
    return static_cast<int>(total(t.first)) == degree;
  });
}

std::string to_json(const SparsePoly& p) {
  nlohmann::ordered_json j;
  j["vars"] = p.vars();
  j["terms"] = nlohmann::ordered_json::array();
  for (const auto& [e, c] : p.terms()) {
    nlohmann::ordered_json t;
    t["e"] = e;
    t["n"] = c.get_num().get_str();
    t["d"] = c.get_den().get_str();
    j["terms"].push_back(std::move(t));
  }
  return j.dump();
}

SparsePoly from_json(std::string_view text) {
  try {
    const auto j = nlohmann::json::parse(text);
    SparsePoly p(j.at("vars").get<std::vector<std::string>>());
    for (const auto& t : j.at("terms")) {
      const auto e = t.at("e").get<Exponents>();
      const Rational c = parse_rational(t.at("n").get<std::string>() + "/" +
                                        t.at("d").get<std::string>());
      if (c == 0) throw std::invalid_argument("zero coefficient stored in polynomial JSON");
      if (p.coefficient(e) != 0) throw std::invalid_argument("repeated exponent in polynomial JSON");
      p.add_term(e, c);
    }
    return p;
  } catch (const nlohmann::json::exception& ex) {
    throw std::invalid_argument(std::string("malformed polynomial JSON: ") + ex.what());
  }
}

std::string to_text(const SparsePoly& p) {
  if (p.is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [e, c] : p.terms()) {
    const Rational mag = abs(c);
    out << (c < 0 ? (first ? "-" : " - ") : (first ? "" : " + "));
    bool has_var = false;
    std::ostringstream mono;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (!e[i]) continue;
      mono << (has_var ? "*" : "") << p.vars()[i];
      if (e[i] > 1) mono << '^' << e[i];
      has_var = true;
    }
    if (!has_var) {
      out << to_string(mag);
    } else {
      if (mag != 1) out << to_string(mag) << '*';
      out << mono.str();
    }
    first = false;
  }
  return out.str();
}

}  // namespace inflect

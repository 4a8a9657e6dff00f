#include "doctest.h"
#include "oracles.hpp"

#include "inflect/inflection.hpp"
#include "inflect/linalg.hpp"
#include "inflect/univariate.hpp"

#include <random>

using namespace inflect;
using oracle::q;

namespace {

const std::vector<std::string> XL = {"x", "lambda"};
const std::vector<std::string> X1 = {"x"};

SparsePoly vx() { return SparsePoly::variable(XL, "x"); }
SparsePoly vl() { return SparsePoly::variable(XL, "lambda"); }
SparsePoly c2(const Rational& c) { return SparsePoly::constant(XL, c); }
SparsePoly ux() { return SparsePoly::variable(X1, "x"); }
SparsePoly c1(const Rational& c) { return SparsePoly::constant(X1, c); }

}  // namespace

TEST_SUITE("exactalg") {
  TEST_CASE("rational parsing is exact") {
    CHECK(parse_rational("3/4") == q(3, 4));
    CHECK(parse_rational("-6/8") == q(-3, 4));
    CHECK(parse_rational("7") == 7);
    CHECK(parse_rational("-1/2").get_den() == 2);
    CHECK_THROWS_AS(parse_rational("0.5"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational("1e3"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational(""), std::invalid_argument);
    CHECK(to_string(q(-3, 4)) == "-3/4");
    CHECK(to_string(q(4, 2)) == "2");
    CHECK(pow2_neg(3) == q(1, 8));
  }

  TEST_CASE("poly_arith examples") {
    const SparsePoly x = ux();
    CHECK(poly_arith(x + c1(1), x - c1(1), ArithOp::add) == c1(2) * x);
    const SparsePoly xl = vx() - vl();
    const SparsePoly zero(XL);
    CHECK(poly_arith(xl, zero, ArithOp::mul).is_zero());
    CHECK(poly_arith(vx() + vl(), vx() - vl(), ArithOp::mul) == vx() * vx() - vl() * vl());
    CHECK(poly_arith(x, x, ArithOp::sub).is_zero());
    CHECK_THROWS_AS(poly_arith(x, vx(), ArithOp::add), VariableError);
  }

  TEST_CASE("no zero coefficient is ever stored") {
    SparsePoly p = vx() + vl();
    p.add_term({1, 0}, -1);
    CHECK(p.size() == 1);
    CHECK(p == vl());
    for (const auto& [e, c] : (vx() * vx() - vx() * vx()).terms()) CHECK(c != 0);
  }

  TEST_CASE("derivative examples") {
    const SparsePoly f = legendre_f();
    const SparsePoly expect = c2(3) * vx() * vx() - c2(2) * (c2(1) + vl()) * vx() + vl();
    CHECK(derivative(f, "x") == expect);
    CHECK(derivative(vx() * vx(), "lambda").is_zero());
    CHECK(derivative(c2(5), "x").is_zero());
    CHECK_THROWS_AS(derivative(f, "z"), VariableError);
  }

  TEST_CASE("evaluate examples") {
    const SparsePoly f = legendre_f();
    CHECK(evaluate(f, {{"x", 2}, {"lambda", -1}}) == 6);
    const SparsePoly p = c2(q(3, 2)) * vx() * vl() + c2(q(-7, 3));
    CHECK(evaluate(p, {{"x", 0}, {"lambda", 0}}) == q(-7, 3));
    // P_{1,1}(2, -1) = (3*16 - 4*0*8 + 6*(-1)*4 - 1)/4 = 23/4
    CHECK(evaluate(basic_inflection(1).poly, {{"x", 2}, {"lambda", -1}}) == q(23, 4));
    CHECK_THROWS(evaluate(f, {{"x", 1}}));
  }

  TEST_CASE("substitute_affine examples") {
    const SparsePoly x = ux();
    CHECK(substitute_affine(x, {{"x", {1, 1}}}) == x + c1(1));
    CHECK(substitute_affine(x * x, {{"x", {-1, 0}}}) == x * x);
    const SparsePoly p = basic_inflection(1).poly;
    CHECK(substitute_affine(p, {{"x", {1, 1}}, {"lambda", {1, 1}}}) ==
          substitute_affine(p, {{"x", {-1, 0}}, {"lambda", {-1, 0}}}));
  }

  TEST_CASE("homogenize and dehomogenize") {
    const SparsePoly x = ux();
    const SparsePoly h = homogenize(x + c1(1), "z", 1);
    const std::vector<std::string> xz = {"x", "z"};
    CHECK(h == SparsePoly::variable(xz, "x") + SparsePoly::variable(xz, "z"));
    const SparsePoly X = SparsePoly::variable(xz, "x");
    const SparsePoly Z = SparsePoly::variable(xz, "z");
    CHECK(dehomogenize(X * X + X * Z + Z * Z, "z") == x * x + x + c1(1));
    const SparsePoly p = basic_inflection(1).poly;
    const SparsePoly hp = homogenize(p, "z", 4);
    CHECK(is_homogeneous(hp, 4));
    CHECK(dehomogenize(hp, "z") == p);
    CHECK_THROWS_AS(homogenize(p, "z", 3), PreconditionError);
  }

  TEST_CASE("specialize examples") {
    CHECK(specialize(legendre_f(), "lambda", -1) == ux() * ux() * ux() - ux());
    const SparsePoly seed = basic_inflection(0).poly;
    CHECK(specialize(seed, "lambda", 0) == c1(q(3, 2)) * ux() * ux() - ux());
    // (3x^4 - 4(1+lambda)x^3 + 6 lambda x^2 - lambda^2)/4 at lambda = -1
    const SparsePoly x = ux();
    CHECK(specialize(basic_inflection(1).poly, "lambda", -1) ==
          c1(q(1, 4)) * (c1(3) * x * x * x * x - c1(6) * x * x - c1(1)));
  }

  TEST_CASE("gcd_univariate examples") {
    const SparsePoly x = ux();
    CHECK(gcd_univariate(x * x - c1(1), x - c1(1)) == x - c1(1));
    CHECK(gcd_univariate(x * x + c1(1), x) == c1(1));
    const SparsePoly p = (x - c1(1)) * (x - c1(1)) * (x + c1(3));
    CHECK(gcd_univariate(p, derivative(p, "x")) == x - c1(1));
    CHECK(gcd_univariate(c1(3) * x - c1(6), SparsePoly(X1)) == x - c1(2));
  }

  TEST_CASE("resultant examples and sign convention") {
    const std::vector<std::string> xab = {"x", "a", "b"};
    const SparsePoly X = SparsePoly::variable(xab, "x");
    const SparsePoly A = SparsePoly::variable(xab, "a");
    const SparsePoly B = SparsePoly::variable(xab, "b");
    const std::vector<std::string> ab = {"a", "b"};
    CHECK(resultant(X - A, X - B, "x") ==
          SparsePoly::variable(ab, "a") - SparsePoly::variable(ab, "b"));
    const SparsePoly x = ux();
    CHECK(resultant(x * x - c1(1), x - c1(1), "x").is_zero());
    const SparsePoly r = resultant(vx() * vx() - vl(), vx() - c2(1), "x");
    const SparsePoly l = SparsePoly::variable({"lambda"}, "lambda");
    const SparsePoly one = SparsePoly::constant({"lambda"}, 1);
    CHECK((r == one - l || r == l - one));
    CHECK_THROWS(resultant(SparsePoly(X1), SparsePoly(X1), "x"));
  }

  TEST_CASE("resultant of planted roots is the product of root differences") {
    const std::vector<Rational> ra = {q(1), q(-2), q(1, 3)};
    const std::vector<Rational> rb = {q(5), q(-1, 2)};
    Rational expect(1);
    for (const auto& a : ra)
      for (const auto& b : rb) expect *= a - b;
    const SparsePoly res = resultant(oracle::planted(ra), oracle::planted(rb), "x");
    CHECK(res.is_constant());
    CHECK(res.coefficient({}) == expect);
  }

  TEST_CASE("resultant vanishes exactly when a common factor is planted") {
    std::mt19937 rng(7);
    const SparsePoly x = ux();
    for (int trial = 0; trial < 30; ++trial) {
      SparsePoly a = oracle::random_poly(rng, X1, 3, 4);
      SparsePoly b = oracle::random_poly(rng, X1, 3, 4);
      if (a.degree_in(0) < 1 || b.degree_in(0) < 1) continue;
      const bool plant = trial % 2 == 0;
      if (plant) {
        const SparsePoly common = x - c1(q(trial, 3));
        a = a * common;
        b = b * common;
      }
      const bool coprime = gcd_univariate(a, b) == c1(1);
      CHECK(resultant(a, b, "x").is_zero() == !coprime);
      if (plant) CHECK_FALSE(coprime);
    }
  }

  TEST_CASE("sturm_count examples") {
    const SparsePoly x = ux();
    CHECK(sturm_count(x * x - c1(2), std::nullopt, std::nullopt) == 2);
    CHECK(sturm_count(x * x + c1(1), std::nullopt, std::nullopt) == 0);
    const SparsePoly p = (x - c1(1)) * (x - c1(1)) * (x + c1(3));
    CHECK(sturm_count(p, std::nullopt, std::nullopt) == 2);
    CHECK(sturm_count(p, Rational(1), std::nullopt) == 0);  // (1, inf)
    CHECK(sturm_count(p, Rational(0), Rational(1)) == 1);   // (0, 1]
    CHECK_THROWS_AS(sturm_count(p, Rational(2), Rational(1)), std::invalid_argument);
    CHECK_THROWS_AS(sturm_count(SparsePoly(X1), std::nullopt, std::nullopt), std::domain_error);
  }

  TEST_CASE("sturm_chain follows the remainder recurrence") {
    const SparsePoly x = ux();
    const SparsePoly p = x * x * x - c1(2) * x;
    const SturmChain ch = sturm_chain(p);
    REQUIRE(ch.seq.size() >= 3);
    CHECK(ch.seq[0] == p);
    CHECK(ch.seq[1] == derivative(p, "x"));
    CHECK(ch.seq.back().is_constant());
  }

  TEST_CASE("sturm counts agree with planted roots and isolation") {
    std::mt19937 rng(11);
    std::uniform_int_distribution<int> num(-12, 12), den(1, 5), cnt(0, 4), rep(1, 2);
    for (int trial = 0; trial < 40; ++trial) {
      std::set<Rational> distinct;
      std::vector<Rational> roots;
      for (int i = cnt(rng); i > 0; --i) {
        const Rational r = q(num(rng), den(rng));
        distinct.insert(r);
        for (int m = rep(rng); m > 0; --m) roots.push_back(r);
      }
      std::vector<Rational> quads;
      for (int i = cnt(rng) % 2; i > 0; --i) quads.push_back(q(den(rng)));
      const SparsePoly p = oracle::planted(roots, quads) * c1(q(num(rng) | 1, 3));
      CAPTURE(to_text(p));
      const int n = sturm_count(p, std::nullopt, std::nullopt);
      CHECK(n == static_cast<int>(distinct.size()));
      const auto ivs = isolate_real_roots(p);
      REQUIRE(ivs.size() == distinct.size());
      auto it = distinct.begin();
      for (std::size_t i = 0; i < ivs.size(); ++i, ++it) {
        CHECK(ivs[i].lo < *it);
        CHECK(*it <= ivs[i].hi);
        if (i + 1 < ivs.size()) CHECK(ivs[i].hi <= ivs[i + 1].lo);
      }
    }
  }

  TEST_CASE("isolate_real_roots examples") {
    const SparsePoly x = ux();
    const auto ivs = isolate_real_roots(x * x - c1(2));
    REQUIRE(ivs.size() == 2);
    const IsolatingInterval fine = refine(x * x - c1(2), ivs[1], pow2_neg(20));
    CHECK(fine.width() <= pow2_neg(20));
    CHECK(fine.lo < q(141422, 100000));
    CHECK(fine.hi > q(141421, 100000));
    CHECK(fine.lo * fine.lo < 2);
    CHECK(fine.hi * fine.hi > 2);
    const auto sq = isolate_real_roots(x * x);
    REQUIRE(sq.size() == 1);
    CHECK(sq[0].lo < 0);
    CHECK(sq[0].hi >= 0);
    CHECK(default_refinement_width() == pow2_neg(40));
    CHECK_THROWS_AS(isolate_real_roots(SparsePoly(X1)), std::domain_error);
    const SparsePoly p12 = specialize(basic_inflection(2).poly, "lambda", 2);
    CHECK(static_cast<int>(isolate_real_roots(p12).size()) ==
          sturm_count(p12, std::nullopt, std::nullopt));
  }

  TEST_CASE("sign_at_root examples") {
    const SparsePoly x = ux();
    const SparsePoly p = x * x - c1(2);
    const auto ivs = isolate_real_roots(p);
    CHECK(sign_at_root(x, p, ivs[1]) == 1);
    CHECK(sign_at_root(x, p, ivs[0]) == -1);
    CHECK(sign_at_root(p, p, ivs[0]) == 0);
    // 7/5 < sqrt 2 < 3/2
    CHECK(sign_at_root(x - c1(q(3, 2)), p, ivs[1]) == -1);
    CHECK(sign_at_root(x - c1(q(7, 5)), p, ivs[1]) == 1);
    CHECK_THROWS_AS(sign_at_root(x, p, IsolatingInterval{q(3), q(4)}), std::domain_error);
    CHECK_THROWS_AS(sign_at_root(x, p, IsolatingInterval{q(-2), q(2)}), std::domain_error);
  }

  TEST_CASE("sign of f at the roots of P_{1,2}(x, 2) matches direct evaluation") {
    const SparsePoly p = specialize(basic_inflection(2).poly, "lambda", 2);
    const SparsePoly f = specialize(legendre_f(), "lambda", 2);
    for (const auto& iv : isolate_real_roots(p)) {
      const IsolatingInterval fine = refine(p, iv, pow2_neg(40));
      // f has no root within 2^-40 of a root of p here, so its sign is
      // constant on the refined interval
      const Rational mid = (fine.lo + fine.hi) / 2;
      const int s = sgn(evaluate(f, {{"x", mid}}));
      CHECK(s != 0);
      CHECK(sign_at_root(f, p, iv) == s);
    }
  }

  TEST_CASE("det_polymatrix examples") {
    const SparsePoly one = c1(1), zero(X1), x = ux();
    CHECK(det_polymatrix({{one, zero}, {zero, one}}) == one);
    CHECK(det_polymatrix({{x, one}, {one, x}}) == x * x - one);
    CHECK_THROWS(det_polymatrix({{x, one}}));
    CHECK_THROWS(det_polymatrix({}));
  }

  TEST_CASE("det_polymatrix matches cofactor expansion up to 4x4") {
    std::mt19937 rng(3);
    for (int n = 1; n <= 4; ++n) {
      for (int trial = 0; trial < (n <= 3 ? 12 : 5); ++trial) {
        PolyMatrix m(n, std::vector<SparsePoly>(n));
        for (auto& row : m)
          for (auto& e : row) e = oracle::random_poly(rng, XL, 2, 3);
        if (trial == 0 && n >= 2) m[1] = m[0];  // singular
        CAPTURE(n);
        CHECK(det_polymatrix(m) == oracle::cofactor_det(m));
      }
    }
  }

  TEST_CASE("ring axioms and Leibniz rule on random polynomials") {
    std::mt19937 rng(5);
    for (int trial = 0; trial < 40; ++trial) {
      const SparsePoly a = oracle::random_poly(rng, XL, 3, 5);
      const SparsePoly b = oracle::random_poly(rng, XL, 3, 5);
      const SparsePoly c = oracle::random_poly(rng, XL, 3, 5);
      CHECK((a + b) * c == a * c + b * c);
      CHECK(a * b == b * a);
      CHECK((a * b) * c == a * (b * c));
      CHECK(a - a == SparsePoly(XL));
      for (const char* v : {"x", "lambda"}) {
        CHECK(derivative(a + b, v) == derivative(a, v) + derivative(b, v));
        CHECK(derivative(a * b, v) == derivative(a, v) * b + a * derivative(b, v));
      }
      if (!b.is_zero()) CHECK(divide_exact(a * b, b) == a);
    }
  }

  TEST_CASE("exact division rejects non-divisors") {
    const SparsePoly x = vx(), l = vl();
    CHECK_FALSE(try_divide_exact(x * x + l, x).has_value());
    CHECK_THROWS_AS(divide_exact(x * x + l, x), std::domain_error);
    CHECK(divide_exact(x * x - l * l, x - l) == x + l);
  }

  TEST_CASE("compose, rename and coefficients_in") {
    const SparsePoly x = vx(), l = vl();
    const SparsePoly p = x * x * l + c2(3) * l;
    const auto cs = coefficients_in(p, "x");
    REQUIRE(cs.size() == 3);
    CHECK(cs[0] == SparsePoly::constant({"lambda"}, 3) * SparsePoly::variable({"lambda"}, "lambda"));
    CHECK(cs[1].is_zero());
    const SparsePoly r = rename_variable(p, "lambda", "z");
    CHECK(r.vars() == std::vector<std::string>{"x", "z"});
    const SparsePoly back = compose(r, {{"x", x}, {"z", l}});
    CHECK(back == p);
  }

  TEST_CASE("canonical JSON format and round trip") {
    const SparsePoly seed = basic_inflection(0).poly;
    CHECK(to_json(seed) ==
          R"({"vars":["x","lambda"],"terms":[{"e":[2,0],"n":"3","d":"2"},{"e":[1,1],"n":"-1","d":"1"},)"
          R"({"e":[1,0],"n":"-1","d":"1"},{"e":[0,1],"n":"1","d":"2"}]})");
    std::mt19937 rng(9);
    for (int trial = 0; trial < 30; ++trial) {
      const SparsePoly a = oracle::random_poly(rng, XL, 4, 6);
      CHECK(from_json(to_json(a)) == a);
    }
    for (int k = 0; k <= 6; ++k) {
      const SparsePoly p = basic_inflection(k).poly;
      CHECK(from_json(to_json(p)) == p);
    }
    CHECK(to_json(SparsePoly(XL)) == R"({"vars":["x","lambda"],"terms":[]})");
    CHECK_THROWS(from_json(R"({"vars":["x"],"terms":[{"e":[1],"n":"1","d":"0"}]})"));
    CHECK_THROWS(from_json("not json"));
  }

  TEST_CASE("text rendering") {
    CHECK(to_text(basic_inflection(1).poly) ==
          "3/4*x^4 - x^3*lambda - x^3 + 3/2*x^2*lambda - 1/4*lambda^2");
    CHECK(to_text(SparsePoly(XL)) == "0");
  }
}

#include "doctest.h"
#include "loopsym.hpp"

using namespace bbrc;

namespace {

// monomial from (beam, color) pairs
LoopMonomial mono(std::vector<std::pair<int, int>> pairs) {
  std::vector<LoopVar> vars;
  for (auto [j, i] : pairs) vars.push_back({j, i});
  return monomial_from_vars(std::move(vars));
}

LoopPolynomial poly_of(int m, int n, std::vector<LoopMonomial> monos) {
  LoopPolynomial p(m, n);
  for (auto& mo : monos) p.add_term(std::move(mo), 1);
  return p;
}

RationalPoint random_point(int m, int n, Rng& rng) {
  RationalPoint p(m, n);
  for (auto& beam : p.v)
    for (auto& value : beam) value = Rational(rng.uniform(1, 1000000));
  return p;
}

}  // namespace

TEST_CASE("elementary loop symmetric functions, n=2 m=3") {
  // colors canonical mod 2: (1) -> 1, (2) -> 0
  CHECK(elementary_e(1, 1, 3, 2) == poly_of(3, 2, {mono({{1, 1}}), mono({{2, 1}}), mono({{3, 1}})}));
  CHECK(elementary_e(2, 1, 3, 2) ==
        poly_of(3, 2, {mono({{1, 1}, {2, 0}}), mono({{2, 1}, {3, 0}}), mono({{1, 1}, {3, 0}})}));
  CHECK(elementary_e(3, 1, 3, 2) == poly_of(3, 2, {mono({{1, 1}, {2, 0}, {3, 1}})}));
  CHECK(elementary_e(1, 0, 3, 2) == poly_of(3, 2, {mono({{1, 0}}), mono({{2, 0}}), mono({{3, 0}})}));
  CHECK(elementary_e(2, 0, 3, 2) ==
        poly_of(3, 2, {mono({{1, 0}, {2, 1}}), mono({{1, 0}, {3, 1}}), mono({{2, 0}, {3, 1}})}));
  CHECK(elementary_e(3, 0, 3, 2) == poly_of(3, 2, {mono({{1, 0}, {2, 1}, {3, 0}})}));

  CHECK(elementary_e(0, 1, 3, 2) == LoopPolynomial::constant(3, 2, 1));
  CHECK(elementary_e(-1, 1, 3, 2).zero());
  CHECK(elementary_e(4, 1, 3, 2).zero());
}

TEST_CASE("loop Schur function s^{(1)}_{2,1}, n=3 m=3") {
  auto got = loop_schur(SkewShape(Partition({2, 1})), 1, 3, 3);
  auto want = poly_of(3, 3, {
                                mono({{1, 1}, {1, 0}, {2, 2}}),
                                mono({{1, 1}, {2, 0}, {2, 2}}),
                                mono({{1, 1}, {2, 0}, {3, 2}}),
                                mono({{1, 1}, {3, 0}, {2, 2}}),
                                mono({{1, 1}, {1, 0}, {3, 2}}),
                                mono({{2, 1}, {2, 0}, {3, 2}}),
                                mono({{1, 1}, {3, 0}, {3, 2}}),
                                mono({{2, 1}, {3, 0}, {3, 2}}),
                            });
  CHECK(got.term_count() == 8);
  CHECK(got == want);
}

TEST_CASE("cylindric loop Schur s^{(1)}_{D_1(2,1)}, n=3 m=3") {
  auto d = build_cylindric_shape(SkewShape(Partition({2, 1})), 3, 1);
  auto got = cylindric_loop_schur(d, 1, 3);
  auto want = poly_of(3, 3, {
                                mono({{1, 1}, {1, 0}, {2, 2}}),
                                mono({{1, 1}, {2, 0}, {2, 2}}),
                                mono({{1, 1}, {2, 0}, {3, 2}}),
                                mono({{1, 1}, {1, 0}, {3, 2}}),
                                mono({{2, 1}, {2, 0}, {3, 2}}),
                                mono({{1, 1}, {3, 0}, {3, 2}}),
                                mono({{2, 1}, {3, 0}, {3, 2}}),
                            });
  CHECK(got.term_count() == 7);
  CHECK(got == want);
}

TEST_CASE("cylindric loop Schur golden cases from the worked examples") {
  // single-term rectangle, n=3 s=2
  auto d2 = build_cylindric_shape(SkewShape(Partition({1, 1, 1})), 3, 2);
  CHECK(cylindric_loop_schur(d2, 0, 3) == poly_of(3, 3, {mono({{1, 0}, {2, 1}, {3, 2}})}));

  // single-term rectangle, n=4 s=2
  auto d22 = build_cylindric_shape(SkewShape(Partition({2, 2, 2, 2})), 4, 2);
  CHECK(cylindric_loop_schur(d22, 0, 4) ==
        poly_of(4, 4,
                {mono({{1, 0}, {1, 3}, {2, 1}, {2, 0}, {3, 2}, {3, 1}, {4, 3}, {4, 2}})}));

  // 14-term expansion for D_2(2,1,1), n=4 m=4
  auto d211 = build_cylindric_shape(SkewShape(Partition({2, 1, 1})), 4, 2);
  auto got = cylindric_loop_schur(d211, 0, 4);
  auto want = poly_of(4, 4, {
                                mono({{1, 0}, {1, 3}, {2, 1}, {3, 2}}),
                                mono({{1, 0}, {1, 3}, {2, 1}, {4, 2}}),
                                mono({{1, 0}, {1, 3}, {3, 1}, {4, 2}}),
                                mono({{1, 0}, {2, 3}, {2, 1}, {3, 2}}),
                                mono({{1, 0}, {2, 3}, {2, 1}, {4, 2}}),
                                mono({{1, 0}, {2, 3}, {3, 1}, {4, 2}}),
                                mono({{1, 0}, {3, 3}, {2, 1}, {3, 2}}),
                                mono({{1, 0}, {3, 3}, {2, 1}, {4, 2}}),
                                mono({{1, 0}, {3, 3}, {3, 1}, {4, 2}}),
                                mono({{1, 0}, {4, 3}, {2, 1}, {4, 2}}),
                                mono({{1, 0}, {4, 3}, {3, 1}, {4, 2}}),
                                mono({{2, 0}, {2, 3}, {3, 1}, {4, 2}}),
                                mono({{2, 0}, {3, 3}, {3, 1}, {4, 2}}),
                                mono({{2, 0}, {4, 3}, {3, 1}, {4, 2}}),
                            });
  CHECK(got.term_count() == 14);
  CHECK(got == want);

  // empty shape contributes the constant 1
  auto empty = build_cylindric_shape(SkewShape(Partition()), 3, 1);
  CHECK(cylindric_loop_schur(empty, 0, 3) == LoopPolynomial::constant(3, 3, 1));
}

TEST_CASE("narrow shapes reduce to the plain skew function") {
  for (int n : {4, 5}) {
    SkewShape base(Partition({2, 1}));
    auto d = build_cylindric_shape(base, n, 1);  // lambda_1 < n-s
    CHECK(cylindric_loop_schur(d, 1, 3) == loop_schur(base, 1, 3, n));
  }
}

TEST_CASE("collapsing colors gives the classical Schur polynomial") {
  // s_{2,1}(a,b,c) at a=2,b=3,c=5 equals the color-collapsed loop Schur value
  auto f = loop_schur(SkewShape(Partition({2, 1})), 1, 3, 3);
  RationalPoint p(3, 3);
  const int vals[3] = {2, 3, 5};
  for (int j = 1; j <= 3; ++j)
    for (int c = 0; c < 3; ++c) p.at(j, c) = Rational(vals[j - 1]);
  // s_{2,1}(x1,x2,x3) = sum over 8 tableaux with collapsed variables
  Rational expected(0);
  for (auto [u, v, w] : std::vector<std::array<int, 3>>{{2, 2, 3},
                                                        {2, 3, 3},
                                                        {2, 3, 5},
                                                        {2, 5, 3},
                                                        {2, 2, 5},
                                                        {3, 3, 5},
                                                        {2, 5, 5},
                                                        {3, 5, 5}})
    expected += Rational(u) * Rational(v) * Rational(w);
  CHECK(eval(f, p) == expected);
}

TEST_CASE("tau polynomials") {
  CHECK(tau_poly(0, 0, 3, 3) == LoopPolynomial::constant(3, 3, 1));
  CHECK(tau_poly(-1, 0, 3, 3).zero());
  CHECK(tau_poly(7, 0, 3, 3).zero());  // beyond (n-1)m = 6
  // single saturated multiset for k = (n-1)m
  CHECK(tau_poly(6, 0, 3, 3) ==
        poly_of(3, 3, {mono({{1, 0}, {1, 2}, {2, 1}, {2, 0}, {3, 2}, {3, 1}})}));
  // multiplicity cap: n=2 admits only strict multisets
  CHECK(tau_poly(2, 0, 3, 2).term_count() == 3);
}

TEST_CASE("tau matches the first-shape cylindric Schur functions") {
  // s^{(0)}_{D_1(lambda(1,r))} = tau_{(n-1)m - rn}: instance n=3, m=3, r=1
  auto d = build_cylindric_shape(SkewShape(Partition({2, 1})), 3, 1);
  CHECK(cylindric_loop_schur(d, 0, 3) == tau_poly(3, 0, 3, 3));
  // and r=0
  auto d0 = build_cylindric_shape(SkewShape(Partition({2, 2, 2})), 3, 1);
  CHECK(cylindric_loop_schur(d0, 0, 3) == tau_poly(6, 0, 3, 3));
}

TEST_CASE("kappa") {
  // n=2 symbolic: kappa_1 = x^{(0)} + y^{(0)}
  CHECK(kappa_poly(1, 2) == poly_of(2, 2, {mono({{1, 0}}), mono({{2, 0}})}));
  // n=4 symbolic expansion of kappa_1
  CHECK(kappa_poly(1, 4) == poly_of(2, 4, {
                                              mono({{1, 2}, {1, 3}, {1, 0}}),
                                              mono({{2, 2}, {1, 3}, {1, 0}}),
                                              mono({{2, 2}, {2, 3}, {1, 0}}),
                                              mono({{2, 2}, {2, 3}, {2, 0}}),
                                          }));
  // all-ones point, n=4: four monomials of value 1
  std::vector<Rational> ones(4, Rational(1));
  CHECK(kappa(1, ones, ones) == Rational(4));
}

TEST_CASE("birational R involution, braid and invariance at rational points") {
  Rng rng(7);
  for (int trial = 0; trial < 5; ++trial) {
    for (int n : {2, 3, 4}) {
      auto p = random_point(3, n, rng);
      for (int j : {1, 2}) {
        auto q = birational_R_point(p, j);
        // involution
        auto back = birational_R_point(q, j);
        CHECK(back.v == p.v);
        // positivity preserved
        for (const auto& beam : q.v)
          for (const auto& value : beam) CHECK(value > 0);
        // product over the two beams is conserved
        Rational prod_before(1), prod_after(1);
        for (int c = 0; c < n; ++c) {
          prod_before *= p.at(j, c) * p.at(j + 1, c);
          prod_after *= q.at(j, c) * q.at(j + 1, c);
        }
        CHECK(prod_before == prod_after);
      }
      // braid relation
      auto a = birational_R_point(birational_R_point(birational_R_point(p, 1), 2), 1);
      auto b = birational_R_point(birational_R_point(birational_R_point(p, 2), 1), 2);
      CHECK(a.v == b.v);
      // elementary functions are invariant
      for (int k = 1; k <= 3; ++k) {
        auto f = elementary_e(k, 1, 3, n);
        CHECK(eval(f, p) == eval(f, birational_R_point(p, 1)));
      }
    }
  }
}

TEST_CASE("invariance_check") {
  CHECK(invariance_check(elementary_e(2, 1, 3, 3), 20, 11));
  LoopPolynomial single(3, 3);
  single.add_term(mono({{1, 1}}), 1);
  CHECK(!invariance_check(single, 20, 11));
  auto d = build_cylindric_shape(SkewShape(Partition({2, 1})), 3, 1);
  CHECK(invariance_check(cylindric_loop_schur(d, 1, 3), 20, 11));
}

TEST_CASE("noncrossing path families") {
  // worked example: n=3, m=2, s=1, lambda=(2,1), r=1
  auto d = build_cylindric_shape(SkewShape(Partition({2, 1})), 3, 1);
  auto gf = noncrossing_generating_function(d, 1, 2);
  CHECK(gf == cylindric_loop_schur(d, 1, 2));
  // the middle family weight appears
  CHECK(gf.terms().count(mono({{1, 0}, {1, 1}, {2, 2}})) == 1);

  // same equality with three loops and other colors
  for (int r = 0; r < 3; ++r)
    CHECK(noncrossing_generating_function(d, r, 3) == cylindric_loop_schur(d, r, 3));

  auto d2 = build_cylindric_shape(SkewShape(Partition({2, 2}), Partition({1})), 3, 1);
  for (int r = 0; r < 3; ++r)
    CHECK(noncrossing_generating_function(d2, r, 3) == cylindric_loop_schur(d2, r, 3));
}

TEST_CASE("cell transfer positivity") {
  CHECK(cell_transfer_positivity(2, 4, 2));
  CHECK(cell_transfer_positivity(3, 3, 3));
  CHECK(cell_transfer_positivity(2, 4, 6));  // tau_{N+n} = 0, trivially positive
}

TEST_CASE("polynomial printing is canonical") {
  LoopPolynomial p(2, 2);
  p.add_term(mono({{1, 1}, {2, 0}}), 2);
  p.add_term(mono({{1, 0}}), 1);
  CHECK(p.str() == "1 * x[1]^(0) + 2 * x[1]^(1) * x[2]^(0)");
  CHECK(LoopPolynomial(2, 2).str() == "0");
}

#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "tableaux.hpp"

namespace bbrc {

// Variable x_j^{(i)}: beam j in 1..m, color i canonical in 0..n-1.
struct LoopVar {
  int beam = 0;
  int color = 0;
  auto operator<=>(const LoopVar&) const = default;
};

// Monomial: sorted (variable, exponent) pairs with positive exponents.
using LoopMonomial = std::vector<std::pair<LoopVar, int>>;

LoopMonomial monomial_from_vars(std::vector<LoopVar> vars);

// Exact sparse polynomial in the colored variables, integer coefficients.
class LoopPolynomial {
 public:
  LoopPolynomial() = default;
  LoopPolynomial(int m, int n) : m_(m), n_(n) {}
  static LoopPolynomial constant(int m, int n, BigInt c);

  int beams() const { return m_; }
  int colors() const { return n_; }
  bool zero() const { return terms_.empty(); }
  size_t term_count() const { return terms_.size(); }
  const std::map<LoopMonomial, BigInt>& terms() const { return terms_; }

  void add_term(LoopMonomial mono, BigInt coeff);

  LoopPolynomial operator+(const LoopPolynomial& o) const;
  LoopPolynomial operator-(const LoopPolynomial& o) const;
  LoopPolynomial operator*(const LoopPolynomial& o) const;
  bool operator==(const LoopPolynomial& o) const { return terms_ == o.terms_; }

  // Canonical text form: terms "c * x[j]^(i) * ..." joined by " + ", sorted
  // by monomial order.
  std::string str() const;

 private:
  int m_ = 0;
  int n_ = 0;
  std::map<LoopMonomial, BigInt> terms_;
};

// Strictly positive rational assignment to every x_j^{(i)}.
struct RationalPoint {
  int m = 0;
  int n = 0;
  std::vector<std::vector<Rational>> v;  // [beam-1][color]

  RationalPoint() = default;
  RationalPoint(int beams, int colors);
  Rational& at(int beam, int color) { return v[beam - 1][((color % n) + n) % n]; }
  const Rational& at(int beam, int color) const { return v[beam - 1][((color % n) + n) % n]; }
};

Rational eval(const LoopPolynomial& f, const RationalPoint& p);

// e_k^{(r)} = sum over i_1<...<i_k of x_{i_1}^{(r)} x_{i_2}^{(r+1)} ... x_{i_k}^{(r+k-1)}.
LoopPolynomial elementary_e(int k, int r, int m, int n);

// tau_k^{(a)}: sum over size-k multisets from {1..m} with multiplicity <= n-1
// of x_{g_1}^{(a)} x_{g_2}^{(a-1)} ... x_{g_k}^{(a-k+1)}.
LoopPolynomial tau_poly(int k, int a, int m, int n);

// Loop Schur functions: weight of the box in row i, column j with entry t is
// x_t^{(i-j+r)}; entries run over 1..m.
LoopPolynomial loop_schur(const SkewShape& shape, int r, int m, int n);
LoopPolynomial cylindric_loop_schur(const CylindricShape& shape, int r, int m);

// kappa_r over two n-tuples of positive rationals (colors canonical mod n).
Rational kappa(int r, const std::vector<Rational>& x, const std::vector<Rational>& y);
// Symbolic kappa_r in two beams: beam 1 plays x, beam 2 plays y.
LoopPolynomial kappa_poly(int r, int n);

// Birational R at beams j, j+1 (1 <= j < m); all other beams fixed.
RationalPoint birational_R_point(const RationalPoint& p, int j);

// Probabilistic polynomial-identity test: f(p) == f(R_j(p)) for every j and
// `trials` seeded random points with entries uniform in 1..10^6.
bool invariance_check(const LoopPolynomial& f, int trials, std::uint64_t seed);

// Weight generating function of non-crossing highway-path families on the
// grid network N(n,m) with the sources/sinks determined by the shape.
LoopPolynomial noncrossing_generating_function(const CylindricShape& shape, int r, int m);

// True iff (tau_N^{(0)})^2 - tau_{N-n}^{(0)} tau_{N+n}^{(0)} has nonnegative
// coefficients.
bool cell_transfer_positivity(int n, int m, int N);

}  // namespace bbrc

#pragma once

#include <utility>
#include <vector>

#include "boxball.hpp"
#include "loopsym.hpp"

namespace bbrc {

// Nonnegative integer assignment to every x_j^{(i)}, j in 1..m, i mod n.
struct TropicalAssignment {
  int m = 0;
  int n = 0;
  std::vector<std::vector<long long>> v;  // [beam-1][color]

  TropicalAssignment() = default;
  TropicalAssignment(int beams, int colors)
      : m(beams), n(colors), v(beams, std::vector<long long>(colors, 0)) {}
  long long& at(int beam, int color) { return v[beam - 1][((color % n) + n) % n]; }
  long long at(int beam, int color) const { return v[beam - 1][((color % n) + n) % n]; }
};

// Min-plus evaluation: min over monomials of the sum of assigned values,
// coefficients discarded.  Requires a subtraction-free nonzero polynomial.
long long trop_eval(const LoopPolynomial& f, const TropicalAssignment& a);

// x_j^{(i+j-1 mod n)} = number of occurrences of the letter i in b_{m+1-j}.
TropicalAssignment path_coordinates(const TensorElement& p);

struct RibbonShapeSequence {
  int s = 0;
  std::vector<Partition> shapes;  // lambda(s,0) down to the empty partition
};

// lambda(s,0) = (n-s)^m; each successor removes the largest ribbon strip of
// at most n boxes containing the whole bottom row.
RibbonShapeSequence lambda_shapes(int s, int n, int m);

// Caches the tau and cylindric-Schur polynomials for one (n, m); evaluation
// then runs per path.
class TropicalOracle {
 public:
  TropicalOracle(int n, int m);

  int n() const { return n_; }
  int m() const { return m_; }

  // Theta^{(0)}_{(n-1)m - rn}; zero for exhausted shapes.
  long long theta(int r, const TropicalAssignment& a) const;
  Partition first_shape(const TropicalAssignment& a) const;
  // Throws errc::not_a_partition when the differences fail to decrease (a
  // conjecture counterexample for s >= 2).
  Partition conjectured_shape(const TropicalAssignment& a, int s) const;
  long long energy(const TropicalAssignment& a, int ell) const;

 private:
  int n_;
  int m_;
  std::vector<LoopPolynomial> tau_;                 // index r: tau_{(n-1)m-rn}
  std::vector<std::vector<LoopPolynomial>> schur_;  // [s-1][r]: s^{(0)}_{D_s(lambda(s,r))}
};

Partition first_shape_theorem(const TensorElement& p);
Partition conjectured_shape(const TensorElement& p, int s);
long long energy_formula_trop(const TensorElement& p, int ell);

// Differences of the concave minimum A(x) = min_i((n-i)x + A_i) together with
// the conjugate read off the input: (A_n - A_{n-1}, ..., A_1).
std::pair<Partition, Partition> partition_from_convex(const std::vector<long long>& A);

long long soliton_count_bound(int n, int m);

}  // namespace bbrc

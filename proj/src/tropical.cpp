#include "tropical.hpp"

#include <algorithm>
#include <limits>

namespace bbrc {

long long trop_eval(const LoopPolynomial& f, const TropicalAssignment& a) {
  require(!f.zero(), errc::invalid_argument, "tropical evaluation of the zero polynomial");
  long long best = std::numeric_limits<long long>::max();
  for (const auto& [mono, coeff] : f.terms()) {
    require(coeff > 0, errc::not_subtraction_free,
            "tropical evaluation requires positive coefficients");
    long long v = 0;
    for (const auto& [var, exp] : mono) v += exp * a.at(var.beam, var.color);
    best = std::min(best, v);
  }
  return best;
}

TropicalAssignment path_coordinates(const TensorElement& p) {
  const int n = p.n;
  const int m = p.size();
  TropicalAssignment a(m, n);
  for (int j = 1; j <= m; ++j) {
    const KRElement& b = p.factors[m - j];
    require(b.one_row(), errc::invalid_argument, "path coordinates need a one-row path");
    for (int letter : b.t.rows()[0]) ++a.at(j, letter + j - 1);
  }
  return a;
}

RibbonShapeSequence lambda_shapes(int s, int n, int m) {
  require(n >= 2 && s >= 1 && s <= n - 1 && m >= 1, errc::invalid_argument,
          "lambda shapes require 1 <= s <= n-1 and m >= 1");
  RibbonShapeSequence seq;
  seq.s = s;
  Partition cur(std::vector<int>(m, n - s));
  seq.shapes.push_back(cur);
  while (!cur.empty()) {
    // Remove the border strip of q = lambda_top + (rows - top) boxes with the
    // largest q <= n.  The strip spans rows top..rows, takes all of the
    // bottom row, and leaves (..., lambda_{top-1}, lambda_{top+1}-1, ...).
    const auto& parts = cur.parts();
    const int rows = cur.rows();
    int top = -1;
    for (int i = 1; i <= rows; ++i) {
      if (parts[i - 1] + rows - i <= n) {
        top = i;
        break;
      }
    }
    if (top < 0) fail(errc::ribbon_removal_failure, "no ribbon strip fits");
    std::vector<int> next;
    for (int i = 1; i < top; ++i) next.push_back(parts[i - 1]);
    for (int i = top + 1; i <= rows; ++i) next.push_back(parts[i - 1] - 1);
    cur = Partition(std::move(next));
    seq.shapes.push_back(cur);
  }
  return seq;
}

TropicalOracle::TropicalOracle(int n, int m) : n_(n), m_(m) {
  require(n >= 2 && m >= 1, errc::invalid_argument, "oracle requires n >= 2 and m >= 1");
  const int total = (n - 1) * m;
  for (int r = 0; r * n <= total + n; ++r) tau_.push_back(tau_poly(total - r * n, 0, m, n));
  schur_.resize(n - 1);
  for (int s = 1; s <= n - 1; ++s) {
    auto seq = lambda_shapes(s, n, m);
    for (const auto& shape : seq.shapes) {
      auto d = build_cylindric_shape(SkewShape(shape), n, s);
      schur_[s - 1].push_back(cylindric_loop_schur(d, 0, m));
    }
  }
}

long long TropicalOracle::theta(int r, const TropicalAssignment& a) const {
  if (r < 0) fail(errc::invalid_argument, "theta index out of range");
  if (r >= static_cast<int>(tau_.size()) || tau_[r].zero()) return 0;
  if ((n_ - 1) * m_ - r * n_ <= 0) return 0;
  return trop_eval(tau_[r], a);
}

Partition TropicalOracle::first_shape(const TropicalAssignment& a) const {
  std::vector<long long> diffs;
  const int total = (n_ - 1) * m_;
  for (int r = 1; (r - 1) * n_ < total; ++r) diffs.push_back(theta(r - 1, a) - theta(r, a));
  std::vector<int> parts;
  for (size_t i = 0; i < diffs.size(); ++i) {
    require(diffs[i] >= 0, errc::internal_error, "negative part in the first-shape formula");
    require(i == 0 || diffs[i - 1] >= diffs[i], errc::internal_error,
            "first-shape formula produced a non-partition");
    if (diffs[i] > 0) parts.push_back(static_cast<int>(diffs[i]));
  }
  return Partition(std::move(parts));
}

Partition TropicalOracle::conjectured_shape(const TropicalAssignment& a, int s) const {
  require(s >= 1 && s <= n_ - 1, errc::invalid_argument, "shape index out of range");
  const auto& polys = schur_[s - 1];
  std::vector<long long> values(polys.size());
  for (size_t r = 0; r < polys.size(); ++r) values[r] = trop_eval(polys[r], a);
  std::vector<long long> diffs;
  for (size_t r = 1; r < values.size(); ++r) diffs.push_back(values[r - 1] - values[r]);
  std::vector<int> parts;
  for (size_t i = 0; i < diffs.size(); ++i) {
    if (diffs[i] < 0 || (i > 0 && diffs[i] > diffs[i - 1]))
      fail(errc::not_a_partition, "conjectured shape differences fail at s=" +
                                      std::to_string(s) + ", r=" + std::to_string(i + 1));
    if (diffs[i] > 0) parts.push_back(static_cast<int>(diffs[i]));
  }
  return Partition(std::move(parts));
}

long long TropicalOracle::energy(const TropicalAssignment& a, int ell) const {
  require(ell >= 1, errc::invalid_argument, "energy requires ell >= 1");
  const int total = (n_ - 1) * m_;
  long long best = std::numeric_limits<long long>::max();
  for (int i = 0; i * n_ <= total; ++i)
    best = std::min(best, static_cast<long long>(i) * ell + theta(i, a));
  return best;
}

Partition first_shape_theorem(const TensorElement& p) {
  TropicalOracle oracle(p.n, p.size());
  return oracle.first_shape(path_coordinates(p));
}

Partition conjectured_shape(const TensorElement& p, int s) {
  TropicalOracle oracle(p.n, p.size());
  return oracle.conjectured_shape(path_coordinates(p), s);
}

long long energy_formula_trop(const TensorElement& p, int ell) {
  TropicalOracle oracle(p.n, p.size());
  return oracle.energy(path_coordinates(p), ell);
}

std::pair<Partition, Partition> partition_from_convex(const std::vector<long long>& A) {
  require(A.size() >= 2, errc::invalid_argument, "need A_0..A_n with n >= 1");
  const int n = static_cast<int>(A.size()) - 1;
  require(A[0] == 0, errc::convexity_violation, "A_0 must be 0");
  for (long long v : A) require(v >= 0, errc::convexity_violation, "A_i must be nonnegative");
  for (int i = 1; i < n; ++i)
    require(A[i - 1] + A[i + 1] >= 2 * A[i], errc::convexity_violation,
            "convexity A_{i-1}+A_{i+1} >= 2A_i fails at i=" + std::to_string(i));

  auto value = [&](long long x) {
    long long best = std::numeric_limits<long long>::max();
    for (int i = 0; i <= n; ++i)
      best = std::min(best, static_cast<long long>(n - i) * x + A[i]);
    return best;
  };
  std::vector<int> delta;
  long long prev = value(0);
  for (long long x = 1;; ++x) {
    long long cur = value(x);
    if (cur == prev) break;
    delta.push_back(static_cast<int>(cur - prev));
    prev = cur;
  }
  std::vector<int> conj;
  for (int i = n; i >= 1; --i) conj.push_back(static_cast<int>(A[i] - A[i - 1]));
  return {Partition(std::move(delta)), Partition(std::move(conj))};
}

long long soliton_count_bound(int n, int m) {
  require(n >= 2 && m >= 1, errc::invalid_argument, "bound requires n >= 2 and m >= 1");
  return (static_cast<long long>(n - 1) * m + n - 1) / n;
}

}  // namespace bbrc

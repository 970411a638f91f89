#pragma once

#include <string>
#include <utility>
#include <vector>

#include "crystals.hpp"

namespace bbrc {

// A box-ball state: finite sequence over {1..n}, letter 1 an empty box.  The
// tail of 1s grows on demand so every ball can move.
struct BoxBallState {
  std::vector<int> cells;
  int n = 2;

  BoxBallState() = default;
  BoxBallState(std::vector<int> cs, int alphabet);

  long long ball_count() const;
  std::string render() const;  // '.' for letter 1
};

BoxBallState ball_move_K(BoxBallState state, int a);
BoxBallState evolve_T1inf(BoxBallState state);

TensorElement to_tensor(const BoxBallState& state);
BoxBallState concatenated_cells(const TensorElement& p);

struct CarrierRecord {
  std::vector<KRElement> carriers;  // u^{(1)} .. u^{(m+1)}
};

// Carrier sweep: R: u^{(k)} (x) b_k -> b'_k (x) u^{(k+1)} left to right.
std::pair<TensorElement, CarrierRecord> evolve_Trs(const TensorElement& p, int r, int s);

// E^{r,s}(p) = sum_k H(u^{(k)} (x) b_k).
long long energy_Ers(const TensorElement& p, int r, int s);

// Iterate T^{1,ell} (ell = ball count) until the maximal non-1 chunks
// stabilize with weakly increasing lengths; returns them left to right.
std::vector<Word> asymptotic_solitons(const TensorElement& p);

}  // namespace bbrc

#include "boxball.hpp"

#include <algorithm>
#include <set>

namespace bbrc {

BoxBallState::BoxBallState(std::vector<int> cs, int alphabet) : cells(std::move(cs)), n(alphabet) {
  require(n >= 2, errc::invalid_argument, "box-ball alphabet must be >= 2");
  for (int c : cells)
    require(c >= 1 && c <= n, errc::invalid_argument, "box-ball letters must lie in 1..n");
}

long long BoxBallState::ball_count() const {
  long long k = 0;
  for (int c : cells) k += c > 1;
  return k;
}

std::string BoxBallState::render() const {
  std::string s;
  s.reserve(cells.size());
  for (int c : cells) s += c == 1 ? '.' : static_cast<char>('0' + c);
  return s;
}

BoxBallState ball_move_K(BoxBallState state, int a) {
  require(a >= 2 && a <= state.n, errc::invalid_argument, "K_a requires 2 <= a <= n");
  std::vector<size_t> balls;
  for (size_t i = 0; i < state.cells.size(); ++i)
    if (state.cells[i] == a) balls.push_back(i);
  for (size_t pos : balls) {
    size_t dst = pos + 1;
    while (dst < state.cells.size() && state.cells[dst] != 1) ++dst;
    if (dst == state.cells.size()) state.cells.push_back(1);
    state.cells[dst] = a;
    state.cells[pos] = 1;
  }
  return state;
}

BoxBallState evolve_T1inf(BoxBallState state) {
  for (int a = state.n; a >= 2; --a) state = ball_move_K(std::move(state), a);
  return state;
}

TensorElement to_tensor(const BoxBallState& state) {
  std::vector<Word> words;
  words.reserve(state.cells.size());
  for (int c : state.cells) words.push_back({c});
  return TensorElement::from_words(words, state.n);
}

BoxBallState concatenated_cells(const TensorElement& p) {
  std::vector<int> cells;
  for (const auto& f : p.factors)
    cells.insert(cells.end(), f.t.rows()[0].begin(), f.t.rows()[0].end());
  return BoxBallState(std::move(cells), p.n);
}

std::pair<TensorElement, CarrierRecord> evolve_Trs(const TensorElement& p, int r, int s) {
  require(r >= 1 && r <= p.n - 1 && s >= 1, errc::invalid_argument,
          "T^{r,s} requires 1 <= r <= n-1 and s >= 1");
  for (const auto& f : p.factors)
    require(f.one_row(), errc::invalid_argument, "T^{r,s} acts on one-row paths");
  CarrierRecord rec;
  KRElement u = highest_weight_element(r, s, p.n);
  rec.carriers.push_back(u);
  std::vector<KRElement> out;
  out.reserve(p.factors.size());
  for (const auto& b : p.factors) {
    auto [bp, un] = combinatorial_R(u, b);
    out.push_back(bp);
    u = un;
    rec.carriers.push_back(u);
  }
  return {TensorElement(std::move(out), p.n), std::move(rec)};
}

long long energy_Ers(const TensorElement& p, int r, int s) {
  auto [q, rec] = evolve_Trs(p, r, s);
  (void)q;
  long long total = 0;
  for (int k = 0; k < p.size(); ++k) total += energy_H(rec.carriers[k], p.factors[k]);
  return total;
}

namespace {

std::vector<Word> chunks(const TensorElement& p) {
  std::vector<Word> out;
  Word cur;
  for (const auto& f : p.factors) {
    for (int c : f.t.rows()[0]) {
      if (c > 1) {
        cur.push_back(c);
      } else if (!cur.empty()) {
        out.push_back(std::move(cur));
        cur.clear();
      }
    }
  }
  if (!cur.empty()) out.push_back(std::move(cur));
  return out;
}

bool lengths_weakly_increase(const std::vector<Word>& ws) {
  for (size_t i = 0; i + 1 < ws.size(); ++i)
    if (ws[i].size() > ws[i + 1].size()) return false;
  return true;
}

std::multiset<Word> as_multiset(const std::vector<Word>& ws) {
  return std::multiset<Word>(ws.begin(), ws.end());
}

// Keep at least `room` empty cells at the right end so solitons never hit
// the boundary during one evolution step.
TensorElement padded(TensorElement p, long long room) {
  long long tail = 0;
  for (auto it = p.factors.rbegin(); it != p.factors.rend(); ++it) {
    const Word& w = it->t.rows()[0];
    bool all_empty = std::all_of(w.begin(), w.end(), [](int c) { return c == 1; });
    if (!all_empty) break;
    tail += static_cast<long long>(w.size());
  }
  while (tail < room) {
    p.factors.emplace_back(Tableau::one_row({1}), p.n);
    ++tail;
  }
  return p;
}

}  // namespace

std::vector<Word> asymptotic_solitons(const TensorElement& p) {
  for (const auto& f : p.factors)
    require(f.one_row(), errc::invalid_argument, "solitons are extracted from one-row paths");
  const long long balls = concatenated_cells(p).ball_count();
  if (balls == 0) return {};
  const int ell = static_cast<int>(balls);
  long long path_len = 0;
  for (const auto& f : p.factors) path_len += f.width();
  const long long bound = path_len * balls + 5;

  TensorElement cur = p;
  auto prev = as_multiset(chunks(cur));
  for (long long step = 0; step < bound; ++step) {
    cur = evolve_Trs(padded(std::move(cur), ell + 1), 1, ell).first;
    auto cs = chunks(cur);
    auto ms = as_multiset(cs);
    if (ms == prev && lengths_weakly_increase(cs)) return cs;
    prev = std::move(ms);
  }
  fail(errc::non_convergence, "soliton chunks failed to stabilize");
}

}  // namespace bbrc

#include "tableaux.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <sstream>

namespace bbrc {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (int p : parts_) require(p >= 0, errc::invalid_argument, "partition part must be >= 0");
  std::sort(parts_.begin(), parts_.end(), std::greater<int>());
  while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
}

long long Partition::size() const {
  long long total = 0;
  for (int p : parts_) total += p;
  return total;
}

bool Partition::contains(const Partition& inner) const {
  if (inner.rows() > rows()) return false;
  for (int i = 0; i < inner.rows(); ++i)
    if (inner.parts_[i] > parts_[i]) return false;
  return true;
}

Partition Partition::conjugate() const {
  if (parts_.empty()) return {};
  std::vector<int> out(parts_[0], 0);
  for (int p : parts_)
    for (int j = 0; j < p; ++j) ++out[j];
  return Partition(std::move(out));
}

long long Partition::q(long long k) const {
  long long total = 0;
  for (int p : parts_) total += std::min<long long>(k, p);
  return total;
}

std::string Partition::str() const {
  std::ostringstream os;
  os << '(';
  for (size_t i = 0; i < parts_.size(); ++i) {
    if (i) os << ',';
    os << parts_[i];
  }
  os << ')';
  return os.str();
}

SkewShape::SkewShape(Partition out, Partition in) : outer(std::move(out)), inner(std::move(in)) {
  require(outer.contains(inner), errc::invalid_argument,
          "skew shape requires inner to fit inside outer");
}

std::vector<std::pair<int, int>> SkewShape::cell_list() const {
  std::vector<std::pair<int, int>> cells;
  for (int i = 0; i < outer.rows(); ++i)
    for (int j = inner.part(i) + 1; j <= outer.part(i); ++j) cells.emplace_back(i + 1, j);
  return cells;
}

std::string SkewShape::str() const {
  return inner.empty() ? outer.str() : outer.str() + "/" + inner.str();
}

Tableau Tableau::straight(std::vector<std::vector<int>> rows) {
  while (!rows.empty() && rows.back().empty()) rows.pop_back();
  Tableau t;
  t.rows_ = std::move(rows);
  for (const auto& row : t.rows_)
    require(!row.empty(), errc::invalid_argument, "tableau rows must be nonempty");
  return t;
}

Tableau Tableau::skew(std::vector<int> offsets, std::vector<std::vector<int>> rows) {
  require(offsets.size() == rows.size(), errc::invalid_argument,
          "offset/row count mismatch in skew tableau");
  bool all_zero = true;
  for (int o : offsets) {
    require(o >= 0, errc::invalid_argument, "negative offset in skew tableau");
    if (o != 0) all_zero = false;
  }
  Tableau t;
  t.rows_ = std::move(rows);
  if (!all_zero) t.offsets_ = std::move(offsets);
  return t;
}

int Tableau::at(int i, int j) const {
  if (i < 0 || i >= num_rows()) return 0;
  int local = j - offset(i) - 1;
  if (local < 0 || local >= row_len(i)) return 0;
  return rows_[i][local];
}

bool Tableau::is_straight() const {
  for (int i = 0; i < num_rows(); ++i)
    if (offset(i) != 0) return false;
  return true;
}

bool Tableau::is_semistandard() const {
  for (int i = 0; i < num_rows(); ++i) {
    for (int v : rows_[i])
      if (v <= 0) return false;
    for (int j = 0; j + 1 < row_len(i); ++j)
      if (rows_[i][j] > rows_[i][j + 1]) return false;
  }
  for (int i = 0; i + 1 < num_rows(); ++i) {
    if (offset(i) + row_len(i) < offset(i + 1) + row_len(i + 1)) return false;
    for (int j = offset(i + 1) + 1; j <= offset(i + 1) + row_len(i + 1); ++j) {
      int above = at(i, j);
      int below = at(i + 1, j);
      if (above != 0 && below != 0 && above >= below) return false;
    }
  }
  return true;
}

long long Tableau::size() const {
  long long total = 0;
  for (const auto& row : rows_) total += static_cast<long long>(row.size());
  return total;
}

Partition Tableau::shape() const {
  std::vector<int> parts;
  for (int i = 0; i < num_rows(); ++i) parts.push_back(offset(i) + row_len(i));
  for (size_t i = 0; i + 1 < parts.size(); ++i)
    require(parts[i] >= parts[i + 1], errc::invalid_argument, "tableau shape is not a partition");
  return Partition(std::move(parts));
}

Partition Tableau::inner_shape() const {
  std::vector<int> parts;
  for (int i = 0; i < num_rows(); ++i) parts.push_back(offset(i));
  return Partition(std::move(parts));
}

std::map<int, int> Tableau::content() const {
  std::map<int, int> c;
  for (const auto& row : rows_)
    for (int v : row) ++c[v];
  return c;
}

int Tableau::max_entry() const {
  int best = 0;
  for (const auto& row : rows_)
    for (int v : row) best = std::max(best, v);
  return best;
}

std::string Tableau::str() const {
  std::ostringstream os;
  os << '[';
  for (int i = 0; i < num_rows(); ++i) {
    if (i) os << '/';
    for (int o = 0; o < offset(i); ++o) os << '.';
    for (int v : rows_[i]) os << v;
  }
  os << ']';
  return os.str();
}

Word row_word(const Tableau& t) {
  require(t.is_straight(), errc::invalid_argument, "row_word requires a straight tableau");
  Word w;
  for (int i = t.num_rows() - 1; i >= 0; --i)
    w.insert(w.end(), t.rows()[i].begin(), t.rows()[i].end());
  return w;
}

Tableau row_insert(Tableau t, int x) {
  require(t.is_straight(), errc::invalid_argument, "row_insert requires a straight tableau");
  require(x > 0, errc::invalid_argument, "row_insert letter must be positive");
  auto rows = t.rows();
  int carry = x;
  for (size_t r = 0;; ++r) {
    if (r == rows.size()) {
      rows.push_back({carry});
      break;
    }
    auto& row = rows[r];
    auto it = std::upper_bound(row.begin(), row.end(), carry);
    if (it == row.end()) {
      row.push_back(carry);
      break;
    }
    std::swap(*it, carry);
  }
  return Tableau::straight(std::move(rows));
}

Tableau row_insert_word(Tableau t, const Word& w) {
  for (int x : w) t = row_insert(std::move(t), x);
  return t;
}

Partition conjugate(const Partition& p) { return p.conjugate(); }

namespace {

// Backtracking enumeration over an arbitrary cell list with <=/< constraints
// between cell indices.  Cells are filled in the given order; a constraint is
// checked as soon as both endpoints are assigned.
std::vector<std::vector<int>> enumerate_fillings(
    const std::vector<std::pair<int, int>>& cells,
    const std::vector<CylindricShape::Constraint>& constraints, int max_entry) {
  const int count = static_cast<int>(cells.size());
  // For a constraint a<=b, check it while filling index max(a,b): the other
  // endpoint is already assigned.
  struct Check {
    int other;
    bool strict;
    bool other_is_smaller_side;  // true if `other` plays the role of a in a<=b
  };
  std::vector<std::vector<Check>> by_cell(count);
  for (const auto& c : constraints) {
    if (c.a == c.b) continue;
    int last = std::max(c.a, c.b);
    int other = c.a + c.b - last;
    by_cell[last].push_back({other, c.strict, other == c.a});
  }

  std::vector<std::vector<int>> out;
  std::vector<int> vals(count, 0);
  std::function<void(int)> rec = [&](int idx) {
    if (idx == count) {
      out.push_back(vals);
      return;
    }
    for (int v = 1; v <= max_entry; ++v) {
      vals[idx] = v;
      bool ok = true;
      for (const auto& ch : by_cell[idx]) {
        int a = ch.other_is_smaller_side ? vals[ch.other] : v;
        int b = ch.other_is_smaller_side ? v : vals[ch.other];
        if (ch.strict ? !(a < b) : !(a <= b)) {
          ok = false;
          break;
        }
      }
      if (ok) rec(idx + 1);
    }
    vals[idx] = 0;
  };
  rec(0);
  return out;
}

std::vector<CylindricShape::Constraint> plain_constraints(
    const std::vector<std::pair<int, int>>& cells) {
  std::map<std::pair<int, int>, int> index;
  for (size_t i = 0; i < cells.size(); ++i) index[cells[i]] = static_cast<int>(i);
  std::vector<CylindricShape::Constraint> cs;
  for (size_t i = 0; i < cells.size(); ++i) {
    auto [row, col] = cells[i];
    if (auto it = index.find({row, col + 1}); it != index.end())
      cs.push_back({static_cast<int>(i), it->second, false});
    if (auto it = index.find({row + 1, col}); it != index.end())
      cs.push_back({static_cast<int>(i), it->second, true});
  }
  return cs;
}

Tableau filling_to_tableau(const SkewShape& shape, const std::vector<std::pair<int, int>>& cells,
                           const std::vector<int>& vals) {
  int nrows = shape.outer.rows();
  std::vector<int> offsets(nrows);
  std::vector<std::vector<int>> rows(nrows);
  for (int i = 0; i < nrows; ++i) offsets[i] = shape.inner.part(i);
  for (size_t k = 0; k < cells.size(); ++k) rows[cells[k].first - 1].push_back(vals[k]);
  while (!rows.empty() && rows.back().empty()) {
    rows.pop_back();
    offsets.pop_back();
  }
  return Tableau::skew(std::move(offsets), std::move(rows));
}

void sort_by_row_word(std::vector<Tableau>& ts) {
  std::sort(ts.begin(), ts.end(), [](const Tableau& a, const Tableau& b) {
    auto key = [](const Tableau& t) {
      Word w;
      for (int i = t.num_rows() - 1; i >= 0; --i)
        w.insert(w.end(), t.rows()[i].begin(), t.rows()[i].end());
      return w;
    };
    return key(a) < key(b);
  });
}

}  // namespace

std::vector<std::vector<int>> enumerate_skew_fillings(const SkewShape& shape, int max_entry) {
  auto cells = shape.cell_list();
  return enumerate_fillings(cells, plain_constraints(cells), max_entry);
}

std::vector<Tableau> enumerate_ssyt(const SkewShape& shape, int max_entry) {
  auto cells = shape.cell_list();
  std::vector<Tableau> out;
  for (const auto& vals : enumerate_fillings(cells, plain_constraints(cells), max_entry))
    out.push_back(filling_to_tableau(shape, cells, vals));
  sort_by_row_word(out);
  return out;
}

CylindricShape CylindricShape::build(SkewShape base, int n, int s) {
  require(n >= 2 && s >= 1 && s <= n - 1, errc::invalid_argument,
          "cylindric shape requires 1 <= s <= n-1");
  CylindricShape d;
  d.base_ = std::move(base);
  d.n_ = n;
  d.s_ = s;
  d.cells_ = d.base_.cell_list();
  if (d.base_.outer.part(0) > n - s)
    fail(errc::invalid_cylindric_shape, "longest row " + std::to_string(d.base_.outer.part(0)) +
                                            " exceeds n-s=" + std::to_string(n - s));

  const int rows = d.base_.outer.rows();
  const int shift_c = n - s;
  std::set<std::pair<int, int>> base_set(d.cells_.begin(), d.cells_.end());
  auto copy_of = [&](int row, int col) -> std::pair<bool, int> {
    // find k with (row + k*s, col - k*shift_c) in base
    for (int k = -(rows + 1); k <= rows + 1; ++k)
      if (base_set.count({row + k * s, col - k * shift_c})) return {true, k};
    return {false, 0};
  };

  // copies must be pairwise disjoint
  for (int k = 1; k <= rows + 1; ++k)
    for (auto [row, col] : d.cells_)
      if (base_set.count({row - k * s, col + k * shift_c}))
        fail(errc::invalid_cylindric_shape, "periodic copies overlap");

  // convexity: within each connected component of the propagated union, any
  // two comparable cells must span a rectangle lying in the union.  Copies
  // that never touch (lambda_1 < n-s) impose no wrap constraints and reduce
  // to the plain skew case.
  std::vector<std::pair<int, int>> window;
  for (int k = -(rows + 1); k <= rows + 1; ++k)
    for (auto [row, col] : d.cells_) window.push_back({row - k * s, col + k * shift_c});
  std::set<std::pair<int, int>> window_set(window.begin(), window.end());
  std::map<std::pair<int, int>, int> comp;
  int comp_id = 0;
  for (const auto& start : window) {
    if (comp.count(start)) continue;
    std::vector<std::pair<int, int>> stack{start};
    comp[start] = comp_id;
    while (!stack.empty()) {
      auto [r, c] = stack.back();
      stack.pop_back();
      for (auto [dr, dc] : {std::pair{1, 0}, {-1, 0}, {0, 1}, {0, -1}}) {
        std::pair<int, int> nb{r + dr, c + dc};
        if (window_set.count(nb) && !comp.count(nb)) {
          comp[nb] = comp_id;
          stack.push_back(nb);
        }
      }
    }
    ++comp_id;
  }
  for (auto u : d.cells_) {
    for (auto v : window) {
      if (comp.at(u) != comp.at(v)) continue;
      auto [ur, uc] = u;
      auto [vr, vc] = v;
      bool comparable = (ur <= vr && uc <= vc) || (vr <= ur && vc <= uc);
      if (!comparable) continue;
      for (int r = std::min(ur, vr); r <= std::max(ur, vr); ++r)
        for (int c = std::min(uc, vc); c <= std::max(uc, vc); ++c)
          if (!copy_of(r, c).first)
            fail(errc::invalid_cylindric_shape, "propagation is not a convex subposet");
    }
  }

  // constraints: right and down neighbours, mapped back into the fundamental
  // domain when they land on another copy
  std::map<std::pair<int, int>, int> index;
  for (size_t i = 0; i < d.cells_.size(); ++i) index[d.cells_[i]] = static_cast<int>(i);
  auto add_neighbour = [&](int i, int row, int col, bool strict) {
    auto [found, k] = copy_of(row, col);
    if (!found) return;
    auto rep = std::make_pair(row + k * s, col - k * shift_c);
    d.constraints_.push_back({i, index.at(rep), strict});
  };
  for (size_t i = 0; i < d.cells_.size(); ++i) {
    auto [row, col] = d.cells_[i];
    add_neighbour(static_cast<int>(i), row, col + 1, false);
    add_neighbour(static_cast<int>(i), row + 1, col, true);
  }
  return d;
}

CylindricShape build_cylindric_shape(const SkewShape& base, int n, int s) {
  return CylindricShape::build(base, n, s);
}

bool CylindricShape::in_union(int row, int col) const {
  const int rows = base_.outer.rows();
  std::set<std::pair<int, int>> base_set(cells_.begin(), cells_.end());
  for (int k = -(rows + 1); k <= rows + 1; ++k)
    if (base_set.count({row + k * s_, col - k * (n_ - s_)})) return true;
  return false;
}

std::string CylindricShape::str() const {
  std::ostringstream os;
  os << "D_" << s_ << "(" << base_.str() << "; n=" << n_ << ")";
  return os.str();
}

std::vector<std::vector<int>> enumerate_cylindric_fillings(const CylindricShape& shape,
                                                           int max_entry) {
  return enumerate_fillings(shape.cells(), shape.constraints(), max_entry);
}

std::vector<Tableau> enumerate_cylindric_ssyt(const CylindricShape& shape, int max_entry) {
  std::vector<Tableau> out;
  for (const auto& vals : enumerate_cylindric_fillings(shape, max_entry))
    out.push_back(filling_to_tableau(shape.base(), shape.cells(), vals));
  sort_by_row_word(out);
  return out;
}

std::vector<Word> weakly_increasing_words(int n, int w) {
  std::vector<Word> out;
  Word cur;
  std::function<void(int)> rec = [&](int lo) {
    if (static_cast<int>(cur.size()) == w) {
      out.push_back(cur);
      return;
    }
    for (int v = lo; v <= n; ++v) {
      cur.push_back(v);
      rec(v);
      cur.pop_back();
    }
  };
  rec(1);
  return out;
}

std::string word_str(const Word& w) {
  std::string s;
  for (int v : w) s += std::to_string(v);
  return s;
}

}  // namespace bbrc

#include "crystals.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <sstream>

namespace bbrc {

KRElement::KRElement(Tableau tab, int alphabet) : t(std::move(tab)), n(alphabet) {
  require(n >= 2, errc::invalid_argument, "alphabet size must be >= 2");
  require(!t.empty(), errc::invalid_argument, "KR element must be nonempty");
  require(t.is_straight(), errc::invalid_argument, "KR element must be a straight tableau");
  const int w = t.row_len(0);
  for (int i = 0; i < t.num_rows(); ++i)
    require(t.row_len(i) == w, errc::invalid_argument, "KR element must be rectangular");
  require(t.num_rows() <= n - 1, errc::invalid_argument, "KR element height must be <= n-1");
  require(t.is_semistandard(), errc::invalid_argument, "KR element must be semistandard");
  require(t.max_entry() <= n, errc::invalid_argument, "KR element letters must be <= n");
}

TensorElement::TensorElement(std::vector<KRElement> fs, int alphabet)
    : factors(std::move(fs)), n(alphabet) {
  for (const auto& f : factors)
    require(f.n == n, errc::invalid_argument, "tensor factors must share the alphabet");
}

TensorElement TensorElement::from_words(const std::vector<Word>& words, int alphabet) {
  std::vector<KRElement> fs;
  fs.reserve(words.size());
  for (const auto& w : words) fs.emplace_back(Tableau::one_row(w), alphabet);
  return TensorElement(std::move(fs), alphabet);
}

std::string TensorElement::str() const {
  std::ostringstream os;
  for (int i = 0; i < size(); ++i) {
    if (i) os << "(x)";
    os << factors[i].str();
  }
  return os.str();
}

KRElement highest_weight_element(int r, int s, int n) {
  require(r >= 1 && r <= n - 1 && s >= 1, errc::invalid_argument,
          "highest weight element requires 1 <= r <= n-1 and s >= 1");
  std::vector<std::vector<int>> rows(r, std::vector<int>(s));
  for (int i = 0; i < r; ++i) std::fill(rows[i].begin(), rows[i].end(), i + 1);
  return KRElement(Tableau::straight(std::move(rows)), n);
}

std::vector<KRElement> enumerate_kr(int r, int s, int n) {
  std::vector<KRElement> out;
  for (auto& t : enumerate_ssyt(SkewShape(Partition(std::vector<int>(r, s))), n))
    out.emplace_back(std::move(t), n);
  return out;
}

namespace {

// Reading order compatible with Kashiwara's tensor convention: columns right
// to left, each column top to bottom.
std::vector<std::pair<int, int>> reading_order(const Tableau& t) {
  int width = 0;
  for (int i = 0; i < t.num_rows(); ++i) width = std::max(width, t.row_len(i));
  std::vector<std::pair<int, int>> cells;
  for (int col = width - 1; col >= 0; --col)
    for (int row = 0; row < t.num_rows(); ++row)
      if (col < t.row_len(row)) cells.emplace_back(row, col);
  return cells;
}

struct Signature {
  int eps = 0;
  int phi = 0;
  std::pair<int, int> f_cell{-1, -1};  // leftmost surviving plus
  std::pair<int, int> e_cell{-1, -1};  // rightmost surviving minus
};

Signature signature(int a, const Tableau& t) {
  std::vector<std::pair<int, int>> plus_stack;
  std::vector<std::pair<int, int>> minus_list;
  for (auto [row, col] : reading_order(t)) {
    int v = t.rows()[row][col];
    if (v == a) {
      plus_stack.emplace_back(row, col);
    } else if (v == a + 1) {
      if (!plus_stack.empty())
        plus_stack.pop_back();
      else
        minus_list.emplace_back(row, col);
    }
  }
  Signature sig;
  sig.eps = static_cast<int>(minus_list.size());
  sig.phi = static_cast<int>(plus_stack.size());
  if (!plus_stack.empty()) sig.f_cell = plus_stack.front();
  if (!minus_list.empty()) sig.e_cell = minus_list.back();
  return sig;
}

KRElement with_cell(const KRElement& b, std::pair<int, int> cell, int value) {
  auto rows = b.t.rows();
  rows[cell.first][cell.second] = value;
  return KRElement(Tableau::straight(std::move(rows)), b.n);
}

std::vector<int> letter_counts(const KRElement& b) {
  std::vector<int> c(b.n + 1, 0);
  for (const auto& row : b.t.rows())
    for (int v : row) ++c[v];
  return c;
}

KRElement one_row_from_counts(const std::vector<int>& counts, int n) {
  Word w;
  for (int i = 1; i <= n; ++i) w.insert(w.end(), counts[i], i);
  require(!w.empty(), errc::internal_error, "empty row in R-matrix output");
  return KRElement(Tableau::one_row(std::move(w)), n);
}

// min-plus value of kappa_r at integer occurrence counts, colors mod n
long long theta_kappa(int r, const std::vector<long long>& x, const std::vector<long long>& y,
                      int n) {
  long long best = -1;
  for (int s = 0; s < n; ++s) {
    long long v = 0;
    for (int t = 1; t <= s; ++t) v += y[(r + t) % n];
    for (int t = s + 1; t <= n - 1; ++t) v += x[(r + t) % n];
    best = s == 0 ? v : std::min(best, v);
  }
  return best;
}

// Tropicalized birational R on occurrence-count coordinates: (x, y) are the
// right/left one-row factors, colors canonical mod n.  Returns (new y, new x).
std::pair<std::vector<long long>, std::vector<long long>> trop_R_counts(
    const std::vector<long long>& y, const std::vector<long long>& x, int n) {
  std::vector<long long> kappa(n);
  for (int r = 0; r < n; ++r) kappa[r] = theta_kappa(r, x, y, n);
  std::vector<long long> nx(n), ny(n);
  for (int i = 0; i < n; ++i) {
    nx[i] = y[(i + 1) % n] + kappa[(i + 1) % n] - kappa[i];
    ny[i] = x[(i - 1 + n) % n] + kappa[(i - 1 + n) % n] - kappa[i];
  }
  return {ny, nx};
}

std::pair<KRElement, KRElement> r_unbump(const KRElement& b, const KRElement& b2);

std::pair<KRElement, KRElement> r_one_row(const KRElement& b, const KRElement& b2) {
  const int n = b.n;
  std::vector<long long> y(n, 0), x(n, 0);
  auto cb = letter_counts(b);
  auto cb2 = letter_counts(b2);
  for (int i = 1; i <= n; ++i) {
    y[(i + 1) % n] = cb[i];
    x[i % n] = cb2[i];
  }
  auto [ny, nx] = trop_R_counts(y, x, n);
  std::vector<int> c_counts(n + 1, 0), d_counts(n + 1, 0);
  for (int i = 1; i <= n; ++i) {
    long long cv = ny[(i + 1) % n];
    long long dv = nx[i % n];
    require(cv >= 0 && dv >= 0, errc::internal_error, "negative count in tropical R");
    c_counts[i] = static_cast<int>(cv);
    d_counts[i] = static_cast<int>(dv);
  }
  return {one_row_from_counts(c_counts, n), one_row_from_counts(d_counts, n)};
}

// Exact reverse of (d <- w) = P for weakly increasing w, given the rectangle
// shape of d.  Cells of P outside the rectangle form a horizontal strip that
// is unbumped right to left.
std::pair<KRElement, KRElement> r_unbump(const KRElement& b, const KRElement& b2) {
  const int n = b.n;
  Tableau P = row_insert_word(b2.t, row_word(b.t));
  const int r = b.height(), s = b.width();
  std::vector<std::pair<int, int>> strip;  // (0-based row, 1-based col)
  for (int i = 0; i < P.num_rows(); ++i) {
    int inside = i < r ? s : 0;
    require(P.row_len(i) >= inside, errc::internal_error, "R-matrix: product misses rectangle");
    for (int j = inside + 1; j <= P.row_len(i); ++j) strip.emplace_back(i, j);
  }
  require(static_cast<long long>(strip.size()) == b2.t.size(), errc::internal_error,
          "R-matrix: wrong strip size");
  std::sort(strip.begin(), strip.end(),
            [](const auto& u, const auto& v) { return u.second > v.second; });
  auto rows = P.rows();
  Word w;
  for (auto [row, col] : strip) {
    require(col == static_cast<int>(rows[row].size()), errc::internal_error,
            "R-matrix: strip is not horizontal");
    int x = rows[row].back();
    rows[row].pop_back();
    for (int rr = row - 1; rr >= 0; --rr) {
      auto& above = rows[rr];
      auto it = std::lower_bound(above.begin(), above.end(), x);
      require(it != above.begin(), errc::internal_error, "R-matrix: unbump failed");
      --it;
      std::swap(*it, x);
    }
    w.push_back(x);
  }
  std::reverse(w.begin(), w.end());
  require(std::is_sorted(w.begin(), w.end()), errc::internal_error,
          "R-matrix: extracted word is not a row");
  while (!rows.empty() && rows.back().empty()) rows.pop_back();
  return {KRElement(Tableau::one_row(std::move(w)), n),
          KRElement(Tableau::straight(std::move(rows)), n)};
}

std::pair<KRElement, KRElement> r_brute_force(const KRElement& b, const KRElement& b2) {
  const int n = b.n;
  Tableau P = row_insert_word(b2.t, row_word(b.t));
  std::vector<int> total(n + 1, 0);
  {
    auto cb = letter_counts(b), cb2 = letter_counts(b2);
    for (int i = 1; i <= n; ++i) total[i] = cb[i] + cb2[i];
  }
  std::map<std::vector<int>, std::vector<Tableau>> d_by_content;
  for (auto& d :
       enumerate_ssyt(SkewShape(Partition(std::vector<int>(b.height(), b.width()))), n)) {
    std::vector<int> c(n + 1, 0);
    for (const auto& row : d.rows())
      for (int v : row) ++c[v];
    d_by_content[c].push_back(std::move(d));
  }
  std::vector<std::pair<KRElement, KRElement>> found;
  for (auto& ct :
       enumerate_ssyt(SkewShape(Partition(std::vector<int>(b2.height(), b2.width()))), n)) {
    std::vector<int> rest(n + 1, 0), cc(n + 1, 0);
    for (const auto& row : ct.rows())
      for (int v : row) ++cc[v];
    bool ok = true;
    for (int i = 1; i <= n && ok; ++i) {
      rest[i] = total[i] - cc[i];
      if (rest[i] < 0) ok = false;
    }
    if (!ok) continue;
    auto it = d_by_content.find(rest);
    if (it == d_by_content.end()) continue;
    Word wc = row_word(ct);
    for (const auto& d : it->second)
      if (row_insert_word(d, wc) == P) found.emplace_back(KRElement(ct, n), KRElement(d, n));
  }
  require(found.size() == 1, errc::internal_error,
          "combinatorial R characterization did not single out a candidate");
  return found[0];
}

// Bracket per-factor statistics left to right; collects surviving minus
// factor indices and the surviving plus stack.
void bracket(const TensorElement& p, int a, std::vector<int>& minus_out,
             std::vector<int>& plus_out) {
  for (int k = 0; k < p.size(); ++k) {
    int e = eps_stat(a, p.factors[k]);
    int f = phi_stat(a, p.factors[k]);
    for (int i = 0; i < e; ++i) {
      if (!plus_out.empty())
        plus_out.pop_back();
      else
        minus_out.push_back(k);
    }
    for (int i = 0; i < f; ++i) plus_out.push_back(k);
  }
}

}  // namespace

int eps_stat(int a, const KRElement& b) { return signature(a, b.t).eps; }
int phi_stat(int a, const KRElement& b) { return signature(a, b.t).phi; }

int eps_stat(int a, const TensorElement& p) {
  std::vector<int> minus, plus;
  bracket(p, a, minus, plus);
  return static_cast<int>(minus.size());
}

int phi_stat(int a, const TensorElement& p) {
  std::vector<int> minus, plus;
  bracket(p, a, minus, plus);
  return static_cast<int>(plus.size());
}

std::optional<KRElement> kashiwara(CrystalOp op, int a, const KRElement& b) {
  require(a >= 1 && a <= b.n - 1, errc::invalid_argument, "Kashiwara index out of range");
  Signature sig = signature(a, b.t);
  if (op == CrystalOp::F) {
    if (sig.phi == 0) return std::nullopt;
    return with_cell(b, sig.f_cell, a + 1);
  }
  if (sig.eps == 0) return std::nullopt;
  return with_cell(b, sig.e_cell, a);
}

std::optional<TensorElement> kashiwara(CrystalOp op, int a, const TensorElement& p) {
  require(a >= 1 && a <= p.n - 1, errc::invalid_argument, "Kashiwara index out of range");
  std::vector<int> minus, plus;
  bracket(p, a, minus, plus);
  int target;
  if (op == CrystalOp::F) {
    if (plus.empty()) return std::nullopt;
    target = plus.front();
  } else {
    if (minus.empty()) return std::nullopt;
    target = minus.back();
  }
  auto changed = kashiwara(op, a, p.factors[target]);
  require(changed.has_value(), errc::internal_error, "tensor signature selected a dead factor");
  TensorElement out = p;
  out.factors[target] = *changed;
  return out;
}

std::pair<KRElement, KRElement> combinatorial_R(const KRElement& b, const KRElement& b2) {
  require(b.n == b2.n, errc::invalid_argument, "R-matrix factors must share the alphabet");
  if (b.one_row() && b2.one_row()) {
    auto fast = r_one_row(b, b2);
    assert(fast == r_unbump(b, b2));
    return fast;
  }
  if (b2.one_row()) return r_unbump(b, b2);
  return r_brute_force(b, b2);
}

long long energy_H(const KRElement& b, const KRElement& b2) {
  require(b.n == b2.n, errc::invalid_argument, "energy factors must share the alphabet");
  Tableau P = row_insert_word(b2.t, row_word(b.t));
  long long outside = 0;
  for (int i = 0; i < P.num_rows(); ++i) {
    long long envelope = 0;
    if (i < b.height()) envelope += b.width();
    if (i < b2.height()) envelope += b2.width();
    outside += std::max<long long>(0, P.row_len(i) - envelope);
  }
  return outside;
}

TensorElement apply_R_permutation(TensorElement p, const std::vector<int>& swaps) {
  for (int k : swaps) {
    require(k >= 1 && k < p.size(), errc::invalid_argument,
            "R swap position out of range: " + std::to_string(k));
    auto [c, d] = combinatorial_R(p.factors[k - 1], p.factors[k]);
    p.factors[k - 1] = c;
    p.factors[k] = d;
  }
  return p;
}

}  // namespace bbrc

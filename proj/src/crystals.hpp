#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "tableaux.hpp"

namespace bbrc {

// Element of the Kirillov-Reshetikhin crystal B^{r,s}: a rectangular
// semistandard tableau of height r and width s over letters 1..n.
struct KRElement {
  Tableau t;
  int n = 0;

  KRElement() = default;
  KRElement(Tableau tab, int alphabet);

  int height() const { return t.num_rows(); }
  int width() const { return t.empty() ? 0 : t.row_len(0); }
  bool one_row() const { return height() == 1; }
  std::string str() const { return t.str(); }

  auto operator<=>(const KRElement&) const = default;
};

struct TensorElement {
  std::vector<KRElement> factors;  // b_1 (leftmost) first
  int n = 0;

  TensorElement() = default;
  TensorElement(std::vector<KRElement> fs, int alphabet);
  static TensorElement from_words(const std::vector<Word>& words, int alphabet);

  int size() const { return static_cast<int>(factors.size()); }
  std::string str() const;

  auto operator<=>(const TensorElement&) const = default;
};

KRElement highest_weight_element(int r, int s, int n);
std::vector<KRElement> enumerate_kr(int r, int s, int n);

enum class CrystalOp { E, F };

// String statistics eps_a = max{k : e_a^k b != 0}, phi_a = max{k : f_a^k b != 0}.
int eps_stat(int a, const KRElement& b);
int phi_stat(int a, const KRElement& b);
int eps_stat(int a, const TensorElement& p);
int phi_stat(int a, const TensorElement& p);

// Classical Kashiwara operators (1 <= a <= n-1); nullopt encodes the crystal
// zero.  Tensor factors combine by the signature rule in Kashiwara's original
// convention.
std::optional<KRElement> kashiwara(CrystalOp op, int a, const KRElement& b);
std::optional<TensorElement> kashiwara(CrystalOp op, int a, const TensorElement& p);

// Combinatorial R-matrix on b (x) b2: returns (c, d) with c of the shape of
// b2 and d of the shape of b, characterized by
// (b2 <- row(b)) = (d <- row(c)).
std::pair<KRElement, KRElement> combinatorial_R(const KRElement& b, const KRElement& b2);

// Energy H(b (x) b2): boxes of (b2 <- row(b)) outside the concatenation of
// the rectangles of b and b2.
long long energy_H(const KRElement& b, const KRElement& b2);

// Apply the local R-matrix at each listed position k (1-based, swapping
// factors k and k+1) in order.
TensorElement apply_R_permutation(TensorElement p, const std::vector<int>& swaps);

}  // namespace bbrc

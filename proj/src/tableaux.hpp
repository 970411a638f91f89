#pragma once

#include <compare>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "common.hpp"

namespace bbrc {

using Word = std::vector<int>;

// Integer partition with weakly decreasing positive parts (no trailing zeros
// stored).  The constructor accepts parts in any order and canonicalizes.
class Partition {
 public:
  Partition() = default;
  explicit Partition(std::vector<int> parts);

  const std::vector<int>& parts() const { return parts_; }
  int part(int i) const { return (i >= 0 && i < rows()) ? parts_[i] : 0; }
  int rows() const { return static_cast<int>(parts_.size()); }
  bool empty() const { return parts_.empty(); }
  long long size() const;
  bool contains(const Partition& inner) const;
  Partition conjugate() const;
  // Number of boxes in the first k columns: sum_i min(k, part_i).
  long long q(long long k) const;
  std::string str() const;

  auto operator<=>(const Partition&) const = default;

 private:
  std::vector<int> parts_;
};

struct SkewShape {
  Partition outer;
  Partition inner;

  SkewShape() = default;
  SkewShape(Partition out, Partition in);
  explicit SkewShape(Partition out) : SkewShape(std::move(out), Partition()) {}

  long long cells() const { return outer.size() - inner.size(); }
  // (row, col) pairs, 1-based, row-major.
  std::vector<std::pair<int, int>> cell_list() const;
  std::string str() const;

  auto operator<=>(const SkewShape&) const = default;
};

// Semistandard filling of a straight or skew shape.  Row i (0-based) holds
// the entries of columns offset(i)+1 .. offset(i)+row_len(i).
class Tableau {
 public:
  Tableau() = default;
  static Tableau straight(std::vector<std::vector<int>> rows);
  static Tableau skew(std::vector<int> offsets, std::vector<std::vector<int>> rows);
  static Tableau one_row(Word w) { return straight({std::move(w)}); }

  int num_rows() const { return static_cast<int>(rows_.size()); }
  int row_len(int i) const { return static_cast<int>(rows_[i].size()); }
  int offset(int i) const { return offsets_.empty() ? 0 : offsets_[i]; }
  const std::vector<std::vector<int>>& rows() const { return rows_; }
  // Entry at 0-based row i and 1-based absolute column j (0 if no cell).
  int at(int i, int j) const;
  bool is_straight() const;
  bool is_semistandard() const;
  bool empty() const { return rows_.empty(); }
  long long size() const;
  Partition shape() const;        // outer shape
  Partition inner_shape() const;  // offsets as a partition
  std::map<int, int> content() const;
  int max_entry() const;
  std::string str() const;

  auto operator<=>(const Tableau&) const = default;

 private:
  std::vector<int> offsets_;  // empty means all-zero (straight)
  std::vector<std::vector<int>> rows_;
};

// Bottom-to-top concatenation of the rows of a straight tableau.
Word row_word(const Tableau& t);
// Schensted row insertion of a single letter / of a word, left to right.
Tableau row_insert(Tableau t, int x);
Tableau row_insert_word(Tableau t, const Word& w);
Partition conjugate(const Partition& p);

// All semistandard fillings of a skew shape with entries in 1..max_entry,
// sorted lexicographically by row-reading word.
std::vector<Tableau> enumerate_ssyt(const SkewShape& shape, int max_entry);

// A skew shape propagated periodically over the cylinder Z^2/(n-s,s)Z.  The
// fundamental domain is the base shape itself; constraints that wrap across
// the shift are recorded against the copy moved s rows up and n-s columns
// right.
class CylindricShape {
 public:
  // Validates that the propagation is a convex subposet of the cylinder.
  // Throws errc::invalid_cylindric_shape otherwise.
  static CylindricShape build(SkewShape base, int n, int s);

  const SkewShape& base() const { return base_; }
  int n() const { return n_; }
  int s() const { return s_; }
  const std::vector<std::pair<int, int>>& cells() const { return cells_; }

  // T(a) <= T(b) (weak, same-row neighbours) or T(a) < T(b) (strict, column
  // neighbours), with both endpoints mapped into the fundamental domain.
  struct Constraint {
    int a;  // index into cells()
    int b;
    bool strict;
  };
  const std::vector<Constraint>& constraints() const { return constraints_; }

  // True if the given absolute (row, col) lies on some periodic copy.
  bool in_union(int row, int col) const;
  // Copy index k such that (row + k*s, col - k*(n-s)) is a base cell, or
  // nullopt.
  std::string str() const;

 private:
  CylindricShape() = default;
  SkewShape base_;
  int n_ = 0;
  int s_ = 0;
  std::vector<std::pair<int, int>> cells_;
  std::vector<Constraint> constraints_;
};

CylindricShape build_cylindric_shape(const SkewShape& base, int n, int s);

// All periodic semistandard fillings of the fundamental domain with entries
// in 1..max_entry, sorted lexicographically by row-reading word.
std::vector<Tableau> enumerate_cylindric_ssyt(const CylindricShape& shape, int max_entry);

// Fillings as flat entry vectors parallel to shape.cells(); cheaper than
// building Tableau objects when only the weights are needed.
std::vector<std::vector<int>> enumerate_cylindric_fillings(const CylindricShape& shape,
                                                           int max_entry);
std::vector<std::vector<int>> enumerate_skew_fillings(const SkewShape& shape, int max_entry);

// Helpers shared by the enumeration code and tests.
std::vector<Word> weakly_increasing_words(int n, int w);
std::string word_str(const Word& w);

}  // namespace bbrc

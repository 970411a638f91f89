#include "rigged.hpp"

#include <algorithm>
#include <limits>
#include <sstream>

namespace bbrc {

namespace {

void sort_strings(std::vector<std::vector<RcString>>& levels) {
  for (auto& level : levels)
    std::sort(level.begin(), level.end(), [](const RcString& a, const RcString& b) {
      return a.length != b.length ? a.length > b.length : a.rigging > b.rigging;
    });
}

long long q_of(const std::vector<int>& lens, long long k) {
  long long total = 0;
  for (int len : lens) total += std::min<long long>(k, len);
  return total;
}

// Mutable state shared by phi, its inverse and the crystal operators: row
// lengths of nu^{(0)} plus raw string lists per level.
struct Work {
  int n;
  std::vector<int> nu0_rows;
  std::vector<std::vector<RcString>> levels;  // index a-1

  explicit Work(int alphabet) : n(alphabet), levels(alphabet - 1) {}

  static Work from(const RiggedConfiguration& rc) {
    Work w(rc.n());
    w.nu0_rows = rc.nu0().parts();
    for (int a = 1; a <= rc.n() - 1; ++a) w.levels[a - 1] = rc.strings(a);
    return w;
  }

  long long q(int a, long long k) const {  // a in 0..n
    if (a == 0) return q_of(nu0_rows, k);
    if (a >= n) return 0;
    long long total = 0;
    for (const auto& s : levels[a - 1]) total += std::min<long long>(k, s.length);
    return total;
  }

  long long vacancy(int a, long long k) const {
    return q(a - 1, k) - 2 * q(a, k) + q(a + 1, k);
  }

  bool singular(int a, const RcString& s) const { return s.rigging == vacancy(a, s.length); }

  RiggedConfiguration to_rc() const {
    return RiggedConfiguration::unchecked(n, Partition(nu0_rows), levels);
  }

  // Add the letter c as the k-th cell of the factor currently being read.
  // The factor's nu^{(0)} row must currently have length k-1.
  void add_letter(int c, int k) {
    require(c >= 1 && c <= n, errc::invalid_argument, "letter out of alphabet");
    // select the lengths ell^{(c-1)} >= ... >= ell^{(1)}
    std::vector<int> ell(c, 0);  // ell[a] for a = 1..c-1
    long long bound = std::numeric_limits<long long>::max();
    for (int a = c - 1; a >= 1; --a) {
      int best = 0;
      for (const auto& s : levels[a - 1])
        if (s.length <= bound && s.length > best && singular(a, s)) best = s.length;
      ell[a] = best;
      bound = best;
    }
    // remove the selected singular strings (vacancies snapshotted first:
    // each removal shifts the vacancy numbers of the adjacent levels)
    std::vector<long long> old_vac(c, 0);
    for (int a = 1; a <= c - 1; ++a)
      if (ell[a] > 0) old_vac[a] = vacancy(a, ell[a]);
    for (int a = 1; a <= c - 1; ++a) {
      if (ell[a] == 0) continue;
      auto& level = levels[a - 1];
      auto it = std::find_if(level.begin(), level.end(), [&](const RcString& s) {
        return s.length == ell[a] && s.rigging == old_vac[a];
      });
      require(it != level.end(), errc::internal_error, "selected string vanished");
      level.erase(it);
    }
    // grow nu^{(0)}
    if (k == 1) {
      nu0_rows.push_back(1);
    } else {
      auto it = std::find(nu0_rows.begin(), nu0_rows.end(), k - 1);
      require(it != nu0_rows.end(), errc::internal_error, "active nu0 row missing");
      *it = k;
    }
    // insert the grown strings, then make them singular in the new state
    std::vector<int> added(c, -1);
    for (int a = 1; a <= c - 1; ++a) {
      levels[a - 1].push_back({ell[a] + 1, 0});
      added[a] = static_cast<int>(levels[a - 1].size()) - 1;
    }
    for (int a = 1; a <= c - 1; ++a)
      levels[a - 1][added[a]].rigging = static_cast<int>(vacancy(a, ell[a] + 1));
  }

  // Reverse one letter from a factor whose nu^{(0)} row currently has length
  // k; returns the letter.
  int remove_letter(int k) {
    long long bound = k;
    int c = n;
    std::vector<int> sel(n, 0);  // chosen string length per level a = 1..c-1
    for (int a = 1; a <= n - 1; ++a) {
      int best = -1;
      for (const auto& s : levels[a - 1])
        if (s.length >= bound && singular(a, s) && (best < 0 || s.length < best))
          best = s.length;
      if (best < 0) {
        c = a;
        break;
      }
      sel[a] = best;
      bound = best;
    }
    std::vector<long long> old_vac(c, 0);
    for (int a = 1; a <= c - 1; ++a) old_vac[a] = vacancy(a, sel[a]);
    for (int a = 1; a <= c - 1; ++a) {
      auto& level = levels[a - 1];
      auto it = std::find_if(level.begin(), level.end(), [&](const RcString& s) {
        return s.length == sel[a] && s.rigging == old_vac[a];
      });
      require(it != level.end(), errc::internal_error, "selected string vanished");
      level.erase(it);
    }
    auto it = std::find(nu0_rows.begin(), nu0_rows.end(), k);
    require(it != nu0_rows.end(), errc::invalid_rigged_configuration,
            "nu^{(0)} has no row of the required length");
    if (k == 1)
      nu0_rows.erase(it);
    else
      *it = k - 1;
    std::vector<int> added(c, -1);
    for (int a = 1; a <= c - 1; ++a) {
      if (sel[a] - 1 == 0) continue;
      levels[a - 1].push_back({sel[a] - 1, 0});
      added[a] = static_cast<int>(levels[a - 1].size()) - 1;
    }
    for (int a = 1; a <= c - 1; ++a)
      if (added[a] >= 0)
        levels[a - 1][added[a]].rigging = static_cast<int>(vacancy(a, sel[a] - 1));
    return c;
  }
};

}  // namespace

RiggedConfiguration::RiggedConfiguration(int n) : n_(n), strings_(n - 1) {
  require(n >= 2, errc::invalid_argument, "rigged configuration needs n >= 2");
}

RiggedConfiguration RiggedConfiguration::unchecked(int n, Partition nu0,
                                                   std::vector<std::vector<RcString>> strings) {
  require(n >= 2, errc::invalid_argument, "rigged configuration needs n >= 2");
  require(static_cast<int>(strings.size()) == n - 1, errc::invalid_argument,
          "rigged configuration needs n-1 string levels");
  RiggedConfiguration rc;
  rc.n_ = n;
  rc.nu0_ = std::move(nu0);
  rc.strings_ = std::move(strings);
  for (const auto& level : rc.strings_)
    for (const auto& s : level)
      require(s.length >= 1, errc::invalid_argument, "string lengths must be >= 1");
  sort_strings(rc.strings_);
  return rc;
}

RiggedConfiguration RiggedConfiguration::make(int n, Partition nu0,
                                              std::vector<std::vector<RcString>> strings) {
  RiggedConfiguration rc = unchecked(n, std::move(nu0), std::move(strings));
  require(rc.valid_riggings(), errc::invalid_rigged_configuration,
          "rigging exceeds vacancy number");
  return rc;
}

const std::vector<RcString>& RiggedConfiguration::strings(int a) const {
  require(a >= 1 && a <= n_ - 1, errc::invalid_argument, "string level out of range");
  return strings_[a - 1];
}

Partition RiggedConfiguration::shape(int a) const {
  require(a >= 0 && a <= n_ - 1, errc::invalid_argument, "shape level out of range");
  if (a == 0) return nu0_;
  std::vector<int> parts;
  for (const auto& s : strings_[a - 1]) parts.push_back(s.length);
  return Partition(std::move(parts));
}

long long RiggedConfiguration::vacancy(int a, long long k) const {
  require(a >= 1 && a <= n_ - 1, errc::invalid_argument, "vacancy level out of range");
  auto q = [&](int b) -> long long {
    if (b == 0) return nu0_.q(k);
    if (b >= n_) return 0;
    long long total = 0;
    for (const auto& s : strings_[b - 1]) total += std::min<long long>(k, s.length);
    return total;
  };
  return q(a - 1) - 2 * q(a) + q(a + 1);
}

bool RiggedConfiguration::valid_riggings() const {
  for (int a = 1; a <= n_ - 1; ++a)
    for (const auto& s : strings_[a - 1])
      if (s.rigging > vacancy(a, s.length)) return false;
  return true;
}

bool RiggedConfiguration::empty() const {
  if (!nu0_.empty()) return false;
  for (const auto& level : strings_)
    if (!level.empty()) return false;
  return true;
}

std::string RiggedConfiguration::str() const {
  std::ostringstream os;
  os << "nu0=" << nu0_.str();
  for (int a = 1; a <= n_ - 1; ++a) {
    os << " | " << a << ":";
    for (const auto& s : strings_[a - 1]) os << " (" << s.length << "," << s.rigging << ")";
  }
  return os.str();
}

namespace {

void feed_path(Work& w, const TensorElement& p,
               std::vector<RiggedConfiguration>* snapshots) {
  for (const auto& f : p.factors) {
    require(f.one_row(), errc::invalid_argument, "phi acts on one-row paths");
    const Word& row = f.t.rows()[0];
    const int width = static_cast<int>(row.size());
    for (int k = 1; k <= width; ++k) {
      w.add_letter(row[width - k], k);
      if (snapshots) snapshots->push_back(w.to_rc());
    }
  }
}

}  // namespace

RiggedConfiguration phi(const TensorElement& p) {
  Work w(p.n);
  feed_path(w, p, nullptr);
  return w.to_rc();
}

std::vector<RiggedConfiguration> phi_steps(const TensorElement& p) {
  Work w(p.n);
  std::vector<RiggedConfiguration> out;
  feed_path(w, p, &out);
  return out;
}

TensorElement phi_inverse(const RiggedConfiguration& rc, const std::vector<int>& shape_order) {
  require(rc.valid_riggings(), errc::invalid_rigged_configuration,
          "rigging exceeds vacancy number");
  {
    std::vector<int> sorted = shape_order;
    for (int s : sorted)
      require(s >= 1, errc::invalid_argument, "factor widths must be >= 1");
    std::sort(sorted.begin(), sorted.end(), std::greater<int>());
    require(Partition(sorted) == rc.nu0(), errc::invalid_rigged_configuration,
            "shape order does not match nu^{(0)}");
  }
  Work w = Work::from(rc);
  const int m = static_cast<int>(shape_order.size());
  std::vector<Word> words(m);
  for (int i = m - 1; i >= 0; --i) {
    for (int k = shape_order[i]; k >= 1; --k) {
      int c = w.remove_letter(k);
      // letters come out left to right along the factor's row
      if (!words[i].empty() && words[i].back() > c)
        fail(errc::invalid_rigged_configuration,
             "recovered letters do not form a weakly increasing row");
      words[i].push_back(c);
    }
  }
  for (const auto& level : w.levels)
    if (!level.empty())
      fail(errc::invalid_rigged_configuration, "leftover strings after the reverse algorithm");
  require(w.nu0_rows.empty(), errc::internal_error, "leftover nu^{(0)} rows");
  if (m == 0) return TensorElement({}, rc.n());
  return TensorElement::from_words(words, rc.n());
}

std::optional<RiggedConfiguration> rc_kashiwara(CrystalOp op, int a,
                                                const RiggedConfiguration& rc) {
  require(a >= 1 && a <= rc.n() - 1, errc::invalid_argument, "Kashiwara index out of range");
  Work w = Work::from(rc);
  auto& level = w.levels[a - 1];

  int x = 0;  // smallest rigging; the implicit (0,0) string contributes 0
  for (const auto& s : level) x = std::min(x, s.rigging);

  int target_len;     // string to replace (0 means the implicit (0,0))
  int new_len;        // its new length
  int new_rigging;
  if (op == CrystalOp::E) {
    if (x >= 0) return std::nullopt;
    target_len = std::numeric_limits<int>::max();
    for (const auto& s : level)
      if (s.rigging == x) target_len = std::min(target_len, s.length);
    new_len = target_len - 1;
    new_rigging = x + 1;
  } else {
    target_len = 0;
    for (const auto& s : level)
      if (s.rigging == x) target_len = std::max(target_len, s.length);
    new_len = target_len + 1;
    new_rigging = x - 1;
  }

  // snapshot coriggings of everything that stays
  std::vector<std::vector<long long>> cor(w.n - 1);
  for (int b = 1; b <= w.n - 1; ++b)
    for (const auto& s : w.levels[b - 1])
      cor[b - 1].push_back(w.vacancy(b, s.length) - s.rigging);

  int replaced_index = -1;
  if (target_len > 0) {
    for (size_t i = 0; i < level.size(); ++i)
      if (level[i].length == target_len && level[i].rigging == x) {
        replaced_index = static_cast<int>(i);
        break;
      }
    require(replaced_index >= 0, errc::internal_error, "target string vanished");
    if (new_len == 0) {
      level.erase(level.begin() + replaced_index);
      cor[a - 1].erase(cor[a - 1].begin() + replaced_index);
      replaced_index = -1;
    } else {
      level[replaced_index].length = new_len;
    }
  } else {
    level.push_back({new_len, 0});
    cor[a - 1].push_back(0);  // placeholder, overwritten below
    replaced_index = static_cast<int>(level.size()) - 1;
  }

  // restore coriggings of untouched strings against the new vacancies
  for (int b = 1; b <= w.n - 1; ++b)
    for (size_t i = 0; i < w.levels[b - 1].size(); ++i) {
      if (b == a && static_cast<int>(i) == replaced_index) continue;
      auto& s = w.levels[b - 1][i];
      s.rigging = static_cast<int>(w.vacancy(b, s.length) - cor[b - 1][i]);
    }
  if (replaced_index >= 0) level[replaced_index].rigging = new_rigging;

  if (op == CrystalOp::F && new_rigging > w.vacancy(a, new_len)) return std::nullopt;
  return w.to_rc();
}

bool is_highest_weight(const RiggedConfiguration& rc) {
  for (int a = 1; a <= rc.n() - 1; ++a)
    for (const auto& s : rc.strings(a))
      if (s.rigging < 0 || s.rigging > rc.vacancy(a, s.length)) return false;
  return true;
}

}  // namespace bbrc

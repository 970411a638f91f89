#include "loopsym.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <sstream>

namespace bbrc {

LoopMonomial monomial_from_vars(std::vector<LoopVar> vars) {
  std::sort(vars.begin(), vars.end());
  LoopMonomial mono;
  for (const auto& v : vars) {
    if (!mono.empty() && mono.back().first == v)
      ++mono.back().second;
    else
      mono.push_back({v, 1});
  }
  return mono;
}

LoopPolynomial LoopPolynomial::constant(int m, int n, BigInt c) {
  LoopPolynomial p(m, n);
  p.add_term({}, std::move(c));
  return p;
}

void LoopPolynomial::add_term(LoopMonomial mono, BigInt coeff) {
  if (coeff == 0) return;
  auto it = terms_.find(mono);
  if (it == terms_.end()) {
    terms_.emplace(std::move(mono), std::move(coeff));
  } else {
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
  }
}

LoopPolynomial LoopPolynomial::operator+(const LoopPolynomial& o) const {
  LoopPolynomial out = *this;
  for (const auto& [mono, c] : o.terms_) out.add_term(mono, c);
  return out;
}

LoopPolynomial LoopPolynomial::operator-(const LoopPolynomial& o) const {
  LoopPolynomial out = *this;
  for (const auto& [mono, c] : o.terms_) out.add_term(mono, -c);
  return out;
}

LoopPolynomial LoopPolynomial::operator*(const LoopPolynomial& o) const {
  LoopPolynomial out(std::max(m_, o.m_), std::max(n_, o.n_));
  for (const auto& [ma, ca] : terms_) {
    for (const auto& [mb, cb] : o.terms_) {
      LoopMonomial mono;
      mono.reserve(ma.size() + mb.size());
      auto ia = ma.begin();
      auto ib = mb.begin();
      while (ia != ma.end() || ib != mb.end()) {
        if (ib == mb.end() || (ia != ma.end() && ia->first < ib->first))
          mono.push_back(*ia++);
        else if (ia == ma.end() || ib->first < ia->first)
          mono.push_back(*ib++);
        else {
          mono.push_back({ia->first, ia->second + ib->second});
          ++ia;
          ++ib;
        }
      }
      out.add_term(std::move(mono), ca * cb);
    }
  }
  return out;
}

std::string LoopPolynomial::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [mono, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << c.str();
    for (const auto& [var, exp] : mono)
      for (int e = 0; e < exp; ++e) os << " * x[" << var.beam << "]^(" << var.color << ")";
  }
  return os.str();
}

RationalPoint::RationalPoint(int beams, int colors)
    : m(beams), n(colors), v(beams, std::vector<Rational>(colors, Rational(1))) {}

Rational eval(const LoopPolynomial& f, const RationalPoint& p) {
  Rational total(0);
  for (const auto& [mono, c] : f.terms()) {
    Rational term(c);
    for (const auto& [var, exp] : mono)
      for (int e = 0; e < exp; ++e) term *= p.at(var.beam, var.color);
    total += term;
  }
  return total;
}

LoopPolynomial elementary_e(int k, int r, int m, int n) {
  require(m >= 1 && n >= 1, errc::invalid_argument, "elementary_e requires m, n >= 1");
  LoopPolynomial out(m, n);
  if (k < 0 || k > m) return out;
  if (k == 0) return LoopPolynomial::constant(m, n, 1);
  std::vector<int> idx;
  std::function<void(int)> rec = [&](int lo) {
    if (static_cast<int>(idx.size()) == k) {
      std::vector<LoopVar> vars;
      for (int t = 0; t < k; ++t) vars.push_back({idx[t], ((r + t) % n + n) % n});
      out.add_term(monomial_from_vars(std::move(vars)), 1);
      return;
    }
    for (int i = lo; i <= m; ++i) {
      idx.push_back(i);
      rec(i + 1);
      idx.pop_back();
    }
  };
  rec(1);
  return out;
}

LoopPolynomial tau_poly(int k, int a, int m, int n) {
  require(m >= 1 && n >= 2, errc::invalid_argument, "tau requires m >= 1 and n >= 2");
  LoopPolynomial out(m, n);
  if (k < 0 || k > (n - 1) * m) return out;
  if (k == 0) return LoopPolynomial::constant(m, n, 1);
  std::vector<int> gamma;
  std::function<void(int)> rec = [&](int lo) {
    if (static_cast<int>(gamma.size()) == k) {
      std::vector<LoopVar> vars;
      for (int t = 0; t < k; ++t) vars.push_back({gamma[t], ((a - t) % n + n) % n});
      out.add_term(monomial_from_vars(std::move(vars)), 1);
      return;
    }
    for (int g = lo; g <= m; ++g) {
      int used = 0;
      for (auto it = gamma.rbegin(); it != gamma.rend() && *it == g; ++it) ++used;
      if (used >= n - 1) continue;
      gamma.push_back(g);
      rec(g);
      gamma.pop_back();
    }
  };
  rec(1);
  return out;
}

namespace {

LoopPolynomial schur_from_fillings(const std::vector<std::pair<int, int>>& cells,
                                   const std::vector<std::vector<int>>& fillings, int r, int m,
                                   int n) {
  LoopPolynomial out(m, n);
  if (cells.empty()) return LoopPolynomial::constant(m, n, 1);
  for (const auto& vals : fillings) {
    std::vector<LoopVar> vars;
    vars.reserve(cells.size());
    for (size_t i = 0; i < cells.size(); ++i) {
      auto [row, col] = cells[i];
      int color = ((row - col + r) % n + n) % n;
      vars.push_back({vals[i], color});
    }
    out.add_term(monomial_from_vars(std::move(vars)), 1);
  }
  return out;
}

}  // namespace

LoopPolynomial loop_schur(const SkewShape& shape, int r, int m, int n) {
  return schur_from_fillings(shape.cell_list(), enumerate_skew_fillings(shape, m), r, m, n);
}

LoopPolynomial cylindric_loop_schur(const CylindricShape& shape, int r, int m) {
  return schur_from_fillings(shape.cells(), enumerate_cylindric_fillings(shape, m), r, m,
                             shape.n());
}

Rational kappa(int r, const std::vector<Rational>& x, const std::vector<Rational>& y) {
  require(x.size() == y.size() && !x.empty(), errc::invalid_argument,
          "kappa requires two n-tuples");
  const int n = static_cast<int>(x.size());
  Rational total(0);
  for (int s = 0; s < n; ++s) {
    Rational term(1);
    for (int t = 1; t <= s; ++t) term *= y[((r + t) % n + n) % n];
    for (int t = s + 1; t <= n - 1; ++t) term *= x[((r + t) % n + n) % n];
    total += term;
  }
  return total;
}

LoopPolynomial kappa_poly(int r, int n) {
  require(n >= 1, errc::invalid_argument, "kappa_poly requires n >= 1");
  LoopPolynomial out(2, n);
  for (int s = 0; s < n; ++s) {
    std::vector<LoopVar> vars;
    for (int t = 1; t <= s; ++t) vars.push_back({2, ((r + t) % n + n) % n});
    for (int t = s + 1; t <= n - 1; ++t) vars.push_back({1, ((r + t) % n + n) % n});
    out.add_term(monomial_from_vars(std::move(vars)), 1);
  }
  return out;
}

RationalPoint birational_R_point(const RationalPoint& p, int j) {
  require(j >= 1 && j < p.m, errc::invalid_argument, "R_j requires 1 <= j < m");
  const int n = p.n;
  const auto& x = p.v[j - 1];
  const auto& y = p.v[j];
  std::vector<Rational> k(n);
  for (int r = 0; r < n; ++r) k[r] = kappa(r, x, y);
  RationalPoint out = p;
  for (int i = 0; i < n; ++i) {
    out.v[j - 1][i] = y[(i + 1) % n] * k[(i + 1) % n] / k[i];
    out.v[j][i] = x[(i - 1 + n) % n] * k[(i - 1 + n) % n] / k[i];
  }
  return out;
}

bool invariance_check(const LoopPolynomial& f, int trials, std::uint64_t seed) {
  require(f.beams() >= 1 && f.colors() >= 1, errc::invalid_argument,
          "invariance check needs declared beams and colors");
  Rng rng(seed);
  for (int t = 0; t < trials; ++t) {
    RationalPoint p(f.beams(), f.colors());
    for (auto& beam : p.v)
      for (auto& value : beam) value = Rational(rng.uniform(1, 1000000));
    Rational v = eval(f, p);
    for (int j = 1; j < f.beams(); ++j)
      if (eval(f, birational_R_point(p, j)) != v) return false;
  }
  return true;
}

namespace {

// Edges of a highway path on the grid network: horizontal segments between
// consecutive loops and vertical steps along a loop.  Wires are labelled by
// their source 0..n-1.
struct PathTrace {
  std::set<std::pair<int, int>> h_edges;  // (wire, gap index 0..m)
  std::set<std::pair<int, int>> v_edges;  // (wire, loop)
  std::vector<LoopVar> weight;
  int final_wire = 0;
};

PathTrace trace_path(int source, const std::vector<int>& straight, int m, int n) {
  PathTrace tr;
  int w = source;
  tr.h_edges.insert({w, 0});
  size_t next = 0;
  for (int k = 1; k <= m; ++k) {
    if (next < straight.size() && straight[next] == k) {
      tr.weight.push_back({k, ((w + k - 1) % n + n) % n});
      ++next;
    } else {
      tr.v_edges.insert({w, k});
      w = (w - 1 + n) % n;
    }
    tr.h_edges.insert({w, k});
  }
  tr.final_wire = w;
  return tr;
}

void subsets_of_size(int m, int h, std::vector<std::vector<int>>& out) {
  std::vector<int> cur;
  std::function<void(int)> rec = [&](int lo) {
    if (static_cast<int>(cur.size()) == h) {
      out.push_back(cur);
      return;
    }
    for (int v = lo; v <= m; ++v) {
      cur.push_back(v);
      rec(v + 1);
      cur.pop_back();
    }
  };
  rec(1);
}

}  // namespace

LoopPolynomial noncrossing_generating_function(const CylindricShape& shape, int r, int m) {
  const int n = shape.n();
  const int s = shape.s();
  const int cols = n - s;
  Partition lam_c = shape.base().outer.conjugate();
  Partition mu_c = shape.base().inner.conjugate();
  require(lam_c.rows() <= cols, errc::invalid_argument,
          "shape has more columns than the network allows");

  std::vector<int> sources(cols), sinks(cols), heights(cols);
  for (int i = 1; i <= cols; ++i) {
    sources[i - 1] = ((mu_c.part(i - 1) - (i - 1) + r) % n + n) % n;
    sinks[i - 1] = ((lam_c.part(i - 1) - i + r) % n + n) % n;
    heights[i - 1] = lam_c.part(i - 1) - mu_c.part(i - 1);
  }

  // candidate paths per column
  std::vector<std::vector<PathTrace>> options(cols);
  for (int i = 0; i < cols; ++i) {
    std::vector<std::vector<int>> subsets;
    subsets_of_size(m, heights[i], subsets);
    for (const auto& sub : subsets) {
      PathTrace tr = trace_path(sources[i], sub, m, n);
      require(tr.final_wire == ((sinks[i] - m + 1) % n + n) % n, errc::internal_error,
              "highway path missed its sink");
      options[i].push_back(std::move(tr));
    }
  }

  LoopPolynomial out(m, n);
  std::vector<const PathTrace*> chosen(cols, nullptr);
  std::function<void(int)> rec = [&](int i) {
    if (i == cols) {
      std::vector<LoopVar> vars;
      for (const auto* tr : chosen)
        vars.insert(vars.end(), tr->weight.begin(), tr->weight.end());
      out.add_term(monomial_from_vars(std::move(vars)), 1);
      return;
    }
    for (const auto& tr : options[i]) {
      bool crossing = false;
      for (int j = 0; j < i && !crossing; ++j) {
        for (const auto& e : tr.h_edges)
          if (chosen[j]->h_edges.count(e)) {
            crossing = true;
            break;
          }
        if (!crossing)
          for (const auto& e : tr.v_edges)
            if (chosen[j]->v_edges.count(e)) {
              crossing = true;
              break;
            }
      }
      if (crossing) continue;
      chosen[i] = &tr;
      rec(i + 1);
      chosen[i] = nullptr;
    }
  };
  rec(0);
  return out;
}

bool cell_transfer_positivity(int n, int m, int N) {
  require(n >= 2 && m >= 1 && N >= 0, errc::invalid_argument,
          "cell transfer check requires n >= 2, m >= 1, N >= 0");
  LoopPolynomial square = tau_poly(N, 0, m, n) * tau_poly(N, 0, m, n);
  LoopPolynomial cross = tau_poly(N - n, 0, m, n) * tau_poly(N + n, 0, m, n);
  LoopPolynomial diff = square - cross;
  for (const auto& [mono, c] : diff.terms())
    if (c < 0) return false;
  return true;
}

}  // namespace bbrc

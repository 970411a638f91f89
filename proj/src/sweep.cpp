#include "sweep.hpp"

#include <algorithm>
#include <sstream>

#include "pathspec.hpp"

namespace bbrc {

namespace {

long long choose(long long a, long long b) {
  if (b < 0 || b > a) return 0;
  b = std::min(b, a - b);
  long long out = 1;
  for (long long i = 1; i <= b; ++i) out = out * (a - b + i) / i;
  return out;
}

// idx-th weakly increasing word of length w over 1..n, lexicographic.
Word unrank_word(int n, int w, long long idx) {
  Word word;
  int lo = 1;
  for (int remaining = w; remaining > 0; --remaining) {
    for (int v = lo; v <= n; ++v) {
      long long block = choose((n - v) + remaining - 1, remaining - 1);
      if (idx < block) {
        word.push_back(v);
        lo = v;
        break;
      }
      idx -= block;
    }
  }
  return word;
}

std::string quote_csv(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

}  // namespace

void for_each_exhaustive_path(int n, int m, int width_cap,
                              const std::function<void(const TensorElement&)>& fn) {
  require(n >= 2 && m >= 1 && width_cap >= 1, errc::invalid_argument,
          "exhaustive sweep needs n >= 2, m >= 1, width_cap >= 1");
  std::vector<std::vector<Word>> by_width(width_cap + 1);
  for (int w = 1; w <= width_cap; ++w) by_width[w] = weakly_increasing_words(n, w);
  std::vector<Word> cur(m);
  std::function<void(int)> rec = [&](int i) {
    if (i == m) {
      fn(TensorElement::from_words(cur, n));
      return;
    }
    for (int w = 1; w <= width_cap; ++w)
      for (const auto& word : by_width[w]) {
        cur[i] = word;
        rec(i + 1);
      }
  };
  rec(0);
}

TensorElement random_path(Rng& rng, int n, int m, int width_cap) {
  std::vector<Word> words;
  words.reserve(m);
  for (int i = 0; i < m; ++i) {
    int w = static_cast<int>(rng.uniform(1, width_cap));
    long long count = choose(n + w - 1, w);
    words.push_back(unrank_word(n, w, rng.uniform(0, count - 1)));
  }
  return TensorElement::from_words(words, n);
}

std::string SweepReport::to_csv() const {
  std::ostringstream os;
  os << "n,m,path,s,phi_shape,formula_shape,match\n";
  for (const auto& r : records)
    os << r.n << ',' << r.m << ',' << quote_csv(r.path) << ',' << r.s << ','
       << quote_csv(r.phi_shape) << ',' << quote_csv(r.formula_shape) << ','
       << (r.match ? 1 : 0) << '\n';
  return os.str();
}

SweepReport sweep_conjecture(int n, int m, int width_cap, int samples, std::uint64_t seed,
                             bool exhaustive) {
  require(n >= 2 && m >= 1 && width_cap >= 1, errc::invalid_argument,
          "sweep needs n >= 2, m >= 1, width_cap >= 1");
  SweepReport report;
  report.n = n;
  report.m = m;
  report.width_cap = width_cap;
  report.samples = samples;
  report.seed = seed;
  report.exhaustive = exhaustive;

  TropicalOracle oracle(n, m);
  auto examine = [&](const TensorElement& p) {
    ++report.paths;
    auto rc = phi(p);
    auto coords = path_coordinates(p);
    std::string path_text = format_path(path_spec_of(p));
    for (int s = 1; s <= n - 1; ++s) {
      SweepRecord rec;
      rec.n = n;
      rec.m = m;
      rec.path = path_text;
      rec.s = s;
      rec.phi_shape = rc.shape(s).str();
      try {
        rec.formula_shape = oracle.conjectured_shape(coords, s).str();
      } catch (const Error& e) {
        rec.formula_shape = std::string("invalid: ") + e.what();
      }
      rec.match = rec.formula_shape == rec.phi_shape;
      if (!rec.match) ++report.mismatches;
      report.records.push_back(std::move(rec));
    }
  };

  if (exhaustive) {
    for_each_exhaustive_path(n, m, width_cap, examine);
  } else {
    Rng rng(seed);
    for (int i = 0; i < samples; ++i) examine(random_path(rng, n, m, width_cap));
  }
  std::sort(report.records.begin(), report.records.end(),
            [](const SweepRecord& a, const SweepRecord& b) {
              return std::tie(a.path, a.s) < std::tie(b.path, b.s);
            });
  return report;
}

}  // namespace bbrc

#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "tropical.hpp"

namespace bbrc {

// One comparison row: the phi shape against the tropical formula shape.
struct SweepRecord {
  int n = 0;
  int m = 0;
  std::string path;
  int s = 0;
  std::string phi_shape;
  std::string formula_shape;
  bool match = true;
};

struct SweepReport {
  int n = 0;
  int m = 0;
  int width_cap = 0;
  int samples = 0;
  std::uint64_t seed = 0;
  bool exhaustive = false;
  long long paths = 0;
  long long mismatches = 0;
  std::vector<SweepRecord> records;

  // columns: n,m,path,s,phi_shape,formula_shape,match
  std::string to_csv() const;
};

SweepReport sweep_conjecture(int n, int m, int width_cap, int samples, std::uint64_t seed,
                             bool exhaustive);

// All paths with m one-row factors of widths 1..width_cap, deterministic
// order.
void for_each_exhaustive_path(int n, int m, int width_cap,
                              const std::function<void(const TensorElement&)>& fn);

// Widths uniform in 1..width_cap; contents uniform over weakly increasing
// words (multisets unranked from a uniform index).
TensorElement random_path(Rng& rng, int n, int m, int width_cap);

}  // namespace bbrc

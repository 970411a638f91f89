#pragma once

#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace bbrc {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

enum class errc {
  parse_error,
  alphabet_error,
  not_weakly_increasing,
  invalid_argument,
  invalid_cylindric_shape,
  invalid_rigged_configuration,
  not_subtraction_free,
  convexity_violation,
  ribbon_removal_failure,
  non_convergence,
  not_a_partition,
  unknown_suite,
  internal_error,
};

class Error : public std::runtime_error {
 public:
  Error(errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
  errc code() const { return code_; }

 private:
  errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& what) { throw Error(code, what); }

inline void require(bool ok, errc code, const std::string& what) {
  if (!ok) fail(code, what);
}

// Seeded mt19937_64 with rejection sampling.  uniform_int_distribution is not
// portable across standard libraries, so ranges are drawn by hand; documented
// in the README for cross-implementation reproducibility.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  std::uint64_t next() { return gen_(); }

  // Uniform on [lo, hi], inclusive.
  long long uniform(long long lo, long long hi) {
    if (lo > hi) fail(errc::invalid_argument, "Rng::uniform: empty range");
    const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
    if (span == 0) return static_cast<long long>(gen_());  // full 64-bit range
    const std::uint64_t rem = (UINT64_MAX % span + 1) % span;
    const std::uint64_t max_ok = UINT64_MAX - rem;
    std::uint64_t u;
    do {
      u = gen_();
    } while (u > max_ok);
    return lo + static_cast<long long>(u % span);
  }

 private:
  std::mt19937_64 gen_;
};

}  // namespace bbrc

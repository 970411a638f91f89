#pragma once

#include <optional>
#include <string>
#include <vector>

#include "crystals.hpp"

namespace bbrc {

struct RcString {
  int length = 0;
  int rigging = 0;
  auto operator<=>(const RcString&) const = default;
};

// Rigged configuration for a tensor product of one-row crystals of type n:
// nu^{(0)} plus, for each a in 1..n-1, a multiset of strings (length, rigging).
// Strings are kept sorted (length desc, rigging desc), so equality is
// multiset equality.
class RiggedConfiguration {
 public:
  RiggedConfiguration() = default;
  explicit RiggedConfiguration(int n);
  // Validates rigging <= vacancy for every string.
  static RiggedConfiguration make(int n, Partition nu0,
                                  std::vector<std::vector<RcString>> strings);
  // Same data, no vacancy validation (used internally by the algorithms).
  static RiggedConfiguration unchecked(int n, Partition nu0,
                                       std::vector<std::vector<RcString>> strings);

  int n() const { return n_; }
  const Partition& nu0() const { return nu0_; }
  const std::vector<RcString>& strings(int a) const;  // 1 <= a <= n-1
  Partition shape(int a) const;                       // 0 <= a <= n-1
  // P^{(a)}_k = Q_k(nu^{(a-1)}) - 2 Q_k(nu^{(a)}) + Q_k(nu^{(a+1)}), nu^{(n)} empty.
  long long vacancy(int a, long long k) const;
  bool valid_riggings() const;  // rigging <= vacancy everywhere
  bool empty() const;
  std::string str() const;

  auto operator<=>(const RiggedConfiguration&) const = default;

 private:
  int n_ = 0;
  Partition nu0_;
  std::vector<std::vector<RcString>> strings_;  // index a-1
};

RiggedConfiguration phi(const TensorElement& p);
// Rigged configurations after each processed letter (letters run right to
// left within a factor, factors left to right).
std::vector<RiggedConfiguration> phi_steps(const TensorElement& p);

// Inverse bijection; shape_order lists the factor widths s_1..s_m left to
// right.  Throws errc::invalid_rigged_configuration when rc is not in the
// image of phi over that shape.
TensorElement phi_inverse(const RiggedConfiguration& rc, const std::vector<int>& shape_order);

std::optional<RiggedConfiguration> rc_kashiwara(CrystalOp op, int a,
                                                const RiggedConfiguration& rc);

// True iff every string has 0 <= rigging <= vacancy.
bool is_highest_weight(const RiggedConfiguration& rc);

}  // namespace bbrc

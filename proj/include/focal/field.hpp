#pragma once

#include <vector>

#include "focal/core.hpp"

namespace focal {

/// GF(p^e) with elements encoded as 0..q-1, the base-p digits being the
/// polynomial coefficients (low degree first) modulo a fixed irreducible;
/// the modulus is the first monic irreducible of degree e in the base-p
/// encoding order, so fields are bit-reproducible.
class PrimePowerField {
 public:
  static PrimePowerField make(int p, int e);

  int p() const { return p_; }
  int e() const { return e_; }
  int q() const { return q_; }

  int add(int a, int b) const;
  int sub(int a, int b) const;
  int neg(int a) const;
  int mul(int a, int b) const;
  int inv(int a) const;  // a != 0
  int pow(int a, long long exp) const;

  /// Modulus coefficients c_0..c_e (monic, c_e = 1).
  const std::vector<int>& modulus() const { return modulus_; }

 private:
  PrimePowerField(int p, int e, std::vector<int> modulus);

  std::vector<int> to_poly(int a) const;
  int from_poly(const std::vector<int>& c) const;

  int p_ = 0;
  int e_ = 0;
  int q_ = 0;
  std::vector<int> modulus_;
};

}  // namespace focal

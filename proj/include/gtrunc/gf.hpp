#pragma once

#include <vector>

namespace gtrunc {

// Arithmetic in GF(q) for the small prime powers needed here. Elements are
// encoded as 0..q-1, the base-p digits being the polynomial coefficients
// (constant term in the lowest digit), so integer order is the additive
// enumeration order.
class GF {
 public:
  explicit GF(int q);  // throws std::invalid_argument for unsupported q

  int q() const { return q_; }
  int p() const { return p_; }

  int add(int a, int b) const;
  int neg(int a) const;
  int sub(int a, int b) const { return add(a, neg(b)); }
  int mul(int a, int b) const { return mul_table_[a * q_ + b]; }
  int inv(int a) const;  // throws on 0
  int one() const { return 1; }

  // Smallest element (in encoding order) generating the multiplicative group.
  int primitive_element() const { return primitive_; }

  static bool supported(int q);

 private:
  int q_, p_, deg_;
  std::vector<int> mul_table_;
  std::vector<int> inv_table_;
  int primitive_;
};

}  // namespace gtrunc

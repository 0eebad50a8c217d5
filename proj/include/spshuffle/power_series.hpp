#pragma once

#include <cstddef>
#include <vector>

#include "spshuffle/integer.hpp"

namespace spshuffle {

// Formal power series truncated after x^order.
class PowerSeries {
 public:
  explicit PowerSeries(std::size_t order) : c_(order + 1) {}

  static PowerSeries one(std::size_t order);
  // 1/(1-x)^k
  static PowerSeries geometric_power(std::size_t order, std::size_t k);

  std::size_t order() const { return c_.size() - 1; }
  Integer& operator[](std::size_t i) { return c_[i]; }
  const Integer& operator[](std::size_t i) const { return c_[i]; }
  const std::vector<Integer>& coefficients() const { return c_; }

  PowerSeries& divide_by_one_minus_x();    // prefix sums
  PowerSeries& multiply_by_one_minus_x();  // first differences
  PowerSeries& shift(std::size_t k);       // times x^k
  PowerSeries& substitute_negative_x();    // f(-x)

  PowerSeries& operator+=(const PowerSeries& o);
  PowerSeries& operator*=(const Integer& s);
  friend PowerSeries operator*(const PowerSeries& a, const PowerSeries& b);
  // Coefficientwise product.
  friend PowerSeries hadamard(const PowerSeries& a, const PowerSeries& b);
  friend bool operator==(const PowerSeries&, const PowerSeries&) = default;

 private:
  std::vector<Integer> c_;
};

}  // namespace spshuffle

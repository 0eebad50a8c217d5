#include "spshuffle/power_series.hpp"

#include <algorithm>

namespace spshuffle {

PowerSeries PowerSeries::one(std::size_t order) {
  PowerSeries s(order);
  s[0] = 1;
  return s;
}

PowerSeries PowerSeries::geometric_power(std::size_t order, std::size_t k) {
  PowerSeries s = one(order);
  for (std::size_t i = 0; i < k; ++i) s.divide_by_one_minus_x();
  return s;
}

PowerSeries& PowerSeries::divide_by_one_minus_x() {
  for (std::size_t i = 1; i < c_.size(); ++i) c_[i] += c_[i - 1];
  return *this;
}

PowerSeries& PowerSeries::multiply_by_one_minus_x() {
  for (std::size_t i = c_.size(); i-- > 1;) c_[i] -= c_[i - 1];
  return *this;
}

PowerSeries& PowerSeries::shift(std::size_t k) {
  const std::size_t n = c_.size();
  for (std::size_t i = n; i-- > 0;) c_[i] = i >= k ? c_[i - k] : Integer(0);
  return *this;
}

PowerSeries& PowerSeries::substitute_negative_x() {
  for (std::size_t i = 1; i < c_.size(); i += 2) c_[i] = -c_[i];
  return *this;
}

PowerSeries& PowerSeries::operator+=(const PowerSeries& o) {
  for (std::size_t i = 0; i < std::min(c_.size(), o.c_.size()); ++i) c_[i] += o.c_[i];
  return *this;
}

PowerSeries& PowerSeries::operator*=(const Integer& s) {
  for (auto& x : c_) x *= s;
  return *this;
}

PowerSeries operator*(const PowerSeries& a, const PowerSeries& b) {
  PowerSeries r(std::min(a.order(), b.order()));
  for (std::size_t i = 0; i <= r.order(); ++i)
    for (std::size_t j = 0; i + j <= r.order(); ++j) r[i + j] += a[i] * b[j];
  return r;
}

PowerSeries hadamard(const PowerSeries& a, const PowerSeries& b) {
  PowerSeries r(std::min(a.order(), b.order()));
  for (std::size_t i = 0; i <= r.order(); ++i) r[i] = a[i] * b[i];
  return r;
}

}  // namespace spshuffle

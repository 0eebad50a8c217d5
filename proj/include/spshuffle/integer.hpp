#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <string>

namespace spshuffle {

using Integer = boost::multiprecision::cpp_int;

inline std::string to_string(const Integer& v) { return v.str(); }

inline Integer sign(std::int64_t exponent) {
  return (exponent % 2 == 0) ? Integer(1) : Integer(-1);
}

}  // namespace spshuffle

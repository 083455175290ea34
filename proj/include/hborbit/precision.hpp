#pragma once

#include <boost/multiprecision/cpp_bin_float.hpp>

namespace hborbit {

// Extended working precision: binary float with a 100-bit significand,
// machine epsilon 2^-99 ~ 1.58e-30. Used by the optional high-accuracy
// solve/verify mode; double is the default everywhere else.
using ExtReal = boost::multiprecision::number<
    boost::multiprecision::cpp_bin_float<100, boost::multiprecision::backends::digit_base_2>>;

}  // namespace hborbit

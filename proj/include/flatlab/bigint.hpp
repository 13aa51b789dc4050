#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace flatlab {

using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

inline BigInt pow2(unsigned e) { return BigInt(1) << e; }

inline std::string to_decimal(const BigInt& v) { return v.str(); }

}  // namespace flatlab

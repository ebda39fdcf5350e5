#ifndef PBMOTZ_BIGINT_HPP_
#define PBMOTZ_BIGINT_HPP_

#include <boost/multiprecision/cpp_int.hpp>

namespace pbmotz {

// All counting is done over arbitrary-precision integers; a(2n) already
// overflows 64 bits near n = 15.  Exact linear algebra uses rationals.
using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

}  // namespace pbmotz

#endif  // PBMOTZ_BIGINT_HPP_

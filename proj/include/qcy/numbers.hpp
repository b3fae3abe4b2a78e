#ifndef QCY_NUMBERS_HPP
#define QCY_NUMBERS_HPP

#include <boost/multiprecision/cpp_int.hpp>

namespace qcy {

// All exact arithmetic in this project runs on arbitrary-precision
// integers/rationals; no filter anywhere is decided by floating point.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

}  // namespace qcy

#endif

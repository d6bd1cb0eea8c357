#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace snake {

// All counting and linear algebra in this library is exact; no floating
// point anywhere on a value path.
using BigInt = boost::multiprecision::cpp_int;

}  // namespace snake

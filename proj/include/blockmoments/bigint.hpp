#ifndef BLOCKMOMENTS_BIGINT_HPP
#define BLOCKMOMENTS_BIGINT_HPP

#include <boost/multiprecision/cpp_int.hpp>

namespace blockmoments {

// Exact arbitrary-precision integer. Moment counts grow like 2^m, so no
// fixed-width type is acceptable anywhere in the counting pipeline.
using BigInt = boost::multiprecision::cpp_int;

}  // namespace blockmoments

#endif  // BLOCKMOMENTS_BIGINT_HPP

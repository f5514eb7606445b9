#ifndef BLOCKMOMENTS_CLOSEDFORM_HPP
#define BLOCKMOMENTS_CLOSEDFORM_HPP

#include <optional>
#include <string>

#include "blockmoments/bigint.hpp"
#include "blockmoments/presentation.hpp"

namespace blockmoments {

/// Which branch of the closed-form case split produced a value.
enum class MomentCase {
  free_generator,     // no power relator
  below_order,        // finite n, m < n
  at_or_above_order,  // finite n, m = k1*n + k2 with k1 >= 1, 0 <= k2 < n
};

std::string to_string(MomentCase label);

struct ClosedFormCase {
  MomentCase label = MomentCase::free_generator;
  // Populated only for at_or_above_order.
  std::optional<unsigned> k1;
  std::optional<unsigned> k2;

  friend bool operator==(const ClosedFormCase&,
                         const ClosedFormCase&) = default;
};

struct ClosedMoment {
  BigInt value;
  ClosedFormCase form;
  // The closed forms assume an order in N \ {1}; the degenerate order 1 is
  // still evaluated verbatim but flagged.
  bool order_one_warning = false;
};

/// Exact binomial coefficient; zero when b > a.
BigInt binomial(unsigned a, unsigned b);

/// The central binomial bracket: binomial(t, t/2) for even t, zero for odd.
BigInt central_bracket(unsigned t);

/// Verbatim closed-form m-th moment of x + x^-1 for a generator of the given
/// order:
///   infinite order          -> central_bracket(m)
///   finite n, m < n         -> central_bracket(m)
///   finite n, m = k1*n + k2 -> (2^k1 - central_bracket(k1)) + central_bracket(m)
/// No correction is applied where the formula disagrees with exact
/// enumeration; reporting both sides is the audit module's job.
ClosedMoment closed_moment(unsigned m, const Order& order);

}  // namespace blockmoments

#endif  // BLOCKMOMENTS_CLOSEDFORM_HPP

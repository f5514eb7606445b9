#include "blockmoments/closedform.hpp"

namespace blockmoments {

std::string to_string(MomentCase label) {
  switch (label) {
    case MomentCase::free_generator:
      return "free_generator";
    case MomentCase::below_order:
      return "below_order";
    case MomentCase::at_or_above_order:
      return "at_or_above_order";
  }
  return "unknown";
}

BigInt binomial(unsigned a, unsigned b) {
  if (b > a) return 0;
  if (b > a - b) b = a - b;
  BigInt result = 1;
  for (unsigned i = 1; i <= b; ++i) {
    result *= a - b + i;
    result /= i;  // exact: result is binomial(a - b + i, i)
  }
  return result;
}

BigInt central_bracket(unsigned t) {
  if (t % 2 != 0) return 0;
  return binomial(t, t / 2);
}

ClosedMoment closed_moment(unsigned m, const Order& order) {
  ClosedMoment out;
  if (!order.is_finite()) {
    out.value = central_bracket(m);
    out.form.label = MomentCase::free_generator;
    return out;
  }
  const unsigned n = order.value();
  out.order_one_warning = (n == 1);
  if (m < n) {
    out.value = central_bracket(m);
    out.form.label = MomentCase::below_order;
    return out;
  }
  const unsigned k1 = m / n;
  const unsigned k2 = m % n;
  out.value = (BigInt(1) << k1) - central_bracket(k1) + central_bracket(m);
  out.form.label = MomentCase::at_or_above_order;
  out.form.k1 = k1;
  out.form.k2 = k2;
  return out;
}

}  // namespace blockmoments

#include "blockmoments/oracle.hpp"

#include <bit>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "blockmoments/closedform.hpp"

namespace blockmoments {

EnumerationCapExceeded::EnumerationCapExceeded(unsigned m)
    : std::runtime_error("enumeration supports m <= " +
                         std::to_string(kEnumerationCap) + ", got m = " +
                         std::to_string(m)),
      m_(m) {}

BigInt exact_moment_dp(unsigned m, const Order& order) {
  if (!order.is_finite()) {
    // Partial sums live in [-m, m]; index i holds sum i - m.
    std::vector<BigInt> state(2 * m + 1);
    state[m] = 1;
    for (unsigned step = 0; step < m; ++step) {
      std::vector<BigInt> next(2 * m + 1);
      for (unsigned i = 0; i <= 2 * m; ++i) {
        if (state[i] == 0) continue;
        if (i > 0) next[i - 1] += state[i];
        if (i < 2 * m) next[i + 1] += state[i];
      }
      state = std::move(next);
    }
    return state[m];
  }
  const unsigned n = order.value();
  std::vector<BigInt> state(n);
  state[0] = 1;
  for (unsigned step = 0; step < m; ++step) {
    std::vector<BigInt> next(n);
    for (unsigned r = 0; r < n; ++r) {
      if (state[r] == 0) continue;
      next[(r + 1) % n] += state[r];
      next[(r + n - 1) % n] += state[r];
    }
    state = std::move(next);
  }
  return state[0];
}

BigInt exact_moment_binomial(unsigned m, const Order& order) {
  BigInt count = 0;
  for (int s = -static_cast<int>(m); s <= static_cast<int>(m); s += 2) {
    bool qualifies;
    if (order.is_finite()) {
      const auto n = static_cast<int>(order.value());
      qualifies = ((s % n) + n) % n == 0;
    } else {
      qualifies = (s == 0);
    }
    if (qualifies) count += binomial(m, static_cast<unsigned>(m + s) / 2);
  }
  return count;
}

BigInt exact_moment_enum(unsigned m, const Order& order) {
  if (m > kEnumerationCap) throw EnumerationCapExceeded(m);
  const std::uint64_t total = std::uint64_t{1} << m;
  std::uint64_t count = 0;
  for (std::uint64_t mask = 0; mask < total; ++mask) {
    const int sum = 2 * std::popcount(mask) - static_cast<int>(m);
    if (order.is_finite()) {
      const auto n = static_cast<int>(order.value());
      if (((sum % n) + n) % n == 0) ++count;
    } else if (sum == 0) {
      ++count;
    }
  }
  return count;
}

SequenceClassification classify_sequences(unsigned m, unsigned n) {
  if (m == 0) throw std::invalid_argument("m must be >= 1");
  if (n == 0) throw std::invalid_argument("n must be >= 1");
  if (m > kEnumerationCap) throw EnumerationCapExceeded(m);

  SequenceClassification out;
  out.m = m;
  out.n = n;
  const bool blocked = (m % n == 0);
  unsigned k = 0;
  if (blocked) {
    k = m / n;
    out.k = k;
    out.count_Wj = 0;
    out.count_Wj_prime = 0;
    out.count_Wj_minus_prime = 0;
    out.count_Wj_cap_S0 = 0;
  }

  const std::uint64_t block_mask = (std::uint64_t{1} << n) - 1;
  const std::uint64_t total = std::uint64_t{1} << m;
  for (std::uint64_t mask = 0; mask < total; ++mask) {
    const int sum = 2 * std::popcount(mask) - static_cast<int>(m);
    const bool in_S0 = (sum == 0);
    if (in_S0) ++out.count_S0;
    if (!blocked) continue;

    bool constant_blocks = true;
    unsigned plus_blocks = 0;
    for (unsigned j = 0; j < k; ++j) {
      const std::uint64_t block = (mask >> (j * n)) & block_mask;
      if (block == block_mask) {
        ++plus_blocks;
      } else if (block != 0) {
        constant_blocks = false;
        break;
      }
    }
    if (!constant_blocks) continue;
    ++*out.count_Wj;
    const bool balanced = (2 * plus_blocks == k);
    if (balanced) ++*out.count_Wj_prime;
    if (in_S0) ++*out.count_Wj_cap_S0;
  }
  if (blocked) *out.count_Wj_minus_prime = *out.count_Wj - *out.count_Wj_prime;
  return out;
}

}  // namespace blockmoments

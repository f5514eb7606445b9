#ifndef BLOCKMOMENTS_ORACLE_HPP
#define BLOCKMOMENTS_ORACLE_HPP

#include <cstdint>
#include <optional>
#include <stdexcept>

#include "blockmoments/bigint.hpp"
#include "blockmoments/presentation.hpp"

namespace blockmoments {

/// Brute-force enumeration visits all 2^m sign sequences; past this cap the
/// dp and binomial oracles (proven equivalent on the overlap) take over.
inline constexpr unsigned kEnumerationCap = 24;

class EnumerationCapExceeded : public std::runtime_error {
 public:
  explicit EnumerationCapExceeded(unsigned m);
  unsigned m() const noexcept { return m_; }

 private:
  unsigned m_;
};

/// Number of sign sequences (p_1,...,p_m) in {+1,-1}^m whose sum is 0
/// (infinite order) or divisible by n (finite order n) — the exact m-th
/// moment of x + x^-1. Computed by a step-by-step state table: partial sums
/// in [-m, m], or residues mod n, each step splitting mass to state +-1.
BigInt exact_moment_dp(unsigned m, const Order& order);

/// Same count via the collected expansion: the sum of binomial(m, (m+s)/2)
/// over achievable sums s qualifying for the order.
BigInt exact_moment_binomial(unsigned m, const Order& order);

/// Ground truth at small m: iterates all 2^m sequences and counts those
/// reducing to the identity. Throws EnumerationCapExceeded for
/// m > kEnumerationCap.
BigInt exact_moment_enum(unsigned m, const Order& order);

/// Census of the sign-sequence sets attached to a power relator x^n at
/// length m: S0 (sum zero), and when n divides m with k = m/n blocks,
/// the block set Wj (k constant blocks of length n), its balanced subset
/// Wj' (equally many + and - blocks), the complement count |Wj \ Wj'| and
/// the overlap |Wj ∩ S0|. Counts come from literal enumeration of {+1,-1}^m,
/// never from the closed formulas they are checked against.
struct SequenceClassification {
  unsigned m = 0;
  unsigned n = 0;
  std::optional<unsigned> k;  // m / n, present iff n divides m
  std::uint64_t count_S0 = 0;
  std::optional<std::uint64_t> count_Wj;
  std::optional<std::uint64_t> count_Wj_prime;
  std::optional<std::uint64_t> count_Wj_minus_prime;
  std::optional<std::uint64_t> count_Wj_cap_S0;
};

/// Requires m >= 1, n >= 1 and m <= kEnumerationCap. The Wj fields are
/// absent when n does not divide m.
SequenceClassification classify_sequences(unsigned m, unsigned n);

}  // namespace blockmoments

#endif  // BLOCKMOMENTS_ORACLE_HPP

#ifndef BLOCKMOMENTS_FORMAL_HPP
#define BLOCKMOMENTS_FORMAL_HPP

#include <cstdint>
#include <map>
#include <string>

#include "blockmoments/bigint.hpp"

namespace blockmoments {

/// Finitely supported integer combination of powers of one fixed generator:
/// the Fourier expansion sum_s a_s x^s restricted to the cyclic subgroup
/// <x>. Exponent 0 is the group identity. Zero coefficients are never
/// stored, so equality of supports is equality of values.
class FormalSum {
 public:
  FormalSum() = default;

  static FormalSum from_coefficients(std::map<std::int64_t, BigInt> coeffs);

  const std::map<std::int64_t, BigInt>& coefficients() const noexcept {
    return coeffs_;
  }

  /// Coefficient at `exponent`, zero if absent.
  BigInt coefficient(std::int64_t exponent) const;

  /// Adds `delta` to the coefficient at `exponent`, erasing exact zeros.
  void add(std::int64_t exponent, const BigInt& delta);

  BigInt total_mass() const;

  bool empty() const noexcept { return coeffs_.empty(); }

  friend bool operator==(const FormalSum&, const FormalSum&) = default;

 private:
  std::map<std::int64_t, BigInt> coeffs_;
};

/// Collected expansion of (x + x^-1)^m: the coefficient at exponent s counts
/// the sign sequences (p_1,...,p_m) in {+1,-1}^m with sum s. Built by
/// stepping the power one factor at a time, so support is {-m, -m+2, ..., m}
/// and total mass is 2^m.
FormalSum expand_block_power(unsigned m);

/// Applies the relator x^n = e: folds every exponent to its residue mod n,
/// summing coefficients. Support of the result lies in {0, ..., n-1} and
/// total mass is preserved. Throws std::invalid_argument when n == 0.
FormalSum reduce_mod_order(const FormalSum& a, unsigned n);

/// The canonical trace: the coefficient of the identity (exponent 0).
BigInt canonical_trace(const FormalSum& a);

/// The *-operation: coefficient at s moves to -s. Coefficients are exact
/// integers, so complex conjugation is the identity on them.
FormalSum adjoint(const FormalSum& a);

/// JSON object mapping decimal exponent strings to decimal coefficient
/// strings, keys in ascending exponent order.
std::string to_json(const FormalSum& a);

}  // namespace blockmoments

#endif  // BLOCKMOMENTS_FORMAL_HPP

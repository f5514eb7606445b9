#include "blockmoments/formal.hpp"

#include <stdexcept>
#include <utility>

#include <json.hpp>

namespace blockmoments {

FormalSum FormalSum::from_coefficients(std::map<std::int64_t, BigInt> coeffs) {
  FormalSum s;
  for (auto& [exponent, value] : coeffs) {
    if (value != 0) s.coeffs_.emplace(exponent, std::move(value));
  }
  return s;
}

BigInt FormalSum::coefficient(std::int64_t exponent) const {
  auto it = coeffs_.find(exponent);
  return it == coeffs_.end() ? BigInt(0) : it->second;
}

void FormalSum::add(std::int64_t exponent, const BigInt& delta) {
  if (delta == 0) return;
  auto [it, inserted] = coeffs_.emplace(exponent, delta);
  if (!inserted) {
    it->second += delta;
    if (it->second == 0) coeffs_.erase(it);
  }
}

BigInt FormalSum::total_mass() const {
  BigInt mass = 0;
  for (const auto& [exponent, value] : coeffs_) mass += value;
  return mass;
}

FormalSum expand_block_power(unsigned m) {
  FormalSum power;
  power.add(0, 1);
  for (unsigned step = 0; step < m; ++step) {
    FormalSum next;
    for (const auto& [exponent, value] : power.coefficients()) {
      next.add(exponent + 1, value);
      next.add(exponent - 1, value);
    }
    power = std::move(next);
  }
  return power;
}

FormalSum reduce_mod_order(const FormalSum& a, unsigned n) {
  if (n == 0) throw std::invalid_argument("order must be >= 1");
  const auto modulus = static_cast<std::int64_t>(n);
  FormalSum reduced;
  for (const auto& [exponent, value] : a.coefficients()) {
    reduced.add(((exponent % modulus) + modulus) % modulus, value);
  }
  return reduced;
}

BigInt canonical_trace(const FormalSum& a) { return a.coefficient(0); }

FormalSum adjoint(const FormalSum& a) {
  FormalSum star;
  for (const auto& [exponent, value] : a.coefficients()) {
    star.add(-exponent, value);
  }
  return star;
}

std::string to_json(const FormalSum& a) {
  nlohmann::ordered_json obj = nlohmann::ordered_json::object();
  for (const auto& [exponent, value] : a.coefficients()) {
    obj[std::to_string(exponent)] = value.str();
  }
  return obj.dump();
}

}  // namespace blockmoments

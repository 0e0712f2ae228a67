#include "hwgkz/prime_field.hpp"

#include <numeric>
#include <stdexcept>

namespace hwgkz {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

Fp::Fp(std::int64_t value, std::uint32_t p) : value_(0), modulus_(p) {
  if (p >= (1u << 31) || !is_prime(p))
    throw std::invalid_argument("modulus " + std::to_string(p) + " is not a prime below 2^31");
  value_ = reduce(value, p);
}

void Fp::check_same_field(const Fp& rhs) const {
  if (modulus_ != rhs.modulus_)
    throw std::invalid_argument("F_p arithmetic on mismatched moduli " + std::to_string(modulus_) + " and " +
                                std::to_string(rhs.modulus_));
}

Fp& Fp::operator+=(const Fp& rhs) {
  check_same_field(rhs);
  value_ = static_cast<std::uint32_t>((std::uint64_t{value_} + rhs.value_) % modulus_);
  return *this;
}

Fp& Fp::operator-=(const Fp& rhs) {
  check_same_field(rhs);
  value_ = static_cast<std::uint32_t>((std::uint64_t{value_} + modulus_ - rhs.value_) % modulus_);
  return *this;
}

Fp& Fp::operator*=(const Fp& rhs) {
  check_same_field(rhs);
  value_ = static_cast<std::uint32_t>((std::uint64_t{value_} * rhs.value_) % modulus_);
  return *this;
}

Fp& Fp::operator/=(const Fp& rhs) {
  check_same_field(rhs);
  return *this *= rhs.inverse();
}

Fp Fp::pow(std::uint64_t e) const noexcept {
  std::uint64_t base = value_, acc = 1 % modulus_;
  while (e > 0) {
    if (e & 1) acc = acc * base % modulus_;
    base = base * base % modulus_;
    e >>= 1;
  }
  return Fp(static_cast<std::uint32_t>(acc), modulus_, unchecked_tag{});
}

Fp Fp::inverse() const {
  if (value_ == 0) throw std::domain_error("inverse of zero in F_" + std::to_string(modulus_));
  return pow(modulus_ - 2);
}

std::ostream& operator<<(std::ostream& os, const Fp& x) { return os << x.value(); }

FactorialTable::FactorialTable(std::uint32_t p) : p_(p) {
  Fp acc(1, p);
  fact_.reserve(p);
  for (std::uint32_t k = 0; k < p; ++k) {
    if (k > 0) acc *= acc.with_value(k);
    fact_.push_back(acc);
  }
  inv_fact_.reserve(p);
  for (const auto& f : fact_) inv_fact_.push_back(f.inverse());
}

Fp multinomial_mod_p(std::span<const int> e, const FactorialTable& table) {
  const auto p = table.modulus();
  long total = 0;
  for (int ek : e) {
    if (ek < 0) throw std::invalid_argument("multinomial exponent must be nonnegative");
    total += ek;
  }
  if (total != static_cast<long>(p) - 1)
    throw std::invalid_argument("multinomial exponents must sum to p-1 = " + std::to_string(p - 1) + ", got " +
                                std::to_string(total));
  Fp acc = table.factorial(p - 1);
  for (int ek : e) acc *= table.inverse_factorial(static_cast<std::size_t>(ek));
  return acc;
}

Fp multinomial_mod_p(std::span<const int> e, std::uint32_t p) { return multinomial_mod_p(e, FactorialTable(p)); }

}  // namespace hwgkz

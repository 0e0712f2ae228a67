#pragma once

#include <cstdint>
#include <ostream>
#include <span>
#include <string>
#include <vector>

namespace hwgkz {

bool is_prime(std::uint64_t n);

/// Element of the prime field F_p. The value is always reduced into [0, p).
class Fp {
 public:
  /// Checks that `p` is prime; throws std::invalid_argument otherwise.
  Fp(std::int64_t value, std::uint32_t p);

  std::uint32_t value() const noexcept { return value_; }
  std::uint32_t modulus() const noexcept { return modulus_; }
  bool is_zero() const noexcept { return value_ == 0; }

  /// Same field, reduced value. Skips the primality check.
  Fp with_value(std::int64_t v) const noexcept { return Fp(reduce(v, modulus_), modulus_, unchecked_tag{}); }

  Fp pow(std::uint64_t e) const noexcept;
  /// Throws std::domain_error for zero.
  Fp inverse() const;

  Fp operator-() const noexcept { return with_value(-static_cast<std::int64_t>(value_)); }
  Fp& operator+=(const Fp& rhs);
  Fp& operator-=(const Fp& rhs);
  Fp& operator*=(const Fp& rhs);
  Fp& operator/=(const Fp& rhs);

  friend Fp operator+(Fp a, const Fp& b) { return a += b; }
  friend Fp operator-(Fp a, const Fp& b) { return a -= b; }
  friend Fp operator*(Fp a, const Fp& b) { return a *= b; }
  friend Fp operator/(Fp a, const Fp& b) { return a /= b; }
  friend bool operator==(const Fp&, const Fp&) = default;

 private:
  struct unchecked_tag {};
  Fp(std::uint32_t value, std::uint32_t p, unchecked_tag) noexcept : value_(value), modulus_(p) {}
  static std::uint32_t reduce(std::int64_t v, std::uint32_t p) noexcept {
    auto r = v % static_cast<std::int64_t>(p);
    return static_cast<std::uint32_t>(r < 0 ? r + p : r);
  }
  void check_same_field(const Fp& rhs) const;

  std::uint32_t value_;
  std::uint32_t modulus_;
};

std::ostream& operator<<(std::ostream& os, const Fp& x);

/// Table of k! and (k!)^{-1} mod p for 0 <= k < p.
class FactorialTable {
 public:
  explicit FactorialTable(std::uint32_t p);

  std::uint32_t modulus() const noexcept { return p_; }
  const Fp& factorial(std::size_t k) const { return fact_.at(k); }
  const Fp& inverse_factorial(std::size_t k) const { return inv_fact_.at(k); }

 private:
  std::uint32_t p_;
  std::vector<Fp> fact_;
  std::vector<Fp> inv_fact_;
};

/// (p-1)! / (e_1! ... e_N!) mod p. Requires sum(e) == p-1.
Fp multinomial_mod_p(std::span<const int> e, std::uint32_t p);
Fp multinomial_mod_p(std::span<const int> e, const FactorialTable& table);

}  // namespace hwgkz

#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "hwgkz/prime_field.hpp"

namespace hwgkz {

/// Dense polynomial over F_p, coefficients low degree first, values in [0, p).
using DensePoly = std::vector<std::uint32_t>;

/// Exhaustive check that a monic polynomial has no monic factor of degree 1..deg/2.
bool is_irreducible(const DensePoly& monic, std::uint32_t p);

/// Smallest monic irreducible polynomial of the given degree, with monic polynomials
/// ordered by the tuple (c_{a-1}, ..., c_0).
DensePoly smallest_irreducible(std::uint32_t p, unsigned degree);

class Fq;

/// The field F_q = F_p[t]/(m(t)), q = p^a.
class ExtensionField : public std::enable_shared_from_this<ExtensionField> {
 public:
  static std::shared_ptr<const ExtensionField> create(std::uint32_t p, unsigned degree);
  /// Throws std::invalid_argument unless `modulus` is monic and irreducible over F_p.
  static std::shared_ptr<const ExtensionField> create(std::uint32_t p, DensePoly modulus);

  std::uint32_t characteristic() const noexcept { return p_; }
  unsigned degree() const noexcept { return static_cast<unsigned>(modulus_.size() - 1); }
  std::uint64_t order() const noexcept;
  const DensePoly& modulus() const noexcept { return modulus_; }

  Fq zero() const;
  Fq one() const;
  Fq from_integer(std::int64_t v) const;
  /// Coefficients in the basis 1, t, ..., t^{a-1}; length must be exactly a.
  Fq element(const std::vector<std::int64_t>& coeffs) const;
  Fq embed(const Fp& x) const;
  /// All q elements, ordered by their base-p index with c_0 least significant.
  std::vector<Fq> elements() const;

  bool operator==(const ExtensionField& rhs) const { return p_ == rhs.p_ && modulus_ == rhs.modulus_; }

 private:
  ExtensionField(std::uint32_t p, DensePoly modulus) : p_(p), modulus_(std::move(modulus)) {}

  std::uint32_t p_;
  DensePoly modulus_;
};

using FieldPtr = std::shared_ptr<const ExtensionField>;

/// Element of F_q in the polynomial basis.
class Fq {
 public:
  Fq(FieldPtr field, DensePoly coeffs);

  const FieldPtr& field() const noexcept { return field_; }
  const DensePoly& coefficients() const noexcept { return coeffs_; }
  bool is_zero() const noexcept;

  Fq with_integer(std::int64_t v) const { return field_->from_integer(v); }
  Fq pow(std::uint64_t e) const;
  /// Throws std::domain_error for zero.
  Fq inverse() const;

  Fq operator-() const;
  Fq& operator+=(const Fq& rhs);
  Fq& operator-=(const Fq& rhs);
  Fq& operator*=(const Fq& rhs);
  Fq& operator*=(const Fp& rhs);

  friend Fq operator+(Fq a, const Fq& b) { return a += b; }
  friend Fq operator-(Fq a, const Fq& b) { return a -= b; }
  friend Fq operator*(Fq a, const Fq& b) { return a *= b; }
  friend Fq operator*(Fq a, const Fp& b) { return a *= b; }
  friend bool operator==(const Fq& a, const Fq& b) { return a.same_field(b) && a.coeffs_ == b.coeffs_; }

  bool same_field(const Fq& rhs) const { return field_ == rhs.field_ || *field_ == *rhs.field_; }

  /// "c" for degree-1 fields, "c0,c1,...,c_{a-1}" otherwise.
  std::string literal() const;

 private:
  void check_same_field(const Fq& rhs) const;

  FieldPtr field_;
  DensePoly coeffs_;
};

/// Parses a field literal as produced by Fq::literal().
Fq parse_field_literal(const FieldPtr& field, const std::string& text);

}  // namespace hwgkz

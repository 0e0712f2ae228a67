#pragma once

#include <cstdint>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "hwgkz/extension_field.hpp"
#include "hwgkz/prime_field.hpp"

namespace hwgkz {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Integer exponent vector; negative entries are allowed. std::vector's operator<
/// gives the lexicographic term order used everywhere.
using Exponent = std::vector<int>;

/// Per-coefficient-type hooks used by LaurentPoly. A coefficient carries enough
/// context (its modulus or field) to build other elements of the same ring.
template <class C>
struct coefficient_traits;

template <>
struct coefficient_traits<Fp> {
  static bool is_zero(const Fp& c) { return c.is_zero(); }
  static bool same_ring(const Fp& a, const Fp& b) { return a.modulus() == b.modulus(); }
  static Fp from_integer(const Fp& like, std::int64_t v) { return like.with_value(v); }
  static std::string to_string(const Fp& c) { return std::to_string(c.value()); }
};

template <>
struct coefficient_traits<Fq> {
  static bool is_zero(const Fq& c) { return c.is_zero(); }
  static bool same_ring(const Fq& a, const Fq& b) { return a.same_field(b); }
  static Fq from_integer(const Fq& like, std::int64_t v) { return like.with_integer(v); }
  static std::string to_string(const Fq& c) {
    return c.field()->degree() == 1 ? c.literal() : "(" + c.literal() + ")";
  }
};

template <>
struct coefficient_traits<Integer> {
  static bool is_zero(const Integer& c) { return c.is_zero(); }
  static bool same_ring(const Integer&, const Integer&) { return true; }
  static Integer from_integer(const Integer&, std::int64_t v) { return Integer(v); }
  static std::string to_string(const Integer& c) { return c.str(); }
};

template <>
struct coefficient_traits<Rational> {
  static bool is_zero(const Rational& c) { return c.is_zero(); }
  static bool same_ring(const Rational&, const Rational&) { return true; }
  static Rational from_integer(const Rational&, std::int64_t v) { return Rational(v); }
  static std::string to_string(const Rational& c) { return c.str(); }
};

/// Finitely supported map Z^N -> C with no zero coefficients stored.
template <class C>
class LaurentPoly {
 public:
  using coefficient_type = C;
  using traits = coefficient_traits<C>;
  using term_map = std::map<Exponent, C>;

  /// The zero polynomial in `nvars` variables; `zero` fixes the coefficient ring.
  LaurentPoly(std::size_t nvars, C zero) : nvars_(nvars), zero_(traits::from_integer(zero, 0)) {}

  static LaurentPoly monomial(Exponent e, const C& c) {
    LaurentPoly out(e.size(), c);
    out.add_term(e, c);
    return out;
  }
  static LaurentPoly constant(std::size_t nvars, const C& c) { return monomial(Exponent(nvars, 0), c); }

  std::size_t nvars() const noexcept { return nvars_; }
  const C& zero_coefficient() const noexcept { return zero_; }
  C coefficient_from(std::int64_t v) const { return traits::from_integer(zero_, v); }
  const term_map& terms() const noexcept { return terms_; }
  std::size_t size() const noexcept { return terms_.size(); }
  bool is_zero() const noexcept { return terms_.empty(); }

  C coefficient(const Exponent& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? zero_ : it->second;
  }

  /// Adds c * Lambda^e, pruning the term if it cancels.
  void add_term(const Exponent& e, const C& c) {
    if (e.size() != nvars_) throw std::invalid_argument("exponent length does not match variable count");
    if (!traits::same_ring(c, zero_)) throw std::invalid_argument("coefficient from a different ring");
    if (traits::is_zero(c)) return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
      it->second = it->second + c;
      if (traits::is_zero(it->second)) terms_.erase(it);
    }
  }

  LaurentPoly& operator+=(const LaurentPoly& rhs) {
    check_compatible(rhs);
    for (const auto& [e, c] : rhs.terms_) add_term(e, c);
    return *this;
  }
  LaurentPoly& operator-=(const LaurentPoly& rhs) {
    check_compatible(rhs);
    for (const auto& [e, c] : rhs.terms_) add_term(e, -c);
    return *this;
  }
  LaurentPoly& operator*=(const LaurentPoly& rhs) { return *this = *this * rhs; }

  LaurentPoly operator-() const {
    LaurentPoly out(nvars_, zero_);
    for (const auto& [e, c] : terms_) out.terms_.emplace(e, -c);
    return out;
  }

  LaurentPoly scaled(const C& s) const {
    LaurentPoly out(nvars_, zero_);
    for (const auto& [e, c] : terms_) out.add_term(e, c * s);
    return out;
  }

  /// Multiplies by the monomial Lambda^shift.
  LaurentPoly shifted(const Exponent& shift) const {
    if (shift.size() != nvars_) throw std::invalid_argument("shift length does not match variable count");
    LaurentPoly out(nvars_, zero_);
    for (const auto& [e, c] : terms_) {
      Exponent s = e;
      for (std::size_t k = 0; k < nvars_; ++k) s[k] += shift[k];
      out.terms_.emplace_hint(out.terms_.end(), std::move(s), c);
    }
    return out;
  }

  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    a.check_compatible(b);
    LaurentPoly out(a.nvars_, a.zero_);
    Exponent s(a.nvars_);
    for (const auto& [ea, ca] : a.terms_)
      for (const auto& [eb, cb] : b.terms_) {
        for (std::size_t k = 0; k < a.nvars_; ++k) s[k] = ea[k] + eb[k];
        out.add_term(s, ca * cb);
      }
    return out;
  }
  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
    return a.nvars_ == b.nvars_ && traits::same_ring(a.zero_, b.zero_) && a.terms_ == b.terms_;
  }

 private:
  void check_compatible(const LaurentPoly& rhs) const {
    if (nvars_ != rhs.nvars_)
      throw std::invalid_argument("Laurent polynomials in " + std::to_string(nvars_) + " and " +
                                  std::to_string(rhs.nvars_) + " variables");
    if (!traits::same_ring(zero_, rhs.zero_)) throw std::invalid_argument("Laurent polynomials over different rings");
  }

  std::size_t nvars_;
  C zero_;
  term_map terms_;
};

using PolyFp = LaurentPoly<Fp>;
using PolyZ = LaurentPoly<Integer>;
using PolyQ = LaurentPoly<Rational>;
using PolyFq = LaurentPoly<Fq>;

template <class C>
C constant_term(const LaurentPoly<C>& f) {
  return f.coefficient(Exponent(f.nvars(), 0));
}

/// s (s-1) ... (s-m+1) in the coefficient ring of `like`.
template <class C>
C falling_factorial(const C& like, long s, int m) {
  C acc = coefficient_traits<C>::from_integer(like, 1);
  for (int t = 0; t < m; ++t) acc = acc * coefficient_traits<C>::from_integer(like, s - t);
  return acc;
}

/// (d/dLambda_k)^order f.
template <class C>
LaurentPoly<C> derivative(const LaurentPoly<C>& f, std::size_t k, int order = 1) {
  if (k >= f.nvars()) throw std::out_of_range("derivative variable out of range");
  if (order == 0) return f;
  LaurentPoly<C> out(f.nvars(), f.zero_coefficient());
  for (const auto& [e, c] : f.terms()) {
    C factor = falling_factorial(c, e[k], order);
    if (coefficient_traits<C>::is_zero(factor)) continue;
    Exponent s = e;
    s[k] -= order;
    out.add_term(s, c * factor);
  }
  return out;
}

/// Coefficientwise reduction of an integer polynomial mod p.
PolyFp reduce_mod(const PolyZ& f, std::uint32_t p);

/// Canonical text "c*L1^e1*L3^e3 + ..." in lexicographic term order; "0" when empty.
/// Variables with zero exponent are omitted; indices are 1-based.
template <class C>
std::string to_text(const LaurentPoly<C>& f) {
  if (f.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : f.terms()) {
    if (!first) os << " + ";
    first = false;
    os << coefficient_traits<C>::to_string(c);
    for (std::size_t k = 0; k < e.size(); ++k)
      if (e[k] != 0) os << "*L" << (k + 1) << '^' << e[k];
  }
  return os.str();
}

std::string exponent_label(const Exponent& e);

}  // namespace hwgkz

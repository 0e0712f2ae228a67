#include "hwgkz/extension_field.hpp"

#include <sstream>
#include <stdexcept>

namespace hwgkz {
namespace {

void trim(DensePoly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

// Remainder of f modulo a monic g over F_p.
DensePoly remainder(DensePoly f, const DensePoly& g, std::uint32_t p) {
  trim(f);
  const std::size_t dg = g.size() - 1;
  while (f.size() > dg) {
    const std::uint64_t lead = f.back();
    const std::size_t shift = f.size() - 1 - dg;
    for (std::size_t k = 0; k <= dg; ++k)
      f[shift + k] = static_cast<std::uint32_t>((f[shift + k] + (p - lead) * g[k]) % p);
    trim(f);
  }
  return f;
}

// Advances a base-p counter with the highest index most significant; false on wrap.
bool next_tuple(DensePoly& c, std::uint32_t p) {
  for (std::size_t k = 0; k < c.size(); ++k) {
    if (++c[k] < p) return true;
    c[k] = 0;
  }
  return false;
}

}  // namespace

bool is_irreducible(const DensePoly& monic, std::uint32_t p) {
  if (monic.size() < 2 || monic.back() != 1) return false;
  const unsigned n = static_cast<unsigned>(monic.size() - 1);
  for (unsigned k = 1; 2 * k <= n; ++k) {
    DensePoly lower(k, 0);
    do {
      DensePoly g = lower;
      g.push_back(1);
      if (remainder(monic, g, p).empty()) return false;
    } while (next_tuple(lower, p));
  }
  return true;
}

DensePoly smallest_irreducible(std::uint32_t p, unsigned degree) {
  if (degree == 0) throw std::invalid_argument("extension degree must be positive");
  DensePoly lower(degree, 0);
  do {
    DensePoly f = lower;
    f.push_back(1);
    if (is_irreducible(f, p)) return f;
  } while (next_tuple(lower, p));
  throw std::logic_error("no irreducible polynomial found");
}

std::shared_ptr<const ExtensionField> ExtensionField::create(std::uint32_t p, unsigned degree) {
  if (!is_prime(p)) throw std::invalid_argument("characteristic " + std::to_string(p) + " is not prime");
  return std::shared_ptr<const ExtensionField>(new ExtensionField(p, smallest_irreducible(p, degree)));
}

std::shared_ptr<const ExtensionField> ExtensionField::create(std::uint32_t p, DensePoly modulus) {
  if (!is_prime(p)) throw std::invalid_argument("characteristic " + std::to_string(p) + " is not prime");
  for (auto& c : modulus) c %= p;
  if (!is_irreducible(modulus, p)) throw std::invalid_argument("modulus is not a monic irreducible polynomial");
  return std::shared_ptr<const ExtensionField>(new ExtensionField(p, std::move(modulus)));
}

std::uint64_t ExtensionField::order() const noexcept {
  std::uint64_t q = 1;
  for (unsigned k = 0; k < degree(); ++k) q *= p_;
  return q;
}

Fq ExtensionField::zero() const { return Fq(shared_from_this(), DensePoly(degree(), 0)); }

Fq ExtensionField::one() const { return from_integer(1); }

Fq ExtensionField::from_integer(std::int64_t v) const {
  DensePoly c(degree(), 0);
  auto r = v % static_cast<std::int64_t>(p_);
  c[0] = static_cast<std::uint32_t>(r < 0 ? r + p_ : r);
  return Fq(shared_from_this(), std::move(c));
}

Fq ExtensionField::element(const std::vector<std::int64_t>& coeffs) const {
  if (coeffs.size() != degree())
    throw std::invalid_argument("extension element needs exactly " + std::to_string(degree()) + " coefficients");
  DensePoly c(degree(), 0);
  for (std::size_t k = 0; k < coeffs.size(); ++k) {
    auto r = coeffs[k] % static_cast<std::int64_t>(p_);
    c[k] = static_cast<std::uint32_t>(r < 0 ? r + p_ : r);
  }
  return Fq(shared_from_this(), std::move(c));
}

Fq ExtensionField::embed(const Fp& x) const {
  if (x.modulus() != p_) throw std::invalid_argument("cannot embed F_p element of a different characteristic");
  return from_integer(x.value());
}

std::vector<Fq> ExtensionField::elements() const {
  std::vector<Fq> out;
  DensePoly c(degree(), 0);
  do {
    out.emplace_back(shared_from_this(), c);
  } while (next_tuple(c, p_));
  return out;
}

Fq::Fq(FieldPtr field, DensePoly coeffs) : field_(std::move(field)), coeffs_(std::move(coeffs)) {
  if (!field_) throw std::invalid_argument("null field");
  if (coeffs_.size() != field_->degree()) throw std::invalid_argument("coefficient vector length must equal degree");
}

bool Fq::is_zero() const noexcept {
  for (auto c : coeffs_)
    if (c != 0) return false;
  return true;
}

void Fq::check_same_field(const Fq& rhs) const {
  if (!same_field(rhs)) throw std::invalid_argument("F_q arithmetic on mismatched fields");
}

Fq Fq::operator-() const {
  const auto p = field_->characteristic();
  DensePoly c = coeffs_;
  for (auto& x : c) x = (p - x) % p;
  return Fq(field_, std::move(c));
}

Fq& Fq::operator+=(const Fq& rhs) {
  check_same_field(rhs);
  const auto p = field_->characteristic();
  for (std::size_t k = 0; k < coeffs_.size(); ++k) coeffs_[k] = (coeffs_[k] + rhs.coeffs_[k]) % p;
  return *this;
}

Fq& Fq::operator-=(const Fq& rhs) { return *this += -rhs; }

Fq& Fq::operator*=(const Fq& rhs) {
  check_same_field(rhs);
  const std::uint64_t p = field_->characteristic();
  const std::size_t a = coeffs_.size();
  DensePoly prod(2 * a - 1, 0);
  for (std::size_t i = 0; i < a; ++i)
    for (std::size_t j = 0; j < a; ++j)
      prod[i + j] = static_cast<std::uint32_t>((prod[i + j] + std::uint64_t{coeffs_[i]} * rhs.coeffs_[j]) % p);
  DensePoly r = remainder(std::move(prod), field_->modulus(), field_->characteristic());
  r.resize(a, 0);
  coeffs_ = std::move(r);
  return *this;
}

Fq& Fq::operator*=(const Fp& rhs) { return *this *= field_->embed(rhs); }

Fq Fq::pow(std::uint64_t e) const {
  Fq base = *this, acc = field_->one();
  while (e > 0) {
    if (e & 1) acc *= base;
    base *= base;
    e >>= 1;
  }
  return acc;
}

Fq Fq::inverse() const {
  if (is_zero()) throw std::domain_error("inverse of zero in F_q");
  return pow(field_->order() - 2);
}

std::string Fq::literal() const {
  std::ostringstream os;
  for (std::size_t k = 0; k < coeffs_.size(); ++k) os << (k ? "," : "") << coeffs_[k];
  return os.str();
}

Fq parse_field_literal(const FieldPtr& field, const std::string& text) {
  std::vector<std::int64_t> coeffs;
  std::stringstream ss(text);
  std::string part;
  while (std::getline(ss, part, ',')) {
    std::size_t used = 0;
    long long v = 0;
    try {
      v = std::stoll(part, &used);
    } catch (const std::exception&) {
      throw std::invalid_argument("malformed field literal \"" + text + "\"");
    }
    if (used != part.size()) throw std::invalid_argument("malformed field literal \"" + text + "\"");
    coeffs.push_back(v);
  }
  if (field->degree() == 1 && coeffs.size() == 1) return field->from_integer(coeffs[0]);
  return field->element(coeffs);
}

}  // namespace hwgkz

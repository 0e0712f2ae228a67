#include "hwgkz/laurent_poly.hpp"

namespace hwgkz {

PolyFp reduce_mod(const PolyZ& f, std::uint32_t p) {
  const Fp zero(0, p);
  const Integer modulus(p);
  PolyFp out(f.nvars(), zero);
  for (const auto& [e, c] : f.terms()) {
    Integer r = c % modulus;
    if (r < 0) r += modulus;
    out.add_term(e, zero.with_value(r.convert_to<std::int64_t>()));
  }
  return out;
}

std::string exponent_label(const Exponent& e) {
  std::string out = "(";
  for (std::size_t k = 0; k < e.size(); ++k) out += (k ? "," : "") + std::to_string(e[k]);
  return out + ")";
}

}  // namespace hwgkz

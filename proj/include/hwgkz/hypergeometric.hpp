#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "hwgkz/hasse_witt.hpp"
#include "hwgkz/laurent_poly.hpp"
#include "hwgkz/report.hpp"
#include "hwgkz/support.hpp"

namespace hwgkz {

/// Euler parameter beta in Z^{n+2}.
using EulerParameter = std::vector<long>;

/// r in Z^N; coordinate k keeps exponents in [p r_k, p (r_k + 1)).
using TruncationWindow = std::vector<int>;

/// Default order bound for the enumerated box operators.
inline int default_box_bound(std::uint32_t p) { return std::max(static_cast<int>(p) - 1, 3); }

/// Box_l f = prod_{l_k>0} d_k^{l_k} f - prod_{l_k<0} d_k^{-l_k} f, with falling factorials
/// evaluated in the coefficient ring of f.
template <class C>
LaurentPoly<C> box_apply(const Relation& l, const LaurentPoly<C>& f) {
  if (l.size() != f.nvars()) throw std::invalid_argument("relation length does not match variable count");
  LaurentPoly<C> out(f.nvars(), f.zero_coefficient());
  Exponent s(f.nvars());
  for (int sign : {1, -1}) {
    for (const auto& [e, c] : f.terms()) {
      C coeff = c;
      bool vanished = false;
      for (std::size_t k = 0; k < e.size() && !vanished; ++k) {
        const int order = sign * l[k] > 0 ? sign * l[k] : 0;
        s[k] = e[k] - order;
        if (order == 0) continue;
        coeff = coeff * falling_factorial(c, e[k], order);
        vanished = coefficient_traits<C>::is_zero(coeff);
      }
      if (vanished) continue;
      out.add_term(s, sign > 0 ? coeff : -coeff);
    }
  }
  return out;
}

/// sum_k a^+_{coord,k} s_k - beta_coord for the monomial Lambda^s.
long euler_factor(const SupportSet& support, std::size_t coord, const EulerParameter& beta, const Exponent& s);

/// Z_coord f: each monomial Lambda^s is multiplied by euler_factor(s).
template <class C>
LaurentPoly<C> euler_apply(const SupportSet& support, std::size_t coord, const EulerParameter& beta,
                           const LaurentPoly<C>& f) {
  if (coord >= static_cast<std::size_t>(support.n() + 2) || beta.size() != static_cast<std::size_t>(support.n() + 2))
    throw std::invalid_argument("Euler coordinate or parameter has the wrong dimension");
  LaurentPoly<C> out(f.nvars(), f.zero_coefficient());
  for (const auto& [e, c] : f.terms()) out.add_term(e, c * f.coefficient_from(euler_factor(support, coord, beta, e)));
  return out;
}

/// Keeps the terms whose every exponent lies in its window.
template <class C>
LaurentPoly<C> trunc(const TruncationWindow& r, const LaurentPoly<C>& f, std::uint32_t p) {
  if (r.size() != f.nvars()) throw std::invalid_argument("window length does not match variable count");
  const long q = static_cast<long>(p);
  LaurentPoly<C> out(f.nvars(), f.zero_coefficient());
  for (const auto& [e, c] : f.terms()) {
    bool inside = true;
    for (std::size_t k = 0; k < e.size() && inside; ++k) inside = q * r[k] <= e[k] && e[k] < q * (r[k] + 1);
    if (inside) out.add_term(e, c);
  }
  return out;
}

/// The window with -1 in `column` and 0 elsewhere.
TruncationWindow rho_window(std::size_t nvars, std::size_t column);

/// Depth-limited piece of one of the integral series attached to interior column i.
struct TruncatedSeries {
  enum class Kind { G, Derivative };

  Kind kind = Kind::G;
  std::size_t i = 0;  // interior column
  std::size_t j = 0;  // differentiation column (Derivative only)
  int depth = 0;      // terms with -l_i <= depth
  bool integral = true;
  PolyQ poly;

  /// Throws std::domain_error if some coefficient is not an integer.
  PolyZ integer_poly() const;

  /// L_i parameter of the term with exponent s.
  Exponent parameter_of(const Exponent& s) const;
  std::string source() const;
};

/// G_i = sum over nonzero l in L_i of (-1)^{-l_i-1} (-l_i-1)! / prod_{k != i} l_k! Lambda^l.
TruncatedSeries series_Gi(const SupportSet& support, std::size_t i, int depth);

/// The Lambda_j-derivative of log Lambda_i + G_i, with the j == i case including the l = 0 term 1/Lambda_i.
/// i must be an interior column; j may be any column.
TruncatedSeries derivative_series(const SupportSet& support, std::size_t i, std::size_t j, int depth);

/// Euler operators for beta (exact factors computed in Z), then box operators over `relations`,
/// all on the whole of f mod p. Throws std::invalid_argument if a relation is not in L.
VerificationReport verify_mod_p_solution(const SupportSet& support, const PolyFp& f, const EulerParameter& beta,
                                         const std::vector<Relation>& relations, std::string statement);

/// Exact-integer check of a depth-limited derivative series: coefficient integrality, Euler operators with
/// beta = -a_j^+, and box operators away from the truncation boundary. An output exponent m is
/// checked only if m + l_+ and m + l_- both correspond to parameters the depth limit does not cut off.
VerificationReport verify_integer_series(const SupportSet& support, const TruncatedSeries& series,
                                         const std::vector<Relation>& relations);

/// Both sides of A_ij == sign * Lambda_i^p * Trunc_rho(d/dLambda_j (log Lambda_i + G_i)) mod p,
/// for interior columns i and j.
struct TruncationComparison {
  std::size_t i = 0;
  std::size_t j = 0;
  PolyFp lhs;
  PolyFp plus;   // + Lambda_i^p Trunc(...)
  PolyFp minus;  // - Lambda_i^p Trunc(...)
  bool matches_plus = false;
  bool matches_minus = false;
};

TruncationComparison compare_truncation(const SupportSet& support, std::size_t i, std::size_t j, std::uint32_t p);

/// Runs compare_truncation over every interior pair; witness "sign" is "+", "-", "±" (both
/// signs fit every entry) or "none". Passes when some sign fits every entry.
VerificationReport check_truncation_identity(const SupportSet& support, std::uint32_t p);

/// Depth-p derivative series for every interior i and every column j: integrality, exact Euler checks and boundary-rule box checks.
VerificationReport check_integral_series(const SupportSet& support, std::uint32_t p,
                                         const std::vector<Relation>& relations);

/// Truncations of every derivative series over rho windows, the zero window and `random_windows`
/// seeded windows with entries in [-2, 1] are mod-p solutions. The box check is run along both the
/// native mod-p and the integer-then-reduce route, which must agree.
VerificationReport check_truncated_solutions(const SupportSet& support, std::uint32_t p,
                                             const std::vector<Relation>& relations, std::uint64_t seed,
                                             std::size_t random_windows = 4);

/// d_k(Trunc_r f) == Trunc_r(d_k f) mod p on `count` seeded random Laurent polynomials, for every k.
VerificationReport check_truncation_commutes(std::uint32_t p, std::size_t nvars, std::size_t count,
                                             std::uint64_t seed);

/// Every Hasse-Witt entry is killed mod p by every relation's box operator and by the Euler
/// operators with the exact parameter p a_i^+ - a_j^+ (and, mod p, with -a_j^+).
VerificationReport check_entry_solutions(const SupportSet& support, const HWMatrixSymbolic& a,
                                         const std::vector<Relation>& relations);

}  // namespace hwgkz

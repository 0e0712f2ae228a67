#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "hwgkz/laurent_poly.hpp"
#include "hwgkz/report.hpp"

namespace hwgkz {

/// Integer vector l with sum_k l_k a_k^+ = 0.
using Relation = std::vector<int>;

/// All u in N^{n+1} with sum u = d and every u_i > 0, in lexicographic order.
/// Throws std::invalid_argument when d < n + 1 (U would be empty).
std::vector<Exponent> enumerate_interior(int d, int n);

/// Exponent vectors a_1..a_N of a homogeneous form of degree d in n+1 variables,
/// together with the interior monomials U and where they sit in the support.
///
/// Columns keep the caller's order. When U is contained in the support, the r-th
/// interior monomial (lexicographic order) lives at column interior_columns()[r];
/// that map plays the role of "U comes first" without renumbering the variables.
class SupportSet {
 public:
  SupportSet(int n, int d, std::vector<Exponent> exponents);

  int n() const noexcept { return n_; }
  int d() const noexcept { return d_; }
  std::size_t size() const noexcept { return exponents_.size(); }
  const Exponent& exponent(std::size_t k) const { return exponents_.at(k); }
  const std::vector<Exponent>& exponents() const noexcept { return exponents_; }

  /// a_k^+ = (a_k, 1).
  const std::vector<Exponent>& lifted() const noexcept { return lifted_; }
  Exponent lift(const Exponent& u) const;

  const std::vector<Exponent>& interior() const noexcept { return interior_; }
  /// Number of interior monomials present in the support (M).
  std::size_t interior_present() const noexcept { return present_; }
  bool contains_interior() const noexcept { return present_ == interior_.size(); }
  std::optional<std::size_t> column_of_interior(std::size_t r) const { return interior_column_.at(r); }
  /// Throws HypothesisViolation unless U is contained in the support.
  std::vector<std::size_t> interior_columns() const;
  /// Row of U occupied by column k, if a_k is interior.
  std::optional<std::size_t> interior_row(std::size_t column) const;

  void require_interior() const;

 private:
  int n_;
  int d_;
  std::vector<Exponent> exponents_;
  std::vector<Exponent> lifted_;
  std::vector<Exponent> interior_;
  std::vector<std::optional<std::size_t>> interior_column_;
  std::size_t present_ = 0;
};

/// All e in N^N with sum_k e_k columns[k] = target, in lexicographic order of e.
/// Columns must be nonnegative with last coordinate 1. A `skip` column is forced to 0.
std::vector<Exponent> enumerate_representations(const std::vector<Exponent>& columns, const Exponent& target,
                                                std::optional<std::size_t> skip = std::nullopt);

/// Z-basis of L = {l : sum_k l_k a_k^+ = 0}, via integer row reduction of [A^T | I].
std::vector<Relation> kernel_basis(const SupportSet& support);
std::size_t lifted_rank(const SupportSet& support);

bool is_relation(const SupportSet& support, const Relation& l);
/// l in L with l_i <= 0 and l_k >= 0 for k != i.
bool in_Li(const SupportSet& support, std::size_t column, const Relation& l);

/// Every l in L_i with -l_i <= depth, including 0, ordered by -l_i then lexicographically.
std::vector<Relation> enumerate_Li(const SupportSet& support, std::size_t column, int depth);

/// Positive part order sum_{l_k > 0} l_k (equal to the negative part order for l in L).
int relation_order(const Relation& l);

/// Every nonzero l in L with relation_order(l) <= max_order, one of each pair {l, -l}
/// (the first nonzero coordinate is positive). Sorted by order, then lexicographically.
std::vector<Relation> relations_up_to_order(const SupportSet& support, int max_order);

/// For nonzero l in L_i: the weights -l_k/l_i (k != i) are nonnegative, sum to one,
/// and combine the a_k^+ into a_i^+, all in exact rational arithmetic.
bool convex_combination_certificate(const SupportSet& support, std::size_t column, const Relation& l);

/// Brute-force check that a tuple (l^(1), ..., l^(M)) in L_1 x ... x L_M summing to zero
/// is the zero tuple. Enumerates the full product when it has at most `full_limit`
/// tuples, otherwise `samples` seeded random tuples.
VerificationReport check_zero_sum_tuples(const SupportSet& support, int depth, std::uint64_t seed,
                                         std::size_t full_limit = 100000, std::size_t samples = 10000);

/// Runs convex_combination_certificate over every nonzero depth-bounded element of each L_i.
VerificationReport check_convex_certificates(const SupportSet& support, int depth);

}  // namespace hwgkz

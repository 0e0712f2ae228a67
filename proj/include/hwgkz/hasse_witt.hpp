#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "hwgkz/determinant.hpp"
#include "hwgkz/extension_field.hpp"
#include "hwgkz/laurent_poly.hpp"
#include "hwgkz/report.hpp"
#include "hwgkz/support.hpp"

namespace hwgkz {

/// A(Lambda) mod p: entry (u, v) is the coefficient of x^{pu - v} in f_Lambda^{p-1}.
/// Rows and columns are indexed by U in lexicographic order.
struct HWMatrixSymbolic {
  std::vector<Exponent> index;
  std::uint32_t p = 0;
  Matrix<PolyFp> entries;
};

/// B_ij = Lambda_i^{-p} Lambda_j A_ij, where Lambda_i is the variable of the i-th interior monomial.
struct HWMatrixScaled {
  std::vector<Exponent> index;
  std::vector<std::size_t> columns;
  std::uint32_t p = 0;
  Matrix<PolyFp> entries;
};

/// A(lambda) over F_q.
struct HWMatrixEvaluated {
  std::vector<Exponent> index;
  std::vector<Fq> point;
  Matrix<Fq> entries;
  std::size_t rank = 0;
};

PolyFp symbolic_entry(const SupportSet& support, const Exponent& u, const Exponent& v, const FactorialTable& table);
PolyFp symbolic_entry(const SupportSet& support, const Exponent& u, const Exponent& v, std::uint32_t p);

/// Defined over all of U x U, whether or not U lies in the support.
HWMatrixSymbolic symbolic_matrix(const SupportSet& support, std::uint32_t p);

/// Row i times Lambda_i^{-p}, column j times Lambda_j, without checking the result.
/// Throws HypothesisViolation unless U is in the support.
HWMatrixScaled rescale_to_B(const SupportSet& support, const HWMatrixSymbolic& a);

/// Throws HypothesisViolation unless U is in the support, and std::logic_error if the
/// result breaks the L_i exponent pattern or the constant-term pattern.
HWMatrixScaled scaled_matrix_B(const SupportSet& support, const HWMatrixSymbolic& a);

/// Every exponent of B_ij lies in L_i ("lemma-2.7").
VerificationReport check_scaled_exponents(const SupportSet& support, const HWMatrixScaled& b);
/// constant_term(B_ij) = [i == j] ("lemma-2.8").
VerificationReport check_scaled_constant_terms(const HWMatrixScaled& b);

/// Result of computing det B and det A and checking generic invertibility.
struct GenericDetResult {
  PolyFp det_B;
  PolyFp det_A;
  Fp det_B_constant_term;
  bool scaling_identity = false;
  std::vector<VerificationReport> reports;  // thm-2.3, prop-2.11, lemma-2.7, lemma-2.8
};

GenericDetResult generic_det_check(const SupportSet& support, std::uint32_t p,
                                   std::size_t bound = kDefaultDeterminantBound);

/// Substitutes Lambda -> point. Negative exponents use field inverses.
Fq evaluate(const PolyFp& f, std::span<const Fq> point);

/// Rank by Gaussian elimination with first-nonzero pivoting.
std::size_t rank(Matrix<Fq> m);

HWMatrixEvaluated evaluate_matrix(const HWMatrixSymbolic& a, std::vector<Fq> point);

/// Independent route: expands f_lambda^{p-1} in x by p-1 sparse multiplications over F_q
/// and reads off the coefficient of x^{pu - v}.
Fq oracle_dense_coefficient(const SupportSet& support, std::span<const Fq> point, const Exponent& u,
                            const Exponent& v);

nlohmann::json to_json(const HWMatrixSymbolic& a);
nlohmann::json to_json(const HWMatrixScaled& b);
nlohmann::json to_json(const HWMatrixEvaluated& e);

}  // namespace hwgkz

#pragma once

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include "hwgkz/laurent_poly.hpp"

namespace hwgkz {

template <class T>
using Matrix = std::vector<std::vector<T>>;

inline constexpr std::size_t kDefaultDeterminantBound = 8;

/// Leibniz expansion: sum over all permutations sigma of sign(sigma) * prod_i m[i][sigma(i)].
/// Laurent polynomial rings have no cheap division, so no elimination here.
template <class C>
LaurentPoly<C> det_leibniz(const Matrix<LaurentPoly<C>>& m, std::size_t bound = kDefaultDeterminantBound) {
  const std::size_t size = m.size();
  if (size == 0) throw std::invalid_argument("determinant of an empty matrix");
  if (size > bound)
    throw std::length_error("matrix size " + std::to_string(size) + " exceeds determinant bound " +
                            std::to_string(bound));
  for (const auto& row : m)
    if (row.size() != size) throw std::invalid_argument("determinant of a non-square matrix");

  const auto& any = m[0][0];
  LaurentPoly<C> det(any.nvars(), any.zero_coefficient());
  std::vector<std::size_t> sigma(size);
  std::iota(sigma.begin(), sigma.end(), 0);
  do {
    bool skip = false;
    for (std::size_t i = 0; i < size && !skip; ++i) skip = m[i][sigma[i]].is_zero();
    if (skip) continue;
    std::size_t inversions = 0;
    for (std::size_t a = 0; a < size; ++a)
      for (std::size_t b = a + 1; b < size; ++b) inversions += sigma[a] > sigma[b];
    auto term = m[0][sigma[0]];
    for (std::size_t i = 1; i < size; ++i) term = term * m[i][sigma[i]];
    if (inversions % 2) det -= term;
    else det += term;
  } while (std::next_permutation(sigma.begin(), sigma.end()));
  return det;
}

}  // namespace hwgkz

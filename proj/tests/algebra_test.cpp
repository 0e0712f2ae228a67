#include <random>

#include "doctest.h"
#include "hwgkz/determinant.hpp"
#include "hwgkz/extension_field.hpp"
#include "hwgkz/laurent_poly.hpp"
#include "hwgkz/prime_field.hpp"
#include "test_util.hpp"

using namespace hwgkz;
using hwgkz::testing::poly;
using hwgkz::testing::random_poly;

namespace {

// Independent determinant: first-row cofactor expansion.
PolyFp cofactor_det(const Matrix<PolyFp>& m) {
  if (m.size() == 1) return m[0][0];
  PolyFp acc(m[0][0].nvars(), m[0][0].zero_coefficient());
  for (std::size_t c = 0; c < m.size(); ++c) {
    Matrix<PolyFp> minor;
    for (std::size_t r = 1; r < m.size(); ++r) {
      auto& row = minor.emplace_back();
      for (std::size_t k = 0; k < m.size(); ++k)
        if (k != c) row.push_back(m[r][k]);
    }
    const auto term = m[0][c] * cofactor_det(minor);
    if (c % 2) acc -= term;
    else acc += term;
  }
  return acc;
}

const std::vector<std::uint32_t> kSmallPrimes = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41,
                                                 43, 47, 53, 59, 61, 67, 71, 73, 79, 83, 89, 97};

}  // namespace

TEST_CASE("prime field elements stay reduced and reject composite moduli") {
  CHECK(Fp(-1, 5).value() == 4);
  CHECK(Fp(12, 5).value() == 2);
  CHECK_THROWS_AS(Fp(1, 9), std::invalid_argument);
  CHECK_THROWS_AS(Fp(1, 1), std::invalid_argument);
  CHECK_THROWS_AS(Fp(0, 7).inverse(), std::domain_error);
  CHECK_THROWS_AS(Fp(1, 5) + Fp(1, 7), std::invalid_argument);
  CHECK((Fp(3, 7) * Fp(3, 7).inverse()).value() == 1);
}

TEST_CASE("multinomial coefficients mod p") {
  CHECK(multinomial_mod_p(std::vector<int>{1, 1, 1, 1}, 5).value() == 4);
  CHECK(multinomial_mod_p(std::vector<int>{4, 0, 0, 0}, 5).value() == 1);
  CHECK(multinomial_mod_p(std::vector<int>{1, 1}, 3).value() == 2);
  CHECK_THROWS_AS(multinomial_mod_p(std::vector<int>{1, 1}, 5), std::invalid_argument);
  CHECK_THROWS_AS(multinomial_mod_p(std::vector<int>{5, -1}, 5), std::invalid_argument);
}

TEST_CASE("factorial table satisfies Wilson's theorem") {
  for (auto p : kSmallPrimes) {
    FactorialTable table(p);
    CHECK(table.factorial(p - 1).value() == p - 1);
    for (std::uint32_t k = 0; k < p; ++k) CHECK((table.factorial(k) * table.inverse_factorial(k)).value() == 1);
  }
}

TEST_CASE("multinomial coefficients expand (L1+...+LN)^(p-1)") {
  for (std::uint32_t p : {2u, 3u, 5u, 7u})
    for (std::size_t n = 2; n <= 4; ++n) {
      PolyFp linear(n, Fp(0, p));
      for (std::size_t k = 0; k < n; ++k) {
        Exponent e(n, 0);
        e[k] = 1;
        linear.add_term(e, Fp(1, p));
      }
      PolyFp power = PolyFp::constant(n, Fp(1, p));
      for (std::uint32_t t = 0; t + 1 < p; ++t) power *= linear;

      PolyFp expected(n, Fp(0, p));
      Exponent e(n, 0);
      std::function<void(std::size_t, int)> gen = [&](std::size_t k, int left) {
        if (k + 1 == n) {
          e[k] = left;
          expected.add_term(e, multinomial_mod_p(e, p));
          return;
        }
        for (int v = 0; v <= left; ++v) {
          e[k] = v;
          gen(k + 1, left - v);
        }
      };
      gen(0, static_cast<int>(p) - 1);
      CHECK(power == expected);
    }
}

TEST_CASE("Laurent polynomial arithmetic") {
  const auto l1 = poly(5, 2, {{{1, 0}, 1}});
  const auto l2 = poly(5, 2, {{{0, 1}, 1}});
  CHECK((l1 + l2) * (l1 - l2) == poly(5, 2, {{{2, 0}, 1}, {{0, 2}, 4}}));

  const auto m1 = poly(2, 2, {{{1, 0}, 1}});
  const auto m2 = poly(2, 2, {{{0, 1}, 1}});
  CHECK((m1 + m2) * (m1 + m2) == poly(2, 2, {{{2, 0}, 1}, {{0, 2}, 1}}));

  CHECK(poly(5, 1, {{{-1}, 1}}) * poly(5, 1, {{{1}, 1}}) == poly(5, 1, {{{0}, 1}}));
  CHECK((l1 - l1).is_zero());
  CHECK(l1.scaled(Fp(0, 5)).is_zero());

  CHECK_THROWS_AS(l1 + poly(5, 3, {{{1, 0, 0}, 1}}), std::invalid_argument);
  CHECK_THROWS_AS(l1 * poly(7, 2, {{{1, 0}, 1}}), std::invalid_argument);
}

TEST_CASE("constant terms") {
  const auto b44 = poly(5, 4, {{{0, 0, 0, 0}, 1}, {{1, 1, 1, -3}, 4}});
  CHECK(constant_term(b44).value() == 1);
  CHECK(constant_term(poly(5, 4, {{{0, 0, 0, -1}, 1}})).value() == 0);
  CHECK(constant_term(PolyFp(4, Fp(0, 5))).value() == 0);
}

TEST_CASE("canonical text uses lexicographic term order") {
  const auto f = poly(5, 4, {{{1, 1, 1, 1}, 4}, {{0, 0, 0, 4}, 1}});
  CHECK(to_text(f) == "1*L4^4 + 4*L1^1*L2^1*L3^1*L4^1");
  CHECK(to_text(PolyFp(3, Fp(0, 5))) == "0");
  CHECK(to_text(hwgkz::testing::zpoly(2, {{{0, -1}, -6}, {{0, 0}, 1}})) == "-6*L2^-1 + 1");
}

TEST_CASE("Leibniz determinant") {
  const auto one = poly(5, 2, {{{0, 0}, 1}});
  const auto zero = PolyFp(2, Fp(0, 5));
  const auto l1 = poly(5, 2, {{{1, 0}, 1}});
  const auto l2 = poly(5, 2, {{{0, 1}, 1}});
  CHECK(det_leibniz(Matrix<PolyFp>{{one, zero}, {zero, one}}) == one);
  CHECK(det_leibniz(Matrix<PolyFp>{{l1, zero}, {zero, l2}}) == l1 * l2);

  const Matrix<PolyFp> m = {{one + l1, l2}, {l2, one}};
  const auto expected = poly(5, 2, {{{0, 0}, 1}, {{1, 0}, 1}, {{0, 2}, 4}});
  CHECK(cofactor_det(m) == expected);
  CHECK(det_leibniz(m) == expected);

  Matrix<PolyFp> big(9, std::vector<PolyFp>(9, one));
  CHECK_THROWS_AS(det_leibniz(big), std::length_error);
  CHECK_NOTHROW(det_leibniz(big, 9));
}

TEST_CASE("Leibniz determinant agrees with cofactor expansion on random 3x3 Laurent matrices") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    const std::uint32_t p = trial % 2 ? 7 : 3;
    Matrix<PolyFp> m(3);
    for (auto& row : m)
      for (int c = 0; c < 3; ++c) row.push_back(random_poly(rng, p, 3, 3, -2, 2));
    CHECK(det_leibniz(m) == cofactor_det(m));
  }
}

TEST_CASE("ring axioms on random three-term Laurent polynomials") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 1000; ++trial) {
    const std::uint32_t p = kSmallPrimes[trial % 6];
    const auto f = random_poly(rng, p, 3, 3, -3, 3);
    const auto g = random_poly(rng, p, 3, 3, -3, 3);
    const auto h = random_poly(rng, p, 3, 3, -3, 3);
    REQUIRE((f + g) + h == f + (g + h));
    REQUIRE((f * g) * h == f * (g * h));
    REQUIRE(f + g == g + f);
    REQUIRE(f * g == g * f);
    REQUIRE(f * (g + h) == f * g + f * h);
  }
}

TEST_CASE("derivatives mod p agree with derivatives over Z reduced mod p") {
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<int> ex(-8, 8);
  std::uniform_int_distribution<int> co(-50, 50);
  for (int trial = 0; trial < 300; ++trial) {
    PolyZ f(3, Integer(0));
    for (int t = 0; t < 4; ++t) f.add_term({ex(rng), ex(rng), ex(rng)}, Integer(co(rng)));
    for (std::uint32_t p : {2u, 3u, 5u, 7u})
      for (std::size_t k = 0; k < 3; ++k)
        for (int order = 0; order <= 8; ++order)
          REQUIRE(reduce_mod(derivative(f, k, order), p) == derivative(reduce_mod(f, p), k, order));
  }
}

TEST_CASE("deterministic irreducible moduli") {
  CHECK(smallest_irreducible(2, 2) == DensePoly{1, 1, 1});
  CHECK(smallest_irreducible(3, 2) == DensePoly{1, 0, 1});
  CHECK(smallest_irreducible(5, 2) == DensePoly{2, 0, 1});
  CHECK(smallest_irreducible(7, 2) == DensePoly{1, 0, 1});
  CHECK(smallest_irreducible(5, 1) == DensePoly{0, 1});
  CHECK(is_irreducible({1, 1, 0, 1}, 2));
  CHECK_FALSE(is_irreducible({1, 0, 1}, 2));
  CHECK_THROWS_AS(ExtensionField::create(2, DensePoly{1, 0, 1}), std::invalid_argument);
}

TEST_CASE("extension field arithmetic") {
  const auto f4 = ExtensionField::create(2, 2);
  const auto t = f4->element({0, 1});
  const auto t1 = f4->element({1, 1});
  CHECK(t * t1 == f4->one());
  CHECK(t.inverse() == t1);
  CHECK_THROWS_AS(f4->zero().inverse(), std::domain_error);
  CHECK_THROWS_AS(f4->element({1}), std::invalid_argument);

  const auto f5 = ExtensionField::create(5, 1);
  const auto three = f5->from_integer(3);
  CHECK(three.literal() == "3");
  CHECK(three * f5->from_integer(2) == f5->from_integer(1));
  CHECK(f5->embed(Fp(3, 5)) == three);
  CHECK((three.inverse() * three) == f5->one());
  CHECK_THROWS_AS(t + three, std::invalid_argument);

  CHECK(parse_field_literal(f4, "1,1") == t1);
  CHECK(parse_field_literal(f5, "8") == three);
  CHECK_THROWS_AS(parse_field_literal(f4, "1,x"), std::invalid_argument);
}

TEST_CASE("every nonzero element of F_q satisfies x^(q-1) = 1 for q <= 64") {
  for (std::uint32_t p : kSmallPrimes)
    for (unsigned a = 1;; ++a) {
      std::uint64_t q = 1;
      for (unsigned k = 0; k < a; ++k) q *= p;
      if (q > 64) break;
      const auto field = ExtensionField::create(p, a);
      const auto elements = field->elements();
      REQUIRE(elements.size() == q);
      for (const auto& x : elements) {
        if (x.is_zero()) continue;
        REQUIRE(x.pow(q - 1) == field->one());
        REQUIRE(x * x.inverse() == field->one());
      }
    }
}

#include <random>

#include "doctest.h"
#include "hwgkz/cli.hpp"
#include "hwgkz/hasse_witt.hpp"
#include "hwgkz/hypergeometric.hpp"
#include "test_util.hpp"

using namespace hwgkz;
using hwgkz::testing::poly;
using hwgkz::testing::zpoly;

namespace {

const SupportSet hesse(2, 3, {{3, 0, 0}, {0, 3, 0}, {0, 0, 3}, {1, 1, 1}});
const Relation hesse_l{1, 1, 1, -3};

// Box operator built from repeated single-variable derivatives.
PolyFp box_by_derivatives(const Relation& l, const PolyFp& f) {
  PolyFp pos = f, neg = f;
  for (std::size_t k = 0; k < l.size(); ++k) {
    if (l[k] > 0) pos = derivative(pos, k, l[k]);
    if (l[k] < 0) neg = derivative(neg, k, -l[k]);
  }
  return pos - neg;
}

PolyQ to_q(const PolyZ& f) {
  PolyQ out(f.nvars(), Rational(0));
  for (const auto& [e, c] : f.terms()) out.add_term(e, Rational(c));
  return out;
}

}  // namespace

TEST_CASE("box operators") {
  const auto g = zpoly(4, {{{0, 0, 0, -1}, 1}});
  CHECK(box_apply(hesse_l, g) == zpoly(4, {{{0, 0, 0, -4}, 6}}));
  const auto h = zpoly(4, {{{0, 0, 0, -1}, 1}, {{1, 1, 1, -4}, -6}});
  CHECK(box_apply(hesse_l, h) == zpoly(4, {{{1, 1, 1, -7}, -720}}));
  CHECK(box_apply(Relation{0, 0, 0, 0}, h).is_zero());
  CHECK_THROWS_AS(box_apply(Relation{1, -1}, h), std::invalid_argument);

  std::mt19937_64 rng(3);
  for (int t = 0; t < 300; ++t) {
    const std::uint32_t p = std::array<std::uint32_t, 3>{3, 5, 7}[t % 3];
    const auto f = hwgkz::testing::random_poly(rng, p, 4, 6, -6, 6);
    Relation l(4);
    for (auto& x : l) x = static_cast<int>(rng() % 7) - 3;
    CHECK(box_apply(l, f) == box_by_derivatives(l, f));
  }
}

TEST_CASE("Euler operators") {
  const EulerParameter zero(4, 0);
  const auto lam4 = zpoly(4, {{{0, 0, 0, 1}, 1}});
  CHECK(euler_apply(hesse, 0, zero, lam4) == lam4);
  CHECK(euler_apply(hesse, 3, zero, lam4) == lam4);
  CHECK(euler_apply(hesse, 3, EulerParameter{0, 0, 0, 1}, lam4).is_zero());
  CHECK(euler_factor(hesse, 0, zero, {2, 0, 0, 1}) == 7);
  CHECK_THROWS_AS(euler_apply(hesse, 4, zero, lam4), std::invalid_argument);
  CHECK_THROWS_AS(euler_apply(hesse, 0, EulerParameter{0, 0, 0}, lam4), std::invalid_argument);
}

TEST_CASE("truncation windows") {
  const auto f = poly(5, 2, {{{0, -1}, 1}, {{4, -5}, 2}, {{5, -1}, 3}, {{1, 0}, 4}});
  CHECK(rho_window(2, 1) == TruncationWindow{0, -1});
  CHECK(trunc(rho_window(2, 1), f, 5) == poly(5, 2, {{{0, -1}, 1}, {{4, -5}, 2}}));
  CHECK(trunc(TruncationWindow{1, -1}, f, 5) == poly(5, 2, {{{5, -1}, 3}}));
  CHECK(trunc(TruncationWindow{0, 0}, f, 5) == poly(5, 2, {{{1, 0}, 4}}));
  CHECK_THROWS_AS(trunc(TruncationWindow{0}, f, 5), std::invalid_argument);
}

TEST_CASE("truncation commutes with derivatives mod p") {
  for (std::uint32_t p : {2u, 3u, 5u, 7u}) CHECK(check_truncation_commutes(p, 3, 250, p).pass);
}

TEST_CASE("G_i and its derivative series") {
  const auto g3 = series_Gi(hesse, 3, 3);
  CHECK(g3.poly == to_q(zpoly(4, {{{1, 1, 1, -3}, 2}})));
  CHECK(g3.integral);
  const auto g6 = series_Gi(hesse, 3, 6);
  CHECK(g6.poly == to_q(zpoly(4, {{{1, 1, 1, -3}, 2}, {{2, 2, 2, -6}, -15}})));
  CHECK(g6.integer_poly() == zpoly(4, {{{1, 1, 1, -3}, 2}, {{2, 2, 2, -6}, -15}}));
  CHECK(series_Gi(hesse, 3, 2).poly.is_zero());

  const auto d44 = derivative_series(hesse, 3, 3, 3);
  CHECK(d44.integer_poly() == zpoly(4, {{{0, 0, 0, -1}, 1}, {{1, 1, 1, -4}, -6}}));
  CHECK(d44.parameter_of({1, 1, 1, -4}) == Exponent{1, 1, 1, -3});
  const auto d41 = derivative_series(hesse, 3, 0, 3);
  CHECK(d41.integer_poly() == zpoly(4, {{{0, 1, 1, -3}, 2}}));
  CHECK(d41.parameter_of({0, 1, 1, -3}) == Exponent{1, 1, 1, -3});
  CHECK(derivative_series(hesse, 3, 3, 6).poly.coefficient({2, 2, 2, -7}) == Rational(90));

  // The derivative route agrees with differentiating G_i term by term.
  const auto d = derivative(series_Gi(hesse, 3, 6).poly, 0, 1);
  CHECK(derivative_series(hesse, 3, 0, 6).poly == d);
}

TEST_CASE("G_i can have non-integral coefficients while its derivatives stay integral") {
  // Binary quadric: L is spanned by (1, 1, -2); l = 2(1, 1, -2) gives -3!/(2! 2!) = -3/2.
  const SupportSet quadric(1, 2, {{2, 0}, {0, 2}, {1, 1}});
  const auto g = series_Gi(quadric, 2, 4);
  CHECK_FALSE(g.integral);
  CHECK(g.poly.coefficient({2, 2, -4}) == Rational(-3, 2));
  CHECK_THROWS_AS(g.integer_poly(), std::domain_error);
  for (std::size_t j = 0; j < 3; ++j) CHECK(derivative_series(quadric, 2, j, 8).integral);
}

TEST_CASE("mod-p solution checks") {
  const auto a = symbolic_matrix(hesse, 5);
  const auto relations = relations_up_to_order(hesse, default_box_bound(5));
  const EulerParameter beta{4, 4, 4, 4};
  const auto ok = verify_mod_p_solution(hesse, a.entries[0][0], beta, relations, "entry");
  CHECK(ok.pass);
  CHECK(ok.witnesses["relations_acting"] == 1);

  auto mutated = a.entries[0][0];
  mutated.add_term({0, 0, 0, 4}, Fp(1, 5));
  CHECK_FALSE(verify_mod_p_solution(hesse, mutated, beta, relations, "entry").pass);
  // An extra monomial of the right weight breaks the box relation instead.
  auto mutated_box = a.entries[0][0];
  mutated_box.add_term({1, 1, 1, 1}, Fp(1, 5));
  CHECK(verify_mod_p_solution(hesse, mutated_box, beta, relations, "entry").pass == false);
  // Wrong Euler parameter.
  CHECK_FALSE(verify_mod_p_solution(hesse, a.entries[0][0], EulerParameter{4, 4, 4, 3}, relations, "entry").pass);
  CHECK_THROWS_AS(verify_mod_p_solution(hesse, a.entries[0][0], beta, {{1, 0, 0, 0}}, "entry"),
                  std::invalid_argument);
}

TEST_CASE("integer series checks") {
  const auto relations = relations_up_to_order(hesse, 6);
  for (std::size_t j = 0; j < 4; ++j) {
    const auto s = derivative_series(hesse, 3, j, 9);
    const auto r = verify_integer_series(hesse, s, relations);
    CHECK(r.pass);
    CHECK(r.witnesses["boundary_terms_skipped"].get<std::size_t>() > 0);
  }
  auto broken = derivative_series(hesse, 3, 3, 9);
  broken.poly.add_term({1, 1, 1, -4}, Rational(1));
  CHECK_FALSE(verify_integer_series(hesse, broken, relations).pass);

  for (std::uint32_t p : {3u, 5u, 7u})
    CHECK(check_integral_series(hesse, p, relations_up_to_order(hesse, default_box_bound(p))).pass);
  const auto q = cli::make_support(cli::preset("quartic-full"));
  CHECK(check_integral_series(q, 3, relations_up_to_order(q, default_box_bound(3))).pass);
}

TEST_CASE("truncated derivative series are mod-p solutions") {
  for (std::uint32_t p : {3u, 5u, 7u}) {
    const auto r = check_truncated_solutions(hesse, p, relations_up_to_order(hesse, default_box_bound(p)), 7);
    CHECK(r.pass);
    CHECK(r.witnesses["nonzero_truncations"].get<std::size_t>() > 0);
  }
  const auto q = cli::make_support(cli::preset("quartic-full"));
  CHECK(check_truncated_solutions(q, 3, relations_up_to_order(q, default_box_bound(3)), 7).pass);
}

TEST_CASE("Hasse-Witt entries as truncated series") {
  const auto c = compare_truncation(hesse, 3, 3, 5);
  CHECK(c.lhs == symbolic_entry(hesse, {1, 1, 1}, {1, 1, 1}, 5));
  CHECK(c.plus == poly(5, 4, {{{0, 0, 0, 4}, 1}, {{1, 1, 1, 1}, 4}}));
  CHECK(c.minus == -c.plus);
  CHECK(c.matches_plus);
  CHECK_FALSE(c.matches_minus);

  for (std::uint32_t p : {3u, 5u, 7u}) {
    const auto r = check_truncation_identity(hesse, p);
    CHECK(r.pass);
    CHECK(r.witnesses["sign"] == "+");
  }
  const auto r2 = check_truncation_identity(hesse, 2);
  CHECK(r2.witnesses["sign"] == "±");

  const auto q = cli::make_support(cli::preset("quartic-full"));
  const auto rq = check_truncation_identity(q, 3);
  CHECK(rq.pass);
  CHECK(rq.witnesses["sign"] == "+");
}

TEST_CASE("Hasse-Witt entries solve the GKZ system mod p") {
  for (const auto& name : cli::preset_names()) {
    const auto cfg = cli::preset(name);
    const auto s = cli::make_support(cfg);
    if (!s.contains_interior()) continue;
    for (std::uint32_t p : {2u, 3u, 5u}) {
      if (name == "quintic-full" && p > 2) continue;
      const auto r = check_entry_solutions(s, symbolic_matrix(s, p), relations_up_to_order(s, default_box_bound(p)));
      CHECK_MESSAGE(r.pass, name, " p=", p);
    }
  }
}

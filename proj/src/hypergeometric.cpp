#include "hwgkz/hypergeometric.hpp"

#include <map>
#include <random>
#include <stdexcept>

namespace hwgkz {
namespace {

Integer factorial(int m) {
  Integer acc = 1;
  for (int t = 2; t <= m; ++t) acc *= t;
  return acc;
}

EulerParameter negated_lift(const SupportSet& support, std::size_t column) {
  EulerParameter beta;
  for (int x : support.lifted()[column]) beta.push_back(-x);
  return beta;
}

void require_interior_column(const SupportSet& support, std::size_t column) {
  support.require_interior();
  if (column >= support.size() || !support.interior_row(column))
    throw std::invalid_argument("column " + std::to_string(column + 1) + " is not an interior monomial");
}

// numerator / prod(denominators) with an exactness flag.
Rational factorial_quotient(int numerator, const std::vector<int>& denominators, bool& integral) {
  Integer den = 1;
  for (int d : denominators) den *= factorial(d);
  const Integer num = factorial(numerator);
  if (num % den != 0) integral = false;
  return Rational(num, den);
}

// Some term survives d^{l+} or d^{l-}, so the box check is not vacuous.
bool acts_on(const Relation& l, const PolyFp& f) {
  for (int sign : {1, -1})
    for (const auto& [e, c] : f.terms()) {
      Fp acc = c;
      for (std::size_t k = 0; k < e.size() && !acc.is_zero(); ++k)
        if (sign * l[k] > 0) acc *= falling_factorial(c, e[k], sign * l[k]);
      if (!acc.is_zero()) return true;
    }
  return false;
}

std::string window_label(const TruncationWindow& r) { return exponent_label(r); }

}  // namespace

long euler_factor(const SupportSet& support, std::size_t coord, const EulerParameter& beta, const Exponent& s) {
  long total = 0;
  const auto& cols = support.lifted();
  for (std::size_t k = 0; k < s.size(); ++k) total += static_cast<long>(cols[k][coord]) * s[k];
  return total - beta[coord];
}

TruncationWindow rho_window(std::size_t nvars, std::size_t column) {
  TruncationWindow r(nvars, 0);
  r.at(column) = -1;
  return r;
}

Exponent TruncatedSeries::parameter_of(const Exponent& s) const {
  Exponent l = s;
  if (kind == Kind::Derivative) l[j] += 1;
  return l;
}

std::string TruncatedSeries::source() const {
  if (kind == Kind::G) return "G_" + std::to_string(i + 1);
  return "d/dL" + std::to_string(j + 1) + "(log L" + std::to_string(i + 1) + " + G_" + std::to_string(i + 1) + ")";
}

PolyZ TruncatedSeries::integer_poly() const {
  PolyZ out(poly.nvars(), Integer(0));
  for (const auto& [e, c] : poly.terms()) {
    if (denominator(c) != 1) throw std::domain_error(source() + " has non-integer coefficient " + c.str());
    out.add_term(e, numerator(c));
  }
  return out;
}

TruncatedSeries series_Gi(const SupportSet& support, std::size_t i, int depth) {
  require_interior_column(support, i);
  TruncatedSeries out{TruncatedSeries::Kind::G, i, i, depth, true, PolyQ(support.size(), Rational(0))};
  for (const auto& l : enumerate_Li(support, i, depth)) {
    const int m = -l[i];
    if (m == 0) continue;
    std::vector<int> den;
    for (std::size_t k = 0; k < l.size(); ++k)
      if (k != i) den.push_back(l[k]);
    Rational c = factorial_quotient(m - 1, den, out.integral);
    if ((m - 1) % 2) c = -c;
    out.poly.add_term(l, c);
  }
  return out;
}

TruncatedSeries derivative_series(const SupportSet& support, std::size_t i, std::size_t j, int depth) {
  require_interior_column(support, i);
  if (j >= support.size()) throw std::invalid_argument("column " + std::to_string(j + 1) + " is out of range");
  TruncatedSeries out{TruncatedSeries::Kind::Derivative, i, j, depth, true, PolyQ(support.size(), Rational(0))};
  for (const auto& l : enumerate_Li(support, i, depth)) {
    const int m = -l[i];
    std::vector<int> den;
    Rational c;
    if (j == i) {
      for (std::size_t k = 0; k < l.size(); ++k)
        if (k != i) den.push_back(l[k]);
      c = factorial_quotient(m, den, out.integral);
      if (m % 2) c = -c;
    } else {
      if (l[j] <= 0) continue;
      for (std::size_t k = 0; k < l.size(); ++k)
        if (k != i) den.push_back(k == j ? l[k] - 1 : l[k]);
      c = factorial_quotient(m - 1, den, out.integral);
      if ((m - 1) % 2) c = -c;
    }
    Exponent s = l;
    s[j] -= 1;
    out.poly.add_term(s, c);
  }
  return out;
}

VerificationReport verify_mod_p_solution(const SupportSet& support, const PolyFp& f, const EulerParameter& beta,
                                         const std::vector<Relation>& relations, std::string statement) {
  for (const auto& l : relations)
    if (!is_relation(support, l)) throw std::invalid_argument("relation " + exponent_label(l) + " is not in L");
  VerificationReport report(std::move(statement));
  const std::size_t coords = static_cast<std::size_t>(support.n() + 2);
  for (const auto& [e, c] : f.terms())
    for (std::size_t t = 0; t < coords; ++t)
      if (euler_factor(support, t, beta, e) != 0)
        report.fail("Euler operator Z_" + std::to_string(t) + " does not kill monomial " + exponent_label(e));
  std::size_t nontrivial = 0;
  for (const auto& l : relations) {
    const auto boxed = box_apply(l, f);
    if (!boxed.is_zero()) report.fail("box operator " + exponent_label(l) + " leaves " + to_text(boxed));
    if (acts_on(l, f)) ++nontrivial;
  }
  report.witnesses = {{"terms", f.size()}, {"relations", relations.size()}, {"relations_acting", nontrivial}};
  return report;
}

VerificationReport verify_integer_series(const SupportSet& support, const TruncatedSeries& series,
                                         const std::vector<Relation>& relations) {
  if (series.kind != TruncatedSeries::Kind::Derivative)
    throw std::invalid_argument("box checks need a derivative series");
  for (const auto& l : relations)
    if (!is_relation(support, l)) throw std::invalid_argument("relation " + exponent_label(l) + " is not in L");
  VerificationReport report("prop-3.4");
  if (!series.integral) {
    report.fail(series.source() + " has a factorial quotient that is not an integer");
    return report;
  }
  const PolyZ f = series.integer_poly();
  const EulerParameter beta = negated_lift(support, series.j);
  const std::size_t coords = static_cast<std::size_t>(support.n() + 2);
  for (std::size_t t = 0; t < coords; ++t) {
    const auto z = euler_apply(support, t, beta, f);
    if (!z.is_zero()) report.fail("Euler operator Z_" + std::to_string(t) + " leaves " + to_text(z));
  }

  auto cut_off = [&](const Exponent& s) {
    const Exponent l = series.parameter_of(s);
    if (!in_Li(support, series.i, l)) return false;
    if (series.j != series.i && l[series.j] <= 0) return false;
    return -l[series.i] > series.depth;
  };
  std::size_t checked = 0, skipped = 0;
  for (const auto& l : relations) {
    Exponent plus(l.size()), minus(l.size());
    for (std::size_t k = 0; k < l.size(); ++k) {
      plus[k] = std::max(l[k], 0);
      minus[k] = std::max(-l[k], 0);
    }
    const auto boxed = box_apply(l, f);
    for (const auto& [m, c] : boxed.terms()) {
      Exponent a = m, b = m;
      for (std::size_t k = 0; k < m.size(); ++k) {
        a[k] += plus[k];
        b[k] += minus[k];
      }
      if (cut_off(a) || cut_off(b)) {
        ++skipped;
        continue;
      }
      ++checked;
      report.fail(series.source() + ": box operator " + exponent_label(l) + " leaves " + c.str() + " at " +
                  exponent_label(m));
    }
  }
  report.witnesses = {{"source", series.source()},
                      {"depth", series.depth},
                      {"terms", f.size()},
                      {"relations", relations.size()},
                      {"boundary_terms_skipped", skipped},
                      {"interior_residues", checked}};
  return report;
}

TruncationComparison compare_truncation(const SupportSet& support, std::size_t i, std::size_t j, std::uint32_t p) {
  require_interior_column(support, j);
  const auto series = derivative_series(support, i, j, static_cast<int>(p));
  TruncationComparison out{i, j, symbolic_entry(support, support.exponent(i), support.exponent(j), p),
                           PolyFp(support.size(), Fp(0, p)), PolyFp(support.size(), Fp(0, p)), false, false};
  Exponent shift(support.size(), 0);
  shift[i] = static_cast<int>(p);
  out.plus = reduce_mod(trunc(rho_window(support.size(), i), series.integer_poly(), p), p).shifted(shift);
  out.minus = -out.plus;
  out.matches_plus = out.lhs == out.plus;
  out.matches_minus = out.lhs == out.minus;
  return out;
}

VerificationReport check_truncation_identity(const SupportSet& support, std::uint32_t p) {
  VerificationReport report("prop-3.8");
  bool plus_all = true, minus_all = true;
  nlohmann::json pairs = nlohmann::json::array();
  for (auto i : support.interior_columns())
    for (auto j : support.interior_columns()) {
      const auto cmp = compare_truncation(support, i, j, p);
      plus_all = plus_all && cmp.matches_plus;
      minus_all = minus_all && cmp.matches_minus;
      std::string matched = cmp.matches_plus && cmp.matches_minus ? "±"
                            : cmp.matches_plus                    ? "+"
                            : cmp.matches_minus                   ? "-"
                                                                  : "none";
      pairs.push_back({{"i", i + 1}, {"j", j + 1}, {"matched", matched}});
      if (!cmp.matches_plus && !cmp.matches_minus)
        report.fail("A(" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ") = " + to_text(cmp.lhs) +
                    " matches neither sign of " + to_text(cmp.plus));
    }
  const std::string sign = plus_all && minus_all ? "±" : plus_all ? "+" : minus_all ? "-" : "none";
  if (sign == "none" && report.pass) report.fail("no single sign fits every entry");
  report.witnesses = {{"p", p}, {"sign", sign}, {"unique", sign == "+" || sign == "-"}, {"pairs", pairs}};
  return report;
}

VerificationReport check_integral_series(const SupportSet& support, std::uint32_t p,
                                         const std::vector<Relation>& relations) {
  VerificationReport report("prop-3.4");
  std::size_t series_checked = 0, skipped = 0, terms = 0;
  for (auto i : support.interior_columns())
    for (std::size_t j = 0; j < support.size(); ++j) {
      const auto series = derivative_series(support, i, j, static_cast<int>(p));
      const auto sub = verify_integer_series(support, series, relations);
      ++series_checked;
      terms += series.poly.size();
      skipped += sub.witnesses.value("boundary_terms_skipped", std::size_t{0});
      for (const auto& f : sub.failures) report.fail(f);
      if (!sub.pass && sub.failures.empty()) report.fail(series.source() + " failed");
    }
  report.witnesses = {{"depth", p},
                      {"series", series_checked},
                      {"terms", terms},
                      {"relations", relations.size()},
                      {"boundary_terms_skipped", skipped}};
  return report;
}

VerificationReport check_truncated_solutions(const SupportSet& support, std::uint32_t p,
                                             const std::vector<Relation>& relations, std::uint64_t seed,
                                             std::size_t random_windows) {
  VerificationReport report("lemma-3.7");
  const std::size_t n = support.size();
  const auto columns = support.interior_columns();

  std::vector<TruncationWindow> windows;
  for (auto c : columns) windows.push_back(rho_window(n, c));
  windows.emplace_back(n, 0);
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> entry(-2, 1);
  for (std::size_t w = 0; w < random_windows; ++w) {
    TruncationWindow r(n);
    for (auto& x : r) x = entry(rng);
    windows.push_back(std::move(r));
  }

  std::size_t truncations = 0, nonzero = 0, route_checks = 0;
  for (auto i : columns)
    for (std::size_t j = 0; j < n; ++j) {
      std::map<int, PolyZ> by_depth;
      const EulerParameter beta = negated_lift(support, j);
      for (const auto& w : windows) {
        const int depth = std::max(static_cast<int>(p), -static_cast<int>(p) * w[i]);
        auto it = by_depth.find(depth);
        if (it == by_depth.end())
          it = by_depth.emplace(depth, derivative_series(support, i, j, depth).integer_poly()).first;
        const PolyZ exact = trunc(w, it->second, p);
        const PolyFp f = reduce_mod(exact, p);
        ++truncations;
        if (f.is_zero()) continue;
        ++nonzero;
        const auto sub = verify_mod_p_solution(support, f, beta, relations, "lemma-3.7");
        for (const auto& msg : sub.failures)
          report.fail("window " + window_label(w) + ", series (" + std::to_string(i + 1) + "," +
                      std::to_string(j + 1) + "): " + msg);
        for (const auto& l : relations) {
          ++route_checks;
          if (!(reduce_mod(box_apply(l, exact), p) == box_apply(l, f)))
            report.fail("integer and mod-p box routes disagree for " + exponent_label(l) + " on window " +
                        window_label(w));
        }
      }
    }
  nlohmann::json ws = nlohmann::json::array();
  for (const auto& w : windows) ws.push_back(w);
  report.witnesses = {{"p", p},
                      {"windows", ws},
                      {"seed", seed},
                      {"truncations", truncations},
                      {"nonzero_truncations", nonzero},
                      {"relations", relations.size()},
                      {"route_cross_checks", route_checks}};
  return report;
}

VerificationReport check_truncation_commutes(std::uint32_t p, std::size_t nvars, std::size_t count,
                                             std::uint64_t seed) {
  VerificationReport report("lemma-3.7-commutation");
  std::mt19937_64 rng(seed);
  const int span = 2 * static_cast<int>(p);
  std::uniform_int_distribution<int> exponent(-span, span - 1), window(-2, 1), terms(1, 6);
  std::uniform_int_distribution<std::int64_t> coeff(1, p - 1 > 0 ? p - 1 : 1);
  const Fp zero(0, p);
  std::size_t checks = 0;
  for (std::size_t t = 0; t < count; ++t) {
    PolyFp f(nvars, zero);
    const int size = terms(rng);
    for (int s = 0; s < size; ++s) {
      Exponent e(nvars);
      for (auto& x : e) x = exponent(rng);
      f.add_term(e, zero.with_value(coeff(rng)));
    }
    std::vector<TruncationWindow> ws;
    for (std::size_t k = 0; k < nvars; ++k) ws.push_back(rho_window(nvars, k));
    ws.emplace_back(nvars, 0);
    TruncationWindow r(nvars);
    for (auto& x : r) x = window(rng);
    ws.push_back(r);
    for (const auto& w : ws)
      for (std::size_t k = 0; k < nvars; ++k) {
        ++checks;
        if (!(derivative(trunc(w, f, p), k) == trunc(w, derivative(f, k), p)))
          report.fail("d/dL" + std::to_string(k + 1) + " and Trunc" + window_label(w) + " do not commute on " +
                      to_text(f));
      }
  }
  report.witnesses = {{"p", p}, {"polynomials", count}, {"seed", seed}, {"checks", checks}};
  return report;
}

VerificationReport check_entry_solutions(const SupportSet& support, const HWMatrixSymbolic& a,
                                         const std::vector<Relation>& relations) {
  support.require_interior();
  VerificationReport report("cor-3.11");
  const std::size_t coords = static_cast<std::size_t>(support.n() + 2);
  std::size_t entries = 0;
  for (std::size_t r = 0; r < a.index.size(); ++r)
    for (std::size_t s = 0; s < a.index.size(); ++s) {
      const auto& entry = a.entries[r][s];
      const Exponent u = support.lift(a.index[r]), v = support.lift(a.index[s]);
      EulerParameter exact(coords), reduced(coords);
      for (std::size_t t = 0; t < coords; ++t) {
        exact[t] = static_cast<long>(a.p) * u[t] - v[t];
        reduced[t] = -v[t];
      }
      ++entries;
      const std::string where = "A(" + std::to_string(r + 1) + "," + std::to_string(s + 1) + ")";
      for (const auto& msg : verify_mod_p_solution(support, entry, exact, relations, "cor-3.11").failures)
        report.fail(where + ": " + msg);
      for (std::size_t t = 0; t < coords; ++t)
        if (!euler_apply(support, t, reduced, entry).is_zero())
          report.fail(where + ": Euler operator Z_" + std::to_string(t) + " with beta = -a_j^+ is nonzero mod p");
    }
  report.witnesses = {{"p", a.p}, {"entries", entries}, {"relations", relations.size()}};
  return report;
}

}  // namespace hwgkz

#include "hwgkz/hasse_witt.hpp"

#include <stdexcept>

namespace hwgkz {
namespace {

Exponent hw_target(const SupportSet& support, const Exponent& u, const Exponent& v, std::uint32_t p) {
  Exponent target = support.lift(u);
  const Exponent vl = support.lift(v);
  for (std::size_t c = 0; c < target.size(); ++c) target[c] = static_cast<int>(p) * target[c] - vl[c];
  return target;
}

}  // namespace

PolyFp symbolic_entry(const SupportSet& support, const Exponent& u, const Exponent& v, const FactorialTable& table) {
  const auto p = table.modulus();
  PolyFp entry(support.size(), Fp(0, p));
  for (const auto& e : enumerate_representations(support.lifted(), hw_target(support, u, v, p)))
    entry.add_term(e, multinomial_mod_p(e, table));
  return entry;
}

PolyFp symbolic_entry(const SupportSet& support, const Exponent& u, const Exponent& v, std::uint32_t p) {
  return symbolic_entry(support, u, v, FactorialTable(p));
}

HWMatrixSymbolic symbolic_matrix(const SupportSet& support, std::uint32_t p) {
  const FactorialTable table(p);
  HWMatrixSymbolic a;
  a.index = support.interior();
  a.p = p;
  for (const auto& u : a.index) {
    auto& row = a.entries.emplace_back();
    for (const auto& v : a.index) row.push_back(symbolic_entry(support, u, v, table));
  }
  return a;
}

VerificationReport check_scaled_exponents(const SupportSet& support, const HWMatrixScaled& b) {
  VerificationReport report("lemma-2.7");
  std::size_t monomials = 0;
  for (std::size_t r = 0; r < b.entries.size(); ++r)
    for (std::size_t s = 0; s < b.entries.size(); ++s)
      for (const auto& [e, c] : b.entries[r][s].terms()) {
        ++monomials;
        if (!in_Li(support, b.columns[r], e))
          report.fail("B(" + std::to_string(r + 1) + "," + std::to_string(s + 1) + ") exponent " + exponent_label(e) +
                      " not in L_" + std::to_string(b.columns[r] + 1));
      }
  report.witnesses = {{"entries", b.entries.size() * b.entries.size()}, {"monomials_checked", monomials}};
  return report;
}

VerificationReport check_scaled_constant_terms(const HWMatrixScaled& b) {
  VerificationReport report("lemma-2.8");
  nlohmann::json diagonal = nlohmann::json::array();
  for (std::size_t r = 0; r < b.entries.size(); ++r)
    for (std::size_t s = 0; s < b.entries.size(); ++s) {
      const auto c = constant_term(b.entries[r][s]).value();
      if (r == s) diagonal.push_back(c);
      if (c != (r == s ? 1u : 0u))
        report.fail("B(" + std::to_string(r + 1) + "," + std::to_string(s + 1) + ") has constant term " +
                    std::to_string(c));
    }
  report.witnesses = {{"entries", b.entries.size() * b.entries.size()}, {"diagonal_constant_terms", diagonal}};
  return report;
}

HWMatrixScaled rescale_to_B(const SupportSet& support, const HWMatrixSymbolic& a) {
  HWMatrixScaled b;
  b.columns = support.interior_columns();
  b.index = a.index;
  b.p = a.p;
  for (std::size_t r = 0; r < a.entries.size(); ++r) {
    auto& row = b.entries.emplace_back();
    for (std::size_t s = 0; s < a.entries.size(); ++s) {
      Exponent shift(support.size(), 0);
      shift[b.columns[r]] -= static_cast<int>(a.p);
      shift[b.columns[s]] += 1;
      row.push_back(a.entries[r][s].shifted(shift));
    }
  }
  return b;
}

HWMatrixScaled scaled_matrix_B(const SupportSet& support, const HWMatrixSymbolic& a) {
  auto b = rescale_to_B(support, a);
  for (const auto& check : {check_scaled_exponents(support, b), check_scaled_constant_terms(b)})
    if (!check.pass) throw std::logic_error(check.statement + " violated: " + check.failures.front());
  return b;
}

GenericDetResult generic_det_check(const SupportSet& support, std::uint32_t p, std::size_t bound) {
  support.require_interior();
  const auto a = symbolic_matrix(support, p);
  const std::size_t m = a.index.size();
  if (m > bound)
    throw std::length_error("M = " + std::to_string(m) + " exceeds determinant bound " + std::to_string(bound));

  const auto b = rescale_to_B(support, a);

  GenericDetResult out{det_leibniz(b.entries, bound), det_leibniz(a.entries, bound), Fp(0, p), false, {}};
  out.det_B_constant_term = constant_term(out.det_B);

  Exponent lift(support.size(), 0);
  for (auto c : b.columns) lift[c] += static_cast<int>(p) - 1;
  out.scaling_identity = out.det_B.shifted(lift) == out.det_A;

  VerificationReport thm("thm-2.3");
  if (out.det_A.is_zero()) thm.fail("det A is the zero polynomial");
  if (!out.scaling_identity) thm.fail("det B * prod Lambda_i^(p-1) differs from det A");
  thm.witnesses = {{"p", p},
                   {"M", m},
                   {"det_A_terms", out.det_A.size()},
                   {"scaling_identity", out.scaling_identity}};

  VerificationReport prop("prop-2.11");
  if (out.det_B_constant_term.value() != 1)
    prop.fail("constant term of det B is " + std::to_string(out.det_B_constant_term.value()));
  prop.witnesses = {{"p", p},
                    {"M", m},
                    {"det_B_constant_term", out.det_B_constant_term.value()},
                    {"det_B_terms", out.det_B.size()}};

  out.reports = {std::move(thm), std::move(prop), check_scaled_exponents(support, b), check_scaled_constant_terms(b)};
  return out;
}

Fq evaluate(const PolyFp& f, std::span<const Fq> point) {
  if (point.size() != f.nvars())
    throw std::invalid_argument("evaluation point has " + std::to_string(point.size()) + " coordinates, expected " +
                                std::to_string(f.nvars()));
  if (point.empty()) throw std::invalid_argument("evaluation needs at least one coordinate");
  const auto& field = point.front().field();
  if (field->characteristic() != f.zero_coefficient().modulus())
    throw std::invalid_argument("evaluation point has characteristic " + std::to_string(field->characteristic()) +
                                ", polynomial is over F_" + std::to_string(f.zero_coefficient().modulus()));
  Fq acc = field->zero();
  for (const auto& [e, c] : f.terms()) {
    Fq term = field->embed(c);
    for (std::size_t k = 0; k < e.size(); ++k) {
      if (e[k] > 0) term *= point[k].pow(static_cast<std::uint64_t>(e[k]));
      else if (e[k] < 0) term *= point[k].inverse().pow(static_cast<std::uint64_t>(-e[k]));
    }
    acc += term;
  }
  return acc;
}

std::size_t rank(Matrix<Fq> m) {
  const std::size_t rows = m.size();
  if (rows == 0) return 0;
  const std::size_t cols = m.front().size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t pivot = r;
    while (pivot < rows && m[pivot][c].is_zero()) ++pivot;
    if (pivot == rows) continue;
    std::swap(m[r], m[pivot]);
    const Fq inv = m[r][c].inverse();
    for (std::size_t s = r + 1; s < rows; ++s) {
      if (m[s][c].is_zero()) continue;
      const Fq factor = m[s][c] * inv;
      for (std::size_t t = c; t < cols; ++t) m[s][t] -= factor * m[r][t];
    }
    ++r;
  }
  return r;
}

HWMatrixEvaluated evaluate_matrix(const HWMatrixSymbolic& a, std::vector<Fq> point) {
  HWMatrixEvaluated out;
  out.index = a.index;
  for (const auto& x : point)
    if (!x.same_field(point.front())) throw std::invalid_argument("evaluation point mixes fields");
  for (const auto& row : a.entries) {
    auto& dst = out.entries.emplace_back();
    for (const auto& entry : row) dst.push_back(evaluate(entry, point));
  }
  out.point = std::move(point);
  out.rank = rank(out.entries);
  return out;
}

Fq oracle_dense_coefficient(const SupportSet& support, std::span<const Fq> point, const Exponent& u,
                            const Exponent& v) {
  if (point.size() != support.size())
    throw std::invalid_argument("evaluation point must have one coordinate per support monomial");
  const auto& field = point.front().field();
  const auto p = field->characteristic();
  const std::size_t vars = static_cast<std::size_t>(support.n() + 1);

  PolyFq f(vars, field->zero());
  for (std::size_t k = 0; k < support.size(); ++k) f.add_term(support.exponent(k), point[k]);
  PolyFq power = PolyFq::constant(vars, field->one());
  for (std::uint32_t t = 0; t + 1 < p; ++t) power = power * f;

  Exponent x(vars);
  for (std::size_t c = 0; c < vars; ++c) {
    x[c] = static_cast<int>(p) * u[c] - v[c];
    if (x[c] < 0) return field->zero();
  }
  return power.coefficient(x);
}

nlohmann::json to_json(const HWMatrixSymbolic& a) {
  nlohmann::json labels = nlohmann::json::array(), rows = nlohmann::json::array();
  for (const auto& u : a.index) labels.push_back(exponent_label(u));
  for (const auto& row : a.entries) {
    nlohmann::json r = nlohmann::json::array();
    for (const auto& e : row) r.push_back(to_text(e));
    rows.push_back(r);
  }
  return {{"p", a.p}, {"rows", labels}, {"cols", labels}, {"entries", rows}};
}

nlohmann::json to_json(const HWMatrixScaled& b) {
  nlohmann::json labels = nlohmann::json::array(), rows = nlohmann::json::array(), cols = nlohmann::json::array();
  for (const auto& u : b.index) labels.push_back(exponent_label(u));
  for (auto c : b.columns) cols.push_back(c + 1);
  for (const auto& row : b.entries) {
    nlohmann::json r = nlohmann::json::array();
    for (const auto& e : row) r.push_back(to_text(e));
    rows.push_back(r);
  }
  return {{"p", b.p}, {"rows", labels}, {"cols", labels}, {"variables", cols}, {"entries", rows}};
}

nlohmann::json to_json(const HWMatrixEvaluated& e) {
  nlohmann::json labels = nlohmann::json::array(), rows = nlohmann::json::array(), point = nlohmann::json::array();
  for (const auto& u : e.index) labels.push_back(exponent_label(u));
  const bool prime = !e.point.empty() && e.point.front().field()->degree() == 1;
  auto literal = [&](const Fq& x) -> nlohmann::json {
    if (prime) return x.coefficients().front();
    return x.literal();
  };
  for (const auto& row : e.entries) {
    nlohmann::json r = nlohmann::json::array();
    for (const auto& x : row) r.push_back(literal(x));
    rows.push_back(r);
  }
  for (const auto& x : e.point) point.push_back(literal(x));
  nlohmann::json out = {{"rows", labels}, {"cols", labels}, {"entries", rows}, {"rank", e.rank}, {"lambda", point}};
  if (!e.point.empty()) {
    const auto& f = *e.point.front().field();
    out["q"] = f.order();
    out["p"] = f.characteristic();
    out["a"] = f.degree();
  }
  return out;
}

}  // namespace hwgkz

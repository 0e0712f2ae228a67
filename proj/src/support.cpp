#include "hwgkz/support.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <stdexcept>

#include <boost/multiprecision/cpp_int.hpp>

namespace hwgkz {
namespace {

void compositions(int remaining, std::size_t slot, Exponent& current, std::vector<Exponent>& out) {
  if (slot + 1 == current.size()) {
    if (remaining >= 1) {
      current[slot] = remaining;
      out.push_back(current);
    }
    return;
  }
  const int slots_after = static_cast<int>(current.size() - slot - 1);
  for (int v = 1; v <= remaining - slots_after; ++v) {
    current[slot] = v;
    compositions(remaining - v, slot + 1, current, out);
  }
}

Relation canonical_sign(Relation l) {
  for (int x : l) {
    if (x == 0) continue;
    if (x < 0)
      for (int& y : l) y = -y;
    break;
  }
  return l;
}

bool is_zero_vector(const Relation& l) {
  return std::all_of(l.begin(), l.end(), [](int x) { return x == 0; });
}

}  // namespace

std::vector<Exponent> enumerate_interior(int d, int n) {
  if (n < 0) throw std::invalid_argument("dimension n must be nonnegative");
  if (d < n + 1) throw std::invalid_argument("U is empty: need d >= n+1");
  std::vector<Exponent> out;
  Exponent current(static_cast<std::size_t>(n + 1), 0);
  compositions(d, 0, current, out);
  return out;
}

SupportSet::SupportSet(int n, int d, std::vector<Exponent> exponents)
    : n_(n), d_(d), exponents_(std::move(exponents)) {
  if (exponents_.empty()) throw std::invalid_argument("support must be nonempty");
  interior_ = enumerate_interior(d_, n_);
  std::set<Exponent> seen;
  for (const auto& a : exponents_) {
    if (a.size() != static_cast<std::size_t>(n_ + 1))
      throw std::invalid_argument("exponent " + exponent_label(a) + " does not have n+1 entries");
    int total = 0;
    for (int x : a) {
      if (x < 0) throw std::invalid_argument("exponent " + exponent_label(a) + " has a negative entry");
      total += x;
    }
    if (total != d_)
      throw std::invalid_argument("exponent " + exponent_label(a) + " is not homogeneous of degree " +
                                  std::to_string(d_));
    if (!seen.insert(a).second) throw std::invalid_argument("exponent " + exponent_label(a) + " is repeated");
    lifted_.push_back(lift(a));
  }
  interior_column_.assign(interior_.size(), std::nullopt);
  for (std::size_t r = 0; r < interior_.size(); ++r) {
    auto it = std::find(exponents_.begin(), exponents_.end(), interior_[r]);
    if (it != exponents_.end()) {
      interior_column_[r] = static_cast<std::size_t>(it - exponents_.begin());
      ++present_;
    }
  }
}

Exponent SupportSet::lift(const Exponent& u) const {
  Exponent out = u;
  out.push_back(1);
  return out;
}

std::vector<std::size_t> SupportSet::interior_columns() const {
  require_interior();
  std::vector<std::size_t> out;
  for (const auto& c : interior_column_) out.push_back(*c);
  return out;
}

std::optional<std::size_t> SupportSet::interior_row(std::size_t column) const {
  for (std::size_t r = 0; r < interior_column_.size(); ++r)
    if (interior_column_[r] == column) return r;
  return std::nullopt;
}

void SupportSet::require_interior() const {
  if (!contains_interior())
    throw HypothesisViolation("U not contained in support: " + std::to_string(present_) + " of " +
                              std::to_string(interior_.size()) +
                              " interior monomials present; generic invertibility hypothesis U ⊆ {a_k} violated");
}

std::vector<Exponent> enumerate_representations(const std::vector<Exponent>& columns, const Exponent& target,
                                                std::optional<std::size_t> skip) {
  std::vector<Exponent> out;
  const std::size_t count = columns.size();
  if (count == 0) return out;
  const std::size_t dim = target.size();
  for (const auto& c : columns)
    if (c.size() != dim || c.back() != 1)
      throw std::invalid_argument("representation columns must match the target length and end in 1");
  if (std::any_of(target.begin(), target.end(), [](int x) { return x < 0; })) return out;

  // reach[k][c]: some column >= k has a positive c-th coordinate.
  std::vector<std::vector<char>> reach(count + 1, std::vector<char>(dim, 0));
  for (std::size_t k = count; k-- > 0;)
    for (std::size_t c = 0; c < dim; ++c)
      reach[k][c] = reach[k + 1][c] || (skip != k && columns[k][c] > 0);

  Exponent e(count, 0);
  Exponent remaining = target;
  std::function<void(std::size_t)> dfs = [&](std::size_t k) {
    for (std::size_t c = 0; c < dim; ++c)
      if (remaining[c] > 0 && !reach[k][c]) return;
    if (k == count) {
      out.push_back(e);
      return;
    }
    int cap = remaining.back();
    if (skip == k) cap = 0;
    for (std::size_t c = 0; c < dim; ++c)
      if (columns[k][c] > 0) cap = std::min(cap, remaining[c] / columns[k][c]);
    for (int v = 0; v <= cap; ++v) {
      e[k] = v;
      for (std::size_t c = 0; c < dim; ++c) remaining[c] -= v * columns[k][c];
      dfs(k + 1);
      for (std::size_t c = 0; c < dim; ++c) remaining[c] += v * columns[k][c];
    }
    e[k] = 0;
  };
  dfs(0);
  return out;
}

namespace {

struct Reduced {
  std::vector<Relation> kernel;
  std::size_t rank = 0;
};

Reduced reduce_lifted(const SupportSet& support) {
  const auto& cols = support.lifted();
  const std::size_t rows = cols.size();
  const std::size_t m = cols.front().size();
  std::vector<std::vector<Integer>> w(rows, std::vector<Integer>(m + rows, 0));
  for (std::size_t k = 0; k < rows; ++k) {
    for (std::size_t c = 0; c < m; ++c) w[k][c] = cols[k][c];
    w[k][m + k] = 1;
  }
  std::size_t r = 0;
  for (std::size_t c = 0; c < m && r < rows; ++c) {
    while (true) {
      std::optional<std::size_t> best;
      for (std::size_t s = r; s < rows; ++s)
        if (!w[s][c].is_zero() && (!best || abs(w[s][c]) < abs(w[*best][c]))) best = s;
      if (!best) break;
      std::swap(w[r], w[*best]);
      bool clean = true;
      for (std::size_t s = r + 1; s < rows; ++s) {
        if (w[s][c].is_zero()) continue;
        const Integer q = w[s][c] / w[r][c];
        for (std::size_t t = 0; t < w[s].size(); ++t) w[s][t] -= q * w[r][t];
        if (!w[s][c].is_zero()) clean = false;
      }
      if (clean) break;
    }
    if (!w[r][c].is_zero()) ++r;
  }
  Reduced out;
  out.rank = r;
  for (std::size_t s = r; s < rows; ++s) {
    Relation l(rows);
    for (std::size_t k = 0; k < rows; ++k) {
      if (abs(w[s][m + k]) > std::numeric_limits<int>::max())
        throw std::overflow_error("kernel basis entry exceeds int range");
      l[k] = w[s][m + k].convert_to<int>();
    }
    out.kernel.push_back(canonical_sign(std::move(l)));
  }
  return out;
}

}  // namespace

std::vector<Relation> kernel_basis(const SupportSet& support) { return reduce_lifted(support).kernel; }

std::size_t lifted_rank(const SupportSet& support) { return reduce_lifted(support).rank; }

bool is_relation(const SupportSet& support, const Relation& l) {
  if (l.size() != support.size()) return false;
  const auto& cols = support.lifted();
  for (std::size_t c = 0; c < cols.front().size(); ++c) {
    long total = 0;
    for (std::size_t k = 0; k < l.size(); ++k) total += static_cast<long>(l[k]) * cols[k][c];
    if (total != 0) return false;
  }
  return true;
}

bool in_Li(const SupportSet& support, std::size_t column, const Relation& l) {
  if (l.size() != support.size() || column >= l.size()) return false;
  for (std::size_t k = 0; k < l.size(); ++k) {
    if (k == column ? l[k] > 0 : l[k] < 0) return false;
  }
  return is_relation(support, l);
}

std::vector<Relation> enumerate_Li(const SupportSet& support, std::size_t column, int depth) {
  if (column >= support.size()) throw std::out_of_range("L_i column out of range");
  std::vector<Relation> out;
  const auto& ai = support.lifted()[column];
  for (int t = 0; t <= depth; ++t) {
    Exponent target = ai;
    for (int& x : target) x *= t;
    for (auto& e : enumerate_representations(support.lifted(), target, column)) {
      e[column] = -t;
      out.push_back(std::move(e));
    }
  }
  return out;
}

int relation_order(const Relation& l) {
  int total = 0;
  for (int x : l)
    if (x > 0) total += x;
  return total;
}

std::vector<Relation> relations_up_to_order(const SupportSet& support, int max_order) {
  const std::size_t count = support.size();
  const std::size_t dim = static_cast<std::size_t>(support.n() + 1);
  std::vector<Relation> out;
  for (int t = 1; t <= max_order; ++t) {
    // Group the size-t multisets of columns by the exponent sum they produce.
    std::map<Exponent, std::vector<Exponent>> by_sum;
    Exponent e(count, 0);
    Exponent sum(dim, 0);
    std::function<void(std::size_t, int)> gen = [&](std::size_t k, int left) {
      if (k + 1 == count) {
        e[k] = left;
        for (std::size_t c = 0; c < dim; ++c) sum[c] += left * support.exponent(k)[c];
        by_sum[sum].push_back(e);
        for (std::size_t c = 0; c < dim; ++c) sum[c] -= left * support.exponent(k)[c];
        e[k] = 0;
        return;
      }
      for (int v = 0; v <= left; ++v) {
        e[k] = v;
        for (std::size_t c = 0; c < dim; ++c) sum[c] += v * support.exponent(k)[c];
        gen(k + 1, left - v);
        for (std::size_t c = 0; c < dim; ++c) sum[c] -= v * support.exponent(k)[c];
      }
      e[k] = 0;
    };
    gen(0, t);
    for (const auto& [key, group] : by_sum) {
      for (std::size_t a = 0; a < group.size(); ++a)
        for (std::size_t b = a + 1; b < group.size(); ++b) {
          bool disjoint = true;
          for (std::size_t k = 0; k < count && disjoint; ++k) disjoint = group[a][k] == 0 || group[b][k] == 0;
          if (!disjoint) continue;
          Relation l(count);
          for (std::size_t k = 0; k < count; ++k) l[k] = group[a][k] - group[b][k];
          out.push_back(canonical_sign(std::move(l)));
        }
    }
  }
  std::sort(out.begin(), out.end(), [](const Relation& x, const Relation& y) {
    const int ox = relation_order(x), oy = relation_order(y);
    return ox != oy ? ox < oy : x < y;
  });
  return out;
}

bool convex_combination_certificate(const SupportSet& support, std::size_t column, const Relation& l) {
  using boost::multiprecision::cpp_rational;
  if (!in_Li(support, column, l) || is_zero_vector(l)) return false;
  const cpp_rational li = l[column];
  cpp_rational weight_sum = 0;
  const auto& cols = support.lifted();
  std::vector<cpp_rational> point(cols.front().size(), 0);
  for (std::size_t k = 0; k < l.size(); ++k) {
    if (k == column) continue;
    const cpp_rational w = -cpp_rational(l[k]) / li;
    if (w < 0) return false;
    weight_sum += w;
    for (std::size_t c = 0; c < point.size(); ++c) point[c] += w * cols[k][c];
  }
  if (weight_sum != 1) return false;
  for (std::size_t c = 0; c < point.size(); ++c)
    if (point[c] != cols[column][c]) return false;
  return true;
}

VerificationReport check_zero_sum_tuples(const SupportSet& support, int depth, std::uint64_t seed,
                                         std::size_t full_limit, std::size_t samples) {
  VerificationReport report("prop-2.9");
  const auto columns = support.interior_columns();
  std::vector<std::vector<Relation>> sets;
  nlohmann::json sizes = nlohmann::json::array();
  long double product = 1;
  for (auto i : columns) {
    sets.push_back(enumerate_Li(support, i, depth));
    sizes.push_back(sets.back().size());
    product *= static_cast<long double>(sets.back().size());
  }
  const std::size_t count = support.size();
  std::size_t checked = 0, zero_sums = 0;
  auto examine = [&](const std::vector<std::size_t>& pick) {
    ++checked;
    Relation sum(count, 0);
    bool all_zero = true;
    for (std::size_t r = 0; r < sets.size(); ++r) {
      const auto& l = sets[r][pick[r]];
      all_zero = all_zero && is_zero_vector(l);
      for (std::size_t k = 0; k < count; ++k) sum[k] += l[k];
    }
    if (!is_zero_vector(sum)) return;
    ++zero_sums;
    if (!all_zero) {
      std::string msg = "nonzero tuple sums to zero:";
      for (std::size_t r = 0; r < sets.size(); ++r) msg += " " + exponent_label(sets[r][pick[r]]);
      report.fail(msg);
    }
  };

  std::vector<std::size_t> pick(sets.size(), 0);
  const bool full = product <= static_cast<long double>(full_limit);
  if (full) {
    while (true) {
      examine(pick);
      std::size_t r = 0;
      while (r < pick.size() && ++pick[r] == sets[r].size()) pick[r++] = 0;
      if (r == pick.size()) break;
    }
  } else {
    std::mt19937_64 rng(seed);
    examine(pick);  // the all-zero tuple (0 is listed first in each L_i)
    for (std::size_t s = 0; s < samples; ++s) {
      for (std::size_t r = 0; r < sets.size(); ++r)
        pick[r] = std::uniform_int_distribution<std::size_t>(0, sets[r].size() - 1)(rng);
      examine(pick);
    }
  }
  report.witnesses = {{"depth", depth},
                      {"set_sizes", sizes},
                      {"mode", full ? "full" : "sampled"},
                      {"seed", seed},
                      {"tuples_checked", checked},
                      {"zero_sum_tuples", zero_sums}};
  return report;
}

VerificationReport check_convex_certificates(const SupportSet& support, int depth) {
  VerificationReport report("lemma-2.16");
  std::size_t certified = 0;
  for (auto i : support.interior_columns()) {
    for (const auto& l : enumerate_Li(support, i, depth)) {
      if (is_zero_vector(l)) continue;
      if (convex_combination_certificate(support, i, l)) ++certified;
      else report.fail("no convex certificate for column " + std::to_string(i + 1) + " relation " + exponent_label(l));
    }
  }
  report.witnesses = {{"depth", depth}, {"relations_certified", certified}};
  return report;
}

}  // namespace hwgkz

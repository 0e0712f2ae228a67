#include "hwgkz/cli.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <functional>
#include <random>
#include <sstream>

#include "CLI11.hpp"
#include "hwgkz/hasse_witt.hpp"
#include "hwgkz/hypergeometric.hpp"

namespace hwgkz::cli {
namespace {

std::vector<Exponent> all_monomials(int d, int vars) {
  std::vector<Exponent> out;
  Exponent e(static_cast<std::size_t>(vars), 0);
  std::function<void(std::size_t, int)> gen = [&](std::size_t k, int left) {
    if (k + 1 == e.size()) {
      e[k] = left;
      out.push_back(e);
      return;
    }
    for (int v = left; v >= 0; --v) {
      e[k] = v;
      gen(k + 1, left - v);
    }
  };
  gen(0, d);
  return out;
}

template <class T>
T required(const nlohmann::json& doc, const char* key) {
  if (!doc.contains(key)) throw ConfigError(std::string("missing field \"") + key + "\"");
  try {
    return doc.at(key).get<T>();
  } catch (const nlohmann::json::exception&) {
    throw ConfigError(std::string("field \"") + key + "\" has the wrong type");
  }
}

template <class T>
T optional_field(const nlohmann::json& doc, const char* key, T fallback) {
  if (!doc.contains(key) || doc.at(key).is_null()) return fallback;
  try {
    return doc.at(key).get<T>();
  } catch (const nlohmann::json::exception&) {
    throw ConfigError(std::string("field \"") + key + "\" has the wrong type");
  }
}

void validate(FamilyConfig& c) {
  if (c.n < 1) throw ConfigError("n must be at least 1");
  if (c.d < c.n + 1) throw ConfigError("degree d must satisfy d >= n+1 so that U is nonempty");
  if (c.exponents.empty()) throw ConfigError("exponents must be nonempty");
  for (const auto& e : c.exponents) {
    if (e.size() != static_cast<std::size_t>(c.n + 1))
      throw ConfigError("exponent " + exponent_label(e) + " must have n+1 = " + std::to_string(c.n + 1) + " entries");
    int total = 0;
    for (int x : e) {
      if (x < 0) throw ConfigError("exponent " + exponent_label(e) + " has a negative entry");
      total += x;
    }
    if (total != c.d)
      throw ConfigError("exponent " + exponent_label(e) + " is not homogeneous of degree " + std::to_string(c.d));
  }
  if (!is_prime(c.p) || c.p > 97) throw ConfigError("p must be a prime no larger than 97");
  if (c.a < 1 || c.a > 4) throw ConfigError("extension degree a must be in 1..4");
  if (c.depth == 0) c.depth = static_cast<int>(c.p);
  if (c.depth < 1) throw ConfigError("depth must be positive");
  if (c.box_bound == 0) c.box_bound = default_box_bound(c.p);
  if (c.box_bound < 1) throw ConfigError("box_bound must be positive");
  if (c.lambda && c.lambda->size() != c.exponents.size())
    throw ConfigError("lambda must have one entry per exponent (N = " + std::to_string(c.exponents.size()) + ")");
}

int to_column(const SupportSet& support, int user_index, const char* what) {
  if (user_index < 1 || static_cast<std::size_t>(user_index) > support.size())
    throw ConfigError(std::string(what) + " must be a column index in 1.." + std::to_string(support.size()));
  return user_index - 1;
}

std::string csv_field(const std::string& s) {
  return s.find(',') == std::string::npos ? s : "\"" + s + "\"";
}

struct Session {
  FamilyConfig config;
  std::string out_path;
  bool timing = false;
  std::ostream* out = nullptr;

  void emit(const nlohmann::json& doc) const { emit_text(doc.dump(2) + "\n"); }
  void emit_text(const std::string& text) const {
    if (out_path.empty()) {
      *out << text;
      return;
    }
    std::ofstream file(out_path, std::ios::binary);
    if (!file) throw ConfigError("cannot open output file " + out_path);
    file << text;
  }
};

nlohmann::json header(const std::string& command, const FamilyConfig& c) {
  return {{"command", command}, {"family", to_json(c)}};
}

using Clock = std::chrono::steady_clock;

template <class F>
VerificationReport timed(F&& f) {
  const auto start = Clock::now();
  VerificationReport r = f();
  r.seconds = std::chrono::duration<double>(Clock::now() - start).count();
  return r;
}

std::vector<VerificationReport> run_suite(const std::string& suite, const FamilyConfig& c) {
  const auto support = make_support(c);
  support.require_interior();
  const auto relations = relations_up_to_order(support, c.box_bound);
  std::vector<VerificationReport> reports;
  auto want = [&](const char* id) { return suite == "all" || suite == id; };

  if (want("2.7") || want("2.8")) {
    const auto b = rescale_to_B(support, symbolic_matrix(support, c.p));
    if (want("2.7")) reports.push_back(timed([&] { return check_scaled_exponents(support, b); }));
    if (want("2.8")) reports.push_back(timed([&] { return check_scaled_constant_terms(b); }));
  }
  if (want("2.9")) {
    reports.push_back(timed([&] { return check_zero_sum_tuples(support, c.depth, c.seed); }));
    reports.push_back(timed([&] { return check_convex_certificates(support, c.depth); }));
  }
  if (want("2.11")) {
    const auto start = Clock::now();
    auto result = generic_det_check(support, c.p);
    const double seconds = std::chrono::duration<double>(Clock::now() - start).count();
    for (std::size_t k = 0; k < 2; ++k) {
      result.reports[k].seconds = seconds;
      reports.push_back(result.reports[k]);
    }
  }
  if (want("3.4")) reports.push_back(timed([&] { return check_integral_series(support, c.p, relations); }));
  if (want("3.7")) {
    reports.push_back(timed([&] { return check_truncated_solutions(support, c.p, relations, c.seed); }));
    const std::size_t vars = std::min<std::size_t>(support.size(), 4);
    reports.push_back(timed([&] { return check_truncation_commutes(c.p, vars, 1000, c.seed); }));
  }
  if (want("3.8")) reports.push_back(timed([&] { return check_truncation_identity(support, c.p); }));
  if (want("3.11")) {
    const auto a = symbolic_matrix(support, c.p);
    reports.push_back(timed([&] { return check_entry_solutions(support, a, relations); }));
  }
  return reports;
}

}  // namespace

FamilyConfig parse_config(const nlohmann::json& doc) {
  if (!doc.is_object()) throw ConfigError("config must be a single JSON object");
  FamilyConfig c;
  c.n = required<int>(doc, "n");
  c.d = required<int>(doc, "d");
  c.exponents = required<std::vector<Exponent>>(doc, "exponents");
  const auto p = required<long long>(doc, "p");
  if (p < 2 || p > 97) throw ConfigError("p must be a prime no larger than 97");
  c.p = static_cast<std::uint32_t>(p);
  const auto a = optional_field<long long>(doc, "a", 1);
  if (a < 1 || a > 4) throw ConfigError("extension degree a must be in 1..4");
  c.a = static_cast<unsigned>(a);
  c.depth = optional_field<int>(doc, "depth", 0);
  c.box_bound = optional_field<int>(doc, "box_bound", 0);
  c.seed = optional_field<std::uint64_t>(doc, "seed", 1);
  if (doc.contains("lambda") && !doc.at("lambda").is_null()) {
    const auto& lam = doc.at("lambda");
    if (!lam.is_array()) throw ConfigError("lambda must be an array");
    std::vector<std::string> literals;
    for (const auto& x : lam) {
      if (x.is_number_integer()) literals.push_back(std::to_string(x.get<long long>()));
      else if (x.is_string()) literals.push_back(x.get<std::string>());
      else throw ConfigError("lambda entries must be integers or \"c0,c1,...\" strings");
    }
    c.lambda = std::move(literals);
  }
  validate(c);
  return c;
}

nlohmann::json to_json(const FamilyConfig& c) {
  nlohmann::json j = {{"n", c.n},          {"d", c.d},         {"exponents", c.exponents}, {"p", c.p},
                      {"a", c.a},          {"depth", c.depth}, {"box_bound", c.box_bound}, {"seed", c.seed}};
  if (c.lambda) j["lambda"] = *c.lambda;
  return j;
}

std::vector<std::string> preset_names() { return {"hesse-cubic", "fermat-cubic", "quartic-full", "quintic-full"}; }

FamilyConfig preset(const std::string& name) {
  FamilyConfig c;
  c.n = 2;
  if (name == "hesse-cubic") {
    c.d = 3;
    c.exponents = {{3, 0, 0}, {0, 3, 0}, {0, 0, 3}, {1, 1, 1}};
    c.p = 5;
  } else if (name == "fermat-cubic") {
    c.d = 3;
    c.exponents = {{3, 0, 0}, {0, 3, 0}, {0, 0, 3}};
    c.p = 5;
  } else if (name == "quartic-full") {
    c.d = 4;
    c.exponents = all_monomials(4, 3);
    c.p = 3;
  } else if (name == "quintic-full") {
    c.d = 5;
    c.exponents = all_monomials(5, 3);
    c.p = 2;
  } else {
    throw ConfigError("unknown preset \"" + name + "\"");
  }
  validate(c);
  return c;
}

SupportSet make_support(const FamilyConfig& config) {
  try {
    return SupportSet(config.n, config.d, config.exponents);
  } catch (const std::invalid_argument& e) {
    throw ConfigError(e.what());
  }
}

FieldPtr make_field(const FamilyConfig& config) { return ExtensionField::create(config.p, config.a); }

std::vector<Fq> parse_lambda(const FamilyConfig& config, const FieldPtr& field) {
  if (!config.lambda) throw ConfigError("this command needs \"lambda\" in the config");
  std::vector<Fq> point;
  for (const auto& lit : *config.lambda) {
    try {
      point.push_back(parse_field_literal(field, lit));
    } catch (const std::invalid_argument& e) {
      throw ConfigError("lambda entry \"" + lit + "\" does not parse in F_q: " + e.what());
    }
  }
  return point;
}

int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Hasse-Witt matrices of generic hypersurfaces and their A-hypergeometric series"};
  app.require_subcommand(1);

  std::string config_path, preset_name, suite = "all", sweep;
  std::optional<std::uint32_t> p_override;
  std::optional<int> depth_override, box_override;
  std::optional<std::uint64_t> seed_override;
  std::optional<std::string> lambda_override;
  int user_i = 0, user_j = 0;
  std::size_t instances = 20;
  Session session;
  session.out = &out;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--config", config_path, "JSON family definition");
    sub->add_option("--preset", preset_name, "built-in family")
        ->check(CLI::IsMember(preset_names()));
    sub->add_option("--p", p_override, "override the prime");
    sub->add_option("--seed", seed_override, "seed for randomized suites");
    sub->add_option("--box-bound", box_override, "maximal order of enumerated box operators");
    sub->add_option("--lambda", lambda_override, "override lambda, entries separated by ';'");
    sub->add_option("--out", session.out_path, "write the report to FILE");
    sub->add_flag("--timing", session.timing, "include wall-clock seconds in reports");
  };

  auto* hw_symbolic = app.add_subcommand("hw-symbolic", "symbolic matrix A(Lambda) mod p");
  auto* hw_eval = app.add_subcommand("hw-eval", "A(lambda) over F_q and its rank");
  auto* generic_det = app.add_subcommand("generic-det", "det B, its constant term and det A");
  auto* series = app.add_subcommand("series", "G_i and the derivative series with integer coefficients");
  auto* trunc_cmd = app.add_subcommand("trunc", "rho-window truncation and the A_ij comparison");
  auto* verify = app.add_subcommand("verify", "run verification suites");
  auto* oracle = app.add_subcommand("oracle", "cross-check evaluation against dense expansion");
  for (auto* sub : {hw_symbolic, hw_eval, generic_det, series, trunc_cmd, verify, oracle}) add_common(sub);
  hw_eval->add_option("--sweep", sweep, "k=INDEX: vary lambda_INDEX over F_q, CSV output");
  for (auto* sub : {series, trunc_cmd}) sub->add_option("--i", user_i, "interior column (1-based)")->required();
  series->add_option("--j", user_j, "differentiation column (1-based)")->required();
  trunc_cmd->add_option("--j", user_j, "interior column (1-based)")->required();
  series->add_option("--depth", depth_override, "series depth (-l_i <= depth)");
  verify->add_option("--suite", suite, "suite to run")
      ->check(CLI::IsMember({"all", "2.7", "2.8", "2.9", "2.11", "3.4", "3.7", "3.8", "3.11"}));
  oracle->add_option("--instances", instances, "random points when lambda is absent");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kPass;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kConfigError;
  }

  try {
    if (config_path.empty() == preset_name.empty()) throw ConfigError("give exactly one of --config or --preset");
    FamilyConfig c;
    if (!preset_name.empty()) {
      c = preset(preset_name);
    } else {
      std::ifstream in(config_path);
      if (!in) throw ConfigError("cannot read config file " + config_path);
      nlohmann::json doc;
      try {
        doc = nlohmann::json::parse(in);
      } catch (const nlohmann::json::parse_error& e) {
        throw ConfigError(std::string("config is not valid JSON: ") + e.what());
      }
      c = parse_config(doc);
    }
    if (p_override || box_override || seed_override || lambda_override) {
      nlohmann::json doc = to_json(c);
      if (p_override) {
        doc["p"] = *p_override;
        if (!box_override) doc["box_bound"] = nullptr;
        doc["depth"] = nullptr;
      }
      if (box_override) doc["box_bound"] = *box_override;
      if (seed_override) doc["seed"] = *seed_override;
      if (lambda_override) {
        nlohmann::json lam = nlohmann::json::array();
        std::stringstream ss(*lambda_override);
        std::string part;
        while (std::getline(ss, part, ';')) lam.push_back(part);
        doc["lambda"] = lam;
      }
      c = parse_config(doc);
    }
    if (depth_override) {
      if (*depth_override < 1) throw ConfigError("depth must be positive");
      c.depth = *depth_override;
    }
    session.config = c;
    const auto support = make_support(c);

    if (*hw_symbolic) {
      auto doc = header("hw-symbolic", c);
      doc["matrix"] = to_json(symbolic_matrix(support, c.p));
      doc["contains_interior"] = support.contains_interior();
      doc["interior_present"] = support.interior_present();
      session.emit(doc);
      return kPass;
    }

    if (*hw_eval) {
      const auto field = make_field(c);
      const auto a = symbolic_matrix(support, c.p);
      if (!sweep.empty()) {
        if (sweep.rfind("k=", 0) != 0) throw ConfigError("--sweep expects k=INDEX");
        int index = 0;
        try {
          index = std::stoi(sweep.substr(2));
        } catch (const std::exception&) {
          throw ConfigError("--sweep expects k=INDEX");
        }
        const std::size_t k = static_cast<std::size_t>(to_column(support, index, "sweep index"));
        std::vector<Fq> point = c.lambda ? parse_lambda(c, field) : std::vector<Fq>(support.size(), field->one());
        std::ostringstream csv;
        csv << "lambda_" << index << ",rank\n";
        for (const auto& x : field->elements()) {
          point[k] = x;
          csv << csv_field(x.literal()) << ',' << evaluate_matrix(a, point).rank << '\n';
        }
        session.emit_text(csv.str());
        return kPass;
      }
      auto doc = header("hw-eval", c);
      doc["matrix"] = to_json(evaluate_matrix(a, parse_lambda(c, field)));
      session.emit(doc);
      return kPass;
    }

    if (*generic_det) {
      const auto result = generic_det_check(support, c.p);
      auto doc = header("generic-det", c);
      doc["det_B"] = to_text(result.det_B);
      doc["det_B_constant_term"] = result.det_B_constant_term.value();
      doc["det_A"] = to_text(result.det_A);
      doc["scaling_identity"] = result.scaling_identity;
      doc["thm_2_3"] = result.reports[0].pass ? "pass" : "fail";
      doc["prop_2_11"] = result.reports[1].pass ? "pass" : "fail";
      doc["reports"] = nlohmann::json::array();
      for (const auto& r : result.reports) doc["reports"].push_back(r.to_json(session.timing));
      session.emit(doc);
      return all_pass(result.reports) ? kPass : kVerificationFailed;
    }

    if (*series) {
      const auto i = static_cast<std::size_t>(to_column(support, user_i, "--i"));
      const auto j = static_cast<std::size_t>(to_column(support, user_j, "--j"));
      const auto g = series_Gi(support, i, c.depth);
      const auto ds = derivative_series(support, i, j, c.depth);
      auto doc = header("series", c);
      doc["i"] = user_i;
      doc["j"] = user_j;
      doc["depth"] = c.depth;
      doc["G_i"] = to_text(g.poly);
      doc["G_i_integral"] = g.integral;
      doc["derivative_series"] = to_text(ds.poly);
      doc["derivative_series_integral"] = ds.integral;
      doc["derivative_source"] = ds.source();
      session.emit(doc);
      return kPass;
    }

    if (*trunc_cmd) {
      const auto i = static_cast<std::size_t>(to_column(support, user_i, "--i"));
      const auto j = static_cast<std::size_t>(to_column(support, user_j, "--j"));
      const auto ds = derivative_series(support, i, j, static_cast<int>(c.p));
      const auto window = rho_window(support.size(), i);
      const auto cmp = compare_truncation(support, i, j, c.p);
      nlohmann::json signs = nlohmann::json::array();
      if (cmp.matches_plus) signs.push_back("+");
      if (cmp.matches_minus) signs.push_back("-");
      auto doc = header("trunc", c);
      doc["i"] = user_i;
      doc["j"] = user_j;
      doc["window"] = window;
      doc["trunc"] = to_text(trunc(window, ds.integer_poly(), c.p));
      doc["comparison"] = {{"A_ij", to_text(cmp.lhs)},
                           {"plus", to_text(cmp.plus)},
                           {"minus", to_text(cmp.minus)},
                           {"matched_signs", signs}};
      session.emit(doc);
      return signs.empty() ? kVerificationFailed : kPass;
    }

    if (*verify) {
      const auto reports = run_suite(suite, c);
      auto doc = header("verify", c);
      doc["suite"] = suite;
      doc["reports"] = nlohmann::json::array();
      for (const auto& r : reports) doc["reports"].push_back(r.to_json(session.timing));
      doc["pass"] = all_pass(reports);
      session.emit(doc);
      return all_pass(reports) ? kPass : kVerificationFailed;
    }

    if (*oracle) {
      const auto field = make_field(c);
      const auto a = symbolic_matrix(support, c.p);
      std::vector<std::vector<Fq>> points;
      if (c.lambda) {
        points.push_back(parse_lambda(c, field));
      } else {
        std::mt19937_64 rng(c.seed);
        const auto elements = field->elements();
        std::uniform_int_distribution<std::size_t> pick(0, elements.size() - 1);
        for (std::size_t t = 0; t < instances; ++t) {
          std::vector<Fq> point;
          for (std::size_t k = 0; k < support.size(); ++k) point.push_back(elements[pick(rng)]);
          points.push_back(std::move(point));
        }
      }
      VerificationReport report("oracle");
      std::size_t compared = 0;
      for (const auto& point : points) {
        const auto eval = evaluate_matrix(a, point);
        for (std::size_t r = 0; r < a.index.size(); ++r)
          for (std::size_t s = 0; s < a.index.size(); ++s) {
            ++compared;
            const auto dense = oracle_dense_coefficient(support, point, a.index[r], a.index[s]);
            if (!(dense == eval.entries[r][s]))
              report.fail("entry (" + std::to_string(r + 1) + "," + std::to_string(s + 1) + "): symbolic " +
                          eval.entries[r][s].literal() + ", dense " + dense.literal());
          }
      }
      report.witnesses = {{"points", points.size()}, {"entries_compared", compared}, {"seed", c.seed}};
      auto doc = header("oracle", c);
      doc["reports"] = nlohmann::json::array({report.to_json(session.timing)});
      doc["pass"] = report.pass;
      session.emit(doc);
      return report.pass ? kPass : kVerificationFailed;
    }
  } catch (const HypothesisViolation& e) {
    err << "hypothesis violated: " << e.what() << "\n";
    return kHypothesisViolated;
  } catch (const ConfigError& e) {
    err << "config error: " << e.what() << "\n";
    return kConfigError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kConfigError;
  }
  return kConfigError;
}

}  // namespace hwgkz::cli

#include "cli.hpp"

#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>

#include <CLI11.hpp>

#include "hurwitz/factorize.hpp"
#include "hurwitz/series.hpp"
#include "hurwitz/verify.hpp"
#include "hurwitz/wop.hpp"

#ifndef HURWITZ_DEFAULT_CONFIG
#define HURWITZ_DEFAULT_CONFIG "config/budget.json"
#endif

namespace hurwitz::cli {

using json = nlohmann::ordered_json;

nlohmann::ordered_json Budget::to_json() const {
  return {{"max_n", max_n},
          {"max_k", max_k},
          {"max_N", max_N},
          {"max_table_weight", max_table_weight},
          {"enumeration_limit", enumeration_limit}};
}

BudgetError::BudgetError(std::string cap, long long value, long long limit)
    : std::runtime_error(cap + " = " + std::to_string(value) + " exceeds the budget cap " + std::to_string(limit)),
      cap_(std::move(cap)),
      value_(value),
      limit_(limit) {}

namespace {

void set_cap(Budget& b, const std::string& key, long long value) {
  if (value < 0) throw UsageError("budget value for " + key + " must be nonnegative");
  if (key == "max_n") b.max_n = static_cast<int>(value);
  else if (key == "max_k") b.max_k = static_cast<int>(value);
  else if (key == "max_N") b.max_N = static_cast<int>(value);
  else if (key == "max_table_weight") b.max_table_weight = static_cast<int>(value);
  else if (key == "enumeration_limit") b.enumeration_limit = static_cast<std::uint64_t>(value);
  else throw UsageError("unknown budget key '" + key + "'");
}

void require_cap(const char* cap, long long value, long long limit) {
  if (value > limit) throw BudgetError(cap, value, limit);
}

void require_at_least(const char* flag, long long value, long long low) {
  if (value < low) throw UsageError(std::string(flag) + " must be at least " + std::to_string(low));
}

json series_json(const PSeries& f) {
  json terms = json::array();
  for (const auto& [alpha, c] : f.terms()) {
    terms.push_back({{"n", alpha.weight()}, {"alpha", alpha.str()}, {"coeff", to_string(c)}});
  }
  return terms;
}

void emit(std::ostream& out, const json& j) { out << j.dump() << '\n'; }

struct Args {
  std::string config = HURWITZ_DEFAULT_CONFIG;
  int n = 0;
  int d = 0;
  int k = 0;
  int N = 0;
  int nmax = 0;
  int max_weight = 0;
  std::string alpha;
  std::string B;
  std::string A;
  std::string format = "json";
  std::string method = "groupalg";
  std::string out_path;
  bool transitive = false;
  bool literal = false;
};

class Runtime {
 public:
  Runtime() : start_(std::chrono::steady_clock::now()) {}
  long long ms() const {
    return std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_;
};

Budget resolve_budget(const Args& a, bool config_given) {
  Budget b;
  if (std::filesystem::exists(a.config)) {
    b = load_budget_file(a.config);
  } else if (config_given) {
    throw UsageError("config file not found: " + a.config);
  }
  if (const char* env = std::getenv("HURWITZ_BUDGET"); env && *env) apply_overrides(b, env);
  return b;
}

json residual_json(const Residual& r) {
  return {{"id", r.id}, {"pass", r.pass}, {"max_abs", to_string(r.max_abs)}, {"residual_terms", series_json(r.residual)}};
}

json verify_record(const Residual& r) {
  json j{{"id", r.id}, {"N", r.N}, {"pass", r.pass}};
  if (r.experimental) j["experimental"] = true;
  j["max_abs"] = to_string(r.max_abs);
  j["residual_terms"] = series_json(r.residual);
  return j;
}

int hw_count(const Args& a, const Budget& b, std::ostream& out) {
  require_at_least("--n", a.n, 1);
  require_at_least("--d", a.d, 2);
  require_at_least("--k", a.k, 0);
  require_cap("max_n", a.n, b.max_n);
  require_cap("max_k", a.k, b.max_k);
  const auto alpha = parse_partition(a.alpha);
  if (alpha.weight() != a.n) {
    throw UsageError("--alpha " + a.alpha + " is not a partition of " + std::to_string(a.n));
  }
  emit(out, {{"count", to_string(count_factorizations(a.n, a.d, a.k, alpha, a.transitive))}});
  return 0;
}

int hw_min(const Args& a, const Budget& b, std::ostream& out) {
  require_at_least("--d", a.d, 2);
  const auto alpha = parse_partition(a.alpha);
  require_cap("max_n", alpha.weight(), b.max_n);
  const auto m = minimal_k(alpha.weight(), a.d, alpha);
  if (m) emit(out, {{"k", m->k}, {"h", to_string(m->h)}});
  else emit(out, {{"k", nullptr}, {"h", "0"}});
  return 0;
}

int hw_table(const Args& a, const Budget& b, std::ostream& out) {
  require_at_least("--d", a.d, 2);
  require_at_least("--nmax", a.nmax, 1);
  require_cap("max_n", a.nmax, b.max_n);
  if (a.format != "json" && a.format != "csv") throw UsageError("--format must be json or csv");
  const auto table = minimal_count_table(a.d, a.nmax);

  json rows = json::array();
  if (a.format == "csv") out << "n,alpha,mu,h\n";
  for (const auto& alpha : partitions_up_to(a.nmax)) {
    const auto m = mu(a.d, alpha);
    BigInt h = 0;
    if (m.admissible) h = *table.find({alpha.weight(), a.d, m.as_int(), alpha, true});
    if (a.format == "csv") {
      out << alpha.weight() << ",\"" << alpha.str() << "\"," << to_string(m.value) << ',' << to_string(h) << '\n';
    } else {
      rows.push_back({{"n", alpha.weight()}, {"alpha", alpha.str()}, {"mu", to_string(m.value)}, {"h", to_string(h)}});
    }
  }
  if (a.format == "json") emit(out, {{"d", a.d}, {"nmax", a.nmax}, {"rows", rows}, {"budget", b.to_json()}});
  return 0;
}

int wop_apply(const Args& a, const Budget& b, std::ostream& out) {
  require_at_least("--d", a.d, 2);
  const auto alpha = parse_partition(a.alpha);
  const auto f = PSeries::monomial(alpha.weight(), alpha);
  PSeries image(alpha.weight());
  if (a.method == "groupalg") {
    require_cap("max_n", alpha.weight(), b.max_n);
    image = apply_W_groupalg(a.d, f);
  } else if (a.method == "explicit") {
    require_cap("max_n", alpha.weight(), b.max_n);
    if (a.d == 2) image = apply_W2_explicit(f);
    else if (a.d == 3) image = apply_W3_explicit(f);
    else throw UsageError("--method explicit is available for d = 2 and d = 3 only");
  } else if (a.method == "reconstructed") {
    require_cap("max_table_weight", alpha.weight(), b.max_table_weight);
    image = apply_reconstructed_linear(build_term_table(a.d, alpha.weight()), f);
  } else {
    throw UsageError("--method must be explicit, groupalg or reconstructed");
  }
  emit(out, {{"d", a.d}, {"alpha", alpha.str()}, {"method", a.method}, {"terms", series_json(image)}});
  return 0;
}

int wop_coeff(const Args& a, const Budget& b, std::ostream& out) {
  require_at_least("--d", a.d, 2);
  const auto B = parse_partition(a.B);
  const auto A = parse_partition(a.A);
  require_cap("max_table_weight", B.weight(), b.max_table_weight);
  const auto lc = local_coefficient(a.d, B, A);
  emit(out, {{"d", a.d},
             {"B", B.str()},
             {"A", A.str()},
             {"c", to_string(lc.c)},
             {"N", to_string(lc.count)},
             {"aut", to_string(lc.aut)},
             {"degree", A.length() + B.length()}});
  return 0;
}

int wop_table(const Args& a, const Budget& b, std::ostream& out) {
  require_at_least("--d", a.d, 2);
  require_at_least("--max-weight", a.max_weight, 1);
  require_cap("max_table_weight", a.max_weight, b.max_table_weight);
  const auto table = build_term_table(a.d, a.max_weight);
  json terms = json::array();
  for (const auto& t : table.terms) {
    terms.push_back({{"B", t.B.str()},
                     {"A", t.A.str()},
                     {"c", to_string(t.c)},
                     {"N", to_string(t.count)},
                     {"aut", to_string(t.aut)},
                     {"degree", t.degree()}});
  }
  const json doc{{"d", a.d}, {"max_weight", a.max_weight}, {"terms", terms}, {"budget", b.to_json()}};
  if (a.out_path.empty()) {
    emit(out, doc);
  } else {
    std::ofstream file(a.out_path);
    if (!file) throw UsageError("cannot write " + a.out_path);
    emit(file, doc);
    emit(out, {{"written", a.out_path}, {"terms", table.terms.size()}});
  }
  return 0;
}

int finish(json record, bool pass, const Runtime& rt, const Budget& b, std::ostream& out) {
  record["runtime_ms"] = rt.ms();
  record["budget"] = b.to_json();
  emit(out, record);
  return pass ? 0 : 1;
}

int verify_closed_form(const Args& a, const Budget& b, std::ostream& out) {
  Runtime rt;
  require_at_least("--nmax", a.nmax, 1);
  require_cap("max_n", a.nmax, b.max_n);
  const auto rep = check_closed_form(a.nmax);
  json mismatches = json::array();
  json rows = json::array();
  for (const auto& r : rep.rows) {
    rows.push_back({{"alpha", r.alpha.str()},
                    {"computed", to_string(r.computed)},
                    {"formula", to_string(r.formula)},
                    {"integral", r.integral},
                    {"match", r.match}});
    if (!r.match) {
      mismatches.push_back(
          {{"n", r.alpha.weight()}, {"alpha", r.alpha.str()}, {"coeff", to_string(Rational(r.computed) - r.formula)}});
    }
  }
  json rec{{"id", "closed_form"}, {"N", a.nmax}, {"pass", rep.pass}, {"residual_terms", mismatches}, {"rows", rows}};
  return finish(std::move(rec), rep.pass, rt, b, out);
}

int verify_residual(const std::string& which, const Args& a, const Budget& b, std::ostream& out) {
  Runtime rt;
  require_at_least("--N", a.N, 0);
  require_cap("max_N", a.N, b.max_N);
  if (which == "gj-pde") {
    const auto r = check_gj_pde(a.N);
    return finish(verify_record(r), r.pass, rt, b, out);
  }
  if (which == "thm53") {
    const auto r = check_thm53(a.N);
    return finish(verify_record(r), r.pass, rt, b, out);
  }
  const auto rep = check_thm55(a.N);
  auto rec = verify_record(rep.normalized);
  if (a.literal) rec["literal"] = residual_json(rep.literal);
  return finish(std::move(rec), rep.normalized.pass, rt, b, out);
}

int verify_conjecture(const Args& a, const Budget& b, std::ostream& out) {
  Runtime rt;
  require_at_least("--d", a.d, 2);
  require_at_least("--N", a.N, 0);
  require_cap("max_N", a.N, b.max_N);
  require_cap("max_table_weight", a.N, b.max_table_weight);
  const auto rep = check_conjecture(a.d, a.N);
  auto rec = verify_record(rep.residual);
  rec["combinations"] = rep.combinations;
  rec["grading_violations"] = rep.grading_violations;
  const bool pass = rep.grading_violations == 0 && (rep.residual.experimental || rep.residual.pass);
  return finish(std::move(rec), pass, rt, b, out);
}

int verify_components(const Args& a, const Budget& b, std::ostream& out) {
  Runtime rt;
  require_at_least("--N", a.N, 0);
  require_cap("max_N", a.N, b.max_N);
  const auto rep = check_components(a.N, b.enumeration_limit);

  json covered = json::array();
  json skipped = json::array();
  for (const auto& p : rep.covered) covered.push_back(p.str());
  for (const auto& p : rep.skipped) skipped.push_back(p.str());
  json hists = json::array();
  for (const auto& [alpha, h] : rep.histograms) {
    hists.push_back({{"alpha", alpha.str()},
                     {"case1", h[CaseTag::Case1]},
                     {"case2", h[CaseTag::Case2]},
                     {"case3", h[CaseTag::Case3]},
                     {"case4", h[CaseTag::Case4]}});
  }
  json residual_terms = json::array();
  for (const auto* r : {&rep.eq1, &rep.eq3, &rep.sum}) {
    for (auto t : series_json(r->residual)) {
      t["equation"] = r->id;
      residual_terms.push_back(std::move(t));
    }
  }
  json rec{{"id", "components"},
           {"N", a.N},
           {"pass", rep.pass},
           {"residual_terms", residual_terms},
           {"complete", rep.skipped.empty()},
           {"covered", covered},
           {"skipped", skipped},
           {"case4", rep.case4},
           {"histograms_sum_to_h", rep.histograms_sum_to_h},
           {"histograms", hists},
           {"equations",
            {residual_json(rep.eq1), residual_json(rep.eq2_literal), residual_json(rep.eq2_alternative),
             residual_json(rep.eq3), residual_json(rep.sum)}}};
  return finish(std::move(rec), rep.pass, rt, b, out);
}

}  // namespace

Budget load_budget_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot read config file " + path);
  json j;
  try {
    j = json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw UsageError("malformed config file " + path + ": " + e.what());
  }
  Budget b;
  for (const auto& [key, value] : j.items()) {
    if (!value.is_number_integer()) throw UsageError("budget value for " + key + " must be an integer");
    set_cap(b, key, value.get<long long>());
  }
  return b;
}

void apply_overrides(Budget& budget, std::string_view spec) {
  while (!spec.empty()) {
    const auto comma = spec.find(',');
    const auto item = spec.substr(0, comma);
    spec = comma == std::string_view::npos ? std::string_view() : spec.substr(comma + 1);
    if (item.empty()) continue;
    const auto eq = item.find('=');
    if (eq == std::string_view::npos) throw UsageError("budget override '" + std::string(item) + "' is not key=value");
    const std::string key(item.substr(0, eq));
    const std::string value(item.substr(eq + 1));
    long long v = 0;
    try {
      std::size_t used = 0;
      v = std::stoll(value, &used);
      if (used != value.size()) throw std::invalid_argument(value);
    } catch (const std::exception&) {
      throw UsageError("budget override for " + key + " is not an integer: '" + value + "'");
    }
    set_cap(budget, key, v);
  }
}

Partition parse_partition(std::string_view text) {
  if (text.empty()) throw UsageError("empty partition");
  std::vector<int> parts;
  while (true) {
    const auto comma = text.find(',');
    const auto token = text.substr(0, comma);
    bool ok = !token.empty() && token.size() <= 9;
    for (char ch : token) ok = ok && ch >= '0' && ch <= '9';
    const int v = ok ? std::stoi(std::string(token)) : 0;
    if (!ok || v <= 0) throw UsageError("invalid partition part '" + std::string(token) + "'");
    parts.push_back(v);
    if (comma == std::string_view::npos) break;
    text = text.substr(comma + 1);
  }
  return Partition(std::move(parts));
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Args a;
  CLI::App app{"Hurwitz numbers, W-operators and their differential equations", "hurwitz"};
  app.fallthrough();
  app.require_subcommand(1);
  auto* config = app.add_option("--config", a.config, "budget file (JSON)");

  auto* hw = app.add_subcommand("hw", "Hurwitz number counts");
  hw->require_subcommand(1);
  auto* hw_count_cmd = hw->add_subcommand("count", "ordered factorizations into d-cycles");
  hw_count_cmd->add_option("--n", a.n)->required();
  hw_count_cmd->add_option("--d", a.d)->required();
  hw_count_cmd->add_option("--k", a.k)->required();
  hw_count_cmd->add_option("--alpha", a.alpha)->required();
  hw_count_cmd->add_flag("--transitive", a.transitive);
  auto* hw_min_cmd = hw->add_subcommand("min", "minimal transitive factorization length and count");
  hw_min_cmd->add_option("--d", a.d)->required();
  hw_min_cmd->add_option("--alpha", a.alpha)->required();
  auto* hw_table_cmd = hw->add_subcommand("table", "minimal counts for all partitions up to nmax");
  hw_table_cmd->add_option("--d", a.d)->required();
  hw_table_cmd->add_option("--nmax", a.nmax)->required();
  hw_table_cmd->add_option("--format", a.format);

  auto* wop = app.add_subcommand("wop", "W([d]) operators");
  wop->require_subcommand(1);
  auto* wop_apply_cmd = wop->add_subcommand("apply", "image of p_alpha");
  wop_apply_cmd->add_option("--d", a.d)->required();
  wop_apply_cmd->add_option("--alpha", a.alpha)->required();
  wop_apply_cmd->add_option("--method", a.method);
  auto* wop_coeff_cmd = wop->add_subcommand("coeff", "reconstructed coefficient c(B, A)");
  wop_coeff_cmd->add_option("--d", a.d)->required();
  wop_coeff_cmd->add_option("--B", a.B)->required();
  wop_coeff_cmd->add_option("--A", a.A)->required();
  auto* wop_table_cmd = wop->add_subcommand("table", "reconstructed operator-term table");
  wop_table_cmd->add_option("--d", a.d)->required();
  wop_table_cmd->add_option("--max-weight", a.max_weight)->required();
  wop_table_cmd->add_option("--out", a.out_path);

  auto* verify = app.add_subcommand("verify", "residual checks");
  verify->require_subcommand(1);
  auto* v_closed = verify->add_subcommand("closed-form", "closed form for simple Hurwitz numbers");
  v_closed->add_option("--nmax", a.nmax)->required();
  auto* v_gj = verify->add_subcommand("gj-pde", "cut-and-join equation");
  v_gj->add_option("--N", a.N)->required();
  auto* v_53 = verify->add_subcommand("thm53", "three-summation relation for the 3-cycle series");
  v_53->add_option("--N", a.N)->required();
  auto* v_55 = verify->add_subcommand("thm55", "W~([3]) form of the same relation");
  v_55->add_option("--N", a.N)->required();
  v_55->add_flag("--literal", a.literal, "also report the reading without the 1/3");
  auto* v_conj = verify->add_subcommand("conjecture", "H~W([d]) equation");
  v_conj->add_option("--d", a.d)->required();
  v_conj->add_option("--N", a.N)->required();
  auto* v_comp = verify->add_subcommand("components", "leading-case component identities");
  v_comp->add_option("--N", a.N)->required();

  try {
    app.parse(std::vector<std::string>(args.rbegin(), args.rend()));
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << '\n';
    return 2;
  }

  try {
    const Budget b = resolve_budget(a, config->count() > 0);
    if (*hw_count_cmd) return hw_count(a, b, out);
    if (*hw_min_cmd) return hw_min(a, b, out);
    if (*hw_table_cmd) return hw_table(a, b, out);
    if (*wop_apply_cmd) return wop_apply(a, b, out);
    if (*wop_coeff_cmd) return wop_coeff(a, b, out);
    if (*wop_table_cmd) return wop_table(a, b, out);
    if (*v_closed) return verify_closed_form(a, b, out);
    if (*v_gj) return verify_residual("gj-pde", a, b, out);
    if (*v_53) return verify_residual("thm53", a, b, out);
    if (*v_55) return verify_residual("thm55", a, b, out);
    if (*v_conj) return verify_conjecture(a, b, out);
    if (*v_comp) return verify_components(a, b, out);
  } catch (const BudgetError& e) {
    emit(out, {{"error", "budget"}, {"cap", e.cap()}, {"value", e.value()}, {"limit", e.limit()}});
    err << "budget exceeded: " << e.what() << '\n';
    return 2;
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return 2;
  } catch (const BudgetExceeded& e) {
    emit(out, {{"error", "budget"}, {"message", e.what()}});
    return 2;
  }
  err << "usage error: no command\n";
  return 2;
}

int main_with_group(const std::string& group, int argc, char** argv) {
  std::vector<std::string> args;
  if (!group.empty()) args.push_back(group);
  for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
  try {
    return run(args, std::cout, std::cerr);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 3;
  }
}

}  // namespace hurwitz::cli

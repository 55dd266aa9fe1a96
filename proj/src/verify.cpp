#include "hurwitz/verify.hpp"

#include <array>
#include <functional>
#include <mutex>
#include <stdexcept>

#include "hurwitz/wop.hpp"

namespace hurwitz {

namespace {

// All first derivatives dF/dp_i, i = 0..N (index 0 unused and zero).
std::vector<PSeries> first_derivatives(const PSeries& f) {
  std::vector<PSeries> out(static_cast<std::size_t>(f.truncation()) + 1, PSeries(f.truncation()));
  for (int i = 1; i <= f.truncation(); ++i) out[static_cast<std::size_t>(i)] = d_dp(i, f);
  return out;
}

PSeries restricted_to(const PSeries& f, const std::vector<Partition>& keep) {
  PSeries r(f.truncation());
  for (const auto& alpha : keep) r.add_term(alpha, f.coeff(alpha));
  return r;
}

}  // namespace

Residual make_residual(std::string id, int N, PSeries residual, bool experimental) {
  Residual r;
  r.id = std::move(id);
  r.N = N;
  r.max_abs = residual.max_abs();
  r.pass = residual.is_zero();
  r.residual = std::move(residual);
  r.experimental = experimental;
  return r;
}

const PSeries& minimal_series(int d, int N) {
  static std::mutex m;
  static std::map<std::pair<int, int>, PSeries> cache;
  std::lock_guard<std::mutex> lock(m);
  auto it = cache.find({d, N});
  if (it == cache.end()) it = cache.emplace(std::make_pair(d, N), build_F(d, N, minimal_count_table(d, N))).first;
  return it->second;
}

Rational closed_form_h(const Partition& alpha) {
  const int n = alpha.weight();
  const int l = alpha.length();
  Rational r = power(Rational(n), l - 3) * Rational(factorial(n + l - 2));
  for (int a : alpha.parts()) {
    r *= ratio(power(Rational(a), a).get_num(), factorial(a - 1));
  }
  return r;
}

ClosedFormReport check_closed_form(int nmax) {
  ClosedFormReport rep;
  rep.nmax = nmax;
  rep.pass = true;
  for (const auto& alpha : partitions_up_to(nmax)) {
    ClosedFormRow row;
    row.alpha = alpha;
    const auto m = minimal_k(alpha.weight(), 2, alpha);
    row.computed = m ? m->h : BigInt(0);
    row.formula = closed_form_h(alpha);
    row.integral = is_integral(row.formula);
    row.match = row.integral && row.formula == Rational(row.computed);
    rep.pass = rep.pass && row.match;
    rep.rows.push_back(std::move(row));
  }
  return rep;
}

Residual check_gj_pde(int N) {
  const auto& F = minimal_series(2, N);
  const auto Fd = first_derivatives(F);
  PSeries lhs(N);
  for (int i = 1; i <= N; ++i) {
    for (int j = 1; i + j <= N; ++j) {
      const auto& Fi = Fd[static_cast<std::size_t>(i)];
      const auto& Fj = Fd[static_cast<std::size_t>(j)];
      lhs += ratio(i * j, 2) * mul_by_p(i + j, Fi * Fj);
      lhs += ratio(i + j, 2) * mul_by_monomial(Partition{i, j}, Fd[static_cast<std::size_t>(i + j)]);
    }
  }
  auto rhs = euler_z(F) + euler_p(F) - Rational(2) * F;
  return make_residual("gj_pde", N, lhs - rhs);
}

Residual check_thm53(int N) {
  const auto& F = minimal_series(3, N);
  const auto Fd = first_derivatives(F);
  auto D = [&](int i) -> const PSeries& { return Fd[static_cast<std::size_t>(i)]; };
  PSeries lhs(N);
  for (int i = 1; i <= N; ++i) {
    for (int j = 1; i + j <= N; ++j) {
      for (int k = 1; i + j + k <= N; ++k) {
        const int s = i + j + k;
        PSeries t(N);
        t += Rational(s) * mul_by_monomial(Partition{i, j, k}, D(s));
        t += Rational(i * j * k) * mul_by_p(s, D(i) * D(j) * D(k));
        t += Rational(3 * (i + j) * k) * mul_by_monomial(Partition{i, j + k}, D(i + j) * D(k));
        lhs += Rational(1, 3) * t;
      }
    }
  }
  return make_residual("thm53", N, lhs - Rational(1, 2) * euler_shift(F));
}

Thm55Report check_thm55(int N) {
  const auto& F = minimal_series(3, N);
  const auto tilde = apply_tildeW(3, F);
  const auto rhs = Rational(1, 2) * euler_shift(F);

  PSeries literal_sub(N);
  for (int i = 1; i <= N; ++i) {
    for (int j = 1; i + j <= N; ++j) {
      for (int k = 1; i + j + k <= N; ++k) {
        const int s = i + j + k;
        literal_sub += Rational(s) * mul_by_p(s, d_dp(s, F));
      }
    }
  }
  return {make_residual("thm55", N, tilde - degree2_term_W3(F) - rhs),
          make_residual("thm55_literal", N, tilde - literal_sub - rhs, true)};
}

ConjectureReport check_conjecture(int d, int N) {
  ConjectureReport rep;
  const auto& F = minimal_series(d, N);
  for (const auto& [alpha, c] : F.terms()) {
    if (!mu(d, alpha).admissible) {
      throw std::runtime_error("series for d=" + std::to_string(d) + " has inadmissible monomial p_(" + alpha.str() + ")");
    }
  }
  const auto table = build_term_table(d, N);

  // u-exponent bookkeeping: every way a degree d+1 term combines monomials of F
  // must raise the summed exponent by exactly one.
  std::vector<std::vector<Partition>> containing(static_cast<std::size_t>(N) + 1);
  for (const auto& [alpha, c] : F.terms()) {
    for (int b = 1; b <= N; ++b) {
      if (alpha.multiplicity(b) > 0) containing[static_cast<std::size_t>(b)].push_back(alpha);
    }
  }
  for (const auto& t : table.terms) {
    if (t.degree() != d + 1 || t.B.weight() > N) continue;
    const auto& parts = t.B.parts();
    std::function<void(std::size_t, Partition, Rational, int)> rec = [&](std::size_t j, Partition out, Rational mu_in,
                                                                         int weight) {
      if (j == parts.size()) {
        ++rep.combinations;
        if (mu(d, out).value != mu_in + 1) ++rep.grading_violations;
        return;
      }
      const int b = parts[j];
      for (const auto& alpha : containing[static_cast<std::size_t>(b)]) {
        if (weight + alpha.weight() > N) continue;
        rec(j + 1, out.joined(alpha.without_part(b)), mu_in + mu(d, alpha).value, weight + alpha.weight());
      }
    };
    rec(0, t.A, Rational(0), 0);
  }

  auto residual = apply_tildeHW(table, F) - Rational(1, d - 1) * euler_shift(F);
  rep.residual = make_residual("conjecture_d" + std::to_string(d), N, std::move(residual), d >= 4);
  return rep;
}

ComponentReport check_components(int N, std::uint64_t enumeration_limit) {
  ComponentReport rep;
  rep.N = N;
  const auto& F = minimal_series(3, N);
  const auto counts = minimal_count_table(3, N);

  std::array<PSeries, 3> comp{PSeries(N), PSeries(N), PSeries(N)};
  rep.histograms_sum_to_h = true;
  for (const auto& alpha : partitions_up_to(N)) {
    const auto m = mu(3, alpha);
    if (!m.admissible) {
      rep.covered.push_back(alpha);
      continue;
    }
    const int n = alpha.weight();
    const int k = m.as_int();
    if (k == 0) {
      rep.covered.push_back(alpha);
      continue;
    }
    std::vector<Tuple> tuples;
    try {
      tuples = enumerate_factorizations(n, 3, k, alpha, enumeration_limit);
    } catch (const BudgetExceeded&) {
      rep.skipped.push_back(alpha);
      continue;
    }
    rep.covered.push_back(alpha);
    const auto hist = classify_leading_case(tuples, 3);
    rep.histograms[alpha] = hist;
    rep.case4 += hist[CaseTag::Case4];
    const auto h = counts.find({n, 3, k, alpha, true});
    if (!h || BigInt(static_cast<unsigned long>(hist.total())) != *h) rep.histograms_sum_to_h = false;

    const BigInt denom = factorial(n) * factorial(k - 1);
    for (int i = 1; i <= 3; ++i) {
      comp[static_cast<std::size_t>(i - 1)].add_term(alpha, ratio(class_size(alpha) * static_cast<unsigned long>(hist.type(i)), denom));
    }
  }

  const auto& w3 = w3_display();
  const Display one{3, Rational(1), {}};
  const Summation literal2{{0b001, 0b110}, {0b101, 0b010}, {0b001, 0b110}};
  const Summation alternative2{{0b001, 0b110}, {0b001, 0b110}, {0b001, 0b110}};

  auto check = [&](const char* id, const PSeries& lhs, const PSeries& rhs, bool experimental) {
    return make_residual(id, N, restricted_to(lhs - rhs, rep.covered), experimental);
  };
  rep.eq1 = check("components_eq1", comp[0], apply_summation(w3, w3.sums[0], F, DerivativeMode::FirstProducts), false);
  rep.eq2_literal = check("components_eq2_literal", comp[1],
                          apply_summation(one, literal2, F, DerivativeMode::FirstProducts), true);
  rep.eq2_alternative = check("components_eq2_alternative", comp[1],
                              apply_summation(one, alternative2, F, DerivativeMode::FirstProducts), true);
  rep.eq3 = check("components_eq3", comp[2], apply_summation(w3, w3.sums[4], F, DerivativeMode::FirstProducts), false);
  rep.sum = check("components_sum", comp[0] + comp[1] + comp[2], du_at_one(3, F), false);

  rep.pass = rep.eq1.pass && rep.eq3.pass && rep.sum.pass && rep.case4 == 0 && rep.histograms_sum_to_h;
  return rep;
}

}  // namespace hurwitz

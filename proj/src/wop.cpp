#include "hurwitz/wop.hpp"

#include <algorithm>
#include <functional>
#include <mutex>
#include <stdexcept>
#include <tuple>

#include "hurwitz/perm.hpp"

namespace hurwitz {

namespace {

int mask_sum(unsigned mask, const std::vector<int>& idx) {
  int s = 0;
  for (std::size_t b = 0; b < idx.size(); ++b) {
    if (mask >> b & 1u) s += idx[b];
  }
  return s;
}

// Calls visit(idx) for every ordered tuple of `arity` positive integers with sum <= limit.
void for_each_tuple(int arity, int limit, const std::function<void(const std::vector<int>&)>& visit) {
  std::vector<int> idx(static_cast<std::size_t>(arity), 1);
  if (arity > limit) return;
  for (;;) {
    visit(idx);
    // Odometer, restarting a digit at 1 whenever the sum bound is exceeded.
    int pos = arity - 1;
    for (;;) {
      ++idx[static_cast<std::size_t>(pos)];
      int s = 0;
      for (int v : idx) s += v;
      if (s <= limit) break;
      idx[static_cast<std::size_t>(pos)] = 1;
      if (--pos < 0) return;
    }
  }
}

Partition sums_of(const std::vector<unsigned>& masks, const std::vector<int>& idx) {
  std::vector<int> parts;
  for (unsigned m : masks) parts.push_back(mask_sum(m, idx));
  return Partition(std::move(parts));
}

Rational weight_of(const Display& display, const Summation& sum, const std::vector<int>& idx) {
  Rational w = display.prefactor;
  for (unsigned m : sum.weight) w *= mask_sum(m, idx);
  return w;
}

using Histogram = std::map<Partition, BigInt>;

// Types of w * s_B over d-cycles w of S_|B| that meet every cycle of s_B.
Histogram sweep(int d, const Partition& B) {
  Histogram out;
  const int m = B.weight();
  const auto sigma = canonical_representative(B);
  std::vector<int> cycle_of(static_cast<std::size_t>(m));
  int id = 0;
  for (const auto& c : sigma.cycles()) {
    for (int x : c) cycle_of[static_cast<std::size_t>(x - 1)] = id;
    ++id;
  }
  const unsigned all = (1u << B.length()) - 1u;
  for (const auto& w : all_d_cycles(m, d)) {
    unsigned hit = 0;
    for (int x = 0; x < m; ++x) {
      if (w.images0()[static_cast<std::size_t>(x)] != x) hit |= 1u << cycle_of[static_cast<std::size_t>(x)];
    }
    if (hit == all) ++out[cycle_type(w * sigma)];
  }
  return out;
}

std::mutex cache_mutex;
std::map<std::pair<int, Partition>, Histogram> sweep_cache;

Histogram cached_sweep(int d, const Partition& B) {
  const auto key = std::make_pair(d, B);
  {
    std::lock_guard<std::mutex> lock(cache_mutex);
    if (auto it = sweep_cache.find(key); it != sweep_cache.end()) return it->second;
  }
  auto h = sweep(d, B);
  std::lock_guard<std::mutex> lock(cache_mutex);
  return sweep_cache.try_emplace(key, std::move(h)).first->second;
}

std::vector<std::pair<Partition, Rational>> as_vector(const ClassVector& v) { return {v.begin(), v.end()}; }

}  // namespace

ClassVector class_product_vector(int d, int n, const ClassVector& v, ExecPolicy policy) {
  for (const auto& [alpha, c] : v) {
    if (alpha.weight() != n) throw std::invalid_argument("class_product_vector: (" + alpha.str() + ") is not a partition of " + std::to_string(n));
  }
  const auto cycles = all_d_cycles(n, d);
  const auto entries = as_vector(v);
  std::vector<ClassVector> partial(entries.size());
  const auto count = static_cast<std::int64_t>(entries.size());

#pragma omp parallel for schedule(dynamic, 1) if (policy == ExecPolicy::Parallel)
  for (std::int64_t i = 0; i < count; ++i) {
    const auto& [alpha, c] = entries[static_cast<std::size_t>(i)];
    const auto sigma = canonical_representative(alpha);
    std::map<Partition, long> hist;
    for (const auto& w : cycles) ++hist[cycle_type(w * sigma)];
    auto& out = partial[static_cast<std::size_t>(i)];
    for (const auto& [type, m] : hist) out[type] = c * m;
  }

  ClassVector result;
  for (const auto& p : partial) {
    for (const auto& [type, c] : p) {
      auto& slot = result[type];
      slot += c;
    }
  }
  std::erase_if(result, [](const auto& kv) { return kv.second == 0; });
  return result;
}

PSeries apply_W_groupalg(int d, const PSeries& f, ExecPolicy policy) {
  std::map<int, ClassVector> by_weight;
  for (const auto& [alpha, c] : f.terms()) {
    if (alpha.weight() >= d) by_weight[alpha.weight()][alpha] = c;
  }
  PSeries r(f.truncation());
  for (const auto& [n, v] : by_weight) {
    for (const auto& [type, c] : class_product_vector(d, n, v, policy)) r.add_term(type, c);
  }
  return r;
}

const Display& w2_display() {
  static const Display display{2, Rational(1, 2),
                               {
                                   {{0b01, 0b10}, {0b11}, {0b01, 0b10}},
                                   {{0b11}, {0b01, 0b10}, {0b11}},
                               }};
  return display;
}

const Display& w3_display() {
  static const Display display{3, Rational(1, 3),
                               {
                                   {{0b001, 0b010, 0b100}, {0b111}, {0b001, 0b010, 0b100}},
                                   {{0b001, 0b110}, {0b101, 0b010}, {0b001, 0b110}},
                                   {{0b010, 0b101}, {0b011, 0b100}, {0b010, 0b101}},
                                   {{0b100, 0b011}, {0b110, 0b001}, {0b100, 0b011}},
                                   {{0b111}, {0b001, 0b010, 0b100}, {0b111}},
                                   {{0b111}, {0b111}, {0b111}},
                               }};
  return display;
}

PSeries apply_summation(const Display& display, const Summation& sum, const PSeries& f, DerivativeMode mode) {
  const int limit = f.truncation();
  PSeries r(limit);
  if (f.is_zero()) return r;
  std::map<int, PSeries> first;
  auto derivative = [&](int i) -> const PSeries& {
    auto it = first.find(i);
    if (it == first.end()) it = first.emplace(i, d_dp(i, f)).first;
    return it->second;
  };

  for_each_tuple(display.arity, limit, [&](const std::vector<int>& idx) {
    PSeries g(limit);
    if (mode == DerivativeMode::Iterated) {
      g = f;
      for (unsigned m : sum.in) {
        g = d_dp(mask_sum(m, idx), g);
        if (g.is_zero()) return;
      }
      g = mul_by_monomial(sums_of(sum.out, idx), g);
    } else {
      g = PSeries::monomial(limit, sums_of(sum.out, idx));
      for (unsigned m : sum.in) {
        g = g * derivative(mask_sum(m, idx));
        if (g.is_zero()) return;
      }
    }
    g *= weight_of(display, sum, idx);
    r += g;
  });
  return r;
}

PSeries apply_display(const Display& display, const PSeries& f, DerivativeMode mode) {
  PSeries r(f.truncation());
  for (const auto& s : display.sums) r += apply_summation(display, s, f, mode);
  return r;
}

PSeries apply_W2_explicit(const PSeries& f) { return apply_display(w2_display(), f, DerivativeMode::Iterated); }
PSeries apply_W3_explicit(const PSeries& f) { return apply_display(w3_display(), f, DerivativeMode::Iterated); }

PSeries apply_tildeW(int d, const PSeries& f) {
  if (d == 2) return apply_display(w2_display(), f, DerivativeMode::FirstProducts);
  if (d == 3) return apply_display(w3_display(), f, DerivativeMode::FirstProducts);
  throw std::invalid_argument("apply_tildeW has explicit forms for d = 2, 3 only; use apply_tildeHW");
}

PSeries degree2_term_W3(const PSeries& f) {
  PSeries r(f.truncation());
  for (int s = 3; s <= f.truncation(); ++s) {
    r += ratio(s * binomial(s - 1, 2), 3) * mul_by_p(s, d_dp(s, f));
  }
  return r;
}

std::map<std::pair<Partition, Partition>, Rational> explicit_coefficients(const Display& display, int max_weight) {
  std::map<std::pair<Partition, Partition>, Rational> out;
  for_each_tuple(display.arity, max_weight, [&](const std::vector<int>& idx) {
    for (const auto& s : display.sums) out[{sums_of(s.in, idx), sums_of(s.out, idx)}] += weight_of(display, s, idx);
  });
  std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
  return out;
}

LocalCoefficient local_coefficient(int d, const Partition& B, const Partition& A) {
  LocalCoefficient lc{Rational(0), BigInt(0), automorphism_count(B)};
  if (A.weight() != B.weight() || B.empty()) return lc;
  const auto h = cached_sweep(d, B);
  if (auto it = h.find(A); it != h.end()) lc.count = it->second;
  lc.c = ratio(lc.count, lc.aut);
  return lc;
}

const OperatorTerm* OperatorTermTable::find(const Partition& B, const Partition& A) const {
  auto it = std::lower_bound(terms.begin(), terms.end(), std::make_pair(B, A),
                             [](const OperatorTerm& t, const std::pair<Partition, Partition>& key) {
                               return std::tie(t.B, t.A) < std::tie(key.first, key.second);
                             });
  if (it == terms.end() || it->B != B || it->A != A) return nullptr;
  return &*it;
}

OperatorTermTable build_term_table(int d, int max_weight, ExecPolicy policy) {
  if (d < 2) throw std::invalid_argument("build_term_table requires d >= 2");
  const auto shapes = partitions_up_to(max_weight);
  std::vector<Histogram> hists(shapes.size());
  const auto count = static_cast<std::int64_t>(shapes.size());

#pragma omp parallel for schedule(dynamic, 1) if (policy == ExecPolicy::Parallel)
  for (std::int64_t i = 0; i < count; ++i) {
    hists[static_cast<std::size_t>(i)] = cached_sweep(d, shapes[static_cast<std::size_t>(i)]);
  }

  OperatorTermTable table{d, max_weight, {}};
  for (std::size_t i = 0; i < shapes.size(); ++i) {
    const auto aut = automorphism_count(shapes[i]);
    for (const auto& [A, n] : hists[i]) {
      table.terms.push_back({shapes[i], A, ratio(n, aut), n, aut});
    }
  }
  return table;
}

PSeries apply_reconstructed_linear(const OperatorTermTable& table, const PSeries& f) {
  std::map<Partition, std::vector<const OperatorTerm*>> by_B;
  for (const auto& t : table.terms) by_B[t.B].push_back(&t);

  PSeries r(f.truncation());
  for (const auto& [mu_part, a] : f.terms()) {
    if (mu_part.weight() > table.max_weight) {
      throw std::out_of_range("term table covers weight " + std::to_string(table.max_weight) + " but p_(" +
                              mu_part.str() + ") needs " + std::to_string(mu_part.weight()));
    }
    std::map<int, int> mult;
    for (int p : mu_part.parts()) ++mult[p];
    const std::vector<std::pair<int, int>> distinct(mult.begin(), mult.end());

    // Walk every sub-multiset of mu, tracking the binomial selection count.
    std::vector<int> chosen;
    std::function<void(std::size_t, BigInt)> rec = [&](std::size_t pos, BigInt ways) {
      if (pos == distinct.size()) {
        if (chosen.empty()) return;
        const Partition B(chosen);
        auto it = by_B.find(B);
        if (it == by_B.end()) return;
        const auto rest = mu_part.minus(B);
        for (const auto* t : it->second) r.add_term(rest.joined(t->A), a * Rational(t->count * ways));
        return;
      }
      const auto [part, m] = distinct[pos];
      for (int take = 0; take <= m; ++take) {
        rec(pos + 1, ways * binomial(m, take));
        chosen.push_back(part);
      }
      chosen.resize(chosen.size() - static_cast<std::size_t>(m + 1));
    };
    rec(0, BigInt(1));
  }
  return r;
}

PSeries apply_tildeHW(const OperatorTermTable& table, const PSeries& f) {
  const int limit = f.truncation();
  if (table.max_weight < limit) {
    throw std::out_of_range("term table covers weight " + std::to_string(table.max_weight) +
                            " but the series is truncated at " + std::to_string(limit));
  }
  std::vector<PSeries> first(static_cast<std::size_t>(limit) + 1, PSeries(limit));
  for (int i = 1; i <= limit; ++i) first[static_cast<std::size_t>(i)] = d_dp(i, f);

  PSeries r(limit);
  for (const auto& t : table.terms) {
    if (t.degree() != table.d + 1 || t.B.weight() > limit) continue;
    auto g = PSeries::monomial(limit, t.A, t.c);
    for (int b : t.B.parts()) {
      g = g * first[static_cast<std::size_t>(b)];
      if (g.is_zero()) break;
    }
    r += g;
  }
  return r;
}

}  // namespace hurwitz

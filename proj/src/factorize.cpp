#include "hurwitz/factorize.hpp"

#include <algorithm>
#include <numeric>

namespace hurwitz {

SupportPartition SupportPartition::singletons(int n) {
  SupportPartition p;
  p.labels_.resize(static_cast<std::size_t>(n));
  std::iota(p.labels_.begin(), p.labels_.end(), 0);
  return p;
}

SupportPartition SupportPartition::from_labels(const std::vector<int>& labels) {
  SupportPartition p;
  std::map<int, int> remap;
  for (int l : labels) {
    auto [it, fresh] = remap.try_emplace(l, static_cast<int>(remap.size()));
    p.labels_.push_back(it->second);
  }
  return p;
}

int SupportPartition::block_count() const noexcept {
  return labels_.empty() ? 0 : *std::max_element(labels_.begin(), labels_.end()) + 1;
}

std::vector<std::vector<int>> SupportPartition::blocks() const {
  std::vector<std::vector<int>> out(static_cast<std::size_t>(block_count()));
  for (std::size_t x = 0; x < labels_.size(); ++x) out[static_cast<std::size_t>(labels_[x])].push_back(static_cast<int>(x) + 1);
  return out;
}

SupportPartition SupportPartition::merged_with(const std::vector<int>& points) const {
  if (points.empty()) return *this;
  std::vector<bool> hit(labels_.size(), false);
  int low = size();
  for (int x : points) {
    if (x < 1 || x > size()) throw std::invalid_argument("merged_with: point out of range");
    const int l = labels_[static_cast<std::size_t>(x - 1)];
    hit[static_cast<std::size_t>(l)] = true;
    low = std::min(low, l);
  }
  auto labels = labels_;
  for (int& l : labels) {
    if (hit[static_cast<std::size_t>(l)]) l = low;
  }
  return from_labels(labels);
}

std::string SupportPartition::str() const {
  std::string s;
  for (const auto& b : blocks()) {
    s += '{';
    for (std::size_t i = 0; i < b.size(); ++i) {
      if (i) s += ',';
      s += std::to_string(b[i]);
    }
    s += '}';
  }
  return s;
}

SupportPartition orbit_partition(int n, const std::vector<Permutation>& generators) {
  auto p = SupportPartition::singletons(n);
  for (const auto& g : generators) {
    if (g.degree() != n) throw std::invalid_argument("orbit_partition: generator of wrong degree");
    for (const auto& c : g.cycles()) {
      if (c.size() > 1) p = p.merged_with(c);
    }
  }
  return p;
}

bool generates_transitive(int n, const std::vector<Permutation>& generators) {
  return orbit_partition(n, generators).is_single_block();
}

void CountTable::set(const CountKey& key, const BigInt& value) { entries_[key] = value; }

std::optional<BigInt> CountTable::find(const CountKey& key) const {
  auto it = entries_.find(key);
  if (it == entries_.end()) return std::nullopt;
  return it->second;
}

BigInt count_factorizations_for(const Permutation& sigma, int d, int k, bool transitive, ExecPolicy policy) {
  const auto r = run_dp({sigma.inverse(), d, k, transitive}, policy);
  return transitive ? r.transitive() : r.total();
}

BigInt count_factorizations(int n, int d, int k, const Partition& alpha, bool transitive, ExecPolicy policy) {
  if (alpha.weight() != n) {
    throw std::invalid_argument("(" + alpha.str() + ") is not a partition of " + std::to_string(n));
  }
  return count_factorizations_for(canonical_representative(alpha), d, k, transitive, policy);
}

std::optional<MinimalCount> minimal_k(int n, int d, const Partition& alpha, ExecPolicy policy) {
  if (alpha.weight() != n) {
    throw std::invalid_argument("(" + alpha.str() + ") is not a partition of " + std::to_string(n));
  }
  const int excess = n - alpha.length();
  for (int k = 0; k <= n + alpha.length() - 2; ++k) {
    // Each d-cycle has sign (-1)^(d-1), so k(d-1) and n - l share parity.
    if ((k * (d - 1) - excess) % 2 != 0) continue;
    auto h = count_factorizations(n, d, k, alpha, true, policy);
    if (h > 0) return MinimalCount{k, h};
  }
  return std::nullopt;
}

std::vector<Tuple> enumerate_factorizations(int n, int d, int k, const Partition& alpha, std::uint64_t limit) {
  if (alpha.weight() != n) {
    throw std::invalid_argument("(" + alpha.str() + ") is not a partition of " + std::to_string(n));
  }
  const auto cycles = all_d_cycles(n, d);
  BigInt space;
  mpz_ui_pow_ui(space.get_mpz_t(), static_cast<unsigned long>(cycles.size()), static_cast<unsigned long>(k));
  if (space > BigInt(static_cast<unsigned long>(limit))) {
    throw BudgetExceeded("enumeration of " + space.get_str() + " tuples exceeds the limit of " +
                         std::to_string(limit) + "; use count_factorizations instead");
  }
  const auto target = canonical_representative(alpha).inverse();
  std::vector<Tuple> out;
  if (k == 0) {
    if (target.is_identity() && n == 1) out.emplace_back();
    return out;
  }
  if (cycles.empty()) return out;

  std::vector<std::size_t> idx(static_cast<std::size_t>(k), 0);
  for (;;) {
    Tuple t;
    t.reserve(idx.size());
    Permutation prod(n);
    for (auto i : idx) {
      t.push_back(cycles[i]);
      prod = prod * cycles[i];
    }
    if (prod == target && generates_transitive(n, t)) out.push_back(std::move(t));

    std::size_t pos = idx.size();
    while (pos > 0 && ++idx[pos - 1] == cycles.size()) idx[--pos] = 0;
    if (pos == 0) break;
  }
  return out;
}

std::uint64_t CaseHistogram::type(int i) const {
  switch (i) {
    case 1: return (*this)[CaseTag::Case3];
    case 2: return (*this)[CaseTag::Case2];
    case 3: return (*this)[CaseTag::Case1];
    default: throw std::invalid_argument("leading-factor type must be 1, 2 or 3");
  }
}

std::uint64_t CaseHistogram::total() const { return std::accumulate(by_case.begin(), by_case.end(), std::uint64_t{0}); }

CaseHistogram classify_leading_case(const std::vector<Tuple>& tuples, int d) {
  if (d != 3) throw std::invalid_argument("classify_leading_case is defined for d = 3");
  CaseHistogram hist;
  for (const auto& t : tuples) {
    if (t.empty()) throw std::invalid_argument("classify_leading_case: empty tuple");
    const int n = t.front().degree();
    Permutation sigma(n);
    for (const auto& delta : t) {
      if (!is_d_cycle(delta, 3)) throw std::invalid_argument("classify_leading_case: " + delta.str() + " is not a 3-cycle");
      sigma = sigma * delta;
    }
    const auto m = mu(3, cycle_type(sigma));
    if (!m.admissible || m.as_int() != static_cast<int>(t.size()) || !generates_transitive(n, t)) {
      throw std::invalid_argument("classify_leading_case: tuple is not a minimal transitive factorization");
    }
    const auto tag = classify_3cycle_case(t.front().inverse(), sigma);
    ++hist.by_case[static_cast<std::size_t>(tag) - 1];
  }
  return hist;
}

CountTable minimal_count_table(int d, int nmax, ExecPolicy policy) {
  CountTable table;
  for (const auto& alpha : partitions_up_to(nmax)) {
    const auto m = mu(d, alpha);
    if (!m.admissible) continue;
    const int n = alpha.weight();
    table.set({n, d, m.as_int(), alpha, true}, count_factorizations(n, d, m.as_int(), alpha, true, policy));
  }
  return table;
}

}  // namespace hurwitz

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <unordered_map>
#include <vector>

#include "hurwitz/factorize.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace hurwitz {

namespace {

// Both halves of a state are n nibbles: the image table of the running
// product, and the restricted-growth block labels.
constexpr int kMaxDegree = 16;

__extension__ using u128 = unsigned __int128;

inline int nib(std::uint64_t w, int i) { return static_cast<int>((w >> (4 * i)) & 0xF); }
inline void set_nib(std::uint64_t& w, int i, int v) {
  w = (w & ~(std::uint64_t{0xF} << (4 * i))) | (static_cast<std::uint64_t>(v) << (4 * i));
}

struct Key {
  std::uint64_t perm;
  std::uint64_t part;
  bool operator==(const Key&) const = default;
  bool operator<(const Key& o) const { return perm != o.perm ? perm < o.perm : part < o.part; }
};

struct KeyHash {
  std::size_t operator()(const Key& k) const noexcept {
    std::uint64_t x = k.perm * 0x9E3779B97F4A7C15ull ^ (k.part + 0x632BE59BD9B4E019ull + (k.perm << 6));
    x ^= x >> 31;
    x *= 0xBF58476D1CE4E5B9ull;
    x ^= x >> 29;
    return static_cast<std::size_t>(x);
  }
};

struct Cycle {
  std::array<int, kMaxDegree> pts{};  // support, 0-based
  std::array<int, kMaxDegree> img{};  // delta(pts[j])
};

struct Context {
  int n = 0;
  int d = 0;
  bool transitive = false;
  std::array<int, kMaxDegree> target{};
  std::vector<Cycle> cycles;

  // Whether a state with `remaining` steps left can still finish.
  bool viable(std::uint64_t perm, int blocks, int remaining) const {
    std::array<int, kMaxDegree> inv{};
    for (int x = 0; x < n; ++x) inv[static_cast<std::size_t>(nib(perm, x))] = x;
    unsigned seen = 0;
    int c = 0;
    for (int s = 0; s < n; ++s) {
      if (seen >> s & 1u) continue;
      ++c;
      for (int x = s; !(seen >> x & 1u); x = inv[static_cast<std::size_t>(target[static_cast<std::size_t>(x)])]) {
        seen |= 1u << x;
      }
    }
    const int budget = remaining * (d - 1);
    const int tdist = n - c;
    if (tdist > budget || (budget - tdist) % 2 != 0) return false;
    if (!transitive) return true;
    return blocks - 1 <= budget && c + 2 * blocks - n - 2 <= budget;
  }

  bool advance(const Key& in, const Cycle& cy, int remaining, Key& out) const {
    std::uint64_t perm = in.perm;
    for (int j = 0; j < d; ++j) set_nib(perm, cy.pts[static_cast<std::size_t>(j)], nib(in.perm, cy.img[static_cast<std::size_t>(j)]));

    std::array<int, kMaxDegree> lab{};
    for (int x = 0; x < n; ++x) lab[static_cast<std::size_t>(x)] = nib(in.part, x);
    unsigned hit = 0;
    int low = kMaxDegree;
    for (int j = 0; j < d; ++j) {
      const int l = lab[static_cast<std::size_t>(cy.pts[static_cast<std::size_t>(j)])];
      hit |= 1u << l;
      low = std::min(low, l);
    }
    std::array<int, kMaxDegree> remap;
    remap.fill(-1);
    std::uint64_t part = 0;
    int next = 0;
    for (int x = 0; x < n; ++x) {
      int l = lab[static_cast<std::size_t>(x)];
      if (hit >> l & 1u) l = low;
      auto& r = remap[static_cast<std::size_t>(l)];
      if (r < 0) r = next++;
      set_nib(part, x, r);
    }
    if (!viable(perm, next, remaining)) return false;
    out = {perm, part};
    return true;
  }
};

template <typename Count>
using States = std::vector<std::pair<Key, Count>>;

template <typename Count>
using StateMap = std::unordered_map<Key, Count, KeyHash>;

template <typename Count>
States<Count> step_serial(const Context& cx, const States<Count>& states, int remaining) {
  StateMap<Count> next;
  next.reserve(states.size() * 2);
  Key out{};
  for (const auto& [key, count] : states) {
    for (const auto& cy : cx.cycles) {
      if (cx.advance(key, cy, remaining, out)) next[out] += count;
    }
  }
  return States<Count>(next.begin(), next.end());
}

template <typename Count>
States<Count> step_parallel(const Context& cx, const States<Count>& states, int remaining) {
  const int threads = max_threads();
  const std::size_t shards = static_cast<std::size_t>(threads) * 8;
  // local[t][s]: states produced by thread t whose hash falls in shard s.
  std::vector<std::vector<StateMap<Count>>> local(static_cast<std::size_t>(threads),
                                                  std::vector<StateMap<Count>>(shards));
  const auto total = static_cast<std::int64_t>(states.size());

#pragma omp parallel num_threads(threads)
  {
#ifdef _OPENMP
    auto& mine = local[static_cast<std::size_t>(omp_get_thread_num())];
#else
    auto& mine = local[0];
#endif
    KeyHash hash;
    Key out{};
#pragma omp for schedule(dynamic, 64)
    for (std::int64_t i = 0; i < total; ++i) {
      const auto& [key, count] = states[static_cast<std::size_t>(i)];
      for (const auto& cy : cx.cycles) {
        if (cx.advance(key, cy, remaining, out)) mine[hash(out) % shards][out] += count;
      }
    }
  }

  std::vector<States<Count>> merged(shards);
#pragma omp parallel for schedule(dynamic, 1) num_threads(threads)
  for (std::int64_t s = 0; s < static_cast<std::int64_t>(shards); ++s) {
    const auto su = static_cast<std::size_t>(s);
    StateMap<Count> acc = std::move(local[0][su]);
    for (std::size_t t = 1; t < local.size(); ++t) {
      for (auto& [key, count] : local[t][su]) acc[key] += count;
      StateMap<Count>().swap(local[t][su]);
    }
    merged[su].assign(acc.begin(), acc.end());
  }

  States<Count> next;
  std::size_t size = 0;
  for (const auto& m : merged) size += m.size();
  next.reserve(size);
  for (auto& m : merged) next.insert(next.end(), m.begin(), m.end());
  return next;
}

BigInt to_big(const BigInt& v) { return v; }

BigInt to_big(u128 v) {
  BigInt hi(static_cast<unsigned long>(static_cast<std::uint64_t>(v >> 64)));
  BigInt lo(static_cast<unsigned long>(static_cast<std::uint64_t>(v)));
  return (hi << 64) + lo;
}

template <typename Count>
DpResult run(const Context& cx, int k, ExecPolicy policy) {
  DpResult result;
  std::uint64_t id = 0;
  std::uint64_t singles = 0;
  for (int x = 0; x < cx.n; ++x) {
    set_nib(id, x, x);
    set_nib(singles, x, x);
  }
  States<Count> states;
  if (cx.viable(id, cx.n, k)) states.push_back({Key{id, singles}, Count(1)});
  result.peak_states = states.size();

  for (int step = 1; step <= k && !states.empty(); ++step) {
    states = policy == ExecPolicy::Serial ? step_serial(cx, states, k - step) : step_parallel(cx, states, k - step);
    result.peak_states = std::max(result.peak_states, states.size());
  }

  std::map<SupportPartition, BigInt> ends;
  for (const auto& [key, count] : states) {
    std::vector<int> labels(static_cast<std::size_t>(cx.n));
    for (int x = 0; x < cx.n; ++x) labels[static_cast<std::size_t>(x)] = nib(key.part, x);
    ends[SupportPartition::from_labels(labels)] += to_big(count);
  }
  result.end_partitions.assign(ends.begin(), ends.end());
  return result;
}

}  // namespace

DpResult run_dp(const DpProblem& problem, ExecPolicy policy) {
  const int n = problem.target.degree();
  if (n < 1 || n > kMaxDegree) throw std::invalid_argument("run_dp supports degrees 1.." + std::to_string(kMaxDegree));
  if (problem.d < 2) throw std::invalid_argument("run_dp requires d >= 2");
  if (problem.k < 0) throw std::invalid_argument("run_dp requires k >= 0");

  Context cx;
  cx.n = n;
  cx.d = problem.d;
  cx.transitive = problem.transitive;
  for (int x = 0; x < n; ++x) cx.target[static_cast<std::size_t>(x)] = problem.target.images0()[static_cast<std::size_t>(x)];
  for (const auto& delta : all_d_cycles(n, problem.d)) {
    Cycle cy;
    int j = 0;
    for (int x = 0; x < n; ++x) {
      const int y = delta.images0()[static_cast<std::size_t>(x)];
      if (y == x) continue;
      cy.pts[static_cast<std::size_t>(j)] = x;
      cy.img[static_cast<std::size_t>(j)] = y;
      ++j;
    }
    cx.cycles.push_back(cy);
  }

  // Machine integers suffice while the number of k-tuples stays below 2^126.
  const double log_tuples = cx.cycles.empty() ? 0.0 : problem.k * std::log2(static_cast<double>(cx.cycles.size()));
  if (log_tuples < 126.0) return run<u128>(cx, problem.k, policy);
  return run<BigInt>(cx, problem.k, policy);
}

BigInt DpResult::total() const {
  BigInt t = 0;
  for (const auto& [p, c] : end_partitions) t += c;
  return t;
}

BigInt DpResult::transitive() const {
  BigInt t = 0;
  for (const auto& [p, c] : end_partitions) {
    if (p.is_single_block()) t += c;
  }
  return t;
}

}  // namespace hurwitz

#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "hurwitz/kernels.hpp"
#include "hurwitz/partition.hpp"
#include "hurwitz/perm.hpp"
#include "hurwitz/rational.hpp"

namespace hurwitz {

/// Set partition of {1, ..., n} stored as restricted-growth labels: point 1
/// has label 0 and every new block takes the next unused label, so blocks
/// are numbered by their smallest element.
class SupportPartition {
 public:
  SupportPartition() = default;
  /// Every point in its own block.
  static SupportPartition singletons(int n);
  /// labels[x - 1] names the block of x; any labelling is accepted and canonicalized.
  static SupportPartition from_labels(const std::vector<int>& labels);

  int size() const noexcept { return static_cast<int>(labels_.size()); }
  const std::vector<int>& labels() const noexcept { return labels_; }
  int block_count() const noexcept;
  bool is_single_block() const noexcept { return block_count() <= 1; }
  /// Blocks as sorted 1-based point lists, ordered by minimum element.
  std::vector<std::vector<int>> blocks() const;

  /// Joins every block that meets `points` (1-based) into one.
  SupportPartition merged_with(const std::vector<int>& points) const;

  std::string str() const;

  friend bool operator==(const SupportPartition&, const SupportPartition&) = default;
  friend auto operator<=>(const SupportPartition&, const SupportPartition&) = default;

 private:
  std::vector<int> labels_;
};

/// Orbits of the group generated by `generators` acting on {1, ..., n}.
SupportPartition orbit_partition(int n, const std::vector<Permutation>& generators);
bool generates_transitive(int n, const std::vector<Permutation>& generators);

struct CountKey {
  int n = 0;
  int d = 0;
  int k = 0;
  Partition alpha;
  bool transitive = true;

  friend bool operator==(const CountKey&, const CountKey&) = default;
  friend auto operator<=>(const CountKey&, const CountKey&) = default;
};

class CountTable {
 public:
  void set(const CountKey& key, const BigInt& value);
  std::optional<BigInt> find(const CountKey& key) const;
  const std::map<CountKey, BigInt>& entries() const noexcept { return entries_; }
  std::size_t size() const noexcept { return entries_.size(); }

 private:
  std::map<CountKey, BigInt> entries_;
};

/// Dynamic program over (product so far, orbit partition so far).
struct DpProblem {
  /// The product d_1 ... d_k must equal this permutation.
  Permutation target;
  int d = 2;
  int k = 0;
  /// Prune states that can no longer reach a single orbit.
  bool transitive = false;
};

struct DpResult {
  /// Number of tuples ending in each orbit partition, sorted by partition.
  std::vector<std::pair<SupportPartition, BigInt>> end_partitions;
  /// Largest number of live states after any step.
  std::size_t peak_states = 0;

  BigInt total() const;
  /// Count of tuples whose orbit partition is a single block.
  BigInt transitive() const;
};

/// Supports degrees up to 16.
DpResult run_dp(const DpProblem& problem, ExecPolicy policy = ExecPolicy::Parallel);

/// Ordered k-tuples of d-cycles with d_1 ... d_k = s0^{-1}, s0 the canonical
/// representative of alpha; restricted to transitive tuples when asked.
/// Returns 0 when no such tuple exists (including d > n with k > 0).
BigInt count_factorizations(int n, int d, int k, const Partition& alpha, bool transitive,
                            ExecPolicy policy = ExecPolicy::Parallel);
/// Same count for an arbitrary permutation sigma in place of s0.
BigInt count_factorizations_for(const Permutation& sigma, int d, int k, bool transitive,
                                ExecPolicy policy = ExecPolicy::Parallel);

struct MinimalCount {
  int k = 0;
  BigInt h;
};

/// Smallest k <= n + l - 2 with a positive transitive count, or nullopt.
std::optional<MinimalCount> minimal_k(int n, int d, const Partition& alpha,
                                      ExecPolicy policy = ExecPolicy::Parallel);

class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

using Tuple = std::vector<Permutation>;

/// Every transitive tuple counted by count_factorizations, in lexicographic
/// order of the d-cycle list. Throws BudgetExceeded when the search space
/// (number of d-cycles)^k exceeds `limit`.
std::vector<Tuple> enumerate_factorizations(int n, int d, int k, const Partition& alpha, std::uint64_t limit);

struct CaseHistogram {
  std::array<std::uint64_t, 4> by_case{};  // indexed by CaseTag - 1

  std::uint64_t operator[](CaseTag tag) const { return by_case[static_cast<std::size_t>(tag) - 1]; }
  /// |A_i| for the leading-factor types 1..3.
  std::uint64_t type(int i) const;
  std::uint64_t total() const;
};

/// Leading-case statistics of minimal 3-cycle factorizations.
///
/// For a tuple with sigma = d_1 ... d_k and sigma' = d_2 ... d_k, the pair
/// (sigma, d_1) is classified by where the three points of d_1 sit in the
/// cycles of sigma', i.e. classify_3cycle_case(d_1^{-1}, sigma). Type 1
/// (all three points in one cycle of sigma') is Case3, type 2 is Case2 and
/// type 3 (three distinct cycles) is Case1. Throws std::invalid_argument for
/// tuples that are not minimal 3-cycle factorizations.
CaseHistogram classify_leading_case(const std::vector<Tuple>& tuples, int d = 3);

/// Transitive counts at k = mu^d(alpha) for every admissible alpha of weight <= nmax.
CountTable minimal_count_table(int d, int nmax, ExecPolicy policy = ExecPolicy::Parallel);

}  // namespace hurwitz

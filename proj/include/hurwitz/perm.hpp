#pragma once

#include <array>
#include <string>
#include <string_view>
#include <vector>

#include "hurwitz/partition.hpp"

namespace hurwitz {

/// Element of S_n acting on the ground set {1, ..., n}.
///
/// Composition convention: (p * q)(x) = p(q(x)), i.e. the right factor acts
/// first. A factorization d_1 d_2 ... d_k = s therefore applies d_k first.
class Permutation {
 public:
  /// Identity of S_n.
  explicit Permutation(int n = 0);

  /// images[x - 1] = sigma(x); throws std::invalid_argument unless a bijection.
  static Permutation from_images(std::vector<int> images);
  /// Product of the given disjoint cycles (1-based points); omitted points are fixed.
  static Permutation from_cycles(int n, const std::vector<std::vector<int>>& cycles);
  /// Parses "(1 2 4)(3 5 6)". Fixed points may be omitted; with n == 0 the
  /// degree is the largest point mentioned.
  static Permutation parse(std::string_view text, int n = 0);

  int degree() const noexcept { return static_cast<int>(images_.size()); }
  /// sigma(x) for 1-based x.
  int operator()(int x) const { return images_[static_cast<std::size_t>(x - 1)] + 1; }
  /// 0-based image table.
  const std::vector<int>& images0() const noexcept { return images_; }

  Permutation inverse() const;
  bool is_identity() const noexcept;

  /// Cycles including fixed points, each starting at its smallest element,
  /// sorted by that element.
  std::vector<std::vector<int>> cycles() const;
  int cycle_count() const;
  /// Parity of n - (number of cycles); true for even permutations.
  bool is_even() const;

  /// Canonical text form with fixed points, e.g. "(1)(2 4 3 5 6)".
  std::string str() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  std::vector<int> images_;  // 0-based
};

/// r(x) = p(q(x)); throws std::invalid_argument on degree mismatch.
Permutation compose(const Permutation& p, const Permutation& q);
inline Permutation operator*(const Permutation& p, const Permutation& q) { return compose(p, q); }

/// Multiset of cycle lengths (fixed points included), descending.
Partition cycle_type(const Permutation& p);

/// (1 ... a_1)(a_1+1 ... a_1+a_2)... for alpha |- n.
Permutation canonical_representative(const Partition& alpha);

/// Every d-cycle of S_n exactly once; empty when d > n.
std::vector<Permutation> all_d_cycles(int n, int d);
bool is_d_cycle(const Permutation& p, int d);

/// Position of sigma relative to a 3-cycle omega = (j3 j2 j1):
///   Case1  j1, j2, j3 lie in three distinct cycles of sigma
///   Case2  exactly two of them share a cycle
///   Case3  one cycle, visited in the order j1 -> j2 -> j3
///   Case4  one cycle, visited in the order j1 -> j3 -> j2
/// The labels only depend on the cyclic order of omega, so the three ways of
/// writing omega agree.
enum class CaseTag { Case1 = 1, Case2 = 2, Case3 = 3, Case4 = 4 };

std::string to_string(CaseTag tag);

CaseTag classify_3cycle_case(const Permutation& omega, const Permutation& sigma);

/// Change in the number of cycles from sigma to omega * sigma.
int cycle_count_delta(CaseTag tag) noexcept;

/// Smallest l >= 1 with sigma^l(j) in J.
int dist(int j, const Permutation& sigma, const std::array<int, 3>& J);

/// Explicit 3-cycles d_1, ..., d_m (in product order) whose product is the
/// full cycle (n n-1 ... 1) for odd n, or (n n-1)(n-2 ... 1) for even n.
std::vector<Permutation> minimal_3cycle_chain(int n);

}  // namespace hurwitz

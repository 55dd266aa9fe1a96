#pragma once

#include <compare>
#include <initializer_list>
#include <string>
#include <vector>

#include "hurwitz/rational.hpp"

namespace hurwitz {

/// Integer partition stored with weakly decreasing parts.
///
/// A partition doubles as a cycle type and as the index of the power-sum
/// monomial p_alpha = p_{alpha_1} ... p_{alpha_l}. The empty partition indexes
/// the constant monomial.
///
/// Ordering is by weight first, then lexicographic on the descending parts,
/// so (1,1,1) < (2,1) < (3).
class Partition {
 public:
  Partition() = default;
  explicit Partition(std::vector<int> parts);
  Partition(std::initializer_list<int> parts);

  static Partition ones(int n);

  const std::vector<int>& parts() const noexcept { return parts_; }
  int weight() const noexcept { return weight_; }
  int length() const noexcept { return static_cast<int>(parts_.size()); }
  bool empty() const noexcept { return parts_.empty(); }
  int multiplicity(int part) const noexcept;

  Partition with_part(int part) const;
  /// Removes one copy of `part`; throws std::invalid_argument if absent.
  Partition without_part(int part) const;
  Partition joined(const Partition& other) const;
  /// Multiset difference; throws std::invalid_argument unless `sub` is contained.
  Partition minus(const Partition& sub) const;
  bool contains(const Partition& sub) const noexcept;

  /// Comma separated, e.g. "3,1,1"; the empty partition prints as "".
  std::string str() const;

  friend bool operator==(const Partition&, const Partition&) = default;
  friend std::strong_ordering operator<=>(const Partition& a, const Partition& b);

 private:
  std::vector<int> parts_;
  int weight_ = 0;
};

/// All partitions of n in ascending order.
std::vector<Partition> partitions_of(int n);
/// All partitions of 1..nmax, ascending by (weight, parts).
std::vector<Partition> partitions_up_to(int nmax);

/// Number of permutations of S_n with cycle type alpha: n! / prod_r r^{m_r} m_r!.
BigInt class_size(const Partition& alpha);
/// prod_r m_r! over part multiplicities.
BigInt automorphism_count(const Partition& alpha);

struct MuValue {
  Rational value;
  /// True iff value is a nonnegative integer.
  bool admissible = false;
  int as_int() const;
};

/// Extended minimal factor count (n + l - 2) / (d - 1).
///
/// The value is returned even when it is fractional; inadmissible partitions
/// carry no factorization into d-cycles of genus zero.
MuValue mu(int d, const Partition& alpha);

}  // namespace hurwitz

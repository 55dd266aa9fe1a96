#pragma once

#include <map>

#include "hurwitz/partition.hpp"
#include "hurwitz/rational.hpp"

namespace hurwitz {

class CountTable;

/// Truncated series in z and the power sums p_1, p_2, ...
///
/// Every monomial that occurs is z^n p_alpha with |alpha| = n, so a term is
/// keyed by alpha alone and its z-degree is alpha.weight(). Terms of z-degree
/// above the truncation are never stored, and neither are zero coefficients.
/// The empty partition is the constant term.
///
/// Derivatives follow the same grading: d/dp_i lowers the z-degree by i, and
/// multiplication by p_i raises it by i. All operators built from matching
/// pairs of these (as every operator here is) agree with the ordinary calculus
/// in z and p.
class PSeries {
 public:
  using Terms = std::map<Partition, Rational>;

  explicit PSeries(int truncation = 0);

  static PSeries monomial(int truncation, const Partition& alpha, const Rational& coeff = 1);

  int truncation() const noexcept { return truncation_; }
  const Terms& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t size() const noexcept { return terms_.size(); }

  Rational coeff(const Partition& alpha) const;
  /// Adds `value` to the coefficient of alpha; ignored past the truncation.
  void add_term(const Partition& alpha, const Rational& value);

  /// Largest absolute coefficient, 0 for the zero series.
  Rational max_abs() const;
  /// Largest z-degree present, -1 for the zero series.
  int max_weight() const noexcept;

  PSeries& operator+=(const PSeries& other);
  PSeries& operator-=(const PSeries& other);
  PSeries& operator*=(const Rational& c);

  friend bool operator==(const PSeries&, const PSeries&) = default;

 private:
  int truncation_ = 0;
  Terms terms_;
};

PSeries operator+(PSeries a, const PSeries& b);
PSeries operator-(PSeries a, const PSeries& b);
PSeries operator*(const Rational& c, PSeries a);
/// Truncated product; throws std::invalid_argument on truncation mismatch.
PSeries operator*(const PSeries& a, const PSeries& b);

PSeries add(const PSeries& a, const PSeries& b);
PSeries scale(const Rational& c, const PSeries& a);
PSeries mul(const PSeries& a, const PSeries& b);

/// The single monomial p_alpha at z-degree |alpha| (truncation |alpha| unless given).
PSeries phi(const Partition& alpha, int truncation = -1);

/// d/dp_i.
PSeries d_dp(int i, const PSeries& f);
/// z d/dz: each term times its z-degree.
PSeries euler_z(const PSeries& f);
/// sum_i p_i d/dp_i: each term times the number of parts.
PSeries euler_p(const PSeries& f);
/// p_i * f, dropping overflow past the truncation.
PSeries mul_by_p(int i, const PSeries& f);
/// p_alpha * f.
PSeries mul_by_monomial(const Partition& alpha, const PSeries& f);

/// (z d/dz + sum_i p_i d/dp_i - 2) f, i.e. each term times n + l - 2.
PSeries euler_shift(const PSeries& f);

/// mu^d of a monomial: its implicit u-exponent.
Rational u_weight(int d, const Partition& alpha);
/// dF~/du at u = 1: each term times its u-exponent mu^d(alpha).
PSeries du_at_one(int d, const PSeries& f);

/// Minimal d-Hurwitz generating function truncated at z-degree N.
///
/// The coefficient of p_alpha is class_size(alpha) * h / (n! * mu!), where h
/// is the transitive count at k = mu for a fixed permutation of type alpha;
/// the class size turns that into the count over all permutations of type
/// alpha. Inadmissible alpha contribute nothing. Throws std::out_of_range
/// naming (n, alpha) when `counts` lacks an entry.
PSeries build_F(int d, int N, const CountTable& counts);

}  // namespace hurwitz

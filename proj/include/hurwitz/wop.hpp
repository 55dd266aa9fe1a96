#pragma once

#include <map>
#include <optional>
#include <vector>

#include "hurwitz/kernels.hpp"
#include "hurwitz/partition.hpp"
#include "hurwitz/rational.hpp"
#include "hurwitz/series.hpp"

namespace hurwitz {

/// Element of the class algebra of S_n: class sum K_alpha -> coefficient.
using ClassVector = std::map<Partition, Rational>;

/// v * K_{1^{n-d} d}: each class alpha contributes, for every d-cycle w, one
/// unit at the type of w * s0(alpha).
ClassVector class_product_vector(int d, int n, const ClassVector& v, ExecPolicy policy = ExecPolicy::Parallel);

/// W([d]) through its action on class sums; monomials of weight < d map to 0.
PSeries apply_W_groupalg(int d, const PSeries& f, ExecPolicy policy = ExecPolicy::Parallel);

/// One summation of an explicit operator display, over ordered index tuples
/// (i_1, ..., i_r) of positive integers. Each entry is a bit mask selecting
/// the indices whose sum forms a subscript:
///   weight  the numeric factor is the product of these index sums
///   out     power sums multiplied in
///   in      power sums differentiated
struct Summation {
  std::vector<unsigned> weight;
  std::vector<unsigned> out;
  std::vector<unsigned> in;
};

struct Display {
  int arity = 0;
  Rational prefactor;
  std::vector<Summation> sums;
};

/// The cut-and-join display: two summations with prefactor 1/2.
const Display& w2_display();
/// The six-summation display of W([3]) with prefactor 1/3; the last entry is
/// the degree-2 summation over p_s d/dp_s.
const Display& w3_display();

enum class DerivativeMode {
  /// Genuine iterated derivatives: a linear operator.
  Iterated,
  /// Each higher derivative replaced by the product of first derivatives.
  FirstProducts,
};

/// prefactor * sum over tuples of weight * p_out * (derivatives of f), truncated
/// at f's truncation. Tuples with index sum beyond the truncation contribute
/// nothing and are skipped.
PSeries apply_summation(const Display& display, const Summation& sum, const PSeries& f, DerivativeMode mode);
PSeries apply_display(const Display& display, const PSeries& f, DerivativeMode mode);

PSeries apply_W2_explicit(const PSeries& f);
PSeries apply_W3_explicit(const PSeries& f);

/// W~([d]) for d in {2, 3}; throws std::invalid_argument otherwise.
PSeries apply_tildeW(int d, const PSeries& f);

/// (1/3) sum_s s C(s-1, 2) p_s dF/dp_s: the degree-2 summation of W([3]) with
/// its ordered index triples counted out.
PSeries degree2_term_W3(const PSeries& f);

/// Coefficient of p_A d_B (d_B the iterated derivative over the parts of B)
/// in a display, for every (B, A) with |B| <= max_weight.
std::map<std::pair<Partition, Partition>, Rational> explicit_coefficients(const Display& display, int max_weight);

struct LocalCoefficient {
  Rational c;
  /// d-cycles meeting every cycle of s_B whose product with s_B has type A.
  BigInt count;
  BigInt aut;
};

/// c(B, A) = N(B, A) / |Aut(B)| computed by a sweep over the d-cycles of S_|B|.
/// Zero when |A| != |B| or no d-cycle fits.
LocalCoefficient local_coefficient(int d, const Partition& B, const Partition& A);

struct OperatorTerm {
  Partition B;
  Partition A;
  Rational c;
  BigInt count;
  BigInt aut;

  int degree() const noexcept { return A.length() + B.length(); }
};

struct OperatorTermTable {
  int d = 0;
  int max_weight = 0;
  /// Sorted by (B, A); only positive coefficients.
  std::vector<OperatorTerm> terms;

  const OperatorTerm* find(const Partition& B, const Partition& A) const;
};

OperatorTermTable build_term_table(int d, int max_weight, ExecPolicy policy = ExecPolicy::Parallel);

/// W p_mu = sum over sub-multisets B of mu and table terms (B, A) of
/// N(B, A) * prod_r C(m_r(mu), m_r(B)) * p_{mu - B + A}. Throws
/// std::out_of_range if f has a monomial heavier than the table covers.
PSeries apply_reconstructed_linear(const OperatorTermTable& table, const PSeries& f);

/// H~W([d]) f: the degree d+1 terms with c(B, A) p_A prod_j dF/dp_{b_j}.
/// Requires table.max_weight >= f.truncation().
PSeries apply_tildeHW(const OperatorTermTable& table, const PSeries& f);

}  // namespace hurwitz
